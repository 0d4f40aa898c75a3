#pragma once

#include "yangian/matrix.hpp"

namespace yangian {

/// C_m(u) = sum_{s in S_m} sgn(s) t_{s(1)1}(u) t_{s(2)2}(u-1) ... t_{s(m)m}(u-m+1).
/// The constant series 1 when m = 0.
PowerSeries quantum_determinant(AlgebraPtr algebra, int order);

/// C_m(u) times sum_{s in S_n} sgn(s) t'_{m+1,m+s(1)}(u-m+1) ... t'_{m+n,m+s(n)}(u-m+n).
PowerSeries berezinian_sum(AlgebraPtr algebra, int order, Convention convention = Convention::plain);

/// d_1(u) d_2(u-1) ... d_m(u-m+1) d_{m+1}(u-m+1)^{-1} ... d_{m+n}(u-m+n)^{-1}.
PowerSeries berezinian_factored(AlgebraPtr algebra, int order);
PowerSeries berezinian_factored(const GaussFactors& factors, const Shape& shape);

/// d_1(u) d_2(u-1) ... d_m(u-m+1).
PowerSeries quantum_determinant_factored(const GaussFactors& factors, int m);

/// Calls f(permutation, sign) for every permutation of 0..k-1 in lexicographic order.
template <typename F>
void for_each_permutation(int k, F&& f);

}  // namespace yangian

#include <algorithm>
#include <numeric>
#include <vector>

namespace yangian {

template <typename F>
void for_each_permutation(int k, F&& f) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        f(perm, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace yangian
