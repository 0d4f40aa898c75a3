#include "yangian/berezinian.hpp"

namespace yangian {

PowerSeries quantum_determinant(AlgebraPtr algebra, int order) {
    const int m = algebra->shape().m;
    PowerSeries out(algebra, order);
    if (m == 0) return PowerSeries::constant(algebra, order, 1);
    std::vector<std::vector<PowerSeries>> shifted(static_cast<std::size_t>(m));
    for (int a = 1; a <= m; ++a)
        for (int col = 1; col <= m; ++col) shifted[static_cast<std::size_t>(a - 1)].push_back(
            PowerSeries::t(algebra, a, col, order).shifted(col - 1));
    for_each_permutation(m, [&](const std::vector<int>& perm, int sign) {
        PowerSeries term = shifted[static_cast<std::size_t>(perm[0])][0];
        for (int col = 2; col <= m; ++col)
            term = term * shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(col - 1)])][static_cast<std::size_t>(col - 1)];
        out += term * Rational(sign);
    });
    return out;
}

PowerSeries berezinian_sum(AlgebraPtr algebra, int order, Convention convention) {
    const Shape shape = algebra->shape();
    const int m = shape.m, n = shape.n;
    PowerSeries out = quantum_determinant(algebra, order);
    if (n == 0) return out;
    const SuperMatrix tp = t_prime(algebra, order, convention);
    PowerSeries odd_part(algebra, order);
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        PowerSeries term = PowerSeries::constant(algebra, order, sign);
        for (int s = 1; s <= n; ++s) {
            const int col = m + 1 + perm[static_cast<std::size_t>(s - 1)];
            term = term * tp(m + s, col).shifted(m - s);
        }
        odd_part += term;
    });
    return out * odd_part;
}

PowerSeries quantum_determinant_factored(const GaussFactors& factors, int m) {
    const int order = factors.D.order();
    PowerSeries out = PowerSeries::constant(factors.D.algebra_ptr(), order, 1);
    for (int i = 1; i <= m; ++i) out = out * factors.d(i).shifted(i - 1);
    return out;
}

PowerSeries berezinian_factored(const GaussFactors& factors, const Shape& shape) {
    PowerSeries out = quantum_determinant_factored(factors, shape.m);
    for (int s = 1; s <= shape.n; ++s) out = out * factors.d(shape.m + s).shifted(shape.m - s).inverse();
    return out;
}

PowerSeries berezinian_factored(AlgebraPtr algebra, int order) {
    return berezinian_factored(gauss(algebra, order), algebra->shape());
}

}  // namespace yangian
