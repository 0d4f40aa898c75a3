#pragma once

// Random small elements and series for the property suites. Every suite seeds
// its own generator so failures reproduce.

#include <random>

#include "yangian/algebra.hpp"
#include "yangian/series.hpp"

namespace yangian::testing {

inline Rational random_coefficient(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    int p = 0;
    while (p == 0) p = num(rng);
    Rational q(p, den(rng));
    q.canonicalize();
    return q;
}

inline Generator random_generator(const Shape& shape, std::mt19937& rng, int max_level) {
    std::uniform_int_distribution<int> idx(1, shape.size()), lvl(1, max_level);
    return Generator(idx(rng), idx(rng), lvl(rng));
}

/// A free word of total level <= max_degree, not reduced.
inline Word random_word(const Shape& shape, std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> len(0, max_degree);
    Word w;
    int budget = len(rng);
    while (budget > 0) {
        const Generator g = random_generator(shape, rng, budget);
        w.push_back(g);
        budget -= g.level();
    }
    return w;
}

/// Normal form of up to max_terms random words of degree <= max_degree.
inline Element random_element(const AlgebraPtr& alg, std::mt19937& rng, int max_degree = 3, int max_terms = 3) {
    std::uniform_int_distribution<int> count(1, max_terms);
    TermMap raw;
    for (int k = count(rng); k > 0; --k) accumulate(raw, random_word(alg->shape(), rng, max_degree), random_coefficient(rng));
    return alg->normal_form(raw);
}

/// Random element whose words all have the given parity.
inline Element random_homogeneous(const AlgebraPtr& alg, std::mt19937& rng, int parity, int max_degree = 2,
                                  int max_terms = 3) {
    std::uniform_int_distribution<int> count(1, max_terms);
    TermMap raw;
    int wanted = count(rng);
    while (wanted > 0) {
        const Word w = random_word(alg->shape(), rng, max_degree);
        if (alg->parity(w) != parity) continue;
        accumulate(raw, w, random_coefficient(rng));
        --wanted;
    }
    return alg->normal_form(raw);
}

/// Series with c_0 a nonzero scalar and c_k of degree <= k.
inline PowerSeries random_series(const AlgebraPtr& alg, std::mt19937& rng, int order, bool unit_constant = true) {
    PowerSeries s(alg, order);
    s.set(0, alg->scalar(unit_constant ? Rational(1) : random_coefficient(rng)));
    for (int k = 1; k <= order; ++k) s.set(k, random_element(alg, rng, k, 2));
    return s;
}

}  // namespace yangian::testing
