#include "doctest.h"
#include "support.hpp"

using namespace yangian;
using yangian::testing::random_series;

TEST_CASE("generator series") {
    const auto alg = Algebra::create(Shape(1, 1));
    const PowerSeries t12 = PowerSeries::t(alg, 1, 2, 2);
    CHECK(t12[0].is_zero());
    CHECK(t12[1] == alg->t(1, 2, 1));
    CHECK(t12[2] == alg->t(1, 2, 2));
    const PowerSeries t11 = PowerSeries::t(alg, 1, 1, 1);
    CHECK(t11[0] == alg->one());
    CHECK(t11.str() == "u^-0: 1\nu^-1: t[1,1,1]\n");
}

TEST_CASE("shift expands binomially") {
    const auto alg = Algebra::create(Shape(1, 1));
    const PowerSeries s = PowerSeries::t(alg, 1, 1, 2).shifted(1);
    // t(u - 1): u^{-1}(1 - 1/u)^{-1} = u^{-1} + u^{-2} + ...
    CHECK(s[1] == alg->t(1, 1, 1));
    CHECK(s[2] == alg->t(1, 1, 2) + alg->t(1, 1, 1));
    CHECK(s.shifted(-1) == PowerSeries::t(alg, 1, 1, 2));
}

TEST_CASE("negated argument flips odd powers") {
    const auto alg = Algebra::create(Shape(1, 1));
    const PowerSeries s = PowerSeries::t(alg, 2, 2, 3).negated_argument();
    CHECK(s[1] == -alg->t(2, 2, 1));
    CHECK(s[2] == alg->t(2, 2, 2));
    CHECK(s[3] == -alg->t(2, 2, 3));
}

TEST_CASE("inverse of a series without a scalar constant term fails") {
    const auto alg = Algebra::create(Shape(1, 1));
    CHECK_THROWS_AS(PowerSeries::t(alg, 1, 2, 2).inverse(), NotInvertible);
}

TEST_CASE("truncation coherence, inversion and shifts on random series") {
    for (const Shape shape : {Shape(1, 1), Shape(2, 1)}) {
        const auto alg = Algebra::create(shape);
        std::mt19937 rng(900 + shape.m);
        for (int k = 0; k < 25; ++k) {
            const PowerSeries a = random_series(alg, rng, 3), b = random_series(alg, rng, 3);
            Rational c(k % 5 - 2, 1 + k % 3);
            c.canonicalize();
            for (int cut = 0; cut < 3; ++cut) {
                CHECK((a * b).truncated(cut) == a.truncated(cut) * b.truncated(cut));
                CHECK(a.inverse().truncated(cut) == a.truncated(cut).inverse());
                CHECK(a.shifted(c).truncated(cut) == a.truncated(cut).shifted(c));
            }
            CHECK(a.inverse().inverse() == a);
            CHECK(a * a.inverse() == PowerSeries::constant(alg, 3, 1));
            CHECK(a.inverse() * a == PowerSeries::constant(alg, 3, 1));
            CHECK((a * b).shifted(c) == a.shifted(c) * b.shifted(c));
            CHECK(!(a * b).filtration_violation());
            CHECK(!a.inverse().filtration_violation());
            CHECK(!a.shifted(c).filtration_violation());
        }
    }
}

TEST_CASE("bi-series: (u - v) u^-1 v^-1 = v^-1 - u^-1") {
    const auto alg = Algebra::create(Shape(1, 1));
    BiSeries x(alg, 3, 3);
    x.set(1, 1, alg->one());
    BiSeries rhs(alg, 2, 2);
    rhs.set(0, 1, alg->one());
    rhs.set(1, 0, -alg->one());
    CHECK(!bi_check(x.times_u_minus_v(), rhs));
    CHECK(bi_differences(x.times_u_minus_v(), rhs).empty());
    CHECK(!bi_check(x, x));
}

TEST_CASE("bi-series difference reports the first mismatch") {
    const auto alg = Algebra::create(Shape(1, 1));
    BiSeries a(alg, 2, 2), b(alg, 2, 2);
    a.set(1, 2, alg->t(1, 1, 1));
    const auto w = bi_check(a, b);
    REQUIRE(w);
    CHECK(w->p == 1);
    CHECK(w->q == 2);
    CHECK(w->residual == alg->t(1, 1, 1));
}

TEST_CASE("bracket of series is coefficientwise") {
    const auto alg = Algebra::create(Shape(1, 1));
    const PowerSeries a = PowerSeries::t(alg, 1, 2, 2), b = PowerSeries::t(alg, 2, 1, 2);
    const BiSeries br = BiSeries::bracket(a, b);
    CHECK(br.at(1, 1) == alg->supercommutator(alg->t(1, 2, 1), alg->t(2, 1, 1)));
    CHECK(br.at(2, 1) == alg->supercommutator(alg->t(1, 2, 2), alg->t(2, 1, 1)));
    CHECK(BiSeries::product(a, b).at(1, 2) == alg->t(1, 2, 1) * alg->t(2, 1, 2));
}
