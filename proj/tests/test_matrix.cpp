#include "doctest.h"
#include "support.hpp"
#include "yangian/berezinian.hpp"
#include "yangian/matrix.hpp"

using namespace yangian;

namespace {

SuperMatrix random_scalar_matrix(const AlgebraPtr& alg, int size, int order, std::mt19937& rng) {
    std::uniform_int_distribution<int> val(-4, 4);
    SuperMatrix M(alg, size, order);
    for (int r = 1; r <= size; ++r)
        for (int c = 1; c <= size; ++c) {
            PowerSeries s(alg, order);
            for (int k = 0; k <= order; ++k) s.set(k, alg->scalar(val(rng)));
            // keep the constant matrix invertible: identity plus noise below order 0
            s.set(0, alg->scalar(r == c ? 1 : 0));
            M.set(r, c, s);
        }
    return M;
}

/// Determinant by permutation expansion; the entries must commute.
PowerSeries det(const SuperMatrix& M) {
    PowerSeries total(M.algebra_ptr(), M.order());
    for_each_permutation(M.size(), [&](const std::vector<int>& perm, int sign) {
        PowerSeries term = PowerSeries::constant(M.algebra_ptr(), M.order(), sign);
        for (int r = 1; r <= M.size(); ++r) term = term * M(r, perm[static_cast<std::size_t>(r - 1)] + 1);
        total += term;
    });
    return total;
}

std::vector<int> without(int size, int skip) {
    std::vector<int> out;
    for (int k = 1; k <= size; ++k)
        if (k != skip) out.push_back(k);
    return out;
}

}  // namespace

TEST_CASE("identity matrix inverts to itself") {
    const auto alg = Algebra::create(Shape(2, 1));
    const SuperMatrix I = SuperMatrix::identity(alg, 3, 3);
    CHECK(I.inverse() == I);
}

TEST_CASE("1x1 inverse is the series inverse") {
    const auto alg = Algebra::create(Shape(1, 1));
    SuperMatrix M(alg, 1, 3);
    M.set(1, 1, PowerSeries::t(alg, 1, 1, 3));
    CHECK(M.inverse()(1, 1) == PowerSeries::t(alg, 1, 1, 3).inverse());
    CHECK(quasideterminant(M, 1, 1) == PowerSeries::t(alg, 1, 1, 3));
}

TEST_CASE("inverse of T is two-sided") {
    const auto alg = Algebra::create(Shape(1, 1));
    for (const Convention c : {Convention::plain, Convention::twisted}) {
        const SuperMatrix T = SuperMatrix::build_T(alg, 3, c);
        const SuperMatrix I = SuperMatrix::identity(alg, 2, 3);
        CHECK(T * T.inverse() == I);
        CHECK(T.inverse() * T == I);
    }
}

TEST_CASE("quasideterminant and inverse entry are mutually inverse") {
    const auto alg = Algebra::create(Shape(2, 1));
    const SuperMatrix T = SuperMatrix::build_T(alg, 2, Convention::plain);
    const SuperMatrix Ti = T.inverse();
    for (int i = 1; i <= 3; ++i) {
        const PowerSeries q = quasideterminant(T, i, i);
        CHECK(q * Ti(i, i) == PowerSeries::constant(alg, 2, 1));
        CHECK(q == quasideterminant_by_inverse(T, i, i));
    }
}

TEST_CASE("commutative specialization recovers determinant ratios") {
    const auto alg = Algebra::create(Shape(1, 1));
    std::mt19937 rng(314);
    for (int size : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const SuperMatrix M = random_scalar_matrix(alg, size, 3, rng);
            for (int i = 1; i <= size; ++i)
                for (int j = 1; j <= size; ++j) {
                    const PowerSeries minor = det(M.submatrix(without(size, i), without(size, j)));
                    if (i != j) continue;  // off-diagonal minors start at 0 and are not invertible
                    const Rational sign = (i + j) % 2 ? -1 : 1;
                    CHECK(quasideterminant(M, i, j) * minor == det(M) * sign);
                }
        }
    }
}

TEST_CASE("off-diagonal quasideterminant needs an invertible minor") {
    const auto alg = Algebra::create(Shape(1, 1));
    const SuperMatrix T = SuperMatrix::build_T(alg, 2, Convention::plain);
    CHECK_THROWS(quasideterminant(T, 1, 2));
}

TEST_CASE("Gauss factors multiply back to T under the plain layout") {
    for (const Shape shape : {Shape(1, 1), Shape(2, 1), Shape(1, 2)}) {
        const auto alg = Algebra::create(shape);
        const GaussFactors g = gauss(alg, 3);
        CHECK(g.F * g.D * g.E == SuperMatrix::build_T(alg, 3, Convention::plain));
        CHECK(!(g.F * g.D * g.E == SuperMatrix::build_T(alg, 3, Convention::twisted)));
    }
}

TEST_CASE("Gauss factors in (1|1)") {
    const auto alg = Algebra::create(Shape(1, 1));
    const GaussFactors g = gauss(alg, 2);
    CHECK(g.d(1) == PowerSeries::t(alg, 1, 1, 2));
    CHECK(g.e(1) == PowerSeries::t(alg, 1, 1, 2).inverse() * PowerSeries::t(alg, 1, 2, 2));
    CHECK(g.f(1) == PowerSeries::t(alg, 2, 1, 2) * PowerSeries::t(alg, 1, 1, 2).inverse());
    CHECK(defe_series(alg, 2, GaussSeries::d, 2) == g.d(2));
    CHECK(defe_series(alg, 2, GaussSeries::e, 1) == g.e(1));
}

TEST_CASE("diagonal Gauss coefficients commute") {
    const auto alg = Algebra::create(Shape(2, 1));
    const GaussFactors g = gauss(alg, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; p + q <= 4; ++q)
                    CHECK(alg->supercommutator(g.d(i)[p], g.d(j)[q]).is_zero());
}

TEST_CASE("t' entries invert T") {
    const auto alg = Algebra::create(Shape(1, 1));
    const SuperMatrix tp = t_prime(alg, 3, Convention::plain);
    CHECK(tp == SuperMatrix::build_T(alg, 3, Convention::plain).inverse());
    CHECK(tp(1, 1)[1] == -alg->t(1, 1, 1));
}

TEST_CASE("convention names round-trip") {
    CHECK(parse_convention("plain") == Convention::plain);
    CHECK(parse_convention(to_string(Convention::twisted)) == Convention::twisted);
    CHECK_THROWS(parse_convention("sideways"));
    CHECK(twist_sign(Shape(1, 1), 1, 2) == -1);
    CHECK(twist_sign(Shape(1, 1), 2, 2) == 1);
}
