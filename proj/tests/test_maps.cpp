#include "doctest.h"
#include "support.hpp"
#include "yangian/maps.hpp"

using namespace yangian;
using yangian::testing::random_homogeneous;

namespace {

/// Both sides of every coefficient relation with r + s <= level_sum, mapped.
int relation_failures(const GeneratorImageTable& map, int level_sum) {
    const AlgebraPtr& src = map.source();
    const auto gens = generators_up_to(src->shape(), level_sum - 1);
    int failures = 0;
    for (const Generator a : gens)
        for (const Generator b : gens) {
            if (a.level() + b.level() > level_sum) continue;
            const Element lhs = map.target()->supercommutator(map.apply(src->generator(a)), map.apply(src->generator(b)));
            Element rhs = map.apply(src->coeff_relation(a, b));
            if (map.kind() == MapKind::anti_homomorphism) {
                // tau([a, b]) = (-1)^{ab} [tau b, tau a] = -[tau a, tau b]
                rhs = -rhs;
            }
            if (!(lhs == rhs)) ++failures;
        }
    return failures;
}

}  // namespace

TEST_CASE("omega on level one and twice") {
    const auto alg = Algebra::create(Shape(1, 1));
    const GeneratorImageTable w = omega_table(alg, 3);
    for (const Generator g : generators_up_to(alg->shape(), 1)) CHECK(w.image(g) == alg->generator(g));
    CHECK(w.then(w).differences(GeneratorImageTable::identity(alg, 3)).empty());
    CHECK(w.apply(alg->one()) == alg->one());
}

TEST_CASE("tau signs and order") {
    const auto alg = Algebra::create(Shape(1, 1));
    CHECK(tau_apply(alg->t(1, 1, 2)) == alg->t(1, 1, 2));
    CHECK(tau_apply(alg->t(1, 2, 1)) == alg->t(2, 1, 1));
    CHECK(tau_apply(alg->t(2, 1, 1)) == -alg->t(1, 2, 1));
    const GeneratorImageTable tau = tau_table(alg, 3);
    const GeneratorImageTable tau2 = tau.then(tau);
    // tau^2 is the parity automorphism t_ij -> (-1)^{i+j} t_ij, so tau has order four
    for (const Generator g : generators_up_to(alg->shape(), 3)) {
        const int sign = (alg->shape().parity(g.i()) + alg->shape().parity(g.j())) % 2 ? -1 : 1;
        CHECK(tau2.image(g) == alg->generator(g) * Rational(sign));
    }
    CHECK(tau2.then(tau2).differences(GeneratorImageTable::identity(alg, 3)).empty());
}

TEST_CASE("tau of a series of e is the series of f") {
    const auto alg = Algebra::create(Shape(2, 1));
    const GaussFactors g = gauss(alg, 3);
    const GeneratorImageTable tau = tau_table(alg, 3);
    for (int i = 1; i <= 2; ++i) CHECK(tau.apply(g.e(i)) == g.f(i));
}

TEST_CASE("rho and phi on single generators") {
    const auto a = Algebra::create(Shape(1, 1));
    const auto rho = rho_table(a, a, 2);
    CHECK(rho.image(Generator(1, 1, 1)) == -a->t(2, 2, 1));
    CHECK(rho.image(Generator(1, 2, 2)) == a->t(2, 1, 2));
    CHECK(rho.then(rho).differences(GeneratorImageTable::identity(a, 2)).empty());

    const auto b = Algebra::create(Shape(2, 1));
    CHECK(phi_apply(a->t(1, 1, 1), b, 1) == b->t(2, 2, 1));
    CHECK(phi_apply(a->t(1, 2, 1), b, 1).parity() == 1);
    const auto same = phi_table(a, a, 0, 2);
    CHECK(same.differences(GeneratorImageTable::identity(a, 2)).empty());
}

TEST_CASE("maps preserve the defining relations") {
    for (const Shape shape : {Shape(1, 1), Shape(2, 1)}) {
        const auto alg = Algebra::create(shape);
        const auto opposite = Algebra::create(Shape(shape.n, shape.m));
        const auto bigger = Algebra::create(Shape(shape.m + 1, shape.n));
        CHECK(relation_failures(omega_table(alg, 3), 3) == 0);
        CHECK(relation_failures(tau_table(alg, 3), 3) == 0);
        CHECK(relation_failures(rho_table(alg, opposite, 3), 3) == 0);
        CHECK(relation_failures(phi_table(alg, bigger, 1, 3), 3) == 0);
        CHECK(relation_failures(psi_table(alg, bigger, 1, 3), 3) == 0);
    }
}

TEST_CASE("plain reversal for tau breaks the relations") {
    const auto alg = Algebra::create(Shape(1, 1));
    CHECK(relation_failures(tau_table(alg, 4, ReversalSign::plain), 4) > 0);
}

TEST_CASE("images are multiplicative on random homogeneous elements") {
    const auto alg = Algebra::create(Shape(2, 1));
    const auto bigger = Algebra::create(Shape(3, 1));
    const GeneratorImageTable w = omega_table(alg, 4), tau = tau_table(alg, 4), psi = psi_table(alg, bigger, 1, 4);
    std::mt19937 rng(8);
    for (int k = 0; k < 30; ++k) {
        const int pa = k % 2, pb = (k / 2) % 2;
        const Element a = random_homogeneous(alg, rng, pa, 2, 2), b = random_homogeneous(alg, rng, pb, 2, 2);
        CHECK(w.apply(a * b) == w.apply(a) * w.apply(b));
        CHECK(psi.apply(a * b) == psi.apply(a) * psi.apply(b));
        CHECK(tau.apply(a * b) == tau.apply(b) * tau.apply(a) * Rational(pa * pb ? -1 : 1));
    }
}

TEST_CASE("psi shifts the Gauss factors and composes additively") {
    const auto a = Algebra::create(Shape(1, 1));
    const auto b = Algebra::create(Shape(2, 1));
    const auto c = Algebra::create(Shape(3, 1));
    const GeneratorImageTable psi = psi_table(a, b, 1, 3);
    const GaussFactors ga = gauss(a, 3), gb = gauss(b, 3);
    CHECK(psi.apply(ga.d(1)) == gb.d(2));
    CHECK(psi.apply(ga.e(1)) == gb.e(2));
    CHECK(psi.apply(ga.f(1)) == gb.f(2));
    const GeneratorImageTable two = psi.then(psi_table(b, c, 1, 3));
    CHECK(two.differences(psi_table(a, c, 2, 3)).empty());
}

TEST_CASE("degree bound is enforced") {
    const auto alg = Algebra::create(Shape(1, 1));
    const GeneratorImageTable w = omega_table(alg, 2);
    CHECK_THROWS_AS(w.apply(alg->t(1, 1, 3)), DegreeBoundExceeded);
}
