#include "doctest.h"
#include "yangian/oracle.hpp"

using namespace yangian;

namespace {

SparseMatrix scalar(int dim, const Rational& c) {
    SparseMatrix out = SparseMatrix::identity(dim);
    out *= c;
    return out;
}

}  // namespace

TEST_CASE("rational matrix inverse") {
    QMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    CHECK(m * inverse(m) == QMatrix::identity(2));
    CHECK_THROWS_AS(inverse(QMatrix(2, 2)), OracleFailure);
}

TEST_CASE("matrix series inverse and shift") {
    MatrixSeries s = MatrixSeries::constant(2, 3, 1);
    s[1] = QMatrix::unit(2, 1, 2);
    s[2] = QMatrix::unit(2, 2, 2) * Rational(3);
    CHECK(s * s.inverse() == MatrixSeries::constant(2, 3, 1));
    CHECK(s.shifted(2).shifted(-2) == s);
}

TEST_CASE("evaluation representation") {
    const EvalRep rep = find_eval_rep(Shape(1, 1));
    const auto alg = Algebra::create(Shape(1, 1));
    CHECK(evaluate(alg->one(), rep) == QMatrix::identity(2));
    CHECK(evaluate(alg->t(1, 2, 1) * alg->t(1, 2, 1), rep).is_zero());
    CHECK(evaluate(alg->t(1, 1, 2), rep).is_zero());
    CHECK(eval_rep_violations(alg, rep, 4).empty());
}

TEST_CASE("evaluation of the first Berezinian coefficient commutes with every generator") {
    const Shape shape(2, 1);
    const EvalRep rep = find_eval_rep(shape);
    const auto alg = Algebra::create(shape);
    const QMatrix b1 = evaluate(alg->t(1, 1, 1) + alg->t(2, 2, 1) - alg->t(3, 3, 1), rep);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const QMatrix g = rep.image(Generator(i, j, 1));
            CHECK(b1 * g == g * b1);
        }
}

TEST_CASE("representations exist for every small shape") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            if (m + n == 0) continue;
            CAPTURE(m);
            CAPTURE(n);
            const EvalRep rep = find_eval_rep(Shape(m, n));
            CHECK(eval_rep_violations(Algebra::create(Shape(m, n)), rep).empty());
        }
    CHECK_THROWS_AS(find_eval_rep(Shape(3, 2)), OracleFailure);
}

TEST_CASE("tensor RTT in the evaluation representation") {
    CHECK(rtt_tensor_check(find_eval_rep(Shape(2, 0)), TensorEmbedding::ordinary).pass);
    const EvalRep rep = find_eval_rep(Shape(1, 1));
    const RttResult r = rtt_tensor_search(rep);
    CHECK(r.pass);
    CHECK(r.embedding == TensorEmbedding::koszul);
    CHECK(!rtt_tensor_check(rep, TensorEmbedding::ordinary).pass);
}

TEST_CASE("permutation operator squares to one under the signed embedding") {
    const Shape shape(1, 2);
    const SparseMatrix P = permutation_operator(shape, TensorEmbedding::koszul);
    CHECK(P * P == SparseMatrix::identity(P.dim()));
    const SparseMatrix Q = permutation_operator(shape, TensorEmbedding::ordinary);
    CHECK(!(Q * Q == SparseMatrix::identity(Q.dim())));
}

TEST_CASE("R-matrix unitarity and leading term") {
    const Shape shape(1, 1);
    const PolyMatrix R = cleared_r_matrix(shape, TensorEmbedding::koszul);
    const PolyMatrix Rs = cleared_r_matrix(shape, TensorEmbedding::koszul, true);
    const PolyMatrix prod = R * Rs;
    // ((u-v) - P)((v-u) - P) = 1 - (u-v)^2
    for (const auto& [mono, coeff] : prod.terms()) {
        REQUIRE(!coeff.entries().empty());
        const Rational diag = coeff.entries().begin()->second;
        CHECK(coeff == scalar(coeff.dim(), diag));
    }
    CHECK(R.total_degree() == 1);
    const SparseMatrix lead_u = R.terms().at({1, 0});
    CHECK(lead_u == SparseMatrix::identity(R.dim()));
}

TEST_CASE("free-word extraction on small cases") {
    CHECK(coeff_extraction_oracle(Shape(1, 1), 1, 1, 1, 1, 1, 1).empty());
    const auto alg = Algebra::create(Shape(1, 1));
    CHECK(alg->normal_form(coeff_extraction_oracle(Shape(1, 1), 1, 2, 2, 1, 1, 1)) ==
          alg->t(2, 2, 1) - alg->t(1, 1, 1));
    CHECK(alg->normal_form(coeff_extraction_oracle(Shape(1, 1), 1, 2, 1, 2, 1, 1)).is_zero());
}
