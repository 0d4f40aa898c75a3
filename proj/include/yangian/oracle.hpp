#pragma once

// Numeric cross-checks that do not go through the rewriting engine: an
// evaluation representation t_ij(u) -> delta_ij + s_ij E_ij u^{-1} over exact
// rational matrices, the tensor form of the RTT relation in that
// representation, and a free-word extraction of the coefficient relations.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangian/series.hpp"

namespace yangian {

/// Dense rational matrix.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols);
    static QMatrix identity(int size);
    /// Elementary matrix E_ij (1-based) of the given size.
    static QMatrix unit(int size, int i, int j);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    bool is_zero() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& c);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    std::string str() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// sum_k c_k u^{-k} with square rational matrix coefficients; the numeric
/// mirror of PowerSeries under an evaluation representation.
class MatrixSeries {
  public:
    MatrixSeries() = default;
    MatrixSeries(int size, int order);
    static MatrixSeries constant(int size, int order, const Rational& c);

    int size() const { return size_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const QMatrix& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    QMatrix& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    MatrixSeries& operator+=(const MatrixSeries& o);
    MatrixSeries& operator-=(const MatrixSeries& o);
    MatrixSeries& operator*=(const Rational& c);
    friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
    friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
    friend MatrixSeries operator*(MatrixSeries a, const Rational& c) { return a *= c; }
    friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
    friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) = default;

    /// Requires an invertible constant term.
    MatrixSeries inverse() const;
    /// s(u - c).
    MatrixSeries shifted(const Rational& c) const;

  private:
    int size_ = 0;
    std::vector<QMatrix> coeffs_;
};

/// Gauss-Jordan; throws OracleFailure when singular.
QMatrix inverse(const QMatrix& M);

/// Sparse rational matrix keyed by (row, col), 0-based.
class SparseMatrix {
  public:
    explicit SparseMatrix(int dim = 0) : dim_(dim) {}
    static SparseMatrix identity(int dim);

    int dim() const { return dim_; }
    void add(int r, int c, const Rational& v);
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    SparseMatrix& operator+=(const SparseMatrix& o);
    SparseMatrix& operator-=(const SparseMatrix& o);
    SparseMatrix& operator*=(const Rational& c);
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

  private:
    int dim_;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// Matrix-valued polynomial in u, v: monomial (a, b) = u^a v^b.
class PolyMatrix {
  public:
    explicit PolyMatrix(int dim = 0) : dim_(dim) {}
    int dim() const { return dim_; }
    void add(int a, int b, const SparseMatrix& m);
    const std::map<std::pair<int, int>, SparseMatrix>& terms() const { return terms_; }
    /// Highest total degree present, -1 for zero.
    int total_degree() const;

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);

  private:
    int dim_;
    std::map<std::pair<int, int>, SparseMatrix> terms_;
};

/// t_ij^(1) -> signs[i][j] * E_ij, t_ij^(r) -> 0 for r >= 2.
struct EvalRep {
    Shape shape;
    std::string family;
    std::vector<std::vector<int>> signs;  // 0-based

    QMatrix image(Generator g) const;
};

class OracleFailure : public Error {
  public:
    using Error::Error;
};

/// Named sign families s_ij(parity i, parity j) tried by find_eval_rep, in search order.
std::vector<std::pair<std::string, std::vector<std::vector<int>>>> candidate_sign_families(const Shape& shape);

/// Generator pairs (r + s <= max_level_sum) whose relation fails under the rep.
std::vector<std::pair<Generator, Generator>> eval_rep_violations(const AlgebraPtr& algebra, const EvalRep& rep,
                                                                 int max_level_sum = 3);

/// First candidate family satisfying every coefficient relation with r + s <= 3.
/// Requires m + n <= 4; throws OracleFailure when no family works.
EvalRep find_eval_rep(const Shape& shape);

QMatrix evaluate(const Element& x, const EvalRep& rep);
MatrixSeries evaluate(const PowerSeries& s, const EvalRep& rep);

/// How an elementary tensor a (x) b (x) c acts on V (x) C^{m|n} (x) C^{m|n}.
///   ordinary: Kronecker product
///   koszul:   (a(x)b(x)c)(x(x)y(x)z) = (-1)^{|b||x| + |c|(|x|+|y|)} ax (x) by (x) cz
enum class TensorEmbedding { ordinary, koszul };
std::string to_string(TensorEmbedding e);

struct RttWitness {
    int u_power = 0;
    int v_power = 0;
    int row = 0;
    int col = 0;
    std::string difference;
};

struct RttResult {
    bool pass = false;
    TensorEmbedding embedding = TensorEmbedding::koszul;
    std::vector<RttWitness> witnesses;
};

/// (u-v)uv R(u-v) T1(u) T2(v) = (u-v)uv T2(v) T1(u) R(u-v) in the representation,
/// with T(u) = sum t_ij(u) (x) E_ij (-1)^{j(i+1)} and P = sum E_ij (x) E_ji (-1)^{j}.
RttResult rtt_tensor_check(const EvalRep& rep, TensorEmbedding embedding);

/// Tries the ordinary embedding first, then koszul; returns the first pass (or the last failure).
RttResult rtt_tensor_search(const EvalRep& rep);

/// P_23 on V (x) C (x) C and the cleared R-matrix (u-v) - P_23.
SparseMatrix permutation_operator(const Shape& shape, TensorEmbedding embedding);
PolyMatrix cleared_r_matrix(const Shape& shape, TensorEmbedding embedding, bool swap_arguments = false);

/// [t_ij^(r), t_kl^(s)] as free words, solved from
/// (u-v)[t_ij(u), t_kl(v)] = sign (t_kj(u) t_il(v) - t_kj(v) t_il(u))
/// by recursion along fixed total level, without the closed form.
TermMap coeff_extraction_oracle(const Shape& shape, int i, int j, int k, int l, int r, int s);

}  // namespace yangian
