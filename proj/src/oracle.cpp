#include "yangian/oracle.hpp"

#include "yangian/matrix.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace yangian {

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

QMatrix QMatrix::identity(int size) {
    QMatrix out(size, size);
    for (int a = 0; a < size; ++a) out(a, a) = 1;
    return out;
}

QMatrix QMatrix::unit(int size, int i, int j) {
    QMatrix out(size, size);
    out(i - 1, j - 1) = 1;
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sizes differ");
    for (std::size_t a = 0; a < data_.size(); ++a) data_[a] += o.data_[a];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sizes differ");
    for (std::size_t a = 0; a < data_.size(); ++a) data_[a] -= o.data_[a];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix sizes differ");
    QMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            if (a(r, k) == 0) continue;
            for (int c = 0; c < b.cols_; ++c)
                if (b(k, c) != 0) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << '[';
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << to_string((*this)(r, c));
        os << "]\n";
    }
    return os.str();
}

QMatrix inverse(const QMatrix& M) {
    const int k = M.rows();
    if (M.cols() != k) throw ShapeMismatch("inverse of a non-square matrix");
    QMatrix a = M, out = QMatrix::identity(k);
    for (int c = 0; c < k; ++c) {
        int pivot = c;
        while (pivot < k && a(pivot, c) == 0) ++pivot;
        if (pivot == k) throw OracleFailure("singular matrix");
        for (int x = 0; x < k; ++x) {
            std::swap(a(c, x), a(pivot, x));
            std::swap(out(c, x), out(pivot, x));
        }
        const Rational inv = 1 / a(c, c);
        for (int x = 0; x < k; ++x) {
            a(c, x) *= inv;
            out(c, x) *= inv;
        }
        for (int r = 0; r < k; ++r) {
            if (r == c || a(r, c) == 0) continue;
            const Rational f = a(r, c);
            for (int x = 0; x < k; ++x) {
                a(r, x) -= f * a(c, x);
                out(r, x) -= f * out(c, x);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- MatrixSeries

MatrixSeries::MatrixSeries(int size, int order)
    : size_(size), coeffs_(static_cast<std::size_t>(order + 1), QMatrix(size, size)) {}

MatrixSeries MatrixSeries::constant(int size, int order, const Rational& c) {
    MatrixSeries out(size, order);
    out[0] = QMatrix::identity(size) * c;
    return out;
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& o) {
    if (order() != o.order()) throw ShapeMismatch("series orders differ");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& o) {
    if (order() != o.order()) throw ShapeMismatch("series orders differ");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

MatrixSeries& MatrixSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
    if (a.order() != b.order()) throw ShapeMismatch("series orders differ");
    MatrixSeries out(a.size_, a.order());
    for (int p = 0; p <= a.order(); ++p)
        for (int q = 0; p + q <= a.order(); ++q) out[p + q] += a[p] * b[q];
    return out;
}

MatrixSeries MatrixSeries::inverse() const {
    const QMatrix c0inv = yangian::inverse(coeffs_[0]);
    MatrixSeries out(size_, order());
    out[0] = c0inv;
    for (int k = 1; k <= order(); ++k) {
        QMatrix acc(size_, size_);
        for (int a = 1; a <= k; ++a) acc += coeffs_[static_cast<std::size_t>(a)] * out[k - a];
        out[k] = (c0inv * acc) * Rational(-1);
    }
    return out;
}

MatrixSeries MatrixSeries::shifted(const Rational& c) const {
    // (u - c)^{-k} = sum_j binom(k + j - 1, j) c^j u^{-k-j}
    MatrixSeries out(size_, order());
    out[0] = coeffs_[0];
    for (int k = 1; k <= order(); ++k)
        for (int j = 0; k + j <= order(); ++j)
            out[k + j] += coeffs_[static_cast<std::size_t>(k)] * (Rational(binomial(k + j - 1, j)) * power(c, j));
    return out;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(int dim) {
    SparseMatrix out(dim);
    for (int a = 0; a < dim; ++a) out.add(a, a, 1);
    return out;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (inserted) return;
    it->second += v;
    if (it->second == 0) entries_.erase(it);
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
    for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, v);
    return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
    for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, -v);
    return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& c) {
    if (c == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [rc, v] : entries_) v *= c;
    return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    std::map<int, std::vector<std::pair<int, Rational>>> rows_of_b;
    for (const auto& [rc, v] : b.entries_) rows_of_b[rc.first].emplace_back(rc.second, v);
    SparseMatrix out(a.dim_);
    for (const auto& [rc, v] : a.entries_) {
        auto it = rows_of_b.find(rc.second);
        if (it == rows_of_b.end()) continue;
        for (const auto& [col, w] : it->second) out.add(rc.first, col, v * w);
    }
    return out;
}

// ---------------------------------------------------------------- PolyMatrix

void PolyMatrix::add(int a, int b, const SparseMatrix& m) {
    if (m.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, m);
    if (inserted) return;
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
}

int PolyMatrix::total_degree() const {
    int out = -1;
    for (const auto& [ab, _] : terms_) out = std::max(out, ab.first + ab.second);
    return out;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix out(x.dim_);
    for (const auto& [ab, m] : x.terms_)
        for (const auto& [cd, w] : y.terms_) out.add(ab.first + cd.first, ab.second + cd.second, m * w);
    return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix out = x;
    for (const auto& [ab, m] : y.terms_) {
        SparseMatrix neg = m;
        neg *= -1;
        out.add(ab.first, ab.second, neg);
    }
    return out;
}

// ---------------------------------------------------------------- evaluation module

QMatrix EvalRep::image(Generator g) const {
    const int d = shape.size();
    QMatrix out(d, d);
    if (g.level() == 1) out(g.i() - 1, g.j() - 1) = signs[static_cast<std::size_t>(g.i() - 1)][static_cast<std::size_t>(g.j() - 1)];
    return out;
}

std::vector<std::pair<std::string, std::vector<std::vector<int>>>> candidate_sign_families(const Shape& shape) {
    // exponents as functions of (parity i, parity j)
    struct Base {
        const char* name;
        int (*exponent)(int, int);
    };
    static const Base bases[] = {
        {"(-1)^i", [](int pi, int) { return pi; }},
        {"(-1)^j", [](int, int pj) { return pj; }},
        {"(-1)^{ij}", [](int pi, int pj) { return pi * pj; }},
        {"(-1)^{i(j+1)}", [](int pi, int pj) { return pi * (pj + 1); }},
    };
    const int d = shape.size();
    std::vector<unsigned> subsets;
    for (unsigned s = 0; s < 16; ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

    std::vector<std::pair<std::string, std::vector<std::vector<int>>>> out;
    std::set<std::vector<std::vector<int>>> seen;
    for (unsigned s : subsets) {
        std::string name;
        std::vector<std::vector<int>> signs(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d)));
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                int e = 0;
                for (int b = 0; b < 4; ++b)
                    if (s & (1u << b)) e += bases[b].exponent(shape.parity(i), shape.parity(j));
                signs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = e & 1 ? -1 : 1;
            }
        for (int b = 0; b < 4; ++b)
            if (s & (1u << b)) name += (name.empty() ? "" : "*") + std::string(bases[b].name);
        if (name.empty()) name = "1";
        if (seen.insert(signs).second) out.emplace_back(name, signs);
    }
    return out;
}

QMatrix evaluate(const Element& x, const EvalRep& rep) {
    if (x.shape() != rep.shape) throw ShapeMismatch("evaluating an element of " + x.shape().str());
    const int d = rep.shape.size();
    QMatrix out(d, d);
    for (const auto& [word, coeff] : x.terms()) {
        bool vanishes = false;
        for (Generator g : word) vanishes = vanishes || g.level() > 1;
        if (vanishes) continue;
        QMatrix prod = QMatrix::identity(d);
        for (Generator g : word) prod = prod * rep.image(g);
        out += prod * coeff;
    }
    return out;
}

MatrixSeries evaluate(const PowerSeries& s, const EvalRep& rep) {
    MatrixSeries out(rep.shape.size(), s.order());
    for (int k = 0; k <= s.order(); ++k) out[k] = evaluate(s[k], rep);
    return out;
}

std::vector<std::pair<Generator, Generator>> eval_rep_violations(const AlgebraPtr& algebra, const EvalRep& rep,
                                                                 int max_level_sum) {
    std::vector<std::pair<Generator, Generator>> out;
    const auto gens = [&] {
        std::vector<Generator> g;
        for (int i = 1; i <= rep.shape.size(); ++i)
            for (int j = 1; j <= rep.shape.size(); ++j)
                for (int r = 1; r < max_level_sum; ++r) g.emplace_back(i, j, r);
        return g;
    }();
    for (Generator a : gens)
        for (Generator b : gens) {
            if (a.level() + b.level() > max_level_sum) continue;
            const QMatrix A = rep.image(a), B = rep.image(b);
            const int sign = (algebra->parity(a) && algebra->parity(b)) ? -1 : 1;
            const QMatrix lhs = A * B - (B * A) * Rational(sign);
            if (!(lhs == evaluate(algebra->coeff_relation(a, b), rep))) out.emplace_back(a, b);
        }
    return out;
}

EvalRep find_eval_rep(const Shape& shape) {
    if (shape.size() > 4) throw OracleFailure("evaluation oracle limited to m + n <= 4, got " + shape.str());
    const AlgebraPtr algebra = Algebra::create(shape);
    for (auto& [name, signs] : candidate_sign_families(shape)) {
        EvalRep rep{shape, name, signs};
        if (eval_rep_violations(algebra, rep).empty()) return rep;
    }
    throw OracleFailure("no sign family gives a representation of " + shape.str());
}

// ---------------------------------------------------------------- tensor RTT

std::string to_string(TensorEmbedding e) { return e == TensorEmbedding::ordinary ? "ordinary" : "koszul"; }

namespace {

struct TensorSpace {
    Shape shape;
    TensorEmbedding embedding;

    int d() const { return shape.size(); }
    int dim() const { return d() * d() * d(); }
    int p(int a) const { return shape.parity(a + 1); }
    int index(int x, int y, int z) const { return (x * d() + y) * d() + z; }

    // E_{a1 b1} (x) E_{a2 b2} (x) E_{a3 b3}, 0-based.
    void add(SparseMatrix& M, const Rational& c, int a1, int b1, int a2, int b2, int a3, int b3) const {
        int e = 0;
        if (embedding == TensorEmbedding::koszul)
            e = (p(a2) + p(b2)) * p(b1) + (p(a3) + p(b3)) * (p(b1) + p(b2));
        M.add(index(a1, a2, a3), index(b1, b2, b3), e & 1 ? -c : c);
    }
};

}  // namespace

SparseMatrix permutation_operator(const Shape& shape, TensorEmbedding embedding) {
    const TensorSpace V{shape, embedding};
    SparseMatrix P(V.dim());
    for (int x = 0; x < V.d(); ++x)
        for (int i = 0; i < V.d(); ++i)
            for (int j = 0; j < V.d(); ++j) V.add(P, V.p(j) ? -1 : 1, x, x, i, j, j, i);
    return P;
}

PolyMatrix cleared_r_matrix(const Shape& shape, TensorEmbedding embedding, bool swap_arguments) {
    const TensorSpace V{shape, embedding};
    PolyMatrix R(V.dim());
    SparseMatrix id = SparseMatrix::identity(V.dim());
    SparseMatrix neg_id = id;
    neg_id *= -1;
    R.add(1, 0, swap_arguments ? neg_id : id);
    R.add(0, 1, swap_arguments ? id : neg_id);
    SparseMatrix P = permutation_operator(shape, embedding);
    P *= -1;
    R.add(0, 0, P);
    return R;
}

RttResult rtt_tensor_check(const EvalRep& rep, TensorEmbedding embedding) {
    const TensorSpace V{rep.shape, embedding};
    const int d = V.d();
    const SparseMatrix id = SparseMatrix::identity(V.dim());

    SparseMatrix A1(V.dim()), A2(V.dim());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rational c = rep.signs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                               twist_sign(rep.shape, i + 1, j + 1);
            for (int z = 0; z < d; ++z) V.add(A1, c, i, j, i, j, z, z);
            for (int y = 0; y < d; ++y) V.add(A2, c, i, j, y, y, i, j);
        }
    PolyMatrix U1(V.dim()), V2(V.dim());
    U1.add(1, 0, id);
    U1.add(0, 0, A1);
    V2.add(0, 1, id);
    V2.add(0, 0, A2);
    const PolyMatrix R = cleared_r_matrix(rep.shape, embedding);
    const PolyMatrix diff = R * U1 * V2 - V2 * U1 * R;

    RttResult out;
    out.embedding = embedding;
    for (const auto& [ab, M] : diff.terms())
        for (const auto& [rc, v] : M.entries()) {
            if (out.witnesses.size() >= 16) break;
            out.witnesses.push_back({ab.first, ab.second, rc.first, rc.second, to_string(v)});
        }
    out.pass = diff.terms().empty();
    return out;
}

RttResult rtt_tensor_search(const EvalRep& rep) {
    RttResult last;
    for (TensorEmbedding e : {TensorEmbedding::ordinary, TensorEmbedding::koszul}) {
        last = rtt_tensor_check(rep, e);
        if (last.pass) return last;
    }
    return last;
}

// ---------------------------------------------------------------- coefficient extraction

TermMap coeff_extraction_oracle(const Shape& shape, int i, int j, int k, int l, int r, int s) {
    for (int x : {i, j, k, l})
        if (!shape.contains(x)) throw InvalidIndex("index " + std::to_string(x) + " outside " + shape.str());
    if (r < 1 || s < 1) throw InvalidIndex("levels must be positive");
    const int pi = shape.parity(i), pj = shape.parity(j), pk = shape.parity(k);
    const Rational sign = (pi * pj + pi * pk + pj * pk) & 1 ? -1 : 1;

    // t_xy^(a) t_zw^(b) as a free word, t^(0) = delta.
    auto product = [](int x, int y, int a, int z, int w, int b, const Rational& c, TermMap& out) {
        Word word;
        if (a == 0 && x != y) return;
        if (b == 0 && z != w) return;
        if (a > 0) word.emplace_back(x, y, a);
        if (b > 0) word.emplace_back(z, w, b);
        accumulate(out, word, c);
    };

    // Coefficient of u^{-p} v^{-q} in (u-v) B(u,v) is B(p+1,q) - B(p,q+1), so
    // along p + q = r + s - 1 each B(p+1, q) follows from B(p, q+1) and the right side.
    TermMap B;  // B(0, r+s) = 0
    const int total = r + s - 1;
    for (int p = 0; p < r; ++p) {
        const int q = total - p;
        product(k, j, p, i, l, q, sign, B);
        product(k, j, q, i, l, p, -sign, B);
    }
    std::erase_if(B, [](const auto& kv) { return kv.second == 0; });
    return B;
}

}  // namespace yangian
