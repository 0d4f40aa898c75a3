#include "yangian/matrix.hpp"

#include <numeric>

namespace yangian {

std::string to_string(Convention c) { return c == Convention::plain ? "plain" : "twisted"; }

Convention parse_convention(const std::string& text) {
    if (text == "plain") return Convention::plain;
    if (text == "twisted") return Convention::twisted;
    throw Error("unknown convention '" + text + "'");
}

int twist_sign(const Shape& shape, int i, int j) {
    return (shape.parity(j) * (shape.parity(i) + 1)) & 1 ? -1 : 1;
}

SuperMatrix::SuperMatrix(AlgebraPtr algebra, int size, int order, Convention convention)
    : algebra_(std::move(algebra)), size_(size), order_(order), convention_(convention) {
    if (size_ < 1) throw Error("empty matrix");
    entries_.assign(static_cast<std::size_t>(size_ * size_), PowerSeries(algebra_, order_));
}

SuperMatrix SuperMatrix::identity(AlgebraPtr algebra, int size, int order) {
    SuperMatrix out(algebra, size, order);
    for (int i = 1; i <= size; ++i) out.set(i, i, PowerSeries::constant(algebra, order, 1));
    return out;
}

SuperMatrix SuperMatrix::build_T(AlgebraPtr algebra, int order, Convention convention) {
    const Shape shape = algebra->shape();
    SuperMatrix out(algebra, shape.size(), order, convention);
    for (int i = 1; i <= shape.size(); ++i)
        for (int j = 1; j <= shape.size(); ++j) {
            PowerSeries s = PowerSeries::t(algebra, i, j, order);
            if (convention == Convention::twisted) s *= Rational(twist_sign(shape, i, j));
            out.set(i, j, std::move(s));
        }
    return out;
}

std::size_t SuperMatrix::index(int row, int col) const {
    if (row < 1 || row > size_ || col < 1 || col > size_)
        throw InvalidIndex("matrix index (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
    return static_cast<std::size_t>((row - 1) * size_ + (col - 1));
}

const PowerSeries& SuperMatrix::operator()(int row, int col) const { return entries_[index(row, col)]; }

void SuperMatrix::set(int row, int col, PowerSeries s) {
    if (s.order() != order_) throw Error("matrix entry order mismatch");
    entries_[index(row, col)] = std::move(s);
}

SuperMatrix SuperMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.size() != cols.size() || rows.empty()) throw Error("submatrix must be square and nonempty");
    const int k = static_cast<int>(rows.size());
    SuperMatrix out(algebra_, k, order_, convention_);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out.set(a + 1, b + 1, (*this)(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]));
    return out;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.size_ != b.size_ || a.order_ != b.order_) throw Error("matrix product dimension/order mismatch");
    SuperMatrix out(a.algebra_, a.size_, a.order_, a.convention_);
    for (int i = 1; i <= a.size_; ++i)
        for (int j = 1; j <= a.size_; ++j) {
            PowerSeries sum(a.algebra_, a.order_);
            for (int k = 1; k <= a.size_; ++k) {
                const PowerSeries& x = a(i, k);
                const PowerSeries& y = b(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                sum += x * y;
            }
            out.set(i, j, std::move(sum));
        }
    return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.size_ != b.size_ || a.order_ != b.order_) throw Error("matrix difference dimension/order mismatch");
    SuperMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.size_ != b.size_ || a.order_ != b.order_) return false;
    return a.entries_ == b.entries_;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix invert_rational(RationalMatrix a) {
    const std::size_t k = a.size();
    RationalMatrix inv(k, std::vector<Rational>(k, 0));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) throw NotInvertible("constant-term matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / a[col][col];
        for (std::size_t c = 0; c < k; ++c) {
            a[col][c] *= scale;
            inv[col][c] *= scale;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < k; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace

SuperMatrix SuperMatrix::inverse() const {
    const std::size_t k = static_cast<std::size_t>(size_);
    RationalMatrix m0(k, std::vector<Rational>(k, 0));
    for (int i = 1; i <= size_; ++i)
        for (int j = 1; j <= size_; ++j) {
            const Element& c = (*this)(i, j)[0];
            if (!c.is_scalar()) throw NotInvertible("constant term of entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not scalar");
            m0[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = c.constant_term();
        }
    const RationalMatrix m0inv = invert_rational(m0);

    // coefficient matrices G_0 .. G_N of the inverse: G_0 = M_0^{-1},
    // G_n = -M_0^{-1} sum_{a=1}^{n} M_a G_{n-a}.
    using Grid = std::vector<Element>;
    auto at = [k](Grid& g, std::size_t i, std::size_t j) -> Element& { return g[i * k + j]; };
    std::vector<Grid> G(static_cast<std::size_t>(order_) + 1, Grid(k * k, algebra_->zero()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) at(G[0], i, j) = algebra_->scalar(m0inv[i][j]);
    for (int n = 1; n <= order_; ++n) {
        Grid acc(k * k, algebra_->zero());
        for (int a = 1; a <= n; ++a) {
            Grid& prev = G[static_cast<std::size_t>(n - a)];
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < k; ++l) {
                    const Element& x = (*this)(static_cast<int>(i) + 1, static_cast<int>(l) + 1)[a];
                    if (x.is_zero()) continue;
                    for (std::size_t j = 0; j < k; ++j) {
                        const Element& y = at(prev, l, j);
                        if (y.is_zero()) continue;
                        at(acc, i, j) += algebra_->multiply(x, y);
                    }
                }
        }
        Grid& out = G[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Element sum = algebra_->zero();
                for (std::size_t l = 0; l < k; ++l)
                    if (m0inv[i][l] != 0) sum += at(acc, l, j) * m0inv[i][l];
                at(out, i, j) = -sum;
            }
    }
    SuperMatrix result(algebra_, size_, order_, convention_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            PowerSeries s(algebra_, order_);
            for (int n = 0; n <= order_; ++n) s.set(n, at(G[static_cast<std::size_t>(n)], i, j));
            result.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, std::move(s));
        }
    return result;
}

SuperMatrix SuperMatrix::untwisted() const {
    SuperMatrix out = *this;
    out.convention_ = Convention::plain;
    if (convention_ == Convention::plain) return out;
    const Shape& shape = algebra_->shape();
    if (size_ != shape.size()) throw Error("untwisted: matrix is not indexed by the full shape");
    for (int i = 1; i <= size_; ++i)
        for (int j = 1; j <= size_; ++j)
            if (twist_sign(shape, i, j) < 0) out.entries_[index(i, j)] = -out.entries_[index(i, j)];
    return out;
}

SuperMatrix SuperMatrix::map_entries(AlgebraPtr target, const std::function<PowerSeries(const PowerSeries&)>& f) const {
    SuperMatrix out(target, size_, order_, convention_);
    for (int i = 1; i <= size_; ++i)
        for (int j = 1; j <= size_; ++j) out.set(i, j, f((*this)(i, j)));
    return out;
}

PowerSeries quasideterminant(const SuperMatrix& M, int i, int j) {
    const int k = M.size();
    if (i < 1 || i > k || j < 1 || j > k) throw InvalidIndex("quasideterminant index out of range");
    if (k == 1) return M(1, 1);
    // |M|_ij = m_ij - r (M^{ij})^{-1} c, with M^{ij} the minor without row i
    // and column j. Agrees with ((M^{-1})_ji)^{-1} whenever M is invertible and
    // stays defined when only the minor is.
    std::vector<int> rows, cols;
    for (int a = 1; a <= k; ++a) {
        if (a != i) rows.push_back(a);
        if (a != j) cols.push_back(a);
    }
    SuperMatrix minor_inv;
    try {
        minor_inv = M.submatrix(rows, cols).inverse();
    } catch (const NotInvertible&) {
        throw QuasideterminantUndefined("quasideterminant |M|_" + std::to_string(i) + std::to_string(j) +
                                        " undefined: the complementary minor is not invertible");
    }
    PowerSeries out = M(i, j);
    const int r = static_cast<int>(rows.size());
    for (int q = 1; q <= r; ++q) {
        const PowerSeries& x_iq = M(i, cols[static_cast<std::size_t>(q - 1)]);
        if (x_iq.is_zero()) continue;
        for (int p = 1; p <= r; ++p) {
            const PowerSeries& x_pj = M(rows[static_cast<std::size_t>(p - 1)], j);
            if (x_pj.is_zero()) continue;
            out -= x_iq * minor_inv(q, p) * x_pj;
        }
    }
    return out;
}

PowerSeries quasideterminant_by_inverse(const SuperMatrix& M, int i, int j) {
    const SuperMatrix inv = M.inverse();
    const PowerSeries& entry = inv(j, i);
    try {
        return entry.inverse();
    } catch (const NotInvertible&) {
        throw QuasideterminantUndefined("quasideterminant |M|_" + std::to_string(i) + std::to_string(j) +
                                        " undefined: entry (" + std::to_string(j) + "," + std::to_string(i) +
                                        ") of the inverse has constant term " + entry[0].str());
    }
}

namespace {

std::vector<int> iota_list(int from, int to) {
    std::vector<int> v;
    for (int x = from; x <= to; ++x) v.push_back(x);
    return v;
}

}  // namespace

GaussFactors gauss(AlgebraPtr algebra, int order) {
    const int size = algebra->shape().size();
    const SuperMatrix T = SuperMatrix::build_T(algebra, order, Convention::plain);
    GaussFactors out{SuperMatrix::identity(algebra, size, order), SuperMatrix(algebra, size, order),
                     SuperMatrix::identity(algebra, size, order)};
    std::vector<PowerSeries> d_inv;
    for (int i = 1; i <= size; ++i) {
        const auto lead = iota_list(1, i);
        PowerSeries d = quasideterminant(T.submatrix(lead, lead), i, i);
        d_inv.push_back(d.inverse());
        out.D.set(i, i, std::move(d));
    }
    for (int i = 1; i <= size; ++i) {
        const PowerSeries& di_inv = d_inv[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= size; ++j) {
            // rows 1..i, columns 1..i-1, j; boxed entry is (i, j)
            auto cols = iota_list(1, i - 1);
            cols.push_back(j);
            PowerSeries q = quasideterminant(T.submatrix(iota_list(1, i), cols), i, i);
            out.E.set(i, j, di_inv * q);
            // rows 1..i-1, j, columns 1..i; boxed entry is (j, i)
            auto rows = iota_list(1, i - 1);
            rows.push_back(j);
            PowerSeries p = quasideterminant(T.submatrix(rows, iota_list(1, i)), i, i);
            out.F.set(j, i, p * di_inv);
        }
    }
    return out;
}

PowerSeries defe_series(AlgebraPtr algebra, int order, GaussSeries which, int index) {
    const int size = algebra->shape().size();
    const int limit = which == GaussSeries::d ? size : size - 1;
    if (index < 1 || index > limit) throw InvalidIndex("Gauss series index " + std::to_string(index) + " out of range");
    const GaussFactors g = gauss(algebra, order);
    switch (which) {
        case GaussSeries::d: return g.d(index);
        case GaussSeries::e: return g.e(index);
        case GaussSeries::f: return g.f(index);
    }
    return g.d(index);
}

SuperMatrix t_prime(AlgebraPtr algebra, int order, Convention convention) {
    return SuperMatrix::build_T(algebra, order, convention).inverse().untwisted();
}

}  // namespace yangian
