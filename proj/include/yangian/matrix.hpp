#pragma once

// Square matrices of power series under ordinary row-by-column
// multiplication: inversion, quasideterminants and the Gauss decomposition
// T(u) = F(u) D(u) E(u).

#include <functional>
#include <string>
#include <vector>

#include "yangian/series.hpp"

namespace yangian {

/// How T(u) is laid out as a matrix over the series ring.
///   plain:   entry (i,j) is t_ij(u)
///   twisted: entry (i,j) is t_ij(u) * (-1)^{j(i+1)} with parities of i, j
enum class Convention { plain, twisted };

std::string to_string(Convention c);
Convention parse_convention(const std::string& text);

/// (-1)^{parity(j) * (parity(i) + 1)}.
int twist_sign(const Shape& shape, int i, int j);

class SuperMatrix {
  public:
    SuperMatrix() = default;
    /// k x k zero matrix at order N.
    SuperMatrix(AlgebraPtr algebra, int size, int order, Convention convention = Convention::plain);

    static SuperMatrix identity(AlgebraPtr algebra, int size, int order);
    static SuperMatrix build_T(AlgebraPtr algebra, int order, Convention convention);

    int size() const { return size_; }
    int order() const { return order_; }
    Convention convention() const { return convention_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }

    /// 1-based access.
    const PowerSeries& operator()(int row, int col) const;
    void set(int row, int col, PowerSeries s);

    /// Rows and columns are 1-based index lists into this matrix.
    SuperMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

    /// Two-sided inverse. The constant-term matrix must be an invertible
    /// rational matrix; the remaining coefficients follow by recursion.
    SuperMatrix inverse() const;

    /// Entries with the convention's sign removed (i.e. the t_ij(u) they carry).
    SuperMatrix untwisted() const;
    SuperMatrix map_entries(AlgebraPtr target, const std::function<PowerSeries(const PowerSeries&)>& f) const;

  private:
    std::size_t index(int row, int col) const;

    AlgebraPtr algebra_;
    int size_ = 0;
    int order_ = 0;
    Convention convention_ = Convention::plain;
    std::vector<PowerSeries> entries_;
};

class QuasideterminantUndefined : public Error {
  public:
    using Error::Error;
};

/// |M|_ij, 1-based, through the complementary minor:
/// m_ij - sum m_iq ((M^{ij})^{-1})_qp m_pj. Needs only the minor invertible.
PowerSeries quasideterminant(const SuperMatrix& M, int i, int j);

/// ((M^{-1})_ji)^{-1}; needs M and that entry invertible.
PowerSeries quasideterminant_by_inverse(const SuperMatrix& M, int i, int j);

/// F lower unitriangular, D diagonal, E upper unitriangular.
struct GaussFactors {
    SuperMatrix F;
    SuperMatrix D;
    SuperMatrix E;

    const PowerSeries& d(int i) const { return D(i, i); }
    /// e_i = e_{i,i+1}
    const PowerSeries& e(int i) const { return E(i, i + 1); }
    /// f_i = f_{i+1,i}
    const PowerSeries& f(int i) const { return F(i + 1, i); }
};

/// Quasideterminant formulas for d_i, e_ij, f_ji evaluated on the entries
/// t_ij(u) of T(u). Rows for e_ij are 1..i-1, i; rows for f_ji are 1..i-1, j.
GaussFactors gauss(AlgebraPtr algebra, int order);

enum class GaussSeries { d, e, f };

/// d_i, e_i = e_{i,i+1} or f_i = f_{i+1,i}.
PowerSeries defe_series(AlgebraPtr algebra, int order, GaussSeries which, int index);

/// Entries t'_ij(u) of T(u)^{-1}, with the convention's twist removed on read-out.
SuperMatrix t_prime(AlgebraPtr algebra, int order, Convention convention);

}  // namespace yangian
