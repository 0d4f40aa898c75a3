#pragma once

// Truncated power series in u^{-1} over the Yangian, and the two-variable
// series used to state identities with a single (u - v) factor cleared.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangian/algebra.hpp"

namespace yangian {

/// c_0 + c_1 u^{-1} + ... + c_N u^{-N}.
class PowerSeries {
  public:
    PowerSeries() = default;
    /// The zero series of order N.
    PowerSeries(AlgebraPtr algebra, int order);

    static PowerSeries constant(AlgebraPtr algebra, int order, const Rational& c);
    static PowerSeries constant(const Element& c, int order);
    /// t_ij(u) = delta_ij + t_ij^(1) u^{-1} + ... truncated at N.
    static PowerSeries t(AlgebraPtr algebra, int i, int j, int order);

    int order() const { return order_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const Algebra& algebra() const { return *algebra_; }
    const Shape& shape() const { return algebra_->shape(); }

    const Element& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set(int k, Element c);
    const std::vector<Element>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    /// Largest k with degree(c_k) > k, or nullopt when the filtration bound holds.
    std::optional<int> filtration_violation() const;

    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const Rational& c);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
    friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
    /// Cauchy product, noncommutative, truncated at N.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    /// Two-sided inverse; requires a nonzero scalar constant term.
    PowerSeries inverse() const;
    /// s(u - c).
    PowerSeries shifted(const Rational& c) const;
    /// s(-u).
    PowerSeries negated_argument() const;
    PowerSeries truncated(int order) const;
    /// Applies f to every coefficient (f must keep the shape or change it uniformly).
    template <typename F>
    PowerSeries map_coefficients(AlgebraPtr target, F&& f) const {
        PowerSeries out(std::move(target), order_);
        for (int k = 0; k <= order_; ++k) out.set(k, f(coeffs_[static_cast<std::size_t>(k)]));
        return out;
    }

    /// One line per coefficient: "u^-k: <element>".
    std::string str() const;

  private:
    void check_compatible(const PowerSeries& other) const;

    AlgebraPtr algebra_;
    int order_ = 0;
    std::vector<Element> coeffs_;
};

class NotInvertible : public Error {
  public:
    using Error::Error;
};

/// Sum over u^{-p} v^{-q}, -1 <= p, q. Coefficients with p <= exact_u() and
/// q <= exact_v() are exact; the rest are truncated.
class BiSeries {
  public:
    BiSeries() = default;
    BiSeries(AlgebraPtr algebra, int exact_u, int exact_v);

    /// s(u) as a bi-series; exact in v to any order.
    static BiSeries in_u(const PowerSeries& s);
    static BiSeries in_v(const PowerSeries& s);
    /// a(u) b(v).
    static BiSeries product(const PowerSeries& a_u, const PowerSeries& b_v);
    /// [a(u), b(v)] coefficientwise: [a_p, b_q] (supercommutator).
    static BiSeries bracket(const PowerSeries& a_u, const PowerSeries& b_v);

    int exact_u() const { return exact_u_; }
    int exact_v() const { return exact_v_; }
    const Algebra& algebra() const { return *algebra_; }

    Element at(int p, int q) const;
    void set(int p, int q, Element c);
    const std::map<std::pair<int, int>, Element>& coefficients() const { return coeffs_; }

    BiSeries& operator+=(const BiSeries& other);
    BiSeries& operator-=(const BiSeries& other);
    BiSeries& operator*=(const Rational& c);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }
    /// Cauchy product in both variables; operands must have no positive powers.
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    /// (u - v) * this. Exactness drops by one in each variable.
    BiSeries times_u_minus_v() const;

  private:
    AlgebraPtr algebra_;
    int exact_u_ = 0;
    int exact_v_ = 0;
    std::map<std::pair<int, int>, Element> coeffs_;
};

struct BiWitness {
    int p = 0;
    int q = 0;
    Element residual;
};

/// Compares on the common exact range -1..min(exact); nullopt means equal.
std::optional<BiWitness> bi_check(const BiSeries& lhs, const BiSeries& rhs);

/// All mismatching coefficients, in (p, q) order.
std::vector<BiWitness> bi_differences(const BiSeries& lhs, const BiSeries& rhs);

}  // namespace yangian
