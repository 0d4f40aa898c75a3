#include "yangian/series.hpp"

#include <algorithm>
#include <set>

namespace yangian {

namespace {
constexpr int kUnbounded = 1 << 20;
}

PowerSeries::PowerSeries(AlgebraPtr algebra, int order) : algebra_(std::move(algebra)), order_(order) {
    if (!algebra_) throw Error("series without algebra");
    if (order_ < 0) throw Error("negative truncation order");
    coeffs_.assign(static_cast<std::size_t>(order_) + 1, algebra_->zero());
}

PowerSeries PowerSeries::constant(AlgebraPtr algebra, int order, const Rational& c) {
    PowerSeries out(std::move(algebra), order);
    out.coeffs_[0] = out.algebra_->scalar(c);
    return out;
}

PowerSeries PowerSeries::constant(const Element& c, int order) {
    PowerSeries out(c.algebra_ptr(), order);
    out.coeffs_[0] = c;
    return out;
}

PowerSeries PowerSeries::t(AlgebraPtr algebra, int i, int j, int order) {
    PowerSeries out(std::move(algebra), order);
    for (int r = 0; r <= order; ++r) out.coeffs_[static_cast<std::size_t>(r)] = out.algebra_->t(i, j, r);
    return out;
}

void PowerSeries::set(int k, Element c) {
    if (k < 0 || k > order_) throw Error("series coefficient index out of range");
    if (c.shape() != shape()) throw ShapeMismatch("series coefficient shape mismatch");
    coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Element& e) { return e.is_zero(); });
}

std::optional<int> PowerSeries::filtration_violation() const {
    for (int k = order_; k >= 0; --k)
        if (coeffs_[static_cast<std::size_t>(k)].degree() > k) return k;
    return std::nullopt;
}

void PowerSeries::check_compatible(const PowerSeries& other) const {
    if (!algebra_ || !other.algebra_) throw Error("uninitialized series");
    if (shape() != other.shape()) throw ShapeMismatch("series shape mismatch: " + shape().str() + " vs " + other.shape().str());
    if (order_ != other.order_)
        throw Error("series order mismatch: " + std::to_string(order_) + " vs " + std::to_string(other.order_));
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
    check_compatible(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
    check_compatible(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& e : coeffs_) e *= c;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.check_compatible(b);
    PowerSeries out(a.algebra_, a.order_);
    for (int k = 0; k <= a.order_; ++k) {
        Element sum = a.algebra_->zero();
        for (int i = 0; i <= k; ++i) {
            const Element& x = a[i];
            const Element& y = b[k - i];
            if (x.is_zero() || y.is_zero()) continue;
            sum += a.algebra_->multiply(x, y);
        }
        out.coeffs_[static_cast<std::size_t>(k)] = std::move(sum);
    }
    return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    a.check_compatible(b);
    return a.coeffs_ == b.coeffs_;
}

PowerSeries PowerSeries::inverse() const {
    const Element& c0 = coeffs_[0];
    if (!c0.is_scalar() || c0.constant_term() == 0)
        throw NotInvertible("series constant term is not a nonzero scalar: " + c0.str());
    const Rational inv0 = 1 / c0.constant_term();
    PowerSeries out(algebra_, order_);
    out.coeffs_[0] = algebra_->scalar(inv0);
    // g_k = -c0^{-1} sum_{a=1}^{k} c_a g_{k-a}
    for (int k = 1; k <= order_; ++k) {
        Element sum = algebra_->zero();
        for (int a = 1; a <= k; ++a) {
            const Element& x = coeffs_[static_cast<std::size_t>(a)];
            const Element& y = out.coeffs_[static_cast<std::size_t>(k - a)];
            if (x.is_zero() || y.is_zero()) continue;
            sum += algebra_->multiply(x, y);
        }
        out.coeffs_[static_cast<std::size_t>(k)] = sum * Rational(-inv0);
    }
    return out;
}

PowerSeries PowerSeries::shifted(const Rational& c) const {
    if (c == 0) return *this;
    PowerSeries out(algebra_, order_);
    out.coeffs_[0] = coeffs_[0];
    // (u - c)^{-k} = sum_{a >= 0} binom(k + a - 1, a) c^a u^{-k-a}
    for (int k = 1; k <= order_; ++k) {
        const Element& ck = coeffs_[static_cast<std::size_t>(k)];
        if (ck.is_zero()) continue;
        for (int a = 0; k + a <= order_; ++a)
            out.coeffs_[static_cast<std::size_t>(k + a)] += ck * (binomial(k + a - 1, a) * power(c, a));
    }
    return out;
}

PowerSeries PowerSeries::negated_argument() const {
    PowerSeries out = *this;
    for (int k = 1; k <= order_; k += 2) out.coeffs_[static_cast<std::size_t>(k)] = -out.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > order_) throw Error("cannot extend a truncated series");
    PowerSeries out(algebra_, order);
    for (int k = 0; k <= order; ++k) out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return out;
}

std::string PowerSeries::str() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) out += "u^-" + std::to_string(k) + ": " + coeffs_[static_cast<std::size_t>(k)].str() + "\n";
    return out;
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(AlgebraPtr algebra, int exact_u, int exact_v)
    : algebra_(std::move(algebra)), exact_u_(exact_u), exact_v_(exact_v) {
    if (!algebra_) throw Error("bi-series without algebra");
}

BiSeries BiSeries::in_u(const PowerSeries& s) {
    BiSeries out(s.algebra_ptr(), s.order(), kUnbounded);
    for (int p = 0; p <= s.order(); ++p) out.set(p, 0, s[p]);
    return out;
}

BiSeries BiSeries::in_v(const PowerSeries& s) {
    BiSeries out(s.algebra_ptr(), kUnbounded, s.order());
    for (int q = 0; q <= s.order(); ++q) out.set(0, q, s[q]);
    return out;
}

BiSeries BiSeries::product(const PowerSeries& a_u, const PowerSeries& b_v) {
    if (a_u.shape() != b_v.shape()) throw ShapeMismatch("bi-series shape mismatch");
    BiSeries out(a_u.algebra_ptr(), a_u.order(), b_v.order());
    for (int p = 0; p <= a_u.order(); ++p) {
        if (a_u[p].is_zero()) continue;
        for (int q = 0; q <= b_v.order(); ++q) {
            if (b_v[q].is_zero()) continue;
            out.set(p, q, a_u.algebra().multiply(a_u[p], b_v[q]));
        }
    }
    return out;
}

BiSeries BiSeries::bracket(const PowerSeries& a_u, const PowerSeries& b_v) {
    if (a_u.shape() != b_v.shape()) throw ShapeMismatch("bi-series shape mismatch");
    BiSeries out(a_u.algebra_ptr(), a_u.order(), b_v.order());
    for (int p = 0; p <= a_u.order(); ++p) {
        if (a_u[p].is_scalar()) continue;
        for (int q = 0; q <= b_v.order(); ++q) {
            if (b_v[q].is_scalar()) continue;
            out.set(p, q, a_u.algebra().supercommutator(a_u[p], b_v[q]));
        }
    }
    return out;
}

Element BiSeries::at(int p, int q) const {
    if (auto it = coeffs_.find({p, q}); it != coeffs_.end()) return it->second;
    return algebra_->zero();
}

void BiSeries::set(int p, int q, Element c) {
    if (p < -1 || q < -1) throw Error("bi-series index below -1");
    if (c.shape() != algebra_->shape()) throw ShapeMismatch("bi-series coefficient shape mismatch");
    if (c.is_zero())
        coeffs_.erase({p, q});
    else
        coeffs_[{p, q}] = std::move(c);
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
    if (algebra_->shape() != other.algebra_->shape()) throw ShapeMismatch("bi-series shape mismatch");
    exact_u_ = std::min(exact_u_, other.exact_u_);
    exact_v_ = std::min(exact_v_, other.exact_v_);
    for (const auto& [key, c] : other.coeffs_) set(key.first, key.second, at(key.first, key.second) + c);
    std::erase_if(coeffs_, [&](const auto& kv) { return kv.first.first > exact_u_ || kv.first.second > exact_v_; });
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
    BiSeries neg = other;
    neg *= Rational(-1);
    return *this += neg;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, e] : coeffs_) e *= c;
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.algebra_->shape() != b.algebra_->shape()) throw ShapeMismatch("bi-series shape mismatch");
    for (const auto* s : {&a, &b})
        for (const auto& [key, c] : s->coeffs_)
            if (key.first < 0 || key.second < 0) throw Error("bi-series product with positive powers");
    const int eu = std::min(a.exact_u_, b.exact_u_);
    const int ev = std::min(a.exact_v_, b.exact_v_);
    std::map<std::pair<int, int>, Element> acc;
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            const int p = ka.first + kb.first, q = ka.second + kb.second;
            if (p > eu || q > ev) continue;
            Element prod = a.algebra_->multiply(ca, cb);
            auto it = acc.find({p, q});
            if (it == acc.end())
                acc.emplace(std::make_pair(p, q), std::move(prod));
            else
                it->second += prod;
        }
    }
    BiSeries out(a.algebra_, eu, ev);
    for (auto& [key, c] : acc) out.set(key.first, key.second, std::move(c));
    return out;
}

BiSeries BiSeries::times_u_minus_v() const {
    BiSeries out(algebra_, exact_u_ - 1, exact_v_ - 1);
    std::map<std::pair<int, int>, Element> acc;
    auto add = [&](int p, int q, const Element& c) {
        if (p > out.exact_u_ || q > out.exact_v_) return;
        auto it = acc.find({p, q});
        if (it == acc.end())
            acc.emplace(std::make_pair(p, q), c);
        else
            it->second += c;
    };
    for (const auto& [key, c] : coeffs_) {
        if (key.first < 0 || key.second < 0) throw Error("(u - v) applied twice");
        add(key.first - 1, key.second, c);
        add(key.first, key.second - 1, -c);
    }
    for (auto& [key, c] : acc) out.set(key.first, key.second, std::move(c));
    return out;
}

std::vector<BiWitness> bi_differences(const BiSeries& lhs, const BiSeries& rhs) {
    if (lhs.algebra().shape() != rhs.algebra().shape()) throw ShapeMismatch("bi_check shape mismatch");
    const int eu = std::min(lhs.exact_u(), rhs.exact_u());
    const int ev = std::min(lhs.exact_v(), rhs.exact_v());
    std::set<std::pair<int, int>> keys;
    for (const auto* s : {&lhs, &rhs})
        for (const auto& [key, c] : s->coefficients())
            if (key.first <= eu && key.second <= ev) keys.insert(key);
    std::vector<BiWitness> out;
    for (const auto& [p, q] : keys) {
        Element residual = lhs.at(p, q) - rhs.at(p, q);
        if (!residual.is_zero()) out.push_back({p, q, std::move(residual)});
    }
    return out;
}

std::optional<BiWitness> bi_check(const BiSeries& lhs, const BiSeries& rhs) {
    auto diffs = bi_differences(lhs, rhs);
    if (diffs.empty()) return std::nullopt;
    return diffs.front();
}

}  // namespace yangian
