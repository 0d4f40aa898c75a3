#include "yangian/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace yangian {

Shape::Shape(int even, int odd) : m(even), n(odd) {
    if (m < 0 || n < 0 || m + n < 1 || m + n > 200)
        throw InvalidIndex("invalid shape (" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

int Shape::parity(int index) const {
    if (!contains(index))
        throw InvalidIndex("index " + std::to_string(index) + " out of range for shape " + str());
    return index <= m ? 0 : 1;
}

std::string Shape::str() const { return "(" + std::to_string(m) + "|" + std::to_string(n) + ")"; }

std::string Generator::str() const {
    return "t[" + std::to_string(i()) + "," + std::to_string(j()) + "," + std::to_string(level()) + "]";
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ w.size();
    for (Generator g : w) {
        h ^= g.code();
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

int degree(const Word& w) {
    int d = 0;
    for (Generator g : w) d += g.level();
    return d;
}

std::string render_word(const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += '*';
        out += w[k].str();
    }
    return out;
}

void accumulate(TermMap& out, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = out.try_emplace(w, c);
    if (!inserted) it->second += c;
}

// ---------------------------------------------------------------- Element

const Algebra& Element::algebra() const {
    if (!algebra_) throw Error("element has no algebra");
    return *algebra_;
}

const Shape& Element::shape() const { return algebra().shape(); }

int Element::degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, yangian::degree(w));
    return d;
}

bool Element::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }

Rational Element::constant_term() const {
    if (!terms_.empty() && terms_[0].first.empty()) return terms_[0].second;
    return 0;
}

bool Element::is_homogeneous() const {
    if (terms_.empty()) return true;
    int p = algebra().parity(terms_[0].first);
    for (const auto& [w, c] : terms_)
        if (algebra().parity(w) != p) return false;
    return true;
}

int Element::parity() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw Error("parity of an inhomogeneous element");
    return algebra().parity(terms_[0].first);
}

std::pair<Element, Element> Element::parity_parts() const {
    std::vector<Term> even, odd;
    for (const auto& t : terms_) (algebra().parity(t.first) ? odd : even).push_back(t);
    return {Element(algebra_, std::move(even)), Element(algebra_, std::move(odd))};
}

Element Element::truncated(int degree_cap) const {
    std::vector<Term> kept;
    for (const auto& t : terms_)
        if (yangian::degree(t.first) <= degree_cap) kept.push_back(t);
    return Element(algebra_, std::move(kept));
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        int da = yangian::degree(a->first), db = yangian::degree(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->second;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t->first.empty()) {
            out += to_string(c);
        } else {
            if (c != 1) out += to_string(c) + "*";
            out += render_word(t->first);
        }
    }
    return out;
}

void Element::check_same(const Element& other) const {
    if (!algebra_ || !other.algebra_) throw Error("element has no algebra");
    if (algebra_->shape() != other.algebra_->shape())
        throw ShapeMismatch("shape mismatch: " + algebra_->shape().str() + " vs " + other.algebra_->shape().str());
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

namespace {

// Merge of two sorted term lists, a + sign*b.
std::vector<Element::Term> merge_terms(const std::vector<Element::Term>& a, const std::vector<Element::Term>& b,
                                       int sign) {
    std::vector<Element::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
            ++j;
        } else {
            Rational c = a[i].second;
            if (sign > 0)
                c += b[j].second;
            else
                c -= b[j].second;
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Element& Element::operator+=(const Element& other) {
    check_same(other);
    terms_ = merge_terms(terms_, other.terms_, 1);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    check_same(other);
    terms_ = merge_terms(terms_, other.terms_, -1);
    return *this;
}

Element& Element::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Element operator*(const Element& a, const Element& b) { return a.algebra().multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- Algebra

AlgebraPtr Algebra::create(Shape shape, AlgebraOptions options) {
    return AlgebraPtr(new Algebra(shape, options));
}

int Algebra::parity(Generator g) const { return (shape_.parity(g.i()) + shape_.parity(g.j())) & 1; }

int Algebra::parity(const Word& w) const {
    int p = 0;
    for (Generator g : w) p ^= parity(g);
    return p;
}

bool Algebra::valid(Generator g) const { return shape_.contains(g.i()) && shape_.contains(g.j()) && g.level() >= 1; }

void Algebra::require_valid(Generator g) const {
    if (!valid(g)) throw InvalidIndex("generator " + g.str() + " invalid for shape " + shape_.str());
}

Element Algebra::zero() const { return Element(shared_from_this()); }

Element Algebra::one() const { return scalar(1); }

Element Algebra::scalar(const Rational& c) const {
    if (c == 0) return zero();
    return Element(shared_from_this(), {{Word{}, c}});
}

Element Algebra::t(int i, int j, int r) const {
    if (!shape_.contains(i) || !shape_.contains(j) || r < 0 || r > 0xffff)
        throw InvalidIndex("t[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) +
                           "] invalid for shape " + shape_.str());
    if (r == 0) return scalar(i == j ? 1 : 0);
    return Element(shared_from_this(), {{Word{Generator(i, j, r)}, Rational(1)}});
}

Element Algebra::generator(Generator g) const { return t(g.i(), g.j(), g.level()); }

TermMap Algebra::coeff_relation_raw(Generator a, Generator b) const {
    require_valid(a);
    require_valid(b);
    const int i = a.i(), j = a.j(), r = a.level();
    const int k = b.i(), l = b.j(), s = b.level();
    const int pi = shape_.parity(i), pj = shape_.parity(j), pk = shape_.parity(k);
    const int sign = ((pi * pj + pi * pk + pj * pk) & 1) ? -1 : 1;

    // t_xy^(0) is the scalar delta_xy; level-0 symbols never enter a word.
    auto factor = [](int x, int y, int level, Word& w) {
        if (level == 0) return x == y;
        w.emplace_back(x, y, level);
        return true;
    };
    TermMap out;
    for (int c = 0; c < std::min(r, s); ++c) {
        const int top = r + s - 1 - c;
        Word w1;
        if (factor(k, j, c, w1) && factor(i, l, top, w1)) accumulate(out, w1, Rational(sign));
        Word w2;
        if (factor(k, j, top, w2) && factor(i, l, c, w2)) accumulate(out, w2, Rational(-sign));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Element Algebra::coeff_relation(Generator a, Generator b) const { return normal_form(coeff_relation_raw(a, b)); }

bool Algebra::ordered_pair(Generator x, Generator y) const { return x < y || (x == y && parity(x) == 0); }

void Algebra::insert_right(const Word& w, Generator g, const Rational& c, TermMap& out) const {
    if (w.empty() || ordered_pair(w.back(), g)) {
        Word v = w;
        v.push_back(g);
        accumulate(out, v, c);
        return;
    }
    for (const auto& [v, cv] : insertion(w, g)) accumulate(out, v, c * cv);
}

// Normal form of w*g for a normal word w whose last letter x is out of order
// with g. Uses x g = (-1)^{p(x)p(g)} g x + [x, g], and x x = [x, x]/2 for odd x.
const Algebra::Expansion& Algebra::insertion(const Word& w, Generator g) const {
    Word key = w;
    key.push_back(g);
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const Generator x = w.back();
    const Word head(w.begin(), w.end() - 1);
    TermMap acc;
    if (x == g) {
        for (const auto& [word, coeff] : coeff_relation_raw(x, x)) right_multiply(head, word, coeff / 2, acc);
    } else {
        const int sign = (parity(x) & parity(g)) ? -1 : 1;
        TermMap moved;
        insert_right(head, g, Rational(sign), moved);
        for (const auto& [v, cv] : moved) insert_right(v, x, cv, acc);
        for (const auto& [word, coeff] : coeff_relation_raw(x, g)) right_multiply(head, word, coeff, acc);
    }
    Expansion result;
    result.reserve(acc.size());
    for (auto& [v, c] : acc)
        if (c != 0) result.emplace_back(v, std::move(c));
    std::sort(result.begin(), result.end(), [](const auto& p, const auto& q) { return p.first < q.first; });

    std::lock_guard lock(memo_mutex_);
    auto [it, inserted] = memo_.try_emplace(std::move(key), std::move(result));
    return it->second;
}

void Algebra::right_multiply(const Word& base, const Word& letters, const Rational& c, TermMap& out) const {
    if (letters.empty()) {
        accumulate(out, base, c);
        return;
    }
    TermMap current;
    current.emplace(base, c);
    for (std::size_t k = 0; k < letters.size(); ++k) {
        TermMap next;
        for (const auto& [v, cv] : current)
            if (cv != 0) insert_right(v, letters[k], cv, next);
        current = std::move(next);
    }
    for (const auto& [v, cv] : current) accumulate(out, v, cv);
}

void Algebra::enforce_cap(std::size_t terms) const {
    if (options_.max_terms && terms > options_.max_terms)
        throw ResourceLimitExceeded("element with " + std::to_string(terms) + " terms exceeds the cap of " +
                                    std::to_string(options_.max_terms));
}

Element Algebra::make(TermMap&& acc) const {
    std::vector<Element::Term> terms;
    terms.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (c != 0) terms.emplace_back(w, std::move(c));
    std::sort(terms.begin(), terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    enforce_cap(terms.size());
    return Element(shared_from_this(), std::move(terms));
}

Element Algebra::normal_form(const TermMap& raw) const {
    TermMap acc;
    for (const auto& [w, c] : raw) {
        for (Generator g : w) require_valid(g);
        right_multiply(Word{}, w, c, acc);
    }
    return make(std::move(acc));
}

Element Algebra::multiply(const Element& a, const Element& b, std::optional<int> degree_cap) const {
    if (a.shape() != shape_ || b.shape() != shape_)
        throw ShapeMismatch("multiply: shapes " + a.shape().str() + " and " + b.shape().str() + " in " + shape_.str());
    TermMap acc;
    for (const auto& [wb, cb] : b.terms()) {
        if (wb.empty()) {
            for (const auto& [wa, ca] : a.terms()) accumulate(acc, wa, ca * cb);
            continue;
        }
        for (const auto& [wa, ca] : a.terms()) right_multiply(wa, wb, ca * cb, acc);
    }
    Element out = make(std::move(acc));
    if (degree_cap) return out.truncated(*degree_cap);
    return out;
}

Element Algebra::supercommutator(const Element& a, const Element& b) const {
    auto [a0, a1] = a.parity_parts();
    auto [b0, b1] = b.parity_parts();
    Element out = zero();
    const Element* as[2] = {&a0, &a1};
    const Element* bs[2] = {&b0, &b1};
    for (int p = 0; p < 2; ++p) {
        if (as[p]->is_zero()) continue;
        for (int q = 0; q < 2; ++q) {
            if (bs[q]->is_zero()) continue;
            Element ab = multiply(*as[p], *bs[q]);
            Element ba = multiply(*bs[q], *as[p]);
            if (p & q)
                out += ab + ba;
            else
                out += ab - ba;
        }
    }
    return out;
}

Element Algebra::reduce_at(const Word& w, std::size_t pos) const {
    if (pos + 1 >= w.size()) throw InvalidIndex("reduce_at: position out of range");
    const Generator x = w[pos], y = w[pos + 1];
    if (ordered_pair(x, y)) throw Error("reduce_at: pair already in normal order");
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    TermMap raw;
    auto splice = [&](const Word& middle, const Rational& c) {
        Word v = prefix;
        v.insert(v.end(), middle.begin(), middle.end());
        v.insert(v.end(), suffix.begin(), suffix.end());
        accumulate(raw, v, c);
    };
    if (x == y) {
        for (const auto& [word, coeff] : coeff_relation_raw(x, x)) splice(word, coeff / 2);
    } else {
        splice(Word{y, x}, Rational((parity(x) & parity(y)) ? -1 : 1));
        for (const auto& [word, coeff] : coeff_relation_raw(x, y)) splice(word, coeff);
    }
    return normal_form(raw);
}

std::size_t Algebra::memo_size() const {
    std::lock_guard lock(memo_mutex_);
    return memo_.size();
}

}  // namespace yangian
