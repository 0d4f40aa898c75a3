#pragma once

// The super Yangian Y(gl_{m|n}) as ordered monomials in the generators
// t_ij^(r) with exact rational coefficients. Products are reduced to normal
// order by a memoized rewriting engine driven by the coefficient form of the
// defining relations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yangian/rational.hpp"

namespace yangian {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidIndex : public Error {
  public:
    using Error::Error;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

/// Raised when an element grows past the configured term budget.
class ResourceLimitExceeded : public Error {
  public:
    using Error::Error;
};

/// Block sizes of gl_{m|n}. Indices 1..m are even, m+1..m+n are odd.
struct Shape {
    int m = 0;
    int n = 0;

    Shape() = default;
    Shape(int even, int odd);

    int size() const { return m + n; }
    int parity(int index) const;
    bool contains(int index) const { return index >= 1 && index <= m + n; }
    std::string str() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// t_ij^(r), r >= 1, packed so that integer order is lexicographic in (i, j, r).
class Generator {
  public:
    constexpr Generator() = default;
    constexpr Generator(int i, int j, int r)
        : code_((static_cast<std::uint32_t>(i) << 24) | (static_cast<std::uint32_t>(j) << 16) |
                static_cast<std::uint32_t>(r)) {}

    constexpr int i() const { return static_cast<int>(code_ >> 24); }
    constexpr int j() const { return static_cast<int>((code_ >> 16) & 0xff); }
    constexpr int level() const { return static_cast<int>(code_ & 0xffff); }
    constexpr std::uint32_t code() const { return code_; }

    std::string str() const;

    friend constexpr bool operator==(Generator, Generator) = default;
    friend constexpr auto operator<=>(Generator, Generator) = default;

  private:
    std::uint32_t code_ = 0;
};

using Word = std::vector<Generator>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

int degree(const Word& w);
std::string render_word(const Word& w);

/// Free (unreduced) linear combination of words.
using TermMap = std::unordered_map<Word, Rational, WordHash>;

void accumulate(TermMap& out, const Word& w, const Rational& c);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of Y(gl_{m|n}) in normal form: sorted (word, coefficient) pairs,
/// every word in normal order, no zero coefficients. Immutable value type.
class Element {
  public:
    using Term = std::pair<Word, Rational>;

    Element() = default;
    explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    const Algebra& algebra() const;
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const Shape& shape() const;

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Max word degree; 0 for scalars and for zero.
    int degree() const;
    bool is_scalar() const;
    /// Coefficient of the empty word.
    Rational constant_term() const;
    bool is_homogeneous() const;
    /// Parity of a homogeneous element (0 for zero); throws otherwise.
    int parity() const;
    /// (even part, odd part).
    std::pair<Element, Element> parity_parts() const;
    Element truncated(int degree_cap) const;

    /// Terms by (degree, word), words as t[i,j,r] joined with '*'.
    std::string str() const;

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& c);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);

  private:
    friend class Algebra;
    Element(AlgebraPtr algebra, std::vector<Term> terms)
        : algebra_(std::move(algebra)), terms_(std::move(terms)) {}

    void check_same(const Element& other) const;

    AlgebraPtr algebra_;
    std::vector<Term> terms_;
};

struct AlgebraOptions {
    /// Largest number of terms any produced element may hold; 0 disables the cap.
    std::size_t max_terms = 0;
};

/// One shape of the Yangian plus its rewriting cache. Create through
/// Algebra::create; the cache is internally synchronized.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    static AlgebraPtr create(Shape shape, AlgebraOptions options = {});

    const Shape& shape() const { return shape_; }
    const AlgebraOptions& options() const { return options_; }

    int parity(Generator g) const;
    int parity(const Word& w) const;
    bool valid(Generator g) const;
    void require_valid(Generator g) const;

    Element zero() const;
    Element one() const;
    Element scalar(const Rational& c) const;
    /// t_ij^(r); r = 0 yields the scalar delta_ij.
    Element t(int i, int j, int r) const;
    Element generator(Generator g) const;

    /// Closed form of [t_ij^(r), t_kl^(s)] as free words (not reduced).
    TermMap coeff_relation_raw(Generator a, Generator b) const;
    /// Closed form of [t_ij^(r), t_kl^(s)] in normal form.
    Element coeff_relation(Generator a, Generator b) const;

    Element normal_form(const TermMap& raw) const;
    Element multiply(const Element& a, const Element& b, std::optional<int> degree_cap = {}) const;
    /// ab - (-1)^{p(a)p(b)} ba, extended bilinearly over parity components.
    Element supercommutator(const Element& a, const Element& b) const;

    /// Applies one rewriting step to the adjacent pair (pos, pos+1) of w, then
    /// reduces the result. Throws if that pair is already in normal order.
    Element reduce_at(const Word& w, std::size_t pos) const;

    std::size_t memo_size() const;

  private:
    Algebra(Shape shape, AlgebraOptions options) : shape_(shape), options_(options) {}

    using Expansion = std::vector<Element::Term>;

    bool ordered_pair(Generator x, Generator y) const;
    void insert_right(const Word& w, Generator g, const Rational& c, TermMap& out) const;
    const Expansion& insertion(const Word& w, Generator g) const;
    void right_multiply(const Word& base, const Word& letters, const Rational& c, TermMap& out) const;
    Element make(TermMap&& acc) const;
    void enforce_cap(std::size_t terms) const;

    Shape shape_;
    AlgebraOptions options_;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Word, Expansion, WordHash> memo_;
};

}  // namespace yangian
