#pragma once

// Morphisms between Yangians given by generator images up to a level bound:
// omega (T(u) -> T(-u)^{-1}), the anti-automorphism tau, rho into the
// opposite shape, the index shift phi, and psi_k = omega . phi . omega.

#include <map>
#include <string>

#include "yangian/matrix.hpp"

namespace yangian {

enum class MapKind { homomorphism, anti_homomorphism };

/// Sign rule when an anti-homomorphism reverses a product:
/// koszul gives tau(ab) = (-1)^{p(a)p(b)} tau(b) tau(a), plain drops the sign.
enum class ReversalSign { koszul, plain };

class DegreeBoundExceeded : public Error {
  public:
    using Error::Error;
};

class GeneratorImageTable {
  public:
    GeneratorImageTable(std::string name, AlgebraPtr source, AlgebraPtr target, int bound, MapKind kind,
                        ReversalSign reversal = ReversalSign::koszul);

    static GeneratorImageTable identity(AlgebraPtr algebra, int bound);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    int bound() const { return bound_; }
    MapKind kind() const { return kind_; }
    ReversalSign reversal() const { return reversal_; }

    void set(Generator g, Element image);
    const Element& image(Generator g) const;
    const std::map<Generator, Element>& images() const { return images_; }

    /// Multiplicative, linear extension; words must only use levels <= bound.
    Element apply(const Element& x) const;
    /// Image of a free (unreduced) combination of words.
    Element apply_raw(const TermMap& raw) const;
    Element apply_word(const Word& word, const Rational& coeff = 1) const;
    PowerSeries apply(const PowerSeries& s) const;
    SuperMatrix apply(const SuperMatrix& M) const;

    /// next . this, on the generators of this table's source.
    GeneratorImageTable then(const GeneratorImageTable& next) const;

    /// Generators whose images differ (same source/target shapes and bound required).
    std::vector<Generator> differences(const GeneratorImageTable& other) const;

  private:
    std::string name_;
    AlgebraPtr source_;
    AlgebraPtr target_;
    int bound_;
    MapKind kind_;
    ReversalSign reversal_;
    std::map<Generator, Element> images_;
};

/// Every generator of the shape with level 1..bound, in (i, j, r) order.
std::vector<Generator> generators_up_to(const Shape& shape, int bound);

GeneratorImageTable omega_table(AlgebraPtr algebra, int bound, Convention convention = Convention::plain);
/// t_ij^(r) -> (-1)^{i(j+1)} t_ji^(r), reversing products.
GeneratorImageTable tau_table(AlgebraPtr algebra, int bound, ReversalSign reversal = ReversalSign::koszul);
Element tau_apply(const Element& x, ReversalSign reversal = ReversalSign::koszul);
/// Into shape (n|m): t_ij^(r) -> (-1)^r t_{m+n+1-i, m+n+1-j}^(r).
GeneratorImageTable rho_table(AlgebraPtr source, AlgebraPtr target, int bound);
/// Into shape (m+k|n): t_ij^(r) -> t_{k+i, k+j}^(r).
GeneratorImageTable phi_table(AlgebraPtr source, AlgebraPtr target, int k, int bound);
Element phi_apply(const Element& x, AlgebraPtr target, int k);
/// omega_{m+k|n} . phi . omega_{m|n}.
GeneratorImageTable psi_table(AlgebraPtr source, AlgebraPtr target, int k, int bound,
                              Convention convention = Convention::plain);

}  // namespace yangian
