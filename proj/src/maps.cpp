#include "yangian/maps.hpp"

namespace yangian {

GeneratorImageTable::GeneratorImageTable(std::string name, AlgebraPtr source, AlgebraPtr target, int bound,
                                         MapKind kind, ReversalSign reversal)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      bound_(bound),
      kind_(kind),
      reversal_(reversal) {
    if (!source_ || !target_) throw Error("image table needs source and target algebras");
    if (bound_ < 1) throw Error("image table bound must be positive");
}

GeneratorImageTable GeneratorImageTable::identity(AlgebraPtr algebra, int bound) {
    GeneratorImageTable out("id", algebra, algebra, bound, MapKind::homomorphism);
    for (Generator g : generators_up_to(algebra->shape(), bound)) out.set(g, algebra->generator(g));
    return out;
}

void GeneratorImageTable::set(Generator g, Element image) {
    source_->require_valid(g);
    if (g.level() > bound_) throw DegreeBoundExceeded(name_ + ": generator " + g.str() + " above bound");
    if (image.shape() != target_->shape()) throw ShapeMismatch(name_ + ": image in the wrong shape");
    images_.insert_or_assign(g, std::move(image));
}

const Element& GeneratorImageTable::image(Generator g) const {
    auto it = images_.find(g);
    if (it == images_.end()) {
        if (g.level() > bound_)
            throw DegreeBoundExceeded(name_ + ": " + g.str() + " exceeds table bound " + std::to_string(bound_));
        throw InvalidIndex(name_ + ": no image for " + g.str());
    }
    return it->second;
}

Element GeneratorImageTable::apply_word(const Word& word, const Rational& coeff) const {
    Element prod = target_->scalar(coeff);
    if (kind_ == MapKind::homomorphism) {
        for (Generator g : word) prod = target_->multiply(prod, image(g));
        return prod;
    }
    int swaps = 0;
    if (reversal_ == ReversalSign::koszul) {
        int seen = 0;
        for (Generator g : word) {
            const int p = source_->parity(g);
            swaps += p * seen;
            seen += p;
        }
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it) prod = target_->multiply(prod, image(*it));
    return swaps & 1 ? -prod : prod;
}

Element GeneratorImageTable::apply(const Element& x) const {
    if (x.shape() != source_->shape()) throw ShapeMismatch(name_ + ": argument in shape " + x.shape().str());
    Element out = target_->zero();
    for (const auto& [word, coeff] : x.terms()) out += apply_word(word, coeff);
    return out;
}

Element GeneratorImageTable::apply_raw(const TermMap& raw) const {
    Element out = target_->zero();
    for (const auto& [word, coeff] : raw) out += apply_word(word, coeff);
    return out;
}

PowerSeries GeneratorImageTable::apply(const PowerSeries& s) const {
    return s.map_coefficients(target_, [this](const Element& c) { return apply(c); });
}

SuperMatrix GeneratorImageTable::apply(const SuperMatrix& M) const {
    return M.map_entries(target_, [this](const PowerSeries& s) { return apply(s); });
}

GeneratorImageTable GeneratorImageTable::then(const GeneratorImageTable& next) const {
    if (next.source_->shape() != target_->shape())
        throw ShapeMismatch("cannot compose " + next.name_ + " after " + name_);
    const bool anti = (kind_ == MapKind::anti_homomorphism) != (next.kind_ == MapKind::anti_homomorphism);
    const ReversalSign reversal = kind_ == MapKind::anti_homomorphism ? reversal_ : next.reversal_;
    GeneratorImageTable out(next.name_ + "." + name_, source_, next.target_, std::min(bound_, next.bound_),
                            anti ? MapKind::anti_homomorphism : MapKind::homomorphism, reversal);
    for (const auto& [g, img] : images_)
        if (g.level() <= out.bound_) out.set(g, next.apply(img));
    return out;
}

std::vector<Generator> GeneratorImageTable::differences(const GeneratorImageTable& other) const {
    if (source_->shape() != other.source_->shape() || target_->shape() != other.target_->shape())
        throw ShapeMismatch("comparing tables with different shapes");
    std::vector<Generator> out;
    for (const auto& [g, img] : images_) {
        auto it = other.images_.find(g);
        if (it == other.images_.end()) continue;
        if (!(img == it->second)) out.push_back(g);
    }
    return out;
}

std::vector<Generator> generators_up_to(const Shape& shape, int bound) {
    std::vector<Generator> out;
    for (int i = 1; i <= shape.size(); ++i)
        for (int j = 1; j <= shape.size(); ++j)
            for (int r = 1; r <= bound; ++r) out.emplace_back(i, j, r);
    return out;
}

GeneratorImageTable omega_table(AlgebraPtr algebra, int bound, Convention convention) {
    const SuperMatrix T_minus = SuperMatrix::build_T(algebra, bound, convention)
                                    .map_entries(algebra, [](const PowerSeries& s) { return s.negated_argument(); });
    const SuperMatrix image = T_minus.inverse().untwisted();
    GeneratorImageTable out("omega", algebra, algebra, bound, MapKind::homomorphism);
    for (Generator g : generators_up_to(algebra->shape(), bound)) out.set(g, image(g.i(), g.j())[g.level()]);
    return out;
}

GeneratorImageTable tau_table(AlgebraPtr algebra, int bound, ReversalSign reversal) {
    const Shape& shape = algebra->shape();
    GeneratorImageTable out("tau", algebra, algebra, bound, MapKind::anti_homomorphism, reversal);
    for (Generator g : generators_up_to(shape, bound)) {
        const int sign = (shape.parity(g.i()) * (shape.parity(g.j()) + 1)) & 1 ? -1 : 1;
        out.set(g, algebra->t(g.j(), g.i(), g.level()) * Rational(sign));
    }
    return out;
}

Element tau_apply(const Element& x, ReversalSign reversal) {
    int bound = std::max(1, x.degree());
    return tau_table(x.algebra_ptr(), bound, reversal).apply(x);
}

GeneratorImageTable rho_table(AlgebraPtr source, AlgebraPtr target, int bound) {
    const Shape& s = source->shape();
    if (target->shape() != Shape(s.n, s.m)) throw ShapeMismatch("rho maps (m|n) into (n|m)");
    const int top = s.size() + 1;
    GeneratorImageTable out("rho", source, target, bound, MapKind::homomorphism);
    for (Generator g : generators_up_to(s, bound))
        out.set(g, target->t(top - g.i(), top - g.j(), g.level()) * Rational(g.level() % 2 ? -1 : 1));
    return out;
}

GeneratorImageTable phi_table(AlgebraPtr source, AlgebraPtr target, int k, int bound) {
    const Shape& s = source->shape();
    if (k < 0) throw InvalidIndex("phi shift must be nonnegative");
    if (target->shape() != Shape(s.m + k, s.n)) throw ShapeMismatch("phi_k maps (m|n) into (m+k|n)");
    GeneratorImageTable out("phi", source, target, bound, MapKind::homomorphism);
    for (Generator g : generators_up_to(s, bound)) out.set(g, target->t(k + g.i(), k + g.j(), g.level()));
    return out;
}

Element phi_apply(const Element& x, AlgebraPtr target, int k) {
    int bound = std::max(1, x.degree());
    return phi_table(x.algebra_ptr(), std::move(target), k, bound).apply(x);
}

GeneratorImageTable psi_table(AlgebraPtr source, AlgebraPtr target, int k, int bound, Convention convention) {
    GeneratorImageTable out = omega_table(source, bound, convention)
                                  .then(phi_table(source, target, k, bound))
                                  .then(omega_table(target, bound, convention));
    out.set_name("psi_" + std::to_string(k));
    return out;
}

}  // namespace yangian
