#pragma once

// Named identity checks. Each one builds both sides of an identity to a fixed
// order, compares normal forms coefficient by coefficient and collects the
// residuals of every mismatch. Products and brackets that feed a comparison
// are replayed in the evaluation representation when one exists.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "yangian/maps.hpp"
#include "yangian/oracle.hpp"

namespace yangian {

struct Witness {
    std::string label;
    std::string location;
    std::string residual;
    /// "symbolic" for a normal-form mismatch, "eval" for a representation mismatch.
    std::string source = "symbolic";
};

struct CheckOptions {
    /// 0 selects the default for the shape.
    int order = 0;
    /// nullopt resolves the convention with the Gauss probe.
    std::optional<Convention> convention = Convention::plain;
    bool eval_oracle = true;
    std::size_t max_terms = 0;
    ReversalSign tau_reversal = ReversalSign::koszul;
    std::size_t max_witnesses = 20;
};

struct CheckReport {
    std::string check;
    Shape shape;
    int order = 0;
    std::string convention;
    bool pass = false;
    std::vector<Witness> witnesses;
    /// Failures found, including those beyond the stored witnesses.
    std::size_t failures = 0;
    std::size_t comparisons = 0;
    std::size_t eval_comparisons = 0;
    std::vector<std::string> notes;
    double elapsed_ms = 0;
};

nlohmann::json to_json(const CheckReport& report);
std::string render_text(const CheckReport& report);

/// Collects comparisons for one check.
class Verifier {
  public:
    Verifier(AlgebraPtr algebra, const CheckOptions& options);

    const AlgebraPtr& algebra() const { return algebra_; }
    /// Algebra of another shape with the same resource options (cached).
    AlgebraPtr algebra_for(const Shape& shape);
    /// Evaluation representation of a shape, if the oracle is enabled and one exists.
    const EvalRep* rep(const Shape& shape);

    bool equal(const std::string& label, const std::string& location, const Element& lhs, const Element& rhs);
    bool zero(const std::string& label, const std::string& location, const Element& x);
    bool series_equal(const std::string& label, const PowerSeries& lhs, const PowerSeries& rhs);
    bool bi_equal(const std::string& label, const BiSeries& lhs, const BiSeries& rhs);
    /// Numeric comparison of an expected evaluation against the evaluation of x.
    bool eval_equal(const std::string& label, const std::string& location, const QMatrix& expected,
                    const Element& x);
    bool eval_series_equal(const std::string& label, const MatrixSeries& expected, const PowerSeries& x);
    void fail(const std::string& label, const std::string& location, const std::string& residual,
              const std::string& source = "symbolic");
    void note(std::string text);

    /// Engine product and supercommutator, replayed in the representation.
    Element mul(const Element& a, const Element& b);
    Element bracket(const Element& a, const Element& b);
    /// Cauchy product of series, replayed coefficientwise in the representation.
    PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
    /// a(u) b(v) and [a(u), b(v)] with every coefficient product replayed.
    BiSeries bi_product(const PowerSeries& a_u, const PowerSeries& b_v);
    BiSeries bi_bracket(const PowerSeries& a_u, const PowerSeries& b_v);

    void fill(CheckReport& report) const;

  private:
    AlgebraPtr algebra_;
    CheckOptions options_;
    std::map<Shape, AlgebraPtr> algebras_;
    std::map<Shape, std::optional<EvalRep>> reps_;
    std::vector<Witness> witnesses_;
    std::size_t failures_ = 0;
    std::size_t comparisons_ = 0;
    std::size_t eval_comparisons_ = 0;
    std::vector<std::string> notes_;
};

struct CheckContext {
    Shape shape;
    int order;
    Convention convention;
    CheckOptions options;
    Verifier& verify;
    const AlgebraPtr& algebra() const { return verify.algebra(); }
};

struct CheckInfo {
    std::string name;
    std::string summary;
    std::function<bool(const Shape&)> applies;
    std::function<void(CheckContext&)> run;
};

/// Registered checks in canonical order.
const std::vector<CheckInfo>& check_registry();
std::vector<std::string> check_names();
/// Canonical name for a name or alias; nullopt when unknown.
std::optional<std::string> canonical_check_name(const std::string& name);
bool check_applies(const std::string& name, const Shape& shape);

class UnknownCheck : public Error {
  public:
    using Error::Error;
};

/// N = 4, except N = 3 for shapes with m + n >= 4.
int default_order(const Shape& shape);

/// The convention under which F.D.E = T holds at the given order. Throws when
/// neither or both pass.
Convention resolve_convention(const Shape& shape, int order, std::size_t max_terms = 0);

/// Throws UnknownCheck for unknown names and lets ResourceLimitExceeded escape.
CheckReport run_check(const std::string& name, const Shape& shape, const CheckOptions& options = {});

/// Runs several checks on a pool of `jobs` workers; results sorted by name.
/// Exceptions from any worker are rethrown after all workers finish.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const Shape& shape,
                                    const CheckOptions& options, int jobs = 1);

/// Numeric oracle runs: "rep" (sign family search) and "rtt" (tensor RTT).
CheckReport run_oracle(const std::string& which, const Shape& shape);

}  // namespace yangian
