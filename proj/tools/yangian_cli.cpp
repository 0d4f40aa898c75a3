// Command-line front end: registry checks, normal forms, series display and
// the numeric oracles.
//
// Exit codes: 0 pass, 1 a check failed, 2 usage or parse error, 3 resource cap.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "yangian/berezinian.hpp"
#include "yangian/checks.hpp"
#include "yangian/expression.hpp"

namespace {

using namespace yangian;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

constexpr int kMaxSize = 8;
constexpr int kMaxOrder = 12;

struct Invocation {
    int m = 1;
    int n = 1;
    int order = 0;
    std::string convention = "plain";
    bool json = false;
    int jobs = 1;
    std::size_t max_terms = 5'000'000;
    bool no_eval = false;
    std::string target;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Shape shape_of(const Invocation& inv) {
    if (inv.m < 0 || inv.n < 0 || inv.m + inv.n < 1 || inv.m + inv.n > kMaxSize)
        throw UsageError("shape must satisfy 1 <= m + n <= " + std::to_string(kMaxSize));
    return Shape(inv.m, inv.n);
}

int order_of(const Invocation& inv, const Shape& shape) {
    if (inv.order == 0) return default_order(shape);
    if (inv.order < 1 || inv.order > kMaxOrder)
        throw UsageError("order must lie in 1.." + std::to_string(kMaxOrder));
    return inv.order;
}

std::optional<Convention> convention_of(const Invocation& inv) {
    if (inv.convention == "auto") return std::nullopt;
    return parse_convention(inv.convention);
}

Convention resolved_convention(const Invocation& inv, const Shape& shape, int order) {
    if (auto c = convention_of(inv)) return *c;
    return resolve_convention(shape, order, inv.max_terms);
}

int run_check_command(const Invocation& inv) {
    const Shape shape = shape_of(inv);
    CheckOptions options;
    options.order = order_of(inv, shape);
    options.convention = convention_of(inv);
    options.max_terms = inv.max_terms;
    options.eval_oracle = !inv.no_eval;

    std::vector<std::string> names;
    if (inv.target == "all") {
        for (const auto& name : check_names())
            if (check_applies(name, shape)) names.push_back(name);
    } else {
        const auto canonical = canonical_check_name(inv.target);
        if (!canonical) throw UsageError("unknown check '" + inv.target + "'; known: all, thm2, " + [] {
                                             std::string all;
                                             for (const auto& n : check_names()) all += (all.empty() ? "" : ", ") + n;
                                             return all;
                                         }());
        if (!check_applies(*canonical, shape))
            throw UsageError("check " + *canonical + " does not apply to shape " + shape.str());
        names.push_back(*canonical);
    }

    const std::vector<CheckReport> reports = run_checks(names, shape, options, inv.jobs);
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    if (inv.json) {
        if (inv.target == "all") {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& r : reports) out.push_back(to_json(r));
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << to_json(reports.front()).dump(2) << '\n';
        }
    } else {
        for (const auto& r : reports) std::cout << render_text(r);
    }
    return pass ? kPass : kFail;
}

int run_nf_command(const Invocation& inv) {
    const Shape shape = shape_of(inv);
    const int order = order_of(inv, shape);
    const ExprPtr expr = parse_expression(inv.target);
    const AlgebraPtr algebra = Algebra::create(shape, {inv.max_terms});
    ExpressionContext context(algebra, order, resolved_convention(inv, shape, order));
    const Value value = context.evaluate(expr);
    if (inv.json) {
        const char* kind = std::holds_alternative<Element>(value)      ? "element"
                           : std::holds_alternative<PowerSeries>(value) ? "series"
                                                                         : "bi_series";
        nlohmann::json out = {{"input", inv.target}, {"m", shape.m},       {"n", shape.n},
                              {"order", order},      {"kind", kind},       {"value", render(value)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::string text = render(value);
        if (!text.empty() && text.back() != '\n') text += '\n';
        std::cout << text;
    }
    return kPass;
}

int run_show_command(const Invocation& inv) {
    const Shape shape = shape_of(inv);
    const int order = order_of(inv, shape);
    const Convention convention = resolved_convention(inv, shape, order);
    const AlgebraPtr algebra = Algebra::create(shape, {inv.max_terms});
    nlohmann::json out = {{"show", inv.target},
                          {"m", shape.m},
                          {"n", shape.n},
                          {"order", order},
                          {"convention", to_string(convention)}};
    std::string text = inv.target + " " + shape.str() + " order " + std::to_string(order) + " convention " +
                       to_string(convention) + "\n";
    auto series_json = [](const PowerSeries& s) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
        return coeffs;
    };

    if (inv.target == "ber" || inv.target == "qdet") {
        const PowerSeries s = inv.target == "ber" ? berezinian_sum(algebra, order, convention)
                                                  : quantum_determinant(algebra, order);
        text += s.str();
        out["series"] = series_json(s);
    } else if (inv.target == "gauss") {
        const GaussFactors g = gauss(algebra, order);
        nlohmann::json factors = nlohmann::json::object();
        for (int i = 1; i <= shape.size(); ++i) {
            const std::string d = "d_" + std::to_string(i);
            text += d + ":\n" + g.d(i).str();
            factors[d] = series_json(g.d(i));
        }
        for (int i = 1; i < shape.size(); ++i) {
            const std::string e = "e_" + std::to_string(i), f = "f_" + std::to_string(i);
            text += e + ":\n" + g.e(i).str() + f + ":\n" + g.f(i).str();
            factors[e] = series_json(g.e(i));
            factors[f] = series_json(g.f(i));
        }
        out["factors"] = factors;
    } else {
        throw UsageError("show expects ber, qdet or gauss, got '" + inv.target + "'");
    }
    if (inv.json)
        std::cout << out.dump(2) << '\n';
    else
        std::cout << text;
    return kPass;
}

int run_oracle_command(const Invocation& inv) {
    const Shape shape = shape_of(inv);
    if (inv.target != "rtt" && inv.target != "rep")
        throw UsageError("oracle expects rtt or rep, got '" + inv.target + "'");
    const CheckReport report = run_oracle(inv.target, shape);
    if (inv.json)
        std::cout << to_json(report).dump(2) << '\n';
    else
        std::cout << render_text(report);
    return report.pass ? kPass : kFail;
}

void add_common(CLI::App& app, Invocation& inv) {
    app.add_option("--m", inv.m, "even block size")->capture_default_str();
    app.add_option("--n", inv.n, "odd block size")->capture_default_str();
    app.add_option("--order", inv.order, "truncation order N (default 4, or 3 when m + n >= 4)");
    app.add_option("--convention", inv.convention, "matrix convention for T(u)")
        ->check(CLI::IsMember({"plain", "twisted", "auto"}))
        ->capture_default_str();
    app.add_flag("--json", inv.json, "machine-readable output");
    app.add_option("--jobs", inv.jobs, "worker threads for check all")->check(CLI::Range(1, 256));
    app.add_option("--max-terms", inv.max_terms, "largest element size before giving up (0 = no cap)")
        ->envname("YANGIAN_MAX_TERMS")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    Invocation inv;
    CLI::App app{"Super Yangian identity checker"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run registry checks");
    check->add_option("name", inv.target, "check name or all")->required();
    check->add_flag("--no-eval", inv.no_eval, "skip the evaluation representation replay");
    auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
    nf->add_option("expr", inv.target, "expression")->required();
    auto* show = app.add_subcommand("show", "print ber, qdet or the Gauss factors");
    show->add_option("what", inv.target, "ber, qdet or gauss")->required();
    auto* oracle = app.add_subcommand("oracle", "numeric oracle runs");
    oracle->add_option("which", inv.target, "rtt or rep")->required();
    for (auto* sub : {check, nf, show, oracle}) add_common(*sub, inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (check->parsed()) return run_check_command(inv);
        if (nf->parsed()) return run_nf_command(inv);
        if (show->parsed()) return run_show_command(inv);
        return run_oracle_command(inv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (!inv.target.empty()) std::cerr << "  " << inv.target << "\n  " << std::string(e.position(), ' ') << "^\n";
        return kUsage;
    } catch (const InvalidIndex& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ExpressionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnknownCheck& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << '\n';
        return kResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kFail;
    }
}
