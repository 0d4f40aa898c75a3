#include "doctest.h"
#include "yangian/checks.hpp"

using namespace yangian;

namespace {

CheckOptions at_order(int order) {
    CheckOptions o;
    o.order = order;
    return o;
}

}  // namespace

TEST_CASE("registry names and aliases") {
    const auto names = check_names();
    CHECK(names.front() == "rtt_coeff");
    CHECK(canonical_check_name("thm2") == "thm2_centrality");
    CHECK(!canonical_check_name("bogus"));
    CHECK(check_applies("case1", Shape(2, 1)));
    CHECK(!check_applies("case1", Shape(1, 1)));
    CHECK_THROWS_AS(run_check("bogus", Shape(1, 1)), UnknownCheck);
    CHECK(default_order(Shape(2, 2)) == 3);
    CHECK(default_order(Shape(2, 1)) == 4);
}

TEST_CASE("small checks pass in (1|1)") {
    CHECK(run_check("rtt_coeff", Shape(1, 1), at_order(2)).pass);
    const CheckReport thm1 = run_check("thm1", Shape(1, 1), at_order(5));
    CHECK(thm1.pass);
    CHECK(thm1.convention == "plain");
    CHECK(thm1.eval_comparisons > 0);
    CHECK(run_check("case3", Shape(1, 1), at_order(4)).pass);
}

TEST_CASE("the twisted layout fails the Gauss check") {
    CheckOptions o = at_order(3);
    o.convention = Convention::twisted;
    const CheckReport r = run_check("gauss", Shape(1, 1), o);
    CHECK(!r.pass);
    CHECK(!r.witnesses.empty());
    CHECK(r.failures >= r.witnesses.size());
    CHECK(resolve_convention(Shape(1, 1), 3) == Convention::plain);
}

TEST_CASE("reports are deterministic") {
    const CheckReport a = run_check("thm2", Shape(1, 1), at_order(4));
    const CheckReport b = run_check("thm2", Shape(1, 1), at_order(4));
    nlohmann::json ja = to_json(a), jb = to_json(b);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
}

TEST_CASE("json fields and types are stable") {
    CheckOptions o = at_order(3);
    o.convention = Convention::twisted;
    for (const CheckReport& r : {run_check("gauss", Shape(1, 1), at_order(3)), run_check("gauss", Shape(1, 1), o),
                                 run_oracle("rtt", Shape(1, 1))}) {
        const nlohmann::json j = to_json(r);
        CHECK(j.at("check").is_string());
        CHECK(j.at("m").is_number_integer());
        CHECK(j.at("n").is_number_integer());
        CHECK(j.at("order").is_number_integer());
        CHECK(j.at("convention").is_string());
        CHECK((j.at("verdict") == "pass" || j.at("verdict") == "fail"));
        CHECK(j.at("witnesses").is_array());
        CHECK(j.at("elapsed_ms").is_number());
        for (const auto& w : j.at("witnesses")) {
            CHECK(w.at("label").is_string());
            CHECK(w.at("location").is_string());
            CHECK(w.at("residual").is_string());
            CHECK(w.at("source").is_string());
        }
    }
}

TEST_CASE("parallel runs match serial runs") {
    const std::vector<std::string> names{"thm1", "gauss", "thm2_centrality", "inverse_relation", "remark22"};
    const auto serial = run_checks(names, Shape(1, 1), at_order(3), 1);
    const auto parallel = run_checks(names, Shape(1, 1), at_order(3), 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].check == parallel[k].check);
        CHECK(serial[k].pass == parallel[k].pass);
        CHECK(serial[k].comparisons == parallel[k].comparisons);
    }
    CHECK(std::is_sorted(serial.begin(), serial.end(),
                         [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; }));
}

TEST_CASE("resource cap escapes from run_check") {
    CheckOptions o = at_order(4);
    o.max_terms = 5;
    CHECK_THROWS_AS(run_check("thm1", Shape(2, 1), o), ResourceLimitExceeded);
}
