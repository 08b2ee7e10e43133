#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jackal/verify.hpp"

using namespace jackal;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const AlphaPoly A = AlphaPoly::alpha();

std::string pi_of(const PiTable& t, const std::string& cls) {
    for (const auto& [rep, poly] : t.pi)
        if (rep.str() == cls) return poly.str();
    return "<missing " + cls + ">";
}

}  // namespace

TEST_CASE("proven-statement suites pass at small bounds") {
    Engine e;
    for (const Report& r : {suite_translation(e, 5), suite_rotation(e, 6), suite_duality(e, 5),
                            suite_prefix(e, 5), suite_split(e, 4), suite_consistency(e, 5)}) {
        CAPTURE(r.suite);
        CHECK(r.ok());
        CHECK(r.cases > 0);
        CHECK_FALSE(r.regressions());
    }
}

TEST_CASE("verify_all bundles the six proven suites") {
    Engine e;
    std::vector<Report> reports = verify_all(e, 4);
    REQUIRE(reports.size() == 6);
    std::vector<std::string> names;
    for (const Report& r : reports) {
        names.push_back(r.suite);
        CHECK(r.ok());
    }
    CHECK(names == std::vector<std::string>{"translation", "rotation", "duality", "prefix",
                                            "split", "consistency"});
}

TEST_CASE("report serialization") {
    Engine e;
    Report r = suite_translation(e, 3);
    nlohmann::json j = r.to_json();
    CHECK(j.at("suite") == "translation");
    CHECK(j.at("bound") == 3);
    CHECK(j.at("cases").get<std::size_t>() == r.cases);
    CHECK(j.at("failures").is_array());
    CHECK(j.at("failures").empty());
    CHECK(j.at("ms").is_number());

    std::string t = r.text();
    CHECK(t.find("suite translation (bound 3): ") == 0);
    CHECK(t.find(" cases, pass [") != std::string::npos);

    Report bad;
    bad.suite = "demo";
    bad.bound = 1;
    bad.cases = 2;
    bad.failures.push_back({{{"lambda", "2,1"}}, "0", "1", true});
    bad.failures.push_back({{{"lambda", "3"}}, "x", "y", false});
    CHECK(bad.regressions());
    std::string bt = bad.text();
    CHECK(bt.find("2 failures") != std::string::npos);
    CHECK(bt.find("regression ") != std::string::npos);
    CHECK(bt.find("finding    ") != std::string::npos);
    CHECK(bt.find("lhs: 0") != std::string::npos);
    nlohmann::json bj = bad.to_json();
    REQUIRE(bj.at("failures").size() == 2);
    CHECK(bj.at("failures")[0].at("rhs") == "1");

    Report finding_only;
    finding_only.failures.push_back({{}, "a", "b", false});
    CHECK_FALSE(finding_only.regressions());
    CHECK_FALSE(finding_only.ok());
}

TEST_CASE("split suite records its variable counts") {
    Engine e;
    Report r = suite_split(e, 3, 2, 1);
    CHECK(r.ok());
    CHECK(r.bound.at("max_size") == 3);
    CHECK(r.bound.at("xvars") == 2);
    CHECK(r.bound.at("yvars") == 1);
}

TEST_CASE("conjecture sweeps come back clean at small bounds") {
    Engine e;
    for (const Report& r : {conjecture_main(e, 5), conjecture_stanley(e, 5),
                            conjecture_linear_factors(e, 5), conjecture_ratio(e, 5)}) {
        CAPTURE(r.suite);
        CHECK(r.ok());
        CHECK(r.cases > 0);
    }
    CHECK(conjecture_main(e, 5).suite == "main");
    CHECK(conjecture_stanley(e, 5).suite == "stanley");
    CHECK(conjecture_linear_factors(e, 5).suite == "linear-factors");
    CHECK(conjecture_ratio(e, 5).suite == "ratio");
}

TEST_CASE("default family for the lowest-coefficient system") {
    std::vector<Partition> fam = lowest_default_family(P({2}), 4);
    // partitions of 2..4 containing (2)
    std::vector<std::string> got;
    for (const Partition& lam : fam) got.push_back(lam.str());
    CHECK(got == std::vector<std::string>{"2", "3", "2,1", "4", "3,1", "2,2", "2,1,1"});
}

TEST_CASE("single-box table solves to alpha") {
    Engine e;
    PiTable t = solve_lowest(e, P({1}), lowest_default_family(P({1}), 5));
    CHECK(t.consistent);
    CHECK(t.unique);
    CHECK(t.nonneg);
    CHECK(t.undetermined.empty());
    REQUIRE(t.pi.size() == 1);
    CHECK(t.pi[0].first.str() == "(1,1)");
    CHECK(t.pi[0].second == A);
}

TEST_CASE("two-box tables match the frozen class polynomials") {
    Engine e;
    PiTable row = solve_lowest(e, P({2}), lowest_default_family(P({2}), 6));
    CHECK(row.consistent);
    CHECK(row.unique);
    CHECK(row.nonneg);
    CHECK(row.pi.size() == 2);
    CHECK(pi_of(row, "(1,1)(1,2)") == "2α³+2α²");
    CHECK(pi_of(row, "(1,1)(2,2)") == "2α²");

    PiTable col = solve_lowest(e, P({1, 1}), lowest_default_family(P({1, 1}), 6));
    CHECK(col.consistent);
    CHECK(col.unique);
    CHECK(col.nonneg);
    CHECK(pi_of(col, "(1,1)(2,1)") == "2α²+2α");
    CHECK(pi_of(col, "(1,1)(2,2)") == "2α²");

    // the diagram class always carries the squared norm of mu
    CHECK(pi_of(row, "(1,1)(1,2)") == hook_products(P({2})).j.str());
    CHECK(pi_of(col, "(1,1)(2,1)") == hook_products(P({1, 1})).j.str());
}

TEST_CASE("an underdetermined family is reported as such") {
    Engine e;
    // one equation, two classes appearing: 2 pi_row + 2 pi_diag = v
    PiTable t = solve_lowest(e, P({2}), {P({2, 2})});
    CHECK(t.consistent);
    CHECK_FALSE(t.unique);
    CHECK(t.undetermined.size() == 2);
    CHECK(t.pi.empty());

    // the trivial family pins the only class it ever sees
    PiTable one = solve_lowest(e, P({2}), {P({2})});
    CHECK(one.unique);
    CHECK(one.undetermined.empty());
    REQUIRE(one.pi.size() == 1);
    CHECK(one.pi[0].second == hook_products(P({2})).j);
}

TEST_CASE("residual check accepts the solved table and rejects a perturbed one") {
    Engine e;
    PiTable t = solve_lowest(e, P({2}), lowest_default_family(P({2}), 6));
    CHECK(!lowest_residual(e, t, P({4, 3})).has_value());
    CHECK(!lowest_residual(e, t, P({2, 2, 2})).has_value());
    CHECK(lowest_residual(e, t, P({1, 1})).has_value());  // does not contain mu

    PiTable bad = t;
    bad.pi[0].second += AlphaPoly(1);
    CHECK(lowest_residual(e, bad, P({4, 3})).has_value());

    PiTable holey = t;
    holey.undetermined.push_back(holey.pi.back().first);
    holey.pi.pop_back();
    CHECK(lowest_residual(e, holey, P({4, 3})).has_value());
}

TEST_CASE("lowest-coefficient conjecture run") {
    Engine e;
    PiTable t;
    Report r = conjecture_lowest(e, P({1}), 6, {}, &t);
    CHECK(r.suite == "lowest");
    CHECK(r.bound.at("mu") == "1");
    CHECK(r.bound.at("max_size") == 6);
    CHECK(r.ok());
    CHECK(r.cases > 0);
    CHECK(t.consistent);
    CHECK(t.pi.size() == 1);
    CHECK(t.pi[0].second == A);

    Report r2 = conjecture_lowest(e, P({2, 1}), 7);
    CHECK(r2.ok());
}

TEST_CASE("table serialization") {
    Engine e;
    PiTable t = solve_lowest(e, P({1}), lowest_default_family(P({1}), 4));
    nlohmann::json j = t.to_json();
    CHECK(j.at("mu") == "1");
    CHECK(j.at("consistent") == true);
    CHECK(j.at("unique") == true);
    CHECK(j.at("nonneg") == true);
    REQUIRE(j.at("pi").size() == 1);
    CHECK(j.at("pi")[0].at("class") == "(1,1)");
    CHECK(j.at("pi")[0].at("pi") == "α");
    CHECK(j.at("undetermined").empty());

    std::string txt = t.text();
    CHECK(txt.find("mu = 1") != std::string::npos);
    CHECK(txt.find("pi[(1,1)] = α") != std::string::npos);
    CHECK(txt.find("consistent: yes, unique: yes, nonnegative integers: yes") !=
          std::string::npos);
}
