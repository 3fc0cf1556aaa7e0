#include <doctest.h>

#include <nlohmann/json.hpp>

#include "opsplit/suite.hpp"

using namespace opsplit;

TEST_CASE("filtered suite runs pass") {
    SuiteReport r = run_suite("P5.dualrep.", 42);
    CHECK(r.pass);
    CHECK(r.results.size() == 2);
    for (const auto& c : r.results) CHECK(c.id.rfind("P5.dualrep.", 0) == 0);
}

TEST_CASE("unknown filters raise UnknownCaseId") {
    CHECK_THROWS_AS(run_suite("nonexistent.", 42), UnknownCaseId);
}

TEST_CASE("reports are reproducible under a fixed seed") {
    SuiteReport a = run_suite("P3.PZP.", 42);
    SuiteReport b = run_suite("P3.PZP.", 42);
    CHECK(report_text(a) == report_text(b));
    CHECK(report_json(a).dump() == report_json(b).dump());
    CHECK(a.pass);
}

TEST_CASE("case ids are unique and ordered") {
    const auto& cases = suite_cases();
    for (std::size_t i = 1; i < cases.size(); ++i)
        CHECK(cases[i - 1].id < cases[i].id);
}

TEST_CASE("coverage: every mixed kind has sub-adjacent and double cases") {
    const auto& cases = suite_cases();
    auto has = [&](const std::string& id) {
        for (const auto& c : cases)
            if (c.id == id) return true;
        return false;
    };
    for (const auto& k : list_kinds()) {
        if (!k.family) continue;
        std::string section = !k.flavor->dual
                                  ? (*k.family == Family::Poisson ? "P3." : "P4.")
                                  : "P5.";
        CHECK(has(section + k.name + ".subadjacent"));
        CHECK(has(section + k.name + ".double-iff"));
        if (k.forms) {
            CHECK(has(section + k.name + ".form-a"));
            CHECK(has(section + k.name + ".form-b"));
        }
    }
}

TEST_CASE("field conversion embeds catalog instances into F5") {
    const Algebra& tpa3 = catalog_instances().algebras.at("TPA3");
    Algebra mod5 = algebra_to_field(tpa3, Field::prime(5));
    CHECK(mod5.field.p == 5);
    CHECK(check_structure(mod5, "transposed-poisson").pass);
    CHECK_FALSE(check_structure(mod5, "poisson").pass);
}

TEST_CASE("the tower generator yields the requested number of representations") {
    auto reps = poisson_rep_towers(10);
    CHECK(reps.size() == 10);
    for (const auto& r : reps) CHECK(check_rep_poisson(r).pass);
}
