#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "opsplit/algfile.hpp"
#include "opsplit/instances.hpp"

using namespace opsplit;
using nlohmann::json;

namespace {

AlgebraFile round_trip(const AlgebraFile& f) {
    return algebra_file_from_json(json::parse(to_json(f).dump()));
}

} // namespace

TEST_CASE("every catalog algebra round-trips exactly") {
    for (const auto& [name, a] : catalog_instances().algebras) {
        AlgebraFile f;
        f.algebra = a;
        AlgebraFile back = round_trip(f);
        CHECK(back.algebra == a);
    }
}

TEST_CASE("forms and representations round-trip") {
    AlgebraFile f;
    f.algebra = catalog_instances().algebras.at("P3");
    f.forms["bd"] = canonical_form(1, 'd', f.algebra.field);
    f.forms["antidiag"] = catalog_instances().forms.at("antidiag3").form;
    f.reps["adjoint"] = catalog_instances().reps.at("P3.adjoint");
    // canonical_form(1,-) is 2x2; store a matching 3x3 instead
    f.forms.erase("bd");
    AlgebraFile back = round_trip(f);
    CHECK(back.forms.at("antidiag") == f.forms.at("antidiag"));
    CHECK(back.reps.at("adjoint") == f.reps.at("adjoint"));
}

TEST_CASE("prime-field documents") {
    AlgebraFile f;
    f.algebra = Algebra(2, Field::prime(5));
    OpTensor t(2, Field::prime(5));
    t.at(0, 0, 1) = Scalar::residue(3, 5);
    f.algebra.add_op("star", t);
    AlgebraFile back = round_trip(f);
    CHECK(back.algebra == f.algebra);
    CHECK(to_json(f)["field"] == "F5");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(algebra_file_from_json(json::parse("[]")), ParseError);
    CHECK_THROWS_AS(algebra_file_from_json(json::parse(R"({"dim": -1, "field": "Q"})")),
                    ParseError);
    CHECK_THROWS_AS(algebra_file_from_json(json::parse(R"({"dim": 2, "field": "F6"})")),
                    InvalidField);
    // out-of-range index
    CHECK_THROWS_AS(algebra_file_from_json(json::parse(
                        R"({"dim": 2, "field": "Q", "ops": {"dot": [[0, 0, 2, "1"]]}})")),
                    ParseError);
    // duplicate triplet
    CHECK_THROWS_AS(
        algebra_file_from_json(json::parse(
            R"({"dim": 2, "field": "Q", "ops": {"dot": [[0,0,1,"1"],[0,0,1,"2"]]}})")),
        ParseError);
    // fractional coefficient in a prime field
    CHECK_THROWS_AS(algebra_file_from_json(json::parse(
                        R"({"dim": 1, "field": "F5", "ops": {"dot": [[0,0,0,"1/2"]]}})")),
                    ParseError);
    // floating-point numbers are rejected outright
    CHECK_THROWS_AS(algebra_file_from_json(json::parse(
                        R"({"dim": 1, "field": "Q", "ops": {"dot": [[0,0,0,1.5]]}})")),
                    ParseError);
}

TEST_CASE("files on disk") {
    std::string path = "opsplit_test_roundtrip.json";
    AlgebraFile f;
    f.algebra = catalog_instances().algebras.at("TPA3");
    save_algebra_file(path, f);
    AlgebraFile back = load_algebra_file(path);
    CHECK(back.algebra == f.algebra);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_algebra_file("does_not_exist.json"), ParseError);

    std::ofstream bad("opsplit_test_bad.json");
    bad << "{ not json";
    bad.close();
    CHECK_THROWS_AS(load_algebra_file("opsplit_test_bad.json"), ParseError);
    std::remove("opsplit_test_bad.json");
}

TEST_CASE("omitted entries are zero and integers are accepted") {
    AlgebraFile f = algebra_file_from_json(json::parse(
        R"({"dim": 2, "field": "Q", "ops": {"dot": [[0, 0, 1, -2]]}})"));
    CHECK(f.algebra.op("dot").at(0, 0, 1) == Scalar::rational(-2));
    CHECK(f.algebra.op("dot").at(1, 1, 1).is_zero());
}
