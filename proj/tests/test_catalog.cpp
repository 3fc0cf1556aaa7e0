#include <doctest.h>

#include "opsplit/instances.hpp"

using namespace opsplit;

TEST_CASE("all 34 kinds are present") {
    CHECK(list_kinds().size() == 34);
    for (const char* name :
         {"comm-assoc", "lie", "pre-lie", "anti-pre-lie", "zinbiel", "anti-zinbiel",
          "dendriform", "anti-dendriform", "poisson", "transposed-poisson",
          "PCP", "PCA", "PZL", "PZP", "PZA", "PAL", "PAP", "PAA",
          "TCPO", "TCAO", "TZLO", "TZPO", "TZAO", "TALO", "TAPO", "TAAO",
          "TCPD", "TCAD", "TZLD", "TZPD", "TZAD", "TALD", "TAPD", "TAAD"})
        CHECK(kind(name).name == name);
}

TEST_CASE("lookup is case-insensitive and knows the aliases") {
    CHECK(kind("pcp").name == "PCP");
    CHECK(kind("Transposed-Poisson").name == "transposed-poisson");
    CHECK(kind("pre-poisson").name == "PZP");
    CHECK(kind("anti-pre-lie-poisson").name == "TCAD");
    CHECK_THROWS_AS(kind("nonsense"), UnknownKind);
}

TEST_CASE("table metadata") {
    const StructureKind& pca = kind("PCA");
    REQUIRE(pca.forms.has_value());
    CHECK(pca.forms->first == FormLaw::Invariant);
    CHECK(pca.forms->second == FormLaw::Commutative2Cocycle);
    CHECK(pca.canonical_form_flavor == 'd');
    CHECK(pca.rep->text == "(L_dot, -L_circ, A)");

    const StructureKind& pzp = kind("pre-poisson");
    CHECK(pzp.forms->first == FormLaw::ConnesCocycle);
    CHECK(pzp.forms->second == FormLaw::Symplectic);
    CHECK(pzp.canonical_form_flavor == 'p');

    CHECK_FALSE(kind("TCPO").forms.has_value());
    CHECK(kind("TAAD").rep->text == "(L*_star, -L*_circ, A*)");
    CHECK(kind("PZL").rep->text == "(L_star, ad, A)");
    CHECK(kind("TZLD").rep->text == "(-L*_star, ad*, A*)");

    // naming scheme: second letter = product splitting, third = bracket splitting
    for (const auto& k : list_kinds()) {
        if (!k.flavor) continue;
        CHECK(k.name[1] == k.flavor->product);
        CHECK(k.name[2] == k.flavor->bracket);
        if (k.name[0] == 'T' && k.name.size() == 4)
            CHECK((k.name[3] == 'D') == k.flavor->dual);
    }
}

TEST_CASE("every kind has a passing and a failing fixture") {
    const auto& inst = catalog_instances();
    const auto& fixtures = kind_fixtures();
    CHECK(fixtures.size() == 34);
    for (const auto& [kname, fx] : fixtures) {
        REQUIRE(!fx.passing.empty());
        REQUIRE(!fx.failing.empty());
        for (const auto& name : fx.passing)
            CHECK(check_structure(inst.algebras.at(name), kname).pass);
        for (const auto& name : fx.failing) {
            StructureReport r = check_structure(inst.algebras.at(name), kname);
            CHECK_FALSE(r.pass);
            CHECK(r.first_failure.has_value());
        }
    }
}

TEST_CASE("the zero algebra passes all 34 kinds") {
    const Algebra& zero3 = catalog_instances().algebras.at("zero3");
    for (const auto& k : list_kinds()) CHECK(check_structure(zero3, k).pass);
}

TEST_CASE("spec'd verdicts for the named witnesses") {
    const auto& inst = catalog_instances();
    CHECK(check_structure(inst.algebras.at("N2"), "comm-assoc").pass);
    Algebra n2_with_bracket = inst.algebras.at("N2P");
    CHECK(check_structure(n2_with_bracket, "poisson").pass);
    CHECK(check_structure(inst.algebras.at("TPA3"), "transposed-poisson").pass);
    CHECK_FALSE(check_structure(inst.algebras.at("TPA3"), "poisson").pass);
    CHECK(check_structure(inst.algebras.at("P3"), "poisson").pass);
    CHECK_FALSE(check_structure(inst.algebras.at("P3"), "transposed-poisson").pass);
    // Z2 satisfies both product splittings (its triple products all vanish)
    CHECK(check_structure(inst.algebras.at("Z2"), "zinbiel").pass);
    CHECK(check_structure(inst.algebras.at("Z2"), "anti-zinbiel").pass);
    // Z3 and AZ3 separate them
    CHECK(check_structure(inst.algebras.at("Z3"), "zinbiel").pass);
    CHECK_FALSE(check_structure(inst.algebras.at("Z3"), "anti-zinbiel").pass);
    CHECK(check_structure(inst.algebras.at("AZ3"), "anti-zinbiel").pass);
    CHECK_FALSE(check_structure(inst.algebras.at("AZ3"), "zinbiel").pass);
}

TEST_CASE("missing operations are reported, not misjudged") {
    CHECK_THROWS_AS(check_structure(catalog_instances().algebras.at("Z2"), "poisson"),
                    MissingOperation);
}

TEST_CASE("prerequisite failures name the violated layer") {
    StructureReport r = check_structure(catalog_instances().algebras.at("mismatch"), "PCP");
    REQUIRE(!r.pass);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->identity_id == "comm-assoc.commutativity");
    CHECK(r.results.back().id == r.first_failure->identity_id);
}
