// Acceptance gate: one criterion per section, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opsplit/algfile.hpp"
#include "opsplit/construct.hpp"
#include "opsplit/rng.hpp"
#include "opsplit/suite.hpp"

using namespace opsplit;

namespace {

struct Criterion {
    bool ok = true;
    std::vector<std::string> problems;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            problems.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

const Algebra& alg(const std::string& name) { return catalog_instances().algebras.at(name); }

// 1. all 34 kinds load, each with a passing and a failing fixture; the zero
//    algebra passes everything; under 5 s.
void criterion_1(Criterion& c) {
    c.expect(list_kinds().size() == 34, "expected 34 kinds");
    const auto& fixtures = kind_fixtures();
    c.expect(fixtures.size() == 34, "fixtures cover all kinds");
    for (const auto& [kname, fx] : fixtures) {
        c.expect(!fx.passing.empty() && !fx.failing.empty(),
                 kname + ": needs both fixture polarities");
        for (const auto& name : fx.passing)
            c.expect(check_structure(alg(name), kname).pass, kname + ": " + name + " must pass");
        for (const auto& name : fx.failing)
            c.expect(!check_structure(alg(name), kname).pass, kname + ": " + name + " must fail");
    }
    for (const auto& k : list_kinds())
        c.expect(check_structure(alg("zero3"), k).pass, "zero3 must pass " + k.name);
}

// 2. sub-adjacent structures and the table representations, all 24 mixed
//    kinds, every catalog instance; under 30 s.
void criterion_2(Criterion& c) {
    for (const auto& k : list_kinds()) {
        if (!k.family) continue;
        for (const auto& name : kind_fixtures().at(k.name).passing) {
            const Algebra& a = alg(name);
            Algebra sub = sub_adjacent(a, k);
            c.expect(check_structure(sub, family_name(*k.family)).pass,
                     k.name + "(" + name + "): sub-adjacent family check");
            c.expect(check_rep(designated_rep(a, k), *k.family).pass,
                     k.name + "(" + name + "): table representation " + k.rep->text);
        }
    }
}

// 3. sampled double-space equivalences: zero discrepancies over 500 random
//    dim-2 F5 samples per kind plus injected positives; under 3 min.
void criterion_3(Criterion& c, std::uint64_t seed) {
    const Field f5 = Field::prime(5);
    for (const auto& k : list_kinds()) {
        if (!k.family) continue;
        Rng rng(seed ^ std::hash<std::string>{}(k.name));
        long checked = 0;
        bool saw_positive = false;
        auto check_one = [&](const Algebra& a, const std::string& label) {
            bool lhs = check_structure(a, k).pass;
            bool rhs = check_structure(double_space(a, *k.flavor), family_name(*k.family)).pass;
            c.expect(lhs == rhs, k.name + ": discrepancy at " + label);
            saw_positive |= lhs;
            ++checked;
        };
        for (const auto& name : kind_fixtures().at(k.name).passing)
            check_one(algebra_to_field(alg(name), f5), name);
        for (int s = 0; s < 500; ++s)
            check_one(random_ops_algebra(rng, k.required_ops, 2, f5),
                      "sample " + std::to_string(s));
        c.expect(saw_positive && checked > 500, k.name + ": positives injected");
    }
}

// 4. duals of 100 constructed Poisson representations all represent.
void criterion_4(Criterion& c) {
    auto reps = poisson_rep_towers(100);
    c.expect(reps.size() == 100, "tower generator must yield 100 representations");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        c.expect(check_rep_poisson(reps[i]).pass, "representation " + std::to_string(i));
        c.expect(check_rep_poisson(dual_rep(reps[i], 1, 1)).pass,
                 "dual of representation " + std::to_string(i));
        if (!c.ok) break;
    }
}

// 5. transposed-Poisson dual criterion, both directions on every witness.
void criterion_5(Criterion& c) {
    const auto& reps = catalog_instances().reps;
    const RepTriple& tpa3 = reps.at("TPA3.adjoint");
    c.expect(!check_tpa_dual_conditions(tpa3).pass, "TPA3 adjoint violates the criterion");
    c.expect(!check_rep_tpa(dual_rep(tpa3, 1, 1)).pass, "TPA3 adjoint dual must fail");
    const RepTriple& trivial = reps.at("ZL3sub.adjoint");
    c.expect(check_tpa_dual_conditions(trivial).pass, "trivial adjoint meets the criterion");
    c.expect(check_rep_tpa(dual_rep(trivial, 1, 1)).pass, "trivial adjoint dual must pass");

    std::vector<std::pair<std::string, RepTriple>> witnesses = {
        {"TPA3.adjoint", tpa3},
        {"ZL3sub.adjoint", trivial},
        {"N2P.adjoint", adjoint_rep(alg("N2P"))},
        {"aff2P.adjoint", adjoint_rep(alg("aff2P"))},
        {"zero3.zero", zero_rep(alg("zero3"), 2)},
        {"TCAD3.designated", designated_rep(alg("TCAD3"), kind("TCAD"))},
    };
    for (const auto& [name, r] : witnesses) {
        if (!check_rep_tpa(r).pass) continue;
        c.expect(check_tpa_dual_conditions(r).pass == check_rep_tpa(dual_rep(r, 1, 1)).pass,
                 "criterion iff on " + name);
    }
}

// 6. the eight table rows with listed forms, both directions.
void criterion_6(Criterion& c) {
    for (const auto& k : list_kinds()) {
        if (!k.forms) continue;
        const auto [product_law, bracket_law] = *k.forms;
        for (const auto& name : kind_fixtures().at(k.name).passing) {
            const Algebra& a = alg(name);
            Algebra d = double_space(a, DoubleFlavor{k.flavor->product, k.flavor->bracket, true});
            BilinForm b = canonical_form(a.dim, k.canonical_form_flavor, a.field);
            c.expect(satisfies_form_law(d, "dot", b, product_law),
                     k.name + "(" + name + "): " + form_law_name(product_law) + " on the double");
            c.expect(satisfies_form_law(d, "bracket", b, bracket_law),
                     k.name + "(" + name + "): " + form_law_name(bracket_law) + " on the double");
        }

        const auto& row = form_row_fixtures().at(k.name);
        const Algebra& a = alg(row.algebra);
        const BilinForm& b = catalog_instances().forms.at(row.form).form;
        c.expect(satisfies_form_law(a, "dot", b, product_law),
                 k.name + " fixture: " + form_law_name(product_law));
        c.expect(satisfies_form_law(a, "bracket", b, bracket_law),
                 k.name + " fixture: " + form_law_name(bracket_law));
        Algebra split(a.dim, a.field);
        if (k.flavor->product == 'C')
            split.add_op("dot", a.op("dot"));
        else
            split.add_op("star",
                         induced_op(a, "dot", b,
                                    k.flavor->product == 'Z' ? InducedRule::Zinbiel
                                                             : InducedRule::AntiZinbiel));
        if (k.flavor->bracket == 'L')
            split.add_op("bracket", a.op("bracket"));
        else
            split.add_op("circ",
                         induced_op(a, "bracket", b,
                                    k.flavor->bracket == 'P' ? InducedRule::PreLie
                                                             : InducedRule::AntiPreLie));
        c.expect(check_structure(split, k).pass, k.name + ": induced splitting passes the kind");
        Algebra sub = sub_adjacent_unchecked(split, *k.flavor);
        c.expect(sub.op("dot") == a.op("dot") && sub.op("bracket") == a.op("bracket"),
                 k.name + ": sub-adjacent operations equal the originals");
    }
}

// 7. TZLO/TALO sub-adjacents are trivial and also Poisson.
void criterion_7(Criterion& c) {
    IdentityExpr bracket_of_product{
        "trivial.bracket-of-product", 3, {{1, eop("bracket", ev(0), eop("dot", ev(1), ev(2)))}}};
    IdentityExpr product_of_bracket{
        "trivial.product-of-bracket", 3, {{1, eop("dot", ev(0), eop("bracket", ev(1), ev(2)))}}};
    for (const char* kname : {"TZLO", "TALO"}) {
        for (const auto& name : kind_fixtures().at(kname).passing) {
            Algebra sub = sub_adjacent(alg(name), kind(kname));
            c.expect(!check_identity(sub, bracket_of_product).has_value(),
                     std::string(kname) + "(" + name + "): [x, y.z] = 0");
            c.expect(!check_identity(sub, product_of_bracket).has_value(),
                     std::string(kname) + "(" + name + "): x.[y,z] = 0");
            c.expect(check_structure(sub, "poisson").pass,
                     std::string(kname) + "(" + name + "): sub-adjacent is Poisson");
        }
    }
}

// 8. the derivation constructions on Z2 and k[x]/(x^3).
void criterion_8(Criterion& c) {
    const Algebra& z2 = alg("Z2");
    Matrix g2(2, 2, z2.field);
    g2.at(0, 0) = Scalar::rational(1);
    g2.at(1, 1) = Scalar::rational(2);
    c.expect(!is_derivation(z2, "star", g2).has_value(), "grading is a derivation of Z2");
    OpTensor circ2 = derivation_induced(z2, "star", g2, DerivationFormula::ZinbielToPreLie);
    Algebra tzpo(2, z2.field);
    tzpo.add_op("star", z2.op("star"));
    tzpo.add_op("circ", circ2);
    c.expect(check_structure(tzpo, "TZPO").pass, "Z2 construction passes TZPO");
    Algebra sub2 = sub_adjacent_unchecked(tzpo, {'Z', 'P', false});
    c.expect(derivation_induced(sub2, "dot", g2, DerivationFormula::AssocToBracket) ==
                 sub2.op("bracket"),
             "Z2: [x,y] = P(x).y - x.P(y) on all basis pairs");

    const Algebra& kx3 = alg("kx3");
    Matrix g3(3, 3, kx3.field);
    for (std::size_t i = 0; i < 3; ++i) g3.at(i, i) = Scalar::rational(i);
    c.expect(!is_derivation(kx3, "dot", g3).has_value(), "grading is a derivation of k[x]/(x^3)");
    OpTensor circ3 = derivation_induced(kx3, "dot", g3, DerivationFormula::AssocToAntiPreLie);
    Algebra tcad(3, kx3.field);
    tcad.add_op("dot", kx3.op("dot"));
    tcad.add_op("circ", circ3);
    c.expect(check_structure(tcad, "TCAD").pass, "k[x]/(x^3) construction passes TCAD");
    Algebra sub3 = sub_adjacent_unchecked(tcad, {'C', 'A', false});
    c.expect(derivation_induced(kx3, "dot", g3, DerivationFormula::AssocToBracket) ==
                 sub3.op("bracket"),
             "k[x]/(x^3): [x,y] = P(x).y - x.P(y) on all basis pairs");
}

// Removes comments, string and character literals (incl. raw strings) so
// the audit only sees code tokens.
std::string strip_comments_and_strings(const std::string& src) {
    std::string out;
    out.reserve(src.size());
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        if (src[i] == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
        } else if (src[i] == '/' && i + 1 < n && src[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
            i = std::min(n, i + 2);
        } else if (src[i] == 'R' && i + 1 < n && src[i + 1] == '"') {
            std::size_t delim_start = i + 2;
            std::size_t paren = src.find('(', delim_start);
            if (paren == std::string::npos) break;
            std::string close = ")" + src.substr(delim_start, paren - delim_start) + "\"";
            std::size_t end = src.find(close, paren + 1);
            i = (end == std::string::npos) ? n : end + close.size();
            out += ' ';
        } else if (src[i] == '"' || src[i] == '\'') {
            char quote = src[i];
            ++i;
            while (i < n && src[i] != quote) {
                if (src[i] == '\\') ++i;
                ++i;
            }
            ++i;
            out += ' ';
        } else {
            out += src[i++];
        }
    }
    return out;
}

// 9. determinism and exactness.
void criterion_9(Criterion& c, const std::string& source_dir) {
    SuiteReport a = run_suite("", 42);
    SuiteReport b = run_suite("", 42);
    c.expect(a.pass, "full suite passes under seed 42");
    c.expect(report_text(a) == report_text(b), "text reports differ between runs");
    c.expect(report_json(a).dump() == report_json(b).dump(), "json reports differ between runs");

    // grep-level audit: no floating-point types anywhere in the artifact
    std::regex inexact(R"(\b(float|double)\b)");
    std::size_t scanned = 0;
    for (const char* sub : {"include", "src", "tools", "tests"}) {
        std::filesystem::path dir = std::filesystem::path(source_dir) / sub;
        if (!std::filesystem::exists(dir)) {
            c.expect(false, "missing source directory " + dir.string());
            continue;
        }
        for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            auto ext = entry.path().extension();
            if (ext != ".cpp" && ext != ".hpp") continue;
            std::ifstream in(entry.path());
            std::stringstream buf;
            buf << in.rdbuf();
            std::string code = strip_comments_and_strings(buf.str());
            c.expect(!std::regex_search(code, inexact),
                     "inexact arithmetic token in " + entry.path().string());
            ++scanned;
        }
    }
    c.expect(scanned >= 20, "source audit saw too few files");

    // exact round trip through the serialization layer
    for (const auto& [name, algebra] : catalog_instances().algebras) {
        AlgebraFile f;
        f.algebra = algebra;
        AlgebraFile back = algebra_file_from_json(to_json(f));
        c.expect(back.algebra == algebra, "round trip changed " + name);
    }
}

} // namespace

int main(int argc, char** argv) {
    std::string source_dir = OPSPLIT_SOURCE_DIR;
    if (argc > 1) source_dir = argv[1];

    struct Entry {
        int number;
        std::string title;
        std::function<void(Criterion&)> run;
        long budget_ms; // 0 = no stated budget
    };
    const std::uint64_t seed = 42;
    std::vector<Entry> entries = {
        {1, "structure-kind fidelity", [](Criterion& c) { criterion_1(c); }, 5000},
        {2, "sub-adjacency and table representations", [](Criterion& c) { criterion_2(c); },
         30000},
        {3, "double-space equivalences, sampled",
         [seed](Criterion& c) { criterion_3(c, seed); }, 180000},
        {4, "Poisson dual representations", [](Criterion& c) { criterion_4(c); }, 0},
        {5, "transposed-Poisson dual criterion", [](Criterion& c) { criterion_5(c); }, 0},
        {6, "bilinear-form table rows", [](Criterion& c) { criterion_6(c); }, 0},
        {7, "trivial transposed-Poisson remarks", [](Criterion& c) { criterion_7(c); }, 0},
        {8, "derivation examples", [](Criterion& c) { criterion_8(c); }, 0},
        {9, "determinism and exactness",
         [&source_dir](Criterion& c) { criterion_9(c, source_dir); }, 0},
    };

    int failures = 0;
    for (const auto& e : entries) {
        Criterion c;
        auto t0 = Clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("unexpected error: ") + ex.what());
        }
        long elapsed = ms_since(t0);
        if (e.budget_ms > 0 && elapsed > e.budget_ms)
            c.expect(false, "runtime " + std::to_string(elapsed) + " ms over budget " +
                                std::to_string(e.budget_ms) + " ms");
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << e.number << ": " << e.title
                  << " (" << elapsed << " ms)\n";
        for (const auto& p : c.problems) std::cout << "       " << p << "\n";
        if (!c.ok) ++failures;
    }
    std::cout << "ACCEPTANCE: " << (failures == 0 ? "PASS" : "FAIL") << " ("
              << (entries.size() - failures) << "/" << entries.size() << ")\n";
    return failures == 0 ? 0 : 1;
}
