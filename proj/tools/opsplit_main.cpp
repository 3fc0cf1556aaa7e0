#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opsplit/algfile.hpp"
#include "opsplit/construct.hpp"
#include "opsplit/suite.hpp"

namespace {

using namespace opsplit;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

json report_to_json(const StructureReport& r) {
    json j;
    j["kind"] = r.kind;
    j["pass"] = r.pass;
    json ids = json::array();
    for (const auto& res : r.results) {
        json e;
        e["id"] = res.id;
        e["holds"] = res.holds;
        if (res.cex) {
            e["tuple"] = res.cex->tuple;
            json residual = json::array();
            for (const auto& s : res.cex->residual) residual.push_back(s.str());
            e["residual"] = residual;
        }
        ids.push_back(std::move(e));
    }
    j["identities"] = std::move(ids);
    return j;
}

int cmd_check(const std::string& path, const std::string& kind_name, bool as_json) {
    AlgebraFile file = load_algebra_file(path);
    StructureReport r = check_structure(file.algebra, kind_name);
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        std::cout << r.kind << ": " << (r.pass ? "pass" : "fail") << "\n";
        for (const auto& res : r.results)
            std::cout << "  " << res.id << ": " << (res.holds ? "holds" : "fails") << "\n";
        if (r.first_failure)
            std::cout << "  counterexample: " << format_counterexample(*r.first_failure) << "\n";
    }
    return r.pass ? kExitPass : kExitFail;
}

struct ConstructArgs {
    std::string path;
    std::string what;
    std::string structure;
    std::string rep;
    std::string family = "poisson";
    std::string flavor;
    std::string rule;
    std::string form;
    std::string op;
    std::string matrix;
    std::string formula;
    std::string out_op;
    std::string output;
};

int cmd_construct(const ConstructArgs& args) {
    AlgebraFile file = load_algebra_file(args.path);
    AlgebraFile out;
    std::string verification;

    if (args.what == "subadjacent") {
        const StructureKind& k = kind(args.structure);
        out.algebra = sub_adjacent(file.algebra, k);
        verification = "input passes " + k.name + "; sub-adjacent operations written";
    } else if (args.what == "semidirect") {
        if (!file.reps.count(args.rep))
            throw ParseError("no representation named \"" + args.rep + "\" in the file");
        Family fam = parse_family(args.family);
        out.algebra = semidirect(file.algebra, file.reps.at(args.rep), fam);
        StructureReport r = check_structure(out.algebra, family_name(fam));
        verification = "semidirect product " + std::string(r.pass ? "passes " : "FAILS ") +
                       family_name(fam);
    } else if (args.what == "double") {
        DoubleFlavor fl = DoubleFlavor::parse(args.flavor);
        out.algebra = double_space(file.algebra, fl);
        verification = "double space of flavor (" + fl.str() + ") written";
    } else if (args.what == "induce") {
        if (!file.forms.count(args.form))
            throw ParseError("no form named \"" + args.form + "\" in the file");
        InducedRule rule = parse_induced_rule(args.rule);
        OpTensor induced = induced_op(file.algebra, args.op, file.forms.at(args.form), rule);
        out.algebra = file.algebra;
        std::string name = args.out_op.empty()
                               ? (rule == InducedRule::PreLie || rule == InducedRule::AntiPreLie
                                      ? "circ"
                                      : "star")
                               : args.out_op;
        out.algebra.add_op(name, std::move(induced));
        verification = "induced \"" + name + "\" verified against the " +
                       induced_rule_name(rule) + " relation";
    } else if (args.what == "derive") {
        if (!file.forms.count(args.matrix))
            throw ParseError("no matrix named \"" + args.matrix +
                             "\" in the file's \"forms\" section");
        DerivationFormula formula = parse_derivation_formula(args.formula);
        const Matrix& p = file.forms.at(args.matrix).gram;
        OpTensor derived = derivation_induced(file.algebra, args.op, p, formula);
        out.algebra = file.algebra;
        std::string name = args.out_op.empty()
                               ? (formula == DerivationFormula::AssocToBracket ? "bracket" : "circ")
                               : args.out_op;
        out.algebra.add_op(name, std::move(derived));
        verification = "derivation checked; \"" + name + "\" written from " +
                       derivation_formula_name(formula);
    } else {
        throw ParseError("unknown --what \"" + args.what + "\"");
    }

    save_algebra_file(args.output, out);
    std::cout << verification << "\n";
    std::cout << "wrote " << args.output << "\n";
    return kExitPass;
}

int cmd_suite(const std::string& filter, std::uint64_t seed, bool as_json) {
    SuiteReport r = run_suite(filter, seed);
    if (as_json)
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << report_text(r);
    std::cerr << "# elapsed " << r.elapsed_ms << " ms\n";
    return r.pass ? kExitPass : kExitFail;
}

int cmd_kinds() {
    for (const auto& k : list_kinds()) {
        std::cout << k.name;
        for (const auto& a : k.aliases) std::cout << " (alias: " << a << ")";
        std::cout << "\n  ops:";
        for (const auto& op : k.required_ops) std::cout << " " << op;
        if (k.rep) std::cout << "\n  representation: " << k.rep->text;
        if (k.forms)
            std::cout << "\n  forms: " << form_law_name(k.forms->first) << ", "
                      << form_law_name(k.forms->second) << " (B_"
                      << k.canonical_form_flavor << ")";
        std::cout << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker and constructor for splittings of Poisson-type operations"};
    app.require_subcommand(1);

    std::string check_path, check_kind;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "check a structure kind on an algebra file");
    check->add_option("file", check_path, "algebra file")->required();
    check->add_option("--structure", check_kind, "structure kind name")->required();
    check->add_flag("--json", check_json, "machine-readable report");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "build a derived algebra and write it");
    construct->add_option("file", cargs.path, "algebra file")->required();
    construct->add_option("--what", cargs.what,
                          "subadjacent|semidirect|double|induce|derive")->required();
    construct->add_option("--structure", cargs.structure, "kind for subadjacent");
    construct->add_option("--rep", cargs.rep, "representation name for semidirect");
    construct->add_option("--family", cargs.family,
                          "comm-assoc|lie|poisson|transposed-poisson");
    construct->add_option("--flavor", cargs.flavor, "double flavor, e.g. C,A,self");
    construct->add_option("--rule", cargs.rule,
                          "pre-lie|anti-pre-lie|zinbiel|anti-zinbiel for induce");
    construct->add_option("--form", cargs.form, "form name for induce");
    construct->add_option("--op", cargs.op, "operation the rule or formula reads");
    construct->add_option("--matrix", cargs.matrix,
                          "matrix name (stored under \"forms\") for derive");
    construct->add_option("--formula", cargs.formula,
                          "zinbiel-to-pre-lie|assoc-to-anti-pre-lie|assoc-to-bracket");
    construct->add_option("--out-op", cargs.out_op, "name for the constructed operation");
    construct->add_option("-o,--output", cargs.output, "output file")->required();

    std::string suite_filter;
    std::uint64_t suite_seed = 0;
    bool suite_json = false;
    auto* suite = app.add_subcommand("suite", "run the proposition suite");
    suite->add_option("--filter", suite_filter, "case id prefix");
    suite->add_option("--seed", suite_seed, "generator seed");
    suite->add_flag("--json", suite_json, "machine-readable report");

    auto* kinds = app.add_subcommand("kinds", "list the structure kinds");

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmd_check(check_path, check_kind, check_json);
        if (construct->parsed()) return cmd_construct(cargs);
        if (suite->parsed()) return cmd_suite(suite_filter, suite_seed, suite_json);
        if (kinds->parsed()) return cmd_kinds();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitError;
    } catch (const opsplit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
