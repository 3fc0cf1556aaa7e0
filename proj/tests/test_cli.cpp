#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opsplit/algfile.hpp"
#include "opsplit/instances.hpp"

using namespace opsplit;

namespace {

// The binary under test, injected by the build.
const char* cli = OPSPLIT_CLI_PATH;

int run(const std::string& args, std::string* output = nullptr) {
    std::string cmd = std::string(cli) + " " + args;
    if (output) {
        cmd += " > cli_test_stdout.txt 2> cli_test_stderr.txt";
        int code = std::system(cmd.c_str());
        std::ifstream in("cli_test_stdout.txt");
        std::stringstream buf;
        buf << in.rdbuf();
        *output = buf.str();
        std::remove("cli_test_stdout.txt");
        std::remove("cli_test_stderr.txt");
        return WEXITSTATUS(code);
    }
    cmd += " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

void write_instance(const std::string& name, const std::string& path) {
    AlgebraFile f;
    f.algebra = catalog_instances().algebras.at(name);
    save_algebra_file(path, f);
}

} // namespace

TEST_CASE("check: exit 0 on pass, 1 on fail, 2 on bad input") {
    write_instance("TPA3", "cli_tpa3.json");
    CHECK(run("check cli_tpa3.json --structure transposed-poisson") == 0);

    std::string out;
    CHECK(run("check cli_tpa3.json --structure poisson", &out) == 1);
    CHECK(out.find("counterexample") != std::string::npos);
    CHECK(out.find("poisson.leibniz") != std::string::npos);

    CHECK(run("check cli_tpa3.json --structure no-such-kind") == 2);
    CHECK(run("check does_not_exist.json --structure poisson") == 2);

    std::ofstream bad("cli_bad.json");
    bad << "{\"dim\": 2}";
    bad.close();
    CHECK(run("check cli_bad.json --structure poisson") == 2);
    std::remove("cli_bad.json");
    std::remove("cli_tpa3.json");
}

TEST_CASE("check --json carries the text report's fields") {
    write_instance("TPA3", "cli_tpa3.json");
    std::string out;
    CHECK(run("check cli_tpa3.json --structure poisson --json", &out) == 1);
    auto j = nlohmann::json::parse(out);
    CHECK(j["kind"] == "poisson");
    CHECK(j["pass"] == false);
    bool found_failure = false;
    for (const auto& e : j["identities"])
        if (e["holds"] == false) {
            found_failure = true;
            CHECK(e.contains("tuple"));
            CHECK(e.contains("residual"));
        }
    CHECK(found_failure);
    std::remove("cli_tpa3.json");
}

TEST_CASE("construct double, then check the family on the result") {
    write_instance("CP2", "cli_cp2.json");
    CHECK(run("construct cli_cp2.json --what double --flavor C,A,self -o cli_d.json") == 0);
    CHECK(run("check cli_d.json --structure poisson") == 0);
    CHECK(run("check cli_d.json --structure transposed-poisson") == 0);
    AlgebraFile d = load_algebra_file("cli_d.json");
    CHECK(d.algebra.dim == 4);
    std::remove("cli_cp2.json");
    std::remove("cli_d.json");
}

TEST_CASE("construct induce writes the pre-Lie splitting of the symplectic witness") {
    AlgebraFile f;
    f.algebra = catalog_instances().algebras.at("aff2");
    f.forms["symp"] = catalog_instances().forms.at("sympl2").form;
    save_algebra_file("cli_aff2.json", f);
    CHECK(run("construct cli_aff2.json --what induce --rule pre-lie --form symp "
              "--op bracket -o cli_pl.json") == 0);
    AlgebraFile out = load_algebra_file("cli_pl.json");
    CHECK(out.algebra.op("circ") == catalog_instances().algebras.at("PL2").op("circ"));
    std::remove("cli_aff2.json");
    std::remove("cli_pl.json");
}

TEST_CASE("construct subadjacent and derive") {
    write_instance("TCAD3", "cli_tcad.json");
    CHECK(run("construct cli_tcad.json --what subadjacent --structure TCAD -o cli_sub.json") == 0);
    CHECK(run("check cli_sub.json --structure transposed-poisson") == 0);
    std::remove("cli_sub.json");
    std::remove("cli_tcad.json");

    // a non-derivation matrix is a usage error (exit 2, NotADerivation)
    AlgebraFile f;
    f.algebra = catalog_instances().algebras.at("Z2");
    f.forms["p"] = BilinForm{Matrix::identity(2, Field::rationals())};
    save_algebra_file("cli_z2.json", f);
    std::string out;
    int code = run("construct cli_z2.json --what derive --formula zinbiel-to-pre-lie "
                   "--op star --matrix p -o cli_out.json 2>&1");
    CHECK(code == 2);
    std::remove("cli_z2.json");
    std::remove("cli_out.json");
}

TEST_CASE("construct semidirect from a stored representation") {
    AlgebraFile f;
    f.algebra = catalog_instances().algebras.at("P3");
    f.reps["adjoint"] = catalog_instances().reps.at("P3.adjoint");
    save_algebra_file("cli_p3.json", f);
    CHECK(run("construct cli_p3.json --what semidirect --rep adjoint --family poisson "
              "-o cli_sd.json") == 0);
    CHECK(run("check cli_sd.json --structure poisson") == 0);
    AlgebraFile sd = load_algebra_file("cli_sd.json");
    CHECK(sd.algebra.dim == 6);
    std::remove("cli_p3.json");
    std::remove("cli_sd.json");
}

TEST_CASE("suite subcommand") {
    CHECK(run("suite --filter P5.dualrep. --seed 42") == 0);
    CHECK(run("suite --filter nonexistent. --seed 42") == 2);

    std::string a, b;
    CHECK(run("suite --filter P3.PAL. --seed 7 --json", &a) == 0);
    CHECK(run("suite --filter P3.PAL. --seed 7 --json", &b) == 0);
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("kinds subcommand lists the vocabulary") {
    std::string out;
    CHECK(run("kinds", &out) == 0);
    CHECK(out.find("PCP") != std::string::npos);
    CHECK(out.find("pre-poisson") != std::string::npos);
    CHECK(out.find("transposed-poisson") != std::string::npos);
}
