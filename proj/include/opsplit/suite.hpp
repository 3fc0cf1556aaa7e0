#pragma once

#include <cstdint>
#include <functional>

#include <nlohmann/json_fwd.hpp>

#include "opsplit/instances.hpp"

namespace opsplit {

// One executable proposition: a deterministic check over catalog instances
// and/or seeded random samples, with the expected outcome asserted inside.
struct CaseContext {
    std::uint64_t seed = 0;
    bool ok = true;
    std::vector<std::string> notes;

    void note(std::string s) { notes.push_back(std::move(s)); }
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
};

struct PropositionCase {
    std::string id;
    std::string description;
    std::function<void(CaseContext&)> run;
};

struct CaseResult {
    std::string id;
    std::string description;
    bool ok = false;
    std::vector<std::string> notes;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::string filter;
    std::vector<CaseResult> results; // ordered by id
    bool pass = false;
    std::int64_t elapsed_ms = 0; // informational; kept out of canonical output
};

const std::vector<PropositionCase>& suite_cases();

// Runs every case whose id starts with `filter` (empty = all), each under a
// per-case generator derived from `seed`. Throws UnknownCaseId when the
// filter matches nothing.
SuiteReport run_suite(const std::string& filter, std::uint64_t seed);

// Canonical renderings: byte-identical across runs with the same seed.
std::string report_text(const SuiteReport& r);
nlohmann::json report_json(const SuiteReport& r);

// Helpers shared with the acceptance gate.
Scalar scalar_to_field(const Scalar& s, const Field& f);
Algebra algebra_to_field(const Algebra& a, const Field& f);
Algebra random_ops_algebra(class Rng& rng, const std::vector<std::string>& ops,
                           std::size_t dim, const Field& f);
std::vector<RepTriple> poisson_rep_towers(std::size_t count);

} // namespace opsplit
