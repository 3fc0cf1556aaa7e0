#pragma once

#include "opsplit/bilinear_form.hpp"
#include "opsplit/representation.hpp"

namespace opsplit {

struct NamedForm {
    std::string algebra; // instance the form lives on
    BilinForm form;
};

struct InstanceSet {
    std::map<std::string, Algebra> algebras;
    std::map<std::string, RepTriple> reps;
    std::map<std::string, NamedForm> forms;
};

// Named witnesses used by the suite and the acceptance run; all over Q and
// verified at load (a failed self-check aborts with StructureCheckFailed).
const InstanceSet& catalog_instances();

struct KindFixtures {
    std::vector<std::string> passing;
    std::vector<std::string> failing;
};

// For each of the 34 kinds: instance names expected to pass / fail its check.
const std::map<std::string, KindFixtures>& kind_fixtures();

// Row fixtures for the table form laws: algebra + form satisfying the
// kind's listed predicate pair, for the inverse (induced-op) direction.
struct FormRowFixture {
    std::string algebra;
    std::string form;
};
const std::map<std::string, FormRowFixture>& form_row_fixtures();

} // namespace opsplit
