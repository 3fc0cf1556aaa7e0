#pragma once

#include <optional>

#include "opsplit/identity.hpp"

namespace opsplit {

enum class Family { CommAssoc, Lie, Poisson, TransposedPoisson };

std::string family_name(Family f);
Family parse_family(const std::string& s);

enum class FormLaw {
    Invariant,                // B(x*y,z) = B(x,y*z)
    Symplectic,               // skew, cyclic sum over the bracket vanishes
    Commutative2Cocycle,      // symmetric, cyclic sum over the bracket vanishes
    ConnesCocycle,            // skew, cyclic sum over the product vanishes
    CommutativeConnesCocycle  // symmetric, cyclic sum over the product vanishes
};

std::string form_law_name(FormLaw law);

// How a split structure acts on itself / its dual per the summary tables:
// mu = prod_sign * L_prod, rho = bracket_sign * L_bracket on the space itself;
// on the dual space the matrices become sign * (-L^T) with the tabulated signs.
struct RepSignature {
    std::string prod_op;    // "dot" or "star"
    std::string bracket_op; // "bracket" or "circ"
    int prod_sign;          // sign in front of L / L* per the table
    int bracket_sign;
    bool dual;
    std::string text; // display form, e.g. "(L_dot, -L_circ, A)"
};

struct DoubleFlavor {
    char product; // 'C' plain, 'Z' Zinbiel-split, 'A' anti-Zinbiel-split
    char bracket; // 'L' plain, 'P' pre-Lie-split, 'A' anti-pre-Lie-split
    bool dual;

    std::string str() const;
    static DoubleFlavor parse(const std::string& s); // "C,A,self"
};

struct StructureKind {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<std::string> required_ops;
    std::vector<std::string> prereqs;     // base kind names, checked first
    std::vector<IdentityExpr> identities; // own compatibility identities

    // Mixed-structure metadata (empty for base kinds).
    std::optional<Family> family;
    std::optional<DoubleFlavor> flavor;
    std::optional<RepSignature> rep;
    // Table forms column: (law on the product side, law on the bracket side)
    // together with the canonical form used on the coadjoint double.
    std::optional<std::pair<FormLaw, FormLaw>> forms;
    char canonical_form_flavor = 0; // 'd' or 'p' when forms is set
};

struct IdentityResult {
    std::string id;
    bool holds;
    std::optional<CounterExample> cex;
};

struct StructureReport {
    std::string kind;
    bool pass = false;
    std::vector<IdentityResult> results;
    std::optional<CounterExample> first_failure;
};

const std::vector<StructureKind>& list_kinds();

// Lookup by name or alias, case-insensitive. Throws UnknownKind.
const StructureKind& kind(const std::string& name);

// Prerequisite kinds first, then compatibility identities, short-circuiting
// at the first counterexample. Throws MissingOperation when ops are absent.
StructureReport check_structure(const Algebra& a, const StructureKind& k);
StructureReport check_structure(const Algebra& a, const std::string& kind_name);

} // namespace opsplit
