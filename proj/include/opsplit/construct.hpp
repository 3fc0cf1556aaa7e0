#pragma once

#include "opsplit/bilinear_form.hpp"
#include "opsplit/representation.hpp"

namespace opsplit {

// Replaces split operations by their commutator/anticommutator, leaving
// unsplit operations intact. Throws StructureCheckFailed when `a` does not
// pass the kind's structure check.
Algebra sub_adjacent(const Algebra& a, const StructureKind& k);

// Same replacement without the structure check (for building the base of a
// designated representation or inspecting near-instances).
Algebra sub_adjacent_unchecked(const Algebra& a, const DoubleFlavor& fl);

// Algebra on dimension n+m:
//   (x,u).(y,v)   = (x.y,   mu(x)v + mu(y)u)
//   [(x,u),(y,v)] = ([x,y], rho(x)v - rho(y)u)
// CommAssoc builds only "dot", Lie only "bracket", Poisson-type both.
Algebra semidirect(const Algebra& a, const RepTriple& r, Family family);

// The A (+) A or A (+) A* algebra of the corollary equations: a "dot" and a
// "bracket" on dimension 2n assembled per the flavor, with dual-space
// flavors acting through signed transposes of the multiplication matrices.
// Quantifies over arbitrary bilinear operations; no structure check.
Algebra double_space(const Algebra& a, const DoubleFlavor& fl);

// One side of the double: the product half (uses flavor.product) or the
// bracket half (uses flavor.bracket) as a single-operation algebra.
OpTensor double_product_tensor(const Algebra& a, const DoubleFlavor& fl);
OpTensor double_bracket_tensor(const Algebra& a, const DoubleFlavor& fl);

struct DerivationFailure {
    std::size_t i = 0, j = 0;
    Vec residual;
};

// Leibniz property of p for op on all basis pairs.
std::optional<DerivationFailure> is_derivation(const Algebra& a, const std::string& op,
                                               const Matrix& p);

enum class DerivationFormula {
    ZinbielToPreLie,   // x o y = P(x) * y - x * P(y)
    AssocToAntiPreLie, // x o y = P(x . y) + P(x) . y
    AssocToBracket     // [x, y] = P(x) . y - x . P(y)
};

DerivationFormula parse_derivation_formula(const std::string& s);
std::string derivation_formula_name(DerivationFormula f);

// Throws NotADerivation when p fails is_derivation for (a, op).
OpTensor derivation_induced(const Algebra& a, const std::string& op, const Matrix& p,
                            DerivationFormula formula);

} // namespace opsplit
