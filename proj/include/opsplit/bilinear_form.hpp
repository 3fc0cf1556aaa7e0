#pragma once

#include "opsplit/catalog.hpp"

namespace opsplit {

// Bilinear form as a Gram matrix: B(e_i, e_j) = gram(i, j).
struct BilinForm {
    Matrix gram;

    std::size_t dim() const { return gram.rows(); }
    Scalar eval(const Vec& x, const Vec& y) const;
    bool operator==(const BilinForm& o) const { return gram == o.gram; }
};

struct FormPredicates {
    bool symmetric = false;
    bool skew = false;
    bool nondegenerate = false;
    bool invariant = false;       // B(x*y,z) = B(x,y*z) on all basis triples
    bool cyclic_cocycle = false;  // B(x*y,z)+B(y*z,x)+B(z*x,y) = 0
};

FormPredicates form_predicates(const Algebra& a, const std::string& op, const BilinForm& b);

// Whether b satisfies the named table law for `op`.
bool satisfies_form_law(const Algebra& a, const std::string& op, const BilinForm& b, FormLaw law);

enum class InducedRule { PreLie, AntiPreLie, Zinbiel, AntiZinbiel };

InducedRule parse_induced_rule(const std::string& s);
std::string induced_rule_name(InducedRule r);

// Operation defined through a nondegenerate form:
//   pre-lie:       B(x o y, z) = -B(y, [x,z])
//   anti-pre-lie:  B(x o y, z) =  B(y, [x,z])
//   zinbiel:       B(x * y, z) =  B(y, x . z)
//   anti-zinbiel:  B(x * y, z) = -B(y, x . z)
// Solves gram^T c = d per basis pair and re-verifies the defining relation.
OpTensor induced_op(const Algebra& a, const std::string& op, const BilinForm& b, InducedRule rule);

// B_d ('d'): gram [[0,I],[I,0]]; B_p ('p'): gram [[0,I],[-I,0]], in the
// (A, A*) block order on dimension 2n.
BilinForm canonical_form(std::size_t n, char flavor, const Field& f);

} // namespace opsplit
