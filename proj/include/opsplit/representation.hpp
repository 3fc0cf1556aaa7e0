#pragma once

#include "opsplit/catalog.hpp"

namespace opsplit {

// A module with linear actions for the product (mu) and/or bracket (rho),
// given per basis element of the base algebra and extended linearly.
struct RepTriple {
    Algebra base;
    std::size_t module_dim = 0;
    std::vector<Matrix> mu;  // size base.dim, or empty when unused
    std::vector<Matrix> rho;

    Matrix mu_of(const Vec& v) const;
    Matrix rho_of(const Vec& v) const;

    bool operator==(const RepTriple& o) const {
        return base == o.base && module_dim == o.module_dim && mu == o.mu && rho == o.rho;
    }
};

struct RepCounterExample {
    std::string law;
    std::size_t i = 0, j = 0; // basis pair
    Matrix residual;
};

struct RepReport {
    bool pass = false;
    std::optional<RepCounterExample> failure;
    // Set when the base algebra does not satisfy the family's structure
    // check; the representation laws are still evaluated.
    bool base_advisory = false;
};

RepTriple make_mu_rep(Algebra base, std::vector<Matrix> mu);
RepTriple make_rho_rep(Algebra base, std::vector<Matrix> rho);
RepTriple make_rep(Algebra base, std::vector<Matrix> mu, std::vector<Matrix> rho);

// (L_dot, ad) on the algebra itself; ops absent from the base are skipped.
RepTriple adjoint_rep(const Algebra& a);
RepTriple zero_rep(const Algebra& a, std::size_t module_dim);

// mu(x.y) = mu(x) mu(y) on all basis pairs.
RepReport check_rep_comm_assoc(const RepTriple& r);
// rho([x,y]) = rho(x) rho(y) - rho(y) rho(x).
RepReport check_rep_lie(const RepTriple& r);
// Both base laws plus rho(x.y) = mu(x) rho(y) + mu(y) rho(x)
// and mu([x,y]) = rho(x) mu(y) - mu(y) rho(x).
RepReport check_rep_poisson(const RepTriple& r);
// Both base laws plus 2 mu(x) rho(y) = rho(x.y) + rho(y) mu(x)
// and 2 mu([x,y]) = rho(x) mu(y) - rho(y) mu(x).
RepReport check_rep_tpa(const RepTriple& r);

RepReport check_rep(const RepTriple& r, Family family);

// Signed dual on the same coordinate space under the dot pairing:
// mu'(e_i) = mu_sign * mu(e_i)^T and rho'(e_i) = rho_sign * (-rho(e_i)^T),
// so (+1, +1) is the (-mu*, rho*, V*) triple and the eight signed dual
// signatures of the summary tables are the sign choices.
RepTriple dual_rep(const RepTriple& r, int mu_sign, int rho_sign);

// mu([x,y]) = 0 and rho(x.y) = mu(x) rho(y): exactly when the
// (-mu*, rho*) dual of a transposed-Poisson representation is again one.
RepReport check_tpa_dual_conditions(const RepTriple& r);

// The equivalent pair 2 rho(y) mu(x) = rho(x.y) + mu(x) rho(y) and
// 2 mu([x,y]) = mu(x) rho(y) - mu(y) rho(x), as a standalone predicate.
RepReport check_tpa_dual_rep_identities(const RepTriple& r);

// The table-designated representation of a split structure: built from the
// split operations of `a`, over the sub-adjacent algebra as base.
RepTriple designated_rep(const Algebra& a, const StructureKind& k);

} // namespace opsplit
