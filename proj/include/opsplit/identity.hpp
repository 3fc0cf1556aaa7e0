#pragma once

#include <memory>
#include <optional>
#include <span>

#include "opsplit/algebra.hpp"

namespace opsplit {

// A formal multilinear identity: a sum of integer-weighted operation trees
// over abstract variables, asserted to vanish for all substitutions.
// Every variable occurs exactly once per term, so vanishing on all basis
// tuples is equivalent to vanishing identically.
struct ExprNode {
    int var = -1;     // leaf: variable index, >= 0
    std::string op;   // internal node: operation name
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using Expr = std::shared_ptr<const ExprNode>;

Expr ev(int var);
Expr eop(std::string op, Expr lhs, Expr rhs);

struct IdentityTerm {
    long coeff;
    Expr tree;
};

struct IdentityExpr {
    std::string id;
    int arity;
    std::vector<IdentityTerm> terms;
};

struct CounterExample {
    std::string identity_id;
    std::vector<std::size_t> tuple; // basis indices, one per variable
    Vec residual;                   // nonzero
};

std::string format_counterexample(const CounterExample& cex);

// Value of the identity's left side at the given arguments.
Vec eval_identity(const Algebra& a, const IdentityExpr& id, std::span<const Vec> args);

// Evaluates on all dim^arity basis tuples in lexicographic order;
// returns the first failing tuple, or nullopt when the identity holds.
std::optional<CounterExample> check_identity(const Algebra& a, const IdentityExpr& id);

} // namespace opsplit
