#include "opsplit/identity.hpp"

#include <sstream>

namespace opsplit {

Expr ev(int var) {
    auto n = std::make_shared<ExprNode>();
    n->var = var;
    return n;
}

Expr eop(std::string op, Expr lhs, Expr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->op = std::move(op);
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

namespace {

Vec eval_tree(const Algebra& a, const ExprNode& node, std::span<const Vec> args) {
    if (node.var >= 0) {
        if (static_cast<std::size_t>(node.var) >= args.size())
            throw DimensionMismatch("identity variable index out of range");
        return args[node.var];
    }
    Vec l = eval_tree(a, *node.lhs, args);
    Vec r = eval_tree(a, *node.rhs, args);
    return apply(a, node.op, l, r);
}

} // namespace

Vec eval_identity(const Algebra& a, const IdentityExpr& id, std::span<const Vec> args) {
    Vec sum = zero_vec(a.dim, a.field);
    for (const auto& term : id.terms) {
        Vec v = eval_tree(a, *term.tree, args);
        Scalar c = Scalar::from_integer(term.coeff, a.field);
        for (std::size_t k = 0; k < a.dim; ++k) sum[k] += c * v[k];
    }
    return sum;
}

std::optional<CounterExample> check_identity(const Algebra& a, const IdentityExpr& id) {
    // Resolve operation names up front so an unknown op fails even at dim 0.
    for (const auto& term : id.terms) {
        std::vector<const ExprNode*> stack{term.tree.get()};
        while (!stack.empty()) {
            const ExprNode* n = stack.back();
            stack.pop_back();
            if (n->var >= 0) continue;
            a.op(n->op);
            stack.push_back(n->lhs.get());
            stack.push_back(n->rhs.get());
        }
    }
    if (a.dim == 0) return std::nullopt;

    std::vector<std::size_t> tuple(id.arity, 0);
    std::vector<Vec> args;
    args.reserve(id.arity);
    for (int v = 0; v < id.arity; ++v) args.push_back(basis_vec(a.dim, 0, a.field));

    while (true) {
        Vec r = eval_identity(a, id, args);
        if (!is_zero_vec(r))
            return CounterExample{id.id, tuple, std::move(r)};
        int pos = id.arity - 1;
        while (pos >= 0) {
            if (++tuple[pos] < a.dim) {
                args[pos] = basis_vec(a.dim, tuple[pos], a.field);
                break;
            }
            tuple[pos] = 0;
            args[pos] = basis_vec(a.dim, 0, a.field);
            --pos;
        }
        if (pos < 0) break;
    }
    return std::nullopt;
}

std::string format_counterexample(const CounterExample& cex) {
    std::ostringstream out;
    out << "identity " << cex.identity_id << " fails at (";
    for (std::size_t i = 0; i < cex.tuple.size(); ++i)
        out << (i ? "," : "") << "e" << cex.tuple[i];
    out << "), residual (";
    for (std::size_t k = 0; k < cex.residual.size(); ++k)
        out << (k ? ", " : "") << cex.residual[k].str();
    out << ")";
    return out.str();
}

} // namespace opsplit
