#include "opsplit/bilinear_form.hpp"

namespace opsplit {

Scalar BilinForm::eval(const Vec& x, const Vec& y) const {
    if (x.size() != gram.rows() || y.size() != gram.cols())
        throw DimensionMismatch("form arguments do not match its dimension");
    Scalar s = Scalar::zero(gram.field());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) s += x[i] * gram.at(i, j) * y[j];
    }
    return s;
}

FormPredicates form_predicates(const Algebra& a, const std::string& op, const BilinForm& b) {
    if (b.dim() != a.dim)
        throw DimensionMismatch("form dimension differs from the algebra");
    a.op(op); // throws UnknownOperation early
    const std::size_t n = a.dim;
    const Field& f = a.field;

    FormPredicates p;
    p.symmetric = b.gram == b.gram.transposed();
    p.skew = b.gram == -b.gram.transposed();
    p.nondegenerate = is_invertible(b.gram);

    p.invariant = true;
    p.cyclic_cocycle = true;
    for (std::size_t i = 0; i < n && (p.invariant || p.cyclic_cocycle); ++i)
        for (std::size_t j = 0; j < n && (p.invariant || p.cyclic_cocycle); ++j) {
            Vec ei = basis_vec(n, i, f), ej = basis_vec(n, j, f);
            Vec ij = apply(a, op, ei, ej);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek = basis_vec(n, k, f);
                Vec jk = apply(a, op, ej, ek);
                if (p.invariant && !(b.eval(ij, ek) == b.eval(ei, jk)))
                    p.invariant = false;
                if (p.cyclic_cocycle) {
                    Vec ki = apply(a, op, ek, ei);
                    Scalar sum = b.eval(ij, ek) + b.eval(jk, ei) + b.eval(ki, ej);
                    if (!sum.is_zero()) p.cyclic_cocycle = false;
                }
                if (!p.invariant && !p.cyclic_cocycle) break;
            }
        }
    return p;
}

bool satisfies_form_law(const Algebra& a, const std::string& op, const BilinForm& b, FormLaw law) {
    FormPredicates p = form_predicates(a, op, b);
    if (!p.nondegenerate) return false;
    switch (law) {
    case FormLaw::Invariant: return p.invariant;
    case FormLaw::Symplectic: return p.skew && p.cyclic_cocycle;
    case FormLaw::Commutative2Cocycle: return p.symmetric && p.cyclic_cocycle;
    case FormLaw::ConnesCocycle: return p.skew && p.cyclic_cocycle;
    case FormLaw::CommutativeConnesCocycle: return p.symmetric && p.cyclic_cocycle;
    }
    return false;
}

InducedRule parse_induced_rule(const std::string& s) {
    if (s == "pre-lie") return InducedRule::PreLie;
    if (s == "anti-pre-lie") return InducedRule::AntiPreLie;
    if (s == "zinbiel") return InducedRule::Zinbiel;
    if (s == "anti-zinbiel") return InducedRule::AntiZinbiel;
    throw ParseError("unknown induced-op rule \"" + s + "\"");
}

std::string induced_rule_name(InducedRule r) {
    switch (r) {
    case InducedRule::PreLie: return "pre-lie";
    case InducedRule::AntiPreLie: return "anti-pre-lie";
    case InducedRule::Zinbiel: return "zinbiel";
    case InducedRule::AntiZinbiel: return "anti-zinbiel";
    }
    return "";
}

OpTensor induced_op(const Algebra& a, const std::string& op, const BilinForm& b, InducedRule rule) {
    if (b.dim() != a.dim)
        throw DimensionMismatch("form dimension differs from the algebra");
    a.op(op);
    if (!is_invertible(b.gram))
        throw DegenerateForm("induced_op needs a nondegenerate form");

    const std::size_t n = a.dim;
    const Field& f = a.field;
    const bool negate = (rule == InducedRule::PreLie || rule == InducedRule::AntiZinbiel);

    Matrix gt = b.gram.transposed();
    OpTensor out(n, f);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = basis_vec(n, i, f);
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = basis_vec(n, j, f);
            Vec d = zero_vec(n, f);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ik = apply(a, op, ei, basis_vec(n, k, f));
                Scalar rhs = b.eval(ej, ik);
                d[k] = negate ? -rhs : rhs;
            }
            Vec c = solve_linear(gt, d);
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = c[k];
        }
    }

    // The defining relation is re-verified on all basis triples; a solver
    // defect surfaces here as a hard error rather than a wrong tensor.
    Algebra verify(n, f);
    verify.add_op("induced", out);
    verify.add_op("given", a.op(op));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = basis_vec(n, i, f), ej = basis_vec(n, j, f), ek = basis_vec(n, k, f);
                Scalar lhs = b.eval(apply(verify, "induced", ei, ej), ek);
                Scalar rhs = b.eval(ej, apply(verify, "given", ei, ek));
                if (negate) rhs = -rhs;
                if (!(lhs == rhs))
                    throw DegenerateForm("induced_op post-verification failed");
            }
    return out;
}

BilinForm canonical_form(std::size_t n, char flavor, const Field& f) {
    if (flavor != 'd' && flavor != 'p')
        throw ParseError("canonical form flavor must be 'd' or 'p'");
    Matrix g(2 * n, 2 * n, f);
    for (std::size_t i = 0; i < n; ++i) {
        g.at(i, n + i) = Scalar::one(f);
        g.at(n + i, i) = flavor == 'd' ? Scalar::one(f) : -Scalar::one(f);
    }
    return BilinForm{std::move(g)};
}

} // namespace opsplit
