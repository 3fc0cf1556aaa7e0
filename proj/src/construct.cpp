#include "opsplit/construct.hpp"

namespace opsplit {

namespace {

OpTensor block_product(const Algebra& a, char flavor) {
    switch (flavor) {
    case 'C': return a.op("dot");
    case 'Z':
    case 'A': return anticommutator(a, "star");
    }
    throw ParseError("bad product flavor");
}

OpTensor block_bracket(const Algebra& a, char flavor) {
    switch (flavor) {
    case 'L': return a.op("bracket");
    case 'P':
    case 'A': return commutator(a, "circ");
    }
    throw ParseError("bad bracket flavor");
}

} // namespace

Algebra sub_adjacent_unchecked(const Algebra& a, const DoubleFlavor& fl) {
    Algebra s(a.dim, a.field);
    s.add_op("dot", block_product(a, fl.product));
    s.add_op("bracket", block_bracket(a, fl.bracket));
    return s;
}

Algebra sub_adjacent(const Algebra& a, const StructureKind& k) {
    StructureReport report = check_structure(a, k);
    if (!report.pass) {
        std::string detail = report.first_failure
                                 ? format_counterexample(*report.first_failure)
                                 : "structure check failed";
        throw StructureCheckFailed("input is not a " + k.name + " algebra: " + detail);
    }
    if (k.flavor) return sub_adjacent_unchecked(a, *k.flavor);

    Algebra s(a.dim, a.field);
    if (k.name == "zinbiel" || k.name == "anti-zinbiel")
        s.add_op("dot", anticommutator(a, "star"));
    else if (k.name == "pre-lie" || k.name == "anti-pre-lie")
        s.add_op("bracket", commutator(a, "circ"));
    else if (k.name == "dendriform" || k.name == "anti-dendriform")
        s.add_op("dot", tensor_add(a.op("succ"), a.op("prec")));
    else
        for (const auto& op : k.required_ops) s.add_op(op, a.op(op));
    return s;
}

Algebra semidirect(const Algebra& a, const RepTriple& r, Family family) {
    if (!(r.base.dim == a.dim) || !(r.base.field == a.field))
        throw DimensionMismatch("representation base does not match the algebra");
    const std::size_t n = a.dim, m = r.module_dim, nm = n + m;
    const Field& f = a.field;

    auto embed_block = [&](const OpTensor& t) {
        OpTensor out(nm, f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    out.at(i, j, k) = t.at(i, j, k);
        return out;
    };

    Algebra s(nm, f);
    if (family == Family::CommAssoc || family == Family::Poisson ||
        family == Family::TransposedPoisson) {
        if (r.mu.empty()) throw MissingOperation("semidirect product needs mu maps");
        OpTensor dot = embed_block(a.op("dot"));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    dot.at(i, n + j, n + k) = r.mu[i].at(k, j);
                    dot.at(n + j, i, n + k) = r.mu[i].at(k, j);
                }
        s.add_op("dot", std::move(dot));
    }
    if (family == Family::Lie || family == Family::Poisson ||
        family == Family::TransposedPoisson) {
        if (r.rho.empty()) throw MissingOperation("semidirect product needs rho maps");
        OpTensor br = embed_block(a.op("bracket"));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    br.at(i, n + j, n + k) = r.rho[i].at(k, j);
                    br.at(n + j, i, n + k) = -r.rho[i].at(k, j);
                }
        s.add_op("bracket", std::move(br));
    }
    return s;
}

OpTensor double_product_tensor(const Algebra& a, const DoubleFlavor& fl) {
    const std::size_t n = a.dim;
    const Field& f = a.field;
    OpTensor out(2 * n, f);

    const OpTensor block = block_product(a, fl.product);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.at(i, j, k) = block.at(i, j, k);

    const std::string op = fl.product == 'C' ? "dot" : "star";
    const OpTensor& t = a.op(op);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // first: (e_i, f_j) pair, second: (f_i, e_j) pair.
                Scalar first, second;
                if (!fl.dual) {
                    if (fl.product == 'C') {
                        // (x,a).(y,b) = (x.y, x.b + a.y)
                        first = t.at(i, j, k);
                        second = t.at(i, j, k);
                    } else {
                        // (x,a).(y,b) = (x*y+y*x, +/-(x*b + y*a))
                        first = t.at(i, j, k);
                        second = t.at(j, i, k);
                    }
                } else {
                    // module acts through L^T
                    first = t.at(i, k, j);
                    second = t.at(j, k, i);
                }
                if (fl.product == 'A') {
                    first = -first;
                    second = -second;
                }
                out.at(i, n + j, n + k) = first;
                out.at(n + i, j, n + k) = second;
            }
    return out;
}

OpTensor double_bracket_tensor(const Algebra& a, const DoubleFlavor& fl) {
    const std::size_t n = a.dim;
    const Field& f = a.field;
    OpTensor out(2 * n, f);

    const OpTensor block = block_bracket(a, fl.bracket);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.at(i, j, k) = block.at(i, j, k);

    const std::string op = fl.bracket == 'L' ? "bracket" : "circ";
    const OpTensor& t = a.op(op);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar act; // rho(e_i) e_j component k
                if (!fl.dual)
                    act = t.at(i, j, k);
                else
                    act = -t.at(i, k, j);
                if (fl.bracket == 'A') act = -act;
                out.at(i, n + j, n + k) = act;
                out.at(n + j, i, n + k) = -act;
            }
    return out;
}

Algebra double_space(const Algebra& a, const DoubleFlavor& fl) {
    Algebra d(2 * a.dim, a.field);
    d.add_op("dot", double_product_tensor(a, fl));
    d.add_op("bracket", double_bracket_tensor(a, fl));
    return d;
}

std::optional<DerivationFailure> is_derivation(const Algebra& a, const std::string& op,
                                               const Matrix& p) {
    if (p.rows() != a.dim || p.cols() != a.dim || !(p.field() == a.field))
        throw DimensionMismatch("derivation matrix must be n x n over the algebra's field");
    a.op(op);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec ei = basis_vec(a.dim, i, a.field), ej = basis_vec(a.dim, j, a.field);
            Vec lhs = p.apply(apply(a, op, ei, ej));
            Vec rhs = vec_add(apply(a, op, p.apply(ei), ej), apply(a, op, ei, p.apply(ej)));
            Vec residual = vec_sub(lhs, rhs);
            if (!is_zero_vec(residual))
                return DerivationFailure{i, j, std::move(residual)};
        }
    return std::nullopt;
}

DerivationFormula parse_derivation_formula(const std::string& s) {
    if (s == "zinbiel-to-pre-lie") return DerivationFormula::ZinbielToPreLie;
    if (s == "assoc-to-anti-pre-lie") return DerivationFormula::AssocToAntiPreLie;
    if (s == "assoc-to-bracket") return DerivationFormula::AssocToBracket;
    throw ParseError("unknown derivation formula \"" + s + "\"");
}

std::string derivation_formula_name(DerivationFormula f) {
    switch (f) {
    case DerivationFormula::ZinbielToPreLie: return "zinbiel-to-pre-lie";
    case DerivationFormula::AssocToAntiPreLie: return "assoc-to-anti-pre-lie";
    case DerivationFormula::AssocToBracket: return "assoc-to-bracket";
    }
    return "";
}

OpTensor derivation_induced(const Algebra& a, const std::string& op, const Matrix& p,
                            DerivationFormula formula) {
    if (auto fail = is_derivation(a, op, p))
        throw NotADerivation("matrix is not a derivation of (A, " + op + "), fails at (e" +
                             std::to_string(fail->i) + ",e" + std::to_string(fail->j) + ")");
    OpTensor out(a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec ei = basis_vec(a.dim, i, a.field), ej = basis_vec(a.dim, j, a.field);
            Vec v;
            switch (formula) {
            case DerivationFormula::ZinbielToPreLie:
            case DerivationFormula::AssocToBracket:
                v = vec_sub(apply(a, op, p.apply(ei), ej), apply(a, op, ei, p.apply(ej)));
                break;
            case DerivationFormula::AssocToAntiPreLie:
                v = vec_add(p.apply(apply(a, op, ei, ej)), apply(a, op, p.apply(ei), ej));
                break;
            }
            for (std::size_t k = 0; k < a.dim; ++k) out.at(i, j, k) = v[k];
        }
    return out;
}

} // namespace opsplit
