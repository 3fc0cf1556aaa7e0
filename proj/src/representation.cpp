#include "opsplit/representation.hpp"

namespace opsplit {

namespace {

Matrix linear_combination(const std::vector<Matrix>& mats, const Vec& v,
                          std::size_t module_dim, const Field& f) {
    Matrix r(module_dim, module_dim, f);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        r = r + mats[i].scaled(v[i]);
    }
    return r;
}

void require_populated(const std::vector<Matrix>& m, const char* which) {
    if (m.empty())
        throw MissingOperation(std::string(which) + " maps not populated in representation");
}

Scalar two(const Field& f) { return Scalar::from_integer(2, f); }

} // namespace

Matrix RepTriple::mu_of(const Vec& v) const {
    require_populated(mu, "mu");
    return linear_combination(mu, v, module_dim, base.field);
}

Matrix RepTriple::rho_of(const Vec& v) const {
    require_populated(rho, "rho");
    return linear_combination(rho, v, module_dim, base.field);
}

RepTriple make_mu_rep(Algebra base, std::vector<Matrix> mu) {
    return make_rep(std::move(base), std::move(mu), {});
}

RepTriple make_rho_rep(Algebra base, std::vector<Matrix> rho) {
    return make_rep(std::move(base), {}, std::move(rho));
}

RepTriple make_rep(Algebra base, std::vector<Matrix> mu, std::vector<Matrix> rho) {
    RepTriple r;
    std::size_t m = 0;
    for (const auto* maps : {&mu, &rho}) {
        if (maps->empty()) continue;
        if (maps->size() != base.dim)
            throw DimensionMismatch("representation needs one matrix per basis element");
        for (const auto& mat : *maps) {
            if (mat.rows() != mat.cols() || !(mat.field() == base.field))
                throw DimensionMismatch("representation matrices must be square over the base field");
            if (m == 0) m = mat.rows();
            if (mat.rows() != m && !(m == 0))
                throw DimensionMismatch("representation matrices disagree on module dimension");
        }
    }
    r.module_dim = m;
    r.base = std::move(base);
    r.mu = std::move(mu);
    r.rho = std::move(rho);
    return r;
}

RepTriple adjoint_rep(const Algebra& a) {
    std::vector<Matrix> mu, rho;
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec e = basis_vec(a.dim, i, a.field);
        if (a.has_op("dot")) mu.push_back(mult_matrix(a, "dot", Side::Left, e));
        if (a.has_op("bracket")) rho.push_back(mult_matrix(a, "bracket", Side::Left, e));
    }
    RepTriple r = make_rep(a, std::move(mu), std::move(rho));
    r.module_dim = a.dim;
    return r;
}

RepTriple zero_rep(const Algebra& a, std::size_t module_dim) {
    std::vector<Matrix> mu(a.dim, Matrix(module_dim, module_dim, a.field));
    std::vector<Matrix> rho = mu;
    RepTriple r;
    r.base = a;
    r.module_dim = module_dim;
    r.mu = std::move(mu);
    r.rho = std::move(rho);
    return r;
}

namespace {

// Runs `law(i,j)` over all basis pairs; empty result means the law holds.
template <typename F>
RepReport check_pairs(const RepTriple& r, const std::string& law_name, F law) {
    RepReport report;
    for (std::size_t i = 0; i < r.base.dim; ++i)
        for (std::size_t j = 0; j < r.base.dim; ++j) {
            Matrix residual = law(i, j);
            if (!residual.is_zero()) {
                report.pass = false;
                report.failure = RepCounterExample{law_name, i, j, std::move(residual)};
                return report;
            }
        }
    report.pass = true;
    return report;
}

RepReport merge(std::initializer_list<RepReport> parts) {
    for (const auto& p : parts)
        if (!p.pass) return p;
    RepReport ok;
    ok.pass = true;
    return ok;
}

} // namespace

RepReport check_rep_comm_assoc(const RepTriple& r) {
    require_populated(r.mu, "mu");
    const Algebra& a = r.base;
    return check_pairs(r, "mu(x.y) = mu(x)mu(y)", [&](std::size_t i, std::size_t j) {
        Vec prod = apply(a, "dot", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
        return r.mu_of(prod) - r.mu[i] * r.mu[j];
    });
}

RepReport check_rep_lie(const RepTriple& r) {
    require_populated(r.rho, "rho");
    const Algebra& a = r.base;
    return check_pairs(r, "rho([x,y]) = [rho(x),rho(y)]", [&](std::size_t i, std::size_t j) {
        Vec prod = apply(a, "bracket", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
        return r.rho_of(prod) - (r.rho[i] * r.rho[j] - r.rho[j] * r.rho[i]);
    });
}

RepReport check_rep_poisson(const RepTriple& r) {
    require_populated(r.mu, "mu");
    require_populated(r.rho, "rho");
    const Algebra& a = r.base;
    RepReport rep = merge({
        check_rep_comm_assoc(r),
        check_rep_lie(r),
        check_pairs(r, "rho(x.y) = mu(x)rho(y) + mu(y)rho(x)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "dot", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return r.rho_of(prod) - (r.mu[i] * r.rho[j] + r.mu[j] * r.rho[i]);
        }),
        check_pairs(r, "mu([x,y]) = rho(x)mu(y) - mu(y)rho(x)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "bracket", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return r.mu_of(prod) - (r.rho[i] * r.mu[j] - r.mu[j] * r.rho[i]);
        }),
    });
    rep.base_advisory = !check_structure(a, "poisson").pass;
    return rep;
}

RepReport check_rep_tpa(const RepTriple& r) {
    require_populated(r.mu, "mu");
    require_populated(r.rho, "rho");
    const Algebra& a = r.base;
    Scalar c2 = two(a.field);
    RepReport rep = merge({
        check_rep_comm_assoc(r),
        check_rep_lie(r),
        check_pairs(r, "2mu(x)rho(y) = rho(x.y) + rho(y)mu(x)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "dot", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return (r.mu[i] * r.rho[j]).scaled(c2) - (r.rho_of(prod) + r.rho[j] * r.mu[i]);
        }),
        check_pairs(r, "2mu([x,y]) = rho(x)mu(y) - rho(y)mu(x)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "bracket", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return r.mu_of(prod).scaled(c2) - (r.rho[i] * r.mu[j] - r.rho[j] * r.mu[i]);
        }),
    });
    rep.base_advisory = !check_structure(a, "transposed-poisson").pass;
    return rep;
}

RepReport check_rep(const RepTriple& r, Family family) {
    switch (family) {
    case Family::CommAssoc: return check_rep_comm_assoc(r);
    case Family::Lie: return check_rep_lie(r);
    case Family::Poisson: return check_rep_poisson(r);
    case Family::TransposedPoisson: return check_rep_tpa(r);
    }
    throw UnknownKind("bad family");
}

RepTriple dual_rep(const RepTriple& r, int mu_sign, int rho_sign) {
    // The unsigned duals are the automatic ones per slot: -mu* (= mu^T) on
    // the product side and rho* (= -rho^T) on the bracket side, so that
    // dual_rep(r, +1, +1) is the (-mu*, rho*, V*) triple of the tables.
    auto dualize = [](const std::vector<Matrix>& maps, int sign, bool bracket_side) {
        std::vector<Matrix> out;
        out.reserve(maps.size());
        for (const auto& m : maps) {
            Matrix d = bracket_side ? -m.transposed() : m.transposed();
            out.push_back(sign < 0 ? -d : d);
        }
        return out;
    };
    RepTriple d;
    d.base = r.base;
    d.module_dim = r.module_dim;
    d.mu = dualize(r.mu, mu_sign, false);
    d.rho = dualize(r.rho, rho_sign, true);
    return d;
}

RepReport check_tpa_dual_conditions(const RepTriple& r) {
    require_populated(r.mu, "mu");
    require_populated(r.rho, "rho");
    const Algebra& a = r.base;
    return merge({
        check_pairs(r, "mu([x,y]) = 0", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "bracket", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return r.mu_of(prod);
        }),
        check_pairs(r, "rho(x.y) = mu(x)rho(y)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "dot", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return r.rho_of(prod) - r.mu[i] * r.rho[j];
        }),
    });
}

RepReport check_tpa_dual_rep_identities(const RepTriple& r) {
    require_populated(r.mu, "mu");
    require_populated(r.rho, "rho");
    const Algebra& a = r.base;
    Scalar c2 = two(a.field);
    return merge({
        check_pairs(r, "2rho(y)mu(x) = rho(x.y) + mu(x)rho(y)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "dot", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return (r.rho[j] * r.mu[i]).scaled(c2) - (r.rho_of(prod) + r.mu[i] * r.rho[j]);
        }),
        check_pairs(r, "2mu([x,y]) = mu(x)rho(y) - mu(y)rho(x)", [&](std::size_t i, std::size_t j) {
            Vec prod = apply(a, "bracket", basis_vec(a.dim, i, a.field), basis_vec(a.dim, j, a.field));
            return r.mu_of(prod).scaled(c2) - (r.mu[i] * r.rho[j] - r.mu[j] * r.rho[i]);
        }),
    });
}

RepTriple designated_rep(const Algebra& a, const StructureKind& k) {
    if (!k.rep || !k.flavor)
        throw UnknownKind("kind " + k.name + " has no designated representation");
    const RepSignature& sig = *k.rep;
    const DoubleFlavor& fl = *k.flavor;

    Algebra base(a.dim, a.field);
    base.add_op("dot", fl.product == 'C' ? a.op("dot") : anticommutator(a, "star"));
    base.add_op("bracket", fl.bracket == 'L' ? a.op("bracket") : commutator(a, "circ"));

    std::vector<Matrix> mu, rho;
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec e = basis_vec(a.dim, i, a.field);
        Matrix pm = mult_matrix(a, sig.prod_op, Side::Left, e);
        Matrix bm = mult_matrix(a, sig.bracket_op, Side::Left, e);
        if (sig.dual) {
            // table dual entries: mu = -sign * L^*, i.e. +sign * L^T
            pm = pm.transposed();
            bm = -bm.transposed();
        }
        if (sig.prod_sign < 0) pm = -pm;
        if (sig.bracket_sign < 0) bm = -bm;
        mu.push_back(std::move(pm));
        rho.push_back(std::move(bm));
    }
    RepTriple r;
    r.base = std::move(base);
    r.module_dim = a.dim;
    r.mu = std::move(mu);
    r.rho = std::move(rho);
    return r;
}

} // namespace opsplit
