#include "opsplit/instances.hpp"

#include "opsplit/construct.hpp"

namespace opsplit {

namespace {

struct Entry {
    std::size_t i, j, k;
    long c;
};

OpTensor tensor(std::size_t dim, std::initializer_list<Entry> entries) {
    OpTensor t(dim, Field::rationals());
    for (const auto& e : entries)
        t.at(e.i, e.j, e.k) = Scalar::rational(e.c);
    return t;
}

OpTensor zero_tensor(std::size_t dim) { return OpTensor(dim, Field::rationals()); }

// e_i . e_j = e_{i+j}, truncated above the top basis index.
OpTensor truncated_poly_tensor(std::size_t dim) {
    OpTensor t(dim, Field::rationals());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j + i < dim; ++j)
            t.at(i, j, i + j) = Scalar::rational(1);
    return t;
}

// [e_i, e_j] = (i - j) e_{i+j}, truncated.
OpTensor graded_bracket_tensor(std::size_t dim) {
    OpTensor t(dim, Field::rationals());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j + i < dim; ++j)
            t.at(i, j, i + j) = Scalar::rational(static_cast<long>(i) - static_cast<long>(j));
    return t;
}

// e_i o e_j = (2i + j) e_{i+j}, truncated.
OpTensor graded_anti_pre_lie_tensor(std::size_t dim) {
    OpTensor t(dim, Field::rationals());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j + i < dim; ++j)
            t.at(i, j, i + j) = Scalar::rational(static_cast<long>(2 * i + j));
    return t;
}

Algebra alg(std::size_t dim, std::map<std::string, OpTensor> ops) {
    Algebra a(dim, Field::rationals());
    for (auto& [name, t] : ops) a.add_op(name, std::move(t));
    return a;
}

Matrix gram(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
    Matrix g(n, n, Field::rationals());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) g.at(i, j++) = Scalar::rational(v);
        ++i;
    }
    return g;
}

InstanceSet build() {
    InstanceSet s;
    auto& A = s.algebras;

    // Single-operation witnesses.
    A["Z2"] = alg(2, {{"star", tensor(2, {{0, 0, 1, 1}})}});
    A["Z3"] = alg(3, {{"star", tensor(3, {{0, 0, 1, 1}, {0, 1, 2, 2}, {1, 0, 2, 1}})}});
    A["AZ3"] = alg(3, {{"star", tensor(3, {{0, 0, 1, 1}, {0, 1, 2, -2}, {1, 0, 2, 1}})}});
    A["N2"] = alg(2, {{"dot", tensor(2, {{0, 0, 1, 1}})}});
    A["kx3"] = alg(3, {{"dot", truncated_poly_tensor(3)}});
    A["aff2"] = alg(2, {{"bracket", tensor(2, {{0, 1, 1, 1}, {1, 0, 1, -1}})}});
    A["heis3"] = alg(3, {{"bracket", tensor(3, {{0, 1, 2, 1}, {1, 0, 2, -1}})}});
    A["sl2"] = alg(3, {{"bracket", tensor(3, {{0, 1, 1, 2}, {1, 0, 1, -2},
                                              {0, 2, 2, -2}, {2, 0, 2, 2},
                                              {1, 2, 0, 1}, {2, 1, 0, -1}})}});
    A["PL2"] = alg(2, {{"circ", tensor(2, {{0, 0, 0, -1}, {1, 0, 1, -1}})}});
    A["APL3"] = alg(3, {{"circ", graded_anti_pre_lie_tensor(3)}});

    // Dendriform pair from Z3 via succ(x,y) = x*y, prec(x,y) = y*x,
    // and its anti-dendriform sibling from AZ3.
    {
        const OpTensor& z3 = A["Z3"].op("star");
        OpTensor prec(3, Field::rationals());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    prec.at(i, j, k) = z3.at(j, i, k);
        A["D3"] = alg(3, {{"succ", z3}, {"prec", std::move(prec)}});
    }
    {
        const OpTensor& az3 = A["AZ3"].op("star");
        OpTensor prec(3, Field::rationals());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    prec.at(i, j, k) = az3.at(j, i, k);
        A["AD3"] = alg(3, {{"succ", az3}, {"prec", std::move(prec)}});
    }

    // Poisson / transposed-Poisson witnesses.
    {
        OpTensor dot(3, Field::rationals());
        dot.at(0, 0, 0) = Scalar::rational(1);
        for (std::size_t j = 1; j < 3; ++j) {
            dot.at(0, j, j) = Scalar::rational(1);
            dot.at(j, 0, j) = Scalar::rational(1);
        }
        A["P3"] = alg(3, {{"dot", std::move(dot)},
                          {"bracket", tensor(3, {{1, 2, 2, 1}, {2, 1, 2, -1}})}});
    }
    A["TPA3"] = alg(3, {{"dot", truncated_poly_tensor(3)},
                        {"bracket", graded_bracket_tensor(3)}});
    A["N2P"] = alg(2, {{"dot", tensor(2, {{0, 0, 1, 1}})}, {"bracket", zero_tensor(2)}});
    A["aff2P"] = alg(2, {{"dot", zero_tensor(2)},
                         {"bracket", tensor(2, {{0, 1, 1, 1}, {1, 0, 1, -1}})}});
    A["sl2P"] = alg(3, {{"dot", zero_tensor(3)}, {"bracket", A["sl2"].op("bracket")}});
    A["kx3P"] = alg(3, {{"dot", truncated_poly_tensor(3)}, {"bracket", zero_tensor(3)}});

    // Mixed-splitting witnesses.
    A["TZPO2"] = alg(2, {{"star", tensor(2, {{0, 0, 1, 1}})},
                         {"circ", tensor(2, {{0, 0, 1, -1}})}});
    A["TCAD3"] = alg(3, {{"dot", truncated_poly_tensor(3)},
                         {"circ", graded_anti_pre_lie_tensor(3)}});
    A["CP2"] = alg(2, {{"dot", tensor(2, {{0, 0, 1, 1}})},
                       {"circ", tensor(2, {{0, 0, 1, -1}})}});
    A["ZL3"] = alg(3, {{"star", tensor(3, {{0, 0, 2, 1}})},
                       {"bracket", tensor(3, {{0, 1, 2, 1}, {1, 0, 2, -1}})}});
    A["z3c"] = alg(3, {{"star", A["Z3"].op("star")}, {"circ", zero_tensor(3)}});
    A["az3c"] = alg(3, {{"star", A["AZ3"].op("star")}, {"circ", zero_tensor(3)}});
    A["z3l"] = alg(3, {{"star", A["Z3"].op("star")}, {"bracket", zero_tensor(3)}});
    A["az3l"] = alg(3, {{"star", A["AZ3"].op("star")}, {"bracket", zero_tensor(3)}});

    // Everything-zero algebras carrying every conventional operation.
    for (auto [name, dim] : {std::pair<const char*, std::size_t>{"zero2", 2}, {"zero3", 3}}) {
        Algebra z(dim, Field::rationals());
        for (const char* op : {"dot", "bracket", "star", "circ", "succ", "prec"})
            z.add_op(op, zero_tensor(dim));
        A[name] = std::move(z);
    }

    // Deliberately broken instance: every kind rejects it.
    {
        OpTensor aff = tensor(2, {{0, 1, 1, 1}, {1, 0, 1, -1}});
        Algebra bad(2, Field::rationals());
        bad.add_op("dot", aff);
        bad.add_op("bracket", tensor(2, {{0, 0, 1, 1}}));
        bad.add_op("star", aff);
        bad.add_op("circ", aff);
        bad.add_op("succ", aff);
        bad.add_op("prec", zero_tensor(2));
        A["mismatch"] = std::move(bad);
    }
    // Passes the base axioms but breaks the compatibility layer.
    A["N2PL2"] = alg(2, {{"dot", tensor(2, {{0, 0, 1, 1}})},
                         {"circ", tensor(2, {{0, 0, 0, -1}, {1, 0, 1, -1}})}});

    // Forms.
    s.forms["sympl2"] = {"aff2P", BilinForm{gram(2, {{0, 1}, {-1, 0}})}};
    s.forms["sym2"] = {"aff2P", BilinForm{gram(2, {{0, 1}, {1, 0}})}};
    s.forms["antidiag3"] = {"kx3P", BilinForm{gram(3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})}};
    s.forms["killing3"] = {"sl2P", BilinForm{gram(3, {{8, 0, 0}, {0, 0, 4}, {0, 4, 0}})}};

    // Representations.
    s.reps["P3.adjoint"] = adjoint_rep(A["P3"]);
    s.reps["P3.coadjoint"] = dual_rep(s.reps["P3.adjoint"], 1, 1);
    s.reps["TPA3.adjoint"] = adjoint_rep(A["TPA3"]);
    s.reps["aff2.adjoint"] = adjoint_rep(A["aff2"]);
    s.reps["N2.adjoint"] = adjoint_rep(A["N2"]);
    // Trivial transposed-Poisson witness: the sub-adjacent algebra of ZL3.
    s.reps["ZL3sub.adjoint"] = adjoint_rep(sub_adjacent_unchecked(A["ZL3"], {'Z', 'L', false}));

    return s;
}

std::map<std::string, KindFixtures> build_fixtures() {
    std::map<std::string, KindFixtures> f;
    f["comm-assoc"] = {{"N2", "kx3", "zero3"}, {"mismatch"}};
    f["lie"] = {{"aff2", "heis3", "sl2", "zero3"}, {"mismatch"}};
    f["pre-lie"] = {{"PL2", "CP2", "zero3"}, {"mismatch", "APL3"}};
    f["anti-pre-lie"] = {{"APL3", "CP2", "zero3"}, {"mismatch", "PL2"}};
    f["zinbiel"] = {{"Z2", "Z3", "ZL3", "zero3"}, {"mismatch", "AZ3"}};
    f["anti-zinbiel"] = {{"Z2", "AZ3", "ZL3", "zero3"}, {"mismatch", "Z3"}};
    f["dendriform"] = {{"D3", "zero3"}, {"mismatch", "AD3"}};
    f["anti-dendriform"] = {{"AD3", "zero3"}, {"mismatch", "D3"}};
    f["poisson"] = {{"P3", "N2P", "aff2P", "sl2P", "kx3P", "zero3"}, {"TPA3", "mismatch"}};
    f["transposed-poisson"] = {{"TPA3", "N2P", "aff2P", "kx3P", "zero3"}, {"P3", "mismatch"}};

    f["PCP"] = {{"CP2", "zero3"}, {"mismatch", "N2PL2"}};
    f["PCA"] = {{"CP2", "zero3"}, {"mismatch", "N2PL2"}};
    f["PZL"] = {{"ZL3", "z3l", "zero3"}, {"mismatch"}};
    f["PZP"] = {{"TZPO2", "z3c", "zero3"}, {"mismatch"}};
    f["PZA"] = {{"TZPO2", "z3c", "zero3"}, {"mismatch"}};
    f["PAL"] = {{"ZL3", "az3l", "zero3"}, {"mismatch"}};
    f["PAP"] = {{"TZPO2", "az3c", "zero3"}, {"mismatch"}};
    f["PAA"] = {{"TZPO2", "az3c", "zero3"}, {"mismatch"}};

    f["TCPO"] = {{"CP2", "zero3"}, {"mismatch", "N2PL2", "TCAD3"}};
    f["TCAO"] = {{"CP2", "zero3"}, {"mismatch", "N2PL2"}};
    f["TZLO"] = {{"ZL3", "z3l", "zero3"}, {"mismatch"}};
    f["TZPO"] = {{"TZPO2", "z3c", "zero3"}, {"mismatch"}};
    f["TZAO"] = {{"TZPO2", "z3c", "zero3"}, {"mismatch"}};
    f["TALO"] = {{"ZL3", "az3l", "zero3"}, {"mismatch"}};
    f["TAPO"] = {{"TZPO2", "az3c", "zero3"}, {"mismatch"}};
    f["TAAO"] = {{"TZPO2", "az3c", "zero3"}, {"mismatch"}};

    f["TCPD"] = {{"CP2", "zero3"}, {"mismatch", "N2PL2", "TCAD3"}};
    f["TCAD"] = {{"TCAD3", "CP2", "zero3"}, {"mismatch", "N2PL2"}};
    f["TZLD"] = {{"ZL3", "z3l", "zero3"}, {"mismatch"}};
    f["TZPD"] = {{"TZPO2", "z3c", "zero3"}, {"mismatch"}};
    f["TZAD"] = {{"TZPO2", "z3c", "zero3"}, {"mismatch"}};
    f["TALD"] = {{"ZL3", "az3l", "zero3"}, {"mismatch"}};
    f["TAPD"] = {{"TZPO2", "az3c", "zero3"}, {"mismatch"}};
    f["TAAD"] = {{"TZPO2", "az3c", "zero3"}, {"mismatch"}};

    // Every fixture verdict is an oracle result, re-established at load.
    const auto& inst = catalog_instances();
    for (const auto& [kname, fixes] : f) {
        for (const auto& name : fixes.passing)
            if (!check_structure(inst.algebras.at(name), kname).pass)
                throw StructureCheckFailed("catalog fixture " + name +
                                           " no longer passes " + kname);
        for (const auto& name : fixes.failing)
            if (check_structure(inst.algebras.at(name), kname).pass)
                throw StructureCheckFailed("catalog fixture " + name +
                                           " unexpectedly passes " + kname);
    }
    return f;
}

std::map<std::string, FormRowFixture> build_form_rows() {
    return {
        {"PCA", {"kx3P", "antidiag3"}},
        {"PZP", {"aff2P", "sympl2"}},
        {"PAL", {"sl2P", "killing3"}},
        {"PAA", {"aff2P", "sym2"}},
        {"TCAD", {"TPA3", "antidiag3"}},
        {"TZPD", {"aff2P", "sympl2"}},
        {"TALD", {"sl2P", "killing3"}},
        {"TAAD", {"aff2P", "sym2"}},
    };
}

} // namespace

const InstanceSet& catalog_instances() {
    static const InstanceSet s = build();
    return s;
}

const std::map<std::string, KindFixtures>& kind_fixtures() {
    static const std::map<std::string, KindFixtures> f = build_fixtures();
    return f;
}

const std::map<std::string, FormRowFixture>& form_row_fixtures() {
    static const std::map<std::string, FormRowFixture> f = build_form_rows();
    return f;
}

} // namespace opsplit
