#include <doctest.h>

#include "opsplit/construct.hpp"
#include "opsplit/instances.hpp"
#include "opsplit/rng.hpp"

using namespace opsplit;

namespace {
const Algebra& alg(const std::string& name) { return catalog_instances().algebras.at(name); }
} // namespace

TEST_CASE("commutative associative representations") {
    const Algebra& n2 = alg("N2");
    RepTriple adj = adjoint_rep(n2);
    CHECK(check_rep_comm_assoc(adj).pass);
    CHECK(check_rep_comm_assoc(zero_rep(n2, 3)).pass);

    RepTriple bad = make_mu_rep(n2, {Matrix::identity(2, n2.field), Matrix(2, 2, n2.field)});
    RepReport r = check_rep_comm_assoc(bad);
    CHECK_FALSE(r.pass);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->law == "mu(x.y) = mu(x)mu(y)");
}

TEST_CASE("Lie representations") {
    const Algebra& aff2 = alg("aff2");
    CHECK(check_rep_lie(adjoint_rep(aff2)).pass);
    CHECK(check_rep_lie(zero_rep(aff2, 2)).pass);
    RepTriple bad = make_rho_rep(
        aff2, {Matrix::identity(2, aff2.field), Matrix::identity(2, aff2.field)});
    CHECK_FALSE(check_rep_lie(bad).pass);
}

TEST_CASE("Poisson representations: adjoint, coadjoint, zero module") {
    const auto& reps = catalog_instances().reps;
    CHECK(check_rep_poisson(reps.at("P3.adjoint")).pass);
    CHECK(check_rep_poisson(reps.at("P3.coadjoint")).pass);
    CHECK(check_rep_poisson(zero_rep(alg("P3"), 0)).pass);
}

TEST_CASE("representation checks still run on a non-Poisson base, with advisory") {
    RepTriple r = adjoint_rep(alg("TPA3"));
    RepReport rep = check_rep_poisson(r);
    CHECK(rep.base_advisory); // TPA3 is not Poisson
    RepReport tpa = check_rep_tpa(r);
    CHECK(tpa.pass);
    CHECK_FALSE(tpa.base_advisory);
}

TEST_CASE("transposed Poisson representation laws") {
    RepTriple adj = adjoint_rep(alg("TPA3"));
    CHECK(check_rep_tpa(adj).pass);
    CHECK(check_rep_tpa(zero_rep(alg("TPA3"), 2)).pass);

    RepTriple scaled = adj;
    scaled.mu[1] = scaled.mu[1].scaled(Scalar::rational(2));
    CHECK_FALSE(check_rep_tpa(scaled).pass);

    // zero mu with the adjoint rho satisfies both base laws but not the
    // first compatibility law: rho(x.y) must vanish and ad(e2) does not
    RepTriple halfzero = adj;
    for (auto& m : halfzero.mu) m = Matrix(3, 3, adj.base.field);
    RepReport r = check_rep_tpa(halfzero);
    CHECK_FALSE(r.pass);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->law == "2mu(x)rho(y) = rho(x.y) + rho(y)mu(x)");
}

TEST_CASE("dual representation matrices") {
    RepTriple adj = adjoint_rep(alg("aff2"));
    RepTriple dual = dual_rep(adj, 1, 1);
    // ad*(e0) = -ad(e0)^T maps e1* to -e1*
    Vec e1 = basis_vec(2, 1, adj.base.field);
    CHECK(vec_eq(dual.rho[0].apply(e1), vec_scale(Scalar::rational(-1), e1)));
    CHECK(check_rep_lie(dual).pass);

    RepTriple zero = zero_rep(alg("P3"), 2);
    CHECK(dual_rep(zero, 1, 1) == zero);
}

TEST_CASE("dual_rep is an involution for every sign choice") {
    Rng rng(17);
    const Algebra& p3 = alg("P3");
    for (int t = 0; t < 20; ++t) {
        std::vector<Matrix> mu, rho;
        for (std::size_t i = 0; i < p3.dim; ++i) {
            Matrix m(2, 2, p3.field), r(2, 2, p3.field);
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    m.at(a, b) = Scalar::rational(rng.integer_in(-5, 5));
                    r.at(a, b) = Scalar::rational(rng.integer_in(-5, 5));
                }
            mu.push_back(m);
            rho.push_back(r);
        }
        RepTriple rep = make_rep(p3, mu, rho);
        for (int s : {1, -1})
            for (int u : {1, -1})
                CHECK(dual_rep(dual_rep(rep, s, u), s, u) == rep);
    }
}

TEST_CASE("the dual criterion separates TPA3 from the trivial witness") {
    const auto& reps = catalog_instances().reps;
    const RepTriple& tpa3 = reps.at("TPA3.adjoint");
    CHECK_FALSE(check_tpa_dual_conditions(tpa3).pass);
    CHECK_FALSE(check_rep_tpa(dual_rep(tpa3, 1, 1)).pass);

    const RepTriple& trivial = reps.at("ZL3sub.adjoint");
    CHECK(check_rep_tpa(trivial).pass);
    CHECK(check_tpa_dual_conditions(trivial).pass);
    CHECK(check_rep_tpa(dual_rep(trivial, 1, 1)).pass);

    // adjoint of any transposed-Poisson algebra with zero bracket passes
    RepTriple flat = adjoint_rep(alg("N2P"));
    CHECK(check_tpa_dual_conditions(flat).pass);
}

TEST_CASE("designated representations reject wrong kinds") {
    CHECK_THROWS_AS(designated_rep(alg("Z2"), kind("zinbiel")), UnknownKind);
}

TEST_CASE("linear extension: laws on basis pairs imply laws on random vectors") {
    Rng rng(23);
    RepTriple adj = adjoint_rep(alg("P3"));
    const Algebra& a = adj.base;
    for (int t = 0; t < 100; ++t) {
        Vec x = zero_vec(a.dim, a.field), y = zero_vec(a.dim, a.field);
        for (auto& e : x) e = Scalar::rational(rng.integer_in(-4, 4));
        for (auto& e : y) e = Scalar::rational(rng.integer_in(-4, 4));
        Matrix lhs = adj.rho_of(apply(a, "dot", x, y));
        Matrix rhs = adj.mu_of(x) * adj.rho_of(y) + adj.mu_of(y) * adj.rho_of(x);
        CHECK(lhs == rhs);
    }
}
