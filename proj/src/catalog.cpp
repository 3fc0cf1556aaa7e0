#include "opsplit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace opsplit {

std::string family_name(Family f) {
    switch (f) {
    case Family::CommAssoc: return "comm-assoc";
    case Family::Lie: return "lie";
    case Family::Poisson: return "poisson";
    case Family::TransposedPoisson: return "transposed-poisson";
    }
    return "";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::CommAssoc, Family::Lie, Family::Poisson, Family::TransposedPoisson})
        if (family_name(f) == s) return f;
    throw UnknownKind("unknown family \"" + s + "\"");
}

std::string form_law_name(FormLaw law) {
    switch (law) {
    case FormLaw::Invariant: return "invariant";
    case FormLaw::Symplectic: return "symplectic";
    case FormLaw::Commutative2Cocycle: return "commutative-2-cocycle";
    case FormLaw::ConnesCocycle: return "connes-cocycle";
    case FormLaw::CommutativeConnesCocycle: return "commutative-connes-cocycle";
    }
    return "";
}

std::string DoubleFlavor::str() const {
    std::string s;
    s += product;
    s += ',';
    s += bracket;
    s += ',';
    s += dual ? "dual" : "self";
    return s;
}

DoubleFlavor DoubleFlavor::parse(const std::string& s) {
    std::istringstream in(s);
    std::string prod, br, space;
    if (!std::getline(in, prod, ',') || !std::getline(in, br, ',') || !std::getline(in, space))
        throw ParseError("bad flavor \"" + s + "\" (expected e.g. \"C,A,self\")");
    auto up = [](std::string t) {
        for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return t;
    };
    prod = up(prod);
    br = up(br);
    if (prod.size() != 1 || std::string("CZA").find(prod[0]) == std::string::npos)
        throw ParseError("bad product flavor \"" + prod + "\"");
    if (br.size() != 1 || std::string("LPA").find(br[0]) == std::string::npos)
        throw ParseError("bad bracket flavor \"" + br + "\"");
    bool dual;
    if (space == "self") dual = false;
    else if (space == "dual") dual = true;
    else throw ParseError("bad space \"" + space + "\" (want self|dual)");
    return DoubleFlavor{prod[0], br[0], dual};
}

namespace {

Expr x() { return ev(0); }
Expr y() { return ev(1); }
Expr z() { return ev(2); }

Expr dot(Expr a, Expr b) { return eop("dot", std::move(a), std::move(b)); }
Expr br(Expr a, Expr b) { return eop("bracket", std::move(a), std::move(b)); }
Expr st(Expr a, Expr b) { return eop("star", std::move(a), std::move(b)); }
Expr ci(Expr a, Expr b) { return eop("circ", std::move(a), std::move(b)); }
Expr sc(Expr a, Expr b) { return eop("succ", std::move(a), std::move(b)); }
Expr pc(Expr a, Expr b) { return eop("prec", std::move(a), std::move(b)); }

IdentityExpr ident(std::string id, int arity, std::vector<IdentityTerm> terms) {
    return IdentityExpr{std::move(id), arity, std::move(terms)};
}

std::string rep_text(const RepSignature& r) {
    auto part = [&](const std::string& op, int sign) {
        std::string core;
        if (op == "bracket") core = r.dual ? "ad*" : "ad";
        else core = (r.dual ? "L*_" : "L_") + op;
        return (sign < 0 ? "-" : "") + core;
    };
    int shown_prod_sign = r.dual ? -r.prod_sign : r.prod_sign;
    return "(" + part(r.prod_op, shown_prod_sign) + ", " + part(r.bracket_op, r.bracket_sign) +
           ", " + (r.dual ? "A*" : "A") + ")";
}

RepSignature make_rep(const DoubleFlavor& fl) {
    RepSignature r;
    r.prod_op = (fl.product == 'C') ? "dot" : "star";
    r.prod_sign = (fl.product == 'A') ? -1 : 1;
    r.bracket_op = (fl.bracket == 'L') ? "bracket" : "circ";
    r.bracket_sign = (fl.bracket == 'A') ? -1 : 1;
    r.dual = fl.dual;
    r.text = rep_text(r);
    return r;
}

StructureKind base_kind(std::string name, std::vector<std::string> ops,
                        std::vector<IdentityExpr> ids) {
    StructureKind k;
    k.name = std::move(name);
    k.required_ops = std::move(ops);
    k.identities = std::move(ids);
    return k;
}

StructureKind mixed_kind(std::string name, Family fam, DoubleFlavor fl,
                         std::vector<IdentityExpr> compat) {
    StructureKind k;
    k.name = std::move(name);
    k.family = fam;
    k.flavor = fl;
    k.rep = make_rep(fl);
    k.required_ops.push_back(fl.product == 'C' ? "dot" : "star");
    k.required_ops.push_back(fl.bracket == 'L' ? "bracket" : "circ");
    switch (fl.product) {
    case 'C': k.prereqs.push_back("comm-assoc"); break;
    case 'Z': k.prereqs.push_back("zinbiel"); break;
    case 'A': k.prereqs.push_back("anti-zinbiel"); break;
    }
    switch (fl.bracket) {
    case 'L': k.prereqs.push_back("lie"); break;
    case 'P': k.prereqs.push_back("pre-lie"); break;
    case 'A': k.prereqs.push_back("anti-pre-lie"); break;
    }
    k.identities = std::move(compat);
    return k;
}

std::vector<StructureKind> make_kinds() {
    std::vector<StructureKind> ks;

    ks.push_back(base_kind("comm-assoc", {"dot"},
        {ident("comm-assoc.commutativity", 2,
             {{1, dot(x(), y())}, {-1, dot(y(), x())}}),
         ident("comm-assoc.associativity", 3,
             {{1, dot(dot(x(), y()), z())}, {-1, dot(x(), dot(y(), z()))}})}));

    ks.push_back(base_kind("lie", {"bracket"},
        {ident("lie.antisymmetry", 2,
             {{1, br(x(), y())}, {1, br(y(), x())}}),
         ident("lie.jacobi", 3,
             {{1, br(br(x(), y()), z())},
              {1, br(br(y(), z()), x())},
              {1, br(br(z(), x()), y())}})}));

    ks.push_back(base_kind("pre-lie", {"circ"},
        {ident("pre-lie.associator-symmetry", 3,
             {{1, ci(ci(x(), y()), z())},
              {-1, ci(x(), ci(y(), z()))},
              {-1, ci(ci(y(), x()), z())},
              {1, ci(y(), ci(x(), z()))}})}));

    ks.push_back(base_kind("anti-pre-lie", {"circ"},
        {ident("anti-pre-lie.main", 3,
             {{1, ci(x(), ci(y(), z()))},
              {-1, ci(y(), ci(x(), z()))},
              {-1, ci(ci(y(), x()), z())},
              {1, ci(ci(x(), y()), z())}}),
         ident("anti-pre-lie.cyclic", 3,
             {{1, ci(ci(x(), y()), z())}, {-1, ci(ci(y(), x()), z())},
              {1, ci(ci(y(), z()), x())}, {-1, ci(ci(z(), y()), x())},
              {1, ci(ci(z(), x()), y())}, {-1, ci(ci(x(), z()), y())}})}));

    ks.push_back(base_kind("zinbiel", {"star"},
        {ident("zinbiel.main", 3,
             {{1, st(x(), st(y(), z()))},
              {-1, st(st(x(), y()), z())},
              {-1, st(st(y(), x()), z())}})}));

    ks.push_back(base_kind("anti-zinbiel", {"star"},
        {ident("anti-zinbiel.main", 3,
             {{1, st(x(), st(y(), z()))},
              {1, st(st(x(), y()), z())},
              {1, st(st(y(), x()), z())}}),
         ident("anti-zinbiel.right-commutativity", 3,
             {{1, st(x(), st(y(), z()))}, {-1, st(x(), st(z(), y()))}})}));

    ks.push_back(base_kind("dendriform", {"succ", "prec"},
        {ident("dendriform.left", 3,
             {{1, sc(x(), sc(y(), z()))},
              {-1, sc(sc(x(), y()), z())},
              {-1, sc(pc(x(), y()), z())}}),
         ident("dendriform.right", 3,
             {{1, pc(pc(x(), y()), z())},
              {-1, pc(x(), sc(y(), z()))},
              {-1, pc(x(), pc(y(), z()))}}),
         ident("dendriform.middle", 3,
             {{1, pc(sc(x(), y()), z())}, {-1, sc(x(), pc(y(), z()))}})}));

    ks.push_back(base_kind("anti-dendriform", {"succ", "prec"},
        {ident("anti-dendriform.left", 3,
             {{1, sc(x(), sc(y(), z()))},
              {1, sc(sc(x(), y()), z())},
              {1, sc(pc(x(), y()), z())}}),
         ident("anti-dendriform.right", 3,
             {{1, sc(x(), sc(y(), z()))},
              {1, pc(x(), sc(y(), z()))},
              {1, pc(x(), pc(y(), z()))}}),
         ident("anti-dendriform.outer", 3,
             {{1, sc(x(), sc(y(), z()))}, {-1, pc(pc(x(), y()), z())}}),
         ident("anti-dendriform.middle", 3,
             {{1, pc(sc(x(), y()), z())}, {-1, sc(x(), pc(y(), z()))}})}));

    {
        StructureKind k = base_kind("poisson", {"dot", "bracket"},
            {ident("poisson.leibniz", 3,
                 {{1, br(z(), dot(x(), y()))},
                  {-1, dot(br(z(), x()), y())},
                  {-1, dot(x(), br(z(), y()))}})});
        k.prereqs = {"comm-assoc", "lie"};
        ks.push_back(std::move(k));
    }

    {
        StructureKind k = base_kind("transposed-poisson", {"dot", "bracket"},
            {ident("transposed-poisson.leibniz", 3,
                 {{2, dot(z(), br(x(), y()))},
                  {-1, br(dot(z(), x()), y())},
                  {-1, br(x(), dot(z(), y()))}})});
        k.prereqs = {"comm-assoc", "lie"};
        ks.push_back(std::move(k));
    }

    // --- mixed splittings of Poisson algebras -------------------------------

    ks.push_back(mixed_kind("PCP", Family::Poisson, {'C', 'P', false},
        {ident("PCP.compat1", 3,
             {{1, ci(dot(x(), y()), z())},
              {-1, dot(x(), ci(y(), z()))},
              {-1, dot(y(), ci(x(), z()))}}),
         ident("PCP.compat2", 3,
             {{1, dot(ci(x(), y()), z())}, {-1, dot(ci(y(), x()), z())},
              {-1, ci(x(), dot(y(), z()))}, {1, dot(y(), ci(x(), z()))}}),
         ident("PCP.compat3", 3,
             {{1, ci(z(), dot(x(), y()))},
              {-1, dot(z(), ci(x(), y()))},
              {-1, dot(z(), ci(y(), x()))}})}));

    {
        StructureKind k = mixed_kind("PCA", Family::Poisson, {'C', 'A', false},
            {ident("PCA.compat1", 3,
                 {{1, ci(dot(x(), y()), z())},
                  {-1, dot(x(), ci(y(), z()))},
                  {-1, dot(y(), ci(x(), z()))}}),
             ident("PCA.compat2", 3,
                 {{1, dot(ci(x(), y()), z())}, {-1, dot(ci(y(), x()), z())},
                  {-1, dot(y(), ci(x(), z()))}, {1, ci(x(), dot(y(), z()))}}),
             ident("PCA.compat3", 3,
                 {{1, ci(z(), dot(x(), y()))},
                  {1, dot(z(), ci(x(), y()))},
                  {1, dot(z(), ci(y(), x()))},
                  {-2, ci(dot(x(), y()), z())}})});
        k.forms = {{FormLaw::Invariant, FormLaw::Commutative2Cocycle}};
        k.canonical_form_flavor = 'd';
        ks.push_back(std::move(k));
    }

    ks.push_back(mixed_kind("PZL", Family::Poisson, {'Z', 'L', false},
        {ident("PZL.compat1", 3,
             {{1, br(st(x(), y()), z())}, {1, br(st(y(), x()), z())},
              {-1, st(x(), br(y(), z()))}, {-1, st(y(), br(x(), z()))}}),
         ident("PZL.compat2", 3,
             {{1, st(br(x(), y()), z())},
              {-1, br(x(), st(y(), z()))},
              {1, st(y(), br(x(), z()))}})}));

    {
        StructureKind k = mixed_kind("PZP", Family::Poisson, {'Z', 'P', false},
            {ident("PZP.compat1", 3,
                 {{1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())},
                  {-1, st(x(), ci(y(), z()))}, {-1, st(y(), ci(x(), z()))}}),
             ident("PZP.compat2", 3,
                 {{1, st(ci(x(), y()), z())}, {-1, st(ci(y(), x()), z())},
                  {-1, ci(x(), st(y(), z()))}, {1, st(y(), ci(x(), z()))}})});
        k.aliases = {"pre-poisson"};
        k.forms = {{FormLaw::ConnesCocycle, FormLaw::Symplectic}};
        k.canonical_form_flavor = 'p';
        ks.push_back(std::move(k));
    }

    ks.push_back(mixed_kind("PZA", Family::Poisson, {'Z', 'A', false},
        {ident("PZA.compat1", 3,
             {{1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())},
              {-1, st(x(), ci(y(), z()))}, {-1, st(y(), ci(x(), z()))}}),
         ident("PZA.compat2", 3,
             {{1, st(ci(x(), y()), z())}, {-1, st(ci(y(), x()), z())},
              {1, ci(x(), st(y(), z()))}, {-1, st(y(), ci(x(), z()))}}),
         ident("PZA.compat3", 3,
             {{1, ci(z(), st(x(), y()))}, {1, ci(z(), st(y(), x()))},
              {1, st(z(), ci(x(), y()))}, {1, st(z(), ci(y(), x()))},
              {-1, st(y(), ci(z(), x()))}, {-1, st(x(), ci(z(), y()))},
              {-1, ci(x(), st(z(), y()))}, {-1, ci(y(), st(z(), x()))}})}));

    {
        StructureKind k = mixed_kind("PAL", Family::Poisson, {'A', 'L', false},
            {ident("PAL.compat1", 3,
                 {{1, st(br(x(), y()), z())},
                  {-1, br(x(), st(y(), z()))},
                  {1, st(y(), br(x(), z()))}}),
             ident("PAL.compat2", 3,
                 {{1, br(z(), st(x(), y()))}, {1, br(z(), st(y(), x()))},
                  {-1, st(x(), br(y(), z()))}, {-1, st(y(), br(x(), z()))}})});
        k.forms = {{FormLaw::CommutativeConnesCocycle, FormLaw::Invariant}};
        k.canonical_form_flavor = 'd';
        ks.push_back(std::move(k));
    }

    ks.push_back(mixed_kind("PAP", Family::Poisson, {'A', 'P', false},
        {ident("PAP.compat1", 3,
             {{1, st(ci(x(), y()), z())}, {-1, st(ci(y(), x()), z())},
              {-1, ci(x(), st(y(), z()))}, {1, st(y(), ci(x(), z()))}}),
         ident("PAP.compat2", 3,
             {{1, st(x(), ci(y(), z()))}, {1, st(y(), ci(x(), z()))}}),
         ident("PAP.compat3", 3,
             {{1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())}})}));

    {
        StructureKind k = mixed_kind("PAA", Family::Poisson, {'A', 'A', false},
            {ident("PAA.compat1", 3,
                 {{1, st(ci(x(), y()), z())}, {-1, st(ci(y(), x()), z())},
                  {1, ci(x(), st(y(), z()))}, {-1, st(y(), ci(x(), z()))}}),
             ident("PAA.compat2", 3,
                 {{1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())},
                  {1, st(x(), ci(y(), z()))}, {1, st(y(), ci(x(), z()))}}),
             ident("PAA.compat3", 3,
                 {{1, ci(z(), st(x(), y()))}, {1, ci(z(), st(y(), x()))},
                  {-1, ci(st(x(), y()), z())}, {-1, ci(st(y(), x()), z())},
                  {-1, st(x(), ci(z(), y()))}, {-1, st(y(), ci(z(), x()))}})});
        k.forms = {{FormLaw::CommutativeConnesCocycle, FormLaw::Commutative2Cocycle}};
        k.canonical_form_flavor = 'd';
        ks.push_back(std::move(k));
    }

    // --- mixed splittings of transposed Poisson algebras, self space --------

    ks.push_back(mixed_kind("TCPO", Family::TransposedPoisson, {'C', 'P', false},
        {ident("TCPO.compat1", 3,
             {{2, dot(x(), ci(y(), z()))},
              {-1, ci(dot(x(), y()), z())},
              {-1, ci(y(), dot(x(), z()))}}),
         ident("TCPO.compat2", 3,
             {{2, dot(z(), ci(x(), y()))}, {-2, dot(z(), ci(y(), x()))},
              {-1, ci(x(), dot(z(), y()))}, {1, ci(y(), dot(z(), x()))}})}));

    ks.push_back(mixed_kind("TCAO", Family::TransposedPoisson, {'C', 'A', false},
        {ident("TCAO.compat1", 3,
             {{2, dot(x(), ci(y(), z()))},
              {-1, ci(dot(x(), y()), z())},
              {-1, ci(y(), dot(x(), z()))}}),
         ident("TCAO.compat2", 3,
             {{2, dot(z(), ci(x(), y()))}, {-2, dot(z(), ci(y(), x()))},
              {1, ci(x(), dot(z(), y()))}, {-1, ci(y(), dot(z(), x()))}})}));

    ks.push_back(mixed_kind("TZLO", Family::TransposedPoisson, {'Z', 'L', false},
        {ident("TZLO.compat1", 3, {{1, st(x(), br(y(), z()))}}),
         ident("TZLO.compat2", 3, {{1, st(br(x(), y()), z())}}),
         ident("TZLO.compat3", 3, {{1, br(x(), st(y(), z()))}})}));

    ks.push_back(mixed_kind("TZPO", Family::TransposedPoisson, {'Z', 'P', false},
        {ident("TZPO.compat1", 3,
             {{2, st(x(), ci(y(), z()))},
              {-1, ci(st(x(), y()), z())}, {-1, ci(st(y(), x()), z())},
              {-1, ci(y(), st(x(), z()))}}),
         ident("TZPO.compat2", 3,
             {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
              {-1, ci(x(), st(y(), z()))}, {1, ci(y(), st(x(), z()))}})}));

    ks.push_back(mixed_kind("TZAO", Family::TransposedPoisson, {'Z', 'A', false},
        {ident("TZAO.compat1", 3,
             {{2, st(x(), ci(y(), z()))},
              {-1, ci(st(x(), y()), z())}, {-1, ci(st(y(), x()), z())},
              {-1, ci(y(), st(x(), z()))}}),
         ident("TZAO.compat2", 3,
             {{1, st(ci(x(), y()), z())}, {-1, st(ci(y(), x()), z())}}),
         ident("TZAO.compat3", 3,
             {{1, ci(x(), st(y(), z()))}, {-1, ci(y(), st(x(), z()))}})}));

    ks.push_back(mixed_kind("TALO", Family::TransposedPoisson, {'A', 'L', false},
        {ident("TALO.compat1", 3, {{1, st(x(), br(y(), z()))}}),
         ident("TALO.compat2", 3, {{1, st(br(x(), y()), z())}}),
         ident("TALO.compat3", 3, {{1, br(x(), st(y(), z()))}})}));

    ks.push_back(mixed_kind("TAPO", Family::TransposedPoisson, {'A', 'P', false},
        {ident("TAPO.compat1", 3,
             {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
              {-1, ci(x(), st(y(), z()))}, {1, ci(y(), st(x(), z()))}}),
         ident("TAPO.compat2", 3,
             {{2, st(x(), ci(y(), z()))},
              {1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())},
              {-1, ci(y(), st(x(), z()))}}),
         ident("TAPO.compat3", 3,
             {{1, ci(st(z(), x()), y())}, {1, ci(st(x(), z()), y())},
              {-1, ci(st(z(), y()), x())}, {-1, ci(st(y(), z()), x())}})}));

    ks.push_back(mixed_kind("TAAO", Family::TransposedPoisson, {'A', 'A', false},
        {ident("TAAO.compat1", 3,
             {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
              {-1, ci(y(), st(x(), z()))}, {1, ci(x(), st(y(), z()))}}),
         ident("TAAO.compat2", 3,
             {{2, st(x(), ci(y(), z()))},
              {1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())},
              {-1, ci(y(), st(x(), z()))}}),
         ident("TAAO.compat3", 3,
             {{1, ci(st(z(), x()), y())}, {1, ci(st(x(), z()), y())},
              {-1, ci(st(z(), y()), x())}, {-1, ci(st(y(), z()), x())},
              {1, ci(x(), st(y(), z()))}, {-1, ci(y(), st(x(), z()))}})}));

    // --- mixed splittings of transposed Poisson algebras, dual space --------

    ks.push_back(mixed_kind("TCPD", Family::TransposedPoisson, {'C', 'P', true},
        {ident("TCPD.compat1", 3,
             {{2, ci(x(), dot(y(), z()))},
              {-1, ci(dot(z(), x()), y())},
              {-1, dot(z(), ci(x(), y()))}}),
         ident("TCPD.compat2", 3,
             {{2, dot(ci(x(), y()), z())}, {-2, dot(ci(y(), x()), z())},
              {-1, dot(x(), ci(y(), z()))}, {1, dot(y(), ci(x(), z()))}}),
         ident("TCPD.compat3", 3,
             {{3, ci(y(), dot(z(), x()))}, {-3, ci(x(), dot(z(), y()))},
              {-1, ci(dot(z(), x()), y())}, {1, ci(dot(z(), y()), x())}})}));

    {
        StructureKind k = mixed_kind("TCAD", Family::TransposedPoisson, {'C', 'A', true},
            {ident("TCAD.compat1", 3,
                 {{2, ci(x(), dot(y(), z()))},
                  {-1, ci(dot(z(), x()), y())},
                  {-1, dot(z(), ci(x(), y()))}}),
             ident("TCAD.compat2", 3,
                 {{2, dot(ci(x(), y()), z())}, {-2, dot(ci(y(), x()), z())},
                  {-1, dot(y(), ci(x(), z()))}, {1, dot(x(), ci(y(), z()))}})});
        k.aliases = {"anti-pre-lie-poisson"};
        k.forms = {{FormLaw::Invariant, FormLaw::Commutative2Cocycle}};
        k.canonical_form_flavor = 'd';
        ks.push_back(std::move(k));
    }

    ks.push_back(mixed_kind("TZLD", Family::TransposedPoisson, {'Z', 'L', true},
        {ident("TZLD.compat1", 3,
             {{2, br(y(), st(x(), z()))},
              {-1, br(st(x(), y()), z())}, {-1, br(st(y(), x()), z())},
              {-1, st(x(), br(y(), z()))}}),
         ident("TZLD.compat2", 3,
             {{2, st(br(x(), y()), z())},
              {-1, st(x(), br(y(), z()))}, {1, st(y(), br(x(), z()))}}),
         ident("TZLD.compat3", 3,
             {{2, st(z(), br(x(), y()))},
              {1, br(y(), st(x(), z()))}, {1, br(y(), st(z(), x()))},
              {-1, br(x(), st(y(), z()))}, {-1, br(x(), st(z(), y()))}})}));

    {
        StructureKind k = mixed_kind("TZPD", Family::TransposedPoisson, {'Z', 'P', true},
            {ident("TZPD.compat1", 3,
                 {{2, ci(y(), st(x(), z()))},
                  {-1, ci(st(x(), y()), z())}, {-1, ci(st(y(), x()), z())},
                  {-1, st(x(), ci(y(), z()))}}),
             ident("TZPD.compat2", 3,
                 {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
                  {-1, st(x(), ci(y(), z()))}, {1, st(y(), ci(x(), z()))}}),
             ident("TZPD.compat3", 3,
                 {{1, ci(y(), st(x(), z()))}, {1, ci(y(), st(z(), x()))},
                  {-1, ci(x(), st(y(), z()))}, {-1, ci(x(), st(z(), y()))},
                  {1, st(z(), ci(x(), y()))}, {-1, st(z(), ci(y(), x()))}})});
        k.forms = {{FormLaw::ConnesCocycle, FormLaw::Symplectic}};
        k.canonical_form_flavor = 'p';
        ks.push_back(std::move(k));
    }

    ks.push_back(mixed_kind("TZAD", Family::TransposedPoisson, {'Z', 'A', true},
        {ident("TZAD.compat1", 3,
             {{2, ci(y(), st(x(), z()))},
              {-1, ci(st(x(), y()), z())}, {-1, ci(st(y(), x()), z())},
              {-1, st(x(), ci(y(), z()))}}),
         ident("TZAD.compat2", 3,
             {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
              {-1, st(y(), ci(x(), z()))}, {1, st(x(), ci(y(), z()))}}),
         ident("TZAD.compat3", 3,
             {{1, ci(x(), st(y(), z()))}, {-1, ci(y(), st(x(), z()))},
              {-3, ci(x(), st(z(), y()))}, {3, ci(y(), st(z(), x()))},
              {3, st(z(), ci(x(), y()))}, {-3, st(z(), ci(y(), x()))}})}));

    {
        StructureKind k = mixed_kind("TALD", Family::TransposedPoisson, {'A', 'L', true},
            {ident("TALD.compat1", 3,
                 {{2, st(br(x(), y()), z())},
                  {-1, st(x(), br(y(), z()))}, {1, st(y(), br(x(), z()))}}),
             ident("TALD.compat2", 3,
                 {{2, br(y(), st(x(), z()))},
                  {-1, st(x(), br(y(), z()))},
                  {1, br(st(x(), y()), z())}, {1, br(st(y(), x()), z())}}),
             ident("TALD.compat3", 3,
                 {{1, st(x(), br(y(), z()))}, {-1, st(y(), br(x(), z()))},
                  {2, br(x(), st(z(), y()))}, {-2, br(y(), st(z(), x()))}})});
        k.forms = {{FormLaw::CommutativeConnesCocycle, FormLaw::Invariant}};
        k.canonical_form_flavor = 'd';
        ks.push_back(std::move(k));
    }

    ks.push_back(mixed_kind("TAPD", Family::TransposedPoisson, {'A', 'P', true},
        {ident("TAPD.compat1", 3,
             {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
              {-1, st(x(), ci(y(), z()))}, {1, st(y(), ci(x(), z()))}}),
         ident("TAPD.compat2", 3,
             {{2, ci(y(), st(x(), z()))},
              {-1, st(x(), ci(y(), z()))},
              {1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())}}),
         ident("TAPD.compat3", 3,
             {{1, ci(x(), st(z(), y()))}, {-1, ci(y(), st(z(), x()))},
              {1, st(z(), ci(x(), y()))}, {-1, st(z(), ci(y(), x()))},
              {3, ci(y(), st(x(), z()))}, {-3, ci(x(), st(y(), z()))}})}));

    {
        StructureKind k = mixed_kind("TAAD", Family::TransposedPoisson, {'A', 'A', true},
            {ident("TAAD.compat1", 3,
                 {{2, st(ci(x(), y()), z())}, {-2, st(ci(y(), x()), z())},
                  {-1, st(y(), ci(x(), z()))}, {1, st(x(), ci(y(), z()))}}),
             ident("TAAD.compat2", 3,
                 {{2, ci(y(), st(x(), z()))},
                  {-1, st(x(), ci(y(), z()))},
                  {1, ci(st(x(), y()), z())}, {1, ci(st(y(), x()), z())}}),
             ident("TAAD.compat3", 3,
                 {{1, ci(x(), st(y(), z()))}, {1, ci(x(), st(z(), y()))},
                  {-1, ci(y(), st(x(), z()))}, {-1, ci(y(), st(z(), x()))},
                  {1, st(z(), ci(x(), y()))}, {-1, st(z(), ci(y(), x()))}})});
        k.forms = {{FormLaw::CommutativeConnesCocycle, FormLaw::Commutative2Cocycle}};
        k.canonical_form_flavor = 'd';
        ks.push_back(std::move(k));
    }

    return ks;
}

std::string lower(const std::string& s) {
    std::string r = s;
    std::transform(r.begin(), r.end(), r.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return r;
}

} // namespace

const std::vector<StructureKind>& list_kinds() {
    static const std::vector<StructureKind> kinds = make_kinds();
    return kinds;
}

const StructureKind& kind(const std::string& name) {
    const std::string want = lower(name);
    for (const auto& k : list_kinds()) {
        if (lower(k.name) == want) return k;
        for (const auto& a : k.aliases)
            if (lower(a) == want) return k;
    }
    throw UnknownKind("no structure kind named \"" + name + "\"");
}

StructureReport check_structure(const Algebra& a, const StructureKind& k) {
    StructureReport report;
    report.kind = k.name;
    for (const auto& op : k.required_ops)
        if (!a.has_op(op))
            throw MissingOperation("kind " + k.name + " requires operation \"" + op + "\"");

    auto run = [&](const IdentityExpr& id) {
        auto cex = check_identity(a, id);
        report.results.push_back({id.id, !cex.has_value(), cex});
        if (cex && !report.first_failure) report.first_failure = cex;
        return !cex.has_value();
    };

    for (const auto& pname : k.prereqs) {
        const StructureKind& p = kind(pname);
        for (const auto& id : p.identities)
            if (!run(id)) {
                report.pass = false;
                return report;
            }
    }
    for (const auto& id : k.identities)
        if (!run(id)) {
            report.pass = false;
            return report;
        }
    report.pass = true;
    return report;
}

StructureReport check_structure(const Algebra& a, const std::string& kind_name) {
    return check_structure(a, kind(kind_name));
}

} // namespace opsplit
