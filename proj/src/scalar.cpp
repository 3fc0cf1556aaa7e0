#include "opsplit/scalar.hpp"

#include <cstdlib>
#include <utility>

namespace opsplit {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t r, std::uint32_t p) {
    std::int64_t m = r % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return m;
}

// Extended Euclid; assumes 0 < a < p with p prime.
std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod_reduce(t, p);
}

void require_same(const Field& a, const Field& b) {
    if (!(a == b))
        throw FieldMismatch("cannot combine " + a.str() + " and " + b.str());
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (p < 5 || !is_prime(p))
        throw InvalidField("modulus must be a prime >= 5, got " + std::to_string(p));
    return Field{p};
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        char* end = nullptr;
        unsigned long p = std::strtoul(s.c_str() + 1, &end, 10);
        if (end && *end == '\0') return prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError("bad field descriptor \"" + s + "\" (expected \"Q\" or \"F<p>\")");
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw SingularMatrix("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::rational(mpq_class q) {
    if (q.get_den() == 0) throw SingularMatrix("rational with zero denominator");
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::residue(long r, std::uint32_t p) {
    Field f = Field::prime(p);
    return Scalar(Fp{mod_reduce(r, f.p), f.p});
}

Scalar Scalar::from_integer(long n, const Field& f) {
    if (f.is_rational()) return rational(n);
    return residue(n, f.p);
}

Field Scalar::field() const {
    return is_fp() ? Field{fp().p} : Field::rationals();
}

bool Scalar::is_zero() const {
    return is_fp() ? fp().r == 0 : rat() == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(field(), o.field());
    if (is_fp()) return Scalar(Fp{mod_reduce(fp().r + o.fp().r, fp().p), fp().p});
    return Scalar(mpq_class(rat() + o.rat()));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(field(), o.field());
    if (is_fp()) return Scalar(Fp{mod_reduce(fp().r - o.fp().r, fp().p), fp().p});
    return Scalar(mpq_class(rat() - o.rat()));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(field(), o.field());
    if (is_fp()) return Scalar(Fp{mod_reduce(fp().r * o.fp().r, fp().p), fp().p});
    return Scalar(mpq_class(rat() * o.rat()));
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (is_fp()) return Scalar(Fp{mod_reduce(-fp().r, fp().p), fp().p});
    return Scalar(mpq_class(-rat()));
}

bool Scalar::operator==(const Scalar& o) const {
    require_same(field(), o.field());
    if (is_fp()) return fp().r == o.fp().r;
    return rat() == o.rat();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw SingularMatrix("inverse of zero");
    if (is_fp()) return Scalar(Fp{mod_inverse(fp().r, fp().p), fp().p});
    return Scalar(mpq_class(1 / rat()));
}

std::string Scalar::str() const {
    if (is_fp()) return std::to_string(fp().r) + " mod " + std::to_string(fp().p);
    return rat().get_str();
}

std::string Scalar::coeff_str() const {
    if (is_fp()) return std::to_string(fp().r);
    return rat().get_str();
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
    std::string body = s;
    if (auto pos = s.find(" mod "); pos != std::string::npos) {
        if (f.is_rational())
            throw ParseError("residue \"" + s + "\" in a rational context");
        if (std::to_string(f.p) != s.substr(pos + 5))
            throw ParseError("residue \"" + s + "\" has wrong modulus for " + f.str());
        body = s.substr(0, pos);
    }
    try {
        mpq_class q(body);
        if (q.get_den() == 0)
            throw ParseError("\"" + s + "\" has a zero denominator");
        q.canonicalize();
        if (f.is_rational()) return rational(std::move(q));
        if (q.get_den() != 1)
            throw ParseError("\"" + s + "\" is not an integer residue");
        mpz_class r = q.get_num() % f.p;
        return residue(r.get_si(), f.p);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient \"" + s + "\"");
    }
}

} // namespace opsplit
