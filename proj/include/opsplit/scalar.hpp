#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "opsplit/error.hpp"

namespace opsplit {

// Coefficient domain: the rationals (p == 0) or a prime field F_p.
// Moduli must be prime and >= 5 so that the integer coefficients
// appearing in the identity catalog (within {-3,...,3}) stay invertible.
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);

    std::string str() const; // "Q" or "F<p>"
    static Field parse(const std::string& s);
};

// Exact field element. Rationals are arbitrary precision and always
// reduced with positive denominator (mpq_class canonical form);
// prime-field residues are stored in [0, p).
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    static Scalar rational(long num, long den = 1);
    static Scalar rational(mpq_class q);
    static Scalar residue(long r, std::uint32_t p);
    static Scalar zero(const Field& f) { return from_integer(0, f); }
    static Scalar one(const Field& f) { return from_integer(1, f); }
    static Scalar from_integer(long n, const Field& f);

    Field field() const;
    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws SingularMatrix on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    // "n", "n/d" or "r mod p" (report form).
    std::string str() const;
    // File form: "n", "n/d" or the bare residue.
    std::string coeff_str() const;
    // Accepts both forms above.
    static Scalar parse(const std::string& s, const Field& f);

private:
    struct Fp {
        std::int64_t r;
        std::uint32_t p;
    };

    explicit Scalar(Fp v) : v_(v) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    const Fp& fp() const { return std::get<Fp>(v_); }
    bool is_fp() const { return std::holds_alternative<Fp>(v_); }

    std::variant<mpq_class, Fp> v_;
};

} // namespace opsplit
