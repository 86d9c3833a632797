#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "escalier/errors.hpp"

namespace escalier {

enum class FieldKind { Rationals, PrimeField };

// The coefficient field: the rationals, or Z/p for a prime p < 2^63.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint64_t p); // verifies primality

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const; // "rational" or "fp:<p>"
    static FieldSpec parse(std::string_view text);

private:
    FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// An immutable exact field element.  Rationals are kept in canonical reduced
// form (positive denominator, gcd 1); prime-field elements as residues in
// [0, p).  Elements of different fields never mix.
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
    static Scalar one(const FieldSpec& f) { return from_int(1, f); }
    static Scalar from_int(long v, const FieldSpec& f);
    static Scalar from_rational(const mpq_class& q); // rationals only
    static Scalar from_residue(std::uint64_t v, std::uint64_t p);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // DivisionByZero on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

    // numerator/denominator access for rationals (used by serialization)
    const mpq_class& rational() const;
    std::uint64_t residue() const;

private:
    struct Fp {
        std::uint64_t value;
        std::uint64_t p;
    };
    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    explicit Scalar(Fp f) : rep_(f) {}

    void check_same_field(const Scalar& o) const;

    std::variant<mpq_class, Fp> rep_;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg };

// Uniform entry point over the basic field operations; for Neg the second
// operand is ignored.
Scalar arith(ArithOp op, const Scalar& a, const Scalar& b);

// Grammar: -?[0-9]+(/[0-9]+)?  with a nonzero denominator.
Scalar parse_scalar(std::string_view text, const FieldSpec& spec);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

} // namespace escalier
