#include "escalier/scalar.hpp"

#include <cctype>

namespace escalier {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

} // namespace

u64 mul_mod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    if (a % p == 0) throw DivisionByZeroError("inverse of zero mod " + std::to_string(p));
    // extended Euclid on (a, p); Bezout coefficients stay below p
    __int128 t = 0, new_t = 1;
    __int128 r = (__int128)p, new_r = (__int128)(a % p);
    while (new_r != 0) {
        const __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += (__int128)p;
    return (u64)t;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(u64 p) {
    if (!is_prime_u64(p))
        throw ParseError("modulus is not prime: " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "rational" : "fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "rationals" || text == "q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        u64 p = 0;
        const std::string digits(text.substr(3));
        if (digits.empty()) throw ParseError("bad field spec: " + std::string(text));
        for (char c : digits) {
            if (!std::isdigit((unsigned char)c)) throw ParseError("bad field spec: " + std::string(text));
            p = p * 10 + (u64)(c - '0');
        }
        return prime_field(p);
    }
    throw ParseError("bad field spec: " + std::string(text));
}

Scalar Scalar::from_int(long v, const FieldSpec& f) {
    if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(v));
    const u64 p = f.modulus();
    __int128 r = (__int128)v % (__int128)p;
    if (r < 0) r += (__int128)p;
    return Scalar(Fp{(u64)r, p});
}

Scalar Scalar::from_rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Scalar::from_residue(u64 v, u64 p) { return Scalar(Fp{v % p, p}); }

FieldSpec Scalar::field() const {
    if (std::holds_alternative<mpq_class>(rep_)) return FieldSpec::rationals();
    return FieldSpec::prime_field(std::get<Fp>(rep_).p);
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
    return std::get<Fp>(rep_).value == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
    const Fp& f = std::get<Fp>(rep_);
    return f.value == 1 % f.p;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (rep_.index() != o.rep_.index())
        throw FieldMismatchError("operands belong to different fields");
    if (const auto* f = std::get_if<Fp>(&rep_)) {
        if (f->p != std::get<Fp>(o.rep_).p)
            throw FieldMismatchError("operands belong to different prime fields");
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(mpq_class(*q + std::get<mpq_class>(o.rep_)));
    const Fp& a = std::get<Fp>(rep_);
    const Fp& b = std::get<Fp>(o.rep_);
    u64 s = a.value + b.value;
    if (s < a.value || s >= a.p) s -= a.p; // wrap-aware: operands sit below p
    return Scalar(Fp{s, a.p});
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(mpq_class(*q - std::get<mpq_class>(o.rep_)));
    const Fp& a = std::get<Fp>(rep_);
    const Fp& b = std::get<Fp>(o.rep_);
    u64 s = a.value >= b.value ? a.value - b.value : a.value + a.p - b.value;
    return Scalar(Fp{s, a.p});
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(mpq_class(*q * std::get<mpq_class>(o.rep_)));
    const Fp& a = std::get<Fp>(rep_);
    const Fp& b = std::get<Fp>(o.rep_);
    return Scalar(Fp{mul_mod(a.value, b.value, a.p), a.p});
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(mpq_class(*q / std::get<mpq_class>(o.rep_)));
    const Fp& a = std::get<Fp>(rep_);
    const Fp& b = std::get<Fp>(o.rep_);
    return Scalar(Fp{mul_mod(a.value, inv_mod(b.value, a.p), a.p), a.p});
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
    const Fp& a = std::get<Fp>(rep_);
    return Scalar(Fp{a.value == 0 ? 0 : a.p - a.value, a.p});
}

Scalar Scalar::inverse() const { return Scalar::one(field()) / *this; }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == std::get<mpq_class>(o.rep_);
    return std::get<Fp>(rep_).value == std::get<Fp>(o.rep_).value;
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
    return std::to_string(std::get<Fp>(rep_).value);
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
    throw FieldMismatchError("not a rational scalar");
}

std::uint64_t Scalar::residue() const {
    if (const auto* f = std::get_if<Fp>(&rep_)) return f->value;
    throw FieldMismatchError("not a prime-field scalar");
}

Scalar arith(ArithOp op, const Scalar& a, const Scalar& b) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
    }
    throw std::logic_error("unreachable");
}

Scalar parse_scalar(std::string_view text, const FieldSpec& spec) {
    auto parse_unsigned = [](std::string_view s) -> mpz_class {
        if (s.empty()) throw ParseError("empty number");
        mpz_class v = 0;
        for (char c : s) {
            if (!std::isdigit((unsigned char)c)) throw ParseError("bad scalar: " + std::string(s));
            v = v * 10 + (c - '0');
        }
        return v;
    };

    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    mpz_class num, den = 1;
    if (slash == std::string_view::npos) {
        num = parse_unsigned(body);
    } else {
        num = parse_unsigned(body.substr(0, slash));
        den = parse_unsigned(body.substr(slash + 1));
        if (den == 0) throw DivisionByZeroError("zero denominator in scalar: " + std::string(text));
    }
    if (neg) num = -num;

    if (spec.kind() == FieldKind::Rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar::from_rational(q);
    }
    const u64 p = spec.modulus();
    mpz_class pm(std::to_string(p));
    mpz_class n = num % pm;
    if (n < 0) n += pm;
    mpz_class d = den % pm;
    if (d == 0)
        throw FieldMismatchError("denominator not invertible mod " + std::to_string(p) + ": " +
                                 std::string(text));
    const u64 nv = (u64)n.get_ui();
    const u64 dv = (u64)d.get_ui();
    return Scalar::from_residue(mul_mod(nv, inv_mod(dv, p), p), p);
}

} // namespace escalier
