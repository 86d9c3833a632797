#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "escalier/errors.hpp"

namespace escalier {

// A monomial in n variables, stored as its exponent vector (g1,...,gn) with
// index i corresponding to x_i.
class Term {
public:
    explicit Term(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Term(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    static Term variable(std::size_t nvars, std::size_t i); // x_i, 1-based

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t deg(std::size_t i) const; // exponent of x_i, 1-based
    std::uint64_t degree() const;           // total degree
    bool is_unit() const { return degree() == 0; }

    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    Term times(const Term& o) const;
    Term times_var(std::size_t i) const;
    bool divides(const Term& o) const; // *this | o
    Term quotient_by(const Term& o) const;
    Term quotient_by_var(std::size_t i) const;

    // least i with a positive exponent; nullopt for the unit term
    std::optional<std::size_t> min_variable() const;

    bool operator==(const Term& o) const { return exps_ == o.exps_; }
    bool operator!=(const Term& o) const { return exps_ != o.exps_; }

    std::string to_string() const; // "1", "x2", "x1^2*x3", ...

private:
    std::vector<std::uint32_t> exps_;
};

// -1, 0, +1 comparing exponents from x_n down to x_1.
int lex_cmp(const Term& a, const Term& b);
bool lex_less(const Term& a, const Term& b);

struct LexLess {
    bool operator()(const Term& a, const Term& b) const { return lex_less(a, b); }
};

// pi_m keeps x_1..x_m (result lives in m variables); pi^m keeps x_m..x_n
// (result lives in n-m+1 variables, re-indexed from 1).
Term project_low(const Term& t, std::size_t m);
Term project_high(const Term& t, std::size_t m);

Term parse_term(std::string_view text, std::size_t nvars);

// true iff every divisor of every member is a member
bool is_order_ideal(const std::vector<Term>& terms);

// Minimal generating set of the complementary semigroup ideal of a finite
// order ideal: the terms t outside N whose quotients t/x_i all lie in N.
// Result is lex-sorted.
std::vector<Term> minimal_generators(const std::vector<Term>& order_ideal, std::size_t nvars);

std::vector<Term> lex_sorted(std::vector<Term> terms);

} // namespace escalier
