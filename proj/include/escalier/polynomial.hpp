#pragma once

#include <map>
#include <string>
#include <vector>

#include "escalier/point.hpp"
#include "escalier/scalar.hpp"
#include "escalier/term.hpp"

namespace escalier {

// Sparse multivariate polynomial: lex-ordered term -> nonzero coefficient.
class Polynomial {
public:
    Polynomial(std::size_t nvars, FieldSpec field) : nvars_(nvars), field_(field) {}

    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial from_term(const Term& t, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }
    std::uint64_t total_degree() const;

    const std::map<Term, Scalar, LexLess>& coefficients() const { return coeffs_; }
    Scalar coefficient(const Term& t) const;

    void add_term(const Term& t, const Scalar& c); // accumulates, drops zeros

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;

    Scalar evaluate(const Point& p) const;

    bool operator==(const Polynomial& o) const;

    std::string to_string() const;

private:
    std::size_t nvars_;
    FieldSpec field_;
    std::map<Term, Scalar, LexLess> coeffs_;
};

Scalar evaluate_term(const Term& t, const Point& p);

} // namespace escalier
