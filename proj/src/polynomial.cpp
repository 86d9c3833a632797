#include "escalier/polynomial.hpp"

namespace escalier {

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionMismatchError("point with no coordinates");
    const FieldSpec f = coords_.front().field();
    for (const auto& c : coords_)
        if (c.field() != f) throw FieldMismatchError("point mixes coordinate fields");
}

const Scalar& Point::coord(std::size_t h) const {
    if (h < 1 || h > coords_.size()) throw IndexOutOfRangeError("coordinate index " + std::to_string(h));
    return coords_[h - 1];
}

std::string Point::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (k) out += ",";
        out += coords_[k].to_string();
    }
    return out + ")";
}

void validate_point_set(const PointSet& points, std::size_t nvars, const FieldSpec& field) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].dimension() != nvars)
            throw DimensionMismatchError("point " + std::to_string(i + 1) + " has dimension " +
                                         std::to_string(points[i].dimension()));
        if (points[i].field() != field)
            throw FieldMismatchError("point " + std::to_string(i + 1) + " has a different field");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j])
                throw DuplicatePointError("points " + std::to_string(j + 1) + " and " +
                                          std::to_string(i + 1) + " coincide");
    }
}

Scalar evaluate_term(const Term& t, const Point& p) {
    if (t.nvars() != p.dimension()) throw DimensionMismatchError("term/point dimension mismatch");
    Scalar r = Scalar::one(p.field());
    for (std::size_t i = 1; i <= t.nvars(); ++i) {
        for (std::uint32_t e = 0; e < t.deg(i); ++e) r *= p.coord(i);
    }
    return r;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars, c.field());
    p.add_term(Term(nvars), c);
    return p;
}

Polynomial Polynomial::from_term(const Term& t, const Scalar& c) {
    Polynomial p(t.nvars(), c.field());
    p.add_term(t, c);
    return p;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [t, c] : coeffs_) d = std::max(d, t.degree());
    return d;
}

Scalar Polynomial::coefficient(const Term& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Term& t, const Scalar& c) {
    if (t.nvars() != nvars_) throw DimensionMismatchError("term dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [t, c] : o.coeffs_) r.add_term(t, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [t, c] : o.coeffs_) r.add_term(t, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_, field_);
    for (const auto& [t1, c1] : coeffs_)
        for (const auto& [t2, c2] : o.coeffs_) r.add_term(t1.times(t2), c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(nvars_, field_);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : coeffs_) r.add_term(t, v * c);
    return r;
}

Scalar Polynomial::evaluate(const Point& p) const {
    Scalar r = Scalar::zero(field_);
    for (const auto& [t, c] : coeffs_) r += c * evaluate_term(t, p);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        if (t.is_unit())
            out += c.to_string();
        else if (c.is_one())
            out += t.to_string();
        else
            out += c.to_string() + "*" + t.to_string();
    }
    return out;
}

} // namespace escalier
