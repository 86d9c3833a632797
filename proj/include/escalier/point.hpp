#pragma once

#include <string>
#include <vector>

#include "escalier/scalar.hpp"

namespace escalier {

// A point of k^n.  All coordinates share one field.
class Point {
public:
    explicit Point(std::vector<Scalar> coords);

    std::size_t dimension() const { return coords_.size(); }
    const Scalar& coord(std::size_t h) const; // 1-based
    const std::vector<Scalar>& coords() const { return coords_; }
    FieldSpec field() const { return coords_.front().field(); }

    bool operator==(const Point& o) const { return coords_ == o.coords_; }

    std::string to_string() const;

private:
    std::vector<Scalar> coords_;
};

using PointSet = std::vector<Point>;

// Throws on empty sets, mixed dimensions/fields, or duplicates.
void validate_point_set(const PointSet& points, std::size_t nvars, const FieldSpec& field);

} // namespace escalier
