#pragma once

#include <vector>

#include "escalier/point_trie.hpp"
#include "escalier/polynomial.hpp"

namespace escalier {

// One factor scale * (x_variable - root) of a separator.
struct LinearFactor {
    std::size_t variable; // 1-based
    Scalar root;
    Scalar scale;

    Scalar evaluate(const Point& p) const { return scale * (p.coord(variable) - root); }
    bool operator==(const LinearFactor& o) const {
        return variable == o.variable && root == o.root && scale == o.scale;
    }
};

// Product of linear factors worth 1 at its own point and 0 at every other
// point of the set; kept factored, expansion on demand.
class Separator {
public:
    Separator(int owner, std::size_t nvars, FieldSpec field)
        : owner_(owner), nvars_(nvars), field_(field) {}

    int owner() const { return owner_; }
    std::size_t degree() const { return factors_.size(); }
    const std::vector<LinearFactor>& factors() const { return factors_; }

    void push_factor(LinearFactor f);

    Scalar evaluate(const Point& p) const;
    Polynomial expand() const;

private:
    int owner_;
    std::size_t nvars_;
    FieldSpec field_;
    std::vector<LinearFactor> factors_;
};

// The factor in the witnessing variable c of points i and j: vanishes at P_j,
// equals 1 at P_i.
LinearFactor lagrange_factor(int i, int j, const PointSet& points, const WitnessMatrix& witness);

// Separator family maintained alongside the point trie.
class SeparatorFamily {
public:
    SeparatorFamily(std::size_t nvars, FieldSpec field) : nvars_(nvars), field_(field) {}

    std::size_t size() const { return seps_.size(); }
    const Separator& at(int i) const; // 1-based
    const std::vector<Separator>& all() const { return seps_; }

    // Call after the trie has been extended with points.back().
    void add_point(const PointTrie& trie, const PointSet& points);

private:
    std::size_t nvars_;
    FieldSpec field_;
    std::vector<Separator> seps_;
};

} // namespace escalier
