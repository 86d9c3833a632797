#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "escalier/point.hpp"

namespace escalier {

// Sorted set of 1-based point indices; the working sets handed to fork and
// the antecedent search.
using IndexSet = std::vector<int>;

bool index_set_contains(const IndexSet& s, int value);
int min_intersection(std::span<const int> label, const IndexSet& s); // 0 if empty

// Depth-n labelled trie of shared coordinate prefixes.  Level h nodes carry
// the indices of all inserted points whose first h coordinates agree; sibling
// edges under one parent carry pairwise distinct coordinate values.  Node
// handles (level, ordinal) stay valid as the trie grows: new nodes are only
// ever appended to the right of their level.
class PointTrie {
public:
    struct NodeRef {
        std::uint32_t level = 0;
        std::uint32_t ordinal = 0;
        bool operator==(const NodeRef& o) const { return level == o.level && ordinal == o.ordinal; }
    };

    struct ExtendResult {
        std::size_t fork_level; // first level whose node label is the new singleton
        NodeRef fork_node;
    };

    PointTrie(std::size_t nvars, FieldSpec field);

    std::size_t depth() const { return n_; }
    std::size_t size() const { return count_; }
    const FieldSpec& field() const { return field_; }

    // Insert the next point (index size()+1); rejects duplicates.
    ExtendResult extend(const Point& p);

    NodeRef root() const { return {0, 0}; }
    NodeRef parent(NodeRef v) const;
    std::span<const int> label(NodeRef v) const;
    std::vector<NodeRef> children(NodeRef v) const;        // left to right
    std::vector<NodeRef> siblings(NodeRef v) const;        // left to right, v excluded
    const Scalar& edge_value(NodeRef v) const;             // edge from parent(v) to v
    std::size_t level_width(std::size_t level) const;
    NodeRef node_on_path(int point_index, std::size_t level) const;

    // Returns s when the label of parent(v) meets S, else 0.
    std::size_t fork(std::size_t s, NodeRef v, const IndexSet& S) const;

    // The highest point index among v's sibling labels that belongs to S.
    // Callers restrict S to the indices whose committed rows agree with the
    // new point's partial row; under that restriction this is the antecedent
    // with maximal index.
    int sigma_antecedent(NodeRef v, const IndexSet& S) const;

    std::uint64_t op_count() const { return ops_; }

    // Level-order rendering of labels and edge values.
    std::string debug_dump() const;

private:
    struct Node {
        std::int32_t parent; // ordinal at the previous level, -1 for the root
        Scalar edge;
        std::vector<int> label;
        std::vector<std::uint32_t> children; // ordinals at the next level
    };

    Node& node(NodeRef v);
    const Node& node(NodeRef v) const;

    std::size_t n_;
    FieldSpec field_;
    std::size_t count_ = 0;
    std::vector<std::vector<Node>> levels_;       // levels_[0] holds the root
    std::vector<std::vector<std::uint32_t>> paths_; // paths_[i][h] = ordinal of point i+1 at level h+1
    mutable std::uint64_t ops_ = 0;
};

// c[i][j] = least coordinate index where P_{i+1} and P_{j+1} differ; 0 on the
// diagonal.
using WitnessMatrix = std::vector<std::vector<int>>;

WitnessMatrix witness_matrix(const PointSet& points);                 // direct scan
WitnessMatrix witness_matrix_from_trie(const PointTrie& trie);        // via deepest shared node

} // namespace escalier
