#include "escalier/point_trie.hpp"

#include <algorithm>
#include <sstream>

namespace escalier {

bool index_set_contains(const IndexSet& s, int value) {
    return std::binary_search(s.begin(), s.end(), value);
}

int min_intersection(std::span<const int> label, const IndexSet& s) {
    // labels list indices in insertion order, which is increasing
    for (int idx : label)
        if (index_set_contains(s, idx)) return idx;
    return 0;
}

PointTrie::PointTrie(std::size_t nvars, FieldSpec field) : n_(nvars), field_(field) {
    if (nvars == 0) throw DimensionMismatchError("trie needs at least one variable");
    levels_.resize(n_ + 1);
    levels_[0].push_back(Node{-1, Scalar(), {}, {}});
}

PointTrie::Node& PointTrie::node(NodeRef v) { return levels_[v.level][v.ordinal]; }
const PointTrie::Node& PointTrie::node(NodeRef v) const { return levels_[v.level][v.ordinal]; }

PointTrie::ExtendResult PointTrie::extend(const Point& p) {
    if (p.dimension() != n_) throw DimensionMismatchError("point dimension != trie depth");
    if (p.field() != field_) throw FieldMismatchError("point field != trie field");
    const int index = (int)count_ + 1;

    std::vector<std::uint32_t> path(n_, 0);
    levels_[0][0].label.push_back(index);

    std::uint32_t cur = 0; // ordinal at the current level
    std::size_t fork_level = 0;
    for (std::size_t h = 1; h <= n_; ++h) {
        Node& up = levels_[h - 1][cur];
        const Scalar& a = p.coord(h);
        std::int64_t found = -1;
        for (std::uint32_t child : up.children) {
            ++ops_;
            if (levels_[h][child].edge == a) {
                found = child;
                break;
            }
        }
        if (found < 0) {
            fork_level = h;
            for (std::size_t j = h; j <= n_; ++j) {
                Node& at = levels_[j - 1][cur];
                const std::uint32_t fresh = (std::uint32_t)levels_[j].size();
                levels_[j].push_back(Node{(std::int32_t)cur, p.coord(j), {index}, {}});
                at.children.push_back(fresh);
                path[j - 1] = fresh;
                cur = fresh;
                ++ops_;
            }
            break;
        }
        cur = (std::uint32_t)found;
        levels_[h][cur].label.push_back(index);
        path[h - 1] = cur;
    }
    if (fork_level == 0) {
        // full-depth match: roll the half-inserted labels back
        levels_[0][0].label.pop_back();
        for (std::size_t h = 1; h <= n_; ++h) levels_[h][path[h - 1]].label.pop_back();
        throw DuplicatePointError("point " + p.to_string() + " already present");
    }

    paths_.push_back(std::move(path));
    ++count_;
    if (count_ == 1) fork_level = 1; // lone branch: treated as forking at the top
    return ExtendResult{fork_level, NodeRef{(std::uint32_t)fork_level, paths_.back()[fork_level - 1]}};
}

PointTrie::NodeRef PointTrie::parent(NodeRef v) const {
    if (v.level == 0) throw IndexOutOfRangeError("root has no parent");
    return NodeRef{v.level - 1, (std::uint32_t)node(v).parent};
}

std::span<const int> PointTrie::label(NodeRef v) const { return node(v).label; }

std::vector<PointTrie::NodeRef> PointTrie::children(NodeRef v) const {
    std::vector<NodeRef> out;
    out.reserve(node(v).children.size());
    for (std::uint32_t c : node(v).children) out.push_back(NodeRef{v.level + 1, c});
    return out;
}

std::vector<PointTrie::NodeRef> PointTrie::siblings(NodeRef v) const {
    std::vector<NodeRef> out;
    if (v.level == 0) return out;
    for (std::uint32_t c : node(parent(v)).children)
        if (c != v.ordinal) out.push_back(NodeRef{v.level, c});
    return out;
}

const Scalar& PointTrie::edge_value(NodeRef v) const {
    if (v.level == 0) throw IndexOutOfRangeError("root has no incoming edge");
    return node(v).edge;
}

std::size_t PointTrie::level_width(std::size_t level) const {
    if (level > n_) throw IndexOutOfRangeError("level " + std::to_string(level));
    return levels_[level].size();
}

PointTrie::NodeRef PointTrie::node_on_path(int point_index, std::size_t level) const {
    if (point_index < 1 || (std::size_t)point_index > count_)
        throw IndexOutOfRangeError("point index " + std::to_string(point_index));
    if (level == 0) return root();
    if (level > n_) throw IndexOutOfRangeError("level " + std::to_string(level));
    return NodeRef{(std::uint32_t)level, paths_[(std::size_t)point_index - 1][level - 1]};
}

std::size_t PointTrie::fork(std::size_t s, NodeRef v, const IndexSet& S) const {
    for (int idx : label(parent(v))) {
        ++ops_;
        if (index_set_contains(S, idx)) return s;
    }
    return 0;
}

int PointTrie::sigma_antecedent(NodeRef v, const IndexSet& S) const {
    if (v.level == 0) throw NoAntecedentError("root has no siblings");
    const auto& sibs = node(parent(v)).children;
    std::size_t pos = 0;
    while (pos < sibs.size() && sibs[pos] != v.ordinal) ++pos;
    if (pos == sibs.size()) throw InconsistentStateError("node not found under its parent");
    // the antecedent is the highest index of S found among the sibling
    // labels; labels list indices increasingly, so scan them from the back
    int best = 0;
    for (std::size_t j = 0; j < sibs.size(); ++j) {
        if (j == pos) continue;
        const Node& cand = levels_[v.level][sibs[j]];
        for (std::size_t k = cand.label.size(); k-- > 0;) {
            ++ops_;
            const int idx = cand.label[k];
            if (idx <= best) break;
            if (index_set_contains(S, idx)) {
                best = idx;
                break;
            }
        }
    }
    if (best == 0) throw NoAntecedentError("no sibling label meets the working set");
    return best;
}

std::string PointTrie::debug_dump() const {
    std::ostringstream out;
    for (std::size_t h = 0; h <= n_; ++h) {
        out << "level " << h << ":";
        for (const Node& nd : levels_[h]) {
            out << "  ";
            if (h > 0) out << nd.edge.to_string() << "->";
            out << "{";
            for (std::size_t k = 0; k < nd.label.size(); ++k) {
                if (k) out << ",";
                out << nd.label[k];
            }
            out << "}";
        }
        out << "\n";
    }
    return out.str();
}

WitnessMatrix witness_matrix(const PointSet& points) {
    const std::size_t N = points.size();
    WitnessMatrix c(N, std::vector<int>(N, 0));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            const std::size_t n = points[i].dimension();
            int h = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                if (!(points[i].coord(k) == points[j].coord(k))) {
                    h = (int)k;
                    break;
                }
            }
            if (h == 0) throw DuplicatePointError("points " + std::to_string(i + 1) + " and " +
                                                  std::to_string(j + 1) + " coincide");
            c[i][j] = c[j][i] = h;
        }
    }
    return c;
}

WitnessMatrix witness_matrix_from_trie(const PointTrie& trie) {
    const std::size_t N = trie.size();
    WitnessMatrix c(N, std::vector<int>(N, 0));
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = i + 1; j <= N; ++j) {
            // least level where the two paths part ways
            std::size_t h = 1;
            while (h <= trie.depth() &&
                   trie.node_on_path((int)i, h) == trie.node_on_path((int)j, h))
                ++h;
            if (h > trie.depth())
                throw DuplicatePointError("trie holds coincident points");
            c[i - 1][j - 1] = c[j - 1][i - 1] = (int)h;
        }
    }
    return c;
}

} // namespace escalier
