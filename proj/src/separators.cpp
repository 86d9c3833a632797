#include "escalier/separators.hpp"

namespace escalier {

void Separator::push_factor(LinearFactor f) {
    if (f.scale.is_zero()) throw InconsistentStateError("separator factor with zero scale");
    for (const auto& g : factors_)
        if (g.variable == f.variable && g.root == f.root)
            throw InconsistentStateError("repeated separator factor");
    factors_.push_back(std::move(f));
}

Scalar Separator::evaluate(const Point& p) const {
    if (p.dimension() != nvars_) throw DimensionMismatchError("separator/point dimension mismatch");
    Scalar r = Scalar::one(field_);
    for (const auto& f : factors_) r *= f.evaluate(p);
    return r;
}

Polynomial Separator::expand() const {
    Polynomial r = Polynomial::constant(nvars_, Scalar::one(field_));
    for (const auto& f : factors_) {
        Polynomial lin(nvars_, field_);
        lin.add_term(Term::variable(nvars_, f.variable), f.scale);
        lin.add_term(Term(nvars_), -(f.scale * f.root));
        r = r * lin;
    }
    return r;
}

LinearFactor lagrange_factor(int i, int j, const PointSet& points, const WitnessMatrix& witness) {
    if (i == j) throw SamePointError("no factor separates a point from itself");
    const std::size_t c = (std::size_t)witness[(std::size_t)i - 1][(std::size_t)j - 1];
    const Scalar& ai = points[(std::size_t)i - 1].coord(c);
    const Scalar& aj = points[(std::size_t)j - 1].coord(c);
    if (ai == aj) throw InconsistentStateError("witness coordinate does not separate");
    return LinearFactor{c, aj, (ai - aj).inverse()};
}

const Separator& SeparatorFamily::at(int i) const {
    if (i < 1 || (std::size_t)i > seps_.size())
        throw IndexOutOfRangeError("separator " + std::to_string(i));
    return seps_[(std::size_t)i - 1];
}

void SeparatorFamily::add_point(const PointTrie& trie, const PointSet& points) {
    const int N = (int)points.size();
    if ((std::size_t)N != seps_.size() + 1 || trie.size() != points.size())
        throw InconsistentStateError("separator family out of step with the trie");
    const Point& pn = points[(std::size_t)N - 1];

    Separator q(N, nvars_, field_);
    for (std::size_t j = 1; j <= nvars_; ++j) {
        const auto v = trie.node_on_path(N, j);
        const auto sibs = trie.siblings(v);
        for (const auto& sib : sibs) {
            // every point of the sibling subtree shares its j-th coordinate,
            // so any representative yields the same factor
            const int rep = trie.label(sib).front();
            const Scalar& aj_rep = points[(std::size_t)rep - 1].coord(j);
            q.push_factor(LinearFactor{j, aj_rep, (pn.coord(j) - aj_rep).inverse()});
        }
        if (trie.label(v).size() == 1) {
            // fresh singleton: the new point just split off here, so the old
            // separators of every sibling point pick up one vanishing factor
            for (const auto& sib : sibs) {
                for (int idx : trie.label(sib)) {
                    const Scalar& aj_i = points[(std::size_t)idx - 1].coord(j);
                    seps_[(std::size_t)idx - 1].push_factor(
                        LinearFactor{j, pn.coord(j), (aj_i - pn.coord(j)).inverse()});
                }
            }
        }
    }
    seps_.push_back(std::move(q));
}

} // namespace escalier
