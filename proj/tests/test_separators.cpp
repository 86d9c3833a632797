#include <doctest.h>

#include <random>

#include "escalier/lex_game.hpp"
#include "escalier/separators.hpp"
#include "test_support.hpp"

using namespace escalier;
using escalier::testing::pt;
using escalier::testing::pts;
using escalier::testing::random_instance;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q_of(long num, long den = 1) {
    return Scalar::from_rational(mpq_class(num, den));
}

// run trie + separators together over a point list
std::pair<PointTrie, SeparatorFamily> run(std::size_t n, const FieldSpec& f, const PointSet& x) {
    PointTrie trie(n, f);
    SeparatorFamily seps(n, f);
    PointSet sofar;
    for (const auto& p : x) {
        trie.extend(p);
        sofar.push_back(p);
        seps.add_point(trie, sofar);
    }
    return {std::move(trie), std::move(seps)};
}

} // namespace

TEST_CASE("lagrange factors on the three-point example") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}, {0, 2}});
    const WitnessMatrix w = witness_matrix(x);

    const LinearFactor f21 = lagrange_factor(2, 1, x, w); // -(x1 - 1)
    CHECK(f21.variable == 1);
    CHECK(f21.root == q_of(1));
    CHECK(f21.scale == q_of(-1));

    const LinearFactor f12 = lagrange_factor(1, 2, x, w); // x1
    CHECK(f12.variable == 1);
    CHECK(f12.root == q_of(0));
    CHECK(f12.scale == q_of(1));

    CHECK_THROWS_AS(lagrange_factor(2, 2, x, w), SamePointError);
}

TEST_CASE("lagrange factor over a prime field") {
    const FieldSpec f7 = FieldSpec::prime_field(7);
    const PointSet x = pts(f7, {{1}, {3}});
    const WitnessMatrix w = witness_matrix(x);
    const LinearFactor f = lagrange_factor(1, 2, x, w); // (x-3)/(1-3) = 3(x-3) mod 7
    CHECK(f.scale == Scalar::from_int(3, f7));
    CHECK(f.evaluate(x[0]) == Scalar::one(f7));
    CHECK(f.evaluate(x[1]).is_zero());
}

TEST_CASE("three-point family matches the worked run") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}, {0, 2}});
    auto [trie, seps] = run(2, Q, x);

    // Q1 = x1
    CHECK(seps.at(1).factors() == std::vector<LinearFactor>{{1, q_of(0), q_of(1)}});
    // Q2 = (x1-1)(x2-2), carried as -(x1-1) * -(x2-2)
    CHECK(seps.at(2).factors() ==
          std::vector<LinearFactor>{{1, q_of(1), q_of(-1)}, {2, q_of(2), q_of(-1)}});
    // Q3 = -(x1-1)(x2-1)
    CHECK(seps.at(3).factors() ==
          std::vector<LinearFactor>{{1, q_of(1), q_of(-1)}, {2, q_of(1), q_of(1)}});

    // expanded forms
    const Polynomial q2 = seps.at(2).expand();
    CHECK(q2.coefficient(parse_term("x1*x2", 2)) == q_of(1));
    CHECK(q2.coefficient(parse_term("x1", 2)) == q_of(-2));
    CHECK(q2.coefficient(parse_term("x2", 2)) == q_of(-1));
    CHECK(q2.coefficient(Term(2)) == q_of(2));
    CHECK(q2.term_count() == 4);

    const Polynomial q3 = seps.at(3).expand();
    CHECK(q3.coefficient(parse_term("x1*x2", 2)) == q_of(-1));
    CHECK(q3.coefficient(parse_term("x1", 2)) == q_of(1));
    CHECK(q3.coefficient(parse_term("x2", 2)) == q_of(1));
    CHECK(q3.coefficient(Term(2)) == q_of(-1));
}

TEST_CASE("intermediate family after two points") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}});
    auto [trie, seps] = run(2, Q, x);
    CHECK(seps.at(1).factors() == std::vector<LinearFactor>{{1, q_of(0), q_of(1)}});
    CHECK(seps.at(2).factors() == std::vector<LinearFactor>{{1, q_of(1), q_of(-1)}});
}

TEST_CASE("single point has the constant separator") {
    auto [trie, seps] = run(3, Q, pts(Q, {{4, 5, 6}}));
    CHECK(seps.at(1).degree() == 0);
    CHECK(seps.at(1).evaluate(pt(Q, {9, 9, 9})) == Scalar::one(Q));
}

TEST_CASE("evaluation in factored and expanded form") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}, {0, 2}});
    auto [trie, seps] = run(2, Q, x);
    const Separator& q2 = seps.at(2);
    CHECK(q2.evaluate(x[1]) == Scalar::one(Q));
    CHECK(q2.evaluate(x[0]).is_zero());
    const Polynomial e2 = q2.expand();
    for (const auto& p : x) CHECK(e2.evaluate(p) == q2.evaluate(p));
    CHECK(e2.evaluate(pt(Q, {5, 7})) == q2.evaluate(pt(Q, {5, 7})));
    CHECK_THROWS_AS(q2.evaluate(pt(Q, {1, 2, 3})), DimensionMismatchError);
}

TEST_CASE("kronecker property and squarefreeness on random instances") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 40; ++rep) {
        const auto inst = random_instance(rng(), rep % 2 == 0);
        CAPTURE(rep);
        auto [trie, seps] = run(inst.n, inst.field, inst.points);
        const std::size_t N = inst.points.size();
        std::size_t r = 1;
        for (std::size_t lv = 0; lv < inst.n; ++lv)
            for (std::size_t u = 0; u < trie.level_width(lv); ++u)
                r = std::max(r, trie.children({(std::uint32_t)lv, (std::uint32_t)u}).size());
        for (std::size_t i = 1; i <= N; ++i) {
            const Separator& qi = seps.at((int)i);
            for (std::size_t j = 1; j <= N; ++j) {
                const Scalar v = qi.evaluate(inst.points[j - 1]);
                CHECK(v == (i == j ? Scalar::one(inst.field) : Scalar::zero(inst.field)));
            }
            // no repeated (variable, root) pair
            for (std::size_t a = 0; a < qi.factors().size(); ++a)
                for (std::size_t b = a + 1; b < qi.factors().size(); ++b)
                    CHECK(!(qi.factors()[a].variable == qi.factors()[b].variable &&
                            qi.factors()[a].root == qi.factors()[b].root));
            CHECK(qi.degree() <= std::min(N - 1, inst.n * (r - 1)));
            // one factor per sibling subtree along the path, levels summed
            std::size_t sibling_total = 0;
            for (std::size_t h = 1; h <= inst.n; ++h)
                sibling_total += trie.siblings(trie.node_on_path((int)i, h)).size();
            CHECK(qi.degree() <= sibling_total);
        }
    }
}

TEST_CASE("earlier separators only ever gain factors") {
    std::mt19937_64 rng(78);
    for (int rep = 0; rep < 10; ++rep) {
        const auto inst = random_instance(rng(), rep % 2 == 1);
        const std::size_t N = inst.points.size();
        PointTrie trie(inst.n, inst.field);
        SeparatorFamily seps(inst.n, inst.field);
        PointSet sofar;
        std::vector<std::vector<LinearFactor>> before;
        for (std::size_t k = 0; k < N; ++k) {
            before.clear();
            for (std::size_t i = 1; i <= seps.size(); ++i) before.push_back(seps.at((int)i).factors());
            trie.extend(inst.points[k]);
            sofar.push_back(inst.points[k]);
            seps.add_point(trie, sofar);
            for (std::size_t i = 0; i < before.size(); ++i) {
                const auto& now = seps.at((int)i + 1).factors();
                REQUIRE(now.size() >= before[i].size());
                CHECK(now.size() - before[i].size() <= 1);
                for (std::size_t f = 0; f < before[i].size(); ++f) CHECK(now[f] == before[i][f]);
            }
        }
    }
}
