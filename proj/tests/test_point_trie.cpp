#include <doctest.h>

#include <algorithm>
#include <random>

#include "escalier/point_trie.hpp"
#include "test_support.hpp"

using namespace escalier;
using escalier::testing::pt;
using escalier::testing::pts;

namespace {

std::vector<int> label_vec(const PointTrie& trie, PointTrie::NodeRef v) {
    auto s = trie.label(v);
    return {s.begin(), s.end()};
}

} // namespace

TEST_CASE("trie growth on the four-point example") {
    const FieldSpec q = FieldSpec::rationals();
    PointTrie trie(3, q);

    auto r1 = trie.extend(pt(q, {1, 0, 0}));
    CHECK(r1.fork_level == 1);
    auto r2 = trie.extend(pt(q, {0, 1, 0}));
    CHECK(r2.fork_level == 1);
    auto r3 = trie.extend(pt(q, {1, 1, 2}));
    CHECK(r3.fork_level == 2);
    auto r4 = trie.extend(pt(q, {1, 0, 3}));
    CHECK(r4.fork_level == 3);

    CHECK(label_vec(trie, trie.root()) == std::vector<int>{1, 2, 3, 4});
    CHECK(label_vec(trie, {1, 0}) == std::vector<int>{1, 3, 4});
    CHECK(label_vec(trie, {2, 0}) == std::vector<int>{1, 4});
    CHECK(trie.children({1, 0}).size() == 2);
    CHECK(trie.edge_value({1, 0}) == Scalar::from_int(1, q));
    CHECK(trie.edge_value({1, 1}) == Scalar::from_int(0, q));

    // leaves are singletons covering every point
    std::size_t leaves = trie.level_width(3);
    CHECK(leaves == 4);
    std::size_t total = 0;
    for (std::size_t u = 0; u < leaves; ++u)
        total += trie.label({3, (std::uint32_t)u}).size();
    CHECK(total == 4);
}

TEST_CASE("first point and duplicates") {
    const FieldSpec q = FieldSpec::rationals();
    PointTrie trie(4, q);
    auto r = trie.extend(pt(q, {0, 0, 0, 0}));
    CHECK(r.fork_level == 1);
    CHECK(r.fork_node.level == 1);
    auto r2 = trie.extend(pt(q, {0, 0, 0, 1}));
    CHECK(r2.fork_level == 4);
    CHECK_THROWS_AS(trie.extend(pt(q, {0, 0, 0, 1})), DuplicatePointError);
    CHECK(trie.size() == 2); // failed insertion left no trace
    CHECK(label_vec(trie, trie.root()) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(trie.extend(pt(q, {0, 0, 0})), DimensionMismatchError);
}

TEST_CASE("fork subroutine") {
    const FieldSpec q = FieldSpec::rationals();
    // the 13-point run, first 12 points
    PointTrie trie(4, q);
    const PointSet points = pts(q, {{1, 1, 2, 3},
                                    {1, 1, 2, 4},
                                    {1, 1, 2, 5},
                                    {1, 2, 1, 1},
                                    {1, 2, 1, 2},
                                    {1, 2, 2, 1},
                                    {1, 2, 2, 2},
                                    {3, 1, 1, 2},
                                    {3, 1, 2, 2},
                                    {3, 1, 2, 3},
                                    {3, 3, 1, 1},
                                    {3, 4, 1, 1}});
    for (const auto& p : points) trie.extend(p);
    trie.extend(pt(q, {3, 4, 1, 2}));

    // walking down the newest path against S = {2,10,5,7}
    const IndexSet S{2, 5, 7, 10};
    CHECK(trie.fork(3, trie.node_on_path(13, 3), S) == 0);
    CHECK(trie.fork(2, trie.node_on_path(13, 2), S) == 2);
    // a working set met by no ancestor level stays silent until the root
    const IndexSet none{5};
    CHECK(trie.fork(3, trie.node_on_path(13, 3), none) == 0);
    CHECK(trie.fork(2, trie.node_on_path(13, 2), none) == 0);
    CHECK(trie.fork(1, trie.node_on_path(13, 1), none) == 1); // root holds everything
}

TEST_CASE("sigma antecedent") {
    const FieldSpec q = FieldSpec::rationals();

    SUBCASE("two points") {
        PointTrie trie(2, q);
        trie.extend(pt(q, {0, 0}));
        auto r = trie.extend(pt(q, {0, 1}));
        CHECK(trie.sigma_antecedent(r.fork_node, {1}) == 1);
    }

    SUBCASE("13-point run, step 12") {
        PointTrie trie(4, q);
        for (const auto& p : pts(q, {{1, 1, 2, 3},
                                     {1, 1, 2, 4},
                                     {1, 1, 2, 5},
                                     {1, 2, 1, 1},
                                     {1, 2, 1, 2},
                                     {1, 2, 2, 1},
                                     {1, 2, 2, 2},
                                     {3, 1, 1, 2},
                                     {3, 1, 2, 2},
                                     {3, 1, 2, 3},
                                     {3, 3, 1, 1}}))
            trie.extend(p);
        auto r = trie.extend(pt(q, {3, 4, 1, 1}));
        CHECK(r.fork_level == 2);
        // rightmost sibling label on the left is the singleton {11}
        IndexSet all;
        for (int i = 1; i <= 11; ++i) all.push_back(i);
        CHECK(trie.sigma_antecedent(r.fork_node, all) == 11);
    }

    SUBCASE("13-point run, step 13 against a working set") {
        PointTrie trie(4, q);
        for (const auto& p : pts(q, {{1, 1, 2, 3},
                                     {1, 1, 2, 4},
                                     {1, 1, 2, 5},
                                     {1, 2, 1, 1},
                                     {1, 2, 1, 2},
                                     {1, 2, 2, 1},
                                     {1, 2, 2, 2},
                                     {3, 1, 1, 2},
                                     {3, 1, 2, 2},
                                     {3, 1, 2, 3},
                                     {3, 3, 1, 1},
                                     {3, 4, 1, 1}}))
            trie.extend(p);
        trie.extend(pt(q, {3, 4, 1, 2}));
        // the level-2 node of point 13; the intersection with {8,9,10} picks 10
        CHECK(trie.sigma_antecedent(trie.node_on_path(13, 2), {2, 5, 7, 10}) == 10);
        CHECK_THROWS_AS(trie.sigma_antecedent(trie.node_on_path(13, 2), {5}), NoAntecedentError);
    }
}

TEST_CASE("witness matrix") {
    const FieldSpec q = FieldSpec::rationals();
    const PointSet x = pts(q, {{1, 0}, {0, 1}, {0, 2}});
    const WitnessMatrix w = witness_matrix(x);
    CHECK(w == WitnessMatrix{{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});

    CHECK(witness_matrix(pts(q, {{5, 7}})) == WitnessMatrix{{0}});
    CHECK_THROWS_AS(witness_matrix(pts(q, {{1, 0}, {1, 0}})), DuplicatePointError);

    // trie-derived route agrees with the direct scan
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        const auto inst = escalier::testing::random_instance(rng(), rep % 2 == 0);
        PointTrie trie(inst.n, inst.field);
        for (const auto& p : inst.points) trie.extend(p);
        CHECK(witness_matrix_from_trie(trie) == witness_matrix(inst.points));
    }
}

TEST_CASE("co-labelling matches shared prefixes") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 25; ++rep) {
        const auto inst = escalier::testing::random_instance(rng(), rep % 2 == 1);
        PointTrie trie(inst.n, inst.field);
        for (const auto& p : inst.points) trie.extend(p);
        const std::size_t N = inst.points.size();
        // every leaf label is a singleton and the leaves partition the points
        std::size_t leaf_total = 0;
        for (std::size_t u = 0; u < trie.level_width(inst.n); ++u) {
            CHECK(trie.label({(std::uint32_t)inst.n, (std::uint32_t)u}).size() == 1);
            ++leaf_total;
        }
        CHECK(leaf_total == N);
        for (std::size_t i = 1; i <= N; ++i)
            for (std::size_t j = 1; j <= N; ++j)
                for (std::size_t h = 1; h <= inst.n; ++h) {
                    bool shared = true;
                    for (std::size_t k = 1; k <= h; ++k)
                        if (!(inst.points[i - 1].coord(k) == inst.points[j - 1].coord(k)))
                            shared = false;
                    const bool same_node =
                        trie.node_on_path((int)i, h) == trie.node_on_path((int)j, h);
                    CHECK(same_node == shared);
                }
    }
}

TEST_CASE("label membership is insertion-order insensitive") {
    const FieldSpec q = FieldSpec::rationals();
    const PointSet base = pts(q, {{0, 0, 1}, {0, 1, 1}, {2, 0, 1}, {0, 0, 3}, {2, 1, 1}});
    // per level, the family of labels as sets of points (not indices)
    auto label_families = [&](const PointSet& ordered) {
        PointTrie trie(3, q);
        for (const auto& p : ordered) trie.extend(p);
        std::vector<std::set<std::set<std::string>>> families(4);
        for (std::size_t h = 0; h <= 3; ++h) {
            for (std::size_t u = 0; u < trie.level_width(h); ++u) {
                std::set<std::string> members;
                for (int idx : trie.label({(std::uint32_t)h, (std::uint32_t)u}))
                    members.insert(ordered[(std::size_t)idx - 1].to_string());
                families[h].insert(std::move(members));
            }
        }
        return families;
    };
    PointSet shuffled = base;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(label_families(base) == label_families(shuffled));
}

TEST_CASE("debug dump shows labels and edges") {
    const FieldSpec q = FieldSpec::rationals();
    PointTrie trie(2, q);
    trie.extend(pt(q, {1, 0}));
    trie.extend(pt(q, {0, 1}));
    const std::string dump = trie.debug_dump();
    CHECK(dump.find("{1,2}") != std::string::npos);
    CHECK(dump.find("1->{1}") != std::string::npos);
    CHECK(dump.find("0->{2}") != std::string::npos);
}
