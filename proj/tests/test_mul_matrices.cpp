#include <doctest.h>

#include <random>

#include "escalier/mul_matrices.hpp"
#include "test_support.hpp"

using namespace escalier;
using escalier::testing::gauss_inverse;
using escalier::testing::pts;
using escalier::testing::random_instance;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(Scalar::from_int(v, Q));
        m.push_back(std::move(row));
    }
    return m;
}

struct RunResult {
    GameState state;
    MulState mats;
};

RunResult run(std::size_t n, const FieldSpec& f, const PointSet& x) {
    RunResult r{GameState(n, f), MulState(n, f)};
    for (const auto& p : x) {
        r.state.add_point(p);
        r.mats.add_point(r.state.points(), r.state.table());
    }
    return r;
}

} // namespace

TEST_CASE("three-point evaluation matrices match the worked example") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}, {0, 2}});
    auto r = run(2, Q, x);

    CHECK(matrix_equal(r.mats.eval_matrix(), mat({{1, 1, 1}, {1, 0, 0}, {0, 1, 2}})));
    CHECK(matrix_equal(r.mats.inverse_matrix(), mat({{0, 1, 0}, {2, -2, -1}, {-1, 1, 1}})));
    CHECK(matrix_equal(r.mats.d_matrix(1), mat({{1, 0, 0}, {1, 0, 0}, {0, 0, 0}})));
    CHECK(matrix_equal(r.mats.d_matrix(2), mat({{0, 1, 2}, {0, 0, 0}, {0, 1, 4}})));
    CHECK(matrix_equal(r.mats.as_matrix(1), mat({{0, 1, 0}, {0, 1, 0}, {0, 0, 0}})));
    CHECK(matrix_equal(r.mats.as_matrix(2), mat({{0, 0, 1}, {0, 0, 0}, {-2, 2, 3}})));
    CHECK(r.mats.sigma_log()[1] == std::pair<std::size_t, int>{1, 1}); // x1 = x1 * 1
    CHECK(r.mats.sigma_log()[2] == std::pair<std::size_t, int>{2, 1}); // x2 = x2 * 1
}

TEST_CASE("two-point intermediate state of the same example") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}});
    auto r = run(2, Q, x);
    CHECK(matrix_equal(r.mats.eval_matrix(), mat({{1, 1}, {1, 0}})));
    CHECK(matrix_equal(r.mats.inverse_matrix(), mat({{0, 1}, {1, -1}})));
    CHECK(matrix_equal(r.mats.d_matrix(1), mat({{1, 0}, {1, 0}})));
    CHECK(matrix_equal(r.mats.as_matrix(1), mat({{0, 1}, {0, 1}})));
    CHECK(matrix_equal(r.mats.d_matrix(2), mat({{0, 1}, {0, 0}})));
    CHECK(matrix_equal(r.mats.as_matrix(2), mat({{1, -1}, {0, 0}})));
}

TEST_CASE("single point base case") {
    const PointSet x = pts(Q, {{3, 7}});
    auto r = run(2, Q, x);
    CHECK(matrix_equal(r.mats.eval_matrix(), mat({{1}})));
    CHECK(matrix_equal(r.mats.inverse_matrix(), mat({{1}})));
    CHECK(matrix_equal(r.mats.d_matrix(1), mat({{3}})));
    CHECK(matrix_equal(r.mats.as_matrix(2), mat({{7}})));
}

TEST_CASE("incremental identities on random instances") {
    std::mt19937_64 rng(4321);
    for (int rep = 0; rep < 30; ++rep) {
        const auto inst = random_instance(rng(), rep % 2 == 0);
        CAPTURE(rep);
        auto r = run(inst.n, inst.field, inst.points);
        const std::size_t N = inst.points.size();
        const Matrix& B = r.mats.eval_matrix();
        const Matrix& C = r.mats.inverse_matrix();

        // entries of B are the term evaluations
        const auto terms = r.state.correspondence();
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t j = 0; j < N; ++j)
                CHECK(B[l][j] == evaluate_term(terms[l], inst.points[j]));

        // bordered inverse equals the from-scratch one
        CHECK(matrix_equal(C, gauss_inverse(B, inst.field)));
        CHECK(matrix_equal(matrix_product(B, C, inst.field), identity_matrix(N, inst.field)));

        for (std::size_t h = 1; h <= inst.n; ++h) {
            const Matrix& D = r.mats.d_matrix(h);
            const Matrix& A = r.mats.as_matrix(h);
            for (std::size_t k = 0; k < N; ++k)
                for (std::size_t m = 0; m < N; ++m)
                    CHECK(D[k][m] == inst.points[m].coord(h) * B[k][m]);
            CHECK(matrix_equal(A, matrix_product(D, C, inst.field)));
            CHECK(matrix_equal(matrix_product(A, B, inst.field), D));
            // columns of B are eigenvectors of A with the coordinate eigenvalue
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t l = 0; l < N; ++l) {
                    Scalar dot = Scalar::zero(inst.field);
                    for (std::size_t k = 0; k < N; ++k) dot += A[l][k] * B[k][j];
                    CHECK(dot == inst.points[j].coord(h) * B[l][j]);
                }
            for (std::size_t h2 = h + 1; h2 <= inst.n; ++h2)
                CHECK(matrix_equal(
                    matrix_product(A, r.mats.as_matrix(h2), inst.field),
                    matrix_product(r.mats.as_matrix(h2), A, inst.field)));
        }

        // the logged factorizations hold as terms
        for (std::size_t k = 2; k <= N; ++k) {
            const auto [s, l] = r.mats.sigma_log()[k - 1];
            CHECK(terms[(std::size_t)l - 1].times_var(s) == terms[k - 1]);
        }
    }
}

TEST_CASE("normal forms") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}, {0, 2}});
    auto r = run(2, Q, x);
    const auto basis = r.state.correspondence(); // 1, x1, x2

    // y^2 reduces to -2 + 2x + 3y
    const auto nf = r.mats.normal_form_of_term(parse_term("x2^2", 2), x);
    CHECK(nf == std::vector<Scalar>{Scalar::from_int(-2, Q), Scalar::from_int(2, Q),
                                    Scalar::from_int(3, Q)});

    // basis terms reduce to unit vectors
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto e = r.mats.normal_form_of_term(basis[i], x);
        for (std::size_t j = 0; j < e.size(); ++j)
            CHECK(e[j] == (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
    }

    // a separator reduces to the matching row of C
    Polynomial q2(2, Q); // (x1-1)(x2-2)
    q2.add_term(parse_term("x1*x2", 2), Scalar::from_int(1, Q));
    q2.add_term(parse_term("x1", 2), Scalar::from_int(-2, Q));
    q2.add_term(parse_term("x2", 2), Scalar::from_int(-1, Q));
    q2.add_term(Term(2), Scalar::from_int(2, Q));
    const auto nq = r.mats.normal_form(q2, x);
    CHECK(nq == r.mats.inverse_matrix()[1]);
}

TEST_CASE("reduced basis polynomials") {
    const PointSet x = pts(Q, {{1, 0}, {0, 1}, {0, 2}});
    auto r = run(2, Q, x);
    const auto star = r.state.barcode().star_set();
    const auto basis = r.state.correspondence();
    const auto polys = r.mats.groebner_border(star, basis, x);
    REQUIRE(polys.size() == star.size());

    // x1^2 - x1 is the member led by x1^2
    bool found = false;
    for (std::size_t k = 0; k < star.size(); ++k) {
        if (star[k].to_string() != "x1^2") continue;
        found = true;
        Polynomial want(2, Q);
        want.add_term(parse_term("x1^2", 2), Scalar::from_int(1, Q));
        want.add_term(parse_term("x1", 2), Scalar::from_int(-1, Q));
        CHECK(polys[k] == want);
    }
    CHECK(found);

    for (std::size_t k = 0; k < polys.size(); ++k) {
        // vanishing on the whole set
        for (const auto& p : x) CHECK(polys[k].evaluate(p).is_zero());
        // leading term is the star term, support inside {t} + escalier
        for (const auto& [t, c] : polys[k].coefficients()) {
            if (t == star[k]) continue;
            CHECK(lex_less(t, star[k]));
            CHECK(std::find(basis.begin(), basis.end(), t) != basis.end());
        }
    }
}

TEST_CASE("a singular extension aborts without touching the state") {
    // hand-built table over coincident points: the pivot collapses to zero
    const PointSet x = pts(Q, {{0}, {0}});
    EscalierTable t(1);
    t.begin_row();
    t.set_cell(1, 0);
    t.finish_row();
    t.begin_row();
    t.set_cell(1, 1);
    t.finish_row();
    MulState mats(1, Q);
    mats.add_point({x[0]}, [&] {
        EscalierTable one(1);
        one.begin_row();
        one.set_cell(1, 0);
        one.finish_row();
        return one;
    }());
    CHECK_THROWS_AS(mats.add_point(x, t), SingularPivotError);
    CHECK(mats.size() == 1); // rolled back
    CHECK(matrix_equal(mats.eval_matrix(), mat({{1}})));
}

TEST_CASE("single point yields coordinate differences") {
    const PointSet x = pts(Q, {{5, -2, 7}});
    auto r = run(3, Q, x);
    const auto star = r.state.barcode().star_set();
    const auto polys = r.mats.groebner_border(star, r.state.correspondence(), x);
    REQUIRE(polys.size() == 3); // x1 - 5, x2 + 2, x3 - 7
    const std::vector<long> roots = {5, -2, 7};
    for (std::size_t h = 0; h < 3; ++h) {
        Polynomial want(3, Q);
        want.add_term(Term::variable(3, h + 1), Scalar::from_int(1, Q));
        want.add_term(Term(3), Scalar::from_int(-roots[h], Q));
        CHECK(polys[h] == want);
    }
}
