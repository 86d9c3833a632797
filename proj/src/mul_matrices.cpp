#include "escalier/mul_matrices.hpp"

#include <cassert>

namespace escalier {

Matrix identity_matrix(std::size_t n, const FieldSpec& field) {
    Matrix m(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
    return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b, const FieldSpec& field) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Matrix r(n, std::vector<Scalar>(m, Scalar::zero(field)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

bool matrix_equal(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

MulState::MulState(std::size_t nvars, FieldSpec field)
    : n_(nvars), field_(field), D_(nvars), A_(nvars) {}

const Matrix& MulState::d_matrix(std::size_t h) const {
    if (h < 1 || h > n_) throw IndexOutOfRangeError("variable " + std::to_string(h));
    return D_[h - 1];
}

const Matrix& MulState::as_matrix(std::size_t h) const {
    if (h < 1 || h > n_) throw IndexOutOfRangeError("variable " + std::to_string(h));
    return A_[h - 1];
}

void MulState::add_point(const PointSet& points, const EscalierTable& table) {
    const std::size_t N = points.size();
    if (N != B_.size() + 1 || table.rows() != N)
        throw InconsistentStateError("matrix state out of step with the run");
    const Point& pn = points[N - 1];
    const Scalar zero = Scalar::zero(field_);
    const Scalar one = Scalar::one(field_);

    if (N == 1) {
        B_ = {{one}};
        C_ = {{one}};
        sigma_.emplace_back(0, 0);
        for (std::size_t h = 1; h <= n_; ++h) {
            D_[h - 1] = {{pn.coord(h)}};
            A_[h - 1] = {{pn.coord(h)}};
        }
        return;
    }

    // factor the new term as x_s * t_l over the committed rows
    const Term tn = table.term_of_row(N);
    const auto s_opt = tn.min_variable();
    if (!s_opt) throw InconsistentStateError("repeated unit term");
    const std::size_t s_new = *s_opt;
    auto pred = table.row(N);
    --pred[n_ - s_new];
    const int l_new = table.index_of_elist(pred);
    if (l_new == 0) throw InconsistentStateError("no committed row holds the quotient term");

    // ---- B: new column via each row's own factorization, new row via the
    // fresh one; every entry comes from one multiplication.
    Matrix B = B_;
    for (auto& row : B) row.push_back(zero);
    B.emplace_back(N, zero);
    B[0][N - 1] = one;
    for (std::size_t h = 2; h < N; ++h) {
        const auto& [sh, lh] = sigma_[h - 1];
        B[h - 1][N - 1] = pn.coord(sh) * B[(std::size_t)lh - 1][N - 1];
    }
    for (std::size_t m = 1; m <= N; ++m)
        B[N - 1][m - 1] = points[m - 1].coord(s_new) * B[(std::size_t)l_new - 1][m - 1];
#ifndef NDEBUG
    for (std::size_t h = 1; h <= N; ++h)
        assert(B[h - 1][N - 1] == evaluate_term(table.term_of_row(h), pn));
    for (std::size_t m = 1; m <= N; ++m)
        assert(B[N - 1][m - 1] == evaluate_term(tn, points[m - 1]));
#endif

    // ---- C: bordering of the inverse.  r is the new row of the reduction
    // workspace, the pivot the Schur complement of the new diagonal entry.
    std::vector<Scalar> r(N - 1, zero);
    for (std::size_t k = 0; k + 1 < N; ++k)
        for (std::size_t j = 0; j + 1 < N; ++j) r[k] += B[N - 1][j] * C_[j][k];
    Scalar pivot = B[N - 1][N - 1];
    for (std::size_t j = 0; j + 1 < N; ++j) pivot -= B[j][N - 1] * r[j];
    if (pivot.is_zero())
        throw SingularPivotError("evaluation matrix became singular; state rolled back");

    Matrix C(N, std::vector<Scalar>(N, zero));
    const Scalar pinv = pivot.inverse();
    for (std::size_t h = 0; h + 1 < N; ++h) {
        Scalar u = zero; // h-th entry of the reduced last column
        for (std::size_t k = 0; k + 1 < N; ++k) u += B[k][N - 1] * C_[h][k];
        C[h][N - 1] = -(u * pinv);
    }
    C[N - 1][N - 1] = pinv;
    for (std::size_t m = 0; m + 1 < N; ++m) {
        for (std::size_t h = 0; h + 1 < N; ++h) C[h][m] = C_[h][m] - r[m] * C[h][N - 1];
        C[N - 1][m] = -(r[m] * pinv);
    }

    // ---- D^(h) and A_h = D^(h) C, bordered with the same index pairs; the
    // interior of A needs only a rank-one correction by the new column.
    std::vector<Matrix> D(n_), A(n_);
    for (std::size_t h = 1; h <= n_; ++h) {
        Matrix d = D_[h - 1];
        for (auto& row : d) row.push_back(zero);
        d.emplace_back(N, zero);
        d[0][N - 1] = pn.coord(h);
        for (std::size_t k = 2; k < N; ++k) {
            const auto& [sk, lk] = sigma_[k - 1];
            d[k - 1][N - 1] = pn.coord(sk) * d[(std::size_t)lk - 1][N - 1];
        }
        for (std::size_t m = 1; m <= N; ++m)
            d[N - 1][m - 1] = points[m - 1].coord(s_new) * d[(std::size_t)l_new - 1][m - 1];
#ifndef NDEBUG
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t m = 1; m <= N; ++m)
                assert(d[k - 1][m - 1] == points[m - 1].coord(h) * B[k - 1][m - 1]);
#endif

        Matrix a(N, std::vector<Scalar>(N, zero));
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t k = 0; k < N; ++k) a[l][N - 1] += d[l][k] * C[k][N - 1];
        for (std::size_t l = 0; l + 1 < N; ++l)
            for (std::size_t j = 0; j + 1 < N; ++j) a[l][j] = A_[h - 1][l][j] - r[j] * a[l][N - 1];
        for (std::size_t j = 0; j + 1 < N; ++j)
            for (std::size_t k = 0; k < N; ++k) a[N - 1][j] += d[N - 1][k] * C[k][j];
#ifndef NDEBUG
        assert(matrix_equal(a, matrix_product(d, C, field_)));
#endif
        D[h - 1] = std::move(d);
        A[h - 1] = std::move(a);
    }

    // commit
    B_ = std::move(B);
    C_ = std::move(C);
    D_ = std::move(D);
    A_ = std::move(A);
    sigma_.emplace_back(s_new, l_new);
}

std::vector<Scalar> MulState::normal_form(const Polynomial& f, const PointSet& points) const {
    const std::size_t N = points.size();
    if (N != B_.size()) throw DimensionMismatchError("state does not match the point set");
    std::vector<Scalar> evals;
    evals.reserve(N);
    for (const auto& p : points) evals.push_back(f.evaluate(p));
    std::vector<Scalar> coeffs(N, Scalar::zero(field_));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) coeffs[i] += C_[j][i] * evals[j];
    return coeffs;
}

std::vector<Scalar> MulState::normal_form_of_term(const Term& t, const PointSet& points) const {
    return normal_form(Polynomial::from_term(t, Scalar::one(field_)), points);
}

std::vector<Polynomial> MulState::groebner_border(const std::vector<Term>& star,
                                                  const std::vector<Term>& basis_terms,
                                                  const PointSet& points) const {
    std::vector<Polynomial> out;
    out.reserve(star.size());
    for (const auto& t : star) {
        const auto coeffs = normal_form_of_term(t, points);
        Polynomial g = Polynomial::from_term(t, Scalar::one(field_));
        for (std::size_t i = 0; i < coeffs.size(); ++i) g.add_term(basis_terms[i], -coeffs[i]);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace escalier
