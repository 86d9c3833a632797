#pragma once

#include <utility>
#include <vector>

#include "escalier/lex_game.hpp"
#include "escalier/polynomial.hpp"

namespace escalier {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(std::size_t n, const FieldSpec& field);
Matrix matrix_product(const Matrix& a, const Matrix& b, const FieldSpec& field);
bool matrix_equal(const Matrix& a, const Matrix& b);

// Evaluation matrix B (b_lj = t_l(P_j)), its inverse C, the coordinate-scaled
// copies D^(h) (d_lj = a_hj * t_l(P_j)) and the multiplication-by-x_h
// matrices A_h = D^(h) * C, all grown by one row and column per point via
// bordering; nothing is recomputed from scratch.
class MulState {
public:
    MulState(std::size_t nvars, FieldSpec field);

    std::size_t nvars() const { return n_; }
    std::size_t size() const { return B_.size(); }

    // Extends every matrix by the newest point; `points` and `table` must
    // already contain it.  A zero pivot aborts with the state unchanged.
    void add_point(const PointSet& points, const EscalierTable& table);

    const Matrix& eval_matrix() const { return B_; }
    const Matrix& inverse_matrix() const { return C_; }
    const Matrix& d_matrix(std::size_t h) const;  // 1-based
    const Matrix& as_matrix(std::size_t h) const; // 1-based

    // index pairs (s, l) with t_k = x_s * t_l, k >= 2
    const std::vector<std::pair<std::size_t, int>>& sigma_log() const { return sigma_; }

    // Coefficients of the residue of f over the basis terms, via C^t times
    // the evaluation vector of f.
    std::vector<Scalar> normal_form(const Polynomial& f, const PointSet& points) const;
    std::vector<Scalar> normal_form_of_term(const Term& t, const PointSet& points) const;

    // For each star-set term t: t minus its normal form, a polynomial with
    // leading term t vanishing on the whole point set.  Together they form
    // the reduced lex basis of the vanishing ideal.
    std::vector<Polynomial> groebner_border(const std::vector<Term>& star,
                                            const std::vector<Term>& basis_terms,
                                            const PointSet& points) const;

private:
    std::size_t n_;
    FieldSpec field_;
    Matrix B_, C_;
    std::vector<Matrix> D_, A_;
    std::vector<std::pair<std::size_t, int>> sigma_; // sigma_[k-1] for t_k; (0,0) for t_1
};

} // namespace escalier
