#include "escalier/lex_game.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "escalier/polynomial.hpp"

namespace escalier {

void EscalierTable::begin_row() {
    if (open_) throw InconsistentStateError("previous row still open");
    rows_.emplace_back(n_, 0);
    written_.emplace_back(n_, false);
    open_ = true;
}

void EscalierTable::set_cell(std::size_t column, std::uint32_t value) {
    if (!open_) throw InconsistentStateError("no open row");
    if (column < 1 || column > n_) throw IndexOutOfRangeError("column " + std::to_string(column));
    auto& w = written_.back();
    if (w[column - 1]) throw InconsistentStateError("cell written twice");
    w[column - 1] = true;
    rows_.back()[column - 1] = value;
    ++writes_;
}

void EscalierTable::apply_update(std::size_t s, std::size_t antecedent) {
    const auto& row_l = row(antecedent);
    set_cell(n_ - s + 1, row_l[n_ - s] + 1);
    for (std::size_t lv = 1; lv + 1 <= s; ++lv) set_cell(n_ - lv + 1, 0);
}

void EscalierTable::finish_row() {
    if (!open_) throw InconsistentStateError("no open row");
    const auto& w = written_.back();
    if (!std::all_of(w.begin(), w.end(), [](bool b) { return b; }))
        throw InconsistentStateError("row finished with unwritten cells");
    auto [it, inserted] = row_of_elist_.emplace(rows_.back(), (int)rows_.size());
    if (!inserted) throw InconsistentStateError("duplicate e-list row");
    open_ = false;
}

const std::vector<std::uint32_t>& EscalierTable::row(std::size_t i) const {
    if (i < 1 || i > rows_.size()) throw IndexOutOfRangeError("row " + std::to_string(i));
    return rows_[i - 1];
}

std::uint32_t EscalierTable::cell(std::size_t i, std::size_t column) const {
    if (column < 1 || column > n_) throw IndexOutOfRangeError("column " + std::to_string(column));
    return row(i)[column - 1];
}

Term EscalierTable::term_of_row(std::size_t i) const { return term_of_elist(row(i)); }

std::vector<Term> EscalierTable::terms() const {
    std::vector<Term> out;
    out.reserve(rows_.size());
    for (std::size_t i = 1; i <= rows_.size(); ++i) out.push_back(term_of_row(i));
    return out;
}

int EscalierTable::index_of_elist(const std::vector<std::uint32_t>& elist) const {
    auto it = row_of_elist_.find(elist);
    return it == row_of_elist_.end() ? 0 : it->second;
}

GameState::GameState(std::size_t nvars, FieldSpec field)
    : n_(nvars), field_(field), trie_(nvars, field), barcode_(nvars), table_(nvars) {
    if (nvars < 1) throw DimensionMismatchError("need at least one variable");
}

std::vector<Term> GameState::escalier() const { return lex_sorted(table_.terms()); }

const std::vector<DescentStep>& GameState::trace(std::size_t i) const {
    if (i < 1 || i > traces_.size()) throw IndexOutOfRangeError("trace " + std::to_string(i));
    return traces_[i - 1];
}

Term GameState::add_point(Point p) {
    if (p.dimension() != n_) throw DimensionMismatchError("point dimension mismatch");
    if (p.field() != field_) throw FieldMismatchError("point field mismatch");

    const auto ext = trie_.extend(p); // throws on duplicates, trie untouched then
    points_.push_back(std::move(p));
    const int i = (int)points_.size();
    traces_.emplace_back();

    table_.begin_row();
    if (i == 1) {
        for (std::size_t j = 1; j <= n_; ++j) table_.set_cell(j, 0);
        table_.finish_row();
        barcode_.insert_new_block({0}, 1);
        return table_.term_of_row(1);
    }

    std::size_t f = ext.fork_level;
    PointTrie::NodeRef v = ext.fork_node;
    std::vector<std::uint32_t> head; // committed columns 1..n-s of the new row
    auto commit = [&](std::size_t column, std::uint32_t value) {
        table_.set_cell(column, value);
        head.push_back(value);
    };
    for (std::size_t j = 1; j <= n_ - f; ++j) commit(j, 0);

    IndexSet S((std::size_t)i - 1); // working set for the sigma-value search
    for (int k = 1; k < i; ++k) S[(std::size_t)k - 1] = k;

    // indices under v's parent whose rows extend the committed column prefix;
    // among these the antecedent is the one with maximal index
    auto qualifying = [&]() {
        IndexSet q;
        for (int m : trie_.label(trie_.parent(v))) {
            if (m >= i) continue;
            const auto& row_m = table_.row((std::size_t)m);
            if (std::equal(head.begin(), head.end(), row_m.begin())) q.push_back(m);
        }
        return q;
    };

    bool placed = false;
    std::size_t s = f;
    while (s > 0) {
        if (f == s) {
            const int l = trie_.sigma_antecedent(v, qualifying());
            traces_.back().push_back(DescentStep{s, l});
            const auto& row_l = table_.row((std::size_t)l);
            BarCode::Address next(row_l.begin(), row_l.begin() + (long)(n_ - s + 1));
            ++next.back();
            if (!barcode_.has_bar(next)) {
                barcode_.insert_new_block(next, i);
                table_.apply_update(s, (std::size_t)l);
                placed = true;
                s = 0;
            } else {
                commit(n_ - s + 1, row_l[n_ - s] + 1);
                S = barcode_.points_over(next);
                std::sort(S.begin(), S.end());
                --s;
                v = trie_.parent(v);
                if (s > 0) f = trie_.fork(s, v, S);
            }
        } else {
            commit(n_ - s + 1, 0);
            --s;
            v = trie_.parent(v);
            if (s > 0) f = trie_.fork(s, v, S);
        }
    }
    if (!placed) throw InconsistentStateError("descent ended without placing a bar");
    table_.finish_row();
    return table_.term_of_row((std::size_t)i);
}

GameState GameState::full_run(std::size_t nvars, FieldSpec field, const PointSet& points) {
    GameState st(nvars, field);
    for (const auto& p : points) st.add_point(p);
    return st;
}

// ---------------------------------------------------------------------------
// inductive reference

namespace {

std::size_t shared_prefix(const Point& a, const Point& b) {
    std::size_t h = 0;
    while (h < a.dimension() && a.coord(h + 1) == b.coord(h + 1)) ++h;
    return h;
}

std::vector<std::vector<std::uint32_t>> cm_exponents(std::size_t nvars, const PointSet& points) {
    std::vector<std::vector<std::uint32_t>> alpha; // natural order (g1..gn)
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const Point& p = points[idx];
        if (idx == 0) {
            alpha.emplace_back(nvars, 0);
            continue;
        }
        // sigma-value: maximal s with some earlier point sharing s-1 coordinates
        std::size_t s = 1;
        for (std::size_t m = 0; m < idx; ++m) s = std::max(s, shared_prefix(p, points[m]) + 1);
        if (s > nvars) throw DuplicatePointError("coincident points in reference run");
        // antecedent: maximal earlier index sharing s-1 coordinates whose term
        // has no variables above x_s
        int l = 0;
        for (std::size_t m = 0; m < idx; ++m) {
            if (shared_prefix(p, points[m]) + 1 < s) continue;
            bool high_zero = true;
            for (std::size_t k = s; k < nvars; ++k)
                if (alpha[m][k] != 0) high_zero = false;
            if (high_zero) l = (int)m + 1;
        }
        if (l == 0) throw NoAntecedentError("reference run found no antecedent");

        std::vector<std::uint32_t> a(nvars, 0);
        a[s - 1] = alpha[(std::size_t)l - 1][s - 1] + 1;
        if (s > 1) {
            // restrict to points whose terms agree from x_s upwards, project,
            // and recurse on the smaller ordered set
            PointSet sub;
            std::ptrdiff_t pos_of_new = -1;
            for (std::size_t m = 0; m <= idx; ++m) {
                const auto& am = m == idx ? a : alpha[m];
                bool match = am[s - 1] == a[s - 1];
                for (std::size_t k = s; k < nvars && match; ++k)
                    if (am[k] != 0) match = false;
                if (!match) continue;
                const Point& q = m == idx ? p : points[m];
                std::vector<Scalar> proj(q.coords().begin(), q.coords().begin() + (long)(s - 1));
                sub.emplace_back(std::move(proj));
                if (m == idx) pos_of_new = (std::ptrdiff_t)sub.size() - 1;
            }
            const auto sub_alpha = cm_exponents(s - 1, sub);
            const auto& b = sub_alpha[(std::size_t)pos_of_new];
            for (std::size_t k = 0; k + 1 < s; ++k) a[k] = b[k];
        }
        alpha.push_back(std::move(a));
    }
    return alpha;
}

} // namespace

std::vector<Term> cerlienco_mureddu(std::size_t nvars, const PointSet& points) {
    const auto alpha = cm_exponents(nvars, points);
    std::vector<Term> out;
    out.reserve(alpha.size());
    for (const auto& a : alpha) out.emplace_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// rank-based reference

namespace {

// Gaussian row elimination basis over an exact field.
class RowBasis {
public:
    explicit RowBasis(FieldSpec field) : field_(field) {}

    // Returns true (and absorbs the row) when v is independent of the basis.
    bool try_insert(std::vector<Scalar> v) {
        for (const auto& [pivot, row] : rows_) {
            if (!v[pivot].is_zero()) {
                const Scalar c = v[pivot];
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * row[k];
            }
        }
        std::size_t pivot = v.size();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_zero()) {
                pivot = k;
                break;
            }
        }
        if (pivot == v.size()) return false;
        const Scalar inv = v[pivot].inverse();
        for (auto& c : v) c *= inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    FieldSpec field_;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

} // namespace

std::vector<Term> bm_escalier(std::size_t nvars, const PointSet& points) {
    if (points.empty()) return {};
    const FieldSpec field = points.front().field();
    validate_point_set(points, nvars, field);
    const std::size_t N = points.size();

    std::vector<Term> kept;
    std::vector<Term> corners; // rejected terms; their multiples are skipped
    RowBasis basis(field);
    std::set<Term, LexLess> frontier;
    frontier.insert(Term(nvars));
    while (kept.size() < N && !frontier.empty()) {
        const Term t = *frontier.begin();
        frontier.erase(frontier.begin());
        bool dead = false;
        for (const auto& c : corners)
            if (c.divides(t)) {
                dead = true;
                break;
            }
        if (dead) continue;
        std::vector<Scalar> evals;
        evals.reserve(N);
        for (const auto& p : points) evals.push_back(evaluate_term(t, p));
        if (basis.try_insert(std::move(evals))) {
            for (std::size_t i = 1; i <= nvars; ++i) frontier.insert(t.times_var(i));
            kept.push_back(t);
        } else {
            corners.push_back(t);
        }
    }
    if (kept.size() != N) throw InconsistentStateError("rank search fell short of the point count");
    return lex_sorted(std::move(kept));
}

} // namespace escalier
