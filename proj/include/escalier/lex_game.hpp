#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "escalier/bar_code.hpp"
#include "escalier/point.hpp"
#include "escalier/point_trie.hpp"
#include "escalier/term.hpp"

namespace escalier {

// The output matrix M: one row per point, columns ordered [x_n, ..., x_1],
// row i holding the e-list of the term matched to point i.  Cells are write-
// once; the write counter backs the bookkeeping invariant N*n.
class EscalierTable {
public:
    explicit EscalierTable(std::size_t nvars) : n_(nvars) {}

    std::size_t nvars() const { return n_; }
    std::size_t rows() const { return rows_.size(); }

    void begin_row();
    void set_cell(std::size_t column, std::uint32_t value); // 1-based column, once per cell
    // closes the open row: zeros for the s-1 lowest variables, then the
    // antecedent row's x_s entry plus one
    void apply_update(std::size_t s, std::size_t antecedent);
    void finish_row();

    const std::vector<std::uint32_t>& row(std::size_t i) const; // 1-based
    std::uint32_t cell(std::size_t i, std::size_t column) const;
    Term term_of_row(std::size_t i) const;
    std::vector<Term> terms() const; // in point order

    // index of the row holding the given e-list, or 0
    int index_of_elist(const std::vector<std::uint32_t>& elist) const;

    std::uint64_t write_count() const { return writes_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::vector<bool>> written_;
    std::map<std::vector<std::uint32_t>, int> row_of_elist_;
    std::uint64_t writes_ = 0;
    bool open_ = false;
};

// One round of the descent: the sigma-value where a fork was found and the
// antecedent index that anchored it.
struct DescentStep {
    std::size_t sigma_value;
    int antecedent;
    bool operator==(const DescentStep& o) const {
        return sigma_value == o.sigma_value && antecedent == o.antecedent;
    }
};

// Point trie + bar code + matrix M, grown one point at a time.  Earlier rows
// of M, earlier bars and earlier separators never change when a point is
// appended.
class GameState {
public:
    GameState(std::size_t nvars, FieldSpec field);

    std::size_t nvars() const { return n_; }
    const FieldSpec& field() const { return field_; }
    std::size_t point_count() const { return points_.size(); }

    // Appends one point; returns the term matched to it.
    Term add_point(Point p);

    const PointSet& points() const { return points_; }
    const PointTrie& trie() const { return trie_; }
    const BarCode& barcode() const { return barcode_; }
    const EscalierTable& table() const { return table_; }

    std::vector<Term> correspondence() const { return table_.terms(); } // Phi, point order
    std::vector<Term> escalier() const;                                 // lex order

    const std::vector<DescentStep>& trace(std::size_t i) const; // rounds for point i
    std::uint64_t combinatorial_ops() const { return trie_.op_count() + barcode_.op_count(); }

    static GameState full_run(std::size_t nvars, FieldSpec field, const PointSet& points);

private:
    std::size_t n_;
    FieldSpec field_;
    PointSet points_;
    PointTrie trie_;
    BarCode barcode_;
    EscalierTable table_;
    std::vector<std::vector<DescentStep>> traces_;
};

// Literal restatement of the inductive algorithm: sigma-value by projection
// search, antecedent by maximal index, recursion on the projected subproblem.
// Quadratic; used as a reference.
std::vector<Term> cerlienco_mureddu(std::size_t nvars, const PointSet& points);

// Rank-based reference: scan terms in increasing lex order, keep those whose
// evaluation vector is independent of the kept ones, pruning multiples of
// rejected terms.  Order-insensitive in the points; result is lex-sorted.
std::vector<Term> bm_escalier(std::size_t nvars, const PointSet& points);

} // namespace escalier
