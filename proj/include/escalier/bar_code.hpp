#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "escalier/term.hpp"

namespace escalier {

// Nested-sequence diagram of stacked bar rows.  Row n is the outermost
// nesting level; each i-bar holds the ordered (i-1)-bars lying over it, and
// each 1-bar holds the indices of the points labelling it.
//
// A bar is addressed by the leading entries of an e-list: address
// (b_n, ..., b_k) picks the (b_n+1)-th n-bar, the (b_{n-1}+1)-th (n-1)-bar
// inside it, and so on down to a bar of row k.  Addresses are resolved on
// every call, so they stay meaningful while the diagram grows.
class BarCode {
public:
    using Address = std::vector<std::uint32_t>;

    explicit BarCode(std::size_t nvars);

    std::size_t nvars() const { return n_; }
    bool empty() const { return top_.empty(); }
    std::size_t point_count() const;
    std::size_t bar_count(std::size_t row) const; // mu(row)

    bool has_bar(const Address& address) const;

    // Point indices carried by the 1-bars over the addressed bar, in diagram
    // order (left to right).
    std::vector<int> points_over(const Address& address) const;

    // Appends a fresh column of single bars at the addressed position, which
    // must be just past the current right end of its block; the 1-bar is
    // labelled with the given point index.  On an empty diagram the address
    // must be {0}.
    void insert_new_block(const Address& address, int point_index);

    // e-list of every 1-bar in diagram order, entries (b_n, ..., b_1)
    std::vector<std::vector<std::uint32_t>> elists() const;

    // Reconstructs the labelling terms of the 1-bars, in diagram order.
    std::vector<Term> reconstruct_terms() const;

    bool is_admissible() const;

    // F_N read off the diagram, lex-sorted; requires admissibility.
    std::vector<Term> star_set() const;

    // Structural conditions: every bar above row 1 covers at least one bar of
    // the row above it, every 1-bar carries at least one point, and rows do
    // not mix bars with loose points.
    void validate_structure() const;

    std::uint64_t op_count() const { return ops_; }

    std::string render_text() const; // row-of-bars picture

    bool operator==(const BarCode& o) const { return n_ == o.n_ && top_ == o.top_; }

    // access for serialization: nested arrays, innermost lists = 1-bars
    struct Bar {
        std::vector<Bar> sub; // bars of the row above (empty at row 1)
        std::vector<int> pts; // point indices (row 1 only)
        bool operator==(const Bar& o) const { return sub == o.sub && pts == o.pts; }
    };
    const std::vector<Bar>& top_bars() const { return top_; }
    static BarCode from_bars(std::size_t nvars, std::vector<Bar> bars);

private:
    const Bar* find(const Address& address) const;
    Bar* find(const Address& address);

    std::size_t n_;
    std::vector<Bar> top_;
    mutable std::uint64_t ops_ = 0;
};

// e-list entries are the exponents of the labelling term, read (b_n,...,b_1).
Term term_of_elist(const std::vector<std::uint32_t>& elist);

} // namespace escalier
