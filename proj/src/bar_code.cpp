#include "escalier/bar_code.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace escalier {

Term term_of_elist(const std::vector<std::uint32_t>& elist) {
    std::vector<std::uint32_t> exps(elist.rbegin(), elist.rend());
    return Term(std::move(exps));
}

BarCode::BarCode(std::size_t nvars) : n_(nvars) {
    if (nvars == 0) throw DimensionMismatchError("bar code needs at least one row");
}

BarCode BarCode::from_bars(std::size_t nvars, std::vector<Bar> bars) {
    BarCode b(nvars);
    b.top_ = std::move(bars);
    b.validate_structure();
    return b;
}

const BarCode::Bar* BarCode::find(const Address& address) const {
    if (address.empty() || address.size() > n_) return nullptr;
    const std::vector<Bar>* block = &top_;
    const Bar* bar = nullptr;
    for (std::uint32_t idx : address) {
        ++ops_;
        if (idx >= block->size()) return nullptr;
        bar = &(*block)[idx];
        block = &bar->sub;
    }
    return bar;
}

BarCode::Bar* BarCode::find(const Address& address) {
    return const_cast<Bar*>(static_cast<const BarCode*>(this)->find(address));
}

bool BarCode::has_bar(const Address& address) const { return find(address) != nullptr; }

namespace {

void collect_points(const BarCode::Bar& bar, std::vector<int>& out) {
    for (int p : bar.pts) out.push_back(p);
    for (const auto& s : bar.sub) collect_points(s, out);
}

} // namespace

std::vector<int> BarCode::points_over(const Address& address) const {
    const Bar* bar = find(address);
    if (!bar) throw IndexOutOfRangeError("no bar at the given address");
    std::vector<int> out;
    collect_points(*bar, out);
    ops_ += out.size();
    return out;
}

std::size_t BarCode::point_count() const {
    std::vector<int> out;
    for (const auto& b : top_) collect_points(b, out);
    return out.size();
}

std::size_t BarCode::bar_count(std::size_t row) const {
    if (row < 1 || row > n_) throw IndexOutOfRangeError("row " + std::to_string(row));
    // walk down to depth n - row
    std::size_t count = 0;
    std::vector<const Bar*> frontier;
    for (const auto& b : top_) frontier.push_back(&b);
    for (std::size_t depth = n_; depth > row; --depth) {
        std::vector<const Bar*> next;
        for (const Bar* b : frontier)
            for (const auto& s : b->sub) next.push_back(&s);
        frontier = std::move(next);
    }
    count = frontier.size();
    return count;
}

void BarCode::insert_new_block(const Address& address, int point_index) {
    if (address.empty() || address.size() > n_)
        throw InvalidPositionError("bad address size " + std::to_string(address.size()));
    std::vector<Bar>* block = &top_;
    for (std::size_t k = 0; k + 1 < address.size(); ++k) {
        ++ops_;
        if (address[k] >= block->size())
            throw InvalidPositionError("address prefix leaves the diagram");
        block = &(*block)[address[k]].sub;
    }
    if (address.back() != block->size())
        throw InvalidPositionError("new bar must extend its block at the right end");
    // fresh chain of length-one bars down to the labelled 1-bar
    Bar fresh;
    Bar* cur = &fresh;
    for (std::size_t row = n_ - address.size() + 1; row > 1; --row) {
        cur->sub.emplace_back();
        cur = &cur->sub.back();
        ++ops_;
    }
    cur->pts.push_back(point_index);
    block->push_back(std::move(fresh));
    ++ops_;
}

namespace {

void collect_elists(const BarCode::Bar& bar, std::vector<std::uint32_t>& prefix,
                    std::vector<std::vector<std::uint32_t>>& out, std::size_t rows_left) {
    if (rows_left == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::uint32_t k = 0; k < bar.sub.size(); ++k) {
        prefix.push_back(k);
        collect_elists(bar.sub[k], prefix, out, rows_left - 1);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::uint32_t>> BarCode::elists() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t k = 0; k < top_.size(); ++k) {
        prefix.push_back(k);
        collect_elists(top_[k], prefix, out, n_ - 1);
        prefix.pop_back();
    }
    return out;
}

std::vector<Term> BarCode::reconstruct_terms() const {
    std::vector<Term> out;
    for (const auto& e : elists()) out.push_back(term_of_elist(e));
    return out;
}

bool BarCode::is_admissible() const {
    const auto es = elists();
    std::set<std::vector<std::uint32_t>> have(es.begin(), es.end());
    for (const auto& e : es) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            auto pred = e;
            --pred[k];
            if (!have.count(pred)) return false;
        }
    }
    return true;
}

std::vector<Term> BarCode::star_set() const {
    if (!is_admissible()) throw NotAdmissibleError("star set of a non-admissible bar code");
    const auto es = elists();
    if (es.empty()) return {};
    std::set<std::vector<std::uint32_t>> out;
    // Bars of row i correspond to maximal runs of consecutive e-lists sharing
    // entries (b_n,...,b_i); a run's prefix is the shared high part.
    for (std::size_t i = 1; i <= n_; ++i) {
        const std::size_t pre = n_ - i + 1; // entries identifying an i-bar
        std::vector<std::vector<std::uint32_t>> bars;
        for (const auto& e : es) {
            std::vector<std::uint32_t> key(e.begin(), e.begin() + (long)pre);
            if (bars.empty() || bars.back() != key) bars.push_back(std::move(key));
        }
        auto raised = [&](const std::vector<std::uint32_t>& key) {
            // x_i * pi^i(term over the bar): bump the trailing entry, zero below
            std::vector<std::uint32_t> e(n_, 0);
            std::copy(key.begin(), key.end(), e.begin());
            ++e[pre - 1];
            return e;
        };
        out.insert(raised(bars.back()));
        if (i < n_) {
            for (std::size_t j = 0; j + 1 < bars.size(); ++j) {
                const bool same_parent =
                    std::equal(bars[j].begin(), bars[j].end() - 1, bars[j + 1].begin());
                if (!same_parent) out.insert(raised(bars[j]));
            }
        }
    }
    std::vector<Term> terms;
    terms.reserve(out.size());
    for (const auto& e : out) terms.push_back(term_of_elist(e));
    return lex_sorted(std::move(terms));
}

namespace {

void validate_bar(const BarCode::Bar& bar, std::size_t rows_left) {
    if (rows_left == 0) {
        if (bar.pts.empty()) throw InconsistentStateError("1-bar without a point label");
        if (!bar.sub.empty()) throw InconsistentStateError("1-bar with nested bars");
        return;
    }
    if (!bar.pts.empty()) throw InconsistentStateError("point label above row 1");
    if (bar.sub.empty()) throw InconsistentStateError("bar with nothing over it");
    for (const auto& s : bar.sub) validate_bar(s, rows_left - 1);
}

} // namespace

void BarCode::validate_structure() const {
    for (const auto& b : top_) validate_bar(b, n_ - 1);
}

std::string BarCode::render_text() const {
    const auto es = elists();
    std::ostringstream out;
    const auto terms = reconstruct_terms();
    out << "terms:";
    for (const auto& t : terms) out << " " << t.to_string();
    out << "\n";
    for (std::size_t i = n_; i >= 1; --i) {
        const std::size_t pre = n_ - i + 1;
        out << "x" << i << " |";
        std::size_t k = 0;
        while (k < es.size()) {
            std::size_t run = k + 1;
            while (run < es.size() &&
                   std::equal(es[k].begin(), es[k].begin() + (long)pre, es[run].begin()))
                ++run;
            out << " [";
            for (std::size_t c = k; c < run; ++c) out << "===";
            out << "]";
            k = run;
        }
        out << "\n";
        if (i == 1) break;
    }
    return out.str();
}

} // namespace escalier
