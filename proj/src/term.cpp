#include "escalier/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace escalier {

Term Term::variable(std::size_t nvars, std::size_t i) {
    if (i < 1 || i > nvars) throw IndexOutOfRangeError("variable index " + std::to_string(i));
    Term t(nvars);
    t.exps_[i - 1] = 1;
    return t;
}

std::uint32_t Term::deg(std::size_t i) const {
    if (i < 1 || i > exps_.size()) throw IndexOutOfRangeError("variable index " + std::to_string(i));
    return exps_[i - 1];
}

std::uint64_t Term::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Term Term::times(const Term& o) const {
    if (o.nvars() != nvars()) throw DimensionMismatchError("term product across dimensions");
    Term r = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += o.exps_[k];
    return r;
}

Term Term::times_var(std::size_t i) const {
    if (i < 1 || i > exps_.size()) throw IndexOutOfRangeError("variable index " + std::to_string(i));
    Term r = *this;
    ++r.exps_[i - 1];
    return r;
}

bool Term::divides(const Term& o) const {
    if (o.nvars() != nvars()) throw DimensionMismatchError("divisibility across dimensions");
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] > o.exps_[k]) return false;
    return true;
}

Term Term::quotient_by(const Term& o) const {
    if (!o.divides(*this)) throw IndexOutOfRangeError("quotient by a non-divisor");
    Term r = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= o.exps_[k];
    return r;
}

Term Term::quotient_by_var(std::size_t i) const {
    if (i < 1 || i > exps_.size() || exps_[i - 1] == 0)
        throw IndexOutOfRangeError("quotient by a non-divisor variable");
    Term r = *this;
    --r.exps_[i - 1];
    return r;
}

std::optional<std::size_t> Term::min_variable() const {
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] > 0) return k + 1;
    return std::nullopt;
}

std::string Term::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(k + 1);
        if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
    }
    return out.empty() ? "1" : out;
}

int lex_cmp(const Term& a, const Term& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatchError("lex comparison across dimensions");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t k = ea.size(); k-- > 0;) {
        if (ea[k] != eb[k]) return ea[k] < eb[k] ? -1 : 1;
    }
    return 0;
}

bool lex_less(const Term& a, const Term& b) { return lex_cmp(a, b) < 0; }

Term project_low(const Term& t, std::size_t m) {
    if (m < 1 || m > t.nvars()) throw IndexOutOfRangeError("projection index " + std::to_string(m));
    std::vector<std::uint32_t> e(t.exponents().begin(), t.exponents().begin() + (long)m);
    return Term(std::move(e));
}

Term project_high(const Term& t, std::size_t m) {
    if (m < 1 || m > t.nvars()) throw IndexOutOfRangeError("projection index " + std::to_string(m));
    std::vector<std::uint32_t> e(t.exponents().begin() + (long)(m - 1), t.exponents().end());
    return Term(std::move(e));
}

Term parse_term(std::string_view text, std::size_t nvars) {
    Term t(nvars);
    if (text == "1") return t;
    std::size_t pos = 0;
    auto read_uint = [&](const char* what) -> std::uint64_t {
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            throw ParseError(std::string("expected ") + what + " in term: " + std::string(text));
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            v = v * 10 + (std::uint64_t)(text[pos++] - '0');
        return v;
    };
    std::vector<std::uint32_t> exps(nvars, 0);
    while (pos < text.size()) {
        if (text[pos] != 'x') throw ParseError("bad term: " + std::string(text));
        ++pos;
        const std::uint64_t var = read_uint("variable index");
        if (var < 1 || var > nvars) throw ParseError("variable out of range in term: " + std::string(text));
        std::uint64_t e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = read_uint("exponent");
        }
        exps[var - 1] += (std::uint32_t)e;
        if (pos < text.size()) {
            if (text[pos] != '*') throw ParseError("bad term: " + std::string(text));
            ++pos;
        }
    }
    return Term(std::move(exps));
}

bool is_order_ideal(const std::vector<Term>& terms) {
    if (terms.empty()) return true;
    std::set<std::vector<std::uint32_t>> have;
    for (const auto& t : terms) have.insert(t.exponents());
    for (const auto& t : terms) {
        for (std::size_t i = 1; i <= t.nvars(); ++i) {
            if (t.deg(i) == 0) continue;
            if (!have.count(t.quotient_by_var(i).exponents())) return false;
        }
    }
    return true;
}

std::vector<Term> minimal_generators(const std::vector<Term>& order_ideal, std::size_t nvars) {
    if (!is_order_ideal(order_ideal)) throw NotOrderIdealError("minimal_generators: input is not an order ideal");
    std::set<std::vector<std::uint32_t>> inside;
    for (const auto& t : order_ideal) {
        if (t.nvars() != nvars) throw DimensionMismatchError("minimal_generators: dimension mismatch");
        inside.insert(t.exponents());
    }
    std::set<std::vector<std::uint32_t>> gens;
    auto consider = [&](const Term& c) {
        if (inside.count(c.exponents())) return;
        for (std::size_t i = 1; i <= nvars; ++i) {
            if (c.deg(i) == 0) continue;
            if (!inside.count(c.quotient_by_var(i).exponents())) return;
        }
        gens.insert(c.exponents());
    };
    if (order_ideal.empty()) {
        // complement of the empty order ideal is generated by 1
        return {Term(nvars)};
    }
    for (const auto& t : order_ideal)
        for (std::size_t i = 1; i <= nvars; ++i) consider(t.times_var(i));
    std::vector<Term> out;
    out.reserve(gens.size());
    for (const auto& e : gens) out.emplace_back(e);
    return lex_sorted(std::move(out));
}

std::vector<Term> lex_sorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), LexLess{});
    return terms;
}

} // namespace escalier
