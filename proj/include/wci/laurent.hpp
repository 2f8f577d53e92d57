#pragma once

// Exact multivariate Laurent polynomials: map from integer exponent vectors
// (entries may be negative) to nonzero arbitrary-precision coefficients.
// Ring operations, a text grammar with parser and canonical printer, and
// equality up to group-preserving variable relabeling.

#include "wci/numeric.hpp"
#include "wci/weight_system.hpp"  // detail::cursor

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wci {

namespace detail {

// canonical variable order: groups t, x, y, z, u, v first, then remaining
// letters alphabetically; numeric subscript order within a group
inline int letter_rank(char c)
{
    static const std::string order = "txyzuv";
    auto p = order.find(c);
    if (p != std::string::npos)
        return static_cast<int>(p);
    return 6 + (c - 'a');
}

inline bool var_less(const std::string& a, const std::string& b)
{
    int ra = letter_rank(a[0]), rb = letter_rank(b[0]);
    if (ra != rb)
        return ra < rb;
    long long na = std::stoll(a.substr(1)), nb = std::stoll(b.substr(1));
    if (na != nb)
        return na < nb;
    return a < b;
}

}  // namespace detail

struct laurent_poly {
    std::vector<std::string> vars;                 // canonical order
    std::map<std::vector<int>, bigint> terms;      // exponent vector -> coeff

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const bigint& c)
    {
        if (c == 0)
            return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    bool operator==(const laurent_poly&) const = default;
};

inline laurent_poly lp_const(const bigint& c, std::vector<std::string> vars = {})
{
    laurent_poly f;
    f.vars = std::move(vars);
    if (c != 0)
        f.terms.emplace(std::vector<int>(f.vars.size(), 0), c);
    return f;
}

inline laurent_poly lp_var(const std::string& name)
{
    laurent_poly f;
    f.vars = {name};
    f.terms.emplace(std::vector<int>{1}, bigint(1));
    return f;
}

// remap a polynomial to a superset variable table
inline laurent_poly lp_on_vars(const laurent_poly& f, const std::vector<std::string>& vars)
{
    std::vector<int> pos(f.vars.size(), -1);
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), f.vars[i]);
        if (it == vars.end())
            throw internal_error("variable table mismatch in alignment");
        pos[i] = static_cast<int>(it - vars.begin());
    }
    laurent_poly out;
    out.vars = vars;
    for (const auto& [e, c] : f.terms) {
        std::vector<int> ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[pos[i]] = e[i];
        out.terms.emplace(std::move(ne), c);
    }
    return out;
}

inline std::vector<std::string> merged_vars(const laurent_poly& a, const laurent_poly& b)
{
    std::vector<std::string> vars = a.vars;
    for (const auto& v : b.vars)
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    std::sort(vars.begin(), vars.end(), detail::var_less);
    return vars;
}

inline laurent_poly lp_add(const laurent_poly& a, const laurent_poly& b)
{
    auto vars = merged_vars(a, b);
    laurent_poly x = lp_on_vars(a, vars);
    laurent_poly y = lp_on_vars(b, vars);
    for (const auto& [e, c] : y.terms)
        x.add_term(e, c);
    return x;
}

inline laurent_poly lp_neg(const laurent_poly& a)
{
    laurent_poly out = a;
    for (auto& [e, c] : out.terms)
        c = -c;
    return out;
}

inline laurent_poly lp_sub(const laurent_poly& a, const laurent_poly& b)
{
    return lp_add(a, lp_neg(b));
}

inline laurent_poly lp_mul(const laurent_poly& a, const laurent_poly& b)
{
    if (static_cast<unsigned long long>(a.terms.size()) * b.terms.size() > 2000000000ull)
        throw resource_error("product would need more than 2e9 term pairs");
    auto vars = merged_vars(a, b);
    laurent_poly x = lp_on_vars(a, vars);
    laurent_poly y = lp_on_vars(b, vars);
    laurent_poly out;
    out.vars = vars;
    std::vector<int> e(vars.size());
    for (const auto& [ea, ca] : x.terms)
        for (const auto& [eb, cb] : y.terms) {
            for (std::size_t i = 0; i < vars.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

// repeated squaring; throws when an intermediate result exceeds the term
// budget (the count is reported in the message)
inline laurent_poly lp_pow(const laurent_poly& f, long long e,
                           long long term_budget = 20000000)
{
    if (e < 0)
        throw precondition_error("lp_pow exponent must be nonnegative");
    laurent_poly result = lp_const(1, f.vars);
    laurent_poly base = f;
    while (e > 0) {
        if (e & 1) {
            result = lp_mul(result, base);
            if (static_cast<long long>(result.terms.size()) > term_budget)
                throw resource_error("lp_pow exceeded the term budget: " +
                                     std::to_string(result.terms.size()) + " terms");
        }
        e >>= 1;
        if (e) {
            base = lp_mul(base, base);
            if (static_cast<long long>(base.terms.size()) > term_budget)
                throw resource_error("lp_pow exceeded the term budget: " +
                                     std::to_string(base.terms.size()) + " terms");
        }
    }
    return result;
}

inline bigint constant_term(const laurent_poly& f)
{
    auto it = f.terms.find(std::vector<int>(f.vars.size(), 0));
    return it == f.terms.end() ? bigint(0) : it->second;
}

// ---------------------------------------------------------------------------
// canonical text: terms in ascending exponent-vector order; each term is
// rendered as [coef*]pos_monomial[/neg_monomial] with multi-factor
// denominators parenthesized, e.g. "1/t1 + t1" or "3*x1^2/(y1*t1^2)".

inline std::string canonical_text(const laurent_poly& f)
{
    if (f.terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        bigint mag = c < 0 ? bigint(-c) : c;
        std::vector<std::string> pos, neg;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0)
                pos.push_back(e[i] == 1 ? f.vars[i]
                                        : f.vars[i] + "^" + std::to_string(e[i]));
            else if (e[i] < 0)
                neg.push_back(e[i] == -1 ? f.vars[i]
                                         : f.vars[i] + "^" + std::to_string(-e[i]));
        }
        std::string term;
        if (pos.empty()) {
            term = mag.str();
        } else {
            if (mag != 1)
                term = mag.str() + "*";
            for (std::size_t i = 0; i < pos.size(); ++i)
                term += (i ? "*" : "") + pos[i];
        }
        if (!neg.empty()) {
            std::string den;
            for (std::size_t i = 0; i < neg.size(); ++i)
                den += (i ? "*" : "") + neg[i];
            term += "/" + (neg.size() > 1 ? "(" + den + ")" : den);
        }
        if (first) {
            out = (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parser for the term grammar: sums of signed terms; a term is a product of
// factors (INT, var[^e], or parenthesized sum with power), '*' optional,
// '/' divides by the next factor, which must reduce to a monomial with
// coefficient +-1 (or an integer dividing every coefficient).

namespace detail {

struct lp_parser {
    cursor c;

    static bool is_var_start(char ch) { return ch >= 'a' && ch <= 'z'; }

    std::string variable()
    {
        c.skip_ws();
        std::size_t start = c.i;
        char letter = c.s[c.i++];
        std::string name(1, letter);
        if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            throw parse_error("variable names are a letter followed by digits", start);
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            name += c.s[c.i++];
        return name;
    }

    long long exponent()
    {
        c.skip_ws();
        bool negative = c.accept('-');
        long long v = c.integer("exponent", 1000000);
        return negative ? -v : v;
    }

    bigint big_integer()
    {
        c.skip_ws();
        std::size_t start = c.i;
        if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            throw parse_error("expected integer", start);
        std::string digits;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            digits += c.s[c.i++];
        return bigint(digits);
    }

    laurent_poly primary()
    {
        c.skip_ws();
        if (c.i >= c.s.size())
            throw parse_error("unexpected end of input", c.i);
        char ch = c.s[c.i];
        laurent_poly base;
        if (ch == '(') {
            ++c.i;
            base = expr();
            c.expect(')', "to close the group");
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            base = lp_const(big_integer());
        } else if (is_var_start(ch)) {
            base = lp_var(variable());
        } else {
            throw parse_error("expected a factor", c.i);
        }
        if (c.accept('^')) {
            long long e = exponent();
            if (e >= 0)
                return lp_pow(base, e);
            return invert_monomial(lp_pow(base, -e));
        }
        return base;
    }

    laurent_poly invert_monomial(const laurent_poly& m)
    {
        if (m.terms.size() != 1)
            throw parse_error("cannot invert a non-monomial", c.i);
        const auto& [e, coeff] = *m.terms.begin();
        if (coeff != 1 && coeff != -1)
            throw parse_error("cannot invert a monomial with coefficient != 1", c.i);
        laurent_poly out;
        out.vars = m.vars;
        std::vector<int> ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[i] = -e[i];
        out.terms.emplace(std::move(ne), coeff);
        return out;
    }

    laurent_poly divide_by(const laurent_poly& num, const laurent_poly& den)
    {
        if (den.terms.size() != 1)
            throw parse_error("denominator must be a monomial", c.i);
        const auto& [e, coeff] = *den.terms.begin();
        laurent_poly inv;
        inv.vars = den.vars;
        std::vector<int> ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[i] = -e[i];
        if (coeff == 1 || coeff == -1) {
            inv.terms.emplace(std::move(ne), coeff);
            return lp_mul(num, inv);
        }
        // integer coefficient: require exact division of every numerator term
        inv.terms.emplace(std::move(ne), bigint(1));
        laurent_poly shifted = lp_mul(num, inv);
        for (auto& [ee, cc] : shifted.terms) {
            if (cc % coeff != 0)
                throw parse_error("division does not yield integer coefficients", c.i);
            cc /= coeff;
        }
        return shifted;
    }

    bool at_factor()
    {
        c.skip_ws();
        if (c.i >= c.s.size())
            return false;
        char ch = c.s[c.i];
        return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)) || is_var_start(ch);
    }

    laurent_poly term()
    {
        laurent_poly acc = primary();
        while (true) {
            c.skip_ws();
            if (c.accept('*')) {
                acc = lp_mul(acc, primary());
            } else if (c.accept('/')) {
                acc = divide_by(acc, primary());
            } else if (at_factor()) {
                acc = lp_mul(acc, primary());
            } else {
                break;
            }
        }
        return acc;
    }

    laurent_poly expr()
    {
        bool neg = false;
        c.skip_ws();
        if (c.accept('-'))
            neg = true;
        else
            c.accept('+');
        laurent_poly acc = term();
        if (neg)
            acc = lp_neg(acc);
        while (true) {
            c.skip_ws();
            if (c.accept('+'))
                acc = lp_add(acc, term());
            else if (c.accept('-'))
                acc = lp_sub(acc, term());
            else
                break;
        }
        return acc;
    }
};

}  // namespace detail

inline laurent_poly parse_laurent(std::string_view text)
{
    detail::lp_parser p{detail::cursor{text}};
    laurent_poly f = p.expr();
    if (!p.c.eof())
        throw parse_error("unexpected trailing input", p.c.i);
    // normalize the variable table to canonical order
    std::vector<std::string> vars = f.vars;
    std::sort(vars.begin(), vars.end(), detail::var_less);
    return lp_on_vars(f, vars);
}

// ---------------------------------------------------------------------------
// equality up to group-preserving relabeling: a bijection of variables that
// preserves each variable's leading letter and maps term maps exactly.

inline bool equal_up_to_relabel(const laurent_poly& f, const laurent_poly& g)
{
    if (f.vars.size() != g.vars.size())
        return false;
    if (f.terms.size() != g.terms.size())
        return false;

    // per-letter index lists
    std::map<char, std::vector<int>> fg, gg;
    for (std::size_t i = 0; i < f.vars.size(); ++i)
        fg[f.vars[i][0]].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < g.vars.size(); ++i)
        gg[g.vars[i][0]].push_back(static_cast<int>(i));
    if (fg.size() != gg.size())
        return false;
    for (const auto& [letter, idx] : fg) {
        auto it = gg.find(letter);
        if (it == gg.end() || it->second.size() != idx.size())
            return false;
    }

    // quick coefficient-multiset filter
    {
        std::vector<bigint> cf, cg;
        for (const auto& [e, c] : f.terms)
            cf.push_back(c);
        for (const auto& [e, c] : g.terms)
            cg.push_back(c);
        std::sort(cf.begin(), cf.end());
        std::sort(cg.begin(), cg.end());
        if (cf != cg)
            return false;
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;  // (f idx, g idx)
    long long perm_bound = 1;
    for (const auto& [letter, idx] : fg) {
        groups.emplace_back(idx, gg[letter]);
        for (std::size_t k = 2; k <= idx.size(); ++k) {
            perm_bound *= static_cast<long long>(k);
            if (perm_bound > 1000000)
                throw resource_error("too many relabelings to try");
        }
    }

    // mapping[g index] = f index
    std::vector<int> mapping(g.vars.size(), -1);
    std::function<bool(std::size_t)> attempt = [&](std::size_t gi) -> bool {
        if (gi == groups.size()) {
            laurent_poly h;
            h.vars = f.vars;
            std::vector<int> e(f.vars.size());
            for (const auto& [eg, c] : g.terms) {
                for (std::size_t i = 0; i < eg.size(); ++i)
                    e[mapping[i]] = eg[i];
                h.terms.emplace(e, c);
            }
            return h.terms == f.terms;
        }
        auto& [fidx, gidx] = groups[gi];
        std::vector<int> perm = fidx;
        std::sort(perm.begin(), perm.end());
        do {
            for (std::size_t k = 0; k < gidx.size(); ++k)
                mapping[gidx[k]] = perm[k];
            if (attempt(gi + 1))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    return attempt(0);
}

}  // namespace wci
