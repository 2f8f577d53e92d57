#pragma once

// Weight systems and complete-intersection specs: the input notation parser,
// canonical rendering, and the combinatorial validity checks.

#include "wci/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace wci {

// Weights a_0..a_n of a weighted projective space, stored sorted ascending
// (canonical form). Nonempty, every entry >= 1.
struct weight_system {
    std::vector<long long> w;

    std::size_t size() const { return w.size(); }
    long long operator[](std::size_t i) const { return w[i]; }

    int unit_count() const
    {
        return static_cast<int>(std::count(w.begin(), w.end(), 1));
    }

    static weight_system of(std::vector<long long> weights)
    {
        if (weights.empty())
            throw precondition_error("weight system must be nonempty");
        for (long long a : weights)
            if (a < 1)
                throw precondition_error("weights must be positive");
        std::sort(weights.begin(), weights.end());
        return weight_system{std::move(weights)};
    }

    bool operator==(const weight_system&) const = default;
    auto operator<=>(const weight_system&) const = default;
};

// A complete intersection of hypersurfaces of degrees d_1..d_c (sorted
// ascending) in P(a_0..a_n). Codimension c >= 0, dimension n - c >= 1.
struct ci_spec {
    weight_system weights;
    std::vector<long long> degrees;

    int codim() const { return static_cast<int>(degrees.size()); }
    int dim() const
    {
        return static_cast<int>(weights.size()) - 1 - codim();
    }

    static ci_spec of(weight_system w, std::vector<long long> degs)
    {
        for (long long d : degs)
            if (d < 1)
                throw precondition_error("degrees must be positive");
        std::sort(degs.begin(), degs.end());
        ci_spec s{std::move(w), std::move(degs)};
        if (s.dim() < 1)
            throw precondition_error("dimension n - c must be at least 1");
        return s;
    }

    bool operator==(const ci_spec&) const = default;
    auto operator<=>(const ci_spec&) const = default;
};

// ---------------------------------------------------------------------------
// parsing:  spec := "P(" wlist ")" "/" dlist?
//           wlist := witem ("," witem)* ;  witem := INT | INT "^" INT
//           dlist := INT ("," INT)*       (optionally parenthesized)
// Whitespace insensitive. Exponent abbreviations expand (1^3 -> 1,1,1);
// output is canonical (sorted), original index order is not preserved.

namespace detail {

struct cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "' " + what, i);
    }
    long long integer(const char* what, long long max_value = 1000000000000LL)
    {
        skip_ws();
        std::size_t start = i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error(std::string("expected integer ") + what, i);
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > max_value)
                throw parse_error(std::string("integer too large ") + what, start);
            ++i;
        }
        return v;
    }
};

constexpr long long max_list_items = 100000;

}  // namespace detail

inline ci_spec parse_spec(std::string_view text)
{
    detail::cursor c{text};
    c.expect('P', "to start the spec");
    c.expect('(', "after P");
    std::vector<long long> weights;
    while (true) {
        std::size_t at = c.i;
        long long base = c.integer("weight");
        if (base < 1)
            throw parse_error("weights must be positive", at);
        long long rep = 1;
        if (c.accept('^')) {
            std::size_t eat = c.i;
            rep = c.integer("weight repetition", detail::max_list_items);
            if (rep < 1)
                throw parse_error("repetition must be positive", eat);
        }
        if (static_cast<long long>(weights.size()) + rep > detail::max_list_items)
            throw parse_error("too many weights", at);
        weights.insert(weights.end(), static_cast<std::size_t>(rep), base);
        if (!c.accept(','))
            break;
    }
    c.expect(')', "to close the weight list");
    c.expect('/', "after the weight list");
    std::vector<long long> degrees;
    bool paren = c.accept('(');
    if (paren || !c.eof()) {
        while (true) {
            std::size_t at = c.i;
            long long d = c.integer("degree");
            if (d < 1)
                throw parse_error("degrees must be positive", at);
            degrees.push_back(d);
            if (static_cast<long long>(degrees.size()) > detail::max_list_items)
                throw parse_error("too many degrees", at);
            if (!c.accept(','))
                break;
        }
        if (paren)
            c.expect(')', "to close the degree list");
    }
    if (!c.eof())
        throw parse_error("unexpected trailing input", c.i);
    try {
        return ci_spec::of(weight_system::of(std::move(weights)), std::move(degrees));
    } catch (const precondition_error& e) {
        throw parse_error(e.what(), text.size());
    }
}

// Canonical rendering, e.g. P(1^3,2^2,3^2)/6,6 — exponent notation with
// ascending bases; parse_spec of the result reproduces the spec.
inline std::string render_spec(const ci_spec& s)
{
    std::string out = "P(";
    for (std::size_t i = 0; i < s.weights.size();) {
        std::size_t j = i;
        while (j < s.weights.size() && s.weights[j] == s.weights[i])
            ++j;
        if (i)
            out += ',';
        out += std::to_string(s.weights[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    out += ")/";
    for (std::size_t i = 0; i < s.degrees.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s.degrees[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// validity checks

// true iff for every index i, the gcd of all weights except a_i equals 1.
inline bool is_well_formed_space(const weight_system& w)
{
    if (w.size() < 2)
        throw precondition_error("well-formedness needs at least two weights");
    std::size_t n = w.size();
    // prefix/suffix gcds
    std::vector<long long> pre(n + 1, 0), suf(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        pre[i + 1] = gcd_ll(pre[i], w[i]);
    for (std::size_t i = n; i > 0; --i)
        suf[i - 1] = gcd_ll(suf[i], w[i - 1]);
    for (std::size_t i = 0; i < n; ++i)
        if (gcd_ll(pre[i], suf[i + 1]) != 1)
            return false;
    return true;
}

// true iff every three weights among those > 1 have gcd 1.
inline bool triple_coprime(const weight_system& w)
{
    std::vector<long long> nu;
    for (long long a : w.w)
        if (a > 1)
            nu.push_back(a);
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (std::size_t j = i + 1; j < nu.size(); ++j) {
            long long g = gcd_ll(nu[i], nu[j]);
            if (g == 1)
                continue;
            for (std::size_t k = j + 1; k < nu.size(); ++k)
                if (gcd_ll(g, nu[k]) != 1)
                    return false;
        }
    return true;
}

// true iff for every subset of weight indices with gcd delta > 1 and size k,
// at least k degrees are divisible by delta. Direct subset scan over the
// non-unit weights (subsets containing a unit weight have gcd 1).
inline bool divisibility_condition(const ci_spec& s)
{
    std::vector<long long> nu;
    for (long long a : s.weights.w)
        if (a > 1)
            nu.push_back(a);
    std::size_t m = nu.size();
    if (m > 24)
        throw resource_error("divisibility subset scan: too many non-unit weights");
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        long long g = 0;
        int k = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                g = gcd_ll(g, nu[i]);
                ++k;
            }
        if (g <= 1)
            continue;
        int divisible = 0;
        for (long long d : s.degrees)
            if (d % g == 0)
                ++divisible;
        if (divisible < k)
            return false;
    }
    return true;
}

// Sum a_i - Sum d_j; positive iff Fano.
inline long long fano_index(const ci_spec& s)
{
    long long v = 0;
    for (long long a : s.weights.w)
        v += a;
    for (long long d : s.degrees)
        v -= d;
    return v;
}

// true iff some degree equals some weight.
inline bool is_linear_cone(const ci_spec& s)
{
    for (long long d : s.degrees)
        for (long long a : s.weights.w)
            if (d == a)
                return true;
    return false;
}

struct analysis_report {
    bool well_formed_space = false;
    bool divisibility_ok = false;
    bool triple_coprime = false;
    bool linear_cone = false;
    long long fano_index = 0;
    int dimension = 0;
    int unit_count = 0;

    bool operator==(const analysis_report&) const = default;
};

inline analysis_report analyze(const ci_spec& s)
{
    analysis_report r;
    r.well_formed_space = is_well_formed_space(s.weights);
    r.divisibility_ok = divisibility_condition(s);
    r.triple_coprime = wci::triple_coprime(s.weights);
    r.linear_cone = is_linear_cone(s);
    r.fano_index = wci::fano_index(s);
    r.dimension = s.dim();
    r.unit_count = s.weights.unit_count();
    return r;
}

}  // namespace wci
