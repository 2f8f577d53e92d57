#pragma once

// Nef partitions: splittings {0..n} = S_0 ⊔ S_1 ⊔ ... ⊔ S_c with
// sum_{j in S_i} a_j = d_i for i >= 1. Construction for codimension <= 2
// via the graph splitting, exhaustive enumeration for any codimension,
// niceness detection and canonical deduplication by weight signatures.

#include "wci/numeric.hpp"
#include "wci/weight_system.hpp"
#include "wci/wp_graph.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wci {

// parts[0] = S_0 (unconstrained sum), parts[i] = S_i; each sorted ascending;
// together a disjoint cover of {0..n} in canonical index order.
struct nef_partition {
    std::vector<std::vector<int>> parts;

    bool operator==(const nef_partition&) const = default;
};

// Per-part weight multisets, S_0 first. Invariant under permuting indices
// of equal weight.
using part_signature = std::vector<std::vector<long long>>;

inline void validate_partition(const ci_spec& s, const nef_partition& p)
{
    int n1 = static_cast<int>(s.weights.size());
    if (p.parts.size() != s.degrees.size() + 1)
        throw precondition_error("partition must have one part per degree plus S_0");
    std::vector<bool> seen(n1, false);
    for (const auto& part : p.parts)
        for (int i : part) {
            if (i < 0 || i >= n1)
                throw precondition_error("partition index out of range");
            if (seen[i])
                throw precondition_error("partition parts are not disjoint");
            seen[i] = true;
        }
    for (int i = 0; i < n1; ++i)
        if (!seen[i])
            throw precondition_error("partition does not cover all indices");
    for (std::size_t i = 1; i < p.parts.size(); ++i) {
        long long sum = 0;
        for (int j : p.parts[i])
            sum += s.weights[j];
        if (sum != s.degrees[i - 1])
            throw precondition_error("part sum " + std::to_string(sum) +
                                     " does not equal degree " +
                                     std::to_string(s.degrees[i - 1]));
    }
}

inline bool is_valid_partition(const ci_spec& s, const nef_partition& p)
{
    try {
        validate_partition(s, p);
        return true;
    } catch (const precondition_error&) {
        return false;
    }
}

// nice iff S_0 contains a unit-weight index
inline bool is_nice(const nef_partition& p, const ci_spec& s)
{
    validate_partition(s, p);
    for (int i : p.parts[0])
        if (s.weights[i] == 1)
            return true;
    return false;
}

inline part_signature signature_of(const ci_spec& s, const nef_partition& p)
{
    part_signature sig;
    for (const auto& part : p.parts) {
        std::vector<long long> ws;
        for (int i : part)
            ws.push_back(s.weights[i]);
        std::sort(ws.begin(), ws.end());
        sig.push_back(std::move(ws));
    }
    return sig;
}

inline std::string render_partition(const nef_partition& p)
{
    std::string out;
    for (std::size_t k = 0; k < p.parts.size(); ++k) {
        if (k)
            out += '|';
        out += '{';
        for (std::size_t i = 0; i < p.parts[k].size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(p.parts[k][i]);
        }
        out += '}';
    }
    return out;
}

inline std::string render_signature(const part_signature& sig)
{
    std::string out;
    for (std::size_t k = 0; k < sig.size(); ++k) {
        if (k)
            out += '|';
        out += '{';
        for (std::size_t i = 0; i < sig[k].size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(sig[k][i]);
        }
        out += '}';
    }
    return out;
}

// true iff #{i : a_i = 1} >= fano_index
inline bool unit_count_bound(const ci_spec& s)
{
    return s.weights.unit_count() >= fano_index(s);
}

namespace detail {

struct weight_class {
    long long weight;
    std::vector<int> indices;  // ascending
};

inline std::vector<weight_class> weight_classes(const ci_spec& s)
{
    std::vector<weight_class> cs;
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
        if (!cs.empty() && cs.back().weight == s.weights[i])
            cs.back().indices.push_back(static_cast<int>(i));
        else
            cs.push_back({s.weights[i], {static_cast<int>(i)}});
    }
    return cs;
}

// Canonical index assignment from per-class part counts: within each weight
// class the ascending indices fill parts in order S_0, S_1, ..., S_c.
inline nef_partition partition_from_counts(const std::vector<weight_class>& cs,
                                           const std::vector<std::vector<int>>& counts,
                                           std::size_t nparts)
{
    nef_partition p;
    p.parts.assign(nparts, {});
    for (std::size_t c = 0; c < cs.size(); ++c) {
        std::size_t at = 0;
        for (std::size_t part = 0; part < nparts; ++part)
            for (int k = 0; k < counts[c][part]; ++k)
                p.parts[part].push_back(cs[c].indices[at++]);
    }
    return p;
}

}  // namespace detail

struct enumerate_options {
    bool allow_empty_s0 = false;
    long long node_budget = 100000000;  // backtracking nodes before a resource error
};

// Exhaustive enumeration, deduplicated by signature (parts of equal degree
// count as interchangeable) and sorted by signature. Backtracks over weight
// classes in descending weight order with remaining-capacity pruning, so
// permuting equal-weight indices never produces duplicates.
inline std::vector<nef_partition> enumerate_all(const ci_spec& s,
                                                enumerate_options opt = {})
{
    const auto cs = detail::weight_classes(s);
    const std::size_t nparts = s.degrees.size() + 1;
    long long s0_target = fano_index(s);
    if (s0_target < 0)
        return {};  // part sums cannot be met

    // capacities: S_0 must absorb exactly the Fano index, parts their degrees
    std::vector<long long> cap(nparts);
    cap[0] = s0_target;
    for (std::size_t i = 1; i < nparts; ++i)
        cap[i] = s.degrees[i - 1];

    // descending-weight class order
    std::vector<std::size_t> order(cs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = cs.size() - 1 - i;

    std::vector<std::vector<int>> counts(cs.size(), std::vector<int>(nparts, 0));
    long long nodes = 0;

    // equal-degree runs for canonical ordering of interchangeable parts
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // [begin, end) in part indices
    for (std::size_t i = 1; i < nparts;) {
        std::size_t j = i;
        while (j < nparts && s.degrees[j - 1] == s.degrees[i - 1])
            ++j;
        if (j - i > 1)
            runs.emplace_back(i, j);
        i = j;
    }

    std::set<part_signature> seen;
    std::vector<nef_partition> out;

    std::function<void(std::size_t, std::vector<long long>&)> rec =
        [&](std::size_t ci, std::vector<long long>& rem) {
            if (++nodes > opt.node_budget)
                throw resource_error("nef partition enumeration exceeded the node budget");
            if (ci == cs.size()) {
                for (long long r : rem)
                    if (r != 0)
                        return;
                nef_partition p = detail::partition_from_counts(cs, counts, nparts);
                part_signature sig = signature_of(s, p);
                // canonicalize interchangeable equal-degree parts
                bool changed = false;
                for (auto [b, e] : runs) {
                    if (!std::is_sorted(sig.begin() + b, sig.begin() + e)) {
                        std::sort(sig.begin() + b, sig.begin() + e);
                        changed = true;
                    }
                }
                if (!seen.insert(sig).second)
                    return;
                if (changed) {
                    // rebuild counts in canonical part order, then indices
                    std::vector<std::vector<int>> cc(cs.size(), std::vector<int>(nparts, 0));
                    for (std::size_t c = 0; c < cs.size(); ++c)
                        for (std::size_t part = 0; part < nparts; ++part) {
                            long long w = cs[c].weight;
                            cc[c][part] = static_cast<int>(
                                std::count(sig[part].begin(), sig[part].end(), w));
                        }
                    p = detail::partition_from_counts(cs, cc, nparts);
                }
                out.push_back(std::move(p));
                return;
            }
            const auto& cls = cs[order[ci]];
            long long w = cls.weight;
            int n = static_cast<int>(cls.indices.size());
            std::vector<int>& row = counts[order[ci]];
            if (w == 1) {
                // unit weights are forced: they fill every remaining capacity
                long long need = 0;
                for (long long r : rem)
                    need += r;
                if (need != n)
                    return;
                std::vector<long long> saved = rem;
                for (std::size_t part = 0; part < nparts; ++part) {
                    row[part] = static_cast<int>(rem[part]);
                    rem[part] = 0;
                }
                rec(ci + 1, rem);
                rem = saved;
                for (std::size_t part = 0; part < nparts; ++part)
                    row[part] = 0;
                return;
            }
            // distribute n items of weight w over the parts
            std::function<void(std::size_t, int)> place = [&](std::size_t part, int left) {
                if (part + 1 == nparts) {
                    if (static_cast<long long>(left) * w > rem[part])
                        return;
                    row[part] = left;
                    rem[part] -= left * w;
                    rec(ci + 1, rem);
                    rem[part] += left * w;
                    row[part] = 0;
                    return;
                }
                int maxk = static_cast<int>(std::min<long long>(left, rem[part] / w));
                for (int k = 0; k <= maxk; ++k) {
                    row[part] = k;
                    rem[part] -= k * w;
                    place(part + 1, left - k);
                    rem[part] += k * w;
                    row[part] = 0;
                }
            };
            place(0, n);
        };

    std::vector<long long> rem = cap;
    rec(0, rem);

    if (!opt.allow_empty_s0 && s0_target == 0)
        out.clear();

    std::sort(out.begin(), out.end(), [&](const nef_partition& a, const nef_partition& b) {
        return signature_of(s, a) < signature_of(s, b);
    });
    return out;
}

// Constructs a nice nef partition for codimension <= 2: splits the WP-graph
// across the two degrees (codimension 2) or sends all non-unit weights to
// S_1 (codimension 1), pads parts with unit weights to exact degree sums,
// and leaves the remaining units in S_0. The result is emitted in canonical
// index form (equal-weight indices distributed to parts in order).
inline nef_partition construct_nice(const ci_spec& s)
{
    if (s.codim() > 2)
        throw precondition_error("construction requires codimension <= 2");
    if (fano_index(s) <= 0)
        throw precondition_error("construction requires a Fano spec (positive index)");
    if (!is_well_formed_space(s.weights))
        throw precondition_error("construction requires a well formed space");
    if (!triple_coprime(s.weights))
        throw precondition_error("construction requires triple-coprime weights");
    if (!divisibility_condition(s))
        throw precondition_error("construction requires the degree divisibility condition");

    const std::size_t nparts = s.degrees.size() + 1;
    std::vector<std::vector<int>> parts(nparts);

    if (s.codim() == 1) {
        for (std::size_t i = 0; i < s.weights.size(); ++i)
            if (s.weights[i] > 1)
                parts[1].push_back(static_cast<int>(i));
    } else if (s.codim() == 2) {
        wp_graph g = build_wp_graph(s.weights);
        graph_split sp = split_bidegree(g, s.degrees[0], s.degrees[1]);
        parts[1] = sp.v1;
        parts[2] = sp.v2;
    }

    // pad each part with unit weights up to its degree
    std::vector<int> units;
    for (std::size_t i = 0; i < s.weights.size(); ++i)
        if (s.weights[i] == 1)
            units.push_back(static_cast<int>(i));
    std::size_t next = 0;
    for (std::size_t pi = 1; pi < nparts; ++pi) {
        long long sum = 0;
        for (int j : parts[pi])
            sum += s.weights[j];
        long long need = s.degrees[pi - 1] - sum;
        if (need < 0 || next + need > units.size())
            throw internal_error("padding with unit weights is infeasible");
        for (long long k = 0; k < need; ++k)
            parts[pi].push_back(units[next++]);
    }
    for (; next < units.size(); ++next)
        parts[0].push_back(units[next]);

    nef_partition p{std::move(parts)};
    for (auto& part : p.parts)
        std::sort(part.begin(), part.end());
    validate_partition(s, p);
    if (!is_nice(p, s))
        throw internal_error("constructed partition is not nice");
    for (int i : p.parts[0])
        if (s.weights[i] != 1)
            throw internal_error("constructed S_0 contains a non-unit weight");

    // order interchangeable equal-degree parts by weight multiset, matching
    // the enumeration's canonical form
    for (std::size_t i = 1; i < nparts;) {
        std::size_t j = i;
        while (j < nparts && s.degrees[j - 1] == s.degrees[i - 1])
            ++j;
        if (j - i > 1)
            std::sort(p.parts.begin() + i, p.parts.begin() + j,
                      [&](const std::vector<int>& a, const std::vector<int>& b) {
                          std::vector<long long> wa, wb;
                          for (int x : a)
                              wa.push_back(s.weights[x]);
                          for (int x : b)
                              wb.push_back(s.weights[x]);
                          return wa < wb;
                      });
        i = j;
    }

    // canonical index form (same signature)
    auto cs = detail::weight_classes(s);
    std::vector<std::vector<int>> counts(cs.size(), std::vector<int>(nparts, 0));
    for (std::size_t part = 0; part < nparts; ++part)
        for (int idx : p.parts[part])
            for (std::size_t c = 0; c < cs.size(); ++c)
                if (cs[c].weight == s.weights[idx])
                    ++counts[c][part];
    return detail::partition_from_counts(cs, counts, nparts);
}

// ---------------------------------------------------------------------------
// partition parsing: accepts the canonical index form {0}|{1,2,3,4}|{5,6}
// and the signature form {1}|{1,1,2,2}|{3,3} (resolved to canonical indices).

inline nef_partition parse_partition(const ci_spec& s, std::string_view text)
{
    std::vector<std::vector<long long>> groups;
    detail::cursor c{text};
    while (true) {
        c.expect('{', "to open a part");
        std::vector<long long> vals;
        if (c.peek() != '}')
            while (true) {
                vals.push_back(c.integer("part entry"));
                if (!c.accept(','))
                    break;
            }
        c.expect('}', "to close a part");
        groups.push_back(std::move(vals));
        if (!c.accept('|'))
            break;
    }
    if (!c.eof())
        throw parse_error("unexpected trailing input", c.i);

    // try index interpretation first
    {
        nef_partition p;
        for (const auto& g : groups) {
            std::vector<int> part;
            for (long long v : g)
                part.push_back(static_cast<int>(v));
            std::sort(part.begin(), part.end());
            p.parts.push_back(std::move(part));
        }
        if (is_valid_partition(s, p))
            return p;
    }
    // signature interpretation: per weight class, counts per part
    const auto cs = detail::weight_classes(s);
    const std::size_t nparts = s.degrees.size() + 1;
    if (groups.size() != nparts)
        throw parse_error("partition must have one part per degree plus S_0", 0);
    std::vector<std::vector<int>> counts(cs.size(), std::vector<int>(nparts, 0));
    for (std::size_t part = 0; part < nparts; ++part)
        for (long long w : groups[part]) {
            bool found = false;
            for (std::size_t c = 0; c < cs.size(); ++c)
                if (cs[c].weight == w) {
                    ++counts[c][part];
                    found = true;
                    break;
                }
            if (!found)
                throw parse_error("signature weight " + std::to_string(w) +
                                      " does not occur in the spec",
                                  0);
        }
    for (std::size_t c = 0; c < cs.size(); ++c) {
        int total = 0;
        for (std::size_t part = 0; part < nparts; ++part)
            total += counts[c][part];
        if (total != static_cast<int>(cs[c].indices.size()))
            throw parse_error("signature does not use each weight exactly once", 0);
    }
    nef_partition p = detail::partition_from_counts(cs, counts, nparts);
    validate_partition(s, p);
    return p;
}

// Documented caveat of the literal splitting definition: for the family
// P(1^k,6,10,15)/(2,3,5,30) no splitting exists for k <= 14, but from k = 15
// splittings with a non-unit remainder set appear (e.g. {15,10} plus five
// units fill the degree-30 part and S_0 = {the weight-6 index}). Emitted as
// a warning so empty results in the small-k regime are not over-read.
inline std::optional<std::string> literal_definition_caveat(const ci_spec& s)
{
    std::vector<long long> nonunits;
    for (long long a : s.weights.w)
        if (a > 1)
            nonunits.push_back(a);
    if (nonunits == std::vector<long long>{6, 10, 15} &&
        s.degrees == std::vector<long long>{2, 3, 5, 30}) {
        return "note: for weights (1^k,6,10,15) with degrees (2,3,5,30) the literal "
               "splitting definition admits no partition for k <= 14 but does from "
               "k >= 15 (with a non-unit weight left in S_0); results follow the "
               "literal definition";
    }
    return std::nullopt;
}

}  // namespace wci
