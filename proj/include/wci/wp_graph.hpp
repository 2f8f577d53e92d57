#pragma once

// WP-graphs: the gcd-graph on non-unit weights of a weighted projective
// space, weak/strong vertex classification, Sigma and lcm, detection of the
// exceptional triangle with weights {6,10,15}, the constructive bidegree
// splitting, and exhaustive enumeration of small WP-graphs.

#include "wci/numeric.hpp"
#include "wci/weight_system.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace wci {

struct wp_vertex {
    int id;            // index into the canonical (ascending) weight order
    long long weight;  // >= 2
};

// Graph without loops or multiple edges; an edge joins two vertices iff
// their weights are not coprime; every three vertex weights are coprime.
struct wp_graph {
    std::vector<wp_vertex> vertices;            // ascending id
    std::vector<std::pair<int, int>> edge_list; // id pairs, u < v

    bool empty() const { return vertices.empty(); }

    const wp_vertex* find(int id) const
    {
        for (const auto& v : vertices)
            if (v.id == id)
                return &v;
        return nullptr;
    }

    long long weight_of(int id) const
    {
        const wp_vertex* v = find(id);
        if (!v)
            throw precondition_error("no such vertex id");
        return v->weight;
    }

    std::vector<int> neighbors(int id) const
    {
        std::vector<int> out;
        for (auto [a, b] : edge_list) {
            if (a == id)
                out.push_back(b);
            else if (b == id)
                out.push_back(a);
        }
        return out;
    }
};

namespace detail {

inline wp_graph graph_from_vertices(std::vector<wp_vertex> vs)
{
    wp_graph g;
    g.vertices = std::move(vs);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (gcd_ll(g.vertices[i].weight, g.vertices[j].weight) > 1)
                g.edge_list.emplace_back(g.vertices[i].id, g.vertices[j].id);
    return g;
}

}  // namespace detail

// One vertex per weight > 1, ids are canonical weight indices.
// Throws if some three weights share a common factor; the offending triple
// of weights is named in the message.
inline wp_graph build_wp_graph(const weight_system& w)
{
    std::vector<wp_vertex> vs;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > 1)
            vs.push_back({static_cast<int>(i), w[i]});
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            long long g = gcd_ll(vs[i].weight, vs[j].weight);
            if (g == 1)
                continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k)
                if (gcd_ll(g, vs[k].weight) != 1)
                    throw precondition_error(
                        "weights are not triple-coprime: (" +
                        std::to_string(vs[i].weight) + "," +
                        std::to_string(vs[j].weight) + "," +
                        std::to_string(vs[k].weight) + ")");
        }
    return detail::graph_from_vertices(std::move(vs));
}

inline bigint graph_sigma(const wp_graph& g)
{
    if (g.empty())
        throw precondition_error("sigma of an empty graph");
    bigint s = 0;
    for (const auto& v : g.vertices)
        s += v.weight;
    return s;
}

inline bigint graph_lcm(const wp_graph& g)
{
    if (g.empty())
        throw precondition_error("lcm of an empty graph");
    bigint l = 1;
    for (const auto& v : g.vertices)
        l = lcm_big(l, v.weight);
    return l;
}

// v is weak iff some neighbor v' has weight(v) | weight(v').
inline std::vector<int> weak_vertices(const wp_graph& g)
{
    std::vector<int> out;
    for (const auto& v : g.vertices)
        for (int u : g.neighbors(v.id))
            if (g.weight_of(u) % v.weight == 0) {
                out.push_back(v.id);
                break;
            }
    return out;
}

enum class weak_type { first, second };

struct weak_class {
    weak_type type;
    int partner;  // tau(v) for first type, the equal-weight partner for second
};

// First type: the unique neighbor tau(v) has strictly larger weight (and is
// strong). Second type: equal weights, a mutual weak pair forming its own
// connected component.
inline weak_class classify_weak(const wp_graph& g, int id)
{
    long long wv = g.weight_of(id);
    auto nb = g.neighbors(id);
    int partner = -1;
    for (int u : nb)
        if (g.weight_of(u) % wv == 0)
            partner = u;
    if (partner < 0)
        throw precondition_error("vertex is not weak");
    if (nb.size() != 1)
        throw internal_error("weak vertex with more than one edge");
    long long wp = g.weight_of(partner);
    return wp > wv ? weak_class{weak_type::first, partner}
                   : weak_class{weak_type::second, partner};
}

inline std::vector<std::vector<int>> components(const wp_graph& g)
{
    std::vector<std::vector<int>> out;
    std::vector<int> ids;
    for (const auto& v : g.vertices)
        ids.push_back(v.id);
    std::vector<bool> seen(ids.size(), false);
    for (std::size_t s = 0; s < ids.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{ids[s]};
        seen[s] = true;
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (int u : g.neighbors(comp[q]))
                for (std::size_t t = 0; t < ids.size(); ++t)
                    if (ids[t] == u && !seen[t]) {
                        seen[t] = true;
                        comp.push_back(u);
                    }
        out.push_back(std::move(comp));
    }
    return out;
}

// The (unique, if present) connected component whose weight multiset is
// exactly {6,10,15}; returns its ids.
inline std::optional<std::array<int, 3>> contains_delta(const wp_graph& g)
{
    for (const auto& comp : components(g)) {
        if (comp.size() != 3)
            continue;
        std::array<long long, 3> ws;
        for (int i = 0; i < 3; ++i)
            ws[i] = g.weight_of(comp[i]);
        std::sort(ws.begin(), ws.end());
        if (ws == std::array<long long, 3>{6, 10, 15}) {
            std::array<int, 3> ids{comp[0], comp[1], comp[2]};
            std::sort(ids.begin(), ids.end());
            return ids;
        }
    }
    return std::nullopt;
}

// Multidegree condition: every vertex subset with weight-gcd delta > 1 of
// size k needs at least k degrees divisible by delta. By triple coprimality
// only sizes 1 and 2 (i.e. vertices and edges) can have delta > 1.
inline bool is_wci_graph(const wp_graph& g, const std::vector<long long>& degrees)
{
    auto count_divisible = [&](long long delta) {
        int c = 0;
        for (long long d : degrees)
            if (d % delta == 0)
                ++c;
        return c;
    };
    for (const auto& v : g.vertices)
        if (count_divisible(v.weight) < 1)
            return false;
    for (auto [a, b] : g.edge_list)
        if (count_divisible(gcd_ll(g.weight_of(a), g.weight_of(b))) < 2)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// bidegree splitting

enum class vertex_role { strong_v1, strong_v2, weak_first, weak_second, delta_member };

struct split_trace_entry {
    int id;
    vertex_role role;
    int partner;  // tau(v) / pair partner, or -1
};

struct graph_split {
    std::vector<int> v1, v2;  // disjoint, cover all ids
    std::vector<split_trace_entry> trace;
};

namespace detail {

inline wp_graph induced_subgraph(const wp_graph& g, const std::vector<int>& ids)
{
    std::vector<wp_vertex> vs;
    for (const auto& v : g.vertices)
        for (int id : ids)
            if (v.id == id)
                vs.push_back(v);
    return graph_from_vertices(std::move(vs));
}

}  // namespace detail

// Splits V into V1, V2 so that each induced subgraph has no weak vertices and
// no {6,10,15} component, lcm divides the matching degree, and the weight sum
// is at most the degree. Follows the constructive rules:
//   - strong vertices outside the {6,10,15} component go to V1 iff their
//     weight divides d1 (so weights dividing both degrees land in V1);
//   - if the {6,10,15} component is present, its smallest-weight vertex (6)
//     goes to V1 and the other two to V2;
//   - a weak vertex with a strictly heavier neighbor tau goes opposite tau;
//   - equal-weight weak pairs are split one per side, lower id to V1.
inline graph_split split_bidegree(const wp_graph& g, long long d1, long long d2)
{
    if (d1 < 1 || d2 < 1)
        throw precondition_error("degrees must be positive");
    if (!is_wci_graph(g, {d1, d2}))
        throw precondition_error("graph does not satisfy the bidegree divisibility condition");

    graph_split out;
    auto delta = contains_delta(g);
    std::vector<int> weak = weak_vertices(g);
    auto is_weak = [&](int id) {
        return std::find(weak.begin(), weak.end(), id) != weak.end();
    };
    auto in_delta = [&](int id) {
        return delta && (id == (*delta)[0] || id == (*delta)[1] || id == (*delta)[2]);
    };

    // strong vertices
    for (const auto& v : g.vertices) {
        if (is_weak(v.id))
            continue;
        if (in_delta(v.id)) {
            bool to_v1 = v.weight == 6;  // deterministic choice of the arbitrary vertex
            (to_v1 ? out.v1 : out.v2).push_back(v.id);
            out.trace.push_back({v.id, vertex_role::delta_member, -1});
            continue;
        }
        if (d1 % v.weight == 0) {
            out.v1.push_back(v.id);
            out.trace.push_back({v.id, vertex_role::strong_v1, -1});
        } else {
            if (d2 % v.weight != 0)
                throw internal_error("strong vertex weight divides neither degree");
            out.v2.push_back(v.id);
            out.trace.push_back({v.id, vertex_role::strong_v2, -1});
        }
    }

    // weak vertices
    std::vector<int> paired;
    for (int id : weak) {
        weak_class c = classify_weak(g, id);
        if (c.type == weak_type::first) {
            bool tau_in_v1 =
                std::find(out.v1.begin(), out.v1.end(), c.partner) != out.v1.end();
            (tau_in_v1 ? out.v2 : out.v1).push_back(id);
            out.trace.push_back({id, vertex_role::weak_first, c.partner});
        } else {
            if (std::find(paired.begin(), paired.end(), id) != paired.end())
                continue;
            paired.push_back(c.partner);
            int lo = std::min(id, c.partner), hi = std::max(id, c.partner);
            out.v1.push_back(lo);
            out.v2.push_back(hi);
            out.trace.push_back({lo, vertex_role::weak_second, hi});
            out.trace.push_back({hi, vertex_role::weak_second, lo});
        }
    }

    std::sort(out.v1.begin(), out.v1.end());
    std::sort(out.v2.begin(), out.v2.end());

    // postconditions (statement-level guarantees; violations are diagnostics)
    const long long ds[2] = {d1, d2};
    const std::vector<int>* sides[2] = {&out.v1, &out.v2};
    for (int s = 0; s < 2; ++s) {
        wp_graph sub = detail::induced_subgraph(g, *sides[s]);
        if (!weak_vertices(sub).empty())
            throw internal_error("split postcondition violated: weak vertex on side " +
                                 std::to_string(s + 1));
        if (contains_delta(sub))
            throw internal_error("split postcondition violated: {6,10,15} component on side " +
                                 std::to_string(s + 1));
        bigint l = sub.empty() ? bigint(1) : graph_lcm(sub);
        bigint sum = sub.empty() ? bigint(0) : graph_sigma(sub);
        if (bigint(ds[s]) % l != 0)
            throw internal_error("split postcondition violated: lcm does not divide degree");
        if (sum > ds[s])
            throw internal_error("split postcondition violated: weight sum exceeds degree");
    }
    return out;
}

// ---------------------------------------------------------------------------
// enumeration of small WP-graphs

struct wp_filters {
    bool connected_only = false;
    bool no_weak_only = false;
};

// Yields every weight multiset (1 <= size <= max_vertices, entries in
// [2, max_weight], every triple coprime) exactly once, as its induced
// WP-graph. The graph is determined by the multiset.
inline void enumerate_wp_graphs(long long max_weight, int max_vertices,
                                wp_filters filters,
                                const std::function<void(const wp_graph&)>& yield)
{
    if (max_weight < 2 || max_vertices < 1)
        throw precondition_error("enumeration bounds must be max_weight >= 2, max_vertices >= 1");
    std::vector<long long> ws;
    auto emit = [&]() {
        std::vector<wp_vertex> vs;
        for (std::size_t i = 0; i < ws.size(); ++i)
            vs.push_back({static_cast<int>(i), ws[i]});
        wp_graph g = detail::graph_from_vertices(std::move(vs));
        if (filters.no_weak_only && !weak_vertices(g).empty())
            return;
        if (filters.connected_only && components(g).size() != 1)
            return;
        yield(g);
    };
    auto extend_ok = [&](long long w) {
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                long long g = gcd_ll(ws[i], ws[j]);
                if (g > 1 && gcd_ll(g, w) > 1)
                    return false;
            }
        return true;
    };
    std::function<void(long long)> rec = [&](long long lo) {
        if (!ws.empty())
            emit();
        if (static_cast<int>(ws.size()) == max_vertices)
            return;
        for (long long w = lo; w <= max_weight; ++w) {
            if (!extend_ok(w))
                continue;
            ws.push_back(w);
            rec(w);
            ws.pop_back();
        }
    };
    rec(2);
}

// ---------------------------------------------------------------------------
// elementary inequalities used by the splitting argument (property-test targets)

// Given positive integers b_i with some b_i > 1 and positive rationals
// t_1 <= ... <= t_n, t with t >= (1/2) sum_{i<n} t_i + t_n, decides whether
// t * prod b_i >= sum t_i b_i.
inline bool check_elementary_i(const std::vector<long long>& b,
                               const std::vector<bigrat>& ts, const bigrat& t)
{
    if (b.empty() || b.size() != ts.size())
        throw precondition_error("b and t lists must be nonempty and equally long");
    bool some_gt1 = false;
    for (long long bi : b) {
        if (bi < 1)
            throw precondition_error("b_i must be positive");
        some_gt1 |= bi > 1;
    }
    if (!some_gt1)
        throw precondition_error("some b_i must exceed 1");
    bigrat half_sum = 0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        half_sum += ts[i];
    half_sum /= 2;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] <= 0)
            throw precondition_error("t_i must be positive");
        if (i + 1 < ts.size() && ts[i] > ts[i + 1])
            throw precondition_error("t_i must be ascending");
    }
    if (t < half_sum + ts.back())
        throw precondition_error("t must be at least half the partial sum plus t_n");
    bigint prod = 1;
    for (long long bi : b)
        prod *= bi;
    bigrat lhs = t * bigrat(prod);
    bigrat rhs = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        rhs += ts[i] * bigrat(b[i]);
    return lhs >= rhs;
}

// Given N >= 4 and pairwise-coprime a_i > 1 with M = |a| >= ceil((N-1)/2),
// decides whether prod a_i >= N.
inline bool check_elementary_ii(long long n, const std::vector<long long>& a)
{
    if (n < 4)
        throw precondition_error("N must be at least 4");
    long long m = static_cast<long long>(a.size());
    if (m < (n - 1 + 1) / 2)
        throw precondition_error("M must be at least ceil((N-1)/2)");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 1)
            throw precondition_error("a_i must exceed 1");
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (gcd_ll(a[i], a[j]) != 1)
                throw precondition_error("a_i must be pairwise coprime");
    }
    bigint prod = 1;
    for (long long ai : a)
        prod *= ai;
    return prod >= n;
}

// ---------------------------------------------------------------------------
// DOT export: vertex label = weight, strong solid, weak dashed; stable
// ordering by (weight, id).

inline std::string to_dot(const wp_graph& g)
{
    std::vector<wp_vertex> order = g.vertices;
    std::sort(order.begin(), order.end(), [](const wp_vertex& a, const wp_vertex& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.id < b.id;
    });
    std::vector<int> weak = weak_vertices(g);
    auto is_weak = [&](int id) {
        return std::find(weak.begin(), weak.end(), id) != weak.end();
    };
    std::string s = "graph wp {\n";
    for (const auto& v : order) {
        s += "  v" + std::to_string(v.id) + " [label=\"" + std::to_string(v.weight) + "\"";
        if (is_weak(v.id))
            s += ", style=dashed";
        s += "];\n";
    }
    std::vector<std::pair<int, int>> es = g.edge_list;
    std::sort(es.begin(), es.end());
    for (auto [a, b] : es)
        s += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    s += "}\n";
    return s;
}

}  // namespace wci
