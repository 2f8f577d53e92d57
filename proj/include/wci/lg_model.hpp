#pragma once

// Landau-Ginzburg models from nef partitions: the torus model given by one
// monomial relation and c linear relations with a linear superpotential
// (emitted symbolically), and the Laurent superpotential obtained from a
// nice partition by eliminating one variable per part.

#include "wci/laurent.hpp"
#include "wci/nef_partition.hpp"
#include "wci/numeric.hpp"
#include "wci/weight_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace wci {

// ---------------------------------------------------------------------------
// torus model (symbolic)

struct givental_model {
    ci_spec spec;
    nef_partition partition;
};

inline givental_model make_givental(const ci_spec& s, const nef_partition& p)
{
    validate_partition(s, p);
    return {s, p};
}

inline std::string givental_text(const givental_model& m)
{
    std::string out = "coordinates: x0..x" + std::to_string(m.spec.weights.size() - 1) + "\n";
    out += "relation: ";
    for (std::size_t i = 0; i < m.spec.weights.size(); ++i) {
        if (i)
            out += "*";
        out += "x" + std::to_string(i);
        if (m.spec.weights[i] != 1)
            out += "^" + std::to_string(m.spec.weights[i]);
    }
    out += " = 1\n";
    for (std::size_t k = 1; k < m.partition.parts.size(); ++k) {
        out += "relation: ";
        for (std::size_t i = 0; i < m.partition.parts[k].size(); ++i) {
            if (i)
                out += " + ";
            out += "x" + std::to_string(m.partition.parts[k][i]);
        }
        out += " = 1\n";
    }
    out += "superpotential: ";
    if (m.partition.parts[0].empty()) {
        out += "0";
    } else {
        for (std::size_t i = 0; i < m.partition.parts[0].size(); ++i) {
            if (i)
                out += " + ";
            out += "x" + std::to_string(m.partition.parts[0][i]);
        }
    }
    out += "\n";
    return out;
}

// ---------------------------------------------------------------------------
// variable layout for the Laurent model

// part index -> excluded canonical weight index
using exclusion_map = std::map<int, int>;

struct lg_group {
    int part;                        // 0 = S_0
    char letter;                     // t, x, y, z, u, v, ...
    int excluded;                    // canonical index dropped from this part
    std::vector<int> kept;           // remaining indices, ascending
    std::vector<std::string> names;  // variable names, aligned with kept
};

struct lg_layout {
    std::vector<lg_group> groups;    // S_0 first
    std::vector<std::string> vars;   // all names in canonical order
};

namespace detail {

inline char group_letter(int part)
{
    static const char primary[] = {'t', 'x', 'y', 'z', 'u', 'v'};
    if (part < 6)
        return primary[part];
    // fall back to unused letters for codimension beyond the table range
    static const std::string extra = "abcdefghijklmnopqrsw";
    if (part - 6 < static_cast<int>(extra.size()))
        return extra[part - 6];
    throw precondition_error("too many parts to name variable groups");
}

}  // namespace detail

// Applies the variable-elimination rule: in each S_i (i >= 1) drop a
// maximum-weight index, in S_0 drop a unit-weight index; ties resolve to the
// highest canonical index. Entries of `chosen` override the default. The
// default is a convention fixed to reproduce the published tables; any
// admissible choice gives the same periods (checked by the verifier).
inline lg_layout lg_variables(const ci_spec& s, const nef_partition& p,
                              const exclusion_map& chosen = {})
{
    if (!is_nice(p, s))
        throw precondition_error("the Laurent model needs a nice partition");
    for (const auto& [part, idx] : chosen) {
        if (part < 0 || part >= static_cast<int>(p.parts.size()))
            throw precondition_error("exclusion names a part that does not exist");
        const auto& members = p.parts[part];
        if (std::find(members.begin(), members.end(), idx) == members.end())
            throw precondition_error("exclusion index " + std::to_string(idx) +
                                     " is not in part " + std::to_string(part));
        if (part == 0 && s.weights[idx] != 1)
            throw precondition_error("the index dropped from S_0 must have weight 1");
    }

    lg_layout out;
    for (int part = 0; part < static_cast<int>(p.parts.size()); ++part) {
        lg_group g;
        g.part = part;
        g.letter = detail::group_letter(part);
        const auto& members = p.parts[part];  // ascending; weights nondecreasing
        auto it = chosen.find(part);
        if (it != chosen.end()) {
            g.excluded = it->second;
        } else if (part == 0) {
            g.excluded = -1;  // highest-index unit
            for (int idx : members)
                if (s.weights[idx] == 1)
                    g.excluded = idx;
        } else {
            g.excluded = members.back();  // max weight, highest index
        }
        for (int idx : members)
            if (idx != g.excluded)
                g.kept.push_back(idx);
        for (std::size_t k = 0; k < g.kept.size(); ++k)
            g.names.push_back(std::string(1, g.letter) + std::to_string(k + 1));
        out.groups.push_back(std::move(g));
    }
    for (const auto& g : out.groups)
        for (const auto& n : g.names)
            out.vars.push_back(n);
    std::sort(out.vars.begin(), out.vars.end(), detail::var_less);
    return out;
}

// The Laurent superpotential: product over i >= 1 of
// (x_{i,1}+...+x_{i,r_i-1}+1)^{d_i} divided by the product of all kept
// variables raised to their weights, plus the sum of the kept S_0 variables.
inline laurent_poly weak_lg(const ci_spec& s, const nef_partition& p,
                            const exclusion_map& chosen = {})
{
    lg_layout lay = lg_variables(s, p, chosen);
    const std::size_t nv = lay.vars.size();
    auto var_pos = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::find(lay.vars.begin(), lay.vars.end(), name) - lay.vars.begin());
    };

    laurent_poly f = lp_const(1, lay.vars);
    for (const auto& g : lay.groups) {
        if (g.part == 0)
            continue;
        laurent_poly base;
        base.vars = lay.vars;
        base.terms.emplace(std::vector<int>(nv, 0), bigint(1));
        for (const auto& n : g.names) {
            std::vector<int> e(nv, 0);
            e[var_pos(n)] = 1;
            base.terms.emplace(std::move(e), bigint(1));
        }
        f = lp_mul(f, lp_pow(base, s.degrees[g.part - 1]));
    }
    // divide by the product of kept variables with their weights
    {
        laurent_poly inv;
        inv.vars = lay.vars;
        std::vector<int> e(nv, 0);
        for (const auto& g : lay.groups)
            for (std::size_t k = 0; k < g.kept.size(); ++k)
                e[var_pos(g.names[k])] -= static_cast<int>(s.weights[g.kept[k]]);
        inv.terms.emplace(std::move(e), bigint(1));
        f = lp_mul(f, inv);
    }
    // additive tail: the kept S_0 variables
    for (const auto& g : lay.groups) {
        if (g.part != 0)
            continue;
        for (const auto& n : g.names) {
            std::vector<int> e(nv, 0);
            e[var_pos(n)] = 1;
            f.add_term(e, bigint(1));
        }
    }
    return f;
}

// Paper-style rendering: power-product numerator over a parenthesized
// monomial, additive tail appended, e.g.
// (x1+x2+1)^6/(x1x2^2t1t2)+t1+t2
inline std::string weak_lg_fraction_text(const ci_spec& s, const nef_partition& p,
                                         const exclusion_map& chosen = {})
{
    lg_layout lay = lg_variables(s, p, chosen);
    std::string num;
    for (const auto& g : lay.groups) {
        if (g.part == 0 || g.names.empty())
            continue;
        std::string sum;
        for (const auto& n : g.names)
            sum += n + "+";
        sum += "1";
        num += "(" + sum + ")";
        long long d = s.degrees[g.part - 1];
        if (d != 1)
            num += "^" + std::to_string(d);
    }
    if (num.empty())
        num = "1";
    std::string den;
    for (const auto& g : lay.groups) {
        if (g.part == 0)
            continue;
        for (std::size_t k = 0; k < g.kept.size(); ++k) {
            den += g.names[k];
            if (s.weights[g.kept[k]] != 1)
                den += "^" + std::to_string(s.weights[g.kept[k]]);
        }
    }
    for (const auto& g : lay.groups) {
        if (g.part != 0)
            continue;
        for (std::size_t k = 0; k < g.kept.size(); ++k) {
            den += g.names[k];
            if (s.weights[g.kept[k]] != 1)
                den += "^" + std::to_string(s.weights[g.kept[k]]);
        }
    }
    std::string out = den.empty() ? num : num + "/(" + den + ")";
    for (const auto& g : lay.groups)
        if (g.part == 0)
            for (const auto& n : g.names)
                out += "+" + n;
    return out;
}

// All elimination choices that can give distinct polynomials: one per
// distinct excluded weight per part (equal-weight choices are relabelings of
// one another). Ties resolve to the highest canonical index, so the default
// rule's choice is always present.
inline std::vector<exclusion_map> distinct_exclusion_choices(const ci_spec& s,
                                                             const nef_partition& p)
{
    validate_partition(s, p);
    std::vector<std::vector<int>> options;  // representative excluded index per part
    for (std::size_t part = 0; part < p.parts.size(); ++part) {
        std::vector<int> reps;
        const auto& members = p.parts[part];
        for (int idx : members) {
            if (part == 0 && s.weights[idx] != 1)
                continue;  // S_0 may only drop a unit
            // highest index with this weight
            int rep = idx;
            for (int j : members)
                if (s.weights[j] == s.weights[idx])
                    rep = std::max(rep, j);
            if (std::find(reps.begin(), reps.end(), rep) == reps.end())
                reps.push_back(rep);
        }
        options.push_back(std::move(reps));
    }
    std::vector<exclusion_map> out;
    exclusion_map current;
    std::function<void(std::size_t)> rec = [&](std::size_t part) {
        if (part == options.size()) {
            out.push_back(current);
            return;
        }
        for (int rep : options[part]) {
            current[static_cast<int>(part)] = rep;
            rec(part + 1);
        }
        current.erase(static_cast<int>(part));
    };
    rec(0);
    return out;
}

}  // namespace wci
