#pragma once

// The embedded catalog of fourfold and fivefold Fano weighted complete
// intersections (not intersections with linear cones), with their nef
// partitions and Laurent models as printed in the source tables, plus a
// verifier that recomputes every column and a bounded candidate enumerator.
// Two known misprints ship as first-class errata records and are never
// silently corrected.

#include "wci/lg_model.hpp"
#include "wci/nef_partition.hpp"
#include "wci/numeric.hpp"
#include "wci/period.hpp"
#include "wci/weight_system.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <wci/catalog_data.hpp>

namespace wci {

struct erratum {
    std::string field;      // e.g. "lg[0]"
    std::string printed;    // value as printed
    std::string corrected;  // value the construction forces
    std::string note;
};

struct catalog_entry {
    int table = 0;
    int row = 0;
    ci_spec spec;
    std::vector<nef_partition> partitions;  // as printed
    std::vector<std::string> lg_strings;    // verbatim
    std::vector<erratum> errata;
};

// the lg string to verify against: the erratum-corrected form if one exists
inline std::string corrected_lg_string(const catalog_entry& e, std::size_t i)
{
    std::string field = "lg[" + std::to_string(i) + "]";
    for (const auto& er : e.errata)
        if (er.field == field)
            return er.corrected;
    return e.lg_strings[i];
}

inline std::vector<catalog_entry> load_catalog_from_string(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("catalog data is not valid JSON: ") + ex.what(), 0);
    }
    const std::string checksum = j.at("checksum").get<std::string>();
    const std::string payload = j.at("entries").dump();
    if (to_hex(fnv1a64(payload)) != checksum)
        throw internal_error("catalog data integrity failure: checksum mismatch");

    std::vector<catalog_entry> out;
    for (const auto& je : j.at("entries")) {
        catalog_entry e;
        e.table = je.at("table").get<int>();
        e.row = je.at("row").get<int>();
        std::string notation = je.at("space").get<std::string>() + "/";
        const auto& degs = je.at("degrees");
        for (std::size_t i = 0; i < degs.size(); ++i)
            notation += (i ? "," : "") + std::to_string(degs[i].get<long long>());
        e.spec = parse_spec(notation);
        for (const auto& jp : je.at("partitions")) {
            nef_partition p;
            for (const auto& part : jp) {
                std::vector<int> ids;
                for (const auto& v : part)
                    ids.push_back(v.get<int>());
                std::sort(ids.begin(), ids.end());
                p.parts.push_back(std::move(ids));
            }
            e.partitions.push_back(std::move(p));
        }
        for (const auto& jl : je.at("lg"))
            e.lg_strings.push_back(jl.get<std::string>());
        if (je.contains("errata"))
            for (const auto& jer : je.at("errata"))
                e.errata.push_back({jer.at("field").get<std::string>(),
                                    jer.at("printed").get<std::string>(),
                                    jer.at("corrected").get<std::string>(),
                                    jer.at("note").get<std::string>()});
        if (e.partitions.size() != e.lg_strings.size())
            throw internal_error("catalog row has mismatched partition and lg counts");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<catalog_entry> load_catalog()
{
    return load_catalog_from_string(detail::catalog_json());
}

inline std::vector<catalog_entry> load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw precondition_error("cannot open catalog file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog_from_string(ss.str());
}

// ---------------------------------------------------------------------------
// verification

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;  // a FAIL always carries a concrete witness
};

struct verification_report {
    int table = 0;
    int row = 0;
    std::vector<check_result> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// Recomputes every column of a catalog row: the validity flags, that each
// printed partition is valid and found by the enumerator, that the Laurent
// model regenerates the (errata-corrected) printed string up to
// group-preserving relabeling, and the period cross-checks up to K
// (strategy agreement, elimination-choice independence, cross-partition
// equality, series-oracle agreement, vanishing off multiples of the index).
// K = 0 skips the period checks. Failures become report entries, not
// exceptions.
inline verification_report verify_entry(const catalog_entry& e, int K)
{
    verification_report rep{e.table, e.row, {}};
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, pass ? "" : detail});
    };

    analysis_report ar = analyze(e.spec);
    add("analysis-flags",
        ar.well_formed_space && ar.divisibility_ok && ar.triple_coprime &&
            !ar.linear_cone && ar.fano_index >= 1,
        "flags: wf=" + std::to_string(ar.well_formed_space) +
            " div=" + std::to_string(ar.divisibility_ok) +
            " tc=" + std::to_string(ar.triple_coprime) +
            " lc=" + std::to_string(ar.linear_cone) +
            " I=" + std::to_string(ar.fano_index));
    add("unit-count-bound", unit_count_bound(e.spec),
        "units=" + std::to_string(ar.unit_count) + " I=" + std::to_string(ar.fano_index));

    // printed partitions: valid, and found by the enumerator
    std::vector<part_signature> enumerated;
    try {
        for (const auto& p : enumerate_all(e.spec))
            enumerated.push_back(signature_of(e.spec, p));
    } catch (const std::exception& ex) {
        add("partitions-enumerated", false, ex.what());
    }
    for (std::size_t i = 0; i < e.partitions.size(); ++i) {
        const auto& p = e.partitions[i];
        bool valid = is_valid_partition(e.spec, p);
        add("partition-" + std::to_string(i) + "-valid", valid,
            render_partition(p) + " violates the splitting constraints");
        if (!valid)
            continue;
        part_signature sig = signature_of(e.spec, p);
        bool found =
            std::find(enumerated.begin(), enumerated.end(), sig) != enumerated.end();
        add("partition-" + std::to_string(i) + "-enumerated", found,
            "signature " + render_signature(sig) + " not produced by enumeration");
        add("partition-" + std::to_string(i) + "-nice", is_nice(p, e.spec),
            "printed partition is not nice");
    }

    // Laurent model regeneration against (errata-corrected) printed strings
    for (std::size_t i = 0; i < e.partitions.size(); ++i) {
        std::string target = corrected_lg_string(e, i);
        bool has_erratum = target != e.lg_strings[i];
        try {
            laurent_poly mine = weak_lg(e.spec, e.partitions[i]);
            laurent_poly printed = parse_laurent(target);
            add("lg-" + std::to_string(i) + "-match", equal_up_to_relabel(mine, printed),
                "generated " + weak_lg_fraction_text(e.spec, e.partitions[i]) +
                    " does not match " + target);
            if (has_erratum) {
                bool printed_differs = true;
                try {
                    printed_differs =
                        !equal_up_to_relabel(mine, parse_laurent(e.lg_strings[i]));
                } catch (const std::exception&) {
                    // a printed string that does not even parse still counts
                }
                add("lg-" + std::to_string(i) + "-erratum-surfaced", printed_differs,
                    "erratum listed but the printed string already matches");
            }
        } catch (const std::exception& ex) {
            add("lg-" + std::to_string(i) + "-match", false, ex.what());
        }
    }

    if (K > 0) {
        periods oracle;
        bool have_oracle = false;
        try {
            oracle = iseries_oracle(e.spec, K);
            have_oracle = true;
        } catch (const std::exception& ex) {
            add("series-oracle", false, ex.what());
        }
        long long index = fano_index(e.spec);
        std::vector<periods> per_partition;
        for (std::size_t i = 0; i < e.partitions.size(); ++i) {
            try {
                // all elimination choices must give identical periods
                auto choices = distinct_exclusion_choices(e.spec, e.partitions[i]);
                periods first;
                bool agree = true;
                std::string witness;
                for (std::size_t ci = 0; ci < choices.size(); ++ci) {
                    laurent_poly f = weak_lg(e.spec, e.partitions[i], choices[ci]);
                    periods ps = period_sequence(f, K);
                    if (ci == 0) {
                        first = ps;
                    } else if (ps != first) {
                        agree = false;
                        witness = "choice " + std::to_string(ci) + " diverges";
                        break;
                    }
                }
                add("periods-" + std::to_string(i) + "-exclusion-independent", agree, witness);
                if (have_oracle) {
                    bool match = first == oracle;
                    std::string detail;
                    if (!match)
                        for (int k = 0; k <= K; ++k)
                            if (first[k] != oracle[k]) {
                                detail = "p_" + std::to_string(k) + " = " + first[k].str() +
                                         " but series gives " + oracle[k].str();
                                break;
                            }
                    add("periods-" + std::to_string(i) + "-oracle", match, detail);
                }
                bool vanish = true;
                for (int k = 1; k <= K; ++k)
                    if (index > 0 && k % index != 0 && first[k] != 0)
                        vanish = false;
                add("periods-" + std::to_string(i) + "-vanishing", vanish,
                    "nonzero term off the index lattice");
                per_partition.push_back(std::move(first));
            } catch (const std::exception& ex) {
                add("periods-" + std::to_string(i), false, ex.what());
            }
        }
        if (per_partition.size() == e.partitions.size() && per_partition.size() > 1) {
            bool equal = true;
            for (std::size_t i = 1; i < per_partition.size(); ++i)
                if (per_partition[i] != per_partition[0])
                    equal = false;
            add("periods-cross-partition", equal,
                "different printed partitions give different period sequences");
        }
    }
    return rep;
}

inline std::string report_human(const std::vector<verification_report>& reports)
{
    std::string out;
    int fails = 0;
    for (const auto& r : reports) {
        std::string line = "table " + std::to_string(r.table) + " row " +
                           std::to_string(r.row) + ": ";
        if (r.all_pass()) {
            line += "ok (" + std::to_string(r.checks.size()) + " checks)";
        } else {
            for (const auto& c : r.checks)
                if (!c.pass) {
                    line += "\n  FAIL " + c.name + ": " + c.detail;
                    ++fails;
                }
        }
        out += line + "\n";
    }
    out += fails == 0 ? "all rows verified\n"
                      : std::to_string(fails) + " check(s) failed\n";
    return out;
}

inline std::string report_json(const std::vector<verification_report>& reports)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json je;
        je["table"] = r.table;
        je["row"] = r.row;
        je["pass"] = r.all_pass();
        je["checks"] = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.pass)
                jc["detail"] = c.detail;
            je["checks"].push_back(jc);
        }
        j.push_back(je);
    }
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// bounded candidate enumeration: all specs of the given dimension with
// codimension <= max_codim, weights <= weight_bound, degrees <= degree_bound
// that are well formed, Fano, degree-divisible, triple-coprime and not
// linear cones. Necessary conditions only.

inline std::vector<ci_spec> enumerate_candidates(int dim, int max_codim,
                                                 long long weight_bound,
                                                 long long degree_bound,
                                                 long long combo_budget = 50000000)
{
    if (dim < 1 || max_codim < 0 || weight_bound < 1 || degree_bound < 1)
        throw precondition_error("candidate bounds must be positive");
    std::vector<ci_spec> out;
    for (int c = 0; c <= max_codim; ++c) {
        int nw = dim + c + 1;
        // raw multiset counts, to guard against bound explosion
        auto choose = [](long long n, long long k) {
            long long r = 1;
            for (long long i = 1; i <= k; ++i) {
                r = r * (n - k + i) / i;
                if (r > 1000000000000LL)
                    return r;
            }
            return r;
        };
        long long combos = choose(weight_bound + nw - 1, nw);
        if (c > 0)
            combos *= choose(degree_bound + c - 1, c);
        if (combos > combo_budget)
            throw resource_error("candidate enumeration bounds are too large: " +
                                 std::to_string(combos) + " raw combinations");

        std::vector<long long> ws(nw), ds(c);
        std::function<void(int, long long)> deg_rec = [&](int di, long long lo) {
            if (di == c) {
                ci_spec s = ci_spec::of(weight_system{ws}, ds);
                if (fano_index(s) < 1)
                    return;
                if (is_linear_cone(s))
                    return;
                if (!triple_coprime(s.weights))
                    return;
                if (!is_well_formed_space(s.weights))
                    return;
                if (!divisibility_condition(s))
                    return;
                out.push_back(std::move(s));
                return;
            }
            for (long long d = lo; d <= degree_bound; ++d) {
                ds[di] = d;
                deg_rec(di + 1, d);
            }
        };
        std::function<void(int, long long)> w_rec = [&](int wi, long long lo) {
            if (wi == nw) {
                deg_rec(0, 1);
                return;
            }
            for (long long w = lo; w <= weight_bound; ++w) {
                ws[wi] = w;
                w_rec(wi + 1, w);
            }
        };
        w_rec(0, 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace wci
