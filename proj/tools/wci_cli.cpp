// Command-line front end: every pipeline stage behind a subcommand with
// stable, scriptable output. Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 resource budget exceeded.

#include <CLI11.hpp>

#include "wci/wci.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

int run_analyze(const std::string& spec_text, const std::string&)
{
    wci::ci_spec s = wci::parse_spec(spec_text);
    wci::analysis_report r = wci::analyze(s);
    std::cout << "spec = " << wci::render_spec(s) << "\n"
              << "well_formed_space = " << bool_str(r.well_formed_space) << "\n"
              << "divisibility_ok = " << bool_str(r.divisibility_ok) << "\n"
              << "triple_coprime = " << bool_str(r.triple_coprime) << "\n"
              << "linear_cone = " << bool_str(r.linear_cone) << "\n"
              << "fano_index = " << r.fano_index << "\n"
              << "dimension = " << r.dimension << "\n"
              << "unit_count = " << r.unit_count << "\n";
    return 0;
}

int run_nef(const std::string& spec_text, bool construct, bool all, bool allow_empty_s0,
            const std::string& format)
{
    wci::ci_spec s = wci::parse_spec(spec_text);
    if (auto note = wci::literal_definition_caveat(s))
        std::cerr << *note << "\n";
    if (construct) {
        wci::nef_partition p = wci::construct_nice(s);
        std::cout << wci::render_partition(p) << "\n";
        if (format != "machine")
            std::cout << "signature: " << wci::render_signature(wci::signature_of(s, p))
                      << "\n";
        return 0;
    }
    if (!all)
        throw wci::precondition_error("pass --construct or --all");
    wci::enumerate_options opt;
    opt.allow_empty_s0 = allow_empty_s0;
    auto ps = wci::enumerate_all(s, opt);
    for (const auto& p : ps) {
        std::cout << wci::render_partition(p);
        if (format != "machine")
            std::cout << "  " << wci::render_signature(wci::signature_of(s, p));
        std::cout << "\n";
    }
    if (format != "machine")
        std::cout << ps.size() << " partition(s)\n";
    return 0;
}

wci::exclusion_map parse_exclusions(const wci::ci_spec& s, const wci::nef_partition& p,
                                    const std::string& text)
{
    // comma-separated canonical indices, each excluded from the part containing it
    wci::exclusion_map m;
    if (text.empty())
        return m;
    std::size_t at = 0;
    while (at < text.size()) {
        std::size_t comma = text.find(',', at);
        std::string tok = text.substr(at, comma == std::string::npos ? comma : comma - at);
        int idx = std::stoi(tok);
        bool found = false;
        for (std::size_t part = 0; part < p.parts.size(); ++part)
            for (int j : p.parts[part])
                if (j == idx) {
                    m[static_cast<int>(part)] = idx;
                    found = true;
                }
        if (!found)
            throw wci::precondition_error("excluded index " + tok + " is in no part");
        if (comma == std::string::npos)
            break;
        at = comma + 1;
    }
    (void)s;
    return m;
}

int run_lg(const std::string& spec_text, const std::string& partition_text,
           const std::string& exclude, bool givental, const std::string& format)
{
    wci::ci_spec s = wci::parse_spec(spec_text);
    wci::nef_partition p = partition_text.empty() ? wci::construct_nice(s)
                                                  : wci::parse_partition(s, partition_text);
    if (givental) {
        std::cout << wci::givental_text(wci::make_givental(s, p));
        return 0;
    }
    wci::exclusion_map ex = parse_exclusions(s, p, exclude);
    if (format == "machine")
        std::cout << wci::canonical_text(wci::weak_lg(s, p, ex)) << "\n";
    else
        std::cout << wci::weak_lg_fraction_text(s, p, ex) << "\n";
    return 0;
}

int run_period(const std::string& spec_text, const std::string& partition_text,
               const std::string& laurent_text, const std::string& exclude, int k)
{
    wci::laurent_poly f;
    if (!laurent_text.empty()) {
        f = wci::parse_laurent(laurent_text);
    } else {
        wci::ci_spec s = wci::parse_spec(spec_text);
        wci::nef_partition p = partition_text.empty()
                                   ? wci::construct_nice(s)
                                   : wci::parse_partition(s, partition_text);
        f = wci::weak_lg(s, p, parse_exclusions(s, p, exclude));
    }
    wci::periods ps = wci::period_sequence(f, k);
    for (std::size_t i = 0; i < ps.size(); ++i)
        std::cout << (i ? ", " : "") << ps[i].str();
    std::cout << "\n";
    return 0;
}

int run_graph(const std::string& spec_text, bool dot, const std::string& format)
{
    wci::ci_spec s = wci::parse_spec(spec_text);
    wci::wp_graph g = wci::build_wp_graph(s.weights);
    if (dot || format == "machine") {
        std::cout << wci::to_dot(g);
        return 0;
    }
    std::cout << g.vertices.size() << " vertices, " << g.edge_list.size() << " edges\n";
    for (const auto& v : g.vertices)
        std::cout << "  v" << v.id << " weight " << v.weight << "\n";
    for (auto [a, b] : g.edge_list)
        std::cout << "  edge " << g.weight_of(a) << " -- " << g.weight_of(b) << "\n";
    if (!g.empty()) {
        std::cout << "sigma = " << wci::graph_sigma(g).str()
                  << ", lcm = " << wci::graph_lcm(g).str() << "\n";
        auto weak = wci::weak_vertices(g);
        std::cout << "weak vertices:";
        for (int id : weak)
            std::cout << " " << g.weight_of(id);
        std::cout << (weak.empty() ? " none" : "") << "\n";
    }
    return 0;
}

int run_catalog(bool verify, int k, const std::string& row_filter,
                const std::string& file, const std::string& out,
                const std::string& checksum_file, const std::string& format)
{
    if (!checksum_file.empty()) {
        std::ifstream in(checksum_file);
        if (!in)
            throw wci::precondition_error("cannot open " + checksum_file);
        std::stringstream ss;
        ss << in.rdbuf();
        auto j = nlohmann::json::parse(ss.str());
        std::cout << wci::to_hex(wci::fnv1a64(j.at("entries").dump())) << "\n";
        return 0;
    }
    auto entries = file.empty() ? wci::load_catalog() : wci::load_catalog_file(file);
    int want_table = 0, want_row = 0;
    if (!row_filter.empty()) {
        auto colon = row_filter.find(':');
        if (colon == std::string::npos)
            throw wci::precondition_error("--row expects TABLE:ROW");
        want_table = std::stoi(row_filter.substr(0, colon));
        want_row = std::stoi(row_filter.substr(colon + 1));
    }
    if (!verify) {
        for (const auto& e : entries) {
            if (want_table && (e.table != want_table || e.row != want_row))
                continue;
            std::cout << "table " << e.table << " row " << e.row << ": "
                      << wci::render_spec(e.spec) << ", " << e.partitions.size()
                      << " partition(s)";
            if (!e.errata.empty())
                std::cout << ", " << e.errata.size() << " erratum(a)";
            std::cout << "\n";
        }
        return 0;
    }
    std::vector<wci::verification_report> reports;
    for (const auto& e : entries) {
        if (want_table && (e.table != want_table || e.row != want_row))
            continue;
        reports.push_back(wci::verify_entry(e, k));
    }
    std::string text = format == "machine" ? wci::report_json(reports)
                                           : wci::report_human(reports);
    if (!out.empty()) {
        std::ofstream os(out);
        os << text;
    } else {
        std::cout << text;
    }
    for (const auto& r : reports)
        if (!r.all_pass())
            return 1;
    return 0;
}

int run_sweep(long long max_weight, int max_vertices, bool disconnected, bool skip_delta)
{
    wci::wp_filters filters;
    filters.connected_only = !disconnected;
    filters.no_weak_only = true;
    std::vector<std::string> exceptions;
    bool anomaly = false;
    wci::enumerate_wp_graphs(max_weight, max_vertices, filters, [&](const wci::wp_graph& g) {
        if (skip_delta && wci::contains_delta(g))
            return;
        wci::bigint l = wci::graph_lcm(g), s = wci::graph_sigma(g);
        if (l < s) {
            std::string ws = "{";
            for (std::size_t i = 0; i < g.vertices.size(); ++i)
                ws += (i ? "," : "") + std::to_string(g.vertices[i].weight);
            ws += "}";
            exceptions.push_back(ws);
            if (l < s - 1)
                anomaly = true;
        }
    });
    std::cout << exceptions.size() << " exceptional graph"
              << (exceptions.size() == 1 ? "" : "s");
    for (std::size_t i = 0; i < exceptions.size(); ++i)
        std::cout << (i ? ", " : ": ") << exceptions[i];
    std::cout << "\n";
    return anomaly ? 1 : 0;
}

int run_candidates(int dim, int codim, const std::string& bounds)
{
    auto comma = bounds.find(',');
    if (comma == std::string::npos)
        throw wci::precondition_error("--bounds expects WEIGHT,DEGREE");
    long long wb = std::stoll(bounds.substr(0, comma));
    long long db = std::stoll(bounds.substr(comma + 1));
    auto specs = wci::enumerate_candidates(dim, codim, wb, db);
    for (const auto& s : specs)
        std::cout << wci::render_spec(s) << "\n";
    std::cerr << specs.size() << " candidate(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"combinatorics of Fano weighted complete intersections and their "
                 "Landau-Ginzburg models"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));

    std::string spec_text, partition_text, laurent_text, exclude, row_filter, file, out,
        bounds, checksum_file;
    bool construct = false, all = false, allow_empty_s0 = false, givental = false,
         dot = false, verify = false, disconnected = false, skip_delta = false;
    int k = 6, dim = 4, codim = 2;
    long long max_weight = 50;
    int max_vertices = 4;

    auto* analyze = app.add_subcommand("analyze", "validity checks and numerics");
    analyze->add_option("spec", spec_text)->required();

    auto* nef = app.add_subcommand("nef", "construct or enumerate nef partitions");
    nef->add_option("spec", spec_text)->required();
    nef->add_flag("--construct", construct, "run the codimension <= 2 construction");
    nef->add_flag("--all", all, "exhaustive enumeration");
    nef->add_flag("--allow-empty-s0", allow_empty_s0);

    auto* lg = app.add_subcommand("lg", "Laurent superpotential from a nice partition");
    lg->add_option("spec", spec_text)->required();
    lg->add_option("partition", partition_text, "index or signature form; default: constructed");
    lg->add_option("--exclude", exclude, "comma-separated indices to drop, one per part");
    lg->add_flag("--givental", givental, "print the torus model instead");

    auto* period = app.add_subcommand("period", "constant terms of powers");
    period->add_option("spec", spec_text);
    period->add_option("partition", partition_text);
    period->add_option("--laurent", laurent_text, "use this polynomial directly");
    period->add_option("--exclude", exclude);
    period->add_option("--k", k, "highest power (default 6)");

    auto* graph = app.add_subcommand("graph", "weight graph of the space");
    graph->add_option("spec", spec_text)->required();
    graph->add_flag("--dot", dot, "DOT export");

    auto* catalog = app.add_subcommand("catalog", "embedded table data and verifier");
    catalog->add_flag("--verify", verify, "recompute every column");
    catalog->add_option("--k", k, "period cross-check depth (default 6)");
    catalog->add_option("--row", row_filter, "restrict to TABLE:ROW");
    catalog->add_option("--file", file, "load this catalog file instead of the embedded one");
    catalog->add_option("--out", out, "write the report here");
    catalog->add_option("--checksum-file", checksum_file,
                        "print the content checksum of a catalog file and exit");

    auto* sweep = app.add_subcommand("sweep", "exhaustive lcm vs sigma sweep over weight graphs");
    sweep->add_option("--max-weight", max_weight)->required();
    sweep->add_option("--max-vertices", max_vertices)->required();
    sweep->add_flag("--disconnected", disconnected, "include disconnected graphs");
    sweep->add_flag("--skip-delta", skip_delta, "skip graphs containing a {6,10,15} component");

    auto* candidates = app.add_subcommand("candidates", "bounded necessary-condition search");
    candidates->add_option("--dim", dim)->required();
    candidates->add_option("--codim", codim)->required();
    candidates->add_option("--bounds", bounds, "WEIGHT,DEGREE")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return run_analyze(spec_text, format);
        if (nef->parsed())
            return run_nef(spec_text, construct, all, allow_empty_s0, format);
        if (lg->parsed())
            return run_lg(spec_text, partition_text, exclude, givental, format);
        if (period->parsed())
            return run_period(spec_text, partition_text, laurent_text, exclude, k);
        if (graph->parsed())
            return run_graph(spec_text, dot, format);
        if (catalog->parsed())
            return run_catalog(verify, k, row_filter, file, out, checksum_file, format);
        if (sweep->parsed())
            return run_sweep(max_weight, max_vertices, disconnected, skip_delta);
        if (candidates->parsed())
            return run_candidates(dim, codim, bounds);
    } catch (const wci::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const wci::precondition_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const wci::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const wci::internal_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
