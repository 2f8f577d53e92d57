#include <catch2/catch_amalgamated.hpp>

#include "wci/nef_partition.hpp"

#include <random>
#include <set>

using namespace wci;

namespace {

// index-level brute force: assign every index to a part, keep the valid
// splittings, collect the distinct signatures
std::set<part_signature> brute_force_signatures(const ci_spec& s, bool allow_empty_s0)
{
    std::set<part_signature> out;
    int n1 = static_cast<int>(s.weights.size());
    std::size_t nparts = s.degrees.size() + 1;
    std::vector<int> assignment(n1, 0);
    while (true) {
        nef_partition p;
        p.parts.assign(nparts, {});
        for (int i = 0; i < n1; ++i)
            p.parts[assignment[i]].push_back(i);
        if (is_valid_partition(s, p) && (allow_empty_s0 || !p.parts[0].empty())) {
            part_signature sig = signature_of(s, p);
            // identify interchangeable parts of equal degree
            for (std::size_t i = 1; i < nparts;) {
                std::size_t j = i;
                while (j < nparts && s.degrees[j - 1] == s.degrees[i - 1])
                    ++j;
                std::sort(sig.begin() + i, sig.begin() + j);
                i = j;
            }
            out.insert(sig);
        }
        int at = 0;
        while (at < n1 && assignment[at] + 1 == static_cast<int>(nparts))
            assignment[at++] = 0;
        if (at == n1)
            break;
        ++assignment[at];
    }
    return out;
}

std::set<part_signature> signatures(const ci_spec& s, const std::vector<nef_partition>& ps)
{
    std::set<part_signature> out;
    for (const auto& p : ps)
        out.insert(signature_of(s, p));
    return out;
}

}  // namespace

TEST_CASE("partition validation and niceness", "[nef]")
{
    ci_spec s = parse_spec("P(1^4,2,3)/6");
    nef_partition printed{{{0, 4}, {1, 2, 3, 5}}};
    CHECK(is_valid_partition(s, printed));
    CHECK(is_nice(printed, s));  // index 0 has weight 1

    nef_partition bad{{{0, 1}, {2, 3, 4, 5}}};  // part sums 1+1+2+3 = 7 != 6
    CHECK_FALSE(is_valid_partition(s, bad));

    // a splitting whose remainder set has no unit is not nice
    ci_spec family = parse_spec("P(1^15,6,10,15)/2,3,5,30");
    auto all = enumerate_all(family);
    REQUIRE_FALSE(all.empty());
    bool any_nice = false;
    for (const auto& p : all)
        any_nice |= is_nice(p, family);
    CHECK_FALSE(any_nice);  // S_0 is always {the weight-6 index} here
}

TEST_CASE("unit count bound", "[nef]")
{
    CHECK(unit_count_bound(parse_spec("P(1^3,2^2,3^2)/6,6")));  // 3 >= 1
    CHECK(unit_count_bound(parse_spec("P(1^7)/2,2")));          // 7 >= 3
    CHECK(unit_count_bound(parse_spec("P(1,1)/")));             // 2 >= 2
}

TEST_CASE("construction for codimension <= 2", "[nef]")
{
    ci_spec row1 = parse_spec("P(1^3,2^2,3^2)/6,6");
    nef_partition p = construct_nice(row1);
    CHECK(render_signature(signature_of(row1, p)) == "{1}|{1,2,3}|{1,2,3}");
    CHECK(is_nice(p, row1));

    ci_spec quintic = parse_spec("P(1^6)/5");
    CHECK(render_signature(signature_of(quintic, construct_nice(quintic))) ==
          "{1}|{1,1,1,1,1}");

    // bidegree (3570,3570) with the triangle-and-tails graph; small unit count
    ci_spec fam = parse_spec("P(1^7009,6,15,70,7,17,17)/3570,3570");
    nef_partition fp = construct_nice(fam);
    CHECK(is_nice(fp, fam));
    std::multiset<long long> s1, s2;
    for (int i : fp.parts[1])
        if (fam.weights[i] > 1)
            s1.insert(fam.weights[i]);
    for (int i : fp.parts[2])
        if (fam.weights[i] > 1)
            s2.insert(fam.weights[i]);
    CHECK(s1 == std::multiset<long long>{6, 15, 17, 70});
    CHECK(s2 == std::multiset<long long>{7, 17});
    for (int i : fp.parts[0])
        CHECK(fam.weights[i] == 1);
}

TEST_CASE("construction preconditions are named individually", "[nef]")
{
    auto message_of = [](const ci_spec& s) {
        try {
            construct_nice(s);
            return std::string("no error");
        } catch (const precondition_error& e) {
            return std::string(e.what());
        }
    };
    CHECK(message_of(parse_spec("P(1^8)/2,2,2")).find("codimension") != std::string::npos);
    CHECK(message_of(parse_spec("P(1^3,2)/6")).find("Fano") != std::string::npos);
    CHECK(message_of(parse_spec("P(1,2,2)/3")).find("well formed") != std::string::npos);
    CHECK(message_of(parse_spec("P(1,1,2)/3")).find("divisibility") != std::string::npos);
    CHECK(message_of(parse_spec("P(1^9,2,4,8)/8,8")).find("triple-coprime") !=
          std::string::npos);
}

TEST_CASE("exhaustive enumeration matches the printed lists", "[nef]")
{
    ci_spec row1 = parse_spec("P(1^3,2^2,3^2)/6,6");
    auto all = enumerate_all(row1);
    REQUIRE(all.size() == 2);
    CHECK(render_signature(signature_of(row1, all[0])) == "{1}|{1,1,2,2}|{3,3}");
    CHECK(render_signature(signature_of(row1, all[1])) == "{1}|{1,2,3}|{1,2,3}");
    CHECK(render_partition(all[0]) == "{0}|{1,2,3,4}|{5,6}");
    CHECK(render_partition(all[1]) == "{0}|{1,3,5}|{2,4,6}");

    // no splitting exists below fifteen unit weights
    CHECK(enumerate_all(parse_spec("P(1^10,6,10,15)/2,3,5,30")).empty());
    CHECK(literal_definition_caveat(parse_spec("P(1^10,6,10,15)/2,3,5,30")).has_value());
    CHECK_FALSE(literal_definition_caveat(parse_spec("P(1^6)/5")).has_value());

    auto line = enumerate_all(parse_spec("P(1,1)/"));
    REQUIRE(line.size() == 1);
    CHECK(render_partition(line[0]) == "{0,1}");
}

TEST_CASE("empty remainder sets appear only on request", "[nef]")
{
    ci_spec cubic_cy = parse_spec("P(1,1,1)/3");  // index 0
    CHECK(enumerate_all(cubic_cy).empty());
    enumerate_options opt;
    opt.allow_empty_s0 = true;
    auto all = enumerate_all(cubic_cy, opt);
    REQUIRE(all.size() == 1);
    CHECK(all[0].parts[0].empty());
    CHECK_FALSE(is_nice(all[0], cubic_cy));
}

TEST_CASE("enumeration agrees with index-level brute force", "[nef]")
{
    std::mt19937 rng(424242);
    int done = 0;
    while (done < 60) {
        int nw = 3 + static_cast<int>(rng() % 4);  // up to 6 indices
        int nd = 1 + static_cast<int>(rng() % 2);
        if (nw - 1 - nd < 1)
            continue;
        std::vector<long long> ws, ds;
        for (int i = 0; i < nw; ++i)
            ws.push_back(1 + rng() % 4);
        for (int i = 0; i < nd; ++i)
            ds.push_back(1 + rng() % 7);
        ci_spec s = ci_spec::of(weight_system::of(ws), ds);
        for (bool allow : {false, true}) {
            enumerate_options opt;
            opt.allow_empty_s0 = allow;
            auto mine = enumerate_all(s, opt);
            // duplicate-free
            CHECK(signatures(s, mine).size() == mine.size());
            // every output is valid, and Fano output has a nonempty remainder
            for (const auto& p : mine) {
                CHECK(is_valid_partition(s, p));
                if (fano_index(s) > 0)
                    CHECK_FALSE(p.parts[0].empty());
            }
            CHECK(signatures(s, mine) == brute_force_signatures(s, allow));
        }
        ++done;
    }
}

TEST_CASE("the constructed partition is always found by enumeration", "[nef]")
{
    // P(1^5,2,3^2)/6,6 splits asymmetrically across two equal degrees, so it
    // exercises the canonical ordering of interchangeable parts
    for (const char* text : {"P(1^3,2^2,3^2)/6,6", "P(1^6)/5", "P(1^4,2,3)/6",
                             "P(1^6,2,3)/4,6", "P(1^5,2,5)/10", "P(1^5,2,3^2)/6,6",
                             "P(1^6,2^2)/4,4"}) {
        ci_spec s = parse_spec(text);
        part_signature sig = signature_of(s, construct_nice(s));
        CHECK(signatures(s, enumerate_all(s)).count(sig) == 1);
    }
}

TEST_CASE("the node budget is a hard error, not truncation", "[nef]")
{
    enumerate_options opt;
    opt.node_budget = 2;
    CHECK_THROWS_AS(enumerate_all(parse_spec("P(1^3,2^2,3^2)/6,6"), opt), resource_error);
}

TEST_CASE("partition text forms parse back", "[nef]")
{
    ci_spec row1 = parse_spec("P(1^3,2^2,3^2)/6,6");
    nef_partition p = parse_partition(row1, "{0}|{1,2,3,4}|{5,6}");
    CHECK(render_partition(p) == "{0}|{1,2,3,4}|{5,6}");

    nef_partition q = parse_partition(row1, "{1}|{1,1,2,2}|{3,3}");
    CHECK(signature_of(row1, q) == signature_of(row1, p));

    CHECK_THROWS_AS(parse_partition(row1, "{0}|{1,2}|{3}"), parse_error);
    CHECK_THROWS_AS(parse_partition(row1, "{0}|{1,2,3,4}|{5,6"), parse_error);
}
