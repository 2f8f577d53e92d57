#include <catch2/catch_amalgamated.hpp>

#include "wci/lg_model.hpp"

using namespace wci;

TEST_CASE("torus model text", "[lg]")
{
    ci_spec quintic = parse_spec("P(1^6)/5");
    nef_partition p{{{0}, {1, 2, 3, 4, 5}}};
    std::string text = givental_text(make_givental(quintic, p));
    CHECK(text.find("relation: x0*x1*x2*x3*x4*x5 = 1") != std::string::npos);
    CHECK(text.find("relation: x1 + x2 + x3 + x4 + x5 = 1") != std::string::npos);
    CHECK(text.find("superpotential: x0") != std::string::npos);

    // codimension 0: no linear relations, superpotential sums everything
    ci_spec line = parse_spec("P(1,1)/");
    std::string line_text = givental_text(make_givental(line, nef_partition{{{0, 1}}}));
    CHECK(line_text.find("superpotential: x0 + x1") != std::string::npos);
    CHECK(line_text.find("relation: x0 + ") == std::string::npos);

    ci_spec row1 = parse_spec("P(1^3,2^2,3^2)/6,6");
    std::string t1 = givental_text(
        make_givental(row1, nef_partition{{{0}, {1, 2, 3, 4}, {5, 6}}}));
    CHECK(t1.find("relation: x0*x1*x2*x3^2*x4^2*x5^3*x6^3 = 1") != std::string::npos);
    CHECK(t1.find("relation: x1 + x2 + x3 + x4 = 1") != std::string::npos);
    CHECK(t1.find("relation: x5 + x6 = 1") != std::string::npos);

    CHECK_THROWS_AS(make_givental(quintic, nef_partition{{{0, 1}, {2, 3, 4, 5}}}),
                    precondition_error);
}

TEST_CASE("Laurent models match the printed strings", "[lg]")
{
    ci_spec row11 = parse_spec("P(1^7)/3,3");
    laurent_poly f = weak_lg(row11, nef_partition{{{0}, {1, 2, 3}, {4, 5, 6}}});
    CHECK(equal_up_to_relabel(f, parse_laurent("(x1+x2+1)^3(y1+y2+1)^3/(x1x2y1y2)")));

    ci_spec row18 = parse_spec("P(1^4,2,3)/6");
    laurent_poly g = weak_lg(row18, nef_partition{{{0, 4}, {1, 2, 3, 5}}});
    CHECK(equal_up_to_relabel(g, parse_laurent("(x1+x2+x3+1)^6/(x1x2x3t1^2)+t1")));

    // the anticanonical model of the line lives in one variable
    ci_spec line = parse_spec("P(1,1)/");
    laurent_poly h = weak_lg(line, nef_partition{{{0, 1}}});
    CHECK(canonical_text(h) == "1/t1 + t1");
}

TEST_CASE("fraction rendering reproduces the table style", "[lg]")
{
    ci_spec row1 = parse_spec("P(1^3,2^2,3^2)/6,6");
    CHECK(weak_lg_fraction_text(row1, nef_partition{{{0}, {1, 2, 3, 4}, {5, 6}}}) ==
          "(x1+x2+x3+1)^6(y1+1)^6/(x1x2x3^2y1^3)");
    CHECK(weak_lg_fraction_text(row1, nef_partition{{{0}, {1, 3, 5}, {2, 4, 6}}}) ==
          "(x1+x2+1)^6(y1+y2+1)^6/(x1x2^2y1y2^2)");

    ci_spec row22 = parse_spec("P(1^6)/2");
    CHECK(weak_lg_fraction_text(row22, nef_partition{{{0, 1, 2, 3}, {4, 5}}}) ==
          "(x1+1)^2/(x1t1t2t3)+t1+t2+t3");
}

TEST_CASE("the default elimination drops the heaviest index", "[lg]")
{
    // S_1 = (1,1,1,2,5): dropping the 5 keeps x4 with weight 2
    ci_spec row2 = parse_spec("P(1^4,2,5)/10");
    CHECK(weak_lg_fraction_text(row2, nef_partition{{{0}, {1, 2, 3, 4, 5}}}) ==
          "(x1+x2+x3+x4+1)^10/(x1x2x3x4^2)");

    // overriding the choice changes the kept weights
    exclusion_map drop_two{{1, 4}};  // drop the weight-2 index instead
    CHECK(weak_lg_fraction_text(row2, nef_partition{{{0}, {1, 2, 3, 4, 5}}}, drop_two) ==
          "(x1+x2+x3+x4+1)^10/(x1x2x3x4^5)");
}

TEST_CASE("variable counts equal the dimension", "[lg]")
{
    for (const char* text : {"P(1^3,2^2,3^2)/6,6", "P(1^6)/5", "P(1^5,2,3)/6"}) {
        ci_spec s = parse_spec(text);
        laurent_poly f = weak_lg(s, construct_nice(s));
        CHECK(static_cast<int>(f.vars.size()) == s.dim());
    }
    // a high-codimension row, with its listed partition
    ci_spec s = parse_spec("P(1^11)/2,2,2,2,2");
    nef_partition p{{{0}, {1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}}};
    CHECK(weak_lg(s, p).vars.size() == 5);
}

TEST_CASE("elimination errors", "[lg]")
{
    ci_spec cy = parse_spec("P(1,1,1)/3");
    CHECK_THROWS_AS(weak_lg(cy, nef_partition{{{}, {0, 1, 2}}}), precondition_error);

    ci_spec row18 = parse_spec("P(1^4,2,3)/6");
    nef_partition p{{{0, 4}, {1, 2, 3, 5}}};
    CHECK_THROWS_AS(weak_lg(row18, p, exclusion_map{{0, 4}}), precondition_error);
    CHECK_THROWS_AS(weak_lg(row18, p, exclusion_map{{1, 0}}), precondition_error);
    CHECK_THROWS_AS(weak_lg(row18, p, exclusion_map{{7, 0}}), precondition_error);
}

TEST_CASE("distinct elimination choices are counted by weight", "[lg]")
{
    ci_spec row2 = parse_spec("P(1^4,2,5)/10");
    // S_0 = {0}: one choice; S_1 weights (1,1,1,2,5): three distinct weights
    CHECK(distinct_exclusion_choices(row2, nef_partition{{{0}, {1, 2, 3, 4, 5}}}).size() ==
          3);

    ci_spec row11 = parse_spec("P(1^7)/3,3");
    CHECK(distinct_exclusion_choices(row11,
                                     nef_partition{{{0}, {1, 2, 3}, {4, 5, 6}}})
              .size() == 1);
}
