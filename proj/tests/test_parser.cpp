#include "bp/parser.hpp"

#include "bp/render.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace bp;

TEST_CASE("parsing the surface syntax")
{
    Prime p(3);

    SUBCASE("free words stay unnormalized")
    {
        const Element e = parse_expression("b b", p);
        CHECK(e == Element::monomial(W({B(), B()})));
    }
    SUBCASE("coefficients and sums")
    {
        Element expected;
        add_term(expected, W({P(2), P(0)}), 2, p);
        add_term(expected, W({B()}), 1, p);
        CHECK(parse_expression("2 P2 P0 + b", p) == expected);
    }
    SUBCASE("normalize after parsing")
    {
        CHECK(normalize(parse_expression("P1 P1", p), p) ==
              Element::monomial(W({P(2), P(0)}), 2));
    }
    SUBCASE("units and scalars")
    {
        CHECK(parse_expression("1", p) == Element::unit());
        CHECK(parse_expression("2 1", p) == Element::monomial({}, 2));
        CHECK(parse_expression("1 1", p) == Element::unit());
        CHECK(parse_expression("3 1", p).is_zero());
        CHECK(parse_expression("1 P2", p) == Element::monomial(W({P(2)})));
        // bare scalars, so that every rendered element reads back
        CHECK(parse_expression("0", p).is_zero());
        CHECK(parse_expression("2", p) == Element::monomial({}, 2));
        CHECK(parse_expression("b + 0", p) == Element::monomial(W({B()})));
    }
    SUBCASE("coefficients reduce mod p while reading")
    {
        CHECK(parse_expression("7 b", p) == Element::monomial(W({B()})));
        CHECK(parse_expression("123456789123456789123456789 b", p).is_zero());
        CHECK(parse_expression("4000000007 P1", Prime(5)) ==
              Element::monomial(W({P(1)}), 2));
    }
    SUBCASE("subtraction")
    {
        CHECK(parse_expression("b - b", p).is_zero());
        Element expected;
        add_term(expected, W({P(1)}), 1, p);
        add_term(expected, W({P(0)}), 2, p);
        CHECK(parse_expression("P1 - P0", p) == expected);
    }
    SUBCASE("adjacent factors without spaces")
    {
        CHECK(parse_expression("P2P0", p) == Element::monomial(W({P(2), P(0)})));
        CHECK(parse_expression("bP1b", p) == Element::monomial(W({B(), P(1), B()})));
    }
}

TEST_CASE("parse errors carry a position and an expectation")
{
    Prime p(3);

    auto expect_error = [&](const char* src, size_t pos) {
        try {
            parse_expression(src, p);
            FAIL_CHECK("expected ParseError for: " << src);
        } catch (const ParseError& e) {
            CHECK(e.position() == pos);
            CHECK(!e.expected().empty());
        }
    };

    expect_error("", 0);
    expect_error("P", 1);
    expect_error("Px", 1);
    expect_error("2 3 P1", 2);
    expect_error("b +", 3);
    expect_error("@", 0);
    expect_error("b @", 2);
    expect_error("b P1 P", 6);
}

TEST_CASE("printing and parsing are mutually inverse on normal forms")
{
    Prime p(3);

    SUBCASE("golden corpus")
    {
        for (const char* src : {"1", "b", "2 1", "b P0 + P0 b", "2 P2 P0", "P3 P1 + 2 P4 P0 b"}) {
            const Element e = parse_expression(src, p);
            CHECK(to_text(e, p) == src);
            CHECK(parse_expression(to_text(e, p), p) == e);
        }
    }
    SUBCASE("random normalized elements")
    {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> len(0, 4), letter(-1, 5), coeff(1, 2);
        for (int trial = 0; trial < 300; ++trial) {
            Element e;
            for (int t = 0; t < 3; ++t) {
                Monomial w;
                const int L = len(rng);
                for (int i = 0; i < L; ++i) {
                    const int code = letter(rng);
                    w.push_back(code < 0 ? B() : P(code));
                }
                add_term(e, w, coeff(rng), p);
            }
            const Element nf = normalize(e, p);
            REQUIRE(parse_expression(to_text(nf, p), p) == nf);
        }
    }
}

TEST_CASE("JSON output is byte-stable")
{
    Prime p(3);
    CHECK(element_to_json(normalize(parse_expression("P1 P1", p), p), p).dump() ==
          R"({"p":3,"terms":[{"c":2,"w":[{"g":"P","k":2},{"g":"P","k":0}],"deg":[8,2]}]})");
    CHECK(element_to_json(Element::zero(), p).dump() == R"({"p":3,"terms":[]})");
    CHECK(element_to_json(Element::unit(), p).dump() ==
          R"({"p":3,"terms":[{"c":1,"w":[],"deg":[0,0]}]})");
    CHECK(element_to_json(parse_expression("b + b P0", p), p).dump() ==
          R"({"p":3,"terms":[{"c":1,"w":[{"g":"b"}],"deg":[1,0]},{"c":1,"w":[{"g":"b"},{"g":"P","k":0}],"deg":[1,1]}]})");
}

TEST_CASE("display order is graded")
{
    Prime p(3);
    // degree orders first: P0 P0 (0) < b (1) < P1 (4)
    const Element e = parse_expression("P1 + b + P0 P0", p);
    CHECK(to_text(e, p) == "P0 P0 + b + P1");
}
