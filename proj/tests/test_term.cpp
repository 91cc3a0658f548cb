#include "bp/term.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace bp;

TEST_CASE("bidegrees under the standard grading")
{
    Prime p(3);
    const Grading g = Grading::standard(p);
    CHECK(bidegree_of(W({P(1)}), g) == Bidegree{4, 1});
    CHECK(bidegree_of(W({}), g) == Bidegree{0, 0});
    CHECK(bidegree_of(W({B(), P(0), B()}), g) == Bidegree{2, 1});
    CHECK(bidegree_of(W({P(2), P(1)}), Grading::standard(Prime(5))) == Bidegree{24, 2});
}

TEST_CASE("sign-only gradings refuse what they cannot answer")
{
    const Grading g = Grading::sign_only(1, 0);
    CHECK(g.parity(W({B(), P(0)})) == 1);
    CHECK(g.parity(W({B(), B(), P(0)})) == 0);
    CHECK(g.parity(W({})) == 0);
    CHECK(!g.try_parity(W({P(1)})).has_value());
    CHECK_THROWS_AS(g.parity(W({P(2)})), UndefinedDegreeError);
    CHECK_THROWS_AS(bidegree_of(W({B()}), g), UndefinedDegreeError);
}

TEST_CASE("admissibility")
{
    Prime p(3);
    CHECK(is_admissible(W({P(3), P(1)}), p));
    CHECK(!is_admissible(W({P(1), B(), P(1)}), p));
    CHECK(is_admissible(W({P(0), B()}), p));
    CHECK(is_admissible(W({B(), P(0)}), p));
    CHECK(is_admissible(W({}), p));
    CHECK(is_admissible(W({B()}), p));
    CHECK(!is_admissible(W({B(), B()}), p));
    CHECK(!is_admissible(W({P(0), B(), P(0)}), p));  // needs a >= pb + 1
    CHECK(is_admissible(W({P(1), B(), P(0)}), p));
    CHECK(!is_admissible(W({P(2), P(1)}), p));      // needs a >= pb
    CHECK(!is_admissible(W({P(3), B(), P(1)}), p));  // needs a >= pb + 1
    CHECK(is_admissible(W({P(4), B(), P(1), P(0)}), p));
}

TEST_CASE("counit")
{
    CHECK(counit(W({P(0), P(0)})) == 1);
    CHECK(counit(W({B()})) == 0);
    CHECK(counit(W({})) == 1);
    CHECK(counit(W({P(1)})) == 0);
    CHECK(counit(W({P(0), B(), P(0)})) == 0);
}

TEST_CASE("single rewrite steps")
{
    Prime p(3);

    SUBCASE("b.b dies")
    {
        auto step = rewrite_step(W({B(), B()}), p);
        REQUIRE(step.has_value());
        CHECK(step->is_zero());
    }
    SUBCASE("P1 P1 -> 2 P2 P0")
    {
        auto step = rewrite_step(W({P(1), P(1)}), p);
        REQUIRE(step.has_value());
        CHECK(*step == Element::monomial(W({P(2), P(0)}), 2));
    }
    SUBCASE("P0 b P0 -> b P0 P0")
    {
        auto step = rewrite_step(W({P(0), B(), P(0)}), p);
        REQUIRE(step.has_value());
        CHECK(*step == Element::monomial(W({B(), P(0), P(0)})));
    }
    SUBCASE("admissible words have no redex")
    {
        CHECK(!rewrite_step(W({}), p).has_value());
        CHECK(!rewrite_step(W({P(3), P(1)}), p).has_value());
        CHECK(!rewrite_step(W({B(), P(0)}), p).has_value());
    }
    SUBCASE("redex existence matches admissibility")
    {
        for (const auto& w : all_words(4, 4))
            REQUIRE(rewrite_step(w, p).has_value() == !is_admissible(w, p));
    }
    SUBCASE("a single step matches the direct relation expansion")
    {
        for (long long a = 0; a <= 9; ++a) {
            for (long long b = 0; b <= 9; ++b) {
                if (a < 3 * b) {
                    auto step = rewrite_step(W({P(int(a)), P(int(b))}), p);
                    REQUIRE(step.has_value());
                    REQUIRE(*step == oracle::pp_rhs(p, a, b));
                }
                if (a <= 3 * b) {
                    auto step = rewrite_step(W({P(int(a)), B(), P(int(b))}), p);
                    REQUIRE(step.has_value());
                    REQUIRE(*step == oracle::pbp_rhs(p, a, b));
                }
            }
        }
    }
}

TEST_CASE("normalization")
{
    Prime p(3);

    SUBCASE("pinned values")
    {
        CHECK(normalize(Element::monomial(W({B(), P(0), B(), P(0), B()})), p).is_zero());
        CHECK(normalize(Element::unit(), p) == Element::unit());
        CHECK(normalize(Element::monomial(W({P(1), P(1), P(0)})), p) ==
              Element::monomial(W({P(2), P(0), P(0)}), 2));
        for (int pv : {3, 5, 7}) {
            Prime q(pv);
            CHECK(normalize(Element::monomial(W({B(), B()})), q).is_zero());
        }
    }

    SUBCASE("support admissible, bidegree preserved, idempotent")
    {
        const Grading g = Grading::standard(p);
        for (const auto& w : all_words(4, 5)) {
            const Element nf = normalize(Element::monomial(w), p);
            const Bidegree d = bidegree_of(w, g);
            for (const auto& [m, c] : nf.terms) {
                REQUIRE(is_admissible(m, p));
                REQUIRE(bidegree_of(m, g) == d);
                REQUIRE(c > 0);
                REQUIRE(c < 3);
            }
            REQUIRE(normalize(nf, p) == nf);
        }
    }

    SUBCASE("same properties at p = 5 with larger indices")
    {
        Prime q(5);
        const Grading g = Grading::standard(q);
        for (const auto& w : all_words(3, 9)) {
            const Element nf = normalize(Element::monomial(w), q);
            const Bidegree d = bidegree_of(w, g);
            for (const auto& [m, c] : nf.terms) {
                REQUIRE(is_admissible(m, q));
                REQUIRE(bidegree_of(m, g) == d);
                REQUIRE(c > 0);
                REQUIRE(c < 5);
            }
            REQUIRE(normalize(nf, q, kDefaultFuel, Strategy::rightmost) == nf);
        }
    }

    SUBCASE("linearity")
    {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> len(0, 4), letter(-1, 4), coeff(1, 2);
        auto random_element = [&]() {
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
            return e;
        };
        for (int trial = 0; trial < 200; ++trial) {
            const Element e1 = random_element();
            const Element e2 = random_element();
            REQUIRE(normalize(element_add(e1, e2, p), p) ==
                    element_add(normalize(e1, p), normalize(e2, p), p));
        }
    }

    SUBCASE("strategy independence")
    {
        // the scans really differ on words with several redexes
        const Monomial two_redexes = W({P(0), P(1), P(0), P(1)});
        REQUIRE(*rewrite_step(two_redexes, p, Strategy::leftmost) !=
                *rewrite_step(two_redexes, p, Strategy::rightmost));

        for (const auto& w : all_words(4, 4)) {
            const Element e = Element::monomial(w);
            REQUIRE(normalize(e, p, kDefaultFuel, Strategy::leftmost) ==
                    normalize(e, p, kDefaultFuel, Strategy::rightmost));
        }
    }

    SUBCASE("fuel exhaustion surfaces")
    {
        // distinctive words so the thread-local normal-form cache is cold
        CHECK_THROWS_AS(normalize(Element::monomial(W({P(8), P(9)})), p, 0),
                        FuelExhaustedError);
        CHECK_THROWS_AS(normalize(Element::monomial(W({P(7), P(8), P(9)})), p, 1),
                        FuelExhaustedError);
        // a cached normal form costs nothing, so the same query now succeeds
        CHECK(normalize(Element::monomial(W({P(8), P(9)})), p).terms.size() > 0);
        CHECK(normalize(Element::monomial(W({P(8), P(9)})), p, 0).terms.size() > 0);
    }

    SUBCASE("already-admissible powers are fixed points")
    {
        for (int a = 0; a <= 9; ++a)
            for (int b = 0; b <= 3; ++b)
                if (a >= 3 * b) {
                    const Element e = Element::monomial(W({P(a), P(b)}));
                    REQUIRE(normalize(e, p) == e);
                }
    }
}

TEST_CASE("multiplication")
{
    Prime p(3);
    const Element beta = Element::monomial(W({B()}));
    const Element p1 = Element::monomial(W({P(1)}));

    CHECK(multiply(beta, beta, p).is_zero());
    CHECK(multiply(p1, p1, p) == Element::monomial(W({P(2), P(0)}), 2));
    CHECK(multiply(Element::unit(), Element::monomial(W({B(), P(0)})), p) ==
          Element::monomial(W({B(), P(0)})));
    CHECK(multiply(Element::monomial(W({B(), P(0)})), Element::unit(), p) ==
          Element::monomial(W({B(), P(0)})));

    SUBCASE("associativity on sampled triples")
    {
        const auto words = all_words(2, 3);
        std::mt19937 rng(7);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const Element x = Element::monomial(words[pick(rng)]);
            const Element y = Element::monomial(words[pick(rng)]);
            const Element z = Element::monomial(words[pick(rng)]);
            REQUIRE(multiply(multiply(x, y, p), z, p) == multiply(x, multiply(y, z, p), p));
        }
    }
}

TEST_CASE("element arithmetic")
{
    Prime p(3);
    const Element e = Element::monomial(W({B(), P(0)}));
    CHECK(element_add(e, element_scale(2, e, p), p).is_zero());
    CHECK(element_add(e, Element::zero(), p) == e);
    CHECK(element_scale(2, element_scale(2, Element::monomial(W({P(0)})), p), p) ==
          Element::monomial(W({P(0)})));
    CHECK(element_sub(e, e, p).is_zero());
}

TEST_CASE("admissible basis enumeration")
{
    Prime p(3);
    const Grading g = Grading::standard(p);

    SUBCASE("pinned values")
    {
        CHECK(admissible_basis(p, 0, 0, g) == std::vector<Monomial>{W({})});
        CHECK(admissible_basis(p, 1, 0, g) == std::vector<Monomial>{W({B()})});
        CHECK(admissible_basis(p, 1, 1, g) ==
              std::vector<Monomial>{W({B(), P(0)}), W({P(0), B()})});
        CHECK(admissible_basis(p, 2, 1, g) == std::vector<Monomial>{W({B(), P(0), B()})});
        CHECK(admissible_basis(p, 4, 1, g) == std::vector<Monomial>{W({P(1)})});
        CHECK(admissible_basis(p, 3, 1, g).empty());
        CHECK(admissible_basis(p, 2, 0, g).empty());
    }

    SUBCASE("matches the brute-force oracle")
    {
        for (int s = 0; s <= 3; ++s) {
            for (long long n = 0; n <= 24; ++n) {
                auto got = admissible_basis(p, n, s, g);
                auto expected = oracle::brute_basis(p, n, s);
                std::sort(expected.begin(), expected.end(),
                          [&](const Monomial& a, const Monomial& b) {
                              return display_less(a, b, p);
                          });
                REQUIRE(got == expected);
                for (const auto& m : got) {
                    REQUIRE(is_admissible(m, p));
                    REQUIRE(bidegree_of(m, g) == Bidegree{n, s});
                }
                REQUIRE(std::adjacent_find(got.begin(), got.end()) == got.end());
            }
        }
    }

    SUBCASE("rejects other gradings")
    {
        CHECK_THROWS_AS(admissible_basis(p, 1, 1, Grading::sign_only(1, 0)), InvalidGradingError);
        CHECK_THROWS_AS(admissible_basis(p, 1, 1, Grading::standard(Prime(5))),
                        InvalidGradingError);
    }
}
