#include "doctest.h"
#include "support.hpp"

using namespace pencilstab;
using namespace testsupport;

TEST_CASE("parse: grammar basics") {
    HomForm b = parse_form("x^3*(x*z^2 - y^2*(y+x))", {}, 6);
    HomForm expected(6);
    expected.set(4, 0, Rational(1));
    expected.set(3, 3, Rational(-1));
    expected.set(4, 2, Rational(-1));
    CHECK(b == expected);

    HomForm f = parse_form("2/3*x^6", {}, 6);
    CHECK(f.term_count() == 1);
    CHECK(f.at(6, 0) == Rational(2, 3));

    CHECK(parse_form("-1*x^6 + x^6", {}, 6).is_zero());
    CHECK(parse_form("  x ^ 2 * y ", {}, 3).at(2, 1) == 1);

    // exponent binds to the base, so the unary minus is raised with it
    CHECK(parse_form("-x^6", {}, 6) == parse_form("(0-x)^6", {}, 6));
    CHECK(parse_form("-x^3", {}, 3).at(3, 0) == -1);
}

TEST_CASE("parse: syntax errors carry byte offsets") {
    try {
        parse("x^^2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse("x+"), ParseError);
    CHECK_THROWS_AS(parse("(x"), ParseError);
    CHECK_THROWS_AS(parse("x$y"), ParseError);
    CHECK_THROWS_AS(parse("2/0"), ParseError);
    // implicit multiplication is not part of the grammar
    CHECK_THROWS_AS(parse("2x"), ParseError);
}

TEST_CASE("evaluate: homogeneity and degree checks") {
    CHECK_THROWS_WITH_AS(parse_form("x^2+y", {}, 2), "inhomogeneous: degree mix {1, 2}",
                         EvalError);
    CHECK_THROWS_WITH_AS(parse_form("x^2*y", {}, 6), "degree mismatch: got 3, expected 6",
                         EvalError);
    CHECK_THROWS_WITH_AS(parse_form("y^2*z - x*(x-z)*(x-a*z)", {}, 3), "unbound parameter a",
                         EvalError);
    // zero survives at any expected degree
    CHECK(parse_form("(x+y)^6 - (x+y)^6", {}, 6).is_zero());
}

TEST_CASE("evaluate: bound parameters") {
    std::map<char, Rational> bind{{'a', Rational(2)}};
    HomForm c = parse_form("y^2*z - x*(x-z)*(x-a*z)", bind, 3);
    CHECK(c == parse_form("y^2*z - x^3 + 3*x^2*z - 2*x*z^2", {}, 3));
    bind['a'] = Rational(1, 3);
    HomForm c2 = parse_form("y^2*z - x*(x-z)*(x-a*z)", bind, 3);
    CHECK(c2.at(1, 0) == Rational(-1, 3));
    CHECK(c2.at(2, 0) == Rational(4, 3));
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 25; ++t) {
        HomForm f = rnd_form(rng, 6, 7);
        CHECK(parse_form(print_form(f), {}, 6) == f);
    }
    CHECK(parse_form(print_form(HomForm(6)), {}, 6).is_zero());
}

TEST_CASE("evaluate distributes over sums and products") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 10; ++t) {
        HomForm a = rnd_form(rng, 3, 4), b = rnd_form(rng, 3, 4);
        std::string ea = print_form(a), eb = print_form(b);
        CHECK(parse_form("(" + ea + ") + (" + eb + ")", {}, 3) == add(a, b));
        CHECK(parse_form("(" + ea + ") * (" + eb + ")", {}, 6) == multiply(a, b));
    }
}
