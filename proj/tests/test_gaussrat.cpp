#include <doctest.h>

#include <random>

#include "mfk/gaussrat.hpp"

using namespace mfk;

TEST_CASE("i*i = -1") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
}

TEST_CASE("normalization invariants") {
    GaussRat half = GaussRat::ratio(2, 4);
    CHECK(half.str() == "1/2");
    GaussRat neg = GaussRat::ratio(1, -2);
    CHECK(neg.str() == "-1/2");  // denominator kept positive
    CHECK(numerator(neg.re()) == Int(-1));
    CHECK(denominator(neg.re()) == Int(2));
    CHECK(GaussRat(Rat(0), Rat(0)).is_zero());
}

TEST_CASE("field operations") {
    GaussRat a(Rat(3, 2), Rat(-1, 3));
    GaussRat b(Rat(-2, 5), Rat(7, 4));
    CHECK(a + b - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == GaussRat(1));
    CHECK_THROWS_AS(GaussRat(0).inverse(), Error);
    CHECK_THROWS_AS(a / GaussRat(0), Error);
}

TEST_CASE("parse round trip") {
    for (const char* s : {"0", "7", "-3/2", "(1/2+3/4*i)", "(0+1*i)", "(0-1*i)", "(-2-5/3*i)"}) {
        GaussRat g = GaussRat::parse(s);
        CHECK(GaussRat::parse(g.str()) == g);
    }
    CHECK(GaussRat::parse("(0+1*i)") == GaussRat::i());
    CHECK_THROWS_AS(GaussRat::parse("(1+2i)"), ParseError);
    CHECK_THROWS_AS(GaussRat::parse("1/0"), ParseError);
}

TEST_CASE("randomized field axioms") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto rand_gr = [&] { return GaussRat(Rat(d(rng), 1 + std::abs(d(rng))),
                                         Rat(d(rng), 1 + std::abs(d(rng)))); };
    for (int trial = 0; trial < 1000; ++trial) {
        GaussRat a = rand_gr(), b = rand_gr(), c = rand_gr();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
