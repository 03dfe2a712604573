#include <doctest.h>

#include <random>

#include "mfk/blowup.hpp"

using namespace mfk;

TEST_CASE("reduce examples") {
    VarsPtr r = make_ring({"x", "y"});
    Poly g = Poly::parse("x^2 + y", r);
    Ideal I{r, MonomialOrder::grlex(), {g}};
    CHECK(reduce(g, I).is_zero());
    CHECK(reduce(g * g + g, I).is_zero());

    Ideal J{r, MonomialOrder::grlex(), {Poly::var("x", r)}};
    CHECK(reduce(Poly::constant(GaussRat(1), r), J) == Poly::constant(GaussRat(1), r));
}

TEST_CASE("division tracks cofactors") {
    VarsPtr r = make_ring({"x", "y"});
    std::vector<Poly> gens{Poly::parse("x^2 + y", r), Poly::parse("x*y - 1", r)};
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p(r);
        for (int t = 0; t < 4; ++t) p += Poly::monomial(GaussRat(c(rng)), {e(rng), e(rng)}, r);
        DivisionResult res = divide(p, gens, MonomialOrder::grlex());
        Poly recon = res.remainder;
        for (size_t i = 0; i < gens.size(); ++i) recon += res.cofactors[i] * gens[i];
        CHECK(recon == p);
    }
}

TEST_CASE("buchberger examples") {
    VarsPtr r = make_ring({"x", "y"});

    SUBCASE("monomial ideal is already a basis") {
        Ideal I{r, MonomialOrder::grlex(),
                {Poly::parse("x^2", r), Poly::parse("x*y", r)}};
        Ideal gb = buchberger(I);
        CHECK(gb.gens.size() == 2);
        CHECK(is_groebner(gb));
        CHECK(reduce(Poly::parse("x^2*y", r), gb).is_zero());
    }

    SUBCASE("unit ideal") {
        Ideal I{r, MonomialOrder::grlex(),
                {Poly::parse("x - 1", r), Poly::parse("x", r)}};
        Ideal gb = buchberger(I);
        REQUIRE(gb.gens.size() == 1);
        CHECK(gb.gens[0] == Poly::constant(GaussRat(1), r));
    }

    SUBCASE("membership both ways on random combinations") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> e(0, 2), c(-2, 2);
        Ideal I{r, MonomialOrder::grlex(),
                {Poly::parse("x^2 - y", r), Poly::parse("y^2 - x", r)}};
        Ideal gb = buchberger(I);
        for (int trial = 0; trial < 100; ++trial) {
            Poly a(r), b(r);
            for (int t = 0; t < 3; ++t) {
                a += Poly::monomial(GaussRat(c(rng)), {e(rng), e(rng)}, r);
                b += Poly::monomial(GaussRat(c(rng)), {e(rng), e(rng)}, r);
            }
            Poly member = a * I.gens[0] + b * I.gens[1];
            CHECK(reduce(member, gb).is_zero());
        }
        CHECK_FALSE(reduce(Poly::var("x", r), gb).is_zero());
    }
}

TEST_CASE("caps fail loudly") {
    VarsPtr r = make_ring({"x", "y"});
    Ideal I{r, MonomialOrder::grlex(),
            {Poly::parse("x^2 - y", r), Poly::parse("x*y^3 - 1", r)}};
    BuchbergerCaps tight;
    tight.max_degree = 1;
    CHECK_THROWS_AS(buchberger(I, tight), CapExceeded);
    CHECK_THROWS_AS(buchberger(I, BuchbergerCaps{0, 10}), Error);
}

TEST_CASE("elimination ideal matches A-series closed forms") {
    // Chart 1 of the deformed A_{n-1} family, n=3, k=1: the x-elimination is
    // the principal ideal (y*alpha - g_1).
    MatFac mf = an_family(3, 1, true);
    Chart c1 = make_chart(mf, Side::Psi, {1}, "alpha");
    std::vector<std::string> keep;
    for (const auto& v : *c1.ring) {
        if (v != "x") keep.push_back(v);
    }
    Ideal raw{c1.ring, MonomialOrder::grlex(), c1.raw};
    Ideal elim = elimination_ideal(raw, keep);
    REQUIRE(elim.gens.size() == 1);
    Poly closed = Poly::var("y", elim.vars) * Poly::var("alpha", elim.vars) -
                  an_g(3, 1, true, elim.vars);
    Ideal closed_gb = buchberger(Ideal{elim.vars, elim.order, {closed}});
    CHECK(same_ideal(elim, closed_gb));

    // Chart 2: eliminating y leaves (x*beta - h_2).
    Chart c2 = make_chart(mf, Side::Psi, {0}, "beta");
    std::vector<std::string> keep2;
    for (const auto& v : *c2.ring) {
        if (v != "y") keep2.push_back(v);
    }
    Ideal raw2{c2.ring, MonomialOrder::grlex(), c2.raw};
    Ideal elim2 = elimination_ideal(raw2, keep2);
    REQUIRE(elim2.gens.size() == 1);
    Poly closed2 = Poly::var("x", elim2.vars) * Poly::var("beta", elim2.vars) -
                   an_h(3, 1, true, elim2.vars);
    CHECK(same_ideal(elim2, buchberger(Ideal{elim2.vars, elim2.order, {closed2}})));
}

TEST_CASE("the hypersurface equation lies in the chart ideals") {
    // Groebner route: W reduces to zero modulo the eight raw generators of
    // either flop chart (the certificate route is f_membership_certificate).
    const UniversalFlop2& uf = universal_flop2();
    for (int which : {1, 2}) {
        Chart c = make_chart(uf.mf, Side::Psi,
                             which == 1 ? std::vector<int>{0, 1} : std::vector<int>{0, 2},
                             which == 1 ? "a" : "b");
        Ideal raw{c.ring, MonomialOrder::grlex(), c.raw};
        Ideal gb = buchberger(raw);
        CHECK(reduce(uf.W.reordered(c.ring), gb).is_zero());
    }
}

TEST_CASE("A1 chart ideal: x eliminates to the principal versal relation") {
    // n=2, k=1: generators (y*alpha - g_1, x - h_1*alpha); the x-free part
    // of the basis is generated by y*alpha - g_1 alone.
    MatFac mf = an_family(2, 1, true);
    Chart c = make_chart(mf, Side::Psi, {1}, "alpha");
    std::vector<std::string> keep;
    for (const auto& v : *c.ring) {
        if (v != "x") keep.push_back(v);
    }
    Ideal elim = elimination_ideal(Ideal{c.ring, MonomialOrder::grlex(), c.raw}, keep);
    REQUIRE(elim.gens.size() == 1);
    Poly closed = Poly::var("y", elim.vars) * Poly::var("alpha", elim.vars) -
                  an_g(2, 1, true, elim.vars);
    CHECK(reduce(closed, elim).is_zero());
}

TEST_CASE("eliminating nothing returns the Groebner basis") {
    VarsPtr r = make_ring({"x", "y"});
    Ideal I{r, MonomialOrder::grlex(),
            {Poly::parse("x^2 - y", r), Poly::parse("y^2 - x", r)}};
    Ideal keep_all = elimination_ideal(I, {"x", "y"});
    Ideal gb = buchberger(I);
    CHECK(same_ideal(keep_all, gb));
}

TEST_CASE("post-hoc S-polynomial recheck") {
    VarsPtr r = make_ring({"x", "y", "z"});
    Ideal I{r, MonomialOrder::grlex(),
            {Poly::parse("x*y - z", r), Poly::parse("y*z - x", r),
             Poly::parse("x*z - y", r)}};
    Ideal gb = buchberger(I);
    CHECK(is_groebner(gb));
    // A non-basis is detected.
    CHECK_FALSE(is_groebner(I));
}

TEST_CASE("elimination order comparator") {
    MonomialOrder elim = MonomialOrder::elim(1);
    // With x eliminated first, any x-bearing monomial beats any x-free one.
    CHECK(elim.compare({1, 0, 0}, {0, 5, 5}) > 0);
    CHECK(elim.compare({0, 2, 1}, {0, 1, 1}) > 0);
    CHECK(elim.compare({0, 1, 1}, {0, 1, 1}) == 0);
}
