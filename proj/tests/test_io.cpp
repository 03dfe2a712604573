#include <doctest.h>

#include <random>

#include "mfk/exporter.hpp"
#include "mfk/serialize.hpp"

using namespace mfk;

TEST_CASE("canonical text forms") {
    VarsPtr r = make_ring({"x", "y"});
    CHECK(Poly(r).text() == "0");
    CHECK(Poly::parse("x^2 - y", r).text() == "x^2 - y");
    CHECK(Poly::parse("-x", r).text() == "-x");
    CHECK(Poly::parse("1/2*x + 3", r).text() == "1/2*x + 3");
    CHECK(Poly::parse("3 + 1/2*x", r).text() == "1/2*x + 3");

    VarsPtr yz = make_ring({"Y", "Z"});
    Poly izz = Poly::monomial(GaussRat::i(), {0, 2}, yz);
    CHECK(izz.text() == "(0+1*i)*Z^2");
    CHECK(Poly::parse(izz.text(), yz) == izz);
}

TEST_CASE("parse accepts unnormalized input and canonicalizes") {
    VarsPtr r = make_ring({"x", "y"});
    CHECK(Poly::parse("y + x", r) == Poly::parse("x + y", r));
    CHECK(Poly::parse("x + x", r) == Poly::parse("2*x", r));
    CHECK(Poly::parse("x - x", r).is_zero());
    CHECK(Poly::parse("1*x^1*y^0", r) == Poly::var("x", r));
    CHECK(Poly::parse("x*x*x", r) == Poly::var("x", r).pow(3));
    CHECK_THROWS_AS(Poly::parse("q + 1", r), ParseError);
    CHECK_THROWS_AS(Poly::parse("x +", r), ParseError);
}

TEST_CASE("parse/print round trip is bit exact") {
    std::mt19937_64 rng(17);
    VarsPtr r = make_ring({"x", "y", "z"});
    std::uniform_int_distribution<int> e(0, 4), c(-9, 9), im(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        Poly p(r);
        for (int t = 0; t < 5; ++t) {
            GaussRat coeff = im(rng) == 0
                                 ? GaussRat(Rat(c(rng), 1 + std::abs(c(rng))), Rat(c(rng)))
                                 : GaussRat(Rat(c(rng), 1 + std::abs(c(rng))));
            p += Poly::monomial(coeff, {e(rng), e(rng), e(rng)}, r);
        }
        Poly q = Poly::parse(p.text(), r);
        CHECK(q == p);
        CHECK(q.text() == p.text());
    }
}

TEST_CASE("JSON round trips") {
    VarsPtr r = make_ring({"x", "y"});
    Poly p = Poly::parse("x^2*y - 1/2*x + 7", r) +
             Poly::monomial(GaussRat::i(), {1, 1}, r);
    CHECK(poly_from_json(poly_to_json(p)) == p);

    PolyMatrix m = PolyMatrix::parse({{"x", "y - 1"}, {"0", "x*y"}}, r);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    Ideal I{r, MonomialOrder::elim(1), {Poly::parse("x - y", r), Poly::parse("y^2", r)}};
    Ideal back = ideal_from_json(ideal_to_json(I));
    CHECK(back.order.kind == MonomialOrder::Kind::Elim);
    CHECK(back.order.split == 1);
    REQUIRE(back.gens.size() == 2);
    CHECK(back.gens[0] == I.gens[0]);
}

TEST_CASE("matrix text form") {
    VarsPtr r = make_ring({"x", "y"});
    PolyMatrix m = PolyMatrix::parse({{"x", "-y"}, {"0", "x + y"}}, r);
    CHECK(m.text() == "[[x, -y],\n [0, x + y]]");
}

TEST_CASE("export payloads are deterministic") {
    for (auto fmt : {ExportFormat::Text, ExportFormat::Json, ExportFormat::Tex}) {
        auto a = export_bundle(fmt);
        auto b = export_bundle(fmt);
        CHECK(a == b);
        CHECK(a.size() == 5);
    }
}

TEST_CASE("report JSON shape") {
    Report rep;
    rep.id = "demo";
    rep.add("check one", true);
    rep.add("check two", false, "difference at (0,1)");
    Json j = report_to_json(rep);
    CHECK(j["id"] == "demo");
    CHECK(j["checks"].size() == 2);
    CHECK(j["pass"] == false);
}
