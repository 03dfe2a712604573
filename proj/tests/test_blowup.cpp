#include <doctest.h>

#include "mfk/blowup.hpp"

using namespace mfk;

TEST_CASE("make_chart produces the expected raw generators") {
    const UniversalFlop2& uf = universal_flop2();

    SUBCASE("pivots {1,2}: the eight lambda_{i,j}") {
        Chart c = make_chart(uf.mf, Side::Psi, {0, 1}, "a");
        const VarsPtr& r = c.ring;
        CHECK(c.gen("l11") == Poly::parse("x - v*t + z*a11 + t*a21", r));
        CHECK(c.gen("l12") == Poly::parse("y + z*a12 + t*a22", r));
        CHECK(c.gen("l21") == Poly::parse("-u*y - 2*v*z - u*t*a11 + z*a21", r));
        CHECK(c.gen("l22") == Poly::parse("x + v*t - u*t*a12 + z*a22", r));
        CHECK(c.gen("l31") == Poly::parse("-w*z + x*a11 - v*t*a11 - y*a21", r));
        CHECK(c.gen("l42") == Poly::parse("-w*z + u*y*a12 + 2*v*z*a12 + x*a22 + v*t*a22", r));
        CHECK(c.unknowns == std::vector<std::string>{"a11", "a12", "a21", "a22"});
    }

    SUBCASE("pivots {1,3}: the eight mu_{i,j}") {
        Chart c = make_chart(uf.mf, Side::Psi, {0, 2}, "b");
        const VarsPtr& r = c.ring;
        CHECK(c.gen("m12") == Poly::parse("z + y*b12 + t*b22", r));
        CHECK(c.gen("m32") == Poly::parse("x - v*t + w*t*b12 - y*b22", r));
    }

    SUBCASE("A-series chart 1") {
        MatFac mf = an_family(3, 2, true);
        Chart c = make_chart(mf, Side::Psi, {1}, "alpha");
        const VarsPtr& r = c.ring;
        CHECK(c.raw.size() == 2);
        CHECK(c.gen("l11") == Poly::var("y", r) * Poly::var("alpha", r) - an_g(3, 2, true, r));
        CHECK(c.gen("l21") ==
              -(an_h(3, 2, true, r) * Poly::var("alpha", r)) + Poly::var("x", r));
    }

    SUBCASE("bad pivots") {
        CHECK_THROWS_AS(make_chart(uf.mf, Side::Psi, {0}, "a"), BadPivot);
        CHECK_THROWS_AS(make_chart(uf.mf, Side::Psi, {0, 0}, "a"), BadPivot);
        CHECK_THROWS_AS(make_chart(uf.mf, Side::Psi, {0, 7}, "a"), BadPivot);
    }
}

TEST_CASE("D-chart generators take the stated closed forms") {
    DnFamily fam = dn_family_full(6, 3);

    SUBCASE("chart 1") {
        Chart c = make_chart(fam.mf, Side::Psi, {0, 1}, "a");
        const VarsPtr& r = c.ring;
        Poly Y = Poly::var("Y", r), X = Poly::var("X", r), Z = Poly::var("Z", r);
        Poly S = fam.inv.S.reordered(r), Q = fam.inv.Q.reordered(r),
             P = fam.inv.P.reordered(r), eta = fam.inv.eta.reordered(r);
        // lambda_{1,2} = Y - eta S + a12 Q + a22 P eliminates Y;
        // lambda_{2,2} = X + eta P - a12 Z P + a22 Q eliminates X.
        CHECK(c.gen("l12") ==
              Y - eta * S + Poly::var("a12", r) * Q + Poly::var("a22", r) * P);
        CHECK(c.gen("l22") ==
              X + eta * P - Poly::var("a12", r) * Z * P + Poly::var("a22", r) * Q);
    }

    SUBCASE("chart 2") {
        Chart c = make_chart(fam.mf, Side::Psi, {0, 2}, "b");
        const VarsPtr& r = c.ring;
        Poly Y = Poly::var("Y", r), X = Poly::var("X", r);
        Poly S = fam.inv.S.reordered(r), Q = fam.inv.Q.reordered(r),
             P = fam.inv.P.reordered(r), eta = fam.inv.eta.reordered(r),
             h = fam.inv.h.reordered(r);
        // mu_{1,2} = Q + b12 (Y - eta S) + b22 P (no immediate elimination);
        // mu_{3,2} = X - eta P - b12 h P - b22 (Y - eta S) eliminates X.
        CHECK(c.gen("m12") ==
              Q + Poly::var("b12", r) * (Y - eta * S) + Poly::var("b22", r) * P);
        CHECK(c.gen("m32") == X - eta * P - Poly::var("b12", r) * h * P -
                                  Poly::var("b22", r) * (Y - eta * S));
        // mu_3 after the witness extension.
        verify_witnesses(c, dn_witnesses(fam, c.ring, 2));
        Poly Z = Poly::var("Z", r);
        CHECK(c.gen("m3") ==
              Poly::var("b22", r).pow(2) + Z -
                  (eta * Poly::var("b12", r)).scaled(GaussRat(2)) -
                  Poly::var("b12", r).pow(2) * h);
    }
}

TEST_CASE("f-membership certificate holds on every flop chart") {
    const UniversalFlop2& uf = universal_flop2();
    for (const auto& pivots :
         {std::vector<int>{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
        Chart c = make_chart(uf.mf, Side::Psi, pivots, "a");
        CHECK(f_membership_certificate(c));
    }
}

TEST_CASE("witness identities") {
    const UniversalFlop2& uf = universal_flop2();

    SUBCASE("chart 1 and chart 2 pass") {
        for (int which : {1, 2}) {
            Chart c = make_chart(uf.mf, Side::Psi,
                                 which == 1 ? std::vector<int>{0, 1} : std::vector<int>{0, 2},
                                 which == 1 ? "a" : "b");
            Report rep = verify_witnesses(c, flop_witnesses(c.ring, which));
            CHECK(rep.pass());
            CHECK(c.extended.size() == 3);
        }
    }

    SUBCASE("a perturbed cofactor fails") {
        Chart c = make_chart(uf.mf, Side::Psi, {0, 1}, "a");
        auto ws = flop_witnesses(c.ring, 1);
        ws[0].combo[0].second += Poly::constant(GaussRat(1), c.ring);
        CHECK_THROWS_AS(verify_witnesses(c, ws), WitnessFailed);
    }

    SUBCASE("Groebner membership admits the same localized generators") {
        Chart c = make_chart(uf.mf, Side::Psi, {0, 1}, "a");
        Poly divisor = Poly::parse("z^2 + u*t^2", c.ring);
        CHECK(admit_by_membership(c, "l1", divisor, Poly::parse("a11 - a22", c.ring)).pass());
        CHECK(admit_by_membership(c, "l2", divisor,
                                  Poly::parse("2*v - a12*u - a21", c.ring))
                  .pass());
        CHECK(admit_by_membership(c, "l3", divisor,
                                  Poly::parse("a22^2 + a12^2*u - 2*a12*v + w", c.ring))
                  .pass());
        CHECK(c.extended.size() == 3);
        // The quotient itself is not in the raw ideal: only the localized
        // product is.
        Chart c2 = make_chart(uf.mf, Side::Psi, {0, 1}, "a");
        CHECK_THROWS_AS(admit_by_membership(c2, "bad", Poly::constant(GaussRat(1), c2.ring),
                                            Poly::parse("a11 - a22", c2.ring)),
                        WitnessFailed);
    }
}

TEST_CASE("generation identities") {
    const UniversalFlop2& uf = universal_flop2();
    for (int which : {1, 2}) {
        Chart c = make_chart(uf.mf, Side::Psi,
                             which == 1 ? std::vector<int>{0, 1} : std::vector<int>{0, 2},
                             which == 1 ? "a" : "b");
        verify_witnesses(c, flop_witnesses(c.ring, which));
        Report rep = verify_generation(c, flop_generation(c.ring, which));
        CHECK(rep.pass());
    }

    SUBCASE("D_n substitution instance") {
        DnFamily fam = dn_family_full(6, 3);
        Chart c = make_chart(fam.mf, Side::Psi, {0, 1}, "a");
        verify_witnesses(c, dn_witnesses(fam, c.ring, 1));
        CHECK(verify_generation(c, dn_generation(fam, c.ring, 1)).pass());
    }

    SUBCASE("a broken combination fails") {
        Chart c = make_chart(uf.mf, Side::Psi, {0, 1}, "a");
        verify_witnesses(c, flop_witnesses(c.ring, 1));
        auto ids = flop_generation(c.ring, 1);
        ids[0].combo[0].second += Poly::var("z", c.ring);
        CHECK_THROWS_AS(verify_generation(c, ids), GenerationFailed);
    }
}

TEST_CASE("eliminate") {
    SUBCASE("A chart 1 leaves the versal relation") {
        MatFac mf = an_family(5, 2, true);
        Chart c = make_chart(mf, Side::Psi, {1}, "alpha");
        eliminate(c, {{"x", "l21"}});
        auto res = c.residual();
        REQUIRE(res.size() == 1);
        CHECK(res[0] == Poly::var("y", c.ring) * Poly::var("alpha", c.ring) -
                            an_g(5, 2, true, c.ring));
    }

    SUBCASE("flop chart 1 is smooth") {
        ChartRun run = run_flop_chart(1);
        CHECK(run.chart.residual().empty());
        CHECK(run.cls.kind == ResidualClass::Kind::Smooth);
        CHECK(run.chart.elim_log.size() == 5);
    }

    SUBCASE("flop chart 2 is smooth") {
        ChartRun run = run_flop_chart(2);
        CHECK(run.cls.kind == ResidualClass::Kind::Smooth);
    }

    SUBCASE("D chart 1 leaves lambda_3") {
        ChartRun run = run_d_chart1(6, 3);
        auto res = run.chart.residual();
        REQUIRE(res.size() == 1);
        DnFamily fam = dn_family_full(6, 3);
        const VarsPtr& r = run.chart.ring;
        Poly want = Poly::var("a22", r) * Poly::var("a22", r) +
                    Poly::var("a12", r) * Poly::var("a12", r) * Poly::var("Z", r) -
                    (fam.inv.eta.reordered(r) * Poly::var("a12", r)).scaled(GaussRat(2)) -
                    fam.inv.h.reordered(r);
        CHECK(res[0] == want);
        CHECK(run.cls.kind == ResidualClass::Kind::D);
        CHECK(run.cls.m == 3);
        CHECK(run.cls.degenerate);  // D3 = A3
    }

    SUBCASE("non-unit linear coefficient is rejected") {
        Chart c = make_chart(universal_flop2().mf, Side::Psi, {0, 1}, "a");
        // l12 = y + z*a12 + t*a22 is not linear-unit in z (coefficient a12).
        CHECK_THROWS_AS(eliminate(c, {{"z", "l12"}}), NotLinearUnit);
        // l11 is degree 1 in u? u does not occur: degree 0.
        CHECK_THROWS_AS(eliminate(c, {{"u", "l11"}}), NotLinearUnit);
    }
}

TEST_CASE("classify_residual") {
    SUBCASE("A chart 1 gives A(k-1)") {
        ChartRun run = run_a_chart(6, 2, 1);
        CHECK(run.cls.kind == ResidualClass::Kind::A);
        CHECK(run.cls.m == 1);
        CHECK(run.report.pass());
    }
    SUBCASE("A chart 2 gives A(n-k-1)") {
        ChartRun run = run_a_chart(6, 2, 2);
        CHECK(run.cls.kind == ResidualClass::Kind::A);
        CHECK(run.cls.m == 3);
    }
    SUBCASE("D chart 1 degenerate tags") {
        CHECK(run_d_chart1(6, 4).cls.degenerate);        // D2
        CHECK(run_d_chart1(8, 3).cls.degenerate == false);  // D5
    }
    SUBCASE("empty residual is smooth") {
        CHECK(run_flop_chart(1).cls.kind == ResidualClass::Kind::Smooth);
    }
}

TEST_CASE("tyurina") {
    SUBCASE("n=4 k=2 with G=-1") {
        TyurinaRun run = run_d_chart2(4, 2);
        CHECK(run.report.pass());
        CHECK(run.cls.kind == ResidualClass::Kind::A);
        CHECK(run.cls.m == 1);
        DnFamily fam = dn_family_full(4, 2);
        CHECK(fam.inv.G == Poly::constant(GaussRat(-1), fam.inv.ring));
    }

    SUBCASE("n=6 k=3 symbolic") {
        TyurinaRun run = run_d_chart2(6, 3);
        CHECK(run.report.pass());
        CHECK(run.cls.m == 2);
        // mu~ = Y~ b12 + f(b22) exactly.
        const VarsPtr& r = run.chart.ring;
        DnFamily fam = dn_family_full(6, 3);
        std::map<std::string, Poly> at_b22{{"U", Poly::var("b22", r)}};
        CHECK(run.mu_tilde ==
              run.y_tilde * Poly::var("b12", r) + fam.inv.f.substituted(at_b22, r));
    }

    SUBCASE("wrong G fails") {
        DnFamily fam = dn_family_full(4, 2);
        Chart c = make_chart(fam.mf, Side::Psi, {0, 2}, "b");
        verify_witnesses(c, dn_witnesses(fam, c.ring, 2));
        set_working(c, flop_basis_labels(2));
        eliminate(c, {{"b11", "m1"}, {"b21", "m2"}});
        Poly wrong = Poly::constant(GaussRat(7), fam.inv.ring);
        CHECK_THROWS_AS(tyurina(c, fam, &wrong), IdentityFailed);
    }
}

TEST_CASE("conic fiber and matrix form") {
    CHECK(conic_fiber_check().pass());
    CHECK(matrixform_check().pass());
}

TEST_CASE("phi-side charts are the x -> -x images") {
    CHECK(side_symmetry_check().pass());
}

TEST_CASE("chart counting") {
    // C(4,2) = 6 pivot patterns for the flop, C(2,1) = 2 for the A series.
    CHECK(flop_smoke_charts().size() == 4);  // 6 minus the two worked charts
}
