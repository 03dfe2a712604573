#include <doctest.h>

#include "mfk/catalog.hpp"
#include "mfk/matfac.hpp"

using namespace mfk;

TEST_CASE("verify_factorization examples") {
    CHECK(verify_factorization(an_family(3, 1, true)).pass());
    CHECK(verify_factorization(universal_flop2().mf).pass());

    SUBCASE("tampering is located") {
        MatFac bad = an_family(3, 1, true);
        PolyMatrix phi = bad.phi;
        phi.set(0, 0, phi.at(0, 0) + Poly::constant(GaussRat(1), phi.vars_ptr()));
        bad.phi = phi;
        Report rep = verify_factorization(bad);
        CHECK_FALSE(rep.pass());
        bool located = false;
        for (const auto& c : rep.checks) {
            if (!c.pass && c.detail.find("(0,0)") != std::string::npos) located = true;
        }
        CHECK(located);
    }
}

TEST_CASE("split_form examples") {
    SUBCASE("universal flop recovers the 4x4 Xi") {
        const UniversalFlop2& uf = universal_flop2();
        MatFac plain = make_matfac("UF2 plain", uf.mf.phi, uf.mf.psi, uf.mf.f);
        MatFac split = split_form(plain, "x");
        REQUIRE(split.split.has_value());
        CHECK(split.split->xi == uf.xi);
    }

    SUBCASE("A family after the u,v change") {
        MatFac split_src = an_family_split(4, 2, true);
        MatFac plain = make_matfac("A split plain", split_src.phi, split_src.psi, split_src.f);
        MatFac split = split_form(plain, "u");
        REQUIRE(split.split.has_value());
        const VarsPtr& r = split.split->xi.vars_ptr();
        PolyMatrix want = PolyMatrix::from_rows(
            {{Poly::var("v", r), an_h(4, 2, true, r)},
             {an_g(4, 2, true, r), -Poly::var("v", r)}});
        CHECK(split.split->xi == want);
    }

    SUBCASE("raw A family in x, y coordinates is not splittable") {
        MatFac raw = an_family(4, 2, true);
        CHECK_THROWS_AS(split_form(raw, "x"), NotSplittable);
    }
}

TEST_CASE("involution_check") {
    CHECK(involution_check(universal_flop2().mf));
    CHECK(involution_check(an_family_split(5, 2, true)));
    CHECK(involution_check(dn_family(6, 3)));
    CHECK(involution_check(e_series("E7", "4").mf));

    MatFac raw = an_family(3, 1, true);  // no split form: not applicable
    CHECK_THROWS_AS(involution_check(raw), Error);
}

TEST_CASE("decompose examples") {
    SUBCASE("k=1: trivial summands plus the rank-1 module") {
        for (int n : {4, 5, 6}) {
            DnFamily fam = dn_family_full(n, 1);
            auto blocks = decompose(fam.mf, dn_b0(fam), dn_b1(fam), {{0}, {1}, {2, 3}});
            REQUIRE(blocks.size() == 3);
            Poly f = fam.mf.f.reordered(fam.ring);
            Poly one = Poly::constant(GaussRat(1), fam.ring);
            CHECK(blocks[0].phi.at(0, 0) == f);
            CHECK(blocks[0].psi.at(0, 0) == one);
            CHECK(blocks[1].phi.at(0, 0) == one);
            CHECK(blocks[1].psi.at(0, 0) == f);
            REQUIRE(blocks[2].split.has_value());
            CHECK(blocks[2].split->xi.reordered(fam.ring) == dn_xi1(fam));
            // xi_1 has the stated corner entry eta - Q(0) Y.
            Poly corner = dn_xi1(fam).at(0, 0);
            Poly want = fam.inv.eta.reordered(fam.ring) -
                        fam.inv.Q0.reordered(fam.ring) * Poly::var("Y", fam.ring);
            CHECK(corner == want);
            for (const auto& b : blocks) CHECK(verify_factorization(b).pass());
        }
    }

    SUBCASE("k=n: two copies of the rank-1 module") {
        DnFamily fam = dn_family_full(5, 5);
        auto blocks = decompose(fam.mf, dn_b2(fam), dn_b2(fam), {{0, 1}, {2, 3}});
        REQUIRE(blocks.size() == 2);
        for (const auto& b : blocks) {
            REQUIRE(b.split.has_value());
            CHECK(b.split->xi.reordered(fam.ring) == dn_xi2(fam));
        }
    }

    SUBCASE("k=n-1: two inequivalent summands") {
        DnFamily fam = dn_family_full(6, 5);
        auto blocks = decompose(fam.mf, dn_b3(fam), dn_b3(fam), {{0, 1}, {2, 3}});
        REQUIRE(blocks.size() == 2);
        CHECK(blocks[0].split->xi.reordered(fam.ring) == dn_xi3(fam));
        CHECK(blocks[1].split->xi.reordered(fam.ring) == dn_xi4(fam));
        CHECK(dn_xi3(fam) != dn_xi4(fam));
    }

    SUBCASE("a partition cutting the 2x2 block is rejected") {
        DnFamily fam = dn_family_full(4, 1);
        CHECK_THROWS_AS(decompose(fam.mf, dn_b0(fam), dn_b1(fam), {{0, 2}, {1, 3}}),
                        NotBlockDiagonal);
    }
}

TEST_CASE("det(phi) det(psi) = f^k") {
    auto check = [](const MatFac& m) {
        Poly lhs = m.phi.determinant() * m.psi.determinant();
        CHECK(lhs == m.f.pow(static_cast<unsigned>(m.size)));
    };
    check(an_family(4, 2, true));
    check(universal_flop2().mf);
    check(dn_gsv_matfac(5, 3));
    check(e_series("E6", "2").mf);
}

TEST_CASE("split Xi squares to -g I") {
    auto check = [](const MatFac& m) {
        REQUIRE(m.split.has_value());
        const PolyMatrix& xi = m.split->xi;
        const VarsPtr& r = xi.vars_ptr();
        Poly x = Poly::var(m.split->x_name, r);
        Poly g = m.f.reordered(r) - x * x;
        CHECK(xi * xi == PolyMatrix::identity(xi.rows(), r).scaled(-g));
    };
    check(universal_flop2().mf);
    for (int k = 1; k <= 5; ++k) check(dn_gsv_matfac(5, k));
}
