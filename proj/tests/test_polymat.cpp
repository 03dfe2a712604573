#include <doctest.h>

#include <random>

#include "mfk/catalog.hpp"

using namespace mfk;

namespace {

PolyMatrix random_matrix(std::mt19937_64& rng, int n, const VarsPtr& ring) {
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
    PolyMatrix m(n, n, ring);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly p(ring);
            for (int t = 0; t < 2; ++t)
                p += Poly::monomial(GaussRat(c(rng)), {e(rng), e(rng)}, ring);
            m.set(i, j, p);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("matmul examples") {
    VarsPtr r = make_ring({"x", "y", "z"});
    PolyMatrix phi = PolyMatrix::parse({{"x", "z"}, {"z", "y"}}, r);
    PolyMatrix psi = PolyMatrix::parse({{"y", "-z"}, {"-z", "x"}}, r);
    Poly f = Poly::parse("x*y - z^2", r);
    CHECK(phi * psi == PolyMatrix::identity(2, r).scaled(f));

    PolyMatrix a = PolyMatrix::parse({{"x + y", "z^2"}, {"-1", "y"}}, r);
    CHECK(a * PolyMatrix::identity(2, r) == a);

    const ESeriesEntry& e6_2 = e_series("E6", "2");
    VarsPtr yz = e6_2.phi->vars_ptr();
    Poly g = Poly::parse("Y^3 + Z^4", yz);
    CHECK(*e6_2.phi * *e6_2.psi == PolyMatrix::identity(2, yz).scaled(-g));

    CHECK_THROWS_AS(phi * PolyMatrix(3, 3, r), DimensionMismatch);
}

TEST_CASE("determinant examples") {
    const UniversalFlop2& uf = universal_flop2();
    // (uw - v^2)^2 expanded
    CHECK(uf.coeff_matrix.determinant() == Poly::parse("u^2*w^2 - 2*u*v^2*w + v^4", uf.ring));

    VarsPtr r = make_ring({"x"});
    CHECK(PolyMatrix::identity(5, r).determinant() == Poly::constant(GaussRat(1), r));

    DnFamily fam = dn_family_full(6, 6);
    Poly det_b2 = dn_b2(fam).determinant();
    CHECK(det_b2 == Poly::constant(GaussRat(-1), fam.ring));

    CHECK_THROWS_AS(PolyMatrix(2, 3, r).determinant(), NotSquare);
}

TEST_CASE("adjugate_inverse examples") {
    DnFamily fam = dn_family_full(5, 4);
    PolyMatrix b3 = dn_b3(fam);
    CHECK(b3.determinant() == Poly::constant(GaussRat(-4), fam.ring));
    PolyMatrix inv = b3.adjugate_inverse();
    CHECK(b3 * inv == PolyMatrix::identity(4, fam.ring));
    CHECK(inv * b3 == PolyMatrix::identity(4, fam.ring));

    VarsPtr r = make_ring({"x"});
    CHECK(PolyMatrix::identity(3, r).adjugate_inverse() == PolyMatrix::identity(3, r));

    PolyMatrix bad = PolyMatrix::parse({{"x", "0"}, {"0", "1"}}, r);
    CHECK_THROWS_AS(bad.adjugate_inverse(), NonUnitDeterminant);
}

TEST_CASE("conjugation and block patterns") {
    DnFamily fam = dn_family_full(5, 5);
    PolyMatrix xi = fam.mf.split->xi;
    PolyMatrix m = conjugate(dn_b2(fam), xi);
    CHECK(m.block_pattern({{0, 1}, {2, 3}}));
    CHECK(m.block({0, 1}, {0, 1}) == dn_xi2(fam));
    CHECK(m.block({2, 3}, {2, 3}) == dn_xi2(fam));

    CHECK(conjugate(PolyMatrix::identity(4, fam.ring), xi) == xi);

    VarsPtr r = make_ring({"x", "y"});
    PolyMatrix dense = PolyMatrix::parse({{"x", "y"}, {"1", "x*y"}}, r);
    CHECK_FALSE(dense.block_pattern({{0}, {1}}));
    CHECK_THROWS_AS(dense.block_pattern({{0}}), BadIndex);
}

TEST_CASE("trace of the universal-flop Xi vanishes") {
    CHECK(universal_flop2().xi.trace().is_zero());
}

TEST_CASE("randomized matrix algebra") {
    std::mt19937_64 rng(13);
    VarsPtr ring = make_ring({"x", "y"});
    for (int trial = 0; trial < 60; ++trial) {
        PolyMatrix a = random_matrix(rng, 3, ring);
        PolyMatrix b = random_matrix(rng, 3, ring);
        PolyMatrix c = random_matrix(rng, 3, ring);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.determinant() * b.determinant() == (a * b).determinant());
    }
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix a = random_matrix(rng, 4, ring);
        PolyMatrix b = random_matrix(rng, 4, ring);
        CHECK(a.determinant() * b.determinant() == (a * b).determinant());
    }
}
