#include "mfk/catalog.hpp"

namespace mfk {

namespace {

void check_a_index(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw BadIndex("A family: need n >= 2, 1 <= k <= n-1 (got n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ")");
}

void check_d_index(int n, int k) {
    if (n < 2 || k < 1 || k > n)
        throw BadIndex("D family: need n >= 2, 1 <= k <= n (got n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ")");
}

}  // namespace

VarsPtr an_ring(int n, int k, bool deformed, bool split_coords) {
    check_a_index(n, k);
    VarList names = split_coords ? VarList{"u", "v", "z"} : VarList{"x", "y", "z"};
    if (deformed) {
        for (int i = 0; i < k; ++i) names.push_back("ac" + std::to_string(i));
        for (int i = 0; i < n - k - 1; ++i) names.push_back("bc" + std::to_string(i));
    }
    return make_ring(std::move(names));
}

Poly an_g(int n, int k, bool deformed, const VarsPtr& ring) {
    check_a_index(n, k);
    Poly z = Poly::var("z", ring);
    Poly g = z.pow(k);
    if (deformed) {
        for (int i = 0; i < k; ++i)
            g += Poly::var("ac" + std::to_string(i), ring) * z.pow(i);
    }
    return g;
}

Poly an_h(int n, int k, bool deformed, const VarsPtr& ring) {
    check_a_index(n, k);
    Poly z = Poly::var("z", ring);
    Poly h = z.pow(n - k);
    if (deformed) {
        // Constrained coefficient: the z^{n-k-1} coefficient is -ac{k-1} so
        // that z^{n-1} vanishes in g*h.
        h -= Poly::var("ac" + std::to_string(k - 1), ring) * z.pow(n - k - 1);
        for (int i = 0; i < n - k - 1; ++i)
            h += Poly::var("bc" + std::to_string(i), ring) * z.pow(i);
    }
    return h;
}

MatFac an_family(int n, int k, bool deformed) {
    VarsPtr ring = an_ring(n, k, deformed, false);
    Poly x = Poly::var("x", ring), y = Poly::var("y", ring);
    Poly g = an_g(n, k, deformed, ring);
    Poly h = an_h(n, k, deformed, ring);
    PolyMatrix phi = PolyMatrix::from_rows({{x, g}, {h, y}}).reordered(ring);
    PolyMatrix psi = PolyMatrix::from_rows({{y, -g}, {-h, x}}).reordered(ring);
    std::string id = "A n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     (deformed ? "" : " origin");
    return make_matfac(id, phi, psi, x * y - g * h);
}

MatFac an_family_split(int n, int k, bool deformed) {
    VarsPtr ring = an_ring(n, k, deformed, true);
    Poly u = Poly::var("u", ring), v = Poly::var("v", ring);
    Poly g = an_g(n, k, deformed, ring);
    Poly h = an_h(n, k, deformed, ring);
    PolyMatrix xi = PolyMatrix::from_rows({{v, h}, {g, -v}}).reordered(ring);
    std::string id = "A-split n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     (deformed ? "" : " origin");
    return make_split_matfac(id, "u", xi, u * u - v * v - g * h);
}

const UniversalFlop2& universal_flop2() {
    static const UniversalFlop2 uf = [] {
        UniversalFlop2 u;
        u.ring = make_ring({"x", "y", "z", "t", "u", "v", "w"});
        u.W = Poly::parse("x^2 + u*y^2 + 2*v*y*z + w*z^2 + u*w*t^2 - v^2*t^2", u.ring);
        u.xi = PolyMatrix::parse(
            {
                {"-v*t", "y", "z", "t"},
                {"-u*y - 2*v*z", "v*t", "-u*t", "z"},
                {"-w*z", "w*t", "-v*t", "-y"},
                {"-u*w*t", "-w*z", "u*y + 2*v*z", "v*t"},
            },
            u.ring);
        u.coeff_matrix = PolyMatrix::parse(
            {
                {"1", "0", "0", "0"},
                {"0", "u", "v", "0"},
                {"0", "v", "w", "0"},
                {"0", "0", "0", "u*w - v^2"},
            },
            u.ring);
        u.mf = make_split_matfac("UF2", "x", u.xi, u.W);
        return u;
    }();
    return uf;
}

namespace {

// P and Q of the even/odd split f(U) = Q(-U^2) + U P(-U^2).
void derive_pq(const Poly& f, const VarsPtr& ring, Poly& P, Poly& Q) {
    Poly Z = Poly::var("Z", ring);
    P = Poly(ring);
    Q = Poly(ring);
    int d = f.degree_in("U");
    for (int j = 0; j <= d; ++j) {
        Poly cj = f.coefficient_in("U", j);
        if (cj.is_zero()) continue;
        if (j % 2 == 0) {
            Poly t = cj * Z.pow(j / 2);
            Q += (j / 2) % 2 == 0 ? t : -t;
        } else {
            Poly t = cj * Z.pow((j - 1) / 2);
            P += ((j - 1) / 2) % 2 == 0 ? t : -t;
        }
    }
}

void finish_invariants(DnInvariantData& d) {
    const VarsPtr& ring = d.ring;
    Poly U = Poly::var("U", ring);
    Poly Z = Poly::var("Z", ring);
    derive_pq(d.f, ring, d.P, d.Q);
    d.Q0 = d.Q.coefficient_in("Z", 0);
    d.S = Poly::exact_divide(d.Q - d.Q0, Z);
    auto [G, rem] = Poly::divide_by_usq_plus_z(U * d.P + d.Q - d.f, "U", "Z");
    if (!rem.is_zero())
        throw Error("dn_invariants: U P + Q - f not divisible by U^2 + Z: " + rem.text());
    d.G = G;
    d.F = d.h * (d.Q * d.Q + Z * d.P * d.P) +
          d.eta * d.eta *
              (d.Q0.scaled(GaussRat(2)) * d.S + Z * d.S * d.S + d.P * d.P);
    d.gamma = d.eta * d.Q0;
    d.degenerate = (d.n - d.k) <= 3;
}

}  // namespace

DnInvariantData dn_invariants(int n, int k) {
    check_d_index(n, k);
    VarList names{"U", "Z"};
    for (int i = 0; i < k; ++i) names.push_back("fc" + std::to_string(i));
    for (int i = 0; i < n - k - 1; ++i) names.push_back("hc" + std::to_string(i));
    if (k < n) names.push_back("eta");
    VarsPtr ring = make_ring(std::move(names));

    DnInvariantData d;
    d.n = n;
    d.k = k;
    d.ring = ring;
    Poly U = Poly::var("U", ring);
    Poly Z = Poly::var("Z", ring);
    d.f = U.pow(k);
    for (int i = 0; i < k; ++i) d.f += Poly::var("fc" + std::to_string(i), ring) * U.pow(i);
    if (k == n) {
        d.h = Poly(ring);                            // empty tail: Z h + eta^2 = 1
        d.eta = Poly::constant(GaussRat(1), ring);
    } else if (k == n - 1) {
        d.h = Poly::constant(GaussRat(1), ring);
        d.eta = Poly::var("eta", ring);
    } else {
        d.h = Z.pow(n - k - 1);
        for (int i = 0; i < n - k - 1; ++i)
            d.h += Poly::var("hc" + std::to_string(i), ring) * Z.pow(i);
        d.eta = Poly::var("eta", ring);
    }
    finish_invariants(d);
    return d;
}

DnInvariantData dn_invariants_from_roots(const std::vector<Rat>& roots, int k) {
    int n = static_cast<int>(roots.size());
    check_d_index(n, k);
    VarsPtr ring = make_ring({"U", "Z"});
    DnInvariantData d;
    d.n = n;
    d.k = k;
    d.ring = ring;
    Poly U = Poly::var("U", ring);
    Poly Z = Poly::var("Z", ring);
    d.f = Poly::constant(GaussRat(1), ring);
    for (int j = 0; j < k; ++j) d.f = d.f * (U - Poly::constant(GaussRat(roots[j]), ring));
    Poly tail = Poly::constant(GaussRat(1), ring);
    Rat eta_val(1);
    for (int j = k; j < n; ++j) {
        tail = tail * (Z + Poly::constant(GaussRat(Rat(roots[j] * roots[j])), ring));
        eta_val *= -roots[j];
    }
    d.eta = Poly::constant(GaussRat(eta_val), ring);
    d.h = Poly::exact_divide(tail - d.eta * d.eta, Z);
    finish_invariants(d);
    return d;
}

DnSubstitution dn_mainsub(const DnInvariantData& d) {
    VarList names{"X", "Y", "Z"};
    for (const auto& v : *d.ring) {
        if (v != "U" && v != "Z") names.push_back(v);
    }
    VarsPtr target = make_ring(std::move(names));
    DnSubstitution sub;
    sub.target = target;
    Poly Y = Poly::var("Y", target);
    sub.map["x"] = Poly::var("X", target);
    sub.map["y"] = Y - (d.eta * d.S).reordered(target);
    sub.map["z"] = d.Q.reordered(target);
    sub.map["t"] = d.P.reordered(target);
    sub.map["u"] = Poly::var("Z", target);
    sub.map["v"] = d.eta.reordered(target);
    sub.map["w"] = (-d.h).reordered(target);
    return sub;
}

DnFamily dn_family_full(int n, int k) {
    DnFamily fam;
    fam.inv = dn_invariants(n, k);
    DnSubstitution sub = dn_mainsub(fam.inv);
    fam.ring = sub.target;
    fam.F = fam.inv.F.reordered(fam.ring);
    fam.gamma = fam.inv.gamma.reordered(fam.ring);
    PolyMatrix xi = universal_flop2().xi.substituted(sub.map, fam.ring);
    Poly X = Poly::var("X", fam.ring);
    Poly Y = Poly::var("Y", fam.ring);
    Poly Z = Poly::var("Z", fam.ring);
    Poly f = X * X + Y * Y * Z + fam.gamma.scaled(GaussRat(2)) * Y - fam.F;
    fam.mf = make_split_matfac("D n=" + std::to_string(n) + " k=" + std::to_string(k), "X", xi,
                               f);
    return fam;
}

MatFac dn_family(int n, int k) { return dn_family_full(n, k).mf; }

PolyMatrix dn_gsv(int n, int k) {
    check_d_index(n, k);
    VarsPtr ring = make_ring({"X", "Y", "Z"});
    Poly Y = Poly::var("Y", ring);
    Poly Z = Poly::var("Z", ring);
    auto neg_z_pow = [&](int e) {
        Poly p = Z.pow(e);
        return e % 2 == 0 ? p : -p;
    };
    auto sgn = [&](const Poly& p) { return (n - 1) % 2 == 0 ? p : -p; };
    PolyMatrix xi(4, 4, ring);
    if (k % 2 == 0) {
        Poly a = neg_z_pow(k / 2);
        Poly b = sgn(neg_z_pow(n - (k + 2) / 2));
        xi.set(0, 1, Y);
        xi.set(0, 2, a);
        xi.set(1, 0, -(Y * Z));
        xi.set(1, 3, a);
        xi.set(2, 0, b);
        xi.set(2, 3, -Y);
        xi.set(3, 1, b);
        xi.set(3, 2, Y * Z);
    } else {
        Poly a = neg_z_pow((k - 1) / 2);
        Poly c = neg_z_pow((k + 1) / 2);
        Poly b = sgn(neg_z_pow(n - (k + 3) / 2));
        Poly e = sgn(neg_z_pow(n - (k + 1) / 2));
        xi.set(0, 1, Y);
        xi.set(0, 3, a);
        xi.set(1, 0, -(Y * Z));
        xi.set(1, 2, c);
        xi.set(2, 1, b);
        xi.set(2, 3, -Y);
        xi.set(3, 0, e);
        xi.set(3, 2, Y * Z);
    }
    return xi;
}

MatFac dn_gsv_matfac(int n, int k) {
    PolyMatrix xi = dn_gsv(n, k);
    const VarsPtr& ring = xi.vars_ptr();
    Poly X = Poly::var("X", ring);
    Poly Y = Poly::var("Y", ring);
    Poly Z = Poly::var("Z", ring);
    Poly f = X * X + Y * Y * Z - Z.pow(n - 1);
    return make_split_matfac("Dgsv n=" + std::to_string(n) + " k=" + std::to_string(k), "X", xi,
                             f);
}

namespace {

Poly to_ring(const Poly& p, const DnFamily& fam) { return p.reordered(fam.ring); }

}  // namespace

PolyMatrix dn_b0(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly X = Poly::var("X", r), Y = Poly::var("Y", r);
    Poly eta = to_ring(fam.inv.eta, fam), Q0 = to_ring(fam.inv.Q0, fam);
    Poly one = Poly::constant(GaussRat(1), r), zero = Poly(r);
    return PolyMatrix::from_rows({{X - eta, Y, Q0, one},
                                  {-one, zero, zero, zero},
                                  {-Q0, one, zero, zero},
                                  {Y, zero, one, zero}})
        .reordered(r);
}

PolyMatrix dn_b1(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly X = Poly::var("X", r), Y = Poly::var("Y", r);
    Poly eta = to_ring(fam.inv.eta, fam), Q0 = to_ring(fam.inv.Q0, fam);
    Poly one = Poly::constant(GaussRat(1), r), zero = Poly(r);
    return PolyMatrix::from_rows({{one, zero, zero, zero},
                                  {-X - eta, Y, Q0, one},
                                  {-Q0, one, zero, zero},
                                  {Y, zero, one, zero}})
        .reordered(r);
}

PolyMatrix dn_b2(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    PolyMatrix b(4, 4, r);
    Poly one = Poly::constant(GaussRat(1), r);
    Poly half = Poly::constant(GaussRat::ratio(1, 2), r);
    b.set(0, 0, one);
    b.set(0, 3, -half);
    b.set(1, 1, one);
    b.set(1, 2, -(half * Poly::var("Z", r)));
    b.set(2, 2, one);
    b.set(3, 3, -one);
    return b;
}

PolyMatrix dn_b3(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly one = Poly::constant(GaussRat(1), r), zero = Poly(r);
    return PolyMatrix::from_rows({{one, zero, one, zero},
                                  {zero, -one, zero, one},
                                  {one, zero, -one, zero},
                                  {zero, -one, zero, -one}})
        .reordered(r);
}

PolyMatrix dn_xi1(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly Y = Poly::var("Y", r), Z = Poly::var("Z", r);
    Poly eta = to_ring(fam.inv.eta, fam), Q0 = to_ring(fam.inv.Q0, fam);
    Poly h = to_ring(fam.inv.h, fam);
    return PolyMatrix::from_rows({{eta - Q0 * Y, -Z - Q0 * Q0}, {Y * Y - h, -eta + Q0 * Y}})
        .reordered(r);
}

PolyMatrix dn_xi2(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly Y = Poly::var("Y", r), Z = Poly::var("Z", r);
    Poly P = to_ring(fam.inv.P, fam), Q = to_ring(fam.inv.Q, fam), S = to_ring(fam.inv.S, fam);
    return PolyMatrix::from_rows(
               {{-P, Y - S}, {-(Y * Z) + Z * S - Q.scaled(GaussRat(2)), P}})
        .reordered(r);
}

PolyMatrix dn_xi3(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly Y = Poly::var("Y", r), Z = Poly::var("Z", r);
    Poly P = to_ring(fam.inv.P, fam), Q = to_ring(fam.inv.Q, fam), S = to_ring(fam.inv.S, fam);
    Poly eta = to_ring(fam.inv.eta, fam);
    // Top-left entry is Q - eta*P: the block is traceless (it squares to a
    // scalar), fixed empirically from B3 Xi B3^{-1}.
    return PolyMatrix::from_rows(
               {{Q - eta * P, -Y + eta * S + P},
                {Z * (Y - eta * S + P) + (eta * Q).scaled(GaussRat(2)), eta * P - Q}})
        .reordered(r);
}

PolyMatrix dn_xi4(const DnFamily& fam) {
    const VarsPtr& r = fam.ring;
    Poly Y = Poly::var("Y", r), Z = Poly::var("Z", r);
    Poly P = to_ring(fam.inv.P, fam), Q = to_ring(fam.inv.Q, fam), S = to_ring(fam.inv.S, fam);
    Poly eta = to_ring(fam.inv.eta, fam);
    return PolyMatrix::from_rows(
               {{-(eta * P) - Q, -Y + eta * S - P},
                {Z * (Y - eta * S - P) + (eta * Q).scaled(GaussRat(2)), eta * P + Q}})
        .reordered(r);
}

MatFac stabilize(const PolyMatrix& phi, const PolyMatrix& psi, const Poly& g) {
    if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows())
        throw NotAFactorization("stabilize: phi/psi must be square of equal size");
    int ell = phi.rows();
    VarsPtr ring = merge_rings(merge_rings(phi.vars_ptr(), psi.vars_ptr()), g.vars_ptr());
    PolyMatrix want = PolyMatrix::identity(ell, ring).scaled(-g.reordered(ring));
    PolyMatrix pq = phi.reordered(ring) * psi.reordered(ring);
    PolyMatrix qp = psi.reordered(ring) * phi.reordered(ring);
    if (pq != want)
        throw NotAFactorization("stabilize: phi*psi != -g*I, got " + pq.text());
    if (qp != want)
        throw NotAFactorization("stabilize: psi*phi != -g*I, got " + qp.text());

    VarsPtr full = merge_rings(make_ring({"X"}), ring);
    PolyMatrix xi(2 * ell, 2 * ell, full);
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < ell; ++j) {
            xi.set(i, ell + j, phi.at(i, j));
            xi.set(ell + i, j, psi.at(i, j));
        }
    }
    Poly X = Poly::var("X", full);
    return make_split_matfac("stabilized", "X", xi, X * X + g.reordered(full));
}

std::vector<FamilyInfo> catalog_manifest() {
    std::vector<FamilyInfo> out;
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= n - 1; ++k) out.push_back({"A", n, k, "", 1, false});
    }
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            int ell = (k >= 2 && k <= n - 2) ? 2 : 1;
            out.push_back({"D", n, k, "", ell, n <= 3});
        }
    }
    for (const auto& series : {std::string("E6"), std::string("E7"), std::string("E8")}) {
        for (const auto& label : e_series_labels(series)) {
            const ESeriesEntry& e = e_series(series, label);
            out.push_back({series, 0, 0, label, e.ell, false});
        }
    }
    out.push_back({"UF2", 0, 0, "", 2, false});
    return out;
}

}  // namespace mfk
