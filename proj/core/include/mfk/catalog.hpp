#pragma once

#include <map>

#include "mfk/matfac.hpp"

namespace mfk {

/// One row of the catalog manifest; ell is the Dynkin coefficient of the
/// marked vertex in the maximal root (the factorization has size 2*ell).
struct FamilyInfo {
    std::string series;
    int n = 0;
    int k = 0;
    std::string label;
    int ell = 1;
    bool degenerate = false;
};

// ---------------------------------------------------------------------------
// A series
// ---------------------------------------------------------------------------

/// The 2x2 pair over x, y, z: phi = [[x, g_k],[h_{n-k}, y]],
/// psi = [[y, -g_k],[-h_{n-k}, x]], f = x*y - g_k*h_{n-k}.  Deformed families
/// carry free coefficients ac0..ac{k-1}, bc0..bc{n-k-2} with the top h
/// coefficient fixed to -ac{k-1}; the undeformed variant sets all to zero.
MatFac an_family(int n, int k, bool deformed);

/// Split form over u, v, z after x = u - v, y = u + v:
/// Xi = [[v, h_{n-k}],[g_k, -v]], f = u^2 - v^2 - g_k*h_{n-k}.
MatFac an_family_split(int n, int k, bool deformed);

Poly an_g(int n, int k, bool deformed, const VarsPtr& ring);
Poly an_h(int n, int k, bool deformed, const VarsPtr& ring);
VarsPtr an_ring(int n, int k, bool deformed, bool split_coords);

// ---------------------------------------------------------------------------
// Universal flop of length 2
// ---------------------------------------------------------------------------

struct UniversalFlop2 {
    VarsPtr ring;             // x y z t u v w
    Poly W;                   // x^2 + u y^2 + 2 v y z + w z^2 + (uw - v^2) t^2
    PolyMatrix xi;            // 4x4
    PolyMatrix coeff_matrix;  // quadratic-form coefficient matrix in x,y,z,t
    MatFac mf;                // split pair (x I - Xi, x I + Xi)
};

const UniversalFlop2& universal_flop2();

// ---------------------------------------------------------------------------
// D series invariant theory and families
// ---------------------------------------------------------------------------

/// Invariant-theory data for the k-th vertex of D_n.
///   f(U)   monic degree k (coefficients fc0..fc{k-1}, or numeric roots)
///   h(Z)   monic degree n-k-1 (hc0..; identically 1 for k=n-1, 0 for k=n)
///   eta    parameter (the constant 1 when k = n)
///   f(U) = Q(-U^2) + U P(-U^2),  Q(Z) = Z S(Z) + Q0
///   U P(Z) + Q(Z) = (U^2 + Z) G(Z,U) + f(U)
///   F(Z) = h (Q^2 + Z P^2) + eta^2 (2 Q0 S + Z S^2 + P^2),  gamma = eta Q0
struct DnInvariantData {
    int n = 0, k = 0;
    VarsPtr ring;  // U, Z, then parameters
    Poly f, h, eta, P, Q, S, Q0, G, F, gamma;
    bool degenerate = false;  // n - k <= 3
};

DnInvariantData dn_invariants(int n, int k);
DnInvariantData dn_invariants_from_roots(const std::vector<Rat>& roots, int k);

/// The substitution x=X, y=Y-eta*S(Z), z=Q(Z), t=P(Z), u=Z, v=eta, w=-h(Z)
/// into the universal-flop ring; target is X, Y, Z followed by parameters.
struct DnSubstitution {
    std::map<std::string, Poly> map;
    VarsPtr target;
};

DnSubstitution dn_mainsub(const DnInvariantData& d);

struct DnFamily {
    DnInvariantData inv;
    VarsPtr ring;  // X Y Z parameters
    Poly F, gamma;
    MatFac mf;  // 4x4 split factorization of X^2 + Y^2 Z + 2 gamma Y - F(Z)
};

DnFamily dn_family_full(int n, int k);
MatFac dn_family(int n, int k);

/// Gonzalez-Sprinberg--Verdier matrix for the k-th vertex of D_n, with
/// (-Z)^e expanded to signed monomials; ring is X, Y, Z (X unused).
PolyMatrix dn_gsv(int n, int k);
MatFac dn_gsv_matfac(int n, int k);

// Base-change fixtures and the expected 2x2 blocks for the reducible cases.
PolyMatrix dn_b0(const DnFamily& fam);
PolyMatrix dn_b1(const DnFamily& fam);
PolyMatrix dn_b2(const DnFamily& fam);
PolyMatrix dn_b3(const DnFamily& fam);
PolyMatrix dn_xi1(const DnFamily& fam);
PolyMatrix dn_xi2(const DnFamily& fam);
PolyMatrix dn_xi3(const DnFamily& fam);
PolyMatrix dn_xi4(const DnFamily& fam);

// ---------------------------------------------------------------------------
// E series (appendix tables) and stabilization
// ---------------------------------------------------------------------------

struct ESeriesEntry {
    std::string series;  // E6, E7, E8
    std::string label;   // e.g. "1+", "2'", "3''"
    int ell = 1;
    Poly g;  // Y^3+Z^4, Y^3+Y*Z^3, or Y^3+Z^5
    bool direct_xi = false;
    std::optional<PolyMatrix> phi, psi;  // ell x ell when the table gives a pair
    PolyMatrix xi;                       // 2*ell x 2*ell
    MatFac mf;                           // split factorization of X^2 + g
};

const ESeriesEntry& e_series(const std::string& series, const std::string& label);
const std::vector<std::string>& e_series_labels(const std::string& series);
Poly e_series_g(const std::string& series);

/// Verifies phi*psi = psi*phi = -g*I and returns the split factorization of
/// X^2 + g built from Xi = [[0, phi],[psi, 0]].
MatFac stabilize(const PolyMatrix& phi, const PolyMatrix& psi, const Poly& g);

// ---------------------------------------------------------------------------

std::vector<FamilyInfo> catalog_manifest();

}  // namespace mfk
