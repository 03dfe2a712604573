#pragma once

#include "mfk/catalog.hpp"
#include "mfk/ideal.hpp"

namespace mfk {

enum class Side { Phi, Psi };

struct ElimStep {
    std::string var;
    std::string gen;
    Poly replacement;  // var = replacement
};

/// One affine chart of a Grassmann blowup.  Raw generators are the entries of
/// M*K where K carries an identity block at the pivot rows and unknowns
/// elsewhere; extended generators are admitted only through witness
/// identities.  `working` is the generator set the elimination acts on.
struct Chart {
    MatFac source;
    Side side = Side::Psi;
    std::vector<int> pivots;  // 0-based
    std::vector<std::string> unknowns;
    VarsPtr ring;
    PolyMatrix kernel_basis;

    std::vector<std::string> raw_labels;
    std::vector<Poly> raw;
    std::vector<std::string> extended_labels;
    std::vector<Poly> extended;

    std::vector<std::string> working_labels;
    std::vector<Poly> working;
    std::vector<ElimStep> elim_log;

    int ell() const { return static_cast<int>(pivots.size()); }
    Poly f() const { return source.f.reordered(ring); }
    const Poly& gen(const std::string& label) const;
    std::vector<Poly> residual() const;
    std::vector<std::string> residual_labels() const;
};

/// Pivot rows select the identity block; |pivots| must equal size/2.  The
/// unknown grid is named prefix + row + column ("a11".."a22"), or just the
/// prefix for 2x2 sources.  Raw generators are labeled l11..l42 (m11.. when
/// the prefix starts with 'b').
Chart make_chart(const MatFac& m, Side side, std::vector<int> pivots, const std::string& prefix);

/// Cofactor certificate Phi*(Psi*K) = f*K placing f in the raw chart ideal.
bool f_membership_certificate(const Chart& c);

struct Witness {
    std::string label;  // name of the admitted generator
    std::vector<std::pair<std::string, Poly>> combo;
    Poly divisor;
    Poly quotient;
};

/// Checks sum(cofactor * gen) = divisor * quotient for each witness and
/// appends the quotients as extended generators.  Throws WitnessFailed with
/// the residual difference.
Report verify_witnesses(Chart& c, const std::vector<Witness>& ws);

/// Alternative admission route: certifies divisor * quotient as a member of
/// the raw chart ideal by Groebner reduction, then appends the quotient.
/// Throws WitnessFailed when the product does not reduce to zero.
Report admit_by_membership(Chart& c, const std::string& label, const Poly& divisor,
                           const Poly& quotient, const BuchbergerCaps& caps = {});

struct GenerationIdentity {
    std::string target;  // raw generator label
    std::vector<std::pair<std::string, Poly>> combo;
};

/// Checks each raw generator equals the stated combination of the extended
/// basis.  Throws GenerationFailed on the first mismatch.
Report verify_generation(const Chart& c, const std::vector<GenerationIdentity>& ids);

void set_working(Chart& c, const std::vector<std::string>& labels);

/// Eliminates plan entries (variable, generator label) in order.  The chosen
/// generator must be degree 1 in the variable with a constant unit
/// coefficient; the generator is consumed and the variable substituted out of
/// the working set.
void eliminate(Chart& c, const std::vector<std::pair<std::string, std::string>>& plan);

struct ResidualClass {
    enum class Kind { A, D, Smooth, Unknown };
    Kind kind = Kind::Unknown;
    int m = 0;
    bool degenerate = false;
    std::string witness;
};

std::string kind_name(ResidualClass::Kind k);

struct ResidualHint {
    ResidualClass::Kind kind;
    int m;
    bool degenerate;
    Poly expected;
    std::string renaming;
};

ResidualClass classify_residual(const Chart& c);
ResidualClass classify_residual(const Chart& c, const ResidualHint& hint);

/// x*y - f, the A-type versal normal form.
Poly a_versal_form(const Poly& x, const Poly& y, const Poly& f);
/// X^2 + Y^2 Z + 2 gamma Y - F, the D-type versal normal form.
Poly d_versal_form(const Poly& X, const Poly& Y, const Poly& Z, const Poly& gamma,
                   const Poly& F);

// Fixtures for the universal-flop charts (which = 1 or 2), parsed in the
// given chart ring.
std::vector<Witness> flop_witnesses(const VarsPtr& chart_ring, int which);
std::vector<GenerationIdentity> flop_generation(const VarsPtr& chart_ring, int which);
std::vector<std::string> flop_basis_labels(int which);
std::vector<std::pair<std::string, std::string>> flop_elim_plan(int which);

// The same fixtures pushed through the D_n substitution.
std::vector<Witness> dn_witnesses(const DnFamily& fam, const VarsPtr& chart_ring, int which);
std::vector<GenerationIdentity> dn_generation(const DnFamily& fam, const VarsPtr& chart_ring,
                                              int which);

struct ChartRun {
    Chart chart;
    Report report;  // f-membership, witnesses, generation, elimination, classification
    ResidualClass cls;
};

ChartRun run_flop_chart(int which);
std::vector<Chart> flop_smoke_charts();
ChartRun run_a_chart(int n, int k, int which);
ChartRun run_d_chart1(int n, int k);

struct TyurinaRun {
    Chart chart;
    Report report;
    ResidualClass cls;
    Poly mu_tilde;
    Poly y_tilde;
};

TyurinaRun run_d_chart2(int n, int k);

/// Forms mu~_{1,2} = mu_{1,2} - G(Z, b22) mu_3 on the prepared second chart
/// and verifies mu~_{1,2} = Y~ b12 + f(b22).  Throws IdentityFailed.
Report tyurina(Chart& c, const DnFamily& fam, const Poly* G_override = nullptr);

/// Restricts the chart-1 extended ideal to x=y=z=t=0 and checks it equals the
/// principal ideal of the conic w + a22^2 + a12^2 u - 2 a12 v.
Report conic_fiber_check();

/// The matrix-form identity: (y, x+vt) equals [[-z,-t],[ut,-z]] (a12,a22)^T
/// modulo the extended chart ideal (literally the basis generators).
Report matrixform_check();

/// Phi-side raw chart generators equal minus the x -> -x image of the
/// Psi-side generators, for every pivot pattern.
Report side_symmetry_check();

}  // namespace mfk
