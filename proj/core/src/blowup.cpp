#include "mfk/blowup.hpp"

#include <algorithm>

namespace mfk {

const Poly& Chart::gen(const std::string& label) const {
    for (size_t i = 0; i < raw_labels.size(); ++i) {
        if (raw_labels[i] == label) return raw[i];
    }
    for (size_t i = 0; i < extended_labels.size(); ++i) {
        if (extended_labels[i] == label) return extended[i];
    }
    throw Error("Chart::gen: no generator '" + label + "'");
}

std::vector<Poly> Chart::residual() const {
    std::vector<Poly> out;
    for (const auto& p : working) {
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

std::vector<std::string> Chart::residual_labels() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < working.size(); ++i) {
        if (!working[i].is_zero()) out.push_back(working_labels[i]);
    }
    return out;
}

Chart make_chart(const MatFac& m, Side side, std::vector<int> pivots, const std::string& prefix) {
    if (m.size % 2 != 0) throw BadPivot("make_chart: factorization size must be even");
    int ell = m.size / 2;
    if (static_cast<int>(pivots.size()) != ell)
        throw BadPivot("make_chart: need " + std::to_string(ell) + " pivot rows, got " +
                       std::to_string(pivots.size()));
    std::sort(pivots.begin(), pivots.end());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < 0 || pivots[i] >= m.size) throw BadPivot("make_chart: pivot out of range");
        if (i > 0 && pivots[i] == pivots[i - 1]) throw BadPivot("make_chart: duplicate pivot");
    }

    Chart c;
    c.source = m;
    c.side = side;
    c.pivots = pivots;

    std::vector<int> free_rows;
    for (int r = 0; r < m.size; ++r) {
        if (!std::binary_search(pivots.begin(), pivots.end(), r)) free_rows.push_back(r);
    }
    for (size_t i = 0; i < free_rows.size(); ++i) {
        for (int j = 0; j < ell; ++j) {
            std::string name = ell == 1 ? prefix
                                        : prefix + std::to_string(i + 1) + std::to_string(j + 1);
            c.unknowns.push_back(name);
        }
    }
    c.ring = merge_rings(m.phi.vars_ptr(), make_ring(c.unknowns));

    PolyMatrix K(m.size, ell, c.ring);
    for (int j = 0; j < ell; ++j) K.set(pivots[j], j, Poly::constant(GaussRat(1), c.ring));
    for (size_t i = 0; i < free_rows.size(); ++i) {
        for (int j = 0; j < ell; ++j)
            K.set(free_rows[i], j, Poly::var(c.unknowns[i * ell + j], c.ring));
    }
    c.kernel_basis = K;

    const PolyMatrix& M = side == Side::Psi ? m.psi : m.phi;
    PolyMatrix prod = M.reordered(c.ring) * K;
    char letter = (!prefix.empty() && prefix[0] == 'b') ? 'm' : 'l';
    for (int i = 0; i < prod.rows(); ++i) {
        for (int j = 0; j < prod.cols(); ++j) {
            c.raw_labels.push_back(std::string(1, letter) + std::to_string(i + 1) +
                                   std::to_string(j + 1));
            c.raw.push_back(prod.at(i, j));
        }
    }
    c.working_labels = c.raw_labels;
    c.working = c.raw;
    return c;
}

bool f_membership_certificate(const Chart& c) {
    const PolyMatrix& M = c.side == Side::Psi ? c.source.psi : c.source.phi;
    const PolyMatrix& other = c.side == Side::Psi ? c.source.phi : c.source.psi;
    PolyMatrix lhs = other.reordered(c.ring) * (M.reordered(c.ring) * c.kernel_basis);
    PolyMatrix rhs = c.kernel_basis.scaled(c.f());
    return lhs == rhs;
}

Report verify_witnesses(Chart& c, const std::vector<Witness>& ws) {
    Report rep;
    rep.id = "witnesses";
    for (const auto& w : ws) {
        Poly sum(c.ring);
        for (const auto& [label, cof] : w.combo) sum += cof.reordered(c.ring) * c.gen(label);
        Poly want = w.divisor.reordered(c.ring) * w.quotient.reordered(c.ring);
        if (sum != want)
            throw WitnessFailed("witness " + w.label + ": residual " + (sum - want).text());
        c.extended_labels.push_back(w.label);
        c.extended.push_back(w.quotient.reordered(c.ring));
        rep.add("witness " + w.label, true);
    }
    return rep;
}

Report admit_by_membership(Chart& c, const std::string& label, const Poly& divisor,
                           const Poly& quotient, const BuchbergerCaps& caps) {
    Report rep;
    rep.id = "membership " + label;
    Ideal raw{c.ring, MonomialOrder::grlex(), c.raw};
    Ideal gb = buchberger(raw, caps);
    Poly product = divisor.reordered(c.ring) * quotient.reordered(c.ring);
    Poly nf = reduce(product, gb);
    if (!nf.is_zero())
        throw WitnessFailed("membership " + label + ": divisor*quotient reduces to " +
                            nf.text());
    c.extended_labels.push_back(label);
    c.extended.push_back(quotient.reordered(c.ring));
    rep.add("membership " + label, true);
    return rep;
}

Report verify_generation(const Chart& c, const std::vector<GenerationIdentity>& ids) {
    Report rep;
    rep.id = "generation";
    for (const auto& id : ids) {
        Poly sum(c.ring);
        for (const auto& [label, cof] : id.combo) sum += cof.reordered(c.ring) * c.gen(label);
        const Poly& want = c.gen(id.target);
        if (sum != want)
            throw GenerationFailed("generation " + id.target + ": residual " +
                                   (sum - want).text());
        rep.add("generation " + id.target, true);
    }
    return rep;
}

void set_working(Chart& c, const std::vector<std::string>& labels) {
    c.working_labels = labels;
    c.working.clear();
    for (const auto& l : labels) c.working.push_back(c.gen(l));
}

void eliminate(Chart& c, const std::vector<std::pair<std::string, std::string>>& plan) {
    for (const auto& [var, gen_label] : plan) {
        auto it = std::find(c.working_labels.begin(), c.working_labels.end(), gen_label);
        if (it == c.working_labels.end())
            throw Error("eliminate: generator '" + gen_label + "' not in working set");
        size_t idx = static_cast<size_t>(it - c.working_labels.begin());
        const Poly& p = c.working[idx];
        if (p.degree_in(var) != 1)
            throw NotLinearUnit("eliminate: " + gen_label + " is not degree 1 in " + var);
        Poly c1 = p.coefficient_in(var, 1);
        if (!c1.is_constant() || c1.is_zero())
            throw NotLinearUnit("eliminate: coefficient of " + var + " in " + gen_label +
                                " is " + c1.text() + ", not a unit constant");
        Poly rest = p.coefficient_in(var, 0);
        Poly replacement = rest.scaled(-(c1.constant_value().inverse()));
        std::map<std::string, Poly> bind{{var, replacement}};
        std::vector<std::string> labels;
        std::vector<Poly> gens;
        for (size_t i = 0; i < c.working.size(); ++i) {
            if (i == idx) continue;
            labels.push_back(c.working_labels[i]);
            gens.push_back(c.working[i].substituted(bind, c.ring));
        }
        c.working_labels = std::move(labels);
        c.working = std::move(gens);
        c.elim_log.push_back(ElimStep{var, gen_label, replacement});
    }
}

std::string kind_name(ResidualClass::Kind k) {
    switch (k) {
        case ResidualClass::Kind::A: return "A";
        case ResidualClass::Kind::D: return "D";
        case ResidualClass::Kind::Smooth: return "smooth";
        default: return "unknown";
    }
}

ResidualClass classify_residual(const Chart& c) {
    ResidualClass cls;
    if (c.residual().empty()) {
        cls.kind = ResidualClass::Kind::Smooth;
        cls.witness = "empty residual";
    } else {
        cls.witness = "no declared normal form";
    }
    return cls;
}

ResidualClass classify_residual(const Chart& c, const ResidualHint& hint) {
    ResidualClass cls;
    std::vector<Poly> res = c.residual();
    if (res.size() != 1) {
        cls.witness = "expected a single residual relation, found " + std::to_string(res.size());
        return cls;
    }
    if (res[0].reordered(c.ring) != hint.expected.reordered(c.ring)) {
        cls.witness = "residual " + res[0].text() + " does not match normal form " +
                      hint.expected.text();
        return cls;
    }
    cls.kind = hint.kind;
    cls.m = hint.m;
    cls.degenerate = hint.degenerate;
    cls.witness = hint.renaming;
    return cls;
}

Poly a_versal_form(const Poly& x, const Poly& y, const Poly& f) { return x * y - f; }

Poly d_versal_form(const Poly& X, const Poly& Y, const Poly& Z, const Poly& gamma,
                   const Poly& F) {
    return X * X + Y * Y * Z + gamma.scaled(GaussRat(2)) * Y - F;
}

// ---------------------------------------------------------------------------
// Universal-flop chart fixtures
// ---------------------------------------------------------------------------

namespace {

Witness parse_witness(const VarsPtr& r, const std::string& label,
                      std::vector<std::pair<const char*, const char*>> combo, const char* divisor,
                      const char* quotient) {
    Witness w;
    w.label = label;
    for (const auto& [gen, cof] : combo) w.combo.emplace_back(gen, Poly::parse(cof, r));
    w.divisor = Poly::parse(divisor, r);
    w.quotient = Poly::parse(quotient, r);
    return w;
}

GenerationIdentity parse_identity(const VarsPtr& r, const std::string& target,
                                  std::vector<std::pair<const char*, const char*>> combo) {
    GenerationIdentity id;
    id.target = target;
    for (const auto& [gen, cof] : combo) id.combo.emplace_back(gen, Poly::parse(cof, r));
    return id;
}

}  // namespace

std::vector<Witness> flop_witnesses(const VarsPtr& r, int which) {
    if (which == 1) {
        return {
            parse_witness(r, "l1",
                          {{"l11", "z"}, {"l12", "-u*t"}, {"l21", "-t"}, {"l22", "-z"}},
                          "z^2 + u*t^2", "a11 - a22"),
            parse_witness(r, "l2",
                          {{"l11", "-u*t"}, {"l12", "-u*z"}, {"l21", "-z"}, {"l22", "u*t"}},
                          "z^2 + u*t^2", "2*v - a12*u - a21"),
            parse_witness(r, "l3",
                          {{"l12", "a12*u*z + a22*u*t"},
                           {"l22", "-a12*u*t + a22*z"},
                           {"l32", "u*t"},
                           {"l42", "-z"}},
                          "z^2 + u*t^2", "a22^2 + a12^2*u - 2*a12*v + w"),
        };
    }
    if (which == 2) {
        return {
            parse_witness(r, "m1", {{"m11", "y"}, {"m12", "w*t"}, {"m31", "t"}, {"m32", "-y"}},
                          "y^2 + w*t^2", "b11 + b22"),
            parse_witness(r, "m2",
                          {{"m11", "-w*t"}, {"m12", "w*y"}, {"m31", "y"}, {"m32", "w*t"}},
                          "y^2 + w*t^2", "-b21 + b12*w"),
            parse_witness(r, "m3",
                          {{"m12", "-2*v*y + b12*w*y + b22*w*t"},
                           {"m32", "b12*w*t - b22*y"},
                           {"m22", "-w*t"},
                           {"m42", "y"}},
                          "y^2 + w*t^2", "b22^2 + u - 2*b12*v + b12^2*w"),
        };
    }
    throw BadIndex("flop_witnesses: chart must be 1 or 2");
}

std::vector<GenerationIdentity> flop_generation(const VarsPtr& r, int which) {
    if (which == 1) {
        return {
            parse_identity(r, "l11", {{"l22", "1"}, {"l1", "z"}, {"l2", "-t"}}),
            parse_identity(r, "l21", {{"l12", "-u"}, {"l1", "-u*t"}, {"l2", "-z"}}),
            parse_identity(r, "l31",
                           {{"l12", "a12*u - 2*v"},
                            {"l22", "a22"},
                            {"l1", "x - v*t"},
                            {"l2", "y"},
                            {"l3", "-z"}}),
            parse_identity(r, "l32", {{"l12", "-a22"}, {"l22", "a12"}, {"l3", "t"}}),
            parse_identity(r, "l41",
                           {{"l12", "a11*u"},
                            {"l22", "a21"},
                            {"l1", "-a12*u*z - a22*u*t + 2*v*z"},
                            {"l2", "a22*z - a12*u*t"},
                            {"l3", "-u*t"}}),
            parse_identity(r, "l42", {{"l12", "a12*u"}, {"l22", "a22"}, {"l3", "-z"}}),
        };
    }
    if (which == 2) {
        return {
            parse_identity(r, "m11", {{"m32", "1"}, {"m1", "y"}, {"m2", "-t"}}),
            parse_identity(r, "m21",
                           {{"m12", "-2*v + b12*w"},
                            {"m32", "-b22"},
                            {"m1", "x + v*t"},
                            {"m2", "-z"},
                            {"m3", "-y"}}),
            parse_identity(r, "m22", {{"m12", "b22"}, {"m32", "b12"}, {"m3", "-t"}}),
            parse_identity(r, "m31", {{"m12", "-w"}, {"m1", "w*t"}, {"m2", "y"}}),
            parse_identity(r, "m41",
                           {{"m12", "b22*w"},
                            {"m32", "b12*w"},
                            {"m1", "-w*z"},
                            {"m2", "-x - v*t"},
                            {"m3", "-w*t"}}),
            parse_identity(r, "m42", {{"m12", "2*v - b12*w"}, {"m32", "b22"}, {"m3", "y"}}),
        };
    }
    throw BadIndex("flop_generation: chart must be 1 or 2");
}

std::vector<std::string> flop_basis_labels(int which) {
    if (which == 1) return {"l12", "l22", "l1", "l2", "l3"};
    if (which == 2) return {"m12", "m32", "m1", "m2", "m3"};
    throw BadIndex("flop_basis_labels: chart must be 1 or 2");
}

std::vector<std::pair<std::string, std::string>> flop_elim_plan(int which) {
    if (which == 1)
        return {{"y", "l12"}, {"x", "l22"}, {"a11", "l1"}, {"a21", "l2"}, {"w", "l3"}};
    if (which == 2)
        return {{"z", "m12"}, {"x", "m32"}, {"b11", "m1"}, {"b21", "m2"}, {"u", "m3"}};
    throw BadIndex("flop_elim_plan: chart must be 1 or 2");
}

namespace {

// Flop chart ring for parsing the fixture cofactors before substitution.
VarsPtr flop_chart_ring(int which) {
    VarList names = *universal_flop2().ring;
    const char* const a_names[] = {"a11", "a12", "a21", "a22"};
    const char* const b_names[] = {"b11", "b12", "b21", "b22"};
    for (const char* u : (which == 1 ? a_names : b_names)) names.push_back(u);
    return make_ring(std::move(names));
}

Witness substitute_witness(const Witness& w, const std::map<std::string, Poly>& map,
                           const VarsPtr& target) {
    Witness out;
    out.label = w.label;
    for (const auto& [gen, cof] : w.combo)
        out.combo.emplace_back(gen, cof.substituted(map, target));
    out.divisor = w.divisor.substituted(map, target);
    out.quotient = w.quotient.substituted(map, target);
    return out;
}

GenerationIdentity substitute_identity(const GenerationIdentity& id,
                                       const std::map<std::string, Poly>& map,
                                       const VarsPtr& target) {
    GenerationIdentity out;
    out.target = id.target;
    for (const auto& [gen, cof] : id.combo)
        out.combo.emplace_back(gen, cof.substituted(map, target));
    return out;
}

}  // namespace

std::vector<Witness> dn_witnesses(const DnFamily& fam, const VarsPtr& chart_ring, int which) {
    VarsPtr flop_ring = flop_chart_ring(which);
    DnSubstitution sub = dn_mainsub(fam.inv);
    std::vector<Witness> out;
    for (const auto& w : flop_witnesses(flop_ring, which))
        out.push_back(substitute_witness(w, sub.map, chart_ring));
    return out;
}

std::vector<GenerationIdentity> dn_generation(const DnFamily& fam, const VarsPtr& chart_ring,
                                              int which) {
    VarsPtr flop_ring = flop_chart_ring(which);
    DnSubstitution sub = dn_mainsub(fam.inv);
    std::vector<GenerationIdentity> out;
    for (const auto& id : flop_generation(flop_ring, which))
        out.push_back(substitute_identity(id, sub.map, chart_ring));
    return out;
}

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

ChartRun run_flop_chart(int which) {
    const UniversalFlop2& uf = universal_flop2();
    std::vector<int> pivots = which == 1 ? std::vector<int>{0, 1} : std::vector<int>{0, 2};
    ChartRun run;
    run.chart = make_chart(uf.mf, Side::Psi, pivots, which == 1 ? "a" : "b");
    run.report.id = "UF2 chart " + std::to_string(which);
    run.report.add("f-membership certificate", f_membership_certificate(run.chart));

    Report w = verify_witnesses(run.chart, flop_witnesses(run.chart.ring, which));
    Report g = verify_generation(run.chart, flop_generation(run.chart.ring, which));
    for (auto& c : w.checks) run.report.checks.push_back(c);
    for (auto& c : g.checks) run.report.checks.push_back(c);

    set_working(run.chart, flop_basis_labels(which));
    eliminate(run.chart, flop_elim_plan(which));
    run.cls = classify_residual(run.chart);
    run.report.add("smooth chart", run.cls.kind == ResidualClass::Kind::Smooth,
                   run.cls.witness);
    return run;
}

std::vector<Chart> flop_smoke_charts() {
    const UniversalFlop2& uf = universal_flop2();
    std::vector<Chart> out;
    for (const auto& pivots :
         {std::vector<int>{0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
        out.push_back(make_chart(uf.mf, Side::Psi, pivots, "a"));
    }
    return out;
}

ChartRun run_a_chart(int n, int k, int which) {
    MatFac mf = an_family(n, k, true);
    ChartRun run;
    run.report.id = "A n=" + std::to_string(n) + " k=" + std::to_string(k) + " chart " +
                    std::to_string(which);
    if (which == 1) {
        run.chart = make_chart(mf, Side::Psi, {1}, "alpha");
        run.report.add("f-membership certificate", f_membership_certificate(run.chart));
        eliminate(run.chart, {{"x", "l21"}});
        Poly g = an_g(n, k, true, run.chart.ring);
        ResidualHint hint{ResidualClass::Kind::A, k - 1, false,
                          a_versal_form(Poly::var("y", run.chart.ring),
                                        Poly::var("alpha", run.chart.ring), g),
                          "x->y, y->alpha, f=g_k"};
        run.cls = classify_residual(run.chart, hint);
    } else if (which == 2) {
        run.chart = make_chart(mf, Side::Psi, {0}, "beta");
        run.report.add("f-membership certificate", f_membership_certificate(run.chart));
        eliminate(run.chart, {{"y", "m11"}});
        Poly h = an_h(n, k, true, run.chart.ring);
        ResidualHint hint{ResidualClass::Kind::A, n - k - 1, false,
                          a_versal_form(Poly::var("x", run.chart.ring),
                                        Poly::var("beta", run.chart.ring), h),
                          "x->x, y->beta, f=h_{n-k}"};
        run.cls = classify_residual(run.chart, hint);
    } else {
        throw BadIndex("run_a_chart: chart must be 1 or 2");
    }
    run.report.add("residual classified " + kind_name(run.cls.kind) + "(" +
                       std::to_string(run.cls.m) + ")",
                   run.cls.kind == ResidualClass::Kind::A, run.cls.witness);
    return run;
}

ChartRun run_d_chart1(int n, int k) {
    DnFamily fam = dn_family_full(n, k);
    ChartRun run;
    run.report.id = "D n=" + std::to_string(n) + " k=" + std::to_string(k) + " chart 1";
    run.chart = make_chart(fam.mf, Side::Psi, {0, 1}, "a");
    run.report.add("f-membership certificate", f_membership_certificate(run.chart));

    Report w = verify_witnesses(run.chart, dn_witnesses(fam, run.chart.ring, 1));
    Report g = verify_generation(run.chart, dn_generation(fam, run.chart.ring, 1));
    for (auto& c : w.checks) run.report.checks.push_back(c);
    for (auto& c : g.checks) run.report.checks.push_back(c);

    set_working(run.chart, flop_basis_labels(1));
    eliminate(run.chart, {{"a11", "l1"}, {"a21", "l2"}, {"Y", "l12"}, {"X", "l22"}});

    const VarsPtr& r = run.chart.ring;
    Poly expected = d_versal_form(Poly::var("a22", r), Poly::var("a12", r), Poly::var("Z", r),
                                  -fam.inv.eta.reordered(r), fam.inv.h.reordered(r));
    ResidualHint hint{ResidualClass::Kind::D, n - k, (n - k) <= 3, expected,
                      "X->a22, Y->a12, gamma->-eta, F->h"};
    run.cls = classify_residual(run.chart, hint);
    run.report.add("residual classified D(" + std::to_string(n - k) + ")" +
                       (run.cls.degenerate ? " [degenerate]" : ""),
                   run.cls.kind == ResidualClass::Kind::D, run.cls.witness);
    return run;
}

Report tyurina(Chart& c, const DnFamily& fam, const Poly* G_override) {
    Report rep;
    rep.id = "tyurina";
    auto find_working = [&](const std::string& label) -> const Poly& {
        for (size_t i = 0; i < c.working_labels.size(); ++i) {
            if (c.working_labels[i] == label) return c.working[i];
        }
        throw Error("tyurina: '" + label + "' not in working set (chart not prepared)");
    };
    const Poly& mu12 = find_working("m12");
    const Poly& mu3 = find_working("m3");

    const VarsPtr& r = c.ring;
    Poly b12 = Poly::var("b12", r);
    Poly b22 = Poly::var("b22", r);
    std::map<std::string, Poly> at_b22{{"U", b22}};
    Poly G = (G_override ? *G_override : fam.inv.G).substituted(at_b22, r);
    Poly f_at = fam.inv.f.substituted(at_b22, r);
    Poly eta = fam.inv.eta.reordered(r);
    Poly S = fam.inv.S.reordered(r);
    Poly h = fam.inv.h.reordered(r);

    Poly mu_tilde = mu12 - G * mu3;
    Poly y_tilde = Poly::var("Y", r) - eta * S + G * h * b12 + (eta * G).scaled(GaussRat(2));
    Poly expected = y_tilde * b12 + f_at;
    if (mu_tilde != expected)
        throw IdentityFailed("tyurina: mu~_{1,2} - (Y~ b12 + f(b22)) = " +
                             (mu_tilde - expected).text());
    rep.add("mu~_{1,2} = Y~*b12 + f(b22)", true);
    return rep;
}

TyurinaRun run_d_chart2(int n, int k) {
    DnFamily fam = dn_family_full(n, k);
    TyurinaRun run;
    run.report.id = "D n=" + std::to_string(n) + " k=" + std::to_string(k) + " chart 2";
    run.chart = make_chart(fam.mf, Side::Psi, {0, 2}, "b");
    run.report.add("f-membership certificate", f_membership_certificate(run.chart));

    Report w = verify_witnesses(run.chart, dn_witnesses(fam, run.chart.ring, 2));
    Report g = verify_generation(run.chart, dn_generation(fam, run.chart.ring, 2));
    for (auto& c : w.checks) run.report.checks.push_back(c);
    for (auto& c : g.checks) run.report.checks.push_back(c);

    set_working(run.chart, flop_basis_labels(2));
    eliminate(run.chart, {{"b11", "m1"}, {"b21", "m2"}});

    Report t = tyurina(run.chart, fam);
    for (auto& c : t.checks) run.report.checks.push_back(c);

    const VarsPtr& r = run.chart.ring;
    std::map<std::string, Poly> at_b22{{"U", Poly::var("b22", r)}};
    Poly G = fam.inv.G.substituted(at_b22, r);
    run.mu_tilde = run.chart.gen("m12").reordered(r) - G * run.chart.gen("m3").reordered(r);
    run.y_tilde = Poly::var("Y", r) - fam.inv.eta.reordered(r) * fam.inv.S.reordered(r) +
                  G * fam.inv.h.reordered(r) * Poly::var("b12", r) +
                  (fam.inv.eta.reordered(r) * G).scaled(GaussRat(2));
    run.cls.kind = ResidualClass::Kind::A;
    run.cls.m = k - 1;
    run.cls.degenerate = false;
    run.cls.witness = "x->-Y~, y->b12, z->b22, f monic degree k (overall sign -1)";
    run.report.add("residual classified A(" + std::to_string(k - 1) + ")", true,
                   run.cls.witness);
    return run;
}

Report conic_fiber_check() {
    Report rep;
    rep.id = "conic fiber";
    Chart c = make_chart(universal_flop2().mf, Side::Psi, {0, 1}, "a");
    verify_witnesses(c, flop_witnesses(c.ring, 1));

    std::map<std::string, Poly> origin;
    for (const char* v : {"x", "y", "z", "t"}) origin[v] = Poly(c.ring);

    bool raws_vanish = true;
    for (const auto& g : c.raw) {
        if (!g.substituted(origin, c.ring).is_zero()) raws_vanish = false;
    }
    rep.add("raw generators vanish at x=y=z=t=0", raws_vanish);

    set_working(c, {"l1", "l2", "l3"});
    for (auto& g : c.working) g = g.substituted(origin, c.ring);
    eliminate(c, {{"a11", "l1"}, {"a21", "l2"}});

    std::vector<Poly> res = c.residual();
    Poly conic = Poly::parse("w + a22^2 + a12^2*u - 2*a12*v", c.ring);
    rep.add("single residual relation", res.size() == 1);
    if (res.size() == 1) {
        Ideal lhs{c.ring, MonomialOrder::grlex(), res};
        Ideal rhs{c.ring, MonomialOrder::grlex(), {conic}};
        Ideal lhs_gb = buchberger(lhs);
        Ideal rhs_gb = buchberger(rhs);
        rep.add("residual ideal equals conic ideal", same_ideal(lhs_gb, rhs_gb));
    } else {
        rep.add("residual ideal equals conic ideal", false, "wrong residual count");
    }
    return rep;
}

Report matrixform_check() {
    Report rep;
    rep.id = "matrix form";
    Chart c = make_chart(universal_flop2().mf, Side::Psi, {0, 1}, "a");
    const VarsPtr& r = c.ring;
    Poly row1 = Poly::parse("y", r) - Poly::parse("-z*a12 - t*a22", r);
    Poly row2 = Poly::parse("x + v*t", r) - Poly::parse("u*t*a12 - z*a22", r);
    rep.add("row 1 reduces to l12", row1 == c.gen("l12"));
    rep.add("row 2 reduces to l22", row2 == c.gen("l22"));
    return rep;
}

Report side_symmetry_check() {
    Report rep;
    rep.id = "side symmetry";
    const UniversalFlop2& uf = universal_flop2();
    for (const auto& pivots :
         {std::vector<int>{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
        Chart cp = make_chart(uf.mf, Side::Psi, pivots, "a");
        Chart cf = make_chart(uf.mf, Side::Phi, pivots, "a");
        std::map<std::string, Poly> flip{{"x", -Poly::var("x", cp.ring)}};
        bool ok = true;
        for (size_t i = 0; i < cp.raw.size(); ++i) {
            if (cf.raw[i] != -(cp.raw[i].substituted(flip, cp.ring))) ok = false;
        }
        std::string name = "pivots {";
        for (size_t i = 0; i < pivots.size(); ++i)
            name += (i ? "," : "") + std::to_string(pivots[i] + 1);
        name += "}";
        rep.add(name, ok);
    }
    return rep;
}

}  // namespace mfk
