#include "mfk/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

namespace mfk {

int RunReport::passed() const {
    int n = 0;
    for (const auto& r : records) n += r.pass ? 1 : 0;
    return n;
}

int RunReport::failed() const { return static_cast<int>(records.size()) - passed(); }

Json RunReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["engine_version"] = kEngineVersion;
    Json recs = Json::array();
    for (const auto& r : records) {
        Json jr;
        jr["id"] = r.id;
        jr["pass"] = r.pass;
        jr["detail"] = r.detail;
        jr["ms"] = r.ms;
        recs.push_back(std::move(jr));
    }
    j["records"] = std::move(recs);
    j["summary"]["total"] = records.size();
    j["summary"]["passed"] = passed();
    j["summary"]["failed"] = failed();
    return j;
}

BuchbergerCaps caps_from_env() {
    BuchbergerCaps caps;
    const char* env = std::getenv("MFK_CAPS");
    if (!env) return caps;
    std::string s(env);
    size_t sep = s.find_first_of(",:");
    try {
        if (sep == std::string::npos) {
            caps.max_degree = std::stoi(s);
        } else {
            caps.max_degree = std::stoi(s.substr(0, sep));
            caps.max_basis = std::stoi(s.substr(sep + 1));
        }
    } catch (const std::exception&) {
        throw Error("MFK_CAPS: expected 'degree,basis', got '" + s + "'");
    }
    return caps;
}

namespace {

using CheckFn = std::function<std::pair<bool, std::string>()>;

struct Task {
    std::string id;
    std::string series;
    int n = 0;
    int k = 0;
    CheckFn fn;
};

bool task_selected(const Task& t, const SuiteOptions& opt) {
    if (!opt.series.empty() && t.series != opt.series) return false;
    if (opt.n != 0 && t.n != opt.n) return false;
    if (opt.k != 0 && t.k != opt.k) return false;
    return true;
}

std::vector<RunRecord> execute(const std::vector<Task>& tasks, int threads) {
    std::vector<RunRecord> out(tasks.size());
    auto run_one = [&](size_t i) {
        auto start = std::chrono::steady_clock::now();
        RunRecord r;
        r.id = tasks[i].id;
        try {
            auto [pass, detail] = tasks[i].fn();
            r.pass = pass;
            r.detail = detail;
        } catch (const CapExceeded& e) {
            r.pass = false;
            r.detail = std::string("cap-exceeded: ") + e.what();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
                   .count();
        out[i] = std::move(r);
    };
    if (threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(threads, static_cast<int>(tasks.size()));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_one(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

std::pair<bool, std::string> report_result(const Report& rep) {
    if (rep.pass()) return {true, ""};
    std::string detail;
    for (const auto& c : rep.checks) {
        if (!c.pass) detail += c.name + ": " + c.detail + "; ";
    }
    return {false, detail};
}

// --- factorization checks -------------------------------------------------

std::pair<bool, std::string> check_a_instance(int n, int k) {
    Report r1 = verify_factorization(an_family(n, k, true));
    if (!r1.pass()) return report_result(r1);
    Report r2 = verify_factorization(an_family(n, k, false));
    if (!r2.pass()) return report_result(r2);
    MatFac split = an_family_split(n, k, true);
    Report r3 = verify_factorization(split);
    if (!r3.pass()) return report_result(r3);
    // Coefficient of z^{n-1} in g*h vanishes.
    VarsPtr ring = an_ring(n, k, true, false);
    Poly fn = an_g(n, k, true, ring) * an_h(n, k, true, ring);
    if (!fn.coefficient_in("z", n - 1).is_zero())
        return {false, "z^(n-1) coefficient of g*h: " + fn.coefficient_in("z", n - 1).text()};
    if (!involution_check(split)) return {false, "split involution failed"};
    return {true, ""};
}

std::pair<bool, std::string> check_d_instance(int n, int k) {
    MatFac mf = dn_family(n, k);
    Report r = verify_factorization(mf);
    if (!r.pass()) return report_result(r);
    if (!involution_check(mf)) return {false, "involution failed"};
    return {true, ""};
}

std::pair<bool, std::string> check_xi_squared(const MatFac& mf) {
    const PolyMatrix& xi = mf.split->xi;
    const VarsPtr& ring = xi.vars_ptr();
    Poly x = Poly::var(mf.split->x_name, ring);
    Poly g = mf.f.reordered(ring) - x * x;
    PolyMatrix want = PolyMatrix::identity(xi.rows(), ring).scaled(-g);
    if (xi * xi != want) return {false, "Xi^2 != -g*I"};
    return {true, ""};
}

std::pair<bool, std::string> check_gsv_instance(int n, int k) {
    MatFac mf = dn_gsv_matfac(n, k);
    Report r = verify_factorization(mf);
    if (!r.pass()) return report_result(r);
    return check_xi_squared(mf);
}

std::pair<bool, std::string> check_e_instance(const std::string& series,
                                              const std::string& label) {
    const ESeriesEntry& e = e_series(series, label);
    Report r = verify_factorization(e.mf);
    if (!r.pass()) return report_result(r);
    auto xi2 = check_xi_squared(e.mf);
    if (!xi2.first) return xi2;
    if (!e.direct_xi) {
        VarsPtr yz = e.phi->vars_ptr();
        PolyMatrix want = PolyMatrix::identity(e.ell, yz).scaled(-e.g);
        if (*e.phi * *e.psi != want) return {false, "phi*psi != -g*I"};
        if (*e.psi * *e.phi != want) return {false, "psi*phi != -g*I"};
    }
    if (!involution_check(e.mf)) return {false, "involution failed"};
    return {true, ""};
}

std::vector<Task> factorization_tasks() {
    std::vector<Task> tasks;
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            tasks.push_back({"A n=" + std::to_string(n) + " k=" + std::to_string(k), "A", n, k,
                             [n, k] { return check_a_instance(n, k); }});
        }
    }
    tasks.push_back({"UF2 factorization", "UF2", 0, 0, [] {
                         return report_result(verify_factorization(universal_flop2().mf));
                     }});
    tasks.push_back({"UF2 -Xi^2 identity", "UF2", 0, 0, [] {
                         const UniversalFlop2& uf = universal_flop2();
                         Poly g = uf.W - Poly::var("x", uf.ring) * Poly::var("x", uf.ring);
                         PolyMatrix want = PolyMatrix::identity(4, uf.ring).scaled(g);
                         bool ok = -(uf.xi * uf.xi) == want;
                         return std::pair<bool, std::string>{ok, ok ? "" : "-Xi^2 mismatch"};
                     }});
    tasks.push_back({"UF2 discriminant", "UF2", 0, 0, [] {
                         const UniversalFlop2& uf = universal_flop2();
                         Poly det = uf.coeff_matrix.determinant();
                         Poly want = Poly::parse("u^2*w^2 - 2*u*v^2*w + v^4", uf.ring);
                         bool ok = det == want;
                         return std::pair<bool, std::string>{
                             ok, ok ? "" : "det = " + det.text()};
                     }});
    tasks.push_back({"UF2 trace zero", "UF2", 0, 0, [] {
                         bool ok = universal_flop2().xi.trace().is_zero();
                         return std::pair<bool, std::string>{ok, ok ? "" : "trace nonzero"};
                     }});
    tasks.push_back({"UF2 involution", "UF2", 0, 0, [] {
                         bool ok = involution_check(universal_flop2().mf);
                         return std::pair<bool, std::string>{ok, ok ? "" : "involution failed"};
                     }});
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            tasks.push_back({"D n=" + std::to_string(n) + " k=" + std::to_string(k), "D", n, k,
                             [n, k] { return check_d_instance(n, k); }});
        }
    }
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            tasks.push_back({"Dgsv n=" + std::to_string(n) + " k=" + std::to_string(k), "Dgsv",
                             n, k, [n, k] { return check_gsv_instance(n, k); }});
        }
    }
    for (const auto& series : {std::string("E6"), std::string("E7"), std::string("E8")}) {
        for (const auto& label : e_series_labels(series)) {
            tasks.push_back({series + "[" + label + "]", series, 0, 0,
                             [series, label] { return check_e_instance(series, label); }});
        }
    }
    return tasks;
}

// --- witness/generation checks ---------------------------------------------

std::pair<bool, std::string> check_flop_identities(int which) {
    Chart c = make_chart(universal_flop2().mf, Side::Psi, which == 1 ? std::vector<int>{0, 1}
                                                                     : std::vector<int>{0, 2},
                         which == 1 ? "a" : "b");
    verify_witnesses(c, flop_witnesses(c.ring, which));
    verify_generation(c, flop_generation(c.ring, which));
    return {true, ""};
}

std::pair<bool, std::string> check_d_identities(int n, int k, int which) {
    DnFamily fam = dn_family_full(n, k);
    Chart c = make_chart(fam.mf, Side::Psi,
                         which == 1 ? std::vector<int>{0, 1} : std::vector<int>{0, 2},
                         which == 1 ? "a" : "b");
    verify_witnesses(c, dn_witnesses(fam, c.ring, which));
    verify_generation(c, dn_generation(fam, c.ring, which));
    return {true, ""};
}

std::vector<Task> witness_tasks() {
    std::vector<Task> tasks;
    for (int which : {1, 2}) {
        tasks.push_back({"UF2 chart " + std::to_string(which) + " identities", "UF2", 0, 0,
                         [which] { return check_flop_identities(which); }});
    }
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int which : {1, 2}) {
                tasks.push_back({"D n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " chart " + std::to_string(which) + " identities",
                                 "D", n, k,
                                 [n, k, which] { return check_d_identities(n, k, which); }});
            }
        }
    }
    return tasks;
}

// --- chart pipeline checks --------------------------------------------------

std::string class_label(const ResidualClass& cls) {
    std::string s = kind_name(cls.kind);
    if (cls.kind == ResidualClass::Kind::A || cls.kind == ResidualClass::Kind::D)
        s += "(" + std::to_string(cls.m) + ")";
    if (cls.degenerate) s += " [degenerate]";
    return s;
}

std::vector<Task> chart_tasks() {
    std::vector<Task> tasks;
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            for (int which : {1, 2}) {
                tasks.push_back({"A n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " chart " + std::to_string(which),
                                 "A", n, k, [n, k, which] {
                                     ChartRun run = run_a_chart(n, k, which);
                                     auto res = report_result(run.report);
                                     if (res.first) res.second = "residual " + class_label(run.cls);
                                     return res;
                                 }});
            }
        }
    }
    for (int n = 4; n <= 8; ++n) {
        for (int k = 2; k <= n - 2; ++k) {
            tasks.push_back({"D n=" + std::to_string(n) + " k=" + std::to_string(k) + " chart 1",
                             "D", n, k, [n, k] {
                                 ChartRun run = run_d_chart1(n, k);
                                 auto res = report_result(run.report);
                                 if (res.first) res.second = "residual " + class_label(run.cls);
                                 return res;
                             }});
            tasks.push_back({"D n=" + std::to_string(n) + " k=" + std::to_string(k) + " chart 2",
                             "D", n, k, [n, k] {
                                 TyurinaRun run = run_d_chart2(n, k);
                                 auto res = report_result(run.report);
                                 if (res.first) res.second = "residual " + class_label(run.cls);
                                 return res;
                             }});
        }
    }
    for (int which : {1, 2}) {
        tasks.push_back({"UF2 chart " + std::to_string(which) + " pipeline", "UF2", 0, 0,
                         [which] {
                             ChartRun run = run_flop_chart(which);
                             return report_result(run.report);
                         }});
    }
    tasks.push_back({"UF2 remaining charts f-membership", "UF2", 0, 0, [] {
                         for (const Chart& c : flop_smoke_charts()) {
                             if (!f_membership_certificate(c))
                                 return std::pair<bool, std::string>{false, "certificate failed"};
                         }
                         return std::pair<bool, std::string>{true, ""};
                     }});
    tasks.push_back({"UF2 conic fiber", "UF2", 0, 0,
                     [] { return report_result(conic_fiber_check()); }});
    tasks.push_back({"UF2 matrix form", "UF2", 0, 0,
                     [] { return report_result(matrixform_check()); }});
    tasks.push_back({"UF2 side symmetry", "UF2", 0, 0,
                     [] { return report_result(side_symmetry_check()); }});
    return tasks;
}

// --- decomposition checks ----------------------------------------------------

// Reassembles the block-diagonal matrices and conjugates them back.
std::pair<bool, std::string> direct_sum_conjugates_back(const DnFamily& fam,
                                                        const std::vector<MatFac>& blocks,
                                                        const Partition& part,
                                                        const PolyMatrix& b_left,
                                                        const PolyMatrix& b_right) {
    const VarsPtr& r = fam.ring;
    PolyMatrix dphi(4, 4, r), dpsi(4, 4, r);
    for (size_t b = 0; b < part.size(); ++b) {
        for (size_t i = 0; i < part[b].size(); ++i) {
            for (size_t j = 0; j < part[b].size(); ++j) {
                dphi.set(part[b][i], part[b][j],
                         blocks[b].phi.at(static_cast<int>(i), static_cast<int>(j)));
                dpsi.set(part[b][i], part[b][j],
                         blocks[b].psi.at(static_cast<int>(i), static_cast<int>(j)));
            }
        }
    }
    if (b_left.adjugate_inverse() * dphi * b_right != fam.mf.phi.reordered(r))
        return {false, "direct sum does not conjugate back to phi"};
    if (b_right.adjugate_inverse() * dpsi * b_left != fam.mf.psi.reordered(r))
        return {false, "direct sum does not conjugate back to psi"};
    return {true, ""};
}

std::pair<bool, std::string> check_decompose_k1(int n) {
    DnFamily fam = dn_family_full(n, 1);
    std::vector<MatFac> blocks =
        decompose(fam.mf, dn_b0(fam), dn_b1(fam), {{0}, {1}, {2, 3}});
    const VarsPtr& r = fam.ring;
    Poly f = fam.mf.f.reordered(r);
    Poly one = Poly::constant(GaussRat(1), r);
    if (blocks[0].phi.at(0, 0) != f || blocks[0].psi.at(0, 0) != one)
        return {false, "block 1 is not (f, 1): phi=" + blocks[0].phi.at(0, 0).text()};
    if (blocks[1].phi.at(0, 0) != one || blocks[1].psi.at(0, 0) != f)
        return {false, "block 2 is not (1, f)"};
    if (!blocks[2].split) return {false, "block 3 lost split form"};
    if (blocks[2].split->xi.reordered(r) != dn_xi1(fam))
        return {false, "block 3 Xi != xi_1: " + blocks[2].split->xi.text()};
    return direct_sum_conjugates_back(fam, blocks, {{0}, {1}, {2, 3}}, dn_b0(fam), dn_b1(fam));
}

std::pair<bool, std::string> check_decompose_kn(int n) {
    DnFamily fam = dn_family_full(n, n);
    std::vector<MatFac> blocks = decompose(fam.mf, dn_b2(fam), dn_b2(fam), {{0, 1}, {2, 3}});
    const VarsPtr& r = fam.ring;
    PolyMatrix xi2 = dn_xi2(fam);
    for (int b = 0; b < 2; ++b) {
        if (!blocks[b].split) return {false, "block lost split form"};
        if (blocks[b].split->xi.reordered(r) != xi2)
            return {false, "block " + std::to_string(b + 1) +
                               " Xi != xi_2: " + blocks[b].split->xi.text()};
    }
    return direct_sum_conjugates_back(fam, blocks, {{0, 1}, {2, 3}}, dn_b2(fam), dn_b2(fam));
}

std::pair<bool, std::string> check_decompose_knm1(int n) {
    DnFamily fam = dn_family_full(n, n - 1);
    // Partition fixture determined empirically: B3 Xi B3^{-1} is already
    // block-diagonal in rows {1,2} / {3,4}, carrying xi_3 and xi_4.
    std::vector<MatFac> blocks = decompose(fam.mf, dn_b3(fam), dn_b3(fam), {{0, 1}, {2, 3}});
    const VarsPtr& r = fam.ring;
    if (!blocks[0].split || !blocks[1].split) return {false, "block lost split form"};
    if (blocks[0].split->xi.reordered(r) != dn_xi3(fam))
        return {false, "block {1,2} Xi != xi_3: " + blocks[0].split->xi.text()};
    if (blocks[1].split->xi.reordered(r) != dn_xi4(fam))
        return {false, "block {3,4} Xi != xi_4: " + blocks[1].split->xi.text()};
    return direct_sum_conjugates_back(fam, blocks, {{0, 1}, {2, 3}}, dn_b3(fam), dn_b3(fam));
}

std::vector<Task> decomposition_tasks() {
    std::vector<Task> tasks;
    for (int n = 4; n <= 8; ++n) {
        tasks.push_back({"D n=" + std::to_string(n) + " k=1 blocks (B0/B1)", "D", n, 1,
                         [n] { return check_decompose_k1(n); }});
        tasks.push_back({"D n=" + std::to_string(n) + " k=n blocks (B2)", "D", n, n,
                         [n] { return check_decompose_kn(n); }});
        tasks.push_back({"D n=" + std::to_string(n) + " k=n-1 blocks (B3)", "D", n, n - 1,
                         [n] { return check_decompose_knm1(n); }});
    }
    return tasks;
}

// --- specialization and invariant-theory checks -----------------------------

std::pair<bool, std::string> check_gsv_specialization(int n, int k) {
    DnFamily fam = dn_family_full(n, k);
    std::map<std::string, Poly> zero;
    for (const auto& v : *fam.ring) {
        if (v != "X" && v != "Y" && v != "Z") zero[v] = Poly(fam.ring);
    }
    VarsPtr xyz = make_ring({"X", "Y", "Z"});
    PolyMatrix specialized = fam.mf.split->xi.substituted(zero, xyz);
    PolyMatrix gsv = dn_gsv(n, k);
    if (specialized != gsv)
        return {false, "specialized Xi:\n" + specialized.text() + "\nGSV:\n" + gsv.text()};
    Poly f0 = fam.mf.f.substituted(zero, xyz);
    Poly want = Poly::parse("X^2 + Y^2*Z", xyz) - Poly::var("Z", xyz).pow(n - 1);
    if (f0 != want) return {false, "specialized f = " + f0.text()};
    return {true, ""};
}

std::pair<bool, std::string> check_f_identity(int n, int k) {
    DnInvariantData d = dn_invariants(n, k);
    Poly Z = Poly::var("Z", d.ring);
    Poly lhs = Z * d.F + d.gamma * d.gamma;
    Poly rhs = (Z * d.h + d.eta * d.eta) * (d.Q * d.Q + Z * d.P * d.P);
    if (lhs != rhs) return {false, "Z*F + gamma^2 != (Z*h + eta^2)(Q^2 + Z*P^2)"};
    // Defining identities of the even/odd split and of G.
    Poly U = Poly::var("U", d.ring);
    std::map<std::string, Poly> z_to_musq{{"Z", -(U * U)}};
    Poly recomposed = d.Q.substituted(z_to_musq, d.ring) +
                      U * d.P.substituted(z_to_musq, d.ring);
    if (recomposed != d.f) return {false, "f(U) != Q(-U^2) + U P(-U^2)"};
    if (d.Q != Z * d.S + d.Q0) return {false, "Q != Z*S + Q(0)"};
    if (U * d.P + d.Q != (U * U + Z) * d.G + d.f)
        return {false, "U P + Q != (U^2+Z) G + f"};
    return {true, ""};
}

std::pair<bool, std::string> check_invariants_worked_instance() {
    std::vector<Rat> roots{1, 2, 3, 4};
    DnInvariantData d = dn_invariants_from_roots(roots, 2);
    const VarsPtr& r = d.ring;
    if (d.eta != Poly::constant(GaussRat(12), r)) return {false, "eta = " + d.eta.text()};
    if (d.gamma != Poly::constant(GaussRat(24), r)) return {false, "gamma = " + d.gamma.text()};
    if (d.h != Poly::parse("Z + 25", r)) return {false, "h = " + d.h.text()};
    if (d.S != Poly::parse("-1", r)) return {false, "S = " + d.S.text()};
    if (d.P != Poly::parse("-3", r)) return {false, "P = " + d.P.text()};
    if (d.Q != Poly::parse("-Z + 2", r)) return {false, "Q = " + d.Q.text()};
    if (d.G != Poly::parse("-1", r)) return {false, "G = " + d.G.text()};
    Poly Z = Poly::var("Z", r);
    Poly qp = d.Q * d.Q + Z * d.P * d.P;
    if (qp != Poly::parse("Z^2 + 5*Z + 4", r))
        return {false, "Q^2 + Z P^2 = " + qp.text()};
    return {true, ""};
}

std::pair<bool, std::string> check_invariants_random(int trials) {
    std::mt19937_64 rng(20240811u);
    std::uniform_int_distribution<int> nd(2, 8), rd(-9, 9);
    for (int trial = 0; trial < trials; ++trial) {
        int n = nd(rng);
        std::uniform_int_distribution<int> kd(1, n);
        int k = kd(rng);
        std::vector<Rat> roots;
        for (int i = 0; i < n; ++i) roots.emplace_back(rd(rng));
        DnInvariantData d = dn_invariants_from_roots(roots, k);
        const VarsPtr& r = d.ring;
        Poly Z = Poly::var("Z", r);
        Poly prod = Poly::constant(GaussRat(1), r);
        Rat troot(1);
        for (const Rat& t : roots) {
            prod = prod * (Z + Poly::constant(GaussRat(Rat(t * t)), r));
            troot *= t;
        }
        Poly gamma_expected =
            Poly::constant(GaussRat(n % 2 == 0 ? troot : Rat(-troot)), r);
        std::string inst = " (n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " trial=" + std::to_string(trial) + ")";
        if (d.gamma != gamma_expected) return {false, "gamma != (-1)^n t_1..t_n" + inst};
        if (prod != Z * d.F + d.gamma * d.gamma)
            return {false, "prod(Z + t_j^2) != Z F + gamma^2" + inst};
        if (prod != (Z * d.h + d.eta * d.eta) * (d.Q * d.Q + Z * d.P * d.P))
            return {false, "prod != (Z h + eta^2)(Q^2 + Z P^2)" + inst};
        // delta_{2i} = sigma_i(t_1^2..t_n^2): coefficients of the product.
        std::vector<Rat> squares;
        for (const Rat& t : roots) squares.push_back(t * t);
        std::vector<Rat> sigma(n + 1, Rat(0));
        sigma[0] = 1;
        for (int i = 0; i < n; ++i) {
            for (int j = std::min(i + 1, n); j >= 1; --j) sigma[j] += sigma[j - 1] * squares[i];
        }
        for (int i = 1; i <= n; ++i) {
            Poly coeff = prod.coefficient_in("Z", n - i);
            if (coeff != Poly::constant(GaussRat(sigma[i]), r))
                return {false, "delta_{2i} != sigma_i(t^2) at i=" + std::to_string(i) + inst};
        }
    }
    return {true, ""};
}

std::pair<bool, std::string> check_uf2_d4_coordinates() {
    DnFamily fam = dn_family_full(4, 2);
    DnSubstitution sub = dn_mainsub(fam.inv);
    const UniversalFlop2& uf = universal_flop2();
    // Inverse coordinate change: X=x, Y=y-v, Z=u, eta=v, fc0=z+u, fc1=t,
    // hc0=-u-w.
    std::map<std::string, Poly> inv;
    inv["X"] = Poly::var("x", uf.ring);
    inv["Y"] = Poly::parse("y - v", uf.ring);
    inv["Z"] = Poly::var("u", uf.ring);
    inv["eta"] = Poly::var("v", uf.ring);
    inv["fc0"] = Poly::parse("z + u", uf.ring);
    inv["fc1"] = Poly::var("t", uf.ring);
    inv["hc0"] = Poly::parse("-u - w", uf.ring);
    for (const auto& v : *uf.ring) {
        Poly roundtrip = sub.map.at(v).substituted(inv, uf.ring);
        if (roundtrip != Poly::var(v, uf.ring))
            return {false, v + " -> " + roundtrip.text() + " after round trip"};
    }
    for (const auto& v : *fam.ring) {
        Poly roundtrip = inv.at(v).substituted(sub.map, fam.ring);
        if (roundtrip != Poly::var(v, fam.ring))
            return {false, v + " -> " + roundtrip.text() + " after round trip"};
    }
    return {true, ""};
}

std::vector<Task> specialization_tasks() {
    std::vector<Task> tasks;
    // k = n is excluded: eta is the constant 1 there, not a deformation
    // coordinate, so the family has no GSV origin.
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            tasks.push_back({"Dgsv specialization n=" + std::to_string(n) +
                                 " k=" + std::to_string(k),
                             "D", n, k, [n, k] { return check_gsv_specialization(n, k); }});
        }
    }
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            tasks.push_back({"D invariant identities n=" + std::to_string(n) +
                                 " k=" + std::to_string(k),
                             "D", n, k, [n, k] { return check_f_identity(n, k); }});
        }
    }
    tasks.push_back({"invariant worked instance t=(1,2,3,4)", "D", 4, 2,
                     [] { return check_invariants_worked_instance(); }});
    tasks.push_back({"invariant random roots (100 trials)", "D", 0, 0,
                     [] { return check_invariants_random(100); }});
    tasks.push_back({"UF2 = D4 k=2 coordinate change", "UF2", 4, 2,
                     [] { return check_uf2_d4_coordinates(); }});
    return tasks;
}

// --- oracle -------------------------------------------------------------------

std::pair<bool, std::string> oracle_a_chart(int n, int k, int which, const BuchbergerCaps& caps) {
    MatFac mf = an_family(n, k, true);
    Chart c = make_chart(mf, Side::Psi, which == 1 ? std::vector<int>{1} : std::vector<int>{0},
                         which == 1 ? "alpha" : "beta");
    std::vector<std::string> keep;
    std::string eliminated = which == 1 ? "x" : "y";
    for (const auto& v : *c.ring) {
        if (v != eliminated) keep.push_back(v);
    }
    Ideal raw{c.ring, MonomialOrder::grlex(), c.raw};
    Ideal elim = elimination_ideal(raw, keep, caps);
    Poly closed = which == 1 ? a_versal_form(Poly::var("y", c.ring),
                                             Poly::var("alpha", c.ring),
                                             an_g(n, k, true, c.ring))
                             : a_versal_form(Poly::var("x", c.ring), Poly::var("beta", c.ring),
                                             an_h(n, k, true, c.ring));
    Ideal closed_gb =
        buchberger(Ideal{elim.vars, elim.order, {closed.reordered(elim.vars)}}, caps);
    if (!same_ideal(elim, closed_gb))
        return {false, "elimination ideal differs from closed form"};
    if (elim.gens.size() != 1)
        return {false, "elimination ideal has " + std::to_string(elim.gens.size()) +
                           " generators"};
    return {true, ""};
}

std::pair<bool, std::string> oracle_d4_chart1(const BuchbergerCaps& caps) {
    DnFamily fam = dn_family_full(4, 2);
    Chart c = make_chart(fam.mf, Side::Psi, {0, 1}, "a");
    verify_witnesses(c, dn_witnesses(fam, c.ring, 1));
    std::vector<Poly> gens = c.extended;  // l1, l2, l3 first: they guide reduction
    gens.insert(gens.end(), c.raw.begin(), c.raw.end());
    std::vector<std::string> keep;
    for (const auto& v : *c.ring) {
        if (v != "X" && v != "Y" && v != "a11" && v != "a21") keep.push_back(v);
    }
    Ideal ext{c.ring, MonomialOrder::grlex(), gens};
    Ideal elim = elimination_ideal(ext, keep, caps);
    Poly lambda3 = d_versal_form(Poly::var("a22", c.ring), Poly::var("a12", c.ring),
                                 Poly::var("Z", c.ring), -fam.inv.eta.reordered(c.ring),
                                 fam.inv.h.reordered(c.ring));
    Ideal closed_gb =
        buchberger(Ideal{elim.vars, elim.order, {lambda3.reordered(elim.vars)}}, caps);
    if (!same_ideal(elim, closed_gb))
        return {false, "elimination ideal differs from lambda_3"};
    return {true, ""};
}

}  // namespace

RunReport oracle_suite(const SuiteOptions& opt) {
    std::vector<Task> tasks;
    BuchbergerCaps caps = opt.caps;
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            for (int which : {1, 2}) {
                tasks.push_back({"A n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " chart " + std::to_string(which) + " oracle",
                                 "A", n, k, [n, k, which, caps] {
                                     return oracle_a_chart(n, k, which, caps);
                                 }});
            }
        }
    }
    tasks.push_back(
        {"D4 k=2 chart 1 oracle", "D", 4, 2, [caps] { return oracle_d4_chart1(caps); }});

    std::vector<Task> selected;
    for (auto& t : tasks) {
        if (task_selected(t, opt)) selected.push_back(std::move(t));
    }
    RunReport rep;
    rep.suite = "oracle";
    rep.records = execute(selected, opt.threads);
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "factorizations", "witnesses", "charts", "decompositions", "specializations", "all"};
    return names;
}

RunReport run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<Task> tasks;
    auto append = [&](std::vector<Task> more) {
        for (auto& t : more) tasks.push_back(std::move(t));
    };
    if (name == "factorizations") {
        append(factorization_tasks());
    } else if (name == "witnesses") {
        append(witness_tasks());
    } else if (name == "charts") {
        append(chart_tasks());
    } else if (name == "decompositions") {
        append(decomposition_tasks());
    } else if (name == "specializations") {
        append(specialization_tasks());
    } else if (name == "all") {
        append(factorization_tasks());
        append(witness_tasks());
        append(chart_tasks());
        append(decomposition_tasks());
        append(specialization_tasks());
    } else {
        throw Error("run_suite: unknown suite '" + name + "'");
    }
    std::vector<Task> selected;
    for (auto& t : tasks) {
        if (task_selected(t, opt)) selected.push_back(std::move(t));
    }
    RunReport rep;
    rep.suite = name;
    rep.records = execute(selected, opt.threads);
    return rep;
}

}  // namespace mfk
