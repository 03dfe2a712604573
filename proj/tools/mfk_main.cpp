// mfk -- exact matrix-factorization engine for ADE singularities and flops.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// error (engine exception, Groebner cap exceeded).

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>

#include "mfk/exporter.hpp"
#include "mfk/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : mfk::Error {
    using Error::Error;
};

void write_or_print(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mfk::Error("cannot open '" + path + "' for writing");
    out << payload;
}

mfk::ExportFormat parse_format(const std::string& fmt) {
    if (fmt == "text") return mfk::ExportFormat::Text;
    if (fmt == "json") return mfk::ExportFormat::Json;
    if (fmt == "tex") return mfk::ExportFormat::Tex;
    throw UsageError("unknown format '" + fmt + "'");
}

// Label aliases: trailing p/pp stand for the primes, so 2p == 2' etc.
std::string canonical_label(std::string label) {
    auto replace_suffix = [&](const char* from, const char* to) {
        size_t n = std::string(from).size();
        if (label.size() > n && label.compare(label.size() - n, n, from) == 0)
            label = label.substr(0, label.size() - n) + to;
    };
    replace_suffix("pp", "''");
    replace_suffix("p", "'");
    return label;
}

void check_a_bounds(int n, int k) {
    if (n < 2 || n > 32)
        throw UsageError("A series supported for 2 <= n <= 32 (got n=" + std::to_string(n) +
                         ")");
    if (k < 1 || k > n - 1) throw UsageError("A series needs 1 <= k <= n-1");
}

void check_d_bounds(int n, int k) {
    if (n < 2 || n > 16)
        throw UsageError("D series supported for 2 <= n <= 16 (got n=" + std::to_string(n) +
                         ")");
    if (k < 1 || k > n) throw UsageError("D series needs 1 <= k <= n");
}

int cmd_catalog_list(bool as_json) {
    auto manifest = mfk::catalog_manifest();
    if (as_json) {
        mfk::Json j = mfk::Json::array();
        for (const auto& f : manifest) {
            mfk::Json jf;
            jf["series"] = f.series;
            if (f.n) jf["n"] = f.n;
            if (f.k) jf["k"] = f.k;
            if (!f.label.empty()) jf["label"] = f.label;
            jf["ell"] = f.ell;
            jf["degenerate"] = f.degenerate;
            j.push_back(std::move(jf));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& f : manifest) {
            std::cout << f.series;
            if (f.n) std::cout << " n=" << f.n << " k=" << f.k;
            if (!f.label.empty()) std::cout << " [" << f.label << "]";
            std::cout << "  ell=" << f.ell;
            if (f.degenerate) std::cout << "  (degenerate)";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

void print_matfac_text(const mfk::MatFac& m) {
    std::cout << m.id << "\n";
    std::cout << "f = " << m.f.text() << "\n";
    std::cout << "phi =\n" << m.phi.text() << "\n";
    std::cout << "psi =\n" << m.psi.text() << "\n";
    if (m.split) std::cout << "Xi =\n" << m.split->xi.text() << "\n";
}

mfk::Json matfac_json(const mfk::MatFac& m) {
    mfk::Json j;
    j["id"] = m.id;
    j["size"] = m.size;
    j["f"] = mfk::poly_to_json(m.f);
    j["phi"] = mfk::matrix_to_json(m.phi);
    j["psi"] = mfk::matrix_to_json(m.psi);
    if (m.split) {
        j["split"]["x"] = m.split->x_name;
        j["split"]["xi"] = mfk::matrix_to_json(m.split->xi);
    }
    return j;
}

int cmd_catalog_show(const std::string& series, int n, int k, std::string label, bool origin,
                     bool split, const std::string& fmt) {
    mfk::ExportFormat format = parse_format(fmt);
    std::vector<mfk::MatFac> items;
    if (series == "A") {
        check_a_bounds(n, k);
        items.push_back(split ? mfk::an_family_split(n, k, !origin)
                              : mfk::an_family(n, k, !origin));
    } else if (series == "D") {
        check_d_bounds(n, k);
        items.push_back(mfk::dn_family(n, k));
    } else if (series == "Dgsv") {
        check_d_bounds(n, k);
        items.push_back(mfk::dn_gsv_matfac(n, k));
    } else if (series == "UF2") {
        const auto& uf = mfk::universal_flop2();
        if (format == mfk::ExportFormat::Text) {
            std::cout << mfk::export_one("uf2", mfk::ExportFormat::Text);
            return kExitOk;
        }
        if (format == mfk::ExportFormat::Json) {
            std::cout << mfk::export_one("uf2", mfk::ExportFormat::Json);
            return kExitOk;
        }
        std::cout << mfk::export_one("uf2", mfk::ExportFormat::Tex);
        (void)uf;
        return kExitOk;
    } else if (series == "E6" || series == "E7" || series == "E8") {
        if (label.empty()) throw UsageError("--label required for E series");
        const auto& e = mfk::e_series(series, canonical_label(label));
        if (format == mfk::ExportFormat::Text) {
            if (!e.direct_xi) {
                std::cout << "phi[" << e.label << "] =\n" << e.phi->text() << "\n";
                std::cout << "psi[" << e.label << "] =\n" << e.psi->text() << "\n";
            }
            std::cout << "Xi[" << e.label << "] =\n" << e.xi.text() << "\n";
            std::cout << "g = " << e.g.text() << "\n";
            return kExitOk;
        }
        items.push_back(e.mf);
    } else {
        throw UsageError("unknown series '" + series + "'");
    }
    for (const auto& m : items) {
        if (format == mfk::ExportFormat::Text) {
            print_matfac_text(m);
        } else if (format == mfk::ExportFormat::Json) {
            std::cout << matfac_json(m).dump(2) << "\n";
        } else {
            std::cout << "\\Phi = " << mfk::matrix_tex(m.phi) << "\n";
            std::cout << "\\Psi = " << mfk::matrix_tex(m.psi) << "\n";
        }
    }
    return kExitOk;
}

// Exit-code triage for suite records: engine exceptions are internal errors.
int report_exit_code(const mfk::RunReport& rep) {
    bool internal = false;
    for (const auto& r : rep.records) {
        if (!r.pass && (r.detail.rfind("exception: ", 0) == 0 ||
                        r.detail.rfind("cap-exceeded: ", 0) == 0))
            internal = true;
    }
    if (internal) return kExitInternal;
    return rep.pass() ? kExitOk : kExitVerifyFailed;
}

void print_report(const mfk::RunReport& rep) {
    for (const auto& r : rep.records) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
    }
    std::cout << rep.suite << ": " << rep.passed() << "/" << rep.records.size() << " passed\n";
}

int cmd_verify(const std::string& suite, const mfk::SuiteOptions& opt,
               const std::string& json_path) {
    mfk::RunReport rep = mfk::run_suite(suite, opt);
    print_report(rep);
    if (!json_path.empty()) write_or_print(rep.to_json().dump(2) + "\n", json_path);
    return report_exit_code(rep);
}

int cmd_oracle(const mfk::SuiteOptions& opt, const std::string& json_path) {
    mfk::RunReport rep = mfk::oracle_suite(opt);
    print_report(rep);
    if (!json_path.empty()) write_or_print(rep.to_json().dump(2) + "\n", json_path);
    return report_exit_code(rep);
}

int cmd_blowup(const std::string& series, int n, int k, int chart,
               const std::string& pivots_arg, const std::string& json_path) {
    if (chart != 1 && chart != 2) throw UsageError("--chart must be 1 or 2");
    mfk::Json out;
    bool pass = true;
    if (series == "UF2" && !pivots_arg.empty()) {
        std::vector<int> pivots;
        std::string tok;
        for (char c : pivots_arg + ",") {
            if (c == ',') {
                if (!tok.empty()) pivots.push_back(std::stoi(tok) - 1);
                tok.clear();
            } else {
                tok += c;
            }
        }
        mfk::Chart ch =
            mfk::make_chart(mfk::universal_flop2().mf, mfk::Side::Psi, pivots, "a");
        pass = mfk::f_membership_certificate(ch);
        mfk::ResidualClass cls = mfk::classify_residual(ch);
        out = mfk::chart_to_json(ch, &cls);
        out["f_membership"] = pass;
    } else if (series == "UF2") {
        mfk::ChartRun run = mfk::run_flop_chart(chart);
        pass = run.report.pass();
        out = mfk::chart_to_json(run.chart, &run.cls);
        out["report"] = mfk::report_to_json(run.report);
    } else if (series == "A") {
        check_a_bounds(n, k);
        mfk::ChartRun run = mfk::run_a_chart(n, k, chart);
        pass = run.report.pass();
        out = mfk::chart_to_json(run.chart, &run.cls);
        out["report"] = mfk::report_to_json(run.report);
    } else if (series == "D") {
        check_d_bounds(n, k);
        if (k < 2 || k > n - 2)
            throw UsageError("D blowup charts need 2 <= k <= n-2");
        if (chart == 1) {
            mfk::ChartRun run = mfk::run_d_chart1(n, k);
            pass = run.report.pass();
            out = mfk::chart_to_json(run.chart, &run.cls);
            out["report"] = mfk::report_to_json(run.report);
        } else {
            mfk::TyurinaRun run = mfk::run_d_chart2(n, k);
            pass = run.report.pass();
            out = mfk::chart_to_json(run.chart, &run.cls);
            out["mu_tilde"] = run.mu_tilde.text();
            out["y_tilde"] = run.y_tilde.text();
            out["report"] = mfk::report_to_json(run.report);
        }
    } else {
        throw UsageError("blowup supports series UF2, A, D");
    }
    write_or_print(out.dump(2) + "\n", json_path);
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const std::string& what, const std::string& fmt, const std::string& out_dir) {
    mfk::ExportFormat format = parse_format(fmt);
    std::string ext = fmt == "text" ? ".txt" : fmt == "json" ? ".json" : ".tex";
    std::map<std::string, std::string> payloads;
    if (what == "all") {
        payloads = mfk::export_bundle(format);
    } else {
        payloads[what] = mfk::export_one(what, format);
    }
    for (const auto& [name, payload] : payloads) {
        if (out_dir.empty()) {
            std::cout << "=== " << name << " ===\n" << payload;
        } else {
            write_or_print(payload, out_dir + "/" + name + ext);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mfk: exact matrix factorizations for ADE singularities, their deformations, "
                 "and Grassmann blowup charts"};
    app.require_subcommand(1);

    // catalog
    auto* catalog = app.add_subcommand("catalog", "browse the factorization catalog");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog entries");
    bool list_json = false;
    cat_list->add_flag("--json", list_json, "emit JSON");
    auto* cat_show = catalog->add_subcommand("show", "print matrices for one entry");
    std::string series, label, show_fmt = "text";
    int n = 0, k = 1;
    bool origin = false, split = false;
    cat_show->add_option("--series", series, "A, D, Dgsv, E6, E7, E8, UF2")->required();
    cat_show->add_option("--n", n, "rank");
    cat_show->add_option("--k", k, "marked vertex");
    cat_show->add_option("--label", label, "E-series label (e.g. 3, 2', 1+)");
    cat_show->add_flag("--origin", origin, "undeformed A family");
    cat_show->add_flag("--split", split, "A family in split (u,v,z) coordinates");
    cat_show->add_option("--format", show_fmt, "text, json, tex");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", verify_json, v_series;
    int v_n = 0, v_k = 0, threads = 1;
    verify->add_option("--suite", suite,
                       "factorizations, witnesses, charts, decompositions, specializations, all");
    verify->add_option("--series", v_series, "restrict to one series");
    verify->add_option("--n", v_n, "restrict to one n");
    verify->add_option("--k", v_k, "restrict to one k");
    verify->add_option("--threads", threads, "parallel check fan-out (default 1)");
    verify->add_option("--json", verify_json, "write the JSON report to this file");

    // blowup
    auto* blowup = app.add_subcommand("blowup", "run a Grassmann blowup chart pipeline");
    std::string b_series = "UF2", b_pivots, blowup_json;
    int b_n = 0, b_k = 0, b_chart = 1;
    blowup->add_option("--series", b_series, "UF2, A, D");
    blowup->add_option("--n", b_n, "rank");
    blowup->add_option("--k", b_k, "marked vertex");
    blowup->add_option("--chart", b_chart, "chart number (1 or 2)");
    blowup->add_option("--pivots", b_pivots, "explicit pivot rows, e.g. 1,4 (UF2 smoke chart)");
    blowup->add_option("--json", blowup_json, "write the chart dump to this file");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Groebner cross-checks of chart residuals");
    std::string o_series, oracle_json;
    int o_n = 0, o_k = 0, o_threads = 1;
    int max_degree = 0, max_basis = 0;
    oracle->add_option("--series", o_series, "restrict to one series (A or D)");
    oracle->add_option("--n", o_n, "restrict to one n");
    oracle->add_option("--k", o_k, "restrict to one k");
    oracle->add_option("--max-degree", max_degree, "Groebner degree cap (default 24)");
    oracle->add_option("--max-basis", max_basis, "Groebner basis-size cap (default 500)");
    oracle->add_option("--threads", o_threads, "parallel fan-out");
    oracle->add_option("--json", oracle_json, "write the JSON report to this file");

    // export
    auto* exp = app.add_subcommand("export", "bit-exact catalog exports for golden files");
    std::string e_what = "all", e_fmt = "text", e_out;
    exp->add_option("--what", e_what,
                    "appendix_E6, appendix_E7, appendix_E8, gsv_D, uf2, or all");
    exp->add_option("--format", e_fmt, "text, json, tex");
    exp->add_option("--out", e_out, "output directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cat_list) return cmd_catalog_list(list_json);
        if (*cat_show) return cmd_catalog_show(series, n, k, label, origin, split, show_fmt);
        if (*verify) {
            const auto& names = mfk::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end())
                throw UsageError("unknown suite '" + suite + "'");
            mfk::SuiteOptions opt;
            opt.series = v_series;
            opt.n = v_n;
            opt.k = v_k;
            opt.threads = threads;
            opt.caps = mfk::caps_from_env();
            return cmd_verify(suite, opt, verify_json);
        }
        if (*blowup) return cmd_blowup(b_series, b_n, b_k, b_chart, b_pivots, blowup_json);
        if (*oracle) {
            mfk::SuiteOptions opt;
            opt.series = o_series;
            opt.n = o_n;
            opt.k = o_k;
            opt.threads = o_threads;
            opt.caps = mfk::caps_from_env();
            if (max_degree > 0) opt.caps.max_degree = max_degree;
            if (max_basis > 0) opt.caps.max_basis = max_basis;
            return cmd_oracle(opt, oracle_json);
        }
        if (*exp) return cmd_export(e_what, e_fmt, e_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mfk::UnknownLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mfk::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
