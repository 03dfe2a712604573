#include "mfk/exporter.hpp"

#include "mfk/serialize.hpp"

namespace mfk {

namespace {

std::string text_appendix(const std::string& series) {
    std::string out = series + "  g = " + e_series_g(series).text() + "\n";
    for (const auto& label : e_series_labels(series)) {
        const ESeriesEntry& e = e_series(series, label);
        out += "\n";
        if (e.direct_xi) {
            out += "Xi[" + label + "] =\n" + e.mf.split->xi.text() + "\n";
        } else {
            out += "phi[" + label + "] =\n" + e.phi->text() + "\n";
            out += "psi[" + label + "] =\n" + e.psi->text() + "\n";
        }
    }
    return out;
}

std::string text_gsv() {
    std::string out = "GSV matrices for D_n, f = X^2 + Y^2*Z - Z^(n-1)\n";
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            out += "\nD n=" + std::to_string(n) + " k=" + std::to_string(k) + "  Xi =\n";
            out += dn_gsv(n, k).text() + "\n";
        }
    }
    return out;
}

std::string text_uf2() {
    const UniversalFlop2& uf = universal_flop2();
    std::string out = "Universal flop of length 2\n";
    out += "\nW = " + uf.W.text() + "\n";
    out += "\nXi =\n" + uf.xi.text() + "\n";
    out += "\ncoefficient matrix =\n" + uf.coeff_matrix.text() + "\n";
    return out;
}

Json json_appendix(const std::string& series) {
    Json j;
    j["series"] = series;
    j["g"] = poly_to_json(e_series_g(series));
    Json entries = Json::array();
    for (const auto& label : e_series_labels(series)) {
        const ESeriesEntry& e = e_series(series, label);
        Json je;
        je["label"] = label;
        je["ell"] = e.ell;
        if (e.direct_xi) {
            je["xi"] = matrix_to_json(e.mf.split->xi);
        } else {
            je["phi"] = matrix_to_json(*e.phi);
            je["psi"] = matrix_to_json(*e.psi);
        }
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json json_gsv() {
    Json j = Json::array();
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            Json je;
            je["n"] = n;
            je["k"] = k;
            je["xi"] = matrix_to_json(dn_gsv(n, k));
            j.push_back(std::move(je));
        }
    }
    return j;
}

Json json_uf2() {
    const UniversalFlop2& uf = universal_flop2();
    Json j;
    j["W"] = poly_to_json(uf.W);
    j["xi"] = matrix_to_json(uf.xi);
    j["coeff_matrix"] = matrix_to_json(uf.coeff_matrix);
    return j;
}

std::string tex_appendix(const std::string& series) {
    std::string out = "% " + series + ", g = " + e_series_g(series).text() + "\n";
    for (const auto& label : e_series_labels(series)) {
        const ESeriesEntry& e = e_series(series, label);
        if (e.direct_xi) {
            out += "\\Xi_{" + label + "} = " + matrix_tex(e.mf.split->xi) + "\n";
        } else {
            out += "\\varphi_{" + label + "} = " + matrix_tex(*e.phi) + "\n";
            out += "\\psi_{" + label + "} = " + matrix_tex(*e.psi) + "\n";
        }
    }
    return out;
}

std::string tex_gsv() {
    std::string out;
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            out += "% D n=" + std::to_string(n) + " k=" + std::to_string(k) + "\n";
            out += "\\Xi = " + matrix_tex(dn_gsv(n, k)) + "\n";
        }
    }
    return out;
}

std::string tex_uf2() {
    const UniversalFlop2& uf = universal_flop2();
    std::string out = "W = " + poly_tex(uf.W) + "\n";
    out += "\\Xi = " + matrix_tex(uf.xi) + "\n";
    return out;
}

}  // namespace

std::string poly_tex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string mono;
        for (size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            mono += p.vars()[i];
            if (t.exp[i] != 1) mono += "^{" + std::to_string(t.exp[i]) + "}";
        }
        bool neg = false;
        std::string cs;
        if (t.c.is_real()) {
            Rat r = t.c.re();
            neg = r < 0;
            Rat mag = neg ? Rat(-r) : r;
            if (!(mag == 1 && !mono.empty())) {
                if (denominator(mag) == 1) cs = numerator(mag).str();
                else cs = "\\tfrac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
            }
        } else {
            cs = "(" + rat_str(t.c.re()) + (t.c.im() < 0 ? "-" : "+") +
                 rat_str(t.c.im() < 0 ? Rat(-t.c.im()) : t.c.im()) + "i)";
        }
        std::string body = cs + mono;
        if (body.empty()) body = "1";
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        out += body;
        first = false;
    }
    return out;
}

std::string matrix_tex(const PolyMatrix& m) {
    std::string out = "\\begin{bmatrix}\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " & ";
            out += poly_tex(m.at(i, j));
        }
        out += " \\\\\n";
    }
    out += "\\end{bmatrix}";
    return out;
}

std::map<std::string, std::string> export_bundle(ExportFormat fmt) {
    std::map<std::string, std::string> out;
    for (const char* name : {"appendix_E6", "appendix_E7", "appendix_E8", "gsv_D", "uf2"})
        out[name] = export_one(name, fmt);
    return out;
}

std::string export_one(const std::string& name, ExportFormat fmt) {
    auto series_of = [&]() { return name.substr(std::string("appendix_").size()); };
    if (fmt == ExportFormat::Text) {
        if (name.rfind("appendix_", 0) == 0) return text_appendix(series_of());
        if (name == "gsv_D") return text_gsv();
        if (name == "uf2") return text_uf2();
    } else if (fmt == ExportFormat::Json) {
        Json j;
        if (name.rfind("appendix_", 0) == 0) j = json_appendix(series_of());
        else if (name == "gsv_D") j = json_gsv();
        else if (name == "uf2") j = json_uf2();
        else throw UnknownLabel("export: unknown bundle '" + name + "'");
        return j.dump(2) + "\n";
    } else {
        if (name.rfind("appendix_", 0) == 0) return tex_appendix(series_of());
        if (name == "gsv_D") return tex_gsv();
        if (name == "uf2") return tex_uf2();
    }
    throw UnknownLabel("export: unknown bundle '" + name + "'");
}

}  // namespace mfk
