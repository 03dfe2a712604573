#include "mfk/serialize.hpp"

namespace mfk {

Json poly_to_json(const Poly& p) {
    Json j;
    j["vars"] = p.vars();
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json jt;
        jt["c"] = t.c.str();
        jt["e"] = t.exp;
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    VarsPtr ring = make_ring(j.at("vars").get<VarList>());
    Poly p(ring);
    for (const auto& jt : j.at("terms")) {
        GaussRat c = GaussRat::parse(jt.at("c").get<std::string>());
        std::vector<int> e = jt.at("e").get<std::vector<int>>();
        p += Poly::monomial(c, std::move(e), ring);
    }
    return p;
}

Json matrix_to_json(const PolyMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int c = 0; c < m.cols(); ++c) entries.push_back(poly_to_json(m.at(i, c)));
    }
    j["entries"] = std::move(entries);
    return j;
}

PolyMatrix matrix_from_json(const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols)
        throw ParseError("matrix_from_json: entry count mismatch");
    std::vector<std::vector<Poly>> grid(rows);
    for (int i = 0; i < rows; ++i) {
        for (int c = 0; c < cols; ++c) grid[i].push_back(poly_from_json(entries[i * cols + c]));
    }
    return PolyMatrix::from_rows(grid);
}

Json ideal_to_json(const Ideal& I) {
    Json j;
    j["order"]["kind"] = I.order.kind == MonomialOrder::Kind::Grlex ? "grlex" : "elim";
    j["order"]["split"] = I.order.split;
    Json gens = Json::array();
    for (const auto& g : I.gens) gens.push_back(poly_to_json(g));
    j["gens"] = std::move(gens);
    return j;
}

Ideal ideal_from_json(const Json& j) {
    Ideal I;
    std::string kind = j.at("order").at("kind").get<std::string>();
    int split = j.at("order").value("split", 0);
    I.order = kind == "elim" ? MonomialOrder::elim(split) : MonomialOrder::grlex();
    for (const auto& jg : j.at("gens")) I.gens.push_back(poly_from_json(jg));
    if (I.gens.empty()) throw ParseError("ideal_from_json: no generators");
    I.vars = I.gens[0].vars_ptr();
    for (auto& g : I.gens) {
        I.vars = merge_rings(I.vars, g.vars_ptr());
    }
    for (auto& g : I.gens) g = g.reordered(I.vars);
    return I;
}

Json report_to_json(const Report& r) {
    Json j;
    j["id"] = r.id;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["pass"] = r.pass();
    return j;
}

Json chart_to_json(const Chart& c, const ResidualClass* cls) {
    Json j;
    j["source"] = c.source.id;
    j["side"] = c.side == Side::Psi ? "psi" : "phi";
    Json pivots = Json::array();
    for (int p : c.pivots) pivots.push_back(p + 1);
    j["pivots"] = std::move(pivots);
    j["unknowns"] = c.unknowns;
    Json raw = Json::object();
    for (size_t i = 0; i < c.raw.size(); ++i) raw[c.raw_labels[i]] = c.raw[i].text();
    j["raw_gens"] = std::move(raw);
    Json ext = Json::object();
    for (size_t i = 0; i < c.extended.size(); ++i)
        ext[c.extended_labels[i]] = c.extended[i].text();
    j["extended_gens"] = std::move(ext);
    Json log = Json::array();
    for (const auto& step : c.elim_log) {
        Json js;
        js["var"] = step.var;
        js["gen"] = step.gen;
        js["replacement"] = step.replacement.text();
        log.push_back(std::move(js));
    }
    j["elim_log"] = std::move(log);
    Json residual = Json::array();
    for (const auto& p : c.residual()) residual.push_back(p.text());
    j["residual"] = std::move(residual);
    if (cls) {
        Json jc;
        jc["kind"] = kind_name(cls->kind);
        jc["m"] = cls->m;
        jc["degenerate"] = cls->degenerate;
        jc["witness"] = cls->witness;
        j["classification"] = std::move(jc);
    }
    return j;
}

}  // namespace mfk
