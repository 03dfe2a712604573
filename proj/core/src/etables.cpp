#include <map>

#include "mfk/catalog.hpp"

namespace mfk {

namespace {

using Grid = std::vector<std::vector<const char*>>;

struct RawEntry {
    const char* label;
    int ell;
    Grid phi;  // empty when the entry is a direct Xi
    Grid psi;
    Grid xi;  // only for direct-Xi entries
};

struct SeriesTable {
    const char* g;
    std::vector<RawEntry> entries;
};

const std::map<std::string, SeriesTable>& raw_tables() {
    static const std::map<std::string, SeriesTable> tables = {
        {"E6",
         {"Y^3 + Z^4",
          {
              {"1+", 1, {}, {}, {{"(0+1*i)*Z^2", "-Y^2"}, {"Y", "(0-1*i)*Z^2"}}},
              {"1-", 1, {}, {}, {{"(0-1*i)*Z^2", "-Y^2"}, {"Y", "(0+1*i)*Z^2"}}},
              {"2+",
               2,
               {},
               {},
               {{"(0+1*i)*Z^2", "0", "-Y^2", "0"},
                {"0", "(0+1*i)*Z^2", "Y*Z", "-Y^2"},
                {"Y", "0", "(0-1*i)*Z^2", "0"},
                {"Z", "Y", "0", "(0-1*i)*Z^2"}}},
              {"2-",
               2,
               {},
               {},
               {{"(0-1*i)*Z^2", "0", "-Y^2", "0"},
                {"0", "(0-1*i)*Z^2", "Y*Z", "-Y^2"},
                {"Y", "0", "(0+1*i)*Z^2", "0"},
                {"Z", "Y", "0", "(0+1*i)*Z^2"}}},
              {"3",
               3,
               {{"-Y^2", "-Z^3", "-Y*Z^2"}, {"Y*Z", "-Y^2", "Z^3"}, {"Z^2", "-Y*Z", "-Y^2"}},
               {{"Y", "0", "-Z^2"}, {"Z", "Y", "0"}, {"0", "-Z", "Y"}},
               {}},
              {"2",
               2,
               {{"Y^2", "-Z^3"}, {"-Z", "-Y"}},
               {{"-Y", "Z^3"}, {"Z", "Y^2"}},
               {}},
          }}},
        {"E7",
         {"Y^3 + Y*Z^3",
          {
              {"2'",
               2,
               {{"Y^2", "-Y*Z^2"}, {"-Z", "-Y"}},
               {{"-Y", "Y*Z^2"}, {"Z", "Y^2"}},
               {}},
              {"3'",
               3,
               {{"Y^2", "-Y*Z^2", "Y^2*Z"}, {"-Y*Z", "-Y^2", "-Y*Z^2"}, {"-Z^2", "-Y*Z", "Y^2"}},
               {{"-Y", "0", "Y*Z"}, {"Z", "Y", "0"}, {"0", "Z", "-Y"}},
               {}},
              {"4",
               4,
               {{"0", "0", "Y^2", "-Y*Z^2"},
                {"0", "0", "-Y*Z", "-Y^2"},
                {"Y", "-Z^2", "0", "Y*Z"},
                {"-Z", "-Y", "-Y", "0"}},
               {{"0", "-Y*Z", "-Y^2", "Y*Z^2"},
                {"Y", "0", "Y*Z", "Y^2"},
                {"-Y", "Z^2", "0", "0"},
                {"Z", "Y", "0", "0"}},
               {}},
              {"2''",
               2,
               {{"Y^2", "-Y*Z^2"}, {"-Y*Z", "-Y^2"}},
               {{"-Y", "Z^2"}, {"Z", "Y"}},
               {}},
              {"3",
               3,
               {{"-Y*Z", "-Y^2", "-Y*Z^2"}, {"Z^2", "Y*Z", "-Y^2"}, {"-Y", "Z^2", "-Y*Z"}},
               {{"0", "-Y*Z", "Y^2"}, {"Y", "0", "-Y*Z"}, {"Z", "Y", "0"}},
               {}},
              {"2",
               2,
               {{"-Y*Z", "Y^2"}, {"-Y", "-Z^2"}},
               {{"Z^2", "Y^2"}, {"-Y", "Y*Z"}},
               {}},
              {"1", 1, {{"-Y^2 - Z^3"}}, {{"Y"}}, {}},
          }}},
        {"E8",
         {"Y^3 + Z^5",
          {
              {"2'",
               2,
               {{"-Z^3", "Y^2"}, {"-Y", "-Z^2"}},
               {{"Z^2", "Y^2"}, {"-Y", "Z^3"}},
               {}},
              {"4'",
               4,
               {{"0", "-Z^3", "Y^2", "0"},
                {"-Z^2", "0", "-Y*Z", "-Y^2"},
                {"Y", "Z^2", "0", "-Z^3"},
                {"0", "-Y", "-Z^2", "0"}},
               {{"0", "Z^3", "-Y^2", "-Y*Z^2"},
                {"Z^2", "0", "0", "Y^2"},
                {"-Y", "0", "0", "Z^3"},
                {"Z", "Y", "Z^2", "0"}},
               {}},
              {"6",
               6,
               {{"0", "0", "0", "-Y^2", "-Y*Z^2", "-Z^4"},
                {"0", "0", "0", "-Z^3", "Y^2", "Y*Z^2"},
                {"0", "0", "0", "-Y*Z", "-Z^3", "Y^2"},
                {"-Y", "-Z^2", "0", "0", "0", "-Z^3"},
                {"0", "Y", "-Z^2", "Z^2", "0", "0"},
                {"-Z", "0", "Y", "0", "Z^2", "0"}},
               {{"0", "0", "Z^3", "Y^2", "Y*Z^2", "Z^4"},
                {"-Z^2", "0", "0", "Z^3", "-Y^2", "-Y*Z^2"},
                {"0", "Z^2", "0", "Y*Z", "Z^3", "-Y^2"},
                {"Y", "Z^2", "0", "0", "0", "0"},
                {"0", "-Y", "Z^2", "0", "0", "0"},
                {"Z", "0", "-Y", "0", "0", "0"}},
               {}},
              {"3''",
               3,
               {{"-Y^2", "-Y*Z^2", "-Z^4"}, {"-Z^3", "Y^2", "Y*Z^2"}, {"-Y*Z", "-Z^3", "Y^2"}},
               {{"Y", "Z^2", "0"}, {"0", "-Y", "Z^2"}, {"Z", "0", "-Y"}},
               {}},
              {"5",
               5,
               {{"Z^3", "Y^2", "0", "0", "0"},
                {"0", "-Z^3", "-Y^2", "Y*Z^2", "Z^4"},
                {"0", "-Y*Z", "Z^3", "Y^2", "Y*Z^2"},
                {"-Z^2", "0", "-Y*Z", "Z^3", "-Y^2"},
                {"Y", "-Z^2", "0", "0", "0"}},
               {{"-Z^2", "0", "0", "0", "-Y^2"},
                {"-Y", "0", "0", "0", "Z^3"},
                {"0", "Y", "-Z^2", "0", "0"},
                {"-Z", "0", "-Y", "-Z^2", "0"},
                {"0", "-Z", "0", "Y", "Z^2"}},
               {}},
              {"4",
               4,
               {{"Z^3", "-Y^2", "0", "0"},
                {"0", "-Y*Z", "Z^3", "Y^2"},
                {"Y", "Z^2", "0", "0"},
                {"-Z", "0", "Y", "-Z^2"}},
               {{"-Z^2", "0", "-Y^2", "0"},
                {"Y", "0", "-Z^3", "0"},
                {"0", "-Z^2", "-Y*Z", "-Y^2"},
                {"Z", "-Y", "0", "Z^3"}},
               {}},
              {"3",
               3,
               {{"-Y^2", "-Z^4", "-Y*Z^3"}, {"-Y*Z", "Y^2", "-Z^4"}, {"-Z^2", "Y*Z", "Y^2"}},
               {{"Y", "0", "Z^3"}, {"Z", "-Y", "0"}, {"0", "Z", "-Y"}},
               {}},
              {"2",
               2,
               {{"Y^2", "-Z^4"}, {"-Z", "-Y"}},
               {{"-Y", "Z^4"}, {"Z", "Y^2"}},
               {}},
          }}},
    };
    return tables;
}

std::map<std::string, std::map<std::string, ESeriesEntry>> build_entries() {
    VarsPtr yz = make_ring({"Y", "Z"});
    std::map<std::string, std::map<std::string, ESeriesEntry>> out;
    for (const auto& [series, table] : raw_tables()) {
        Poly g = Poly::parse(table.g, yz);
        for (const auto& raw : table.entries) {
            ESeriesEntry e;
            e.series = series;
            e.label = raw.label;
            e.ell = raw.ell;
            e.g = g;
            if (raw.xi.empty()) {
                e.direct_xi = false;
                e.phi = PolyMatrix::parse(raw.phi, yz);
                e.psi = PolyMatrix::parse(raw.psi, yz);
                e.mf = stabilize(*e.phi, *e.psi, g);
                e.mf.id = series + "[" + e.label + "]";
                e.xi = e.mf.split->xi;
            } else {
                e.direct_xi = true;
                PolyMatrix xi = PolyMatrix::parse(raw.xi, yz);
                VarsPtr full = merge_rings(make_ring({"X"}), yz);
                Poly X = Poly::var("X", full);
                e.mf = make_split_matfac(series + "[" + e.label + "]", "X", xi.reordered(full),
                                         X * X + g.reordered(full));
                e.xi = e.mf.split->xi;
            }
            out[series].emplace(raw.label, std::move(e));
        }
    }
    return out;
}

const std::map<std::string, std::map<std::string, ESeriesEntry>>& entries() {
    static const auto built = build_entries();
    return built;
}

}  // namespace

const ESeriesEntry& e_series(const std::string& series, const std::string& label) {
    auto sit = entries().find(series);
    if (sit == entries().end()) throw UnknownLabel("e_series: unknown series '" + series + "'");
    auto lit = sit->second.find(label);
    if (lit == sit->second.end())
        throw UnknownLabel("e_series: no label '" + label + "' in " + series);
    return lit->second;
}

const std::vector<std::string>& e_series_labels(const std::string& series) {
    static const std::map<std::string, std::vector<std::string>> labels = {
        {"E6", {"1+", "1-", "2+", "2-", "3", "2"}},
        {"E7", {"2'", "3'", "4", "2''", "3", "2", "1"}},
        {"E8", {"2'", "4'", "6", "3''", "5", "4", "3", "2"}},
    };
    auto it = labels.find(series);
    if (it == labels.end()) throw UnknownLabel("e_series_labels: unknown series '" + series + "'");
    return it->second;
}

Poly e_series_g(const std::string& series) {
    auto it = raw_tables().find(series);
    if (it == raw_tables().end()) throw UnknownLabel("e_series_g: unknown series '" + series + "'");
    return Poly::parse(it->second.g, make_ring({"Y", "Z"}));
}

}  // namespace mfk
