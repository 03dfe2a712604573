#pragma once

#include "mfk/blowup.hpp"
#include "mfk/serialize.hpp"

namespace mfk {

inline constexpr const char* kEngineVersion = "mfk 0.1.0";

struct RunRecord {
    std::string id;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct RunReport {
    std::string suite;
    std::vector<RunRecord> records;

    int passed() const;
    int failed() const;
    bool pass() const { return failed() == 0; }
    Json to_json() const;
};

struct SuiteOptions {
    std::string series;  // empty = all
    int n = 0;           // 0 = all
    int k = 0;
    int threads = 1;
    BuchbergerCaps caps{};
};

const std::vector<std::string>& suite_names();  // factorizations..all
RunReport run_suite(const std::string& name, const SuiteOptions& opt = {});

/// Groebner cross-checks: closed-form chart residuals vs elimination ideals
/// (A series n <= 4 both charts, D4 k=2 chart 1).
RunReport oracle_suite(const SuiteOptions& opt = {});

/// Reads MFK_CAPS ("degree,basis" or "degree:basis"); falls back to defaults.
BuchbergerCaps caps_from_env();

}  // namespace mfk
