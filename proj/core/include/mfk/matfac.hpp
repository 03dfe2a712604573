#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfk/polymat.hpp"

namespace mfk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string id;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
    }
};

struct SplitForm {
    std::string x_name;
    PolyMatrix xi;
};

/// A matrix factorization record: phi*psi = psi*phi = f*I.  When the split
/// form is present, phi = x*I - Xi, psi = x*I + Xi with x absent from Xi.
struct MatFac {
    std::string id;
    int size = 0;
    PolyMatrix phi, psi;
    Poly f;
    std::optional<SplitForm> split;
};

MatFac make_matfac(std::string id, PolyMatrix phi, PolyMatrix psi, Poly f);

/// Builds the split pair (x*I - Xi, x*I + Xi) for f; x must not occur in Xi.
MatFac make_split_matfac(std::string id, const std::string& x_name, const PolyMatrix& xi,
                         Poly f);

/// Checks phi*psi = psi*phi = f*I exactly; failures are report entries with
/// the discrepancy location and difference.
Report verify_factorization(const MatFac& m);

/// Populates Xi = (psi - phi)/2; requires phi + psi = 2x*I, x absent from
/// psi - phi, and f = x^2 + g with g free of x.
MatFac split_form(const MatFac& m, const std::string& x_name);

/// True iff substituting x -> -x maps (phi, psi) to (-psi, -phi).  Requires
/// the split form.
bool involution_check(const MatFac& m);

/// Conjugates by (B_left, B_right), checks both conjugates are block-diagonal
/// for the partition, and returns one verified factorization per block.
std::vector<MatFac> decompose(const MatFac& m, const PolyMatrix& B_left,
                              const PolyMatrix& B_right, const Partition& partition);

}  // namespace mfk
