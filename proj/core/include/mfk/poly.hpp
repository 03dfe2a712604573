#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfk/gaussrat.hpp"

namespace mfk {

using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

/// Builds a variable ring; names must be unique and non-empty.
VarsPtr make_ring(VarList names);

/// Union of two rings: a's order, then b's names not already present.
VarsPtr merge_rings(const VarsPtr& a, const VarsPtr& b);

bool same_ring(const VarsPtr& a, const VarsPtr& b);

struct Term {
    std::vector<int> exp;
    GaussRat c;
};

/// Sparse multivariate polynomial over Q(i) with a declared variable order.
/// Terms are kept canonical: graded-lex descending, no zero coefficients.
class Poly {
public:
    Poly() : vars_(empty_ring()) {}
    explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

    static Poly zero(VarsPtr vars) { return Poly(std::move(vars)); }
    static Poly constant(const GaussRat& c, VarsPtr vars);
    static Poly var(const std::string& name, const VarsPtr& vars);
    static Poly monomial(const GaussRat& c, std::vector<int> exp, VarsPtr vars);

    const VarList& vars() const { return *vars_; }
    const VarsPtr& vars_ptr() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value of a constant polynomial (zero polynomial gives 0).
    GaussRat constant_value() const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& name) const;
    bool contains_var(const std::string& name) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
    static Poly mul(const Poly& a, const Poly& b);
    Poly scaled(const GaussRat& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Re-declares the variable order.  Every variable with a nonzero
    /// exponent must exist in the target ring.
    Poly reordered(const VarsPtr& target) const;

    /// Simultaneous substitution.  Unbound variables map to themselves; the
    /// target ring defaults to the unbound variables followed by the binding
    /// rings in declaration order.
    Poly substituted(const std::map<std::string, Poly>& bindings,
                     VarsPtr target = nullptr) const;

    Poly derivative(const std::string& name) const;

    /// The polynomial made of the terms with exponent `power` in `name`,
    /// with that exponent removed.
    Poly coefficient_in(const std::string& name, int power) const;

    /// Exact quotient num/den; throws NotDivisible when a remainder appears.
    static Poly exact_divide(const Poly& num, const Poly& den);

    /// Division by u^2 + z treating the polynomial as univariate in `u`:
    /// returns (quotient, remainder) with remainder of u-degree <= 1.
    static std::pair<Poly, Poly> divide_by_usq_plus_z(const Poly& p,
                                                      const std::string& u,
                                                      const std::string& z);

    /// Canonical text form (see README "Canonical text" for the grammar).
    std::string text() const;
    static Poly parse(std::string_view text, const VarsPtr& vars);

    static const VarsPtr& empty_ring();

    /// Internal: assumes `terms` canonical w.r.t. `vars`.
    static Poly from_canonical(VarsPtr vars, std::vector<Term> terms);

private:
    int var_index(const std::string& name) const;
    void normalize(std::map<std::vector<int>, GaussRat>&& acc);

    VarsPtr vars_;
    std::vector<Term> terms_;
};

/// Graded-lex comparison of exponent vectors (equal lengths assumed).
int grlex_compare(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace mfk
