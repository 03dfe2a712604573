#pragma once

#include <vector>

#include "mfk/poly.hpp"

namespace mfk {

/// Monomial order descriptor.  `Elim` is a block order eliminating the first
/// `split` variables of the ring: block exponents compared graded-lex first,
/// ties broken graded-lex on the remaining block.
struct MonomialOrder {
    enum class Kind { Grlex, Elim };
    Kind kind = Kind::Grlex;
    int split = 0;

    static MonomialOrder grlex() { return {Kind::Grlex, 0}; }
    static MonomialOrder elim(int split) { return {Kind::Elim, split}; }

    int compare(const std::vector<int>& a, const std::vector<int>& b) const;
};

struct Ideal {
    VarsPtr vars;
    MonomialOrder order;
    std::vector<Poly> gens;
};

struct BuchbergerCaps {
    int max_degree = 24;
    int max_basis = 500;
};

struct DivisionResult {
    Poly remainder;
    std::vector<Poly> cofactors;  // aligned with the divisor list
};

/// Leading term of p under the order (index into p.terms()); p nonzero.
size_t leading_index(const Poly& p, const MonomialOrder& order);

/// Full multivariate division: p = sum cofactor_i * gens_i + remainder, no
/// remainder term divisible by any generator's leading term.  Deterministic:
/// divisors are tried in list order.
DivisionResult divide(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& order);

/// Normal form of p modulo I.gens under I.order.
Poly reduce(const Poly& p, const Ideal& I);

/// Buchberger's algorithm with coprime/chain pair pruning.  The result is the
/// reduced Groebner basis (monic, auto-reduced, sorted by leading term), and
/// every S-polynomial of the output is re-checked to reduce to zero.
Ideal buchberger(const Ideal& I, const BuchbergerCaps& caps = {});

/// Generators of I intersected with the subring of the kept variables.  The
/// input ring is reordered so the eliminated variables come first; the result
/// lives in the kept-variable ring with a graded-lex order.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& keep,
                        const BuchbergerCaps& caps = {});

/// True iff every S-polynomial of I.gens reduces to zero (I is a GB).
bool is_groebner(const Ideal& I);

/// Mutual-membership test; both arguments must be Groebner bases.
bool same_ideal(const Ideal& a, const Ideal& b);

}  // namespace mfk
