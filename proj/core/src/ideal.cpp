#include "mfk/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mfk {

int MonomialOrder::compare(const std::vector<int>& a, const std::vector<int>& b) const {
    if (kind == Kind::Grlex) return grlex_compare(a, b);
    int s = split;
    int da = 0, db = 0;
    for (int i = 0; i < s; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < s; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    da = db = 0;
    for (size_t i = s; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = s; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

size_t leading_index(const Poly& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error("leading_index: zero polynomial");
    if (order.kind == MonomialOrder::Kind::Grlex) return 0;  // canonical storage is grlex-desc
    size_t best = 0;
    for (size_t i = 1; i < p.terms().size(); ++i) {
        if (order.compare(p.terms()[i].exp, p.terms()[best].exp) > 0) best = i;
    }
    return best;
}

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::vector<int> exp_sub(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::vector<int> exp_lcm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

struct LeadData {
    std::vector<int> exp;
    GaussRat coeff;
};

LeadData lead(const Poly& p, const MonomialOrder& order) {
    const Term& t = p.terms()[leading_index(p, order)];
    return {t.exp, t.c};
}

}  // namespace

DivisionResult divide(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& order) {
    DivisionResult res;
    res.cofactors.assign(gens.size(), Poly(p.vars_ptr()));
    std::vector<LeadData> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.is_zero()) throw Error("divide: zero generator");
        leads.push_back(lead(g, order));
    }
    Poly work = p;
    Poly rem(p.vars_ptr());
    while (!work.is_zero()) {
        size_t li = leading_index(work, order);
        const Term& lt = work.terms()[li];
        bool reduced = false;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            if (!divides(leads[gi].exp, lt.exp)) continue;
            Poly t = Poly::monomial(lt.c / leads[gi].coeff, exp_sub(lt.exp, leads[gi].exp),
                                    p.vars_ptr());
            res.cofactors[gi] += t;
            work -= t * gens[gi];
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::monomial(lt.c, lt.exp, p.vars_ptr());
            rem += t;
            work -= t;
        }
    }
    res.remainder = rem;
    return res;
}

Poly reduce(const Poly& p, const Ideal& I) {
    Poly q = same_ring(p.vars_ptr(), I.vars) ? p : p.reordered(I.vars);
    return divide(q, I.gens, I.order).remainder;
}

namespace {

Poly make_monic(const Poly& p, const MonomialOrder& order) {
    GaussRat c = p.terms()[leading_index(p, order)].c;
    return p.scaled(c.inverse());
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& order) {
    LeadData lf = lead(f, order);
    LeadData lg = lead(g, order);
    std::vector<int> l = exp_lcm(lf.exp, lg.exp);
    Poly tf = Poly::monomial(lf.coeff.inverse(), exp_sub(l, lf.exp), f.vars_ptr());
    Poly tg = Poly::monomial(lg.coeff.inverse(), exp_sub(l, lg.exp), g.vars_ptr());
    return tf * f - tg * g;
}

struct Pair {
    int deg;
    int i, j;
    std::vector<int> lcm;
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace

Ideal buchberger(const Ideal& I, const BuchbergerCaps& caps) {
    if (caps.max_degree <= 0 || caps.max_basis <= 0)
        throw Error("buchberger: caps must be positive");
    std::vector<Poly> basis;
    for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        if (g.total_degree() > caps.max_degree)
            throw CapExceeded("buchberger: input generator of degree " +
                              std::to_string(g.total_degree()) + " exceeds degree cap " +
                              std::to_string(caps.max_degree));
        basis.push_back(make_monic(g.reordered(I.vars), I.order));
    }
    if (static_cast<int>(basis.size()) > caps.max_basis)
        throw CapExceeded("buchberger: " + std::to_string(basis.size()) +
                          " input generators exceed basis cap " +
                          std::to_string(caps.max_basis));
    std::vector<std::vector<int>> lt;
    for (const auto& g : basis) lt.push_back(lead(g, I.order).exp);

    auto lcm_deg = [](const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    };

    std::set<Pair> pending;
    std::set<std::pair<int, int>> pending_keys;
    auto push_pair = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        std::vector<int> l = exp_lcm(lt[i], lt[j]);
        pending.insert(Pair{lcm_deg(l), i, j, l});
        pending_keys.insert({i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i),
                                                               static_cast<int>(j));

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        pending_keys.erase({pr.i, pr.j});

        // Coprime-leading-term criterion.
        std::vector<int> sum(lt[pr.i].size());
        for (size_t t = 0; t < sum.size(); ++t) sum[t] = lt[pr.i][t] + lt[pr.j][t];
        if (sum == pr.lcm) continue;

        // Chain criterion: skip when some k divides the lcm and both side
        // pairs were already handled.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (static_cast<int>(k) == pr.i || static_cast<int>(k) == pr.j) continue;
            if (!divides(lt[k], pr.lcm)) continue;
            int ik_lo = std::min(static_cast<int>(k), pr.i);
            int ik_hi = std::max(static_cast<int>(k), pr.i);
            int jk_lo = std::min(static_cast<int>(k), pr.j);
            int jk_hi = std::max(static_cast<int>(k), pr.j);
            if (!pending_keys.count({ik_lo, ik_hi}) && !pending_keys.count({jk_lo, jk_hi}))
                skip = true;
        }
        if (skip) continue;

        Poly s = spoly(basis[pr.i], basis[pr.j], I.order);
        Poly r = divide(s, basis, I.order).remainder;
        if (r.is_zero()) continue;
        if (r.total_degree() > caps.max_degree)
            throw CapExceeded("buchberger: degree cap " + std::to_string(caps.max_degree) +
                              " exceeded by element of degree " +
                              std::to_string(r.total_degree()) + " (basis size " +
                              std::to_string(basis.size()) + ")");
        basis.push_back(make_monic(r, I.order));
        lt.push_back(lead(basis.back(), I.order).exp);
        if (static_cast<int>(basis.size()) > caps.max_basis)
            throw CapExceeded("buchberger: basis cap " + std::to_string(caps.max_basis) +
                              " exceeded");
        int newi = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < newi; ++i) push_pair(i, newi);
    }

    // Minimalize: drop generators whose leading term is divisible by another's.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (divides(lt[j], lt[i]) && (lt[j] != lt[i] || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (keep[i]) minimal.push_back(basis[i]);
    }
    // Auto-reduce: normal form of each against the others.
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        Poly r = others.empty() ? minimal[i] : divide(minimal[i], others, I.order).remainder;
        if (!r.is_zero()) reduced.push_back(make_monic(r, I.order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return I.order.compare(lead(a, I.order).exp, lead(b, I.order).exp) < 0;
    });

    Ideal out{I.vars, I.order, reduced};
    if (!is_groebner(out)) throw Error("buchberger: post-hoc S-polynomial check failed");
    return out;
}

bool is_groebner(const Ideal& I) {
    for (size_t i = 0; i < I.gens.size(); ++i) {
        for (size_t j = i + 1; j < I.gens.size(); ++j) {
            Poly s = spoly(I.gens[i], I.gens[j], I.order);
            if (s.is_zero()) continue;
            if (!divide(s, I.gens, I.order).remainder.is_zero()) return false;
        }
    }
    return true;
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& keep,
                        const BuchbergerCaps& caps) {
    std::set<std::string> keep_set(keep.begin(), keep.end());
    VarList front, back;
    for (const auto& v : *I.vars) {
        if (keep_set.count(v)) back.push_back(v);
        else front.push_back(v);
    }
    int split = static_cast<int>(front.size());
    VarList ordered = front;
    ordered.insert(ordered.end(), back.begin(), back.end());
    VarsPtr ring = make_ring(ordered);

    Ideal reordered{ring, MonomialOrder::elim(split), {}};
    for (const auto& g : I.gens) reordered.gens.push_back(g.reordered(ring));
    Ideal gb = buchberger(reordered, caps);

    VarsPtr keep_ring = make_ring(back);
    Ideal out{keep_ring, MonomialOrder::grlex(), {}};
    for (const auto& g : gb.gens) {
        bool free_of_front = true;
        for (const auto& t : g.terms()) {
            for (int i = 0; i < split && free_of_front; ++i) {
                if (t.exp[i] > 0) free_of_front = false;
            }
            if (!free_of_front) break;
        }
        if (free_of_front) out.gens.push_back(g.reordered(keep_ring));
    }
    return out;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.gens) {
        if (!reduce(g, b).is_zero()) return false;
    }
    for (const auto& g : b.gens) {
        if (!reduce(g, a).is_zero()) return false;
    }
    return true;
}

}  // namespace mfk
