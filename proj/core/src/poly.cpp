#include "mfk/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mfk {

VarsPtr make_ring(VarList names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw Error("make_ring: empty variable name");
        if (!seen.insert(n).second) throw Error("make_ring: duplicate variable '" + n + "'");
    }
    return std::make_shared<const VarList>(std::move(names));
}

VarsPtr merge_rings(const VarsPtr& a, const VarsPtr& b) {
    if (a == b) return a;
    VarList out = *a;
    std::set<std::string> seen(out.begin(), out.end());
    bool grew = false;
    for (const auto& n : *b) {
        if (seen.insert(n).second) {
            out.push_back(n);
            grew = true;
        }
    }
    if (!grew && out.size() == a->size()) {
        if (*a == *b) return a;  // identical contents, keep the left ring
    }
    return std::make_shared<const VarList>(std::move(out));
}

bool same_ring(const VarsPtr& a, const VarsPtr& b) {
    return a == b || *a == *b;
}

const VarsPtr& Poly::empty_ring() {
    static const VarsPtr empty = std::make_shared<const VarList>();
    return empty;
}

int grlex_compare(const std::vector<int>& a, const std::vector<int>& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

struct GrlexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return grlex_compare(a, b) > 0;
    }
};

}  // namespace

Poly Poly::from_canonical(VarsPtr vars, std::vector<Term> terms) {
    Poly p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
}

void Poly::normalize(std::map<std::vector<int>, GaussRat>&& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (!c.is_zero()) terms_.push_back(Term{e, std::move(c)});
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; });
}

Poly Poly::constant(const GaussRat& c, VarsPtr vars) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back(Term{std::vector<int>(p.vars().size(), 0), c});
    return p;
}

int Poly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == name) return static_cast<int>(i);
    }
    return -1;
}

Poly Poly::var(const std::string& name, const VarsPtr& vars) {
    Poly p(vars);
    int idx = p.var_index(name);
    if (idx < 0) throw Error("Poly::var: '" + name + "' not in ring");
    std::vector<int> e(vars->size(), 0);
    e[idx] = 1;
    p.terms_.push_back(Term{std::move(e), GaussRat(1)});
    return p;
}

Poly Poly::monomial(const GaussRat& c, std::vector<int> exp, VarsPtr vars) {
    if (exp.size() != vars->size()) throw Error("Poly::monomial: exponent size mismatch");
    for (int e : exp) {
        if (e < 0) throw Error("Poly::monomial: negative exponent");
    }
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(exp), c});
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_[0].exp) {
        if (e != 0) return false;
    }
    return true;
}

GaussRat Poly::constant_value() const {
    if (!is_constant()) throw Error("Poly::constant_value: not a constant");
    return terms_.empty() ? GaussRat(0) : terms_[0].c;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
        d = std::max(d, std::accumulate(t.exp.begin(), t.exp.end(), 0));
    }
    return d;
}

int Poly::degree_in(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return 0;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp[idx]);
    return d;
}

bool Poly::contains_var(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return false;
    for (const auto& t : terms_) {
        if (t.exp[idx] > 0) return true;
    }
    return false;
}

Poly Poly::operator-() const {
    Poly p(vars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.exp, -t.c});
    return p;
}

namespace {

// Merges two canonical term lists over the same ring.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int cmp = grlex_compare(a[i].exp, b[j].exp);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(negate_b ? Term{b[j].exp, -b[j].c} : b[j]);
            ++j;
        } else {
            GaussRat c = negate_b ? a[i].c - b[j].c : a[i].c + b[j].c;
            if (!c.is_zero()) out.push_back(Term{a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        out.push_back(negate_b ? Term{b[j].exp, -b[j].c} : b[j]);
        ++j;
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (!same_ring(vars_, o.vars_)) {
        VarsPtr m = merge_rings(vars_, o.vars_);
        *this = reordered(m);
        return *this += o.reordered(m);
    }
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!same_ring(vars_, o.vars_)) {
        VarsPtr m = merge_rings(vars_, o.vars_);
        *this = reordered(m);
        return *this -= o.reordered(m);
    }
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

Poly Poly::mul(const Poly& a, const Poly& b) {
    if (!same_ring(a.vars_, b.vars_)) {
        VarsPtr m = merge_rings(a.vars_, b.vars_);
        return mul(a.reordered(m), b.reordered(m));
    }
    Poly out(a.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    std::map<std::vector<int>, GaussRat> acc;
    std::vector<int> e(a.vars_->size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ta.exp[i] + tb.exp[i];
            acc[e] += ta.c * tb.c;
        }
    }
    out.normalize(std::move(acc));
    return out;
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly p(vars_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.exp, t.c * c});
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(GaussRat(1), vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    if (same_ring(vars_, o.vars_)) {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].exp != o.terms_[i].exp || terms_[i].c != o.terms_[i].c) return false;
        }
        return true;
    }
    VarsPtr m = merge_rings(vars_, o.vars_);
    return reordered(m) == o.reordered(m);
}

Poly Poly::reordered(const VarsPtr& target) const {
    if (same_ring(vars_, target)) {
        Poly p(target);
        p.terms_ = terms_;
        return p;
    }
    std::vector<int> map(vars_->size(), -1);
    for (size_t i = 0; i < vars_->size(); ++i) {
        for (size_t j = 0; j < target->size(); ++j) {
            if ((*vars_)[i] == (*target)[j]) {
                map[i] = static_cast<int>(j);
                break;
            }
        }
    }
    Poly p(target);
    std::map<std::vector<int>, GaussRat> acc;
    for (const auto& t : terms_) {
        std::vector<int> e(target->size(), 0);
        for (size_t i = 0; i < map.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (map[i] < 0)
                throw Error("Poly::reordered: variable '" + (*vars_)[i] + "' missing from target ring");
            e[map[i]] = t.exp[i];
        }
        acc[std::move(e)] += t.c;
    }
    p.normalize(std::move(acc));
    return p;
}

Poly Poly::substituted(const std::map<std::string, Poly>& bindings, VarsPtr target) const {
    if (!target) {
        VarList names;
        std::set<std::string> seen;
        for (const auto& v : *vars_) {
            if (bindings.count(v)) continue;
            names.push_back(v);
            seen.insert(v);
        }
        VarsPtr t = std::make_shared<const VarList>(std::move(names));
        for (const auto& v : *vars_) {
            auto it = bindings.find(v);
            if (it != bindings.end()) t = merge_rings(t, it->second.vars_ptr());
        }
        target = t;
    }
    Poly result(target);
    // Per-variable power cache; vars bound to themselves go the monomial path.
    std::vector<std::vector<Poly>> powers(vars_->size());
    auto power_of = [&](size_t vi, int e) -> const Poly& {
        auto& cache = powers[vi];
        if (cache.empty()) {
            auto it = bindings.find((*vars_)[vi]);
            if (it != bindings.end()) {
                cache.push_back(it->second.reordered(target));
            } else {
                cache.push_back(Poly::var((*vars_)[vi], target));
            }
        }
        while (static_cast<int>(cache.size()) < e) {
            cache.push_back(mul(cache.back(), cache.front()));
        }
        return cache[e - 1];
    };
    for (const auto& t : terms_) {
        Poly prod = Poly::constant(t.c, target);
        for (size_t vi = 0; vi < t.exp.size(); ++vi) {
            if (t.exp[vi] > 0) prod = mul(prod, power_of(vi, t.exp[vi]));
        }
        result += prod;
    }
    return result;
}

Poly Poly::derivative(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) throw Error("Poly::derivative: '" + name + "' not declared");
    Poly p(vars_);
    std::map<std::vector<int>, GaussRat> acc;
    for (const auto& t : terms_) {
        if (t.exp[idx] == 0) continue;
        std::vector<int> e = t.exp;
        GaussRat c = t.c * GaussRat(e[idx]);
        e[idx] -= 1;
        acc[std::move(e)] += c;
    }
    p.normalize(std::move(acc));
    return p;
}

Poly Poly::coefficient_in(const std::string& name, int power) const {
    int idx = var_index(name);
    if (idx < 0) {
        if (power == 0) return *this;
        return Poly(vars_);
    }
    Poly p(vars_);
    for (const auto& t : terms_) {
        if (t.exp[idx] != power) continue;
        Term u = t;
        u.exp[idx] = 0;
        p.terms_.push_back(std::move(u));
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; });
    return p;
}

Poly Poly::exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw NotDivisible("exact_divide: zero divisor");
    if (!same_ring(num.vars_, den.vars_)) {
        VarsPtr m = merge_rings(num.vars_, den.vars_);
        return exact_divide(num.reordered(m), den.reordered(m));
    }
    Poly q(num.vars_);
    Poly r = num;
    const Term& dl = den.terms_.front();
    while (!r.is_zero()) {
        const Term& rl = r.terms_.front();
        std::vector<int> e(rl.exp.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rl.exp[i] - dl.exp[i];
            if (e[i] < 0)
                throw NotDivisible("exact_divide: remainder " + r.text());
        }
        Poly t = Poly::monomial(rl.c / dl.c, std::move(e), num.vars_);
        q += t;
        r -= mul(t, den);
    }
    return q;
}

std::pair<Poly, Poly> Poly::divide_by_usq_plus_z(const Poly& p, const std::string& u,
                                                 const std::string& z) {
    VarsPtr ring = p.vars_ptr();
    if (p.var_index(u) < 0 || p.var_index(z) < 0) {
        ring = merge_rings(ring, make_ring({u, z}));
        return divide_by_usq_plus_z(p.reordered(ring), u, z);
    }
    Poly divisor = mul(Poly::var(u, ring), Poly::var(u, ring)) + Poly::var(z, ring);
    Poly q(ring);
    Poly r = p;
    int d = r.degree_in(u);
    while (d >= 2) {
        Poly lead = r.coefficient_in(u, d);                  // coefficient of u^d
        Poly shift = mul(lead, Poly::var(u, ring).pow(d - 2));
        q += shift;
        r -= mul(shift, divisor);
        d = r.degree_in(u);
    }
    return {q, r};
}

}  // namespace mfk
