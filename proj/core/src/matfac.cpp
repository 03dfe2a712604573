#include "mfk/matfac.hpp"

namespace mfk {

MatFac make_matfac(std::string id, PolyMatrix phi, PolyMatrix psi, Poly f) {
    if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows())
        throw DimensionMismatch("make_matfac: phi/psi must be square of equal size");
    VarsPtr ring = merge_rings(merge_rings(phi.vars_ptr(), psi.vars_ptr()), f.vars_ptr());
    MatFac m;
    m.id = std::move(id);
    m.size = phi.rows();
    m.phi = phi.reordered(ring);
    m.psi = psi.reordered(ring);
    m.f = f.reordered(ring);
    return m;
}

MatFac make_split_matfac(std::string id, const std::string& x_name, const PolyMatrix& xi,
                         Poly f) {
    if (!xi.is_square()) throw DimensionMismatch("make_split_matfac: Xi must be square");
    VarsPtr ring = merge_rings(merge_rings(xi.vars_ptr(), make_ring({x_name})), f.vars_ptr());
    PolyMatrix xi_r = xi.reordered(ring);
    for (int i = 0; i < xi_r.rows(); ++i) {
        for (int j = 0; j < xi_r.cols(); ++j) {
            if (xi_r.at(i, j).contains_var(x_name))
                throw NotSplittable("make_split_matfac: '" + x_name + "' occurs in Xi");
        }
    }
    PolyMatrix xI = PolyMatrix::identity(xi_r.rows(), ring).scaled(Poly::var(x_name, ring));
    MatFac m;
    m.id = std::move(id);
    m.size = xi_r.rows();
    m.phi = xI - xi_r;
    m.psi = xI + xi_r;
    m.f = f.reordered(ring);
    m.split = SplitForm{x_name, xi_r};
    return m;
}

namespace {

// Appends per-entry discrepancies of M against f*I to the report check detail.
bool product_matches(const PolyMatrix& prod, const Poly& f, std::string& detail) {
    bool ok = true;
    int reported = 0;
    for (int i = 0; i < prod.rows(); ++i) {
        for (int j = 0; j < prod.cols(); ++j) {
            Poly want = (i == j) ? f.reordered(prod.vars_ptr()) : Poly(prod.vars_ptr());
            if (prod.at(i, j) != want) {
                ok = false;
                if (reported < 4) {
                    Poly diff = prod.at(i, j) - want;
                    detail += "(" + std::to_string(i) + "," + std::to_string(j) +
                              "): " + diff.text() + "; ";
                }
                ++reported;
            }
        }
    }
    if (reported > 4) detail += "... " + std::to_string(reported) + " entries differ";
    return ok;
}

}  // namespace

Report verify_factorization(const MatFac& m) {
    Report rep;
    rep.id = m.id;
    std::string d1, d2;
    bool ok1 = product_matches(m.phi * m.psi, m.f, d1);
    bool ok2 = product_matches(m.psi * m.phi, m.f, d2);
    rep.add("phi*psi = f*I", ok1, d1);
    rep.add("psi*phi = f*I", ok2, d2);
    return rep;
}

MatFac split_form(const MatFac& m, const std::string& x_name) {
    VarsPtr ring = m.phi.vars_ptr();
    bool has_x = false;
    for (const auto& v : *ring) {
        if (v == x_name) has_x = true;
    }
    if (!has_x) throw NotSplittable("split_form: '" + x_name + "' not in ring");
    Poly x = Poly::var(x_name, ring);
    PolyMatrix twoxI = PolyMatrix::identity(m.size, ring).scaled(x.scaled(GaussRat(2)));
    if (m.phi + m.psi != twoxI)
        throw NotSplittable("split_form: phi + psi != 2*" + x_name + "*I");
    PolyMatrix xi = (m.psi - m.phi).scaled(GaussRat::ratio(1, 2));
    for (int i = 0; i < xi.rows(); ++i) {
        for (int j = 0; j < xi.cols(); ++j) {
            if (xi.at(i, j).contains_var(x_name))
                throw NotSplittable("split_form: '" + x_name + "' occurs in psi - phi");
        }
    }
    Poly g = m.f - x * x;
    if (g.contains_var(x_name))
        throw NotSplittable("split_form: f - " + x_name + "^2 still involves " + x_name);
    MatFac out = m;
    out.split = SplitForm{x_name, xi};
    return out;
}

bool involution_check(const MatFac& m) {
    if (!m.split) throw Error("involution_check: split form required");
    const std::string& x = m.split->x_name;
    VarsPtr ring = m.phi.vars_ptr();
    std::map<std::string, Poly> flip{{x, -Poly::var(x, ring)}};
    PolyMatrix phi_f = m.phi.substituted(flip, ring);
    PolyMatrix psi_f = m.psi.substituted(flip, ring);
    return phi_f == -m.psi && psi_f == -m.phi;
}

std::vector<MatFac> decompose(const MatFac& m, const PolyMatrix& B_left,
                              const PolyMatrix& B_right, const Partition& partition) {
    PolyMatrix phi_c = conjugate2(B_left, m.phi, B_right);
    PolyMatrix psi_c = conjugate2(B_right, m.psi, B_left);
    auto check_blocks = [&](const PolyMatrix& M, const char* which) {
        if (M.block_pattern(partition)) return;
        // Locate one offending entry for the error message.
        std::vector<int> group(M.rows(), -1);
        for (size_t g = 0; g < partition.size(); ++g)
            for (int idx : partition[g]) group[idx] = static_cast<int>(g);
        for (int i = 0; i < M.rows(); ++i) {
            for (int j = 0; j < M.cols(); ++j) {
                if (group[i] != group[j] && !M.at(i, j).is_zero())
                    throw NotBlockDiagonal(std::string("decompose: ") + which + " entry (" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           ") = " + M.at(i, j).text());
            }
        }
    };
    check_blocks(phi_c, "conjugated phi");
    check_blocks(psi_c, "conjugated psi");

    std::vector<MatFac> out;
    for (size_t b = 0; b < partition.size(); ++b) {
        MatFac blk = make_matfac(m.id + " block " + std::to_string(b + 1),
                                 phi_c.block(partition[b], partition[b]),
                                 psi_c.block(partition[b], partition[b]), m.f);
        Report rep = verify_factorization(blk);
        if (!rep.pass())
            throw NotAFactorization("decompose: block " + std::to_string(b + 1) +
                                    " does not factor f");
        if (m.split) {
            try {
                blk = split_form(blk, m.split->x_name);
            } catch (const NotSplittable&) {
                // 1x1 trivial blocks and mixed blocks stay unsplit.
            }
        }
        out.push_back(std::move(blk));
    }
    return out;
}

}  // namespace mfk
