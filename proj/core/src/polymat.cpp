#include "mfk/polymat.hpp"

#include <bit>
#include <unordered_map>

namespace mfk {

PolyMatrix::PolyMatrix(int rows, int cols, VarsPtr vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
    if (rows <= 0 || cols <= 0) throw DimensionMismatch("PolyMatrix: non-positive dimensions");
    e_.assign(static_cast<size_t>(rows) * cols, Poly(vars_));
}

PolyMatrix PolyMatrix::identity(int n, const VarsPtr& vars) {
    PolyMatrix m(n, n, vars);
    for (int i = 0; i < n; ++i) m.set(i, i, Poly::constant(GaussRat(1), vars));
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionMismatch("from_rows: empty matrix");
    VarsPtr ring = rows[0][0].vars_ptr();
    for (const auto& r : rows) {
        if (r.size() != rows[0].size()) throw DimensionMismatch("from_rows: ragged rows");
        for (const auto& p : r) ring = merge_rings(ring, p.vars_ptr());
    }
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), ring);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<const char*>>& rows,
                             const VarsPtr& vars) {
    if (rows.empty() || rows[0].empty()) throw DimensionMismatch("parse: empty matrix");
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), vars);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DimensionMismatch("parse: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), Poly::parse(rows[i][j], vars));
        }
    }
    return m;
}

const Poly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw BadIndex("PolyMatrix::at: out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

void PolyMatrix::set(int i, int j, const Poly& p) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw BadIndex("PolyMatrix::set: out of range");
    e_[static_cast<size_t>(i) * cols_ + j] =
        same_ring(p.vars_ptr(), vars_) ? p : p.reordered(vars_);
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m = *this;
    for (auto& p : m.e_) p = -p;
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix add: shape mismatch");
    PolyMatrix m = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m.set(i, j, a.at(i, j) + b.at(i, j));
    return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix sub: shape mismatch");
    PolyMatrix m = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m.set(i, j, a.at(i, j) - b.at(i, j));
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matmul: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    VarsPtr ring = merge_rings(a.vars_ptr(), b.vars_ptr());
    PolyMatrix m(a.rows_, b.cols_, ring);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            Poly s(ring);
            for (int k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
            m.set(i, j, s);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::scaled(const GaussRat& c) const {
    PolyMatrix m = *this;
    for (auto& p : m.e_) p = p.scaled(c);
    return m;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
    PolyMatrix m = *this;
    for (auto& q : m.e_) q = q * p;
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] != o.e_[i]) return false;
    }
    return true;
}

Poly PolyMatrix::trace() const {
    if (!is_square()) throw NotSquare("trace: matrix not square");
    Poly s(vars_);
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

Poly PolyMatrix::determinant() const {
    if (!is_square()) throw NotSquare("determinant: matrix not square");
    if (rows_ > 8) throw Error("determinant: size limited to 8");
    int n = rows_;
    std::unordered_map<unsigned, Poly> memo;
    // Expansion along the first remaining row over the column subset `mask`.
    auto rec = [&](auto&& self, unsigned mask) -> Poly {
        if (mask == 0) return Poly::constant(GaussRat(1), vars_);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int row = n - std::popcount(mask);
        Poly acc(vars_);
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Poly& a = at(row, j);
            if (!a.is_zero()) {
                Poly sub = self(self, mask & ~(1u << j));
                Poly contrib = a * sub;
                if (pos % 2 == 1) contrib = -contrib;
                acc += contrib;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << n) - 1u);
}

PolyMatrix PolyMatrix::adjugate() const {
    if (!is_square()) throw NotSquare("adjugate: matrix not square");
    int n = rows_;
    if (n == 1) return identity(1, vars_);
    PolyMatrix adj(n, n, vars_);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1, vars_);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.set(rr, cc, at(r, c));
                    ++cc;
                }
                ++rr;
            }
            Poly m = minor.determinant();
            if ((i + j) % 2 == 1) m = -m;
            adj.set(j, i, m);  // transposed cofactor
        }
    }
    return adj;
}

PolyMatrix PolyMatrix::adjugate_inverse() const {
    Poly d = determinant();
    if (!d.is_constant() || d.is_zero())
        throw NonUnitDeterminant("adjugate_inverse: determinant " + d.text() +
                                 " is not a nonzero constant");
    return adjugate().scaled(d.constant_value().inverse());
}

bool PolyMatrix::block_pattern(const Partition& partition) const {
    if (!is_square()) throw NotSquare("block_pattern: matrix not square");
    std::vector<int> group(rows_, -1);
    for (size_t g = 0; g < partition.size(); ++g) {
        for (int idx : partition[g]) {
            if (idx < 0 || idx >= rows_ || group[idx] != -1)
                throw BadIndex("block_pattern: invalid partition");
            group[idx] = static_cast<int>(g);
        }
    }
    for (int i = 0; i < rows_; ++i) {
        if (group[i] == -1) throw BadIndex("block_pattern: partition does not cover index");
    }
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (group[i] != group[j] && !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

PolyMatrix PolyMatrix::block(const std::vector<int>& row_idx,
                             const std::vector<int>& col_idx) const {
    PolyMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()), vars_);
    for (size_t i = 0; i < row_idx.size(); ++i) {
        for (size_t j = 0; j < col_idx.size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), at(row_idx[i], col_idx[j]));
        }
    }
    return m;
}

PolyMatrix PolyMatrix::reordered(const VarsPtr& target) const {
    PolyMatrix m(rows_, cols_, target);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j).reordered(target));
    return m;
}

PolyMatrix PolyMatrix::substituted(const std::map<std::string, Poly>& bindings,
                                   VarsPtr target) const {
    if (!target) {
        // Derive a shared target from the first entry so the matrix stays in
        // one ring.
        target = at(0, 0).substituted(bindings).vars_ptr();
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                target = merge_rings(target, at(i, j).substituted(bindings).vars_ptr());
    }
    PolyMatrix m(rows_, cols_, target);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j).substituted(bindings, target));
    return m;
}

std::string PolyMatrix::text() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i > 0) s += ",\n ";
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) s += ", ";
            s += at(i, j).text();
        }
        s += "]";
    }
    s += "]";
    return s;
}

PolyMatrix conjugate(const PolyMatrix& B, const PolyMatrix& M) {
    return B * M * B.adjugate_inverse();
}

PolyMatrix conjugate2(const PolyMatrix& B_left, const PolyMatrix& M, const PolyMatrix& B_right) {
    return B_left * M * B_right.adjugate_inverse();
}

}  // namespace mfk
