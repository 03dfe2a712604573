#pragma once

#include <vector>

#include "mfk/poly.hpp"

namespace mfk {

/// Block partition: index groups over 0..n-1, each group listed in the order
/// its rows/columns appear in the extracted block.
using Partition = std::vector<std::vector<int>>;

/// Rectangular matrix of Poly with exact arithmetic.  All entries share one
/// variable ring.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0), vars_(Poly::empty_ring()) {}
    PolyMatrix(int rows, int cols, VarsPtr vars);

    static PolyMatrix identity(int n, const VarsPtr& vars);
    /// Builds a matrix from rows, merging entry rings.
    static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows);
    /// Parses a row-major grid of canonical-text entries.
    static PolyMatrix parse(const std::vector<std::vector<const char*>>& rows,
                            const VarsPtr& vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarsPtr& vars_ptr() const { return vars_; }

    const Poly& at(int i, int j) const;
    void set(int i, int j, const Poly& p);

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix scaled(const GaussRat& c) const;
    PolyMatrix scaled(const Poly& p) const;

    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    bool is_square() const { return rows_ == cols_; }
    Poly trace() const;

    /// Exact determinant by division-free minor expansion with memoization
    /// over column subsets.  Desk scale: size <= 8.
    Poly determinant() const;
    PolyMatrix adjugate() const;
    /// adj(A)/det(A); requires det(A) to be a nonzero constant.
    PolyMatrix adjugate_inverse() const;

    /// True iff every entry outside the partition blocks is zero.
    bool block_pattern(const Partition& partition) const;
    PolyMatrix block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    PolyMatrix reordered(const VarsPtr& target) const;
    PolyMatrix substituted(const std::map<std::string, Poly>& bindings,
                           VarsPtr target = nullptr) const;

    /// Canonical row-major text with bracket delimiters.
    std::string text() const;

private:
    int rows_, cols_;
    VarsPtr vars_;
    std::vector<Poly> e_;
};

/// B * M * B^{-1}; B must have constant nonzero determinant.
PolyMatrix conjugate(const PolyMatrix& B, const PolyMatrix& M);
/// B_left * M * B_right^{-1}.
PolyMatrix conjugate2(const PolyMatrix& B_left, const PolyMatrix& M, const PolyMatrix& B_right);

}  // namespace mfk
