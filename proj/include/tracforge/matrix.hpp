#pragma once

#include "tracforge/polynomial.hpp"

#include <vector>

namespace tracforge {

/// Element of a free module R^b: coordinates against the standard basis.
using FreeVector = std::vector<Polynomial>;

FreeVector fv_zero(const PolyRingPtr& ring, int rank);
FreeVector fv_basis(const PolyRingPtr& ring, int rank, int index);
FreeVector fv_add(const FreeVector& a, const FreeVector& b);
FreeVector fv_scale(const FreeVector& a, const Polynomial& p);
bool fv_is_zero(const FreeVector& a);

/// Dense polynomial matrix, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(PolyRingPtr ring, int rows, int cols);

    static PolyMatrix from_columns(const PolyRingPtr& ring, int rows,
                                   const std::vector<FreeVector>& cols);
    static PolyMatrix identity(const PolyRingPtr& ring, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PolyRingPtr& ring() const { return ring_; }

    Polynomial& at(int r, int c) { return entries_[r * cols_ + c]; }
    const Polynomial& at(int r, int c) const { return entries_[r * cols_ + c]; }

    FreeVector column(int c) const;
    std::vector<FreeVector> columns() const;
    PolyMatrix transposed() const;
    FreeVector apply(const FreeVector& v) const; // this * v
    PolyMatrix times(const PolyMatrix& other) const;

    /// Nonzero constant entry, if any (unit in any proper quotient).
    bool find_unit_entry(int& r, int& c) const;

    PolyMatrix without_row_col(int r, int c) const;

private:
    PolyRingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> entries_;
};

} // namespace tracforge
