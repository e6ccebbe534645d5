#include "tracforge/matrix.hpp"

namespace tracforge {

FreeVector fv_zero(const PolyRingPtr& ring, int rank) {
    return FreeVector(rank, poly_zero(ring));
}

FreeVector fv_basis(const PolyRingPtr& ring, int rank, int index) {
    FreeVector v = fv_zero(ring, rank);
    v.at(index) = poly_from_int(ring, 1);
    return v;
}

FreeVector fv_add(const FreeVector& a, const FreeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("free vector rank mismatch");
    FreeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_add(a[i], b[i]);
    return r;
}

FreeVector fv_scale(const FreeVector& a, const Polynomial& p) {
    FreeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly_mul(a[i], p);
    return r;
}

bool fv_is_zero(const FreeVector& a) {
    for (const auto& p : a)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix::PolyMatrix(PolyRingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, poly_zero(ring_)) {}

PolyMatrix PolyMatrix::from_columns(const PolyRingPtr& ring, int rows,
                                    const std::vector<FreeVector>& cols) {
    PolyMatrix m(ring, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw std::invalid_argument("column rank mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

PolyMatrix PolyMatrix::identity(const PolyRingPtr& ring, int n) {
    PolyMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = poly_from_int(ring, 1);
    return m;
}

FreeVector PolyMatrix::column(int c) const {
    FreeVector v(rows_, poly_zero(ring_));
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<FreeVector> PolyMatrix::columns() const {
    std::vector<FreeVector> out;
    out.reserve(cols_);
    for (int c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

FreeVector PolyMatrix::apply(const FreeVector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape");
    FreeVector out(rows_, poly_zero(ring_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r] = poly_add(out[r], poly_mul(at(r, c), v[c]));
    return out;
}

PolyMatrix PolyMatrix::times(const PolyMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape");
    PolyMatrix m(ring_, rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < other.cols_; ++c)
            for (int k = 0; k < cols_; ++k)
                m.at(r, c) = poly_add(m.at(r, c), poly_mul(at(r, k), other.at(k, c)));
    return m;
}

bool PolyMatrix::find_unit_entry(int& r, int& c) const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j).is_unit_constant()) {
                r = i;
                c = j;
                return true;
            }
    return false;
}

PolyMatrix PolyMatrix::without_row_col(int r, int c) const {
    PolyMatrix m(ring_, rows_ - 1, cols_ - 1);
    for (int i = 0, mi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < cols_; ++j) {
            if (j == c) continue;
            m.at(mi, mj) = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

} // namespace tracforge
