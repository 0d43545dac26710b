#ifndef QALG_MATRIX_HPP
#define QALG_MATRIX_HPP

#include "qalg/rational.hpp"

#include <utility>
#include <vector>

namespace qalg {

// One matrix row as (column, value) pairs sorted by column; missing columns
// are zero, stored values are nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(int rows, int cols);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    const SparseRow& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    Rational get(int r, int c) const;
    void set(int r, int c, const Rational& v);  // v == 0 erases the entry
    void set_row(int i, SparseRow row);
    void append_row(SparseRow row);

    bool operator==(const MatrixQ&) const = default;

private:
    int cols_ = 0;
    std::vector<SparseRow> rows_;
};

struct RrefResult {
    MatrixQ rref;                 // same shape as the input, zero rows last
    std::vector<int> pivot_cols;  // strictly increasing
    int rank = 0;
};

// Unique reduced row echelon form. rref() dispatches between the serial
// reference kernel and the OpenMP one; both return identical results.
RrefResult rref(const MatrixQ& m);
RrefResult rref_serial(const MatrixQ& m);
RrefResult rref_parallel(const MatrixQ& m);

int rank(const MatrixQ& m);

// RREF basis of { v : <v, r> = 0 for every row r }, one row per free column.
MatrixQ orthogonal_complement(const MatrixQ& rows);

// Residual of v after eliminating every pivot column of r. Zero residual
// means v lies in the row space.
SparseRow reduce_against(const RrefResult& r, SparseRow v);
bool in_row_space(const RrefResult& r, const SparseRow& v);

Rational dot(const SparseRow& a, const SparseRow& b);

}  // namespace qalg

#endif
