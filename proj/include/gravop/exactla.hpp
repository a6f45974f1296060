#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gravop/int.hpp"

namespace gravop::exactla {

/// Dense matrix of exact integers, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries; // rows * cols

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    IntMatrix transposed() const;
};

/// Sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Int>>;

SparseRow to_sparse(const std::vector<Int>& dense);
std::vector<Int> to_dense(const SparseRow& row, std::size_t cols);

/// Divide a row by the gcd of its entries and normalize the leading
/// coefficient to be positive. No-op on the empty row.
void make_primitive(SparseRow& row);

/// Incremental fraction-free row echelon form.
///
/// Rows are combined by integer cross-multiplication and re-scaled primitive,
/// so no fractions ever appear. Pivot rows are kept fully reduced against the
/// pivots present at their insertion time; reduce() iterates until the result
/// is supported off every pivot column.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    /// Insert a row; returns true if it was independent of the rows so far.
    bool add_row(SparseRow row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    /// Reduce v against the pivot rows. Returns (scale, residual) with
    /// scale > 0 such that scale * v = residual modulo the row space; the
    /// residual has no support on pivot columns.
    std::pair<Int, SparseRow> reduce(SparseRow v) const;

    /// True iff v lies in the row space.
    bool contains(const SparseRow& v) const;

    const std::map<std::size_t, SparseRow>& pivot_rows() const { return pivots_; }

private:
    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivots_; // leading column -> row
};

/// Rank over the rationals, computed fraction-free.
std::size_t rank(const IntMatrix& m);

/// Basis of the rational null space as primitive integer vectors (content 1,
/// leading entry positive). Size = cols - rank.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

/// True iff v is a rational linear combination of the basis vectors.
/// Vectors must share one length.
bool in_span(const std::vector<Int>& v, const std::vector<std::vector<Int>>& basis);

/// Express `target` as a rational combination of `vectors`, if possible.
/// Returns the coefficients in order.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Int>>& vectors,
                                              const std::vector<Int>& target);

} // namespace gravop::exactla
