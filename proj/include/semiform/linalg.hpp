#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <semiform/rational.hpp>

namespace semiform
{

// Sparse integer row: strictly increasing column indices, no stored zeros.
using IntegerRow = std::vector<std::pair<std::size_t, Integer>>;
// Sparse rational column: strictly increasing row indices, no stored zeros.
using RationalColumn = std::vector<std::pair<std::size_t, Rational>>;

struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<RationalColumn> columns; // columns.size() == cols

    // Row-wise integer copy, each row scaled by the lcm of its denominators.
    // Row scaling preserves both rank and kernel.
    std::vector<IntegerRow> integer_rows() const;
};

// Echelon form produced by fraction-free elimination. Row r has its leading
// entry in column pivots[r] (strictly increasing), is primitive (content 1)
// and has a positive leading entry. In reduced form every other row is zero
// in each pivot column.
struct EchelonForm {
    std::vector<IntegerRow> rows;
    std::vector<std::size_t> pivots;
};

// Processes columns left to right; the pivot for a column is the first
// remaining row (in input order) with a nonzero entry there. Rows are
// combined as pivot * row - entry * pivot_row and then divided by their
// content, so entries stay integral and small.
EchelonForm echelon(std::vector<IntegerRow> rows, bool reduced);

std::size_t rank(const SparseMatrix &a);

// Basis of {x : A x = 0}, returned in normal form: the rows of the reduced
// echelon form of the kernel, each primitive with positive leading entry.
std::vector<IntegerRow> kernel_basis(const SparseMatrix &a);

// Integer multiple of a sparse rational vector by the lcm of its denominators.
IntegerRow clear_denominators(const RationalColumn &v);

// Entry lookup in a sparse row (zero when absent).
Integer row_entry(const IntegerRow &row, std::size_t col);

} // namespace semiform
