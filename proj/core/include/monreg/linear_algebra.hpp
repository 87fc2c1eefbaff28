#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace monreg::linalg {

/// Sparse integer row: (column, value) pairs, columns strictly increasing,
/// no zero values.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Exact rank over the rationals of the matrix with the given rows.
///
/// Fraction-free elimination in 64-bit integers; on overflow the whole
/// elimination is redone with GMP integers.
std::size_t rank(const std::vector<SparseRow>& rows);

}  // namespace monreg::linalg
