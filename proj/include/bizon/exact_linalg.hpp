#pragma once

#include "bizon/bigint.hpp"

#include <vector>

namespace bizon {

using BigMatrix = std::vector<std::vector<BigInt>>;

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. The empty matrix has determinant 1.
BigInt bareiss_determinant(BigMatrix m);

/// Rank over the rationals of an integer matrix (fraction-free elimination).
std::size_t integer_rank(BigMatrix m);

} // namespace bizon
