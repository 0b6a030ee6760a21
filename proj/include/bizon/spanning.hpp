#pragma once

#include "bizon/bigint.hpp"
#include "bizon/multigraph.hpp"

#include <vector>

namespace bizon {

/// Number of spanning trees by the matrix-tree theorem (Bareiss determinant
/// of a reduced Laplacian). Loops are ignored, multiplicities respected.
/// Disconnected graphs and the empty graph have no spanning tree.
BigInt spanning_tree_count(const MultiGraph& g);

inline constexpr std::size_t kForestMaxEdges = 25;

/// counts[k] = number of spanning forests with exactly k components, for
/// k = 0..n. Deletion-contraction over parallel classes with a memo on
/// canonical forms. Throws BudgetExceeded above kForestMaxEdges non-loop
/// edges.
std::vector<BigInt> spanning_forest_counts(const MultiGraph& g);

BigInt spanning_forest_total(const MultiGraph& g);

} // namespace bizon
