#pragma once

#include "bizon/multigraph.hpp"

#include <set>
#include <vector>

namespace bizon {

/// A linearly ordered subset J = (v_1, ..., v_m) of the vertices.
using OrderedSubset = std::vector<int>;
using PolytopeVertexSet = std::set<ExponentVector>;

/// a^J(v_i) = number of edges at v_i not incident to {v_1, ..., v_(i-1)},
/// loops counted once; zero off J.
ExponentVector vertex_from_ordered_subset(const MultiGraph& g, const OrderedSubset& j);

inline constexpr int kPolytopeMaxVertices = 8;

/// Distinct a^J over all ordered subsets J. Requires n ≤ kPolytopeMaxVertices.
PolytopeVertexSet all_vertices(const MultiGraph& g);

/// Lattice points of P_G = {a ≥ 0 : a(S) ≤ κ_S for all S}, by box
/// enumeration checking every nonempty S.
std::vector<ExponentVector> lattice_points(const MultiGraph& g);

struct VertexCharacterization {
  /// {a^J} equals the lattice points realised by exactly one partial orientation.
  bool unique_orientation = false;
  /// {a^J} equals the lattice points that are not the midpoint of two
  /// distinct lattice points.
  bool midpoint = false;
  bool ok() const { return unique_orientation && midpoint; }
};

inline constexpr double kCharacterizationMaxOrientations = 5e7;

/// Throws BudgetExceeded when g has more than
/// kCharacterizationMaxOrientations partial orientations.
VertexCharacterization verify_vertex_characterizations(const MultiGraph& g);

struct VertexCountBounds {
  std::size_t count = 0;
  /// Σ_{i=1..n} n!/i! for simple graphs, Σ_{m=0..n} n!/m! otherwise.
  unsigned long long bound = 0;
  bool tight = false;
};

VertexCountBounds vertex_count_bounds(const MultiGraph& g);

} // namespace bizon
