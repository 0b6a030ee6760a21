#pragma once

#include "bizon/multigraph.hpp"

#include <set>
#include <vector>

namespace bizon {

/// A weak parking function: every nonempty S has some v ∈ S with
/// f(v) ≤ dhat(S, v).
using WeakParkingFunction = ExponentVector;

/// Edges from v to V-S plus loops at v, for v ∈ s.
int dhat(const MultiGraph& g, VertexSubset s, int v);

/// Burning test: starting from S = V, repeatedly remove a vertex with
/// f(v) ≤ dhat(S, v). f is weak parking iff S becomes empty.
bool is_weak_parking(const MultiGraph& g, const ExponentVector& f);

/// Limit on the search box Π_v (κ_v + 1).
inline constexpr double kParkingBoxBudget = 5e7;

/// All weak parking functions in lexicographic order.
std::vector<WeakParkingFunction> enumerate_weak_parking(const MultiGraph& g);

/// f^Π(v_i) = dhat({v_i, ..., v_n}, v_i) for the ordering Π = (v_1, ..., v_n).
WeakParkingFunction f_pi(const MultiGraph& g, const std::vector<int>& ordering);

/// Distinct f^Π over all orderings, sorted.
std::set<WeakParkingFunction> maximal_weak_parking(const MultiGraph& g);

/// Compares the weak parking functions of g with the parking functions of
/// the delooped cone relative to its apex (f(v) < d_S(v) in C_G for some
/// v ∈ S, for every nonempty S ⊆ V).
bool cone_equivalence_check(const MultiGraph& g);

/// Parking functions of the delooped cone relative to the apex, restricted
/// to the original vertices. Searched over the same box as the weak ones.
std::vector<WeakParkingFunction> cone_parking_functions(const MultiGraph& g);

/// Parking vectors equal score vectors of acyclic partial orientations, and
/// maximal ones equal score vectors of acyclic total orientations.
bool parking_vs_acyclic(const MultiGraph& g);

} // namespace bizon
