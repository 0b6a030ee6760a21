#pragma once

#include "bizon/bigint.hpp"
#include "bizon/multigraph.hpp"
#include "bizon/polynomial.hpp"

#include <optional>

namespace bizon {

/// Smallest admissible r for g, i.e. -δ_G.
int min_r(const MultiGraph& g);

/// Throws RBelowMinimum when r < -δ_G.
void check_r(const MultiGraph& g, int r);

/// True when some nonempty S has κ_S + r ≤ 0. The generating set then
/// contains the monomial 1 and B^(r)_G = 0.
bool is_zero_algebra(const MultiGraph& g, int r);

/// Whether z^a survives in B^(r)_G: a(S) ≤ κ_S + r - 1 for every nonempty
/// S ⊆ supp(a). Subsets meeting zero coordinates are implied by κ-monotonicity.
bool is_basis_monomial(const MultiGraph& g, int r, const ExponentVector& a);

struct DirectOptions {
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Limit on the box size Π_v (κ_v + r), an upper bound on the basis size.
  double budget = 1e9;
};

/// Box size Π_v (κ_v + r) bounding the number of basis monomials.
double basis_size_bound(const MultiGraph& g, int r);

/// Hilbert function of B^(r)_G by enumerating basis exponent vectors.
///
/// Depth-first over vertices 0..n-1. At depth d the search keeps, for every
/// set T of not-yet-assigned vertices, the quantity
///   M[T] = min over S ⊆ supp(prefix) of κ(S ∪ T) - a(S),
/// so the largest admissible a_d is M[{d}] + r - 1, and assigning a_d = x
/// updates M'[T] = min(M[T], M[T ∪ {d}] - x). Checks are exact because the
/// constraint for a set is tested when its last vertex is assigned.
HilbertPolynomial hilbert_direct(const MultiGraph& g, int r, const DirectOptions& opts = {});

struct TopComponent {
  int degree = -1;
  BigInt dimension = 0;
  friend bool operator==(const TopComponent&, const TopComponent&) = default;
};

TopComponent top_component(const MultiGraph& g, int r, const DirectOptions& opts = {});

/// Closed forms for the internal algebra of simple regular graphs:
/// (1+t)^n for 3-regular graphs, and (1+t+t^2)^n - n t^(2n-1) - t^(2n) for
/// 4-regular 4-edge-connected graphs. std::nullopt when neither applies.
std::optional<HilbertPolynomial> closed_form_internal_regular(const MultiGraph& g);

} // namespace bizon
