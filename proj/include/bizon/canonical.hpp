#pragma once

#include "bizon/multigraph.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace bizon {

/// Isomorphism-class fingerprint of a multigraph with loops.
///
/// The code is the vertex count followed by the lower triangle (diagonal =
/// loop counts) of the lexicographically minimal adjacency matrix, two bytes
/// per entry. Equal codes if and only if the graphs are isomorphic.
struct CanonicalForm {
  std::string code;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kCanonicalMaxVertices = 12;

/// Colour refinement on (loops, weighted neighbourhood) followed by an
/// exhaustive search over cell-respecting orderings. Interchangeable twin
/// vertices are tried once per search node. Throws BudgetExceeded for
/// n > kCanonicalMaxVertices.
CanonicalForm canonical_form(const MultiGraph& g);

/// The graph encoded by a canonical form.
MultiGraph decode(const CanonicalForm& form);

} // namespace bizon

template <>
struct std::hash<bizon::CanonicalForm> {
  std::size_t operator()(const bizon::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.code);
  }
};
