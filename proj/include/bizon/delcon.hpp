#pragma once

#include "bizon/canonical.hpp"
#include "bizon/counting.hpp"
#include "bizon/multigraph.hpp"
#include "bizon/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace bizon {

/// Memo of Hilbert polynomials of connected graphs keyed by (canonical form, r).
/// Safe for concurrent use; entries are deterministic so overwrites are benign.
class MemoTable {
public:
  std::optional<HilbertPolynomial> find(const CanonicalForm& form, int r) const;
  void insert(const CanonicalForm& form, int r, const HilbertPolynomial& h);
  std::size_t size() const;
  void clear();

private:
  struct Key {
    CanonicalForm form;
    int r = 0;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<CanonicalForm>{}(k.form) * 31u + static_cast<std::size_t>(k.r + 7);
    }
  };
  mutable std::mutex mutex_;
  std::unordered_map<Key, HilbertPolynomial, KeyHash> entries_;
};

struct DelconOptions {
  /// Shared memo; a private one is used when null.
  MemoTable* memo = nullptr;
  /// When set, each step pivots on a pseudo-randomly chosen non-loop edge
  /// instead of the first one.
  std::optional<std::uint64_t> pivot_seed;
};

/// h^r_G for r ∈ {0, 1} by loopy deletion-contraction:
///   h_G = h_{G/e} + t h_{G-e},
/// multiplying over connected components, with h_{L_n} = [n]_t for r = 0
/// and [n+1]_t for r = 1 as base cases.
HilbertPolynomial hilbert_delcon(const MultiGraph& g, int r, const DelconOptions& opts = {});

/// Checks h_G = h_{G/e} + t h_{G-e} with all three sides from hilbert_direct.
/// Throws InvalidArgument for a loop edge. Throws RBelowMinimum when r is
/// below the minimum of any of the three graphs.
bool verify_delcon_relation(const MultiGraph& g, int r, std::size_t edge_index,
                            const DirectOptions& opts = {});

} // namespace bizon
