#pragma once

#include "bizon/bigint.hpp"
#include "bizon/multigraph.hpp"
#include "bizon/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace bizon {

/// An oriented edge. `source` is the endpoint the arc exits; a loop has a
/// single arc.
struct Arc {
  std::size_t edge = 0;
  int source = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// e': the opposite arc of the same edge. Loops are fixed.
Arc reversed(const MultiGraph& g, Arc a);

inline constexpr std::size_t kOracleMaxEdges = 14;

/// A set of arcs with at most one arc per edge. Two bits per edge:
/// 0 = unoriented, 1 = exits edge.u, 2 = exits edge.v (loops use 0 and 1).
struct PartialOrientation {
  std::uint64_t code = 0;

  int state(std::size_t edge) const { return static_cast<int>((code >> (2 * edge)) & 3u); }
  bool oriented(std::size_t edge) const { return state(edge) != 0; }
  PartialOrientation with_state(std::size_t edge, int s) const {
    return {(code & ~(std::uint64_t{3} << (2 * edge))) | (std::uint64_t(s) << (2 * edge))};
  }
  int degree() const;
  bool is_total(const MultiGraph& g) const;

  friend bool operator==(PartialOrientation, PartialOrientation) = default;
};

PartialOrientation from_arcs(const MultiGraph& g, const std::vector<Arc>& arcs);
std::vector<Arc> arcs_of(const MultiGraph& g, PartialOrientation p);

/// Number of arcs exiting each vertex.
ExponentVector score_vector(const MultiGraph& g, PartialOrientation p);

/// No directed cycle among non-loop arcs (two opposite arcs on parallel
/// edges form a cycle).
bool is_acyclic(const MultiGraph& g, PartialOrientation p);

/// All 2^ℓ 3^(|E|-ℓ) partial orientations. Throws above kOracleMaxEdges.
std::vector<PartialOrientation> enumerate_partial_orientations(const MultiGraph& g);

/// Integer combination of monomials x_Σ in Ê_G. Zero coefficients are never
/// stored.
class OracleElement {
public:
  OracleElement() = default;
  static OracleElement monomial(PartialOrientation p, BigInt coeff = 1);
  static OracleElement one() { return monomial({}); }

  void add(PartialOrientation p, const BigInt& coeff);
  BigInt coeff(PartialOrientation p) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::unordered_map<std::uint64_t, BigInt>& terms() const { return terms_; }

  OracleElement& operator+=(const OracleElement& o);
  OracleElement& operator-=(const OracleElement& o);
  friend OracleElement operator+(OracleElement a, const OracleElement& b) { return a += b; }
  friend OracleElement operator-(OracleElement a, const OracleElement& b) { return a -= b; }
  OracleElement scaled(const BigInt& c) const;
  friend bool operator==(const OracleElement&, const OracleElement&) = default;

private:
  std::unordered_map<std::uint64_t, BigInt> terms_;
};

/// x_Σ1 x_Σ2 = x_{Σ1 ∪ Σ2} when Σ1 and Σ2 use disjoint edge sets, else 0.
OracleElement multiply(const OracleElement& a, const OracleElement& b);

OracleElement arc_element(const MultiGraph& g, Arc a);

/// y_v: the sum of the arcs exiting v.
OracleElement y_generator(const MultiGraph& g, int v);

/// Π_v y_v^(a_v).
OracleElement y_power(const MultiGraph& g, const ExponentVector& a);

enum class Quotient { external, central, internal };

/// Whether x_Σ lies in the monomial ideal defining the quotient.
///   central:  some nonempty S has E_S ⊆ π(Σ) with every edge of E_S that
///             leaves S oriented out of S.
///   internal: some S with κ_S ≥ 1 meets that condition after adding one
///             arc, i.e. at most one edge of E_S is unoriented or points
///             into S.
bool vanishes_in_quotient(const MultiGraph& g, Quotient q, PartialOrientation p);

/// Drops the monomials that vanish in the quotient.
OracleElement reduce(const MultiGraph& g, Quotient q, const OracleElement& x);

/// Hilbert function of the subalgebra generated by the y_v in Ê_G (r = 1),
/// its central quotient (r = 0) or its internal quotient (r = -1).
HilbertPolynomial subalgebra_hilbert_via_oracle(const MultiGraph& g, int r);

/// δ_e: Ê_G → Ê_{G-e}, δ_e(x_Σ) = x_{Σ-ε'} if ε' ∈ Σ, -x_{Σ-ε''} if ε'' ∈ Σ,
/// 0 when e is unoriented. ε' exits edge.u. Edge indices above e shift down.
OracleElement delta_derivation(const MultiGraph& g, std::size_t edge_index, const OracleElement& x);

/// ρ_e: Ê_G → Ê_{G-e}, kills monomials orienting e.
OracleElement rho(const MultiGraph& g, std::size_t edge_index, const OracleElement& x);

/// γ_e: Ê_{G/e} → Ê_G. Loops of G/e coming from edges parallel to e map to
/// the sum of their two arcs; every other arc maps to itself.
OracleElement gamma(const MultiGraph& g, std::size_t edge_index, const OracleElement& x);

struct SesReport {
  /// dim(G)_k = dim(G/e)_k + dim(G-e)_(k-1) for every k.
  bool dimensions = false;
  /// In each degree δ_e maps the basis of B^e_G onto a spanning set of
  /// B^e_(G-e) in degree k-1 and its kernel has dimension dim(G/e)_k.
  bool ranks = false;
  /// δ_e(y^a) = a_p y^(a-e_p) - a_q y^(a-e_q) with p = edge.u, q = edge.v.
  bool images = false;
  /// δ_e ∘ γ_e = 0 on the basis of B^e_(G/e).
  bool kernel = false;
  bool ok() const { return dimensions && ranks && images && kernel; }
};

/// Checks the exact sequence 0 → B^e_(G/e) → B^e_G → B^e_(G-e)[-1] → 0.
SesReport verify_ses(const MultiGraph& g, std::size_t edge_index);

struct ScoreBucket {
  std::uint64_t partial = 0;
  std::uint64_t acyclic = 0;
  std::uint64_t total = 0;
  std::uint64_t acyclic_total = 0;
  friend bool operator==(const ScoreBucket&, const ScoreBucket&) = default;
};

/// Partial orientations grouped by score vector.
std::map<ExponentVector, ScoreBucket> bucket_by_score(const MultiGraph& g);

} // namespace bizon
