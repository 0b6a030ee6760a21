#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

namespace bizon {

/// A set of vertices of a graph with at most 32 vertices, stored as a bitmask.
struct VertexSubset {
  std::uint32_t mask = 0;

  static VertexSubset of(std::initializer_list<int> vs) {
    VertexSubset s;
    for (int v : vs) s.mask |= std::uint32_t{1} << v;
    return s;
  }
  static VertexSubset all(int n) {
    return {n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1};
  }
  bool contains(int v) const { return (mask >> v) & 1u; }
  bool empty() const { return mask == 0; }
  int size() const { return __builtin_popcount(mask); }

  friend bool operator==(VertexSubset, VertexSubset) = default;
};

/// Exponent vector a = (a_v): monomial exponents, score vectors, parking
/// vectors. Indexed by vertex.
using ExponentVector = std::vector<int>;

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with loops on vertices 0..n-1.
///
/// Parallel edges are represented by repetition in the edge list. The edge
/// order carries no meaning for any derived quantity, but it is preserved
/// so that edge indices stay stable across copies.
class MultiGraph {
public:
  MultiGraph() = default;
  explicit MultiGraph(int n);
  MultiGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Appends an edge and returns its index.
  std::size_t add_edge(int u, int v);

  /// ℓ(v): loops at v.
  int loops_at(int v) const;
  /// d(v): non-loop edges at v.
  int nonloop_degree(int v) const;
  int total_loops() const;
  /// Number of edges between distinct vertices u and v.
  int multiplicity(int u, int v) const;

  bool is_simple() const;
  bool has_isolated_vertex() const;

  /// Vertex → component id (ids follow first-appearance order).
  std::vector<int> component_ids() const;
  int num_components() const;
  bool is_connected() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// κ_S: number of edges with at least one endpoint in s (loops once).
int kappa(const MultiGraph& g, VertexSubset s);

/// κ_S for every subset of the vertex set, indexed by mask. Requires n ≤ 24.
std::vector<int> kappa_table(const MultiGraph& g);

/// δ_G = min_v κ_v. Returns a large value for the empty graph.
int min_vertex_kappa(const MultiGraph& g);

MultiGraph delete_edge(const MultiGraph& g, std::size_t edge_index);

/// Identifies the endpoints of a non-loop edge without removing it, so the
/// edge and every parallel copy become loops at the merged vertex. The
/// merged vertex takes the smaller index; vertices above the larger
/// endpoint shift down by one.
MultiGraph loopy_contract(const MultiGraph& g, std::size_t edge_index);

/// Ordinary contraction: merges the endpoints and drops every edge between
/// them. Existing loops are kept. Used by forest counting.
MultiGraph contract_dropping(const MultiGraph& g, std::size_t edge_index);

/// Adds an apex (index n) joined to every vertex, and moves every loop to
/// an extra apex edge at its base vertex.
MultiGraph delooped_cone(const MultiGraph& g);

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

/// Relabels vertex v as perm[v].
MultiGraph permute(const MultiGraph& g, const std::vector<int>& perm);

/// Induced subgraph on the given vertices (relabelled in the listed order).
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices);

/// Connected components as separate graphs, each relabelled from 0.
std::vector<MultiGraph> components(const MultiGraph& g);

/// Minimum number of edges whose removal disconnects g (loops ignored).
/// Returns 0 for disconnected graphs and for graphs with fewer than two
/// vertices.
int edge_connectivity(const MultiGraph& g);

/// Named families: complete, loops, cycle, path, petersen.
MultiGraph generate_family(std::string_view name, int n);

} // namespace bizon
