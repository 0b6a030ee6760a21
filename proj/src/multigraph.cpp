#include "bizon/multigraph.hpp"

#include "bizon/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace bizon {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n) + ")");
}

void check_edge_index(const MultiGraph& g, std::size_t i) {
  if (i >= g.num_edges())
    throw InvalidArgument("edge index " + std::to_string(i) + " out of range");
}

// Maps every vertex of g to its image after merging a and b (a < b).
std::vector<int> merge_map(int n, int a, int b) {
  std::vector<int> m(n);
  for (int v = 0; v < n; ++v) m[v] = v < b ? v : (v == b ? a : v - 1);
  return m;
}

} // namespace

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : MultiGraph(n) {
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
  }
  edges_ = std::move(edges);
}

std::size_t MultiGraph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

int MultiGraph::loops_at(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return e.is_loop() && e.u == v;
  }));
}

int MultiGraph::nonloop_degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return !e.is_loop() && (e.u == v || e.v == v);
  }));
}

int MultiGraph::total_loops() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

int MultiGraph::multiplicity(int u, int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [u, v](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  }));
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.is_loop()) return false;
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool MultiGraph::has_isolated_vertex() const {
  std::vector<bool> touched(n_, false);
  for (const Edge& e : edges_) touched[e.u] = touched[e.v] = true;
  return std::find(touched.begin(), touched.end(), false) != touched.end();
}

std::vector<int> MultiGraph::component_ids() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) parent[find(e.u)] = find(e.v);

  std::vector<int> id(n_, -1), root_id(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    int r = find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

int MultiGraph::num_components() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool MultiGraph::is_connected() const { return num_components() == 1; }

int kappa(const MultiGraph& g, VertexSubset s) {
  int k = 0;
  for (const Edge& e : g.edges())
    if (s.contains(e.u) || s.contains(e.v)) ++k;
  return k;
}

std::vector<int> kappa_table(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw BudgetExceeded("kappa table needs n <= 24");
  // κ_S = |E| - #edges with both endpoints outside S; count the latter by a
  // subset-sum over the complement.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> inside(std::size_t{1} << n, 0);
  for (const Edge& e : g.edges()) inside[(std::uint32_t{1} << e.u) | (std::uint32_t{1} << e.v)]++;
  for (int b = 0; b < n; ++b)
    for (std::uint32_t m = 0; m <= full; ++m)
      if (m & (std::uint32_t{1} << b)) inside[m] += inside[m ^ (std::uint32_t{1} << b)];
  std::vector<int> k(std::size_t{1} << n);
  const int m = static_cast<int>(g.num_edges());
  for (std::uint32_t s = 0; s <= full; ++s) k[s] = m - inside[full ^ s];
  return k;
}

int min_vertex_kappa(const MultiGraph& g) {
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.num_vertices(); ++v)
    best = std::min(best, g.nonloop_degree(v) + g.loops_at(v));
  return best;
}

MultiGraph delete_edge(const MultiGraph& g, std::size_t edge_index) {
  check_edge_index(g, edge_index);
  auto es = g.edges();
  es.erase(es.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return MultiGraph(g.num_vertices(), std::move(es));
}

MultiGraph loopy_contract(const MultiGraph& g, std::size_t edge_index) {
  check_edge_index(g, edge_index);
  const Edge pivot = g.edge(edge_index);
  if (pivot.is_loop()) throw InvalidArgument("cannot contract a loop");
  const int a = std::min(pivot.u, pivot.v), b = std::max(pivot.u, pivot.v);
  const auto m = merge_map(g.num_vertices(), a, b);
  std::vector<Edge> es;
  es.reserve(g.num_edges());
  for (const Edge& e : g.edges()) es.push_back({m[e.u], m[e.v]});
  return MultiGraph(g.num_vertices() - 1, std::move(es));
}

MultiGraph contract_dropping(const MultiGraph& g, std::size_t edge_index) {
  check_edge_index(g, edge_index);
  const Edge pivot = g.edge(edge_index);
  if (pivot.is_loop()) throw InvalidArgument("cannot contract a loop");
  const int a = std::min(pivot.u, pivot.v), b = std::max(pivot.u, pivot.v);
  const auto m = merge_map(g.num_vertices(), a, b);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) continue;
    es.push_back({m[e.u], m[e.v]});
  }
  return MultiGraph(g.num_vertices() - 1, std::move(es));
}

MultiGraph delooped_cone(const MultiGraph& g) {
  const int n = g.num_vertices();
  const int apex = n;
  std::vector<Edge> es;
  es.reserve(g.num_edges() + n);
  for (const Edge& e : g.edges())
    if (!e.is_loop()) es.push_back(e);
  for (int v = 0; v < n; ++v) es.push_back({v, apex});
  for (const Edge& e : g.edges())
    if (e.is_loop()) es.push_back({e.u, apex});
  return MultiGraph(n + 1, std::move(es));
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  auto es = a.edges();
  const int shift = a.num_vertices();
  for (const Edge& e : b.edges()) es.push_back({e.u + shift, e.v + shift});
  return MultiGraph(a.num_vertices() + b.num_vertices(), std::move(es));
}

MultiGraph permute(const MultiGraph& g, const std::vector<int>& perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    check_vertex(n, p);
    if (hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> es;
  es.reserve(g.num_edges());
  for (const Edge& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return MultiGraph(n, std::move(es));
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g.num_vertices(), vertices[i]);
    pos[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v]});
  return MultiGraph(static_cast<int>(vertices.size()), std::move(es));
}

std::vector<MultiGraph> components(const MultiGraph& g) {
  const auto id = g.component_ids();
  const int c = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<int>> members(c);
  for (int v = 0; v < g.num_vertices(); ++v) members[id[v]].push_back(v);
  std::vector<MultiGraph> out;
  out.reserve(c);
  for (const auto& vs : members) out.push_back(induced_subgraph(g, vs));
  return out;
}

int edge_connectivity(const MultiGraph& g) {
  // Stoer-Wagner minimum cut on the loopless weighted adjacency matrix.
  const int n = g.num_vertices();
  if (n < 2 || !g.is_connected()) return 0;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges())
    if (!e.is_loop()) {
      w[e.u][e.v]++;
      w[e.v][e.u]++;
    }
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  while (alive.size() > 1) {
    const std::size_t k = alive.size();
    std::vector<long long> key(k, 0);
    std::vector<bool> added(k, false);
    std::size_t prev = 0, last = 0;
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t sel = k;
      for (std::size_t i = 0; i < k; ++i)
        if (!added[i] && (sel == k || key[i] > key[sel])) sel = i;
      added[sel] = true;
      prev = last;
      last = sel;
      if (step + 1 == k) best = std::min(best, key[sel]);
      for (std::size_t i = 0; i < k; ++i)
        if (!added[i]) key[i] += w[alive[sel]][alive[i]];
    }
    const int s = alive[prev], t = alive[last];
    for (int x : alive) {
      w[s][x] += w[t][x];
      w[x][s] = w[s][x];
    }
    w[s][s] = 0;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return static_cast<int>(best);
}

MultiGraph generate_family(std::string_view name, int n) {
  if (name == "petersen") {
    MultiGraph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
  }
  if (n < 0) throw InvalidArgument("family size must be non-negative");
  if (name == "complete") {
    MultiGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "loops") {
    MultiGraph g(1);
    for (int i = 0; i < n; ++i) g.add_edge(0, 0);
    return g;
  }
  if (name == "cycle") {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }
  if (name == "path") {
    MultiGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

} // namespace bizon
