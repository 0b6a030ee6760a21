#include "bizon/polytope.hpp"

#include "bizon/errors.hpp"

#include <unordered_map>
#include <unordered_set>

namespace bizon {

namespace {

struct VectorHash {
  std::size_t operator()(const ExponentVector& a) const noexcept {
    std::size_t h = a.size();
    for (int x : a) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};

// Number of partial orientations realising each score vector, capped at 2.
// Streams over edges instead of materialising the orientations.
class OrientationCounter {
public:
  explicit OrientationCounter(const MultiGraph& g) : g_(g), score_(g.num_vertices(), 0) {}

  std::unordered_map<ExponentVector, int, VectorHash> run() {
    double total = 1;
    for (const Edge& e : g_.edges()) total *= e.is_loop() ? 2 : 3;
    if (total > kCharacterizationMaxOrientations)
      throw BudgetExceeded("too many partial orientations for vertex characterisation");
    visit(0);
    return std::move(counts_);
  }

private:
  void visit(std::size_t i) {
    if (i == g_.num_edges()) {
      int& c = counts_[score_];
      c = std::min(c + 1, 2);
      return;
    }
    const Edge& e = g_.edge(i);
    visit(i + 1);
    ++score_[e.u];
    visit(i + 1);
    --score_[e.u];
    if (e.is_loop()) return;
    ++score_[e.v];
    visit(i + 1);
    --score_[e.v];
  }

  const MultiGraph& g_;
  ExponentVector score_;
  std::unordered_map<ExponentVector, int, VectorHash> counts_;
};

// Extends every ordered prefix by each unused vertex.
void extend(const MultiGraph& g, OrderedSubset& j, std::vector<bool>& used, PolytopeVertexSet& out) {
  out.insert(vertex_from_ordered_subset(g, j));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (used[v]) continue;
    used[v] = true;
    j.push_back(v);
    extend(g, j, used, out);
    j.pop_back();
    used[v] = false;
  }
}

} // namespace

ExponentVector vertex_from_ordered_subset(const MultiGraph& g, const OrderedSubset& j) {
  const int n = g.num_vertices();
  if (n > 32) throw BudgetExceeded("polytope vertices limited to 32 graph vertices");
  std::vector<bool> seen(n, false);
  for (int v : j) {
    if (v < 0 || v >= n || seen[v]) throw InvalidArgument("invalid ordered subset");
    seen[v] = true;
  }
  ExponentVector a(n, 0);
  VertexSubset earlier;
  for (int v : j) {
    for (const Edge& e : g.edges()) {
      if (e.u != v && e.v != v) continue;
      const int other = e.u == v ? e.v : e.u;
      if (!earlier.contains(other)) a[v]++;
    }
    earlier.mask |= std::uint32_t{1} << v;
  }
  return a;
}

PolytopeVertexSet all_vertices(const MultiGraph& g) {
  if (g.num_vertices() > kPolytopeMaxVertices)
    throw BudgetExceeded("ordered-subset enumeration limited to 8 vertices");
  PolytopeVertexSet out;
  OrderedSubset j;
  std::vector<bool> used(g.num_vertices(), false);
  extend(g, j, used, out);
  return out;
}

std::vector<ExponentVector> lattice_points(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > 16) throw BudgetExceeded("lattice point enumeration limited to 16 vertices");
  const auto kap = kappa_table(g);
  ExponentVector hi(n);
  double box = 1.0;
  for (int v = 0; v < n; ++v) {
    hi[v] = kap[std::size_t{1} << v];
    box *= hi[v] + 1;
  }
  if (box > 5e7) throw BudgetExceeded("lattice point box too large");
  std::vector<ExponentVector> out;
  ExponentVector a(n, 0);
  while (true) {
    bool inside = true;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n) && inside; ++s) {
      int sum = 0;
      for (int v = 0; v < n; ++v)
        if ((s >> v) & 1u) sum += a[v];
      inside = sum <= kap[s];
    }
    if (inside) out.push_back(a);
    int v = n - 1;
    while (v >= 0 && a[v] == hi[v]) a[v--] = 0;
    if (v < 0) break;
    a[v]++;
  }
  return out;
}

VertexCharacterization verify_vertex_characterizations(const MultiGraph& g) {
  const auto vertices = all_vertices(g);
  const auto points = lattice_points(g);

  PolytopeVertexSet unique;
  for (const auto& [score, count] : OrientationCounter(g).run())
    if (count == 1) unique.insert(score);

  const std::unordered_set<ExponentVector, VectorHash> lookup(points.begin(), points.end());
  PolytopeVertexSet extreme;
  for (const auto& a : points) {
    bool midpoint = false;
    ExponentVector c(a.size());
    for (const auto& b : points) {
      if (b == a) continue;
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = 2 * a[i] - b[i];
      if (lookup.count(c)) {
        midpoint = true;
        break;
      }
    }
    if (!midpoint) extreme.insert(a);
  }

  VertexCharacterization out;
  out.unique_orientation = vertices == unique;
  out.midpoint = vertices == extreme;
  return out;
}

VertexCountBounds vertex_count_bounds(const MultiGraph& g) {
  const int n = g.num_vertices();
  VertexCountBounds out;
  out.count = all_vertices(g).size();
  // Sum of n!/m! for m = n down to 0; the last term is n!.
  unsigned long long term = 1, full = 0;
  for (int m = n; m >= 0; --m) {
    full += term;
    if (m > 0) term *= static_cast<unsigned long long>(m);
  }
  out.bound = g.is_simple() && n > 0 ? full - term : full;
  out.tight = out.count == out.bound;
  return out;
}

} // namespace bizon
