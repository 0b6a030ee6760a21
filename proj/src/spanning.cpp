#include "bizon/spanning.hpp"

#include "bizon/canonical.hpp"
#include "bizon/errors.hpp"
#include "bizon/exact_linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace bizon {

BigInt spanning_tree_count(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n == 0 || !g.is_connected()) return 0;
  BigMatrix lap(n - 1, std::vector<BigInt>(n - 1, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    // Row/column 0 is removed.
    const int u = e.u - 1, v = e.v - 1;
    if (u >= 0) lap[u][u] += 1;
    if (v >= 0) lap[v][v] += 1;
    if (u >= 0 && v >= 0) {
      lap[u][v] -= 1;
      lap[v][u] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

namespace {

using Counts = std::vector<BigInt>;

Counts convolve(const Counts& a, const Counts& b) {
  Counts out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

class ForestCounter {
public:
  Counts count(const MultiGraph& g) {
    // Components multiply: forests of a disjoint union are pairs of forests.
    if (g.num_components() > 1) {
      Counts acc{1};
      for (const MultiGraph& c : components(g)) acc = convolve(acc, count_connected(c));
      return acc;
    }
    return count_connected(g);
  }

private:
  Counts count_connected(const MultiGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) return {1};
    if (n == 1) return {0, 1};
    const bool memo_ok = n <= kCanonicalMaxVertices;
    CanonicalForm key;
    if (memo_ok) {
      key = canonical_form(g);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    // Pick a non-loop edge; all of its parallel copies share one contraction.
    std::size_t pivot = 0;
    while (g.edge(pivot).is_loop()) ++pivot;
    const Edge p = g.edge(pivot);
    const int mult = g.multiplicity(p.u, p.v);

    std::vector<Edge> rest;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      if ((e.u == p.u && e.v == p.v) || (e.u == p.v && e.v == p.u)) continue;
      rest.push_back(e);
    }
    const MultiGraph without(n, rest);
    const MultiGraph merged = contract_dropping(g, pivot);

    // Forests avoiding the class, plus forests using exactly one copy.
    Counts out = count(without);
    const Counts with = count(merged);
    // A forest of G/e with c components lifts to one of G with c components.
    if (out.size() < with.size()) out.resize(with.size(), 0);
    for (std::size_t k = 0; k < with.size(); ++k) out[k] += with[k] * mult;
    out.resize(n + 1, 0);
    if (memo_ok) memo_.emplace(std::move(key), out);
    return out;
  }

  std::unordered_map<CanonicalForm, Counts> memo_;
};

} // namespace

std::vector<BigInt> spanning_forest_counts(const MultiGraph& g) {
  const auto nonloop = g.num_edges() - static_cast<std::size_t>(g.total_loops());
  if (nonloop > kForestMaxEdges)
    throw BudgetExceeded("spanning forest enumeration limited to " +
                         std::to_string(kForestMaxEdges) + " edges");
  ForestCounter counter;
  Counts c = counter.count(g);
  c.resize(g.num_vertices() + 1, 0);
  return c;
}

BigInt spanning_forest_total(const MultiGraph& g) {
  BigInt total = 0;
  for (const BigInt& c : spanning_forest_counts(g)) total += c;
  return total;
}

} // namespace bizon
