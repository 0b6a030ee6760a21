#include "bizon/app/corpus.hpp"

#include "bizon/canonical.hpp"

#include <random>
#include <unordered_set>

namespace bizon::app {

std::vector<CorpusEntry> random_corpus(std::uint64_t seed, int count, int max_n, int max_edges) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform(1, max_n);
    const int m = uniform(1, max_edges);
    MultiGraph g(n);
    for (int k = 0; k < m; ++k) g.add_edge(uniform(0, n - 1), uniform(0, n - 1));
    out.push_back({"random-" + std::to_string(i), std::move(g)});
  }
  return out;
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
  auto out = random_corpus(seed);
  for (int n = 2; n <= 6; ++n) out.push_back({"K" + std::to_string(n), generate_family("complete", n)});
  for (int n = 1; n <= 5; ++n) out.push_back({"L" + std::to_string(n), generate_family("loops", n)});
  return out;
}

std::vector<CorpusEntry> small_multigraphs(int max_n, int max_edges) {
  std::vector<CorpusEntry> out;
  std::unordered_set<CanonicalForm> seen;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> types;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) types.push_back({u, v});
    // Multisets of edge types, generated with non-decreasing type index.
    std::vector<Edge> edges;
    auto rec = [&](auto&& self, std::size_t first) -> void {
      MultiGraph g(n, edges);
      if (seen.insert(canonical_form(g)).second)
        out.push_back({"small-" + std::to_string(out.size()), std::move(g)});
      if (static_cast<int>(edges.size()) == max_edges) return;
      for (std::size_t t = first; t < types.size(); ++t) {
        edges.push_back(types[t]);
        self(self, t);
        edges.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<CorpusEntry> parking_examples() {
  return {
      {"G1", MultiGraph(2, {{0, 1}})},
      {"G2", MultiGraph(2, {{1, 1}})},
      {"G3", MultiGraph(2, {{0, 1}, {1, 1}})},
      {"G4", MultiGraph(2, {{0, 1}, {0, 1}})},
  };
}

} // namespace bizon::app
