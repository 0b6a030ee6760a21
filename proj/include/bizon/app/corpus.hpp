#pragma once

#include "bizon/multigraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bizon::app {

struct CorpusEntry {
  std::string name;
  MultiGraph graph;
};

inline constexpr std::uint64_t kDefaultCorpusSeed = 20240917;

/// `count` random multigraphs with 1..max_n vertices and 1..max_edges edges.
/// Endpoints are drawn uniformly, so loops and parallel edges occur.
std::vector<CorpusEntry> random_corpus(std::uint64_t seed, int count = 50, int max_n = 6,
                                       int max_edges = 10);

/// The random corpus plus K_2..K_6 and L_1..L_5.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = kDefaultCorpusSeed);

/// Every multigraph with 1..max_n vertices and at most max_edges edges, one
/// per isomorphism class.
std::vector<CorpusEntry> small_multigraphs(int max_n = 4, int max_edges = 6);

/// The four two-vertex graphs of the parking-function example, on vertices
/// 1 and 2: a single edge; a loop at 2; an edge and a loop at 2; a double edge.
std::vector<CorpusEntry> parking_examples();

} // namespace bizon::app
