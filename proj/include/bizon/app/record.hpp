#pragma once

#include "bizon/polynomial.hpp"

#include <string>

namespace bizon::app {

struct ResultRecord {
  std::string graph;
  int r = 0;
  std::string method;
  HilbertPolynomial hilbert;
  double wall_time_seconds = 0.0;
};

/// Keys: graph, r, method, hilbert (decimal strings), dimension, top_degree,
/// top_dimension, wall_time_seconds.
std::string to_json(const ResultRecord& rec);

/// "<graph> (r = 1, direct): dim = 17; h(k): 1, 3, 6, 7"
std::string to_text(const ResultRecord& rec);

} // namespace bizon::app
