#include "bizon/parking.hpp"

#include "bizon/errors.hpp"
#include "bizon/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bizon {

namespace {

void check_vector(const MultiGraph& g, const ExponentVector& f) {
  if (static_cast<int>(f.size()) != g.num_vertices()) throw InvalidArgument("vector length mismatch");
}

// Calls visit(f) for every f in the box Π_v [0, κ_v], lexicographically.
template <typename Visit>
void for_each_in_box(const MultiGraph& g, Visit&& visit) {
  const int n = g.num_vertices();
  if (n > 24) throw BudgetExceeded("parking enumeration limited to 24 vertices");
  ExponentVector hi(n);
  double box = 1.0;
  for (int v = 0; v < n; ++v) {
    hi[v] = kappa(g, VertexSubset::of({v}));
    box *= hi[v] + 1;
  }
  if (box > kParkingBoxBudget)
    throw BudgetExceeded("parking search box " + std::to_string(box) + " exceeds budget");
  ExponentVector f(n, 0);
  while (true) {
    visit(f);
    int v = n - 1;
    while (v >= 0 && f[v] == hi[v]) f[v--] = 0;
    if (v < 0) break;
    f[v]++;
  }
}

} // namespace

int dhat(const MultiGraph& g, VertexSubset s, int v) {
  if (v < 0 || v >= g.num_vertices() || !s.contains(v)) throw InvalidArgument("vertex not in subset");
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      count += e.u == v;
    } else if (e.u == v) {
      count += !s.contains(e.v);
    } else if (e.v == v) {
      count += !s.contains(e.u);
    }
  }
  return count;
}

bool is_weak_parking(const MultiGraph& g, const ExponentVector& f) {
  check_vector(g, f);
  const int n = g.num_vertices();
  if (n > 32) throw BudgetExceeded("parking test limited to 32 vertices");
  VertexSubset s = VertexSubset::all(n);
  bool progress = true;
  while (!s.empty() && progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (s.contains(v) && f[v] <= dhat(g, s, v)) {
        s.mask &= ~(std::uint32_t{1} << v);
        progress = true;
      }
    }
  }
  return s.empty();
}

std::vector<WeakParkingFunction> enumerate_weak_parking(const MultiGraph& g) {
  std::vector<WeakParkingFunction> out;
  for_each_in_box(g, [&](const ExponentVector& f) {
    if (is_weak_parking(g, f)) out.push_back(f);
  });
  return out;
}

WeakParkingFunction f_pi(const MultiGraph& g, const std::vector<int>& ordering) {
  const int n = g.num_vertices();
  if (static_cast<int>(ordering.size()) != n) throw InvalidArgument("ordering is not a permutation");
  std::vector<bool> seen(n, false);
  for (int v : ordering) {
    if (v < 0 || v >= n || seen[v]) throw InvalidArgument("ordering is not a permutation");
    seen[v] = true;
  }
  WeakParkingFunction f(n, 0);
  VertexSubset rest = VertexSubset::all(n);
  for (int v : ordering) {
    f[v] = dhat(g, rest, v);
    rest.mask &= ~(std::uint32_t{1} << v);
  }
  return f;
}

std::set<WeakParkingFunction> maximal_weak_parking(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > 10) throw BudgetExceeded("maximal parking functions limited to 10 vertices");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::set<WeakParkingFunction> out;
  do {
    out.insert(f_pi(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<WeakParkingFunction> cone_parking_functions(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw BudgetExceeded("cone parking check limited to 20 vertices");
  const MultiGraph cone = delooped_cone(g);
  // d_S(v) in the cone: edges from v to vertices outside S, the apex included.
  auto d_out = [&](std::uint32_t s, int v) {
    int count = 0;
    for (const Edge& e : cone.edges()) {
      if (e.u == v && !((s >> e.v) & 1u)) ++count;
      else if (e.v == v && !((s >> e.u) & 1u)) ++count;
    }
    return count;
  };
  std::vector<WeakParkingFunction> out;
  for_each_in_box(g, [&](const ExponentVector& f) {
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
      bool some = false;
      for (int v = 0; v < n && !some; ++v)
        if (((s >> v) & 1u) && f[v] < d_out(s, v)) some = true;
      if (!some) return;
    }
    out.push_back(f);
  });
  return out;
}

bool cone_equivalence_check(const MultiGraph& g) {
  return enumerate_weak_parking(g) == cone_parking_functions(g);
}

bool parking_vs_acyclic(const MultiGraph& g) {
  std::set<ExponentVector> acyclic_partial, acyclic_total;
  for (const auto& [score, bucket] : bucket_by_score(g)) {
    if (bucket.acyclic > 0) acyclic_partial.insert(score);
    if (bucket.acyclic_total > 0) acyclic_total.insert(score);
  }
  const auto parking = enumerate_weak_parking(g);
  const std::set<ExponentVector> parking_set(parking.begin(), parking.end());
  return parking_set == acyclic_partial && maximal_weak_parking(g) == acyclic_total;
}

} // namespace bizon
