#include "brute.hpp"

#include "bizon/app/corpus.hpp"
#include "bizon/counting.hpp"
#include "bizon/errors.hpp"
#include "bizon/oracle.hpp"
#include "bizon/polytope.hpp"

#include <doctest.h>

using namespace bizon;

namespace {

MultiGraph K(int n) { return generate_family("complete", n); }

bool in_polytope(const MultiGraph& g, const ExponentVector& a) {
  for (int x : a)
    if (x < 0) return false;
  for (std::uint32_t s = 1; s < (1u << g.num_vertices()); ++s)
    if (brute::sum_on(a, s) > brute::kappa(g, s)) return false;
  return true;
}

} // namespace

TEST_CASE("vertices from ordered subsets") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      OrderedSubset j(m);
      std::iota(j.begin(), j.end(), 0);
      ExponentVector want(n, 0);
      for (int i = 0; i < m; ++i) want[i] = n - 1 - i;
      CHECK(vertex_from_ordered_subset(K(n), j) == want);
    }
  }
  const MultiGraph g3(2, {{0, 1}, {1, 1}});
  CHECK(vertex_from_ordered_subset(g3, {1}) == ExponentVector{0, 2});
  CHECK(vertex_from_ordered_subset(g3, {}) == ExponentVector{0, 0});
  CHECK_THROWS_AS(vertex_from_ordered_subset(g3, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(vertex_from_ordered_subset(g3, {2}), InvalidArgument);
}

TEST_CASE("vertex counts of complete graphs") {
  CHECK(all_vertices(K(3)).size() == 10);
  CHECK(all_vertices(K(4)).size() == 41);
  const auto k5 = vertex_count_bounds(K(5));
  CHECK(k5.count == 206);
  CHECK(k5.bound == 206);
  CHECK(k5.tight);
  // floor((e - 1) n!) for n = 2..6.
  const std::size_t want[] = {0, 0, 3, 10, 41, 206, 1237};
  for (int n = 2; n <= 6; ++n) CHECK(all_vertices(K(n)).size() == want[n]);
  CHECK_THROWS_AS(all_vertices(K(9)), BudgetExceeded);
}

TEST_CASE("segments and non-tight examples") {
  for (int n = 1; n <= 5; ++n)
    CHECK(all_vertices(generate_family("loops", n)) == PolytopeVertexSet{{0}, {n}});
  const auto path = vertex_count_bounds(generate_family("path", 3));
  CHECK(path.count < 10);
  CHECK(path.bound == 10);
  CHECK_FALSE(path.tight);
  const auto l2 = vertex_count_bounds(generate_family("loops", 2));
  CHECK(l2.count == 2);
  CHECK(l2.bound == 2);
}

TEST_CASE("vertex characterisations") {
  CHECK(verify_vertex_characterizations(K(3)).ok());
  for (const auto& e : app::parking_examples()) CHECK(verify_vertex_characterizations(e.graph).ok());
  CHECK(verify_vertex_characterizations(MultiGraph(2, {{0, 1}, {0, 1}})).ok());
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = brute::random_multigraph(rng, 5, 8);
    const auto c = verify_vertex_characterizations(g);
    CHECK(c.unique_orientation);
    CHECK(c.midpoint);
  }
}

TEST_CASE("lattice points, vertices and score vectors") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = brute::random_multigraph(rng, 5, 8);
    const auto pts = lattice_points(g);
    std::set<ExponentVector> scores;
    for (const auto& [a, b] : bucket_by_score(g)) scores.insert(a);
    CHECK(std::set<ExponentVector>(pts.begin(), pts.end()) == scores);
    std::size_t inside = 0;
    brute::for_each_box(std::vector<int>(g.num_vertices(), static_cast<int>(g.num_edges())),
                        [&](const ExponentVector& a) { inside += in_polytope(g, a); });
    CHECK(pts.size() == inside);
    CHECK(BigInt(pts.size()) == hilbert_direct(g, 1).dimension());
    for (const auto& v : all_vertices(g)) CHECK(in_polytope(g, v));
  }
}

TEST_CASE("simple non-complete graphs fall below the bound") {
  std::mt19937_64 rng(92);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 30; ++trial) {
    const auto g = brute::random_multigraph(rng, 5, 8, 2);
    if (!g.is_simple()) continue;
    const int n = g.num_vertices();
    if (g.num_edges() == static_cast<std::size_t>(n * (n - 1) / 2)) continue;
    ++seen;
    const auto b = vertex_count_bounds(g);
    CHECK(b.count < b.bound);
    CHECK_FALSE(b.tight);
  }
  CHECK(seen > 0);
}
