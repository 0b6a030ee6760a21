#include "brute.hpp"

#include "bizon/app/corpus.hpp"
#include "bizon/counting.hpp"
#include "bizon/errors.hpp"
#include "bizon/oracle.hpp"
#include "bizon/spanning.hpp"

#include <doctest.h>

#include <set>

using namespace bizon;

namespace {

MultiGraph K(int n) { return generate_family("complete", n); }

std::uint64_t expected_count(const MultiGraph& g) {
  std::uint64_t c = 1;
  for (const Edge& e : g.edges()) c *= e.is_loop() ? 2 : 3;
  return c;
}

OracleElement random_element(const MultiGraph& g, std::mt19937_64& rng) {
  const auto all = enumerate_partial_orientations(g);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  OracleElement x;
  for (int i = 0; i < 4; ++i) x.add(all[pick(rng)], coeff(rng));
  return x;
}

} // namespace

TEST_CASE("partial orientation counts") {
  CHECK(enumerate_partial_orientations(K(2)).size() == 3);
  CHECK(enumerate_partial_orientations(generate_family("loops", 1)).size() == 2);
  CHECK(enumerate_partial_orientations(K(3)).size() == 27);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    const auto g = brute::random_multigraph(rng, 5, 8);
    const auto all = enumerate_partial_orientations(g);
    CHECK(all.size() == expected_count(g));
    std::set<std::uint64_t> codes;
    for (auto p : all) codes.insert(p.code);
    CHECK(codes.size() == all.size());
  }
  MultiGraph big(2);
  for (int i = 0; i < 15; ++i) big.add_edge(0, 1);
  CHECK_THROWS_AS(enumerate_partial_orientations(big), BudgetExceeded);
}

TEST_CASE("arcs, reversal and score vectors") {
  const MultiGraph g(2, {{0, 1}, {1, 1}});
  const Arc out0{0, 0};
  CHECK(reversed(g, out0) == Arc{0, 1});
  CHECK(reversed(g, reversed(g, out0)) == out0);
  CHECK(reversed(g, Arc{1, 1}) == Arc{1, 1});
  const auto p = from_arcs(g, {Arc{0, 1}, Arc{1, 1}});
  CHECK(p.degree() == 2);
  CHECK(p.is_total(g));
  CHECK(score_vector(g, p) == ExponentVector{0, 2});
  CHECK(arcs_of(g, p).size() == 2);
  CHECK_THROWS_AS(from_arcs(g, {Arc{0, 0}, Arc{0, 1}}), InvalidArgument);
}

TEST_CASE("acyclicity") {
  const MultiGraph dbl(2, {{0, 1}, {0, 1}});
  CHECK_FALSE(is_acyclic(dbl, from_arcs(dbl, {Arc{0, 0}, Arc{1, 1}})));
  CHECK(is_acyclic(dbl, from_arcs(dbl, {Arc{0, 0}, Arc{1, 0}})));
  const auto tri = K(3);
  // 0->1, 1->2, 2->0 with edges (0,1), (0,2), (1,2).
  CHECK_FALSE(is_acyclic(tri, from_arcs(tri, {Arc{0, 0}, Arc{2, 1}, Arc{1, 2}})));
  CHECK(is_acyclic(tri, from_arcs(tri, {Arc{0, 0}, Arc{2, 1}, Arc{1, 0}})));
  const MultiGraph loop(1, {{0, 0}});
  CHECK(is_acyclic(loop, from_arcs(loop, {Arc{0, 0}})));
}

TEST_CASE("multiplication") {
  const auto g = K(3);
  const auto e = arc_element(g, Arc{0, 0});
  const auto e_rev = arc_element(g, Arc{0, 1});
  CHECK(multiply(e, e_rev).is_zero());
  CHECK(multiply(e, e).is_zero());
  CHECK(multiply(OracleElement::one(), e) == e);
  const auto f = arc_element(g, Arc{1, 0});
  CHECK(multiply(e, f) == OracleElement::monomial(from_arcs(g, {Arc{0, 0}, Arc{1, 0}})));
  CHECK(multiply(e, f) == multiply(f, e));
}

TEST_CASE("y powers") {
  const auto k2 = K(2);
  CHECK(y_power(k2, {1, 0}) == arc_element(k2, Arc{0, 0}));
  CHECK(y_power(k2, {1, 1}).is_zero());
  CHECK(y_power(k2, {0, 0}) == OracleElement::one());
  const auto k3 = K(3);
  const auto y = y_power(k3, {2, 1, 0});
  CHECK_FALSE(y.is_zero());
  for (const auto& [code, c] : y.terms()) CHECK(c > 0);
  CHECK(y_generator(k3, 0) == arc_element(k3, Arc{0, 0}) + arc_element(k3, Arc{1, 0}));
}

TEST_CASE("nonzero y powers are exactly the basis monomials for r = 1") {
  std::size_t graphs = 0;
  for (const auto& [name, g] : app::small_multigraphs(4, 6)) {
    ++graphs;
    std::vector<int> hi(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) hi[v] = brute::kappa(g, 1u << v) + 1;
    std::map<std::uint64_t, ExponentVector> owner;
    brute::for_each_box(hi, [&](const ExponentVector& a) {
      const auto y = y_power(g, a);
      CHECK(!y.is_zero() == is_basis_monomial(g, 1, a));
      for (const auto& [code, c] : y.terms()) {
        CHECK(c > 0);
        // Distinct y^a have disjoint supports.
        CHECK(owner.emplace(code, a).second);
      }
    });
  }
  CHECK(graphs == 748);
}

TEST_CASE("vanishing examples") {
  const auto l1 = generate_family("loops", 1);
  CHECK(vanishes_in_quotient(l1, Quotient::central, from_arcs(l1, {Arc{0, 0}})));
  CHECK_FALSE(vanishes_in_quotient(l1, Quotient::central, PartialOrientation{}));
  CHECK_FALSE(vanishes_in_quotient(K(2), Quotient::central, PartialOrientation{}));
  CHECK(vanishes_in_quotient(K(2), Quotient::internal, PartialOrientation{}));
  CHECK_FALSE(vanishes_in_quotient(K(2), Quotient::external, from_arcs(K(2), {Arc{0, 0}})));
  // Total orientation of K3 with a source: S = all vertices, nothing leaves.
  const auto k3 = K(3);
  const auto total = from_arcs(k3, {Arc{0, 0}, Arc{1, 0}, Arc{2, 1}});
  CHECK(vanishes_in_quotient(k3, Quotient::central, total));
  const auto reduced = reduce(k3, Quotient::central, OracleElement::monomial(total) + OracleElement::one());
  CHECK(reduced == OracleElement::one());
}

TEST_CASE("quotient examples") {
  CHECK(subalgebra_hilbert_via_oracle(K(3), 1) == HilbertPolynomial{1, 3, 6, 7});
  CHECK(subalgebra_hilbert_via_oracle(K(3), 0) == HilbertPolynomial{1, 3, 3});
  CHECK(subalgebra_hilbert_via_oracle(K(4), -1) == HilbertPolynomial{1, 4, 6, 4, 1});
  CHECK_THROWS_AS(subalgebra_hilbert_via_oracle(K(3), 2), InvalidArgument);
}

TEST_CASE("oracle agrees with direct counting on all small multigraphs") {
  for (const auto& [name, g] : app::small_multigraphs(4, 6)) {
    for (int r : {1, 0, -1}) {
      if (r < min_r(g)) continue;
      CHECK(subalgebra_hilbert_via_oracle(g, r) == hilbert_direct(g, r));
    }
  }
}

TEST_CASE("delta examples") {
  const auto k2 = K(2);
  CHECK(delta_derivation(k2, 0, arc_element(k2, Arc{0, 0})) == OracleElement::one());
  CHECK(delta_derivation(k2, 0, arc_element(k2, Arc{0, 1})) == OracleElement::one().scaled(-1));
  CHECK(delta_derivation(k2, 0, OracleElement::one()).is_zero());
  CHECK(delta_derivation(k2, 0, y_power(k2, {1, 1})).is_zero());
  CHECK_THROWS_AS(delta_derivation(generate_family("loops", 1), 0, OracleElement::one()), InvalidArgument);

  // On generators: +1 at edge.u, -1 at edge.v, 0 elsewhere.
  const auto k3 = K(3);
  const auto minus = delete_edge(k3, 0);
  CHECK(delta_derivation(k3, 0, y_generator(k3, 0)) == OracleElement::one());
  CHECK(delta_derivation(k3, 0, y_generator(k3, 1)) == OracleElement::one().scaled(-1));
  CHECK(delta_derivation(k3, 0, y_generator(k3, 2)).is_zero());
  CHECK(rho(k3, 0, y_generator(k3, 0)) == y_generator(minus, 0));
}

TEST_CASE("delta is a derivation over rho") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = brute::random_multigraph(rng, 4, 6, 2);
    std::vector<std::size_t> nonloop;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (!g.edge(e).is_loop()) nonloop.push_back(e);
    if (nonloop.empty()) continue;
    const std::size_t e = nonloop[rng() % nonloop.size()];
    const auto a = random_element(g, rng), b = random_element(g, rng);
    const auto lhs = delta_derivation(g, e, multiply(a, b));
    const auto rhs = multiply(delta_derivation(g, e, a), rho(g, e, b)) + multiply(rho(g, e, a), delta_derivation(g, e, b));
    CHECK(lhs == rhs);
    CHECK(rho(g, e, multiply(a, b)) == multiply(rho(g, e, a), rho(g, e, b)));
  }
}

TEST_CASE("gamma lands in the kernel of delta") {
  const auto k3 = K(3);
  const auto c = loopy_contract(k3, 0);
  for (int v = 0; v < c.num_vertices(); ++v) {
    const auto img = gamma(k3, 0, y_generator(c, v));
    CHECK(delta_derivation(k3, 0, img).is_zero());
  }
}

TEST_CASE("exact sequence examples") {
  CHECK(verify_ses(K(2), 0).ok());
  for (std::size_t e = 0; e < 3; ++e) CHECK(verify_ses(K(3), e).ok());
  const MultiGraph dbl(2, {{0, 1}, {0, 1}});
  CHECK(verify_ses(dbl, 0).ok());
  CHECK(verify_ses(dbl, 1).ok());
  CHECK_THROWS_AS(verify_ses(MultiGraph(1, {{0, 0}}), 0), InvalidArgument);
}

TEST_CASE("exact sequence on random small multigraphs") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = brute::random_multigraph(rng, 4, 6, 2);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e).is_loop()) continue;
      const auto rep = verify_ses(g, e);
      CHECK(rep.dimensions);
      CHECK(rep.ranks);
      CHECK(rep.images);
      CHECK(rep.kernel);
    }
  }
}

TEST_CASE("score buckets") {
  const auto b2 = bucket_by_score(K(2));
  REQUIRE(b2.size() == 3);
  CHECK(b2.at({0, 0}).partial == 1);
  CHECK(b2.at({1, 0}).partial == 1);
  CHECK(b2.at({0, 1}).total == 1);
  auto totals = [](const MultiGraph& g) {
    std::size_t n = 0;
    for (const auto& [a, b] : bucket_by_score(g)) n += b.total > 0;
    return n;
  };
  CHECK(totals(K(3)) == 7);
  CHECK(totals(K(4)) == 38);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = brute::random_multigraph(rng, 5, 8);
    std::uint64_t sum = 0;
    for (const auto& [a, b] : bucket_by_score(g)) {
      sum += b.partial;
      CHECK(b.acyclic <= b.partial);
      CHECK(b.acyclic_total <= b.total);
      CHECK(is_basis_monomial(g, 1, a));
    }
    CHECK(sum == expected_count(g));
    CHECK(BigInt(totals(g)) == spanning_forest_total(g));
  }
}
