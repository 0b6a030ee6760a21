#include "bizon/app/suites.hpp"

#include "bizon/counting.hpp"
#include "bizon/delcon.hpp"
#include "bizon/errors.hpp"
#include "bizon/oracle.hpp"
#include "bizon/parking.hpp"
#include "bizon/polytope.hpp"
#include "bizon/spanning.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace bizon::app {

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = [] {
    std::vector<ReferenceRow> t = {
        {2, 1, {1, 2}, 3},
        {3, 1, {1, 3, 6, 7}, 17},
        {4, 1, {1, 4, 10, 20, 31, 40, 38}, 144},
        {5, 1, {1, 5, 15, 35, 70, 121, 185, 255, 310, 335, 291}, 1623},
        {6, 1, {1, 6, 21, 56, 126, 252, 456, 756, 1161, 1666, 2232, 2796, 3281, 3546, 3516, 2932}, 22804},
        {7, 1, {1, 7, 28, 84, 210, 462, 924, 1709, 2954, 4809, 7420, 10906, 15309, 20559, 26454, 32655,
                38591, 43589, 46984, 47649, 45150, 36961}, 383415},
        {8, 1, {1, 8, 36, 120, 330, 792, 1716, 3432, 6427, 11376, 19160, 30864, 47748, 71184, 102524,
                142920, 193117, 253240, 322596, 399344, 480390, 561472, 637400, 701296, 746089, 765640,
                748532, 691720, 561948}, 7501422},
        {9, 1, {1, 9, 45, 165, 495, 1287, 3003, 6435, 12870, 24301, 43677, 75177, 124485, 199035,
                308187, 463287, 677520, 965493, 1342513, 1823553, 2421927, 3147723, 4005819, 4993839,
                6100350, 7303545, 8570601, 9855829, 11101599, 12241305, 13203705, 13902291, 14254524,
                14195199, 13575951, 12369033, 10026505}, 167341283},
        {2, 0, {1}, 1},
        {3, 0, {1, 3, 3}, 7},
        {4, 0, {1, 4, 10, 16, 19, 16}, 66},
        {5, 0, {1, 5, 15, 35, 65, 101, 135, 155, 155, 125}, 792},
        {6, 0, {1, 6, 21, 56, 126, 246, 426, 666, 951, 1246, 1506, 1686, 1731, 1626, 1296}, 11590},
        {7, 0, {1, 7, 28, 84, 210, 462, 917, 1667, 2807, 4417, 6538, 9142, 12117, 15267, 18327, 20958,
                22827, 23667, 23107, 21112, 16807}, 200469},
        // The stated totals of the next two rows (90759016 and 2301604074)
        // disagree with their own coefficient lists; the coefficient sums are used.
        {8, 0, {1, 8, 36, 120, 330, 792, 1716, 3424, 6371, 11152, 18488, 29184, 44052, 63792, 88852,
                119288, 154645, 193880, 235292, 276592, 315078, 347880, 371820, 384112, 382817, 364232,
                328392, 262144}, 4004490},
        {9, 0, {1, 9, 45, 165, 495, 1287, 3003, 6435, 12861, 24229, 43353, 74097, 121515, 191907,
                292743, 432399, 619677, 863109, 1170073, 1545777, 1992195, 2506983, 3082599, 3705795,
                4357593, 5013801, 5645313, 6219649, 6703245, 7064073, 7267815, 7285959, 7100739,
                6660495, 5966613, 4782969}, 90759016},
        {3, -1, {1}, 1},
        {4, -1, {1, 4, 6, 4, 1}, 16},
        {5, -1, {1, 5, 15, 30, 45, 51, 45, 30, 15}, 237},
        {6, -1, {1, 6, 21, 56, 120, 216, 336, 456, 546, 580, 546, 456, 336, 216}, 3892},
        {7, -1, {1, 7, 28, 84, 210, 455, 875, 1520, 2415, 3535, 4795, 6055, 7140, 7875, 8135, 7875, 7140,
                 6055, 4795, 3430}, 72425},
        {8, -1, {1, 8, 36, 120, 330, 792, 1708, 3368, 6147, 10480, 16808, 25488, 36688, 50288, 65808,
                 82384, 98813, 113688, 125588, 133288, 135954, 133288, 125588, 113688, 98533, 81488,
                 61440}, 1521810},
        {9, -1, {1, 9, 45, 165, 495, 1287, 3003, 6426, 12789, 23905, 42273, 71127, 114387, 176463,
                 261891, 374808, 518301, 693693, 899857, 1132677, 1384803, 1645791, 1902663, 2140866,
                 2345553, 2503053, 2602341, 2636263, 2602341, 2502423, 2342907, 2134062, 1881243,
                 1596861, 1240029}, 35794801},
    };
    return t;
  }();
  return rows;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tables", "spanning", "delcon", "oracle", "parking", "polytope"};
  return names;
}

namespace {

// Counts cases of one property and remembers the first failure.
class Tally {
public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  void fail(const std::string& what) { expect(false, what); }
  CheckResult result() const {
    std::ostringstream d;
    if (failures_ == 0) d << cases_ << " cases";
    else d << failures_ << " of " << cases_ << " cases failed; first: " << first_;
    return {name_, failures_ == 0 && cases_ > 0, d.str()};
  }

private:
  std::string name_;
  std::size_t cases_ = 0, failures_ = 0;
  std::string first_;
};

HilbertPolynomial from_u64(const std::vector<std::uint64_t>& xs) {
  std::vector<BigInt> c(xs.begin(), xs.end());
  return HilbertPolynomial(std::move(c));
}

std::string name_r(const std::string& name, int r) { return name + " r=" + std::to_string(r); }

std::string algebra_name(int r) {
  return r == 1 ? "external" : r == 0 ? "central" : r == -1 ? "internal" : "r=" + std::to_string(r);
}

HilbertPolynomial closed_internal_four_regular(int n) {
  auto h = HilbertPolynomial{1, 1, 1}.pow(n);
  h -= HilbertPolynomial{static_cast<long long>(n)}.shifted(2 * n - 1);
  h -= HilbertPolynomial::one().shifted(2 * n);
  return h;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

BigInt ipow(int base, int e) {
  BigInt x = 1;
  for (int i = 0; i < e; ++i) x *= base;
  return x;
}

// ---------------------------------------------------------------- tables

void tables_suite(const SuiteOptions& opts, SuiteReport& rep) {
  DirectOptions direct{opts.threads, 1e9};
  for (const ReferenceRow& row : reference_table()) {
    if (row.n > opts.max_n) continue;
    const auto g = generate_family("complete", row.n);
    const auto expected = from_u64(row.coefficients);
    const auto h = hilbert_direct(g, row.r, direct);
    const bool ok = h == expected && h.dimension() == row.dimension;
    std::string detail = "dim = " + to_string(h.dimension());
    if (!ok) detail += "; got " + h.to_string() + "; expected " + expected.to_string();
    rep.checks.push_back({"K" + std::to_string(row.n) + " " + algebra_name(row.r) + " table", ok, detail});
    rep.notes.push_back("K" + std::to_string(row.n) + " " + algebra_name(row.r) +
                        ": unimodal=" + (is_unimodal(h) ? "yes" : "no") +
                        " log-concave=" + (is_log_concave(h) ? "yes" : "no"));
  }

  Tally top("internal K_n top component (C(n,2)-2, C(n-2,2) n^(n-4))");
  for (int n = 4; n <= std::min(opts.max_n, 7); ++n) {
    const auto tc = top_component(generate_family("complete", n), -1, direct);
    const TopComponent want{n * (n - 1) / 2 - 2, binomial(n - 2, 2) * ipow(n, n - 4)};
    top.expect(tc == want, "K" + std::to_string(n));
  }
  rep.checks.push_back(top.result());

  Tally renyi("two-component forests of K_n = n^(n-4)(n-1)(n+6)/2");
  for (int n = 4; n <= std::min(opts.max_n, 6); ++n) {
    const auto counts = spanning_forest_counts(generate_family("complete", n));
    renyi.expect(counts.at(2) == ipow(n, n - 4) * (n - 1) * (n + 6) / 2, "K" + std::to_string(n));
  }
  rep.checks.push_back(renyi.result());

  Tally regular("internal closed forms of regular graphs");
  {
    const auto petersen = generate_family("petersen", 0);
    const auto want = HilbertPolynomial{1, 1}.pow(10);
    regular.expect(hilbert_direct(petersen, -1, direct) == want, "Petersen direct");
    regular.expect(closed_form_internal_regular(petersen) == want, "Petersen closed form");
    const auto k5 = generate_family("complete", 5);
    const auto want5 = closed_internal_four_regular(5);
    regular.expect(hilbert_direct(k5, -1, direct) == want5, "K5 direct");
    regular.expect(closed_form_internal_regular(k5) == want5, "K5 closed form");
    const auto k4 = generate_family("complete", 4);
    regular.expect(closed_form_internal_regular(k4) == hilbert_direct(k4, -1, direct), "K4");
  }
  rep.checks.push_back(regular.result());
}

// ---------------------------------------------------------------- spanning

void spanning_suite(const SuiteOptions& opts, SuiteReport& rep) {
  const auto corpus = standard_corpus(opts.seed);
  rep.notes.push_back("corpus seed " + std::to_string(opts.seed));
  DirectOptions direct{opts.threads, 1e9};

  Tally forests("external top = (|E|, spanning forests)");
  Tally trees("central top of connected graphs = (|E|-1, spanning trees)");
  Tally one_component("one-component forests = spanning trees");
  Tally degree_one("external h(1) = vertices with an incident edge");
  for (const auto& [name, g] : corpus) {
    const auto h1 = hilbert_direct(g, 1, direct);
    forests.expect(h1.top_degree() == static_cast<int>(g.num_edges()) &&
                       h1.top_coefficient() == spanning_forest_total(g),
                   name);
    if (g.is_connected()) {
      const auto h0 = hilbert_direct(g, 0, direct);
      trees.expect(h0.top_degree() == static_cast<int>(g.num_edges()) - 1 &&
                       h0.top_coefficient() == spanning_tree_count(g),
                   name);
    }
    one_component.expect(spanning_forest_counts(g).at(1) == spanning_tree_count(g), name);
    int touched = 0;
    for (int v = 0; v < g.num_vertices(); ++v) touched += kappa(g, VertexSubset::of({v})) > 0;
    degree_one.expect(h1.coeff(1) == touched, name);
  }
  for (auto* t : {&forests, &trees, &one_component, &degree_one}) rep.checks.push_back(t->result());

  Tally mult("multiplicativity over disjoint unions, r in {0,1}");
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    const auto& a = corpus[i];
    const auto& b = corpus[i + 1];
    if (a.graph.num_vertices() + b.graph.num_vertices() > 9) continue;
    const auto u = disjoint_union(a.graph, b.graph);
    for (int r : {0, 1})
      mult.expect(hilbert_direct(u, r, direct) ==
                      hilbert_direct(a.graph, r, direct) * hilbert_direct(b.graph, r, direct),
                  name_r(a.name + "+" + b.name, r));
  }
  rep.checks.push_back(mult.result());

  Tally loops("one-vertex graphs with n loops");
  for (int n = 0; n <= 8; ++n) {
    const auto g = generate_family("loops", n);
    loops.expect(hilbert_direct(g, 0, direct) == HilbertPolynomial::geometric(n), name_r("L" + std::to_string(n), 0));
    loops.expect(hilbert_direct(g, 1, direct) == HilbertPolynomial::geometric(n + 1), name_r("L" + std::to_string(n), 1));
  }
  rep.checks.push_back(loops.result());
}

// ---------------------------------------------------------------- delcon

void delcon_suite(const SuiteOptions& opts, SuiteReport& rep) {
  auto corpus = standard_corpus(opts.seed);
  rep.notes.push_back("corpus seed " + std::to_string(opts.seed));
  DirectOptions direct{opts.threads, 1e9};
  for (int n = 7; n <= std::max(7, opts.max_n); ++n)
    corpus.push_back({"K" + std::to_string(n), generate_family("complete", n)});

  MemoTable memo;
  Tally agree("deletion-contraction equals direct count, r in {0,1}");
  Tally pivots("value independent of pivot choice");
  Tally warm("cold and warm memo agree");
  for (const auto& [name, g] : corpus) {
    for (int r : {0, 1}) {
      const auto want = hilbert_direct(g, r, direct);
      const auto cold = hilbert_delcon(g, r);
      agree.expect(cold == want, name_r(name, r));
      warm.expect(hilbert_delcon(g, r, {&memo, std::nullopt}) == cold &&
                      hilbert_delcon(g, r, {&memo, std::nullopt}) == cold,
                  name_r(name, r));
      if (g.num_edges() <= 12)
        for (std::uint64_t seed : {1u, 2u, 3u})
          pivots.expect(hilbert_delcon(g, r, {nullptr, seed}) == cold, name_r(name, r));
    }
  }
  for (auto* t : {&agree, &pivots, &warm}) rep.checks.push_back(t->result());

  Tally relation("h_G = h_(G/e) + t h_(G-e) for r = 0..4, every non-loop edge");
  std::size_t violations = 0, tested = 0;
  std::string example;
  for (const auto& [name, g] : corpus) {
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e).is_loop()) continue;
      for (int r = 0; r <= 4; ++r)
        relation.expect(verify_delcon_relation(g, r, e, direct), name_r(name + " edge " + std::to_string(e), r));
      try {
        ++tested;
        if (!verify_delcon_relation(g, -1, e, direct)) {
          if (violations++ == 0) example = name + " edge " + std::to_string(e);
        }
      } catch (const RBelowMinimum&) {
        --tested;
      }
    }
  }
  rep.checks.push_back(relation.result());
  rep.checks.push_back({"r=-1 negative control finds a violation", violations > 0,
                        std::to_string(violations) + " of " + std::to_string(tested) +
                            " admissible (graph, edge) pairs violate; first: " + example});
}

// ---------------------------------------------------------------- oracle

// Nonzero y^a over the box a_v ≤ κ_v + 1, built by repeated multiplication.
std::map<ExponentVector, OracleElement> nonzero_powers(const MultiGraph& g, std::vector<ExponentVector>& zeros) {
  const int n = g.num_vertices();
  std::map<ExponentVector, OracleElement> out;
  std::vector<OracleElement> gens;
  for (int v = 0; v < n; ++v) gens.push_back(y_generator(g, v));
  ExponentVector a(n, 0);
  std::function<void(int, const OracleElement&)> rec = [&](int v, const OracleElement& x) {
    if (v == n) {
      if (x.is_zero()) zeros.push_back(a);
      else out.emplace(a, x);
      return;
    }
    OracleElement cur = x;
    const int hi = kappa(g, VertexSubset::of({v})) + 1;
    for (a[v] = 0; a[v] <= hi; ++a[v]) {
      rec(v + 1, cur);
      cur = multiply(cur, gens[v]);
    }
    a[v] = 0;
  };
  rec(0, OracleElement::one());
  return out;
}

void oracle_suite(const SuiteOptions&, SuiteReport& rep) {
  const auto corpus = small_multigraphs(4, 6);
  rep.notes.push_back("oracle corpus: " + std::to_string(corpus.size()) +
                      " multigraphs with n <= 4, |E| <= 6 up to isomorphism");

  Tally count("2^l 3^(|E|-l) partial orientations");
  Tally via("oracle subalgebra equals direct count, r in {1,0,-1}");
  Tally basis("y^a nonzero iff a is a basis exponent (r = 1)");
  Tally disjoint("distinct nonzero y^a have disjoint supports");
  Tally ses("exact sequence for every non-loop edge");
  Tally forests("score vectors of total orientations = spanning forests");
  for (const auto& [name, g] : corpus) {
    std::uint64_t want = 1;
    for (const Edge& e : g.edges()) want *= e.is_loop() ? 2 : 3;
    count.expect(enumerate_partial_orientations(g).size() == want, name);

    for (int r : {1, 0, -1}) {
      if (r < min_r(g)) continue;
      via.expect(subalgebra_hilbert_via_oracle(g, r) == hilbert_direct(g, r), name_r(name, r));
    }

    std::vector<ExponentVector> zeros;
    const auto powers = nonzero_powers(g, zeros);
    for (const auto& [a, x] : powers) basis.expect(is_basis_monomial(g, 1, a), name);
    for (const auto& a : zeros) basis.expect(!is_basis_monomial(g, 1, a), name);
    std::set<std::uint64_t> used;
    bool clash = false;
    for (const auto& [a, x] : powers)
      for (const auto& [code, k] : x.terms()) clash |= !used.insert(code).second;
    disjoint.expect(!clash, name);

    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (!g.edge(e).is_loop()) ses.expect(verify_ses(g, e).ok(), name + " edge " + std::to_string(e));

    std::size_t total_scores = 0;
    for (const auto& [score, bucket] : bucket_by_score(g)) total_scores += bucket.total > 0;
    forests.expect(spanning_forest_total(g) == total_scores, name);
  }
  for (auto* t : {&count, &via, &basis, &disjoint, &ses, &forests}) rep.checks.push_back(t->result());
}

// ---------------------------------------------------------------- parking

void parking_suite(const SuiteOptions& opts, SuiteReport& rep) {
  const std::map<std::string, std::vector<ExponentVector>> table = {
      {"G1", {{0, 0}, {0, 1}, {1, 0}}},
      {"G2", {{0, 0}, {0, 1}}},
      {"G3", {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}}},
      {"G4", {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}},
  };
  Tally example("two-vertex example table");
  for (const auto& [name, g] : parking_examples()) example.expect(enumerate_weak_parking(g) == table.at(name), name);
  rep.checks.push_back(example.result());

  auto corpus = standard_corpus(opts.seed);
  for (auto& entry : parking_examples()) corpus.push_back(entry);
  Tally cone("weak parking = cone parking relative to the apex");
  Tally cone_count("loopless: #weak parking = spanning trees of the cone");
  Tally closure("downward closure");
  Tally maximal("weight <= |E|, equality exactly at f^Pi");
  for (const auto& [name, g] : corpus) {
    const auto wpf = enumerate_weak_parking(g);
    cone.expect(cone_equivalence_check(g), name);
    if (g.total_loops() == 0)
      cone_count.expect(spanning_tree_count(delooped_cone(g)) == wpf.size(), name);
    const std::set<ExponentVector> members(wpf.begin(), wpf.end());
    bool closed = true;
    for (const auto& f : wpf)
      for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] > 0) {
          auto lower = f;
          lower[v]--;
          closed &= members.count(lower) > 0;
        }
    closure.expect(closed, name);
    const auto top = maximal_weak_parking(g);
    std::set<ExponentVector> heavy;
    bool bounded = true;
    for (const auto& f : wpf) {
      int w = 0;
      for (int x : f) w += x;
      bounded &= w <= static_cast<int>(g.num_edges());
      if (w == static_cast<int>(g.num_edges())) heavy.insert(f);
    }
    maximal.expect(bounded && heavy == top, name);
  }
  for (auto* t : {&cone, &cone_count, &closure, &maximal}) rep.checks.push_back(t->result());

  Tally acyclic("parking vectors = acyclic orientation score vectors");
  for (const auto& [name, g] : small_multigraphs(4, 6)) acyclic.expect(parking_vs_acyclic(g), name);
  rep.checks.push_back(acyclic.result());
}

// ---------------------------------------------------------------- polytope

void polytope_suite(const SuiteOptions& opts, SuiteReport& rep) {
  Tally complete("K_n has floor((e-1) n!) vertices");
  for (int n = 2; n <= std::min(opts.max_n, 6); ++n) {
    const auto b = vertex_count_bounds(generate_family("complete", n));
    complete.expect(b.tight && b.count == b.bound, "K" + std::to_string(n) + " count " + std::to_string(b.count));
  }
  rep.checks.push_back(complete.result());

  auto corpus = standard_corpus(opts.seed);
  for (auto& entry : parking_examples()) corpus.push_back(entry);
  Tally unique("vertices = lattice points with a unique orientation");
  Tally midpoint("vertices = lattice points that are not midpoints");
  Tally lattice("lattice points = partial score vectors");
  Tally inside("every a^J lies in P_G");
  Tally strict("simple non-complete graphs are below the bound");
  std::size_t skipped = 0;
  for (const auto& [name, g] : corpus) {
    const auto vertices = all_vertices(g);
    const auto points = lattice_points(g);
    const std::set<ExponentVector> point_set(points.begin(), points.end());
    bool all_in = true;
    for (const auto& a : vertices) all_in &= point_set.count(a) > 0;
    inside.expect(all_in, name);
    const auto b = vertex_count_bounds(g);
    if (g.is_simple() && g.num_edges() < static_cast<std::size_t>(g.num_vertices() * (g.num_vertices() - 1) / 2))
      strict.expect(b.count < b.bound, name);
    const auto c = verify_vertex_characterizations(g);
    unique.expect(c.unique_orientation, name);
    midpoint.expect(c.midpoint, name);
    if (g.num_edges() > kOracleMaxEdges) {
      ++skipped;
      continue;
    }
    std::set<ExponentVector> scores;
    for (const auto& [score, bucket] : bucket_by_score(g)) scores.insert(score);
    lattice.expect(scores == point_set, name);
  }
  if (skipped) rep.notes.push_back(std::to_string(skipped) + " corpus graphs exceed the oracle edge budget for the score-vector comparison");
  for (auto* t : {&unique, &midpoint, &lattice, &inside, &strict}) rep.checks.push_back(t->result());
}

} // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  static const std::map<std::string, void (*)(const SuiteOptions&, SuiteReport&), std::less<>> suites = {
      {"tables", tables_suite}, {"spanning", spanning_suite}, {"delcon", delcon_suite},
      {"oracle", oracle_suite},     {"parking", parking_suite},   {"polytope", polytope_suite},
  };
  SuiteReport rep;
  rep.suite = std::string(name);
  if (name == "all") {
    for (const auto& s : suite_names()) {
      SuiteReport part;
      suites.find(s)->second(opts, part);
      for (auto& c : part.checks) rep.checks.push_back({s + ": " + c.name, c.passed, c.detail});
      for (auto& n : part.notes) rep.notes.push_back(s + ": " + n);
    }
    return rep;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  it->second(opts, rep);
  return rep;
}

void print_report(std::ostream& out, const SuiteReport& report) {
  for (const auto& n : report.notes) out << "  note: " << n << '\n';
  for (const auto& c : report.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
  out << (report.passed() ? "suite " + report.suite + ": PASS" : "suite " + report.suite + ": FAIL") << '\n';
}

} // namespace bizon::app
