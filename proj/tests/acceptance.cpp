// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "bizon/app/corpus.hpp"
#include "bizon/counting.hpp"
#include "bizon/delcon.hpp"
#include "bizon/errors.hpp"
#include "bizon/oracle.hpp"
#include "bizon/parking.hpp"
#include "bizon/polytope.hpp"
#include "bizon/spanning.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace bizon;
using app::CorpusEntry;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

MultiGraph K(int n) { return generate_family("complete", n); }

HilbertPolynomial poly(const std::vector<long long>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return HilbertPolynomial(std::move(v));
}

struct Row {
  int n;
  std::vector<long long> h;
  long long dim;
};

const std::vector<Row> kExternal = {
    {2, {1, 2}, 3},
    {3, {1, 3, 6, 7}, 17},
    {4, {1, 4, 10, 20, 31, 40, 38}, 144},
    {5, {1, 5, 15, 35, 70, 121, 185, 255, 310, 335, 291}, 1623},
    {6, {1, 6, 21, 56, 126, 252, 456, 756, 1161, 1666, 2232, 2796, 3281, 3546, 3516, 2932}, 22804},
    {7, {1, 7, 28, 84, 210, 462, 924, 1709, 2954, 4809, 7420, 10906, 15309, 20559, 26454, 32655, 38591,
         43589, 46984, 47649, 45150, 36961},
     383415},
};

const Row kExternalK8 = {8,
                         {1, 8, 36, 120, 330, 792, 1716, 3432, 6427, 11376, 19160, 30864, 47748, 71184, 102524,
                          142920, 193117, 253240, 322596, 399344, 480390, 561472, 637400, 701296, 746089, 765640,
                          748532, 691720, 561948},
                         7501422};

const std::vector<Row> kCentral = {
    {2, {1}, 1},
    {3, {1, 3, 3}, 7},
    {4, {1, 4, 10, 16, 19, 16}, 66},
    {5, {1, 5, 15, 35, 65, 101, 135, 155, 155, 125}, 792},
    {6, {1, 6, 21, 56, 126, 246, 426, 666, 951, 1246, 1506, 1686, 1731, 1626, 1296}, 11590},
    {7, {1, 7, 28, 84, 210, 462, 917, 1667, 2807, 4417, 6538, 9142, 12117, 15267, 18327, 20958, 22827, 23667,
         23107, 21112, 16807},
     200469},
};

const std::vector<Row> kInternal = {
    {3, {1}, 1},
    {4, {1, 4, 6, 4, 1}, 16},
    {5, {1, 5, 15, 30, 45, 51, 45, 30, 15}, 237},
    {6, {1, 6, 21, 56, 120, 216, 336, 456, 546, 580, 546, 456, 336, 216}, 3892},
    {7, {1, 7, 28, 84, 210, 455, 875, 1520, 2415, 3535, 4795, 6055, 7140, 7875, 8135, 7875, 7140, 6055, 4795,
         3430},
     72425},
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void table(Outcome& o, const std::vector<Row>& rows, int r) {
  for (const auto& row : rows) {
    const auto h = hilbert_direct(K(row.n), r);
    const std::string tag = "K" + std::to_string(row.n);
    o.expect(h == poly(row.h), tag + " coefficients");
    o.expect(h.dimension() == row.dim, tag + " dimension");
  }
}

std::vector<std::size_t> nonloop_edges(const MultiGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!g.edge(e).is_loop()) out.push_back(e);
  return out;
}

std::vector<int> box(const MultiGraph& g, int r) {
  std::vector<int> hi(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) hi[v] = kappa(g, VertexSubset::of({v})) + r;
  return hi;
}

void for_each_box(const std::vector<int>& hi, const std::function<void(const ExponentVector&)>& f) {
  ExponentVector a(hi.size(), 0);
  for (int h : hi)
    if (h < 0) return;
  while (true) {
    f(a);
    std::size_t v = 0;
    while (v < a.size() && a[v] == hi[v]) a[v++] = 0;
    if (v == a.size()) return;
    ++a[v];
  }
}

BigInt binom2(long long k) { return BigInt(k * (k - 1) / 2); }

BigInt ipow(long long b, int e) {
  BigInt x = 1;
  for (int i = 0; i < e; ++i) x *= b;
  return x;
}

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = seconds_since(t);
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << ". " << title << " [" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s]";
  const auto d = o.detail.str();
  if (!d.empty()) std::cout << " -- " << d;
  std::cout << std::endl;
}

} // namespace

int main() {
  const auto corpus = app::standard_corpus();
  const auto small = app::small_multigraphs(4, 6);

  report(1, "external tables K2..K7 (K8 included)", [](Outcome& o) {
    const auto t = Clock::now();
    table(o, kExternal, 1);
    table(o, {kExternalK8}, 1);
    o.detail << "K2..K8 in " << seconds_since(t) << " s; ";
    o.expect(seconds_since(t) < 60, "time budget");
  });

  report(2, "central tables K2..K7", [](Outcome& o) {
    table(o, kCentral, 0);
    o.expect(top_component(K(7), 0) == TopComponent{20, 16807}, "K7 top");
  });

  report(3, "internal tables K3..K7", [](Outcome& o) {
    table(o, kInternal, -1);
    o.expect(top_component(K(7), -1) == TopComponent{19, 3430}, "K7 top");
  });

  report(4, "top degree counts spanning forests and trees", [&](Outcome& o) {
    int connected = 0;
    for (const auto& [name, g] : corpus) {
      const auto h1 = hilbert_direct(g, 1);
      o.expect(h1.top_degree() == static_cast<int>(g.num_edges()), name + " h1 degree");
      o.expect(h1.top_coefficient() == spanning_forest_total(g), name + " forests");
      if (!g.is_connected()) continue;
      ++connected;
      const auto h0 = hilbert_direct(g, 0);
      o.expect(h0.top_degree() == static_cast<int>(g.num_edges()) - 1, name + " h0 degree");
      o.expect(h0.top_coefficient() == spanning_tree_count(g), name + " trees");
    }
    o.detail << corpus.size() << " graphs, " << connected << " connected";
  });

  report(5, "deletion-contraction equals direct count", [&](Outcome& o) {
    MemoTable memo;
    DelconOptions opts;
    opts.memo = &memo;
    for (const auto& [name, g] : corpus)
      for (int r : {0, 1}) o.expect(hilbert_delcon(g, r, opts) == hilbert_direct(g, r), name);
    for (int n = 2; n <= 7; ++n)
      for (int r : {0, 1}) o.expect(hilbert_delcon(K(n), r, opts) == hilbert_direct(K(n), r), "K" + std::to_string(n));
  });

  report(6, "loopy deletion-contraction relation, r = 0..4, and r = -1 control", [&](Outcome& o) {
    std::size_t checked = 0, violations = 0, admissible = 0;
    for (const auto& [name, g] : corpus) {
      for (std::size_t e : nonloop_edges(g)) {
        for (int r = 0; r <= 4; ++r) {
          o.expect(verify_delcon_relation(g, r, e), name + " edge " + std::to_string(e) + " r " + std::to_string(r));
          ++checked;
        }
        try {
          ++admissible;
          violations += !verify_delcon_relation(g, -1, e);
        } catch (const RBelowMinimum&) {
          --admissible;
        }
      }
    }
    o.expect(violations > 0, "no r = -1 counterexample");
    o.detail << checked << " relations; r = -1 fails on " << violations << " of " << admissible;
  });

  report(7, "oracle subalgebra equals direct count; y^a nonzero iff basis", [&](Outcome& o) {
    for (const auto& [name, g] : small) {
      for (int r : {1, 0, -1}) {
        if (r < min_r(g)) continue;
        o.expect(subalgebra_hilbert_via_oracle(g, r) == hilbert_direct(g, r), name + " r " + std::to_string(r));
      }
      for_each_box(box(g, 1), [&](const ExponentVector& a) {
        o.expect(!y_power(g, a).is_zero() == is_basis_monomial(g, 1, a), name + " y^a");
      });
    }
    o.detail << small.size() << " graphs";
  });

  report(8, "exact sequence for every non-loop edge", [&](Outcome& o) {
    std::size_t edges = 0;
    for (const auto& [name, g] : small) {
      for (std::size_t e : nonloop_edges(g)) {
        const auto rep = verify_ses(g, e);
        o.expect(rep.dimensions, name + " dimensions");
        o.expect(rep.ok(), name + " maps");
        ++edges;
      }
    }
    o.detail << edges << " (graph, edge) pairs";
  });

  report(9, "weak parking example table, cone equivalence, cone tree counts", [&](Outcome& o) {
    const std::vector<std::vector<ExponentVector>> want{
        {{0, 0}, {0, 1}, {1, 0}},
        {{0, 0}, {0, 1}},
        {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}},
        {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}},
    };
    const auto ex = app::parking_examples();
    for (std::size_t i = 0; i < ex.size(); ++i) o.expect(enumerate_weak_parking(ex[i].graph) == want[i], ex[i].name);
    std::size_t loopless = 0;
    for (const auto& [name, g] : corpus) {
      o.expect(cone_equivalence_check(g), name + " cone");
      if (g.total_loops() == 0) {
        ++loopless;
        o.expect(BigInt(enumerate_weak_parking(g).size()) == spanning_tree_count(delooped_cone(g)), name + " count");
      }
    }
    o.detail << loopless << " loopless corpus graphs";
  });

  report(10, "parking vectors are acyclic orientation score vectors", [&](Outcome& o) {
    for (const auto& [name, g] : small) o.expect(parking_vs_acyclic(g), name);
  });

  report(11, "polytope vertex counts and characterisations", [&](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      double fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      const auto want = static_cast<std::size_t>(std::floor((std::exp(1.0) - 1) * fact));
      o.expect(all_vertices(K(n)).size() == want, "K" + std::to_string(n));
    }
    std::size_t strict = 0, characterised = 0;
    for (const auto& [name, g] : corpus) {
      const auto c = verify_vertex_characterizations(g);
      o.expect(c.ok(), name + " characterisation");
      ++characterised;
      const int n = g.num_vertices();
      if (g.is_simple() && g.num_edges() < static_cast<std::size_t>(n * (n - 1) / 2)) {
        ++strict;
        const auto b = vertex_count_bounds(g);
        o.expect(b.count < b.bound, name + " strict bound");
      }
    }
    o.detail << characterised << " characterised, " << strict << " simple non-complete";
  });

  report(12, "internal top component of K_n and two-component forests", [](Outcome& o) {
    for (int n = 4; n <= 7; ++n) {
      const auto top = top_component(K(n), -1);
      o.expect(top.degree == n * (n - 1) / 2 - 2, "K" + std::to_string(n) + " degree");
      o.expect(top.dimension == binom2(n - 2) * ipow(n, n - 4), "K" + std::to_string(n) + " dimension");
    }
    for (int n = 4; n <= 6; ++n) {
      const BigInt want = ipow(n, n - 4) * (n - 1) * (n + 6) / 2;
      o.expect(spanning_forest_counts(K(n)).at(2) == want, "K" + std::to_string(n) + " forests");
    }
  });

  report(13, "regular closed forms", [](Outcome& o) {
    o.expect(hilbert_direct(generate_family("petersen", 0), -1) == HilbertPolynomial{1, 1}.pow(10), "Petersen");
    const auto k5 = HilbertPolynomial{1, 1, 1}.pow(5) - HilbertPolynomial{5}.shifted(9) -
                    HilbertPolynomial::one().shifted(10);
    o.expect(hilbert_direct(K(5), -1) == k5, "K5");
  });

  report(14, "K9 external dimension (stretch)", [](Outcome& o) {
    const auto t = Clock::now();
    const auto h = hilbert_direct(K(9), 1);
    o.expect(h.dimension() == 167341283, "K9 dimension");
    o.expect(h.top_coefficient() == 10026505, "K9 top");
    o.detail << "dim " << h.dimension() << " in " << seconds_since(t) << " s";
    o.expect(seconds_since(t) < 1800, "time budget");
  });

  std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")" : std::string("acceptance: all passed"))
            << std::endl;
  return failures ? 1 : 0;
}
