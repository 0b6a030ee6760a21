#include "bizon/oracle.hpp"

#include "bizon/counting.hpp"
#include "bizon/errors.hpp"
#include "bizon/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace bizon {

namespace {

constexpr std::uint64_t kLowBits = 0x5555555555555555ull;

// One bit (the low bit of each pair) per oriented edge.
std::uint64_t touched(std::uint64_t code) { return (code | (code >> 1)) & kLowBits; }

void check_oracle_budget(const MultiGraph& g) {
  if (g.num_edges() > kOracleMaxEdges)
    throw BudgetExceeded("oracle limited to " + std::to_string(kOracleMaxEdges) + " edges");
}

void check_non_loop(const MultiGraph& g, std::size_t edge_index) {
  if (edge_index >= g.num_edges()) throw InvalidArgument("edge index out of range");
  if (g.edge(edge_index).is_loop()) throw InvalidArgument("edge must not be a loop");
}

// Removes the two bits of `edge`, shifting later edges down.
std::uint64_t drop_edge_bits(std::uint64_t code, std::size_t edge) {
  const std::uint64_t low = code & ((std::uint64_t{1} << (2 * edge)) - 1);
  const std::uint64_t high = code >> (2 * edge + 2);
  return low | (high << (2 * edge));
}

} // namespace

Arc reversed(const MultiGraph& g, Arc a) {
  const Edge& e = g.edge(a.edge);
  if (e.is_loop()) return a;
  return {a.edge, a.source == e.u ? e.v : e.u};
}

int PartialOrientation::degree() const { return __builtin_popcountll(touched(code)); }

bool PartialOrientation::is_total(const MultiGraph& g) const {
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (!oriented(i)) return false;
  return true;
}

PartialOrientation from_arcs(const MultiGraph& g, const std::vector<Arc>& arcs) {
  check_oracle_budget(g);
  PartialOrientation p;
  for (const Arc& a : arcs) {
    const Edge& e = g.edge(a.edge);
    int s = 0;
    if (a.source == e.u) s = 1;
    else if (a.source == e.v) s = 2;
    else throw InvalidArgument("arc source is not an endpoint of its edge");
    if (p.oriented(a.edge)) throw InvalidArgument("two arcs on one edge");
    p = p.with_state(a.edge, s);
  }
  return p;
}

std::vector<Arc> arcs_of(const MultiGraph& g, PartialOrientation p) {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const int s = p.state(i);
    if (s == 1) out.push_back({i, g.edge(i).u});
    else if (s == 2) out.push_back({i, g.edge(i).v});
  }
  return out;
}

ExponentVector score_vector(const MultiGraph& g, PartialOrientation p) {
  ExponentVector a(g.num_vertices(), 0);
  for (const Arc& arc : arcs_of(g, p)) a[arc.source]++;
  return a;
}

bool is_acyclic(const MultiGraph& g, PartialOrientation p) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (const Arc& arc : arcs_of(g, p)) {
    const Edge& e = g.edge(arc.edge);
    if (e.is_loop()) continue;
    const int head = arc.source == e.u ? e.v : e.u;
    out[arc.source].push_back(head);
    indeg[head]++;
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

std::vector<PartialOrientation> enumerate_partial_orientations(const MultiGraph& g) {
  check_oracle_budget(g);
  const std::size_t m = g.num_edges();
  std::vector<int> radix(m);
  for (std::size_t i = 0; i < m; ++i) radix[i] = g.edge(i).is_loop() ? 2 : 3;
  std::vector<PartialOrientation> out;
  std::vector<int> digit(m, 0);
  while (true) {
    PartialOrientation p;
    for (std::size_t i = 0; i < m; ++i) p = p.with_state(i, digit[i]);
    out.push_back(p);
    std::size_t i = 0;
    while (i < m && ++digit[i] == radix[i]) digit[i++] = 0;
    if (i == m) break;
  }
  return out;
}

OracleElement OracleElement::monomial(PartialOrientation p, BigInt coeff) {
  OracleElement x;
  x.add(p, coeff);
  return x;
}

void OracleElement::add(PartialOrientation p, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p.code, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

BigInt OracleElement::coeff(PartialOrientation p) const {
  auto it = terms_.find(p.code);
  return it == terms_.end() ? BigInt(0) : it->second;
}

OracleElement& OracleElement::operator+=(const OracleElement& o) {
  for (const auto& [c, k] : o.terms_) add({c}, k);
  return *this;
}

OracleElement& OracleElement::operator-=(const OracleElement& o) {
  for (const auto& [c, k] : o.terms_) add({c}, -k);
  return *this;
}

OracleElement OracleElement::scaled(const BigInt& c) const {
  OracleElement x;
  if (c == 0) return x;
  for (const auto& [code, k] : terms_) x.terms_.emplace(code, k * c);
  return x;
}

OracleElement multiply(const OracleElement& a, const OracleElement& b) {
  OracleElement out;
  for (const auto& [c1, k1] : a.terms()) {
    const std::uint64_t t1 = touched(c1);
    for (const auto& [c2, k2] : b.terms())
      if ((t1 & touched(c2)) == 0) out.add({c1 | c2}, k1 * k2);
  }
  return out;
}

OracleElement arc_element(const MultiGraph& g, Arc a) {
  return OracleElement::monomial(from_arcs(g, {a}));
}

OracleElement y_generator(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw InvalidArgument("vertex out of range");
  check_oracle_budget(g);
  OracleElement y;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (e.u == v) y.add(PartialOrientation{}.with_state(i, 1), 1);
    else if (e.v == v) y.add(PartialOrientation{}.with_state(i, 2), 1);
  }
  return y;
}

OracleElement y_power(const MultiGraph& g, const ExponentVector& a) {
  if (static_cast<int>(a.size()) != g.num_vertices())
    throw InvalidArgument("exponent vector length mismatch");
  OracleElement x = OracleElement::one();
  for (int v = 0; v < g.num_vertices() && !x.is_zero(); ++v) {
    if (a[v] < 0) throw InvalidArgument("negative exponent");
    if (a[v] == 0) continue;
    const auto y = y_generator(g, v);
    for (int k = 0; k < a[v] && !x.is_zero(); ++k) x = multiply(x, y);
  }
  return x;
}

bool vanishes_in_quotient(const MultiGraph& g, Quotient q, PartialOrientation p) {
  if (q == Quotient::external) return false;
  const int n = g.num_vertices();
  if (n > 20) throw BudgetExceeded("quotient test limited to 20 vertices");
  const std::size_t allowed_bad = q == Quotient::internal ? 1 : 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    std::size_t incident = 0, bad = 0;
    for (std::size_t i = 0; i < g.num_edges() && bad <= allowed_bad; ++i) {
      const Edge& e = g.edge(i);
      const bool in_u = (s >> e.u) & 1u, in_v = (s >> e.v) & 1u;
      if (!in_u && !in_v) continue;
      ++incident;
      const int st = p.state(i);
      if (st == 0) ++bad;
      else if (in_u != in_v && (st == 1) != in_u) ++bad;  // boundary edge pointing into S
    }
    if (bad > allowed_bad) continue;
    if (q == Quotient::internal && incident == 0) continue;
    return true;
  }
  return false;
}

OracleElement reduce(const MultiGraph& g, Quotient q, const OracleElement& x) {
  if (q == Quotient::external) return x;
  OracleElement out;
  for (const auto& [c, k] : x.terms())
    if (!vanishes_in_quotient(g, q, {c})) out.add({c}, k);
  return out;
}

namespace {

Quotient quotient_for(int r) {
  switch (r) {
  case 1: return Quotient::external;
  case 0: return Quotient::central;
  case -1: return Quotient::internal;
  default: throw InvalidArgument("oracle realises r = 1, 0, -1 only");
  }
}

// Visits every a (vertex-lexicographic) with nonzero y^a in the quotient.
// Each y^a is built from its parent, and a zero parent prunes the subtree.
void for_each_nonzero_power(const MultiGraph& g, Quotient q,
                            const std::function<void(const ExponentVector&, const OracleElement&)>& visit) {
  const int n = g.num_vertices();
  std::vector<OracleElement> gens;
  for (int v = 0; v < n; ++v) gens.push_back(y_generator(g, v));
  ExponentVector a(n, 0);
  std::function<void(int, const OracleElement&)> rec = [&](int v, const OracleElement& cur) {
    if (v == n) {
      visit(a, cur);
      return;
    }
    OracleElement x = cur;
    for (a[v] = 0; !x.is_zero(); ++a[v]) {
      rec(v + 1, x);
      x = reduce(g, q, multiply(x, gens[v]));
    }
    a[v] = 0;
  };
  const auto start = reduce(g, q, OracleElement::one());
  if (!start.is_zero()) rec(0, start);
}

HilbertPolynomial count_by_degree(const std::vector<ExponentVector>& basis) {
  std::vector<BigInt> coeffs;
  for (const auto& a : basis) {
    int w = 0;
    for (int x : a) w += x;
    if (static_cast<int>(coeffs.size()) <= w) coeffs.resize(w + 1);
    coeffs[w] += 1;
  }
  return HilbertPolynomial(std::move(coeffs));
}

int weight(const ExponentVector& a) {
  int w = 0;
  for (int x : a) w += x;
  return w;
}

struct PowerBasis {
  std::vector<ExponentVector> exps;
  std::vector<OracleElement> elems;
};

PowerBasis external_basis(const MultiGraph& g) {
  PowerBasis b;
  for_each_nonzero_power(g, Quotient::external, [&](const ExponentVector& a, const OracleElement& x) {
    b.exps.push_back(a);
    b.elems.push_back(x);
  });
  return b;
}

// Rank of a family of oracle elements, as vectors over their monomials.
std::size_t rank_of(const std::vector<OracleElement>& xs) {
  std::unordered_map<std::uint64_t, std::size_t> column;
  for (const auto& x : xs)
    for (const auto& [c, k] : x.terms()) column.try_emplace(c, column.size());
  BigMatrix m(xs.size(), std::vector<BigInt>(column.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& [c, k] : xs[i].terms()) m[i][column.at(c)] = k;
  return integer_rank(std::move(m));
}

} // namespace

HilbertPolynomial subalgebra_hilbert_via_oracle(const MultiGraph& g, int r) {
  const Quotient q = quotient_for(r);
  check_r(g, r);
  check_oracle_budget(g);
  if (g.num_vertices() == 0) return HilbertPolynomial::one();
  std::vector<ExponentVector> basis;
  for_each_nonzero_power(g, q, [&](const ExponentVector& a, const OracleElement&) { basis.push_back(a); });
  return count_by_degree(basis);
}

OracleElement delta_derivation(const MultiGraph& g, std::size_t edge_index, const OracleElement& x) {
  check_non_loop(g, edge_index);
  OracleElement out;
  for (const auto& [c, k] : x.terms()) {
    const int s = PartialOrientation{c}.state(edge_index);
    if (s == 0) continue;
    out.add({drop_edge_bits(c, edge_index)}, s == 1 ? k : BigInt(-k));
  }
  return out;
}

OracleElement rho(const MultiGraph& g, std::size_t edge_index, const OracleElement& x) {
  if (edge_index >= g.num_edges()) throw InvalidArgument("edge index out of range");
  OracleElement out;
  for (const auto& [c, k] : x.terms())
    if (PartialOrientation{c}.state(edge_index) == 0) out.add({drop_edge_bits(c, edge_index)}, k);
  return out;
}

OracleElement gamma(const MultiGraph& g, std::size_t edge_index, const OracleElement& x) {
  check_non_loop(g, edge_index);
  const Edge pivot = g.edge(edge_index);
  std::vector<std::size_t> parallel;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if ((e.u == pivot.u && e.v == pivot.v) || (e.u == pivot.v && e.v == pivot.u)) parallel.push_back(i);
  }
  OracleElement out;
  for (const auto& [c, k] : x.terms()) {
    std::vector<std::uint64_t> images{c};
    for (std::size_t i : parallel) {
      if (PartialOrientation{c}.state(i) == 0) continue;
      std::vector<std::uint64_t> next;
      for (std::uint64_t img : images) {
        next.push_back(PartialOrientation{img}.with_state(i, 1).code);
        next.push_back(PartialOrientation{img}.with_state(i, 2).code);
      }
      images = std::move(next);
    }
    for (std::uint64_t img : images) out.add({img}, k);
  }
  return out;
}

SesReport verify_ses(const MultiGraph& g, std::size_t edge_index) {
  check_non_loop(g, edge_index);
  check_oracle_budget(g);
  const Edge e = g.edge(edge_index);
  const MultiGraph contracted = loopy_contract(g, edge_index);
  const MultiGraph deleted = delete_edge(g, edge_index);

  const PowerBasis bg = external_basis(g);
  const PowerBasis bc = external_basis(contracted);
  const PowerBasis bd = external_basis(deleted);
  const auto hg = count_by_degree(bg.exps);
  const auto hc = count_by_degree(bc.exps);
  const auto hd = count_by_degree(bd.exps);

  SesReport report;
  report.dimensions = hg == hc + hd.shifted(1);

  const int top = std::max({hg.top_degree(), hc.top_degree(), hd.top_degree() + 1});
  std::vector<std::vector<OracleElement>> deltas(top + 1), gammas(top + 1);

  report.images = true;
  for (std::size_t i = 0; i < bg.exps.size(); ++i) {
    const auto& a = bg.exps[i];
    auto d = delta_derivation(g, edge_index, bg.elems[i]);
    OracleElement expected;
    if (a[e.u] > 0) {
      auto b = a;
      b[e.u]--;
      expected += y_power(deleted, b).scaled(a[e.u]);
    }
    if (a[e.v] > 0) {
      auto b = a;
      b[e.v]--;
      expected -= y_power(deleted, b).scaled(a[e.v]);
    }
    if (d != expected) report.images = false;
    deltas[weight(a)].push_back(std::move(d));
  }

  report.kernel = true;
  for (std::size_t i = 0; i < bc.exps.size(); ++i) {
    auto x = gamma(g, edge_index, bc.elems[i]);
    if (!delta_derivation(g, edge_index, x).is_zero()) report.kernel = false;
    gammas[weight(bc.exps[i])].push_back(std::move(x));
  }

  report.ranks = true;
  for (int k = 0; k <= top; ++k) {
    const std::size_t rank = rank_of(deltas[k]);
    const auto dim_g = static_cast<std::size_t>(hg.coeff(k));
    const auto dim_c = static_cast<std::size_t>(hc.coeff(k));
    const auto dim_d = k > 0 ? static_cast<std::size_t>(hd.coeff(k - 1)) : std::size_t{0};
    if (rank != dim_d || dim_g - rank != dim_c) report.ranks = false;
    // γ must embed B^e_(G/e) in degree k.
    if (rank_of(gammas[k]) != dim_c) report.kernel = false;
  }
  return report;
}

std::map<ExponentVector, ScoreBucket> bucket_by_score(const MultiGraph& g) {
  std::map<ExponentVector, ScoreBucket> out;
  for (PartialOrientation p : enumerate_partial_orientations(g)) {
    auto& b = out[score_vector(g, p)];
    b.partial++;
    const bool acyclic = is_acyclic(g, p), total = p.is_total(g);
    b.acyclic += acyclic;
    b.total += total;
    b.acyclic_total += acyclic && total;
  }
  return out;
}

} // namespace bizon
