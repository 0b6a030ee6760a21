#include "bizon/counting.hpp"

#include "bizon/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

namespace bizon {

int min_r(const MultiGraph& g) {
  if (g.num_vertices() == 0) return std::numeric_limits<int>::min();
  return -min_vertex_kappa(g);
}

void check_r(const MultiGraph& g, int r) {
  if (r < min_r(g))
    throw RBelowMinimum("r = " + std::to_string(r) + " is below -delta_G = " +
                        std::to_string(min_r(g)));
}

bool is_zero_algebra(const MultiGraph& g, int r) {
  // κ is monotone, so the smallest κ_S over nonempty S is attained at a vertex.
  return g.num_vertices() > 0 && min_vertex_kappa(g) + r <= 0;
}

bool is_basis_monomial(const MultiGraph& g, int r, const ExponentVector& a) {
  check_r(g, r);
  const int n = g.num_vertices();
  if (static_cast<int>(a.size()) != n) throw InvalidArgument("exponent vector length mismatch");
  if (n > 32) throw BudgetExceeded("is_basis_monomial limited to 32 vertices");
  std::uint32_t supp = 0;
  for (int v = 0; v < n; ++v) {
    if (a[v] < 0) throw InvalidArgument("negative exponent");
    if (a[v] > 0) supp |= std::uint32_t{1} << v;
  }
  if (is_zero_algebra(g, r)) return false;
  for (std::uint32_t s = supp; s != 0; s = (s - 1) & supp) {
    long long sum = 0;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1u) sum += a[v];
    if (sum > static_cast<long long>(kappa(g, {s})) + r - 1) return false;
  }
  return true;
}

double basis_size_bound(const MultiGraph& g, int r) {
  double box = 1.0;
  for (int v = 0; v < g.num_vertices(); ++v)
    box *= std::max(0, g.nonloop_degree(v) + g.loops_at(v) + r);
  return box;
}

namespace {

constexpr int kMaxDirectVertices = 24;

std::string format_double(double x) {
  std::ostringstream out;
  out << std::setprecision(3) << x;
  return out.str();
}

class Enumerator {
public:
  Enumerator(int n, int slack_shift, const std::vector<int>& kappa, std::size_t max_weight)
      : n_(n), shift_(slack_shift), diff_(max_weight + 2, 0), tables_(n) {
    for (int d = 0; d < n; ++d) tables_[d].resize(std::size_t{1} << (n - d));
    std::copy(kappa.begin(), kappa.end(), tables_[0].begin());
  }

  // Bound on the value of the vertex at depth d.
  int bound(int d) const { return tables_[d][1] + shift_; }

  // Fills tables_[d + 1] from tables_[d] after assigning x at depth d.
  void assign(int d, int x) {
    const auto& cur = tables_[d];
    auto& next = tables_[d + 1];
    for (std::size_t t = 0; t < next.size(); ++t) next[t] = std::min(cur[2 * t], cur[2 * t + 1] - x);
  }

  void descend(int d, std::size_t weight) {
    const auto& m = tables_[d];
    const int b = m[1] + shift_;
    if (d == n_ - 1) {
      diff_[weight] += 1;
      diff_[weight + b + 1] -= 1;
      return;
    }
    if (d == n_ - 2) {
      for (int x = 0; x <= b; ++x) {
        const int last = std::min(m[2], m[3] - x) + shift_;
        diff_[weight + x] += 1;
        diff_[weight + x + last + 1] -= 1;
      }
      return;
    }
    for (int x = 0; x <= b; ++x) {
      assign(d, x);
      descend(d + 1, weight + x);
    }
  }

  const std::vector<std::int64_t>& diff() const { return diff_; }

private:
  int n_;
  int shift_;
  std::vector<std::int64_t> diff_;
  std::vector<std::vector<int>> tables_;
};

// Prefixes of length `depth` that are admissible; each one is a task.
void collect_prefixes(Enumerator& e, int d, int depth, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (d == depth) {
    out.push_back(prefix);
    return;
  }
  const int b = e.bound(d);
  for (int x = 0; x <= b; ++x) {
    e.assign(d, x);
    prefix.push_back(x);
    collect_prefixes(e, d + 1, depth, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

HilbertPolynomial hilbert_direct(const MultiGraph& g, int r, const DirectOptions& opts) {
  check_r(g, r);
  const int n = g.num_vertices();
  if (n == 0) return HilbertPolynomial::one();
  if (is_zero_algebra(g, r)) return {};
  if (n > kMaxDirectVertices)
    throw BudgetExceeded("direct enumeration limited to " + std::to_string(kMaxDirectVertices) +
                         " vertices");
  const double box = basis_size_bound(g, r);
  // Leaf counts are accumulated in 64-bit difference arrays.
  if (box > std::min(opts.budget, 1e18))
    throw BudgetExceeded("estimated basis size " + format_double(box) + " exceeds budget " +
                         format_double(opts.budget));

  const auto kap = kappa_table(g);
  const int shift = r - 1;
  // a(V) ≤ κ_V + r - 1 caps the degree.
  const auto max_weight = static_cast<std::size_t>(kap.back() + shift);

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::int64_t> diff(max_weight + 2, 0);

  if (threads == 1 || n < 4) {
    Enumerator e(n, shift, kap, max_weight);
    e.descend(0, 0);
    diff = e.diff();
  } else {
    // Split on the values of the first coordinates until there are enough
    // tasks to balance; each task owns its tables and difference array.
    int depth = 1;
    std::vector<std::vector<int>> tasks;
    for (; depth <= n - 3; ++depth) {
      tasks.clear();
      Enumerator probe(n, shift, kap, max_weight);
      std::vector<int> prefix;
      collect_prefixes(probe, 0, depth, prefix, tasks);
      if (tasks.size() >= 16 * threads) break;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::int64_t>> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Enumerator e(n, shift, kap, max_weight);
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
          const auto& prefix = tasks[i];
          std::size_t w = 0;
          for (std::size_t d = 0; d < prefix.size(); ++d) {
            e.assign(static_cast<int>(d), prefix[d]);
            w += prefix[d];
          }
          e.descend(static_cast<int>(prefix.size()), w);
        }
        partial[t] = e.diff();
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] += p[k];
  }

  std::vector<BigInt> coeffs(max_weight + 1);
  std::int64_t running = 0;
  for (std::size_t k = 0; k <= max_weight; ++k) {
    running += diff[k];
    coeffs[k] = running;
  }
  return HilbertPolynomial(std::move(coeffs));
}

TopComponent top_component(const MultiGraph& g, int r, const DirectOptions& opts) {
  const auto h = hilbert_direct(g, r, opts);
  return {h.top_degree(), h.top_coefficient()};
}

std::optional<HilbertPolynomial> closed_form_internal_regular(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n < 4 || !g.is_simple()) return std::nullopt;
  const int deg = g.nonloop_degree(0);
  for (int v = 1; v < n; ++v)
    if (g.nonloop_degree(v) != deg) return std::nullopt;
  if (deg == 3) return HilbertPolynomial{1, 1}.pow(n);
  if (deg == 4 && edge_connectivity(g) >= 4) {
    auto h = HilbertPolynomial{1, 1, 1}.pow(n);
    h -= HilbertPolynomial{static_cast<long long>(n)}.shifted(2 * n - 1);
    h -= HilbertPolynomial::one().shifted(2 * n);
    return h;
  }
  return std::nullopt;
}

} // namespace bizon
