#include "bizon/canonical.hpp"

#include "bizon/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace bizon {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency(const MultiGraph& g) {
  const int n = g.num_vertices();
  Matrix a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      a[e.u][e.u]++;
    } else {
      a[e.u][e.v]++;
      a[e.v][e.u]++;
    }
  }
  return a;
}

// Colour refinement. Colours are ranks of sorted signatures, so they are
// invariant under relabelling.
std::vector<int> refine_colours(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  using Signature = std::vector<int>;
  auto rank = [n](const std::vector<Signature>& sig) {
    std::map<Signature, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = ids.at(sig[v]);
    return std::pair{out, next};
  };

  std::vector<Signature> sig(n);
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int u = 0; u < n; ++u)
      if (u != v) deg += a[v][u];
    sig[v] = {a[v][v], deg};
  }
  auto [colour, count] = rank(sig);
  while (true) {
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && a[v][u] > 0) nb.emplace_back(colour[u], a[v][u]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {colour[v]};
      for (auto [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
    auto [next_colour, next_count] = rank(sig);
    colour = std::move(next_colour);
    if (next_count == count) break;
    count = next_count;
  }
  return colour;
}

class Search {
public:
  Search(const Matrix& a, std::vector<int> colour) : a_(a), colour_(std::move(colour)) {
    const int n = static_cast<int>(a_.size());
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    placed_.assign(n, false);
    order_.reserve(n);
  }

  std::vector<std::uint16_t> run() {
    std::vector<std::uint16_t> seq;
    seq.reserve(a_.size() * (a_.size() + 1) / 2);
    descend(seq);
    return best_;
  }

private:
  // u and w can be swapped by an automorphism fixing everything else.
  bool twins(int u, int w) const {
    if (a_[u][u] != a_[w][w]) return false;
    for (std::size_t y = 0; y < a_.size(); ++y) {
      if (static_cast<int>(y) == u || static_cast<int>(y) == w) continue;
      if (a_[u][y] != a_[w][y]) return false;
    }
    return true;
  }

  // -1, 0, +1 comparing seq[0, len) with the same prefix of the best code.
  int compare_prefix(const std::vector<std::uint16_t>& seq, std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (seq[i] != best_[i]) return seq[i] < best_[i] ? -1 : 1;
    return 0;
  }

  void descend(std::vector<std::uint16_t>& seq) {
    const std::size_t k = order_.size();
    if (k == a_.size()) {
      if (best_.empty() || compare_prefix(seq, seq.size()) < 0) best_ = seq;
      return;
    }
    std::vector<int> tried;
    for (std::size_t x = 0; x < a_.size(); ++x) {
      const int v = static_cast<int>(x);
      if (placed_[v] || colour_[v] != slot_colour_[k]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);

      const std::size_t mark = seq.size();
      // The best code may have changed inside an earlier sibling's subtree.
      int state = best_.empty() ? -1 : compare_prefix(seq, mark);
      if (state > 0) return;
      auto emit = [&](int value) {
        if (value > 0xFFFF) throw BudgetExceeded("edge multiplicity too large for canonical form");
        const auto entry = static_cast<std::uint16_t>(value);
        if (state == 0 && entry != best_[seq.size()]) state = entry < best_[seq.size()] ? -1 : 1;
        seq.push_back(entry);
      };
      for (std::size_t j = 0; j < k && state <= 0; ++j) emit(a_[v][order_[j]]);
      if (state <= 0) emit(a_[v][v]);

      if (state <= 0) {
        placed_[v] = true;
        order_.push_back(v);
        descend(seq);
        order_.pop_back();
        placed_[v] = false;
      }
      seq.resize(mark);
    }
  }

  const Matrix& a_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<bool> placed_;
  std::vector<int> order_;
  std::vector<std::uint16_t> best_;
};

void put16(std::string& s, std::uint16_t x) {
  s.push_back(static_cast<char>(x & 0xFF));
  s.push_back(static_cast<char>(x >> 8));
}

std::uint16_t get16(const std::string& s, std::size_t i) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(s[i]) |
                                    (static_cast<unsigned char>(s[i + 1]) << 8));
}

} // namespace

CanonicalForm canonical_form(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > kCanonicalMaxVertices)
    throw BudgetExceeded("canonical form limited to " + std::to_string(kCanonicalMaxVertices) +
                         " vertices");
  const Matrix a = adjacency(g);
  CanonicalForm form;
  put16(form.code, static_cast<std::uint16_t>(n));
  if (n == 0) return form;
  Search search(a, refine_colours(a));
  for (std::uint16_t x : search.run()) put16(form.code, x);
  return form;
}

MultiGraph decode(const CanonicalForm& form) {
  if (form.code.size() < 2) throw InvalidArgument("truncated canonical form");
  const int n = get16(form.code, 0);
  MultiGraph g(n);
  std::size_t pos = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      if (pos + 2 > form.code.size()) throw InvalidArgument("truncated canonical form");
      const int m = get16(form.code, pos);
      pos += 2;
      for (int c = 0; c < m; ++c) g.add_edge(i, j);
    }
  return g;
}

} // namespace bizon
