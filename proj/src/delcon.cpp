#include "bizon/delcon.hpp"

#include "bizon/errors.hpp"

#include <random>

namespace bizon {

std::optional<HilbertPolynomial> MemoTable::find(const CanonicalForm& form, int r) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{form, r});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const CanonicalForm& form, int r, const HilbertPolynomial& h) {
  std::lock_guard lock(mutex_);
  entries_.insert_or_assign(Key{form, r}, h);
}

std::size_t MemoTable::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void MemoTable::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

namespace {

class Engine {
public:
  Engine(int r, MemoTable& memo, std::optional<std::uint64_t> seed) : r_(r), memo_(memo) {
    if (seed) rng_.emplace(*seed);
  }

  HilbertPolynomial run(const MultiGraph& g) {
    if (g.num_vertices() == 0) return HilbertPolynomial::one();
    if (g.is_connected()) return connected(g);
    HilbertPolynomial h = HilbertPolynomial::one();
    for (const auto& c : components(g)) {
      h = h * connected(c);
      if (h.is_zero()) break;
    }
    return h;
  }

private:
  HilbertPolynomial connected(const MultiGraph& g) {
    if (g.num_vertices() == 1) return HilbertPolynomial::geometric(static_cast<int>(g.num_edges()) + r_);

    std::optional<CanonicalForm> key;
    if (g.num_vertices() <= kCanonicalMaxVertices) {
      key = canonical_form(g);
      if (auto hit = memo_.find(*key, r_)) return *hit;
    }
    const std::size_t e = pivot(g);
    auto h = run(loopy_contract(g, e)) + run(delete_edge(g, e)).shifted(1);
    if (key) memo_.insert(*key, r_, h);
    return h;
  }

  std::size_t pivot(const MultiGraph& g) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (g.edge(i).is_loop()) continue;
      if (!rng_) return i;
      candidates.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(*rng_)];
  }

  int r_;
  MemoTable& memo_;
  std::optional<std::mt19937_64> rng_;
};

} // namespace

HilbertPolynomial hilbert_delcon(const MultiGraph& g, int r, const DelconOptions& opts) {
  if (r != 0 && r != 1) throw InvalidArgument("deletion-contraction computes r = 0 or r = 1 only");
  MemoTable local;
  Engine engine(r, opts.memo ? *opts.memo : local, opts.pivot_seed);
  return engine.run(g);
}

bool verify_delcon_relation(const MultiGraph& g, int r, std::size_t edge_index,
                            const DirectOptions& opts) {
  if (edge_index >= g.num_edges()) throw InvalidArgument("edge index out of range");
  if (g.edge(edge_index).is_loop()) throw InvalidArgument("deletion-contraction needs a non-loop edge");
  const auto contracted = loopy_contract(g, edge_index);
  const auto deleted = delete_edge(g, edge_index);
  const auto lhs = hilbert_direct(g, r, opts);
  const auto rhs = hilbert_direct(contracted, r, opts) + hilbert_direct(deleted, r, opts).shifted(1);
  return lhs == rhs;
}

} // namespace bizon
