#include "resil/resilience.hpp"

#include <algorithm>
#include <vector>

#include "resil/errors.hpp"
#include "resil/scan.hpp"

namespace resil {

namespace {

// Depth-first scan over edge subsets of one unit. Every pool coloring
// carries a bit; compat_[i] holds the bits of pool colorings that keep
// non-edge i bichromatic, so a subset is settled without search whenever
// the AND over its edges is nonzero.
class GraphScanWorker {
 public:
  GraphScanWorker(const ColoringSolver& solver, const EdgeSet& candidates, int k)
      : solver_(solver), candidates_(candidates), k_(k), compat_(candidates.size(), 0) {}

  std::optional<EdgeSet> scan_unit(const std::vector<std::uint32_t>& prefix, std::uint32_t n,
                                   std::uint32_t r) {
    subset_.clear();
    masks_.assign(1, full_mask());
    for (std::uint32_t idx : prefix) push(idx);
    auto found = descend(n, r);
    return found;
  }

 private:
  std::uint64_t full_mask() const { return pool_.size() == 64 ? ~0ull : ((1ull << pool_.size()) - 1); }

  void push(std::uint32_t idx) {
    subset_.push_back(idx);
    masks_.push_back(masks_.back() & compat_[idx]);
  }

  void pop() {
    subset_.pop_back();
    masks_.pop_back();
  }

  std::optional<EdgeSet> descend(std::uint32_t n, std::uint32_t r) {
    if (subset_.size() == r) {
      if (masks_.back() != 0 || solve_leaf()) return std::nullopt;
      EdgeSet out;
      for (std::uint32_t idx : subset_) out.push_back(candidates_[idx]);
      return out;
    }
    const std::uint32_t start = subset_.empty() ? 0 : subset_.back() + 1;
    const std::uint32_t remaining = r - static_cast<std::uint32_t>(subset_.size());
    for (std::uint32_t x = start; x + remaining <= n; ++x) {
      push(x);
      auto found = descend(n, r);
      pop();
      if (found) return found;
    }
    return std::nullopt;
  }

  bool solve_leaf() {
    EdgeSet extra;
    extra.reserve(subset_.size());
    for (std::uint32_t idx : subset_) extra.push_back(candidates_[idx]);
    auto col = solver_.solve(k_, extra);
    if (!col) return false;
    remember(col->colors);
    return true;
  }

  void remember(const std::vector<Color>& colors) {
    unsigned slot = 0;
    if (pool_.size() < 64) {
      slot = static_cast<unsigned>(pool_.size());
      pool_.push_back(colors);
    } else {
      slot = evict_++ % 64;
      pool_[slot] = colors;
    }
    const std::uint64_t bit = 1ull << slot;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      const Edge& e = candidates_[i];
      if (colors[e.u] != colors[e.v]) {
        compat_[i] |= bit;
      } else {
        compat_[i] &= ~bit;
      }
    }
    // The new coloring handles every edge of the current path.
    for (auto& m : masks_) m |= bit;
  }

  const ColoringSolver& solver_;
  const EdgeSet& candidates_;
  int k_;
  std::vector<std::uint64_t> compat_;
  std::vector<std::vector<Color>> pool_;
  unsigned evict_ = 0;
  std::vector<std::uint32_t> subset_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace

GraphResilienceVerdict is_r_resiliently_k_colorable(const Graph& g, std::int64_t r, int k,
                                                    ScanOptions opts) {
  if (r < 0) throw PreconditionError("r must be non-negative");
  if (k < 1 || k > kMaxColors) throw PreconditionError("k out of range");
  const EdgeSet candidates = non_edges(g);
  GraphResilienceVerdict out;
  out.r_requested = r;
  out.r_tested = std::min<std::int64_t>(r, static_cast<std::int64_t>(candidates.size()));
  const ColoringSolver solver(g);
  const auto n = static_cast<std::uint32_t>(candidates.size());
  const auto rt = static_cast<std::uint32_t>(out.r_tested);

  auto witness = scan_first_failure<EdgeSet>(n, rt, resolve_threads(opts.threads), [&] {
    return GraphScanWorker(solver, candidates, k);
  });
  if (!witness) {
    out.resilient = true;
    out.subsets_checked = binomial(n, rt);
    return out;
  }
  std::vector<std::uint32_t> idx;
  for (const Edge& e : *witness) {
    idx.push_back(static_cast<std::uint32_t>(
        std::lower_bound(candidates.begin(), candidates.end(), e) - candidates.begin()));
  }
  out.subsets_checked = subset_rank(n, idx) + 1;
  out.witness = std::move(witness);
  return out;
}

MaxResilience max_graph_resilience(const Graph& g, int k, ScanOptions opts) {
  if (!is_k_colorable(g, k)) {
    throw DomainError("graph is not " + std::to_string(k) + "-colorable: not 0-resilient");
  }
  if (g.num_vertices() <= static_cast<std::size_t>(k)) return Saturated{};
  const auto total = static_cast<std::int64_t>(non_edges(g).size());
  for (std::int64_t r = 1; r <= total; ++r) {
    if (!is_r_resiliently_k_colorable(g, r, k, opts).resilient) return std::int64_t{r - 1};
  }
  // Unreachable: with every non-edge added the graph is K_n and n > k.
  throw std::logic_error("complete graph on more than k vertices reported k-colorable");
}

}  // namespace resil
