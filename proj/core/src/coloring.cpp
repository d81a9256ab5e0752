#include "resil/coloring.hpp"

#include <algorithm>
#include <bit>

#include "cdcl.hpp"
#include "resil/errors.hpp"

namespace resil {

namespace {

// DSATUR-style backtracking: pick the uncolored vertex with the fewest
// remaining colors (ties: higher degree, then lower index), try colors in
// ascending order, never open more than one new color at a time.
class Search {
 public:
  Search(const std::vector<std::vector<Vertex>>& adj, int k)
      : adj_(adj),
        k_(k),
        n_(adj.size()),
        color_(n_, -1),
        counts_(n_ * static_cast<std::size_t>(k), 0),
        avail_(n_, k == kMaxColors ? ~0ull : ((1ull << k) - 1)) {}

  // Outer nullopt: node limit reached without an answer.
  std::optional<std::optional<Coloring>> run(std::uint64_t node_limit) {
    std::uint64_t nodes = 0;
    struct Frame {
      Vertex v;
      std::uint64_t remaining;
      int prev_max;
    };
    std::vector<Frame> stack;
    stack.reserve(n_);
    int max_used = -1;
    bool descend = true;

    while (true) {
      if (descend) {
        auto pick = select();
        if (!pick) {
          Coloring out;
          out.k = k_;
          out.colors.resize(n_);
          for (std::size_t v = 0; v < n_; ++v) out.colors[v] = static_cast<Color>(color_[v]);
          return std::optional<Coloring>(std::move(out));
        }
        const Vertex v = *pick;
        const int limit = std::min(k_, max_used + 2);
        const std::uint64_t range = limit >= 64 ? ~0ull : ((1ull << limit) - 1);
        stack.push_back({v, avail_[v] & range, max_used});
      }
      // Advance the top frame to its next candidate color.
      bool placed = false;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (color_[f.v] >= 0) unassign(f.v);
        if (f.remaining == 0) {
          max_used = f.prev_max;
          stack.pop_back();
          continue;
        }
        if (++nodes > node_limit) return std::nullopt;
        const int c = std::countr_zero(f.remaining);
        f.remaining &= f.remaining - 1;
        max_used = std::max(f.prev_max, c);
        if (assign(f.v, c)) {
          placed = true;
          break;
        }
      }
      if (!placed) return std::optional<Coloring>();
      descend = true;
    }
  }

 private:
  std::optional<Vertex> select() const {
    std::optional<Vertex> best;
    int best_avail = 0;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int a = std::popcount(avail_[v]);
      const std::size_t d = adj_[v].size();
      if (!best || a < best_avail || (a == best_avail && d > best_deg)) {
        best = static_cast<Vertex>(v);
        best_avail = a;
        best_deg = d;
      }
    }
    return best;
  }

  // Returns false when some uncolored neighbor is left without colors.
  bool assign(Vertex v, int c) {
    color_[v] = c;
    bool ok = true;
    const std::uint64_t bit = 1ull << c;
    for (Vertex w : adj_[v]) {
      if (color_[w] >= 0) continue;
      if (counts_[w * static_cast<std::size_t>(k_) + c]++ == 0) {
        avail_[w] &= ~bit;
        if (avail_[w] == 0) ok = false;
      }
    }
    return ok;
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    const std::uint64_t bit = 1ull << c;
    for (Vertex w : adj_[v]) {
      if (color_[w] >= 0) continue;
      if (--counts_[w * static_cast<std::size_t>(k_) + c] == 0) avail_[w] |= bit;
    }
  }

  const std::vector<std::vector<Vertex>>& adj_;
  int k_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> avail_;
};

// Direct encoding: x(v,c) <=> v gets color c. The highest-degree vertex is
// fixed to color 0.
std::optional<Coloring> solve_cdcl(const std::vector<std::vector<Vertex>>& adj, int k) {
  const std::size_t n = adj.size();
  auto x = [k](std::size_t v, int c) { return static_cast<std::int32_t>(v * static_cast<std::size_t>(k)) + c + 1; };
  detail::Cdcl solver(static_cast<std::int32_t>(n * static_cast<std::size_t>(k)));
  std::size_t hub = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > adj[hub].size()) hub = v;
    std::vector<std::int32_t> some;
    for (int c = 0; c < k; ++c) some.push_back(x(v, c));
    solver.add_clause(std::move(some));
    for (Vertex w : adj[v]) {
      if (w == v) return std::nullopt;
      if (w < v) continue;
      for (int c = 0; c < k; ++c) solver.add_clause({-x(v, c), -x(w, c)});
    }
  }
  if (n > 0) solver.add_clause({x(hub, 0)});
  auto model = solver.solve();
  if (!model) return std::nullopt;
  Coloring out;
  out.k = k;
  out.colors.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    int c = 0;
    while (!(*model)[static_cast<std::size_t>(x(v, c))]) ++c;
    out.colors[v] = static_cast<Color>(c);
  }
  return out;
}

std::optional<Coloring> solve_exact(const std::vector<std::vector<Vertex>>& adj, int k) {
  const std::uint64_t limit = 2000 + 50 * static_cast<std::uint64_t>(adj.size());
  if (auto quick = Search(adj, k).run(limit)) return std::move(*quick);
  return solve_cdcl(adj, k);
}

std::vector<std::vector<Vertex>> adjacency_of(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

}  // namespace

ColoringSolver::ColoringSolver(const Graph& g) : adj_(adjacency_of(g)) {}

std::optional<Coloring> ColoringSolver::solve(int k, std::span<const Edge> extra) const {
  if (k < 1 || k > kMaxColors) {
    throw PreconditionError("palette size must be in [1, " + std::to_string(kMaxColors) + "]");
  }
  const std::size_t n = adj_.size();
  if (static_cast<std::size_t>(k) >= n) {
    Coloring c;
    c.k = k;
    c.colors.resize(n);
    for (std::size_t v = 0; v < n; ++v) c.colors[v] = static_cast<Color>(v);
    return c;
  }
  if (extra.empty()) return solve_exact(adj_, k);
  auto adj = adj_;
  for (const Edge& e : extra) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return solve_exact(adj, k);
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  return ColoringSolver(g).solve(k);
}

int chromatic_number(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  ColoringSolver solver(g);
  for (int k = 1;; ++k) {
    if (solver.solve(k)) return k;
  }
}

std::variant<Coloring, DegreeWitness> greedy_color_bounded_degree(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("k must be positive");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= static_cast<std::size_t>(k)) return DegreeWitness{v, g.degree(v)};
  }
  Coloring c;
  c.k = k;
  c.colors.assign(g.num_vertices(), 0);
  std::vector<bool> used(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::fill(used.begin(), used.end(), false);
    for (Vertex w : g.neighbors(v)) {
      if (w < v) used[c.colors[w]] = true;
    }
    Color pick = 0;
    while (used[pick]) ++pick;
    c.colors[v] = pick;
  }
  return c;
}

bool validate_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.num_vertices()) return false;
  for (Color col : c.colors) {
    if (static_cast<int>(col) >= c.k) return false;
  }
  for (const Edge& e : g.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) return false;
  }
  return true;
}

}  // namespace resil
