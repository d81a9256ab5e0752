#pragma once

// Brute-force reference implementations used to cross-check the engines.
// Deliberately naive: no pruning, no shared code with core/.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "resil/cnf.hpp"
#include "resil/graph.hpp"

namespace oracle {

using resil::Clause;
using resil::CnfFormula;
using resil::Edge;
using resil::Graph;

inline bool colorable(const Graph& g, int k) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<int> col(n, 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (col[e.u] == col[e.v]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++col[i] == k) col[i++] = 0;
    if (i == n) return false;
  }
}

inline bool colorable_with(const Graph& g, const std::vector<Edge>& extra, int k) {
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return colorable(Graph(g.num_vertices(), all), k);
}

// Calls visit(subset) for every size-r subset of {0..n-1} in lexicographic
// order until it returns false.
inline void for_each_subset(std::size_t n, std::size_t r,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Edge> missing_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (resil::Vertex a = 0; a < g.num_vertices(); ++a)
    for (resil::Vertex b = a + 1; b < g.num_vertices(); ++b)
      if (!g.has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

struct GraphVerdict {
  bool resilient;
  std::optional<std::vector<Edge>> witness;
};

inline GraphVerdict graph_resilient(const Graph& g, std::size_t r, int k) {
  const auto pairs = missing_pairs(g);
  const std::size_t rt = std::min(r, pairs.size());
  GraphVerdict out{true, std::nullopt};
  for_each_subset(pairs.size(), rt, [&](const std::vector<std::size_t>& idx) {
    std::vector<Edge> extra;
    for (auto i : idx) extra.push_back(pairs[i]);
    if (colorable_with(g, extra, k)) return true;
    out = {false, extra};
    return false;
  });
  return out;
}

inline bool lit_true(int lit, std::uint32_t bits) {
  const bool v = (bits >> (std::abs(lit) - 1)) & 1u;
  return lit > 0 ? v : !v;
}

// Satisfiable with variables in `fixed_mask` pinned to `fixed_bits`.
inline bool satisfiable(const CnfFormula& f, std::uint32_t fixed_mask = 0, std::uint32_t fixed_bits = 0) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.num_vars());
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if ((bits & fixed_mask) != fixed_bits) continue;
    bool all = true;
    for (const Clause& c : f.clauses()) {
      bool any = false;
      for (int l : c) any = any || lit_true(l, bits);
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

struct SatVerdict {
  bool resilient;
  std::optional<resil::Restriction> witness;
};

// Subsets in lexicographic order; value vectors counted upward with the
// first chosen variable as the most significant bit.
inline SatVerdict sat_resilient(const CnfFormula& f, std::size_t r) {
  const std::size_t n = static_cast<std::size_t>(f.num_vars());
  const std::size_t rt = std::min(r, n);
  SatVerdict out{true, std::nullopt};
  for_each_subset(n, rt, [&](const std::vector<std::size_t>& idx) {
    for (std::uint32_t vals = 0; vals < (1u << rt); ++vals) {
      std::uint32_t mask = 0, bits = 0;
      resil::Restriction rho;
      for (std::size_t j = 0; j < rt; ++j) {
        const bool value = (vals >> (rt - 1 - j)) & 1u;
        mask |= 1u << idx[j];
        if (value) bits |= 1u << idx[j];
        rho.fixes.push_back({static_cast<std::int32_t>(idx[j] + 1), value});
      }
      if (!satisfiable(f, mask, bits)) {
        out = {false, rho};
        return false;
      }
    }
    return true;
  });
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (resil::Vertex a = 0; a < n; ++a)
    for (resil::Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

// Clauses of length in [min_len, max_len]; variables within a clause are
// distinct when `distinct` is set.
inline CnfFormula random_cnf(int n, int m, int min_len, int max_len, bool distinct, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_d(min_len, max_len);
  std::uniform_int_distribution<int> var_d(1, n);
  std::bernoulli_distribution sign(0.5);
  std::vector<Clause> clauses;
  for (int j = 0; j < m; ++j) {
    const int len = distinct ? std::min(len_d(rng), n) : len_d(rng);
    Clause c;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    while (static_cast<int>(c.size()) < len) {
      const int v = var_d(rng);
      if (distinct && used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      c.push_back(sign(rng) ? v : -v);
    }
    clauses.push_back(c);
  }
  return CnfFormula(n, clauses);
}

}  // namespace oracle
