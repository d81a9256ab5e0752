#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "resil/graph.hpp"

namespace resil {

using Color = std::uint8_t;

/// Palette of the gadget reductions: white, black, gray.
inline constexpr Color kWhite = 0;
inline constexpr Color kBlack = 1;
inline constexpr Color kGray = 2;

/// Largest palette the exact solver supports.
inline constexpr int kMaxColors = 64;

struct Coloring {
  std::vector<Color> colors;  ///< one entry per vertex
  int k = 0;                  ///< palette size; valid colors are 0..k-1
};

/// Exact k-coloring search. Returns a proper coloring or nullopt.
/// DSATUR backtracking under a node limit, then clause learning over the
/// direct encoding. Deterministic: the same graph and k always produce the
/// same coloring.
/// Requires 1 <= k <= kMaxColors (k > n is answered directly).
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Least k with a proper k-coloring; 0 for the empty graph.
int chromatic_number(const Graph& g);

/// A vertex of degree >= k.
struct DegreeWitness {
  Vertex vertex = 0;
  std::size_t degree = 0;
};

/// Single ascending-index greedy pass. Returns the coloring when
/// max degree <= k-1, otherwise the first vertex whose degree is >= k.
std::variant<Coloring, DegreeWitness> greedy_color_bounded_degree(const Graph& g, int k);

/// True iff `c` covers every vertex, uses only colors < c.k and leaves no
/// edge monochromatic.
bool validate_coloring(const Graph& g, const Coloring& c);

/// Dense adjacency form of a graph for repeated solves on small graphs.
/// Owns no reference to the source graph.
class ColoringSolver {
 public:
  explicit ColoringSolver(const Graph& g);

  std::size_t num_vertices() const noexcept { return adj_.size(); }

  /// Solves the base graph plus `extra` pairs (which may duplicate edges).
  std::optional<Coloring> solve(int k, std::span<const Edge> extra = {}) const;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace resil
