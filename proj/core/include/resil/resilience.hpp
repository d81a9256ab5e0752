#pragma once

#include <cstdint>
#include <optional>

#include "resil/coloring.hpp"
#include "resil/graph.hpp"
#include "resil/sat.hpp"

namespace resil {

struct GraphResilienceVerdict {
  bool resilient = false;
  std::int64_t r_requested = 0;
  std::int64_t r_tested = 0;      ///< min(r_requested, |non_edges|)
  std::optional<EdgeSet> witness;  ///< first breaking edge set in canonical order
  std::uint64_t subsets_checked = 0;

  bool capped() const noexcept { return r_tested < r_requested; }
};

/// Does `g` stay k-colorable after adding any r new edges?
///
/// Candidate edge sets are the size-min(r, |non_edges|) subsets of
/// non_edges(g), scanned in lexicographic order; the witness is the first
/// one whose addition leaves g without a proper k-coloring. When g itself is
/// not k-colorable the verdict is negative with the first subset as witness.
GraphResilienceVerdict is_r_resiliently_k_colorable(const Graph& g, std::int64_t r, int k,
                                                    ScanOptions opts = {});

/// Largest r with g r-resiliently k-colorable, or Saturated when n <= k
/// (even the complete graph on n vertices is k-colorable).
/// Throws DomainError when g is not k-colorable.
MaxResilience max_graph_resilience(const Graph& g, int k, ScanOptions opts = {});

}  // namespace resil
