#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "resil/cnf.hpp"

namespace resil {

/// DPLL with unit propagation; branches on the lowest unassigned variable,
/// false before true. Returns a total satisfying assignment or nullopt.
std::optional<Assignment> is_satisfiable(const CnfFormula& f);

struct SatResilienceVerdict {
  bool resilient = false;
  std::int32_t r_requested = 0;
  std::int32_t r_tested = 0;           ///< min(r_requested, num_vars)
  std::optional<Restriction> witness;  ///< first failing fixing in canonical order
  std::uint64_t restrictions_checked = 0;

  bool capped() const noexcept { return r_tested < r_requested; }
};

struct ScanOptions {
  int threads = 1;  ///< <= 0 selects hardware concurrency
};

/// Does `f` stay satisfiable under every fixing of r variables?
///
/// Fixings are enumerated by variable subset in lexicographic order, then by
/// value vector counted upward in binary with the first variable as the most
/// significant bit (false = 0). r larger than num_vars is capped.
SatResilienceVerdict is_r_resilient(const CnfFormula& f, std::int32_t r, ScanOptions opts = {});

/// Largest r for which `f` is r-resilient, or Saturated when it survives
/// fixing all of its variables. Throws DomainError if `f` is unsatisfiable.
struct Saturated {
  friend bool operator==(Saturated, Saturated) { return true; }
};
using MaxResilience = std::variant<std::int64_t, Saturated>;

MaxResilience max_sat_resilience(const CnfFormula& f, ScanOptions opts = {});

}  // namespace resil
