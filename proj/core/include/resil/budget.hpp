#pragma once

#include <cstdint>
#include <string_view>

namespace resil {

/// Size limits for the exponential constructions.
struct Budget {
  std::uint64_t max_clauses = 1'000'000;
  std::uint64_t max_vertices = 100'000;

  /// Defaults overridden by RESILIENCE_BUDGET, which is either a single
  /// integer (applied to both limits) or `clauses=N,vertices=M`.
  static Budget from_env();

  /// Same syntax as the environment variable. Throws PreconditionError.
  static Budget parse(std::string_view spec);
};

}  // namespace resil
