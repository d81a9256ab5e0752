#include "resil/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "resil/errors.hpp"

namespace resil {

namespace {

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw PreconditionError("bad budget value '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Budget Budget::parse(std::string_view spec) {
  Budget b;
  if (spec.find('=') == std::string_view::npos) {
    b.max_clauses = b.max_vertices = to_u64(spec);
    return b;
  }
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw PreconditionError("bad budget item '" + std::string(item) + "'");
    const auto key = item.substr(0, eq);
    const auto value = to_u64(item.substr(eq + 1));
    if (key == "clauses") {
      b.max_clauses = value;
    } else if (key == "vertices") {
      b.max_vertices = value;
    } else {
      throw PreconditionError("unknown budget key '" + std::string(key) + "'");
    }
  }
  return b;
}

Budget Budget::from_env() {
  const char* env = std::getenv("RESILIENCE_BUDGET");
  if (env == nullptr || *env == '\0') return Budget{};
  return parse(env);
}

}  // namespace resil
