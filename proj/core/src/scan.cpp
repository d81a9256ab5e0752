#include "resil/scan.hpp"

#include <limits>
#include <thread>

namespace resil {

namespace {
__extension__ typedef unsigned __int128 wide_t;
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  wide_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t subset_rank(std::uint64_t n, const std::vector<std::uint32_t>& subset) {
  // Count the subsets that precede `subset` position by position.
  const std::uint64_t r = subset.size();
  wide_t rank = 0;
  std::uint64_t lo = 0;
  for (std::uint64_t i = 0; i < r; ++i) {
    for (std::uint64_t x = lo; x < subset[i]; ++x) rank += binomial(n - x - 1, r - i - 1);
    lo = subset[i] + 1;
  }
  if (rank > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(rank);
}

unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace resil
