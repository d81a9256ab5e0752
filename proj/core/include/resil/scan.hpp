#pragma once

#include <cstdint>
#include <vector>

namespace resil {

/// Number of size-r subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Lexicographic rank of the sorted index set `subset` among all
/// size-|subset| subsets of {0..n-1} (saturating).
std::uint64_t subset_rank(std::uint64_t n, const std::vector<std::uint32_t>& subset);

/// Worker count for engine scans: `requested` if positive, otherwise the
/// hardware concurrency (at least 1).
unsigned resolve_threads(int requested);

}  // namespace resil

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

namespace resil {

/// Scans every size-r subset of {0..n-1} in lexicographic order, in
/// parallel, and returns the lexicographically first failure.
///
/// Work is split into units: all subsets sharing one prefix of length
/// min(r, 2). `make_worker()` is called once per thread and must return an
/// object with
///
///   std::optional<W> scan_unit(const std::vector<std::uint32_t>& prefix,
///                              std::uint32_t n, std::uint32_t r);
///
/// which reports the first failure among the subsets extending `prefix`.
/// The result does not depend on the thread count.
template <class W, class MakeWorker>
std::optional<W> scan_first_failure(std::uint32_t n, std::uint32_t r, unsigned threads,
                                    MakeWorker&& make_worker) {
  const std::uint32_t depth = std::min<std::uint32_t>(r, 2);
  std::vector<std::vector<std::uint32_t>> units;
  if (depth == 0) {
    units.emplace_back();
  } else if (depth == 1) {
    for (std::uint32_t a = 0; a + r <= n; ++a) units.push_back({a});
  } else {
    for (std::uint32_t a = 0; a + r <= n; ++a)
      for (std::uint32_t b = a + 1; b + r - 1 <= n; ++b) units.push_back({a, b});
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;
  std::optional<W> best_witness;

  auto body = [&] {
    auto worker = make_worker();
    while (true) {
      const std::size_t u = next.fetch_add(1);
      if (u >= units.size() || u > best.load()) break;
      auto found = worker.scan_unit(units[u], n, r);
      if (!found) continue;
      std::lock_guard lock(mu);
      if (u < best.load()) {
        best.store(u);
        best_witness = std::move(found);
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(units.size())));
  if (threads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  return best_witness;
}

}  // namespace resil
