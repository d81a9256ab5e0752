#include "resil/sat.hpp"

#include <algorithm>
#include <bit>

#include "resil/errors.hpp"
#include "resil/scan.hpp"

namespace resil {

namespace {

class Dpll {
 public:
  explicit Dpll(const CnfFormula& f)
      : f_(f),
        n_(f.num_vars()),
        value_(static_cast<std::size_t>(n_) + 1, 0),
        occurs_(2 * (static_cast<std::size_t>(n_) + 1)),
        sat_count_(f.num_clauses(), 0),
        false_count_(f.num_clauses(), 0) {
    for (std::size_t c = 0; c < f.num_clauses(); ++c) {
      for (Literal l : f.clauses()[c]) occurs_[slot(l)].push_back(static_cast<std::uint32_t>(c));
    }
  }

  std::optional<Assignment> run() {
    for (const auto& c : f_.clauses()) {
      if (c.empty()) return std::nullopt;
    }
    struct Decision {
      std::size_t trail_pos;
      std::int32_t var;
      bool flipped;
    };
    std::vector<Decision> decisions;
    std::vector<Literal> pending;
    for (const auto& c : f_.clauses()) {
      if (c.size() == 1) pending.push_back(c[0]);
    }
    std::int32_t cursor = 1;  // lowest possibly-unassigned variable
    while (true) {
      if (!propagate(pending)) {
        // Backtrack to the most recent decision that still has its true branch.
        while (!decisions.empty() && decisions.back().flipped) {
          undo_to(decisions.back().trail_pos);
          decisions.pop_back();
        }
        if (decisions.empty()) return std::nullopt;
        Decision& d = decisions.back();
        undo_to(d.trail_pos);
        d.flipped = true;
        cursor = std::min(cursor, d.var);
        pending.assign(1, d.var);
        continue;
      }
      while (cursor <= n_ && value_[static_cast<std::size_t>(cursor)] != 0) ++cursor;
      if (cursor > n_) break;
      decisions.push_back({trail_.size(), cursor, false});
      pending.assign(1, -cursor);
    }
    Assignment a;
    a.values.assign(static_cast<std::size_t>(n_) + 1, false);
    for (std::int32_t v = 1; v <= n_; ++v) a.values[static_cast<std::size_t>(v)] = value_[static_cast<std::size_t>(v)] > 0;
    return a;
  }

 private:
  static std::size_t slot(Literal l) {
    return 2 * static_cast<std::size_t>(var_of(l)) + (l < 0 ? 1 : 0);
  }

  // Assigns every literal in `queue` and everything it implies. On conflict
  // the assignments stay on the trail for the caller to undo.
  bool propagate(std::vector<Literal>& queue) {
    bool ok = true;
    while (!queue.empty() && ok) {
      const Literal l = queue.back();
      queue.pop_back();
      const auto v = static_cast<std::size_t>(var_of(l));
      const signed char want = l > 0 ? 1 : -1;
      if (value_[v] == want) continue;
      if (value_[v] == -want) {
        ok = false;
        break;
      }
      value_[v] = want;
      trail_.push_back(l);
      for (std::uint32_t c : occurs_[slot(l)]) ++sat_count_[c];
      for (std::uint32_t c : occurs_[slot(-l)]) {
        const std::size_t size = f_.clauses()[c].size();
        if (++false_count_[c] < size - 1 || sat_count_[c] > 0) continue;
        if (false_count_[c] == size) {
          ok = false;
          continue;  // finish counting so undo stays symmetric
        }
        for (Literal u : f_.clauses()[c]) {
          if (value_[static_cast<std::size_t>(var_of(u))] == 0) {
            queue.push_back(u);
            break;
          }
        }
      }
    }
    queue.clear();
    return ok;
  }

  void undo_to(std::size_t pos) {
    while (trail_.size() > pos) {
      const Literal l = trail_.back();
      trail_.pop_back();
      value_[static_cast<std::size_t>(var_of(l))] = 0;
      for (std::uint32_t c : occurs_[slot(l)]) --sat_count_[c];
      for (std::uint32_t c : occurs_[slot(-l)]) --false_count_[c];
    }
  }

  const CnfFormula& f_;
  std::int32_t n_;
  std::vector<signed char> value_;
  std::vector<std::vector<std::uint32_t>> occurs_;
  std::vector<std::uint32_t> sat_count_;
  std::vector<std::uint32_t> false_count_;
  std::vector<Literal> trail_;
};

// Scans the fixings of one unit. A pool of known satisfying assignments
// answers most fixings without calling the solver; the pool only affects
// speed, never the verdict.
class SatScanWorker {
 public:
  explicit SatScanWorker(const CnfFormula& f) : f_(f) {
    const auto slots = 2 * (static_cast<std::size_t>(f.num_vars()) + 1);
    agree_.assign(slots, 0);
  }

  std::optional<Restriction> scan_unit(const std::vector<std::uint32_t>& prefix, std::uint32_t n,
                                       std::uint32_t r) {
    subset_ = prefix;
    return descend(n, r);
  }

 private:
  std::optional<Restriction> descend(std::uint32_t n, std::uint32_t r) {
    if (subset_.size() == r) return check_subset();
    const std::uint32_t start = subset_.empty() ? 0 : subset_.back() + 1;
    const std::uint32_t remaining = r - static_cast<std::uint32_t>(subset_.size());
    for (std::uint32_t x = start; x + remaining <= n; ++x) {
      subset_.push_back(x);
      auto found = descend(n, r);
      subset_.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::size_t slot(std::int32_t var, bool value) const {
    return 2 * static_cast<std::size_t>(var) + (value ? 1 : 0);
  }

  std::optional<Restriction> check_subset() {
    const std::size_t r = subset_.size();
    Restriction rho;
    rho.fixes.resize(r);
    for (std::size_t i = 0; i < r; ++i) rho.fixes[i].var = static_cast<std::int32_t>(subset_[i]) + 1;
    const std::uint64_t vectors = 1ull << r;
    for (std::uint64_t bits = 0; bits < vectors; ++bits) {
      std::uint64_t mask = pool_mask();
      for (std::size_t i = 0; i < r; ++i) {
        const bool value = (bits >> (r - 1 - i)) & 1;
        rho.fixes[i].value = value;
        mask &= agree_[slot(rho.fixes[i].var, value)];
      }
      if (mask == 0 && !solve_and_remember(rho)) return rho;
    }
    return std::nullopt;
  }

  std::uint64_t pool_mask() const {
    return pool_size_ == 64 ? ~0ull : ((1ull << pool_size_) - 1);
  }

  bool solve_and_remember(const Restriction& rho) {
    auto sol = is_satisfiable(restrict(f_, rho));
    if (!sol) return false;
    for (const auto& fix : rho.fixes) sol->values[static_cast<std::size_t>(fix.var)] = fix.value;
    const unsigned idx = pool_size_ < 64 ? pool_size_++ : (evict_++ % 64);
    const std::uint64_t bit = 1ull << idx;
    for (std::int32_t v = 1; v <= f_.num_vars(); ++v) {
      const bool val = (*sol)[v];
      agree_[slot(v, val)] |= bit;
      agree_[slot(v, !val)] &= ~bit;
    }
    return true;
  }

  const CnfFormula& f_;
  std::vector<std::uint32_t> subset_;
  std::vector<std::uint64_t> agree_;  // per (var, value): pool entries agreeing
  unsigned pool_size_ = 0;
  unsigned evict_ = 0;
};

}  // namespace

std::optional<Assignment> is_satisfiable(const CnfFormula& f) { return Dpll(f).run(); }

SatResilienceVerdict is_r_resilient(const CnfFormula& f, std::int32_t r, ScanOptions opts) {
  if (r < 0) throw PreconditionError("r must be non-negative");
  SatResilienceVerdict out;
  out.r_requested = r;
  out.r_tested = std::min(r, f.num_vars());
  const auto n = static_cast<std::uint32_t>(f.num_vars());
  const auto rt = static_cast<std::uint32_t>(out.r_tested);
  if (rt >= 63) throw BudgetError("fixing 63 or more variables at once is not supported");

  auto witness = scan_first_failure<Restriction>(n, rt, resolve_threads(opts.threads),
                                                 [&] { return SatScanWorker(f); });
  const std::uint64_t per_subset = 1ull << rt;
  const std::uint64_t subsets = binomial(n, rt);
  if (!witness) {
    out.resilient = true;
    out.restrictions_checked = subsets > UINT64_MAX / per_subset ? UINT64_MAX : subsets * per_subset;
    return out;
  }
  std::vector<std::uint32_t> idx;
  std::uint64_t bits = 0;
  for (const auto& fix : witness->fixes) {
    idx.push_back(static_cast<std::uint32_t>(fix.var - 1));
    bits = (bits << 1) | (fix.value ? 1 : 0);
  }
  const std::uint64_t rank = subset_rank(n, idx);
  out.restrictions_checked = rank > (UINT64_MAX - bits - 1) / per_subset ? UINT64_MAX : rank * per_subset + bits + 1;
  out.witness = std::move(witness);
  return out;
}

MaxResilience max_sat_resilience(const CnfFormula& f, ScanOptions opts) {
  if (!is_satisfiable(f)) throw DomainError("formula is unsatisfiable: not even 0-resilient");
  for (std::int32_t r = 1; r <= f.num_vars(); ++r) {
    if (!is_r_resilient(f, r, opts).resilient) return std::int64_t{r - 1};
  }
  return Saturated{};
}

}  // namespace resil
