#include "resil/reductions.hpp"

#include <algorithm>
#include <string>

#include "resil/errors.hpp"

namespace resil {

CnfFormula blow_up(const CnfFormula& f, std::int32_t s, const Budget& budget) {
  if (s < 1) throw PreconditionError("blow-up factor s must be >= 1");
  const std::uint64_t m = f.num_clauses();
  std::uint64_t total = m == 0 ? 0 : 1;
  for (std::int32_t i = 0; i < s && total > 0; ++i) {
    if (total > budget.max_clauses / m) {
      throw BudgetError("blow-up would produce m^s = " + std::to_string(m) + "^" + std::to_string(s) +
                        " clauses, budget is " + std::to_string(budget.max_clauses));
    }
    total *= m;
  }
  if (static_cast<std::int64_t>(f.num_vars()) * s > INT32_MAX) throw BudgetError("variable count overflow");
  const std::int32_t n = f.num_vars();

  std::vector<Clause> out;
  out.reserve(total);
  std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    Clause c;
    for (std::int32_t copy = 0; copy < s; ++copy) {
      const std::int32_t shift = copy * n;
      for (Literal l : f.clauses()[pick[static_cast<std::size_t>(copy)]]) {
        c.push_back(l > 0 ? l + shift : l - shift);
      }
    }
    out.push_back(std::move(c));
    // Odometer with the last copy varying fastest.
    for (std::int32_t i = s - 1; i >= 0; --i) {
      auto& p = pick[static_cast<std::size_t>(i)];
      if (++p < m) break;
      p = 0;
    }
  }
  return CnfFormula(n * s, std::move(out));
}

CnfFormula shrink_down(const CnfFormula& f) {
  const std::size_t w = f.width();
  if (w < 2) throw PreconditionError("shrink-down needs clause width >= 2, got " + std::to_string(w));
  const std::size_t target = (w + 1) / 2 + 1;
  std::int32_t next_var = f.num_vars();
  std::vector<Clause> out;
  out.reserve(2 * f.num_clauses());
  for (const Clause& c : f.clauses()) {
    if (c.size() <= target) {
      out.push_back(c);
      continue;
    }
    const Literal z = ++next_var;
    const std::size_t half = (c.size() + 1) / 2;
    Clause first(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
    Clause second(c.begin() + static_cast<std::ptrdiff_t>(half), c.end());
    first.push_back(z);
    second.push_back(-z);
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  }
  return CnfFormula(next_var, std::move(out));
}

CnfFormula pad_to_width(const CnfFormula& f, std::size_t width, const Budget& budget) {
  std::size_t most_missing = 0;
  std::uint64_t total = 0;
  for (const Clause& c : f.clauses()) {
    const std::size_t missing = c.size() < width ? width - c.size() : 0;
    most_missing = std::max(most_missing, missing);
    if (missing >= 63) throw BudgetError("padding by " + std::to_string(missing) + " literals is too large");
    total += 1ull << missing;
    if (total > budget.max_clauses) {
      throw BudgetError("padding to width " + std::to_string(width) + " exceeds the clause budget of " +
                        std::to_string(budget.max_clauses));
    }
  }
  if (most_missing == 0) return f;
  const std::int32_t first_fresh = f.num_vars() + 1;
  std::vector<Clause> out;
  out.reserve(total);
  for (const Clause& c : f.clauses()) {
    const std::size_t missing = c.size() < width ? width - c.size() : 0;
    for (std::uint64_t pattern = 0; pattern < (1ull << missing); ++pattern) {
      Clause padded = c;
      for (std::size_t j = 0; j < missing; ++j) {
        const Literal y = first_fresh + static_cast<std::int32_t>(j);
        const bool negative = (pattern >> (missing - 1 - j)) & 1;
        padded.push_back(negative ? -y : y);
      }
      out.push_back(std::move(padded));
    }
  }
  return CnfFormula(f.num_vars() + static_cast<std::int32_t>(most_missing), std::move(out));
}

std::size_t chain_start_width(std::int32_t r) {
  if (r < 2) throw PreconditionError("hardness chain needs r >= 2");
  switch (r) {
    case 2: return 9;
    case 3: return 16;
    case 4: return 24;
    default: return static_cast<std::size_t>(3 * (r + 1) + (r - 5));
  }
}

CnfFormula hardness_chain(std::int32_t r, const CnfFormula& f3, const Budget& budget) {
  const std::size_t start = chain_start_width(r);
  if (f3.width() > 3) throw PreconditionError("hardness chain input must be a 3-CNF");
  const auto target = static_cast<std::size_t>(r) + 1;
  CnfFormula f = pad_to_width(f3, 3, budget);
  f = blow_up(f, r + 1, budget);
  f = pad_to_width(f, start, budget);
  while (f.width() > target) {
    f = shrink_down(f);
    f = pad_to_width(f, f.width(), budget);
  }
  if (f.num_clauses() > 0 && f.width() != target) {
    throw std::logic_error("hardness chain ended at width " + std::to_string(f.width()));
  }
  return f;
}

}  // namespace resil
