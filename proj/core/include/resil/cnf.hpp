#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resil {

/// DIMACS literal: +v or -v for variable v >= 1.
using Literal = std::int32_t;
using Clause = std::vector<Literal>;

inline constexpr std::int32_t var_of(Literal l) { return l < 0 ? -l : l; }

class CnfFormula;

/// Builds a formula without the non-empty-clause check; used by restrict().
CnfFormula make_restricted(std::int32_t num_vars, std::vector<Clause> clauses);

/// Conjunction of clauses over variables 1..num_vars.
///
/// The empty clause is rejected at construction; it can only appear in the
/// output of restrict(), where it marks the formula unsatisfiable.
class CnfFormula {
 public:
  CnfFormula() = default;

  /// Throws PreconditionError on an empty clause, a zero literal or a
  /// variable outside [1, num_vars].
  CnfFormula(std::int32_t num_vars, std::vector<Clause> clauses);

  std::int32_t num_vars() const noexcept { return num_vars_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// Longest clause length (0 for the empty formula).
  std::size_t width() const noexcept;

  /// True when some clause has no literals (only produced by restrict()).
  bool has_empty_clause() const noexcept;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  friend CnfFormula make_restricted(std::int32_t, std::vector<Clause>);

  std::int32_t num_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// Total truth assignment; index 0 is unused so that `values[v]` is variable v.
struct Assignment {
  std::vector<bool> values;

  bool operator[](std::int32_t v) const { return values[static_cast<std::size_t>(v)]; }
  bool satisfies(Literal l) const { return l > 0 ? (*this)[l] : !(*this)[-l]; }
};

/// Partial assignment, sorted by variable.
struct Restriction {
  struct Fix {
    std::int32_t var = 0;
    bool value = false;
    friend bool operator==(const Fix&, const Fix&) = default;
  };
  std::vector<Fix> fixes;

  std::size_t size() const noexcept { return fixes.size(); }
  friend bool operator==(const Restriction&, const Restriction&) = default;
};

/// Reads DIMACS CNF (`p cnf n m`, zero-terminated clauses, `c` comments).
/// Clauses may span lines. Literal order is preserved.
CnfFormula parse_cnf(std::string_view text);

/// Writes `p cnf n m` and one zero-terminated clause per line.
std::string serialize_cnf(const CnfFormula& f);

/// True iff every clause has a literal made true by `a`.
bool evaluate(const CnfFormula& f, const Assignment& a);

/// Drops satisfied and tautological clauses and falsified literals.
/// A clause whose literals are all falsified becomes the empty clause.
CnfFormula restrict(const CnfFormula& f, const Restriction& r);

}  // namespace resil
