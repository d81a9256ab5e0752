#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace resil::detail {

/// Small deterministic CDCL solver: two watched literals, first-UIP
/// learning, activity-ordered decisions with phase saving, Luby restarts.
/// Variables are 1..n; clauses use DIMACS literals.
class Cdcl {
 public:
  explicit Cdcl(std::int32_t num_vars);

  /// Returns false if the clause makes the formula trivially unsatisfiable.
  bool add_clause(std::vector<std::int32_t> lits);

  /// Model indexed by variable (index 0 unused), or nullopt if unsatisfiable.
  std::optional<std::vector<bool>> solve();

 private:
  using Lit = std::uint32_t;  // 2*var + (negative ? 1 : 0)
  static Lit encode(std::int32_t l) { return l > 0 ? 2u * static_cast<Lit>(l) : 2u * static_cast<Lit>(-l) + 1; }
  static std::uint32_t var(Lit l) { return l >> 1; }
  static Lit neg(Lit l) { return l ^ 1u; }

  // 1 true, -1 false, 0 unassigned
  signed char value(Lit l) const {
    const signed char v = assign_[var(l)];
    return (l & 1u) ? static_cast<signed char>(-v) : v;
  }

  void enqueue(Lit l, std::int32_t reason);
  std::int32_t propagate();  // conflicting clause index or -1
  void analyze(std::int32_t conflict, std::vector<Lit>& learnt, std::uint32_t& backtrack_level);
  void backtrack(std::uint32_t level);
  std::uint32_t pick_branch();
  void bump(std::uint32_t v);
  void heap_up(std::uint32_t pos);
  void heap_down(std::uint32_t pos);
  void heap_insert(std::uint32_t v);
  std::uint32_t heap_pop();
  std::int32_t attach(std::vector<Lit> lits);

  std::uint32_t n_;
  bool trivially_unsat_ = false;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::int32_t>> watches_;  // per literal: clauses watching its negation
  std::vector<signed char> assign_;
  std::vector<std::uint32_t> level_;
  std::vector<std::int32_t> reason_;
  std::vector<bool> phase_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double bump_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<std::int32_t> heap_pos_;
  std::vector<bool> seen_;
  std::vector<Lit> pending_units_;
};

}  // namespace resil::detail
