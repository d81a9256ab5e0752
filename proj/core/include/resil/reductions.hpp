#pragma once

#include <cstdint>

#include "resil/budget.hpp"
#include "resil/cnf.hpp"

namespace resil {

/// Disjunction of s variable-disjoint copies of `f`, distributed into CNF.
///
/// Copy i (0-based) renames variable v to v + i*num_vars. Output clauses are
/// the s-fold clause product in lexicographic order, copy 0 most
/// significant; each is the concatenation of the chosen clauses. An
/// r-resilient input yields an ((r+1)s - 1)-resilient output.
/// Throws BudgetError when m^s exceeds the clause budget.
CnfFormula blow_up(const CnfFormula& f, std::int32_t s, const Budget& budget = Budget::from_env());

/// Halves clause width with one fresh pivot per split clause.
///
/// With w = width(f) and t = ceil(w/2) + 1, every clause longer than t is
/// replaced by (first ceil(L/2) literals OR z) and (remaining literals OR
/// NOT z), z fresh; shorter clauses are kept. Fresh variables are numbered
/// from num_vars + 1 in clause order. Throws PreconditionError if w < 2.
CnfFormula shrink_down(const CnfFormula& f);

/// Widens every clause shorter than `width` without changing the formula's
/// models on its original variables: a clause C missing x literals becomes
/// the 2^x clauses C OR (±y1 ... ±yx) over fresh y's shared by all clauses.
/// Every clause keeps distinct variables, and fixing y's never matters.
CnfFormula pad_to_width(const CnfFormula& f, std::size_t width,
                        const Budget& budget = Budget::from_env());

/// Starting clause width the chain pads to after blowing up with s = r+1.
std::size_t chain_start_width(std::int32_t r);

/// 3-CNF to (r+1)-CNF that is r-resilient when `f3` is satisfiable and
/// unsatisfiable otherwise: pad `f3` to width 3, blow up with s = r+1, pad
/// to chain_start_width(r), then alternate shrink_down and pad_to_width
/// until the width is r+1. Requires r >= 2 and width(f3) <= 3.
CnfFormula hardness_chain(std::int32_t r, const CnfFormula& f3,
                          const Budget& budget = Budget::from_env());

}  // namespace resil
