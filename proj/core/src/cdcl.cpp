#include "cdcl.hpp"

#include <algorithm>
#include <cstdlib>

namespace resil::detail {

namespace {

// Luby sequence, 1-based: 1 1 2 1 1 2 4 ...
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  std::uint64_t x = i;
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return 1ull << seq;
}

}  // namespace

Cdcl::Cdcl(std::int32_t num_vars)
    : n_(static_cast<std::uint32_t>(num_vars)),
      watches_(2 * (n_ + 1)),
      assign_(n_ + 1, 0),
      level_(n_ + 1, 0),
      reason_(n_ + 1, -1),
      phase_(n_ + 1, false),
      activity_(n_ + 1, 0.0),
      heap_pos_(n_ + 1, -1),
      seen_(n_ + 1, false) {
  for (std::uint32_t v = 1; v <= n_; ++v) heap_insert(v);
}

bool Cdcl::add_clause(std::vector<std::int32_t> in) {
  if (trivially_unsat_) return false;
  std::vector<Lit> lits;
  lits.reserve(in.size());
  for (auto l : in) lits.push_back(encode(l));
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i] == neg(lits[i - 1])) return true;  // tautology
  }
  if (lits.empty()) {
    trivially_unsat_ = true;
    return false;
  }
  if (lits.size() == 1) {
    pending_units_.push_back(lits[0]);
    return true;
  }
  attach(std::move(lits));
  return true;
}

std::int32_t Cdcl::attach(std::vector<Lit> lits) {
  const auto idx = static_cast<std::int32_t>(clauses_.size());
  watches_[neg(lits[0])].push_back(idx);
  watches_[neg(lits[1])].push_back(idx);
  clauses_.push_back(std::move(lits));
  return idx;
}

void Cdcl::enqueue(Lit l, std::int32_t reason) {
  const std::uint32_t v = var(l);
  assign_[v] = (l & 1u) ? -1 : 1;
  level_[v] = static_cast<std::uint32_t>(trail_lim_.size());
  reason_[v] = reason;
  trail_.push_back(l);
}

std::int32_t Cdcl::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];  // p became true; clauses watching ~p
    auto& ws = watches_[p];
    std::size_t keep = 0;
    std::int32_t conflict = -1;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::int32_t ci = ws[i];
      if (conflict >= 0) {
        ws[keep++] = ci;
        continue;
      }
      auto& c = clauses_[static_cast<std::size_t>(ci)];
      const Lit false_lit = neg(p);
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t j = 2; j < c.size(); ++j) {
        if (value(c[j]) != -1) {
          std::swap(c[1], c[j]);
          watches_[neg(c[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (value(c[0]) == -1) {
        conflict = ci;
      } else {
        enqueue(c[0], ci);
      }
    }
    ws.resize(keep);
    if (conflict >= 0) return conflict;
  }
  return -1;
}

void Cdcl::bump(std::uint32_t v) {
  activity_[v] += bump_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    bump_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(static_cast<std::uint32_t>(heap_pos_[v]));
}

void Cdcl::analyze(std::int32_t conflict, std::vector<Lit>& learnt, std::uint32_t& bt) {
  learnt.assign(1, 0);
  const auto current = static_cast<std::uint32_t>(trail_lim_.size());
  int open = 0;
  Lit p = 0;
  bool have_p = false;
  std::size_t index = trail_.size();
  std::int32_t ci = conflict;
  std::vector<std::uint32_t> touched;
  while (true) {
    const auto& c = clauses_[static_cast<std::size_t>(ci)];
    for (std::size_t j = have_p ? 1 : 0; j < c.size(); ++j) {
      const Lit q = c[j];
      const std::uint32_t v = var(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = true;
      touched.push_back(v);
      bump(v);
      if (level_[v] == current) {
        ++open;
      } else {
        learnt.push_back(q);
      }
    }
    do {
      p = trail_[--index];
    } while (!seen_[var(p)]);
    have_p = true;
    ci = reason_[var(p)];
    --open;
    if (open == 0) break;
    // reason clauses keep the implied literal in position 0
  }
  learnt[0] = neg(p);
  for (auto v : touched) seen_[v] = false;
  bt = 0;
  std::size_t max_i = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    if (level_[var(learnt[i])] > bt) {
      bt = level_[var(learnt[i])];
      max_i = i;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
  bump_ *= 1.0 / 0.95;
}

void Cdcl::backtrack(std::uint32_t lvl) {
  if (trail_lim_.size() <= lvl) return;
  for (std::size_t i = trail_.size(); i > trail_lim_[lvl]; --i) {
    const std::uint32_t v = var(trail_[i - 1]);
    phase_[v] = assign_[v] > 0;
    assign_[v] = 0;
    reason_[v] = -1;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
  qhead_ = trail_.size();
}

std::uint32_t Cdcl::pick_branch() {
  while (!heap_.empty()) {
    const std::uint32_t v = heap_pop();
    if (assign_[v] == 0) return v;
  }
  return 0;
}

// Max-heap on activity; ties broken by lower variable index.
void Cdcl::heap_up(std::uint32_t pos) {
  const std::uint32_t v = heap_[pos];
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  };
  while (pos > 0) {
    const std::uint32_t parent = (pos - 1) / 2;
    if (!better(v, heap_[parent])) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = static_cast<std::int32_t>(pos);
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<std::int32_t>(pos);
}

void Cdcl::heap_down(std::uint32_t pos) {
  const std::uint32_t v = heap_[pos];
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  };
  const auto size = static_cast<std::uint32_t>(heap_.size());
  while (true) {
    std::uint32_t child = 2 * pos + 1;
    if (child >= size) break;
    if (child + 1 < size && better(heap_[child + 1], heap_[child])) ++child;
    if (!better(heap_[child], v)) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = static_cast<std::int32_t>(pos);
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<std::int32_t>(pos);
}

void Cdcl::heap_insert(std::uint32_t v) {
  heap_.push_back(v);
  heap_up(static_cast<std::uint32_t>(heap_.size() - 1));
}

std::uint32_t Cdcl::heap_pop() {
  const std::uint32_t top = heap_[0];
  heap_pos_[top] = -1;
  const std::uint32_t last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_down(0);
  }
  return top;
}

std::optional<std::vector<bool>> Cdcl::solve() {
  if (trivially_unsat_) return std::nullopt;
  for (Lit u : pending_units_) {
    const signed char val = value(u);
    if (val == -1) return std::nullopt;
    if (val == 0) enqueue(u, -1);
  }
  if (propagate() >= 0) return std::nullopt;

  std::vector<Lit> learnt;
  std::uint64_t restart_index = 0;
  std::uint64_t conflicts_left = 100 * luby(restart_index);
  while (true) {
    const std::int32_t conflict = propagate();
    if (conflict >= 0) {
      if (trail_lim_.empty()) return std::nullopt;
      std::uint32_t bt = 0;
      analyze(conflict, learnt, bt);
      backtrack(bt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        const std::int32_t ci = attach(learnt);
        enqueue(learnt[0], ci);
      }
      if (conflicts_left > 0) --conflicts_left;
      continue;
    }
    if (conflicts_left == 0) {
      backtrack(0);
      conflicts_left = 100 * luby(++restart_index);
      continue;
    }
    const std::uint32_t v = pick_branch();
    if (v == 0) {
      std::vector<bool> model(n_ + 1, false);
      for (std::uint32_t i = 1; i <= n_; ++i) model[i] = assign_[i] > 0;
      return model;
    }
    trail_lim_.push_back(trail_.size());
    enqueue(phase_[v] ? 2 * v : 2 * v + 1, -1);
  }
}

}  // namespace resil::detail
