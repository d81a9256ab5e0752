#include "resil/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "resil/errors.hpp"

namespace resil {

CnfFormula::CnfFormula(std::int32_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw PreconditionError("negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].empty()) {
      throw PreconditionError("clause " + std::to_string(i + 1) + " is empty");
    }
    for (Literal l : clauses_[i]) {
      if (l == 0 || var_of(l) > num_vars_) {
        throw PreconditionError("literal " + std::to_string(l) + " out of range for " +
                                std::to_string(num_vars_) + " variables");
      }
    }
  }
}

CnfFormula make_restricted(std::int32_t num_vars, std::vector<Clause> clauses) {
  CnfFormula f;
  f.num_vars_ = num_vars;
  f.clauses_ = std::move(clauses);
  return f;
}

std::size_t CnfFormula::width() const noexcept {
  std::size_t w = 0;
  for (const auto& c : clauses_) w = std::max(w, c.size());
  return w;
}

bool CnfFormula::has_empty_clause() const noexcept {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

CnfFormula parse_cnf(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == 'c' || line[i] == '%') continue;
    if (line[i] == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::istringstream in{std::string(line.substr(i))};
      std::string p;
      std::string fmt;
      if (!(in >> p >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      std::string rest;
      if (in >> rest) throw ParseError(line_no, "trailing tokens after header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before header");
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::int64_t lit = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, lit);
      if (ec != std::errc() || ptr != line.data() + j) {
        throw ParseError(line_no, "bad literal '" + std::string(line.substr(i, j - i)) + "'");
      }
      i = j;
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "empty clause");
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > n || -lit > n) throw ParseError(line_no, "variable out of range");
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(line_no, "missing clause terminator 0");
  if (static_cast<std::int64_t>(clauses.size()) != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " clauses, found " +
                            std::to_string(clauses.size()));
  }
  return CnfFormula(static_cast<std::int32_t>(n), std::move(clauses));
}

std::string serialize_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto& c : f.clauses()) {
    for (Literal l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses()) {
    if (std::none_of(c.begin(), c.end(), [&](Literal l) { return a.satisfies(l); })) return false;
  }
  return true;
}

CnfFormula restrict(const CnfFormula& f, const Restriction& r) {
  // 0 = free, 1 = true, -1 = false
  std::vector<signed char> value(static_cast<std::size_t>(f.num_vars()) + 1, 0);
  for (const auto& fix : r.fixes) {
    if (fix.var < 1 || fix.var > f.num_vars()) {
      throw PreconditionError("restriction fixes variable " + std::to_string(fix.var) +
                              " outside the formula");
    }
    value[static_cast<std::size_t>(fix.var)] = fix.value ? 1 : -1;
  }
  std::vector<Clause> out;
  out.reserve(f.num_clauses());
  for (const auto& c : f.clauses()) {
    bool satisfied = false;
    for (std::size_t i = 0; i < c.size() && !satisfied; ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i] == -c[j]) {
          satisfied = true;
          break;
        }
      }
    }
    Clause kept;
    for (Literal l : c) {
      if (satisfied) break;
      const signed char v = value[static_cast<std::size_t>(var_of(l))];
      if (v == 0) {
        kept.push_back(l);
      } else if ((v > 0) == (l > 0)) {
        satisfied = true;
      }
    }
    if (!satisfied) out.push_back(std::move(kept));
  }
  return make_restricted(f.num_vars(), std::move(out));
}

}  // namespace resil
