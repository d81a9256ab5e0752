#include "resil/gadgets.hpp"

#include <algorithm>
#include <set>

#include "resil/errors.hpp"
#include "resil/reductions.hpp"

namespace resil {

namespace {

GadgetTemplate make_literal() {
  GadgetTemplate t;
  t.name = "literal";
  t.literals = 1;
  t.internal = 0;
  t.edges = {{0, 1}, {0, 2}};
  return t;
}

// Two 2-input OR gadgets, each a triangle with one corner on the base.
// The first reads the detectors of x and not-x (at least one true); the
// second reads detectors against inverted first ports (at least one false).
GadgetTemplate make_negation() {
  GadgetTemplate t;
  t.name = "negation";
  t.literals = 2;
  t.internal = 12;
  auto in = [&](int j) { return t.internal_vertex(j); };
  auto add_or = [&](int a, int b, int first) {
    const int x = in(first);
    const int y = in(first + 1);
    const int out = in(first + 2);
    t.edges.insert(t.edges.end(), {{x, a}, {y, b}, {x, y}, {x, out}, {y, out}, {out, 0}});
  };
  for (int lit = 0; lit < 2; ++lit) {
    const int inverted = in(lit);      // opposite color of the first port
    const int same = in(2 + lit);      // may leave gray iff the literal is true
    const int differ = in(4 + lit);    // may leave gray iff the literal is false
    t.edges.insert(t.edges.end(), {{inverted, 0}, {inverted, t.port(lit, 0)}});
    t.edges.insert(t.edges.end(), {{same, t.port(lit, 0)}, {same, t.port(lit, 1)}});
    t.edges.insert(t.edges.end(), {{differ, inverted}, {differ, t.port(lit, 1)}});
  }
  add_or(in(2), in(3), 6);
  add_or(in(4), in(5), 9);
  return t;
}

// Per literal a detector joined to both ports (gray whenever the literal is
// false); detectors pair up into three OR triangles whose outputs hang off
// a central triangle. All outputs gray leaves the central triangle two
// colors.
GadgetTemplate make_clause() {
  GadgetTemplate t;
  t.name = "clause";
  t.literals = 6;
  t.internal = 18;
  auto detector = [&](int i) { return t.internal_vertex(i); };
  for (int i = 0; i < 6; ++i) {
    t.edges.emplace_back(detector(i), t.port(i, 0));
    t.edges.emplace_back(detector(i), t.port(i, 1));
  }
  for (int j = 0; j < 3; ++j) {
    const int x = t.internal_vertex(6 + 3 * j);
    const int y = x + 1;
    const int out = x + 2;
    t.edges.emplace_back(x, detector(2 * j));
    t.edges.emplace_back(y, detector(2 * j + 1));
    t.edges.emplace_back(x, y);
    t.edges.emplace_back(x, out);
    t.edges.emplace_back(y, out);
  }
  const int c0 = t.internal_vertex(15);
  for (int j = 0; j < 3; ++j) t.edges.emplace_back(c0 + j, t.internal_vertex(6 + 3 * j + 2));
  t.edges.emplace_back(c0, c0 + 1);
  t.edges.emplace_back(c0, c0 + 2);
  t.edges.emplace_back(c0 + 1, c0 + 2);
  return t;
}

}  // namespace

const GadgetTemplate& literal_gadget() {
  static const GadgetTemplate t = make_literal();
  return t;
}

const GadgetTemplate& negation_gadget() {
  static const GadgetTemplate t = make_negation();
  return t;
}

const GadgetTemplate& clause_gadget() {
  static const GadgetTemplate t = make_clause();
  return t;
}

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Base: return "base";
    case GadgetKind::Literal: return "literal";
    case GadgetKind::Negation: return "negation";
    case GadgetKind::Clause: return "clause";
  }
  return "?";
}

GadgetGraph six_cnf_to_graph(const CnfFormula& f, const Budget& budget) {
  if (f.width() > 6) {
    throw PreconditionError("gadget reduction needs clause width <= 6, got " + std::to_string(f.width()));
  }
  std::set<std::int32_t> occurring;
  for (const Clause& c : f.clauses())
    for (Literal l : c) occurring.insert(var_of(l));

  const auto& neg = negation_gadget();
  const auto& cls = clause_gadget();
  const std::uint64_t total = 1 + occurring.size() * (4 + static_cast<std::uint64_t>(neg.internal)) +
                              f.num_clauses() * static_cast<std::uint64_t>(cls.internal);
  if (total > budget.max_vertices) {
    throw BudgetError("gadget graph would have " + std::to_string(total) + " vertices, budget is " +
                      std::to_string(budget.max_vertices));
  }

  GadgetGraph gg;
  gg.source_vars = f.num_vars();
  gg.base = 0;
  gg.provenance.push_back({GadgetKind::Base, 0, 0, 1, {}});
  std::vector<Edge> edges;
  Vertex next = 1;

  for (std::int32_t v : occurring) {
    for (Literal l : {Literal{v}, Literal{-v}}) {
      const Vertex p = next++;
      const Vertex q = next++;
      gg.literal_ports[l] = {p, q};
      edges.emplace_back(gg.base, p);
      edges.emplace_back(gg.base, q);
      gg.provenance.push_back({GadgetKind::Literal, l, p, 2, {gg.base}});
    }
  }

  auto instantiate = [&](const GadgetTemplate& t, const std::vector<Literal>& lits, GadgetKind kind,
                         std::int64_t index) {
    std::vector<Vertex> local(static_cast<std::size_t>(t.num_local_vertices()));
    local[0] = gg.base;
    GadgetRecord rec{kind, index, next, static_cast<Vertex>(t.internal), {gg.base}};
    for (int i = 0; i < t.literals; ++i) {
      auto [p, q] = gg.literal_ports.at(lits[static_cast<std::size_t>(i)]);
      local[static_cast<std::size_t>(t.port(i, 0))] = p;
      local[static_cast<std::size_t>(t.port(i, 1))] = q;
      rec.ports.push_back(p);
      rec.ports.push_back(q);
    }
    for (int j = 0; j < t.internal; ++j) local[static_cast<std::size_t>(t.internal_vertex(j))] = next++;
    for (auto [a, b] : t.edges) edges.emplace_back(local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)]);
    std::sort(rec.ports.begin(), rec.ports.end());
    rec.ports.erase(std::unique(rec.ports.begin(), rec.ports.end()), rec.ports.end());
    gg.provenance.push_back(std::move(rec));
  };

  for (std::int32_t v : occurring) instantiate(neg, {v, -v}, GadgetKind::Negation, v);
  for (std::size_t j = 0; j < f.num_clauses(); ++j) {
    std::vector<Literal> lits = f.clauses()[j];
    while (lits.size() < 6) lits.push_back(lits.back());
    instantiate(cls, lits, GadgetKind::Clause, static_cast<std::int64_t>(j));
  }
  gg.graph = Graph(next, std::move(edges));
  return gg;
}

GadgetGraph three_sat_to_coloring(const CnfFormula& f3, const Budget& budget) {
  if (f3.width() > 3) throw PreconditionError("expected a 3-CNF input");
  return six_cnf_to_graph(blow_up(f3, 2, budget), budget);
}

Coloring normalize_to_gray_base(const GadgetGraph& gg, const Coloring& c) {
  Coloring out = c;
  const Color at_base = c.colors.at(gg.base);
  for (Color& col : out.colors) {
    if (col == at_base) {
      col = kGray;
    } else if (col == kGray) {
      col = at_base;
    }
  }
  return out;
}

Assignment decode_coloring(const GadgetGraph& gg, const Coloring& c) {
  if (c.k != 3 || !validate_coloring(gg.graph, c)) {
    throw PreconditionError("decoding needs a proper 3-coloring of the gadget graph");
  }
  const Coloring norm = normalize_to_gray_base(gg, c);
  Assignment a;
  a.values.assign(static_cast<std::size_t>(gg.source_vars) + 1, false);
  for (std::int32_t v = 1; v <= gg.source_vars; ++v) {
    auto it = gg.literal_ports.find(v);
    if (it == gg.literal_ports.end()) continue;
    a.values[static_cast<std::size_t>(v)] = norm.colors[it->second.first] == norm.colors[it->second.second];
  }
  return a;
}

}  // namespace resil
