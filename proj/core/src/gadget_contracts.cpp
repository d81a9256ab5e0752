#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "resil/gadgets.hpp"
#include "resil/scan.hpp"

namespace resil {

bool GadgetReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

// Standalone gadget: template edges plus the port-to-base edges, base gray.
// Port colorings are indexed by a "representation" number whose bits 2i and
// 2i+1 give the colors (white 0, black 1) of literal i's two ports.
class LocalGadget {
 public:
  explicit LocalGadget(const GadgetTemplate& t) : t_(t), n_(t.num_local_vertices()), adj_(n_, 0) {
    for (auto [a, b] : t.edges) connect(a, b);
    for (int i = 0; i < t.literals; ++i) {
      connect(0, t.port(i, 0));
      connect(0, t.port(i, 1));
    }
  }

  int size() const { return n_; }
  int literals() const { return t_.literals; }
  int num_reps() const { return 1 << (2 * t_.literals); }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1u; }

  unsigned truth_of(int rep) const {
    unsigned truth = 0;
    for (int i = 0; i < t_.literals; ++i) {
      if (((rep >> (2 * i)) & 1) == ((rep >> (2 * i + 1)) & 1)) truth |= 1u << i;
    }
    return truth;
  }

  // Does the port coloring `rep` extend to a proper coloring of the gadget,
  // with the extra edge (ea, eb) if ea >= 0 and vertex `pin` forced to
  // `pin_color` if pin >= 0?
  bool extends(int rep, int ea = -1, int eb = -1, int pin = -1, int pin_color = 0) const {
    std::vector<std::uint64_t> adj = adj_;
    if (ea >= 0) {
      adj[ea] |= 1ull << eb;
      adj[eb] |= 1ull << ea;
    }
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    color[0] = kGray;
    for (int i = 0; i < t_.literals; ++i) {
      color[t_.port(i, 0)] = (rep >> (2 * i)) & 1;
      color[t_.port(i, 1)] = (rep >> (2 * i + 1)) & 1;
    }
    if (pin >= 0) {
      if (color[pin] >= 0 && color[pin] != pin_color) return false;
      color[pin] = pin_color;
    }
    for (int v = 0; v < n_; ++v) {
      if (color[v] < 0) continue;
      for (int w = v + 1; w < n_; ++w) {
        if (((adj[v] >> w) & 1) && color[w] == color[v]) return false;
      }
    }
    return search(adj, color);
  }

 private:
  void connect(int a, int b) {
    adj_[a] |= 1ull << b;
    adj_[b] |= 1ull << a;
  }

  static bool search(const std::vector<std::uint64_t>& adj, std::vector<int>& color) {
    int best = -1;
    unsigned best_dom = 0;
    int best_count = 4;
    for (std::size_t v = 0; v < color.size(); ++v) {
      if (color[v] >= 0) continue;
      unsigned dom = 7;
      for (std::uint64_t m = adj[v]; m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (color[static_cast<std::size_t>(w)] >= 0) dom &= ~(1u << color[static_cast<std::size_t>(w)]);
      }
      const int count = std::popcount(dom);
      if (count < best_count) {
        best = static_cast<int>(v);
        best_dom = dom;
        best_count = count;
        if (count == 0) return false;
      }
    }
    if (best < 0) return true;
    for (int c = 0; c < 3; ++c) {
      if (!((best_dom >> c) & 1)) continue;
      color[static_cast<std::size_t>(best)] = c;
      if (search(adj, color)) return true;
    }
    color[static_cast<std::size_t>(best)] = -1;
    return false;
  }

  const GadgetTemplate& t_;
  int n_;
  std::vector<std::uint64_t> adj_;
};

std::string pattern_string(unsigned truth, int literals) {
  std::string s;
  for (int i = 0; i < literals; ++i) s += ((truth >> i) & 1) ? 'T' : 'F';
  return s;
}

std::string rep_string(int rep, int literals) {
  std::string s;
  for (int i = 0; i < literals; ++i) {
    if (i) s += ' ';
    s += ((rep >> (2 * i)) & 1) ? 'B' : 'W';
    s += ((rep >> (2 * i + 1)) & 1) ? 'B' : 'W';
  }
  return s;
}

// Runs body(i) for i in [0, count) on `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    run();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

// A single-literal fixing: literal `index` set to `value`.
struct Fixing {
  int index;
  bool value;
};

std::vector<Fixing> fixings(int literals) {
  std::vector<Fixing> out;
  for (int i = 0; i < literals; ++i) {
    out.push_back({i, true});
    out.push_back({i, false});
  }
  return out;
}

// Admissible truth patterns consistent with `f`.
std::vector<unsigned> consistent(const std::vector<unsigned>& admissible, Fixing f) {
  std::vector<unsigned> out;
  for (unsigned t : admissible) {
    if ((((t >> f.index) & 1u) != 0) == f.value) out.push_back(t);
  }
  return out;
}

ContractCheck check_literal_ports(const GadgetTemplate& t) {
  LocalGadget g(t);
  ContractCheck c{t.name, 1, true, "ports take exactly {white, black}"};
  for (int p = 1; p <= 2; ++p) {
    // Clamp only the base: enumerate by pinning the port.
    for (int color = 0; color < 3; ++color) {
      bool possible = false;
      for (int rep = 0; rep < g.num_reps(); ++rep) possible = possible || g.extends(rep, -1, -1, p, color);
      const bool expected = color != kGray;
      if (possible != expected) {
        c.ok = false;
        c.detail = "port " + std::to_string(p) + (possible ? " can" : " cannot") + " take color " +
                   std::to_string(color);
        return c;
      }
    }
  }
  return c;
}

ContractCheck check_truth_table(const GadgetTemplate& t, int contract,
                                const std::function<bool(unsigned)>& expected, unsigned threads) {
  LocalGadget g(t);
  std::vector<char> got(static_cast<std::size_t>(g.num_reps()));
  parallel_for(got.size(), threads, [&](std::size_t rep) { got[rep] = g.extends(static_cast<int>(rep)); });
  for (int rep = 0; rep < g.num_reps(); ++rep) {
    const unsigned truth = g.truth_of(rep);
    if (static_cast<bool>(got[static_cast<std::size_t>(rep)]) != expected(truth)) {
      return {t.name, contract, false,
              "ports " + rep_string(rep, t.literals) + " (pattern " + pattern_string(truth, t.literals) +
                  (got[static_cast<std::size_t>(rep)] ? ") extends but should not" : ") does not extend")};
    }
  }
  return {t.name, contract, true, std::to_string(g.num_reps()) + " port colorings match the truth table"};
}

std::vector<unsigned> admissible_patterns(const GadgetTemplate& t) {
  LocalGadget g(t);
  std::vector<bool> seen(1u << t.literals, false);
  for (int rep = 0; rep < g.num_reps(); ++rep) {
    if (g.extends(rep)) seen[g.truth_of(rep)] = true;
  }
  std::vector<unsigned> out;
  for (unsigned p = 0; p < seen.size(); ++p)
    if (seen[p]) out.push_back(p);
  return out;
}

// Port colorings with the first port white suffice: swapping white and
// black maps colorings to colorings and keeps the base gray.
std::vector<int> canonical_reps(const LocalGadget& g) {
  std::vector<int> out;
  for (int rep = 0; rep < g.num_reps(); rep += 2) out.push_back(rep);
  return out;
}

ContractCheck check_added_edges(const GadgetTemplate& t, unsigned threads) {
  LocalGadget g(t);
  const auto admissible = admissible_patterns(t);
  const auto reps = canonical_reps(g);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (!g.adjacent(a, b)) pairs.emplace_back(a, b);

  std::vector<std::string> failure(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    std::vector<bool> ok(1u << t.literals, false);
    for (int rep : reps) {
      const unsigned truth = g.truth_of(rep);
      if (!ok[truth] && g.extends(rep, a, b)) ok[truth] = true;
    }
    for (Fixing f : fixings(t.literals)) {
      const auto pats = consistent(admissible, f);
      if (pats.empty()) continue;
      bool all = true;
      for (unsigned p : pats) all = all && ok[p];
      if (all) return;
    }
    failure[i] = "adding edge " + std::to_string(a) + "-" + std::to_string(b) +
                 " leaves no single-literal fixing whose patterns all extend";
  });
  for (const auto& f : failure)
    if (!f.empty()) return {t.name, 4, false, f};
  return {t.name, 4, true, "non-edges tolerated: " + std::to_string(pairs.size())};
}

ContractCheck check_flexibility(const GadgetTemplate& t, unsigned threads) {
  LocalGadget g(t);
  const auto admissible = admissible_patterns(t);
  const auto reps = canonical_reps(g);
  std::vector<char> rigid(static_cast<std::size_t>(t.internal), 0);
  parallel_for(rigid.size(), threads, [&](std::size_t j) {
    const int v = t.internal_vertex(static_cast<int>(j));
    // colors[p]: colors v takes across colorings with truth pattern p.
    std::vector<unsigned> colors(1u << t.literals, 0);
    for (int rep : reps) {
      const unsigned truth = g.truth_of(rep);
      for (int c = 0; c < 3; ++c) {
        if ((colors[truth] >> c) & 1u) continue;
        if (g.extends(rep, -1, -1, v, c)) colors[truth] |= 1u << c;
        // The white/black swap of this coloring is also valid.
        if (((colors[truth] >> c) & 1u) && c != kGray) colors[truth] |= 1u << (1 - c);
      }
    }
    for (Fixing f : fixings(t.literals)) {
      const auto pats = consistent(admissible, f);
      if (pats.empty()) continue;
      bool all = true;
      for (unsigned p : pats) all = all && std::popcount(colors[p]) >= 2;
      if (all) return;
    }
    rigid[j] = 1;
  });
  std::vector<int> rigid_vertices;
  for (std::size_t j = 0; j < rigid.size(); ++j)
    if (rigid[j]) rigid_vertices.push_back(t.internal_vertex(static_cast<int>(j)));
  if (rigid_vertices.size() <= 1) {
    return {t.name, 5, true,
            rigid_vertices.empty() ? "every internal vertex flexible"
                                   : "one distinguished vertex " + std::to_string(rigid_vertices[0])};
  }
  std::string list;
  for (int v : rigid_vertices) list += (list.empty() ? "" : ",") + std::to_string(v);
  return {t.name, 5, false, "rigid internal vertices " + list};
}

}  // namespace

GadgetReport verify_gadget_contracts(ScanOptions opts) {
  const unsigned threads = resolve_threads(opts.threads);
  GadgetReport report;
  report.checks.push_back(check_literal_ports(literal_gadget()));
  report.checks.push_back(check_truth_table(
      negation_gadget(), 2, [](unsigned truth) { return truth == 1u || truth == 2u; }, threads));
  report.checks.push_back(check_truth_table(
      clause_gadget(), 3, [](unsigned truth) { return truth != 0u; }, threads));
  for (const GadgetTemplate* t : {&literal_gadget(), &negation_gadget(), &clause_gadget()}) {
    report.checks.push_back(check_added_edges(*t, threads));
    report.checks.push_back(check_flexibility(*t, threads));
  }
  return report;
}

}  // namespace resil
