#include "resil/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "resil/errors.hpp"

namespace resil {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw PreconditionError("endpoint " + std::to_string(e.v) + " out of range for " +
                              std::to_string(n) + " vertices");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  edge_keys_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    edge_keys_.insert(key(e.u, e.v));
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  const Edge e(a, b);
  return edge_keys_.contains(key(e.u, e.v));
}

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col") ||
          !parse_uint(tokens[2], n) || !parse_uint(tokens[3], m)) {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      if (n > 0xFFFFFFFFull) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      if (tokens.size() != 3 || !parse_uint(tokens[1], a) || !parse_uint(tokens[2], b)) {
        throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      }
      if (a < 1 || b < 1 || a > n || b > n) throw ParseError(line_no, "endpoint out of range");
      if (a == b) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
      continue;
    }
    throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
  }
  if (!have_header) throw ParseError(0, "missing 'p edge' header");
  if (edges.size() != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.reserve(edges.size() + extra.size());
  for (const Edge& e : extra) {
    if (e.u == e.v) throw PreconditionError("cannot add a self-loop");
    if (e.v >= g.num_vertices()) throw PreconditionError("added edge endpoint out of range");
    if (g.has_edge(e.u, e.v)) {
      throw PreconditionError("pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} is already an edge");
    }
    edges.push_back(e);
  }
  return Graph(g.num_vertices(), std::move(edges));
}

Graph apex_extension(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n);
  return Graph(n + 1, std::move(edges));
}

EdgeSet non_edges(const Graph& g) {
  EdgeSet out;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph(k, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

namespace classic {

Graph petersen() {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < subsets.size(); ++i) {
    for (Vertex j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return Graph(subsets.size(), std::move(edges));
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw PreconditionError("GP(n,k) needs n >= 3, 1 <= k < n/2");
  std::vector<Edge> edges;
  const auto nn = static_cast<Vertex>(n);
  for (Vertex i = 0; i < nn; ++i) {
    edges.emplace_back(i, (i + 1) % nn);                      // outer cycle
    edges.emplace_back(i, nn + i);                            // spoke
    edges.emplace_back(nn + i, nn + (i + static_cast<Vertex>(k)) % nn);  // inner star
  }
  return Graph(2 * n, std::move(edges));
}

Graph durer() { return generalized_petersen(6, 2); }

Graph mycielskian(const Graph& g) {
  // Vertices: originals 0..n-1, shadows n..2n-1, hub 2n.
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, n + e.v);
    edges.emplace_back(e.v, n + e.u);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
  return Graph(2 * n + 1, std::move(edges));
}

Graph grotzsch() { return mycielskian(cycle_graph(5)); }

Graph chvatal() {
  static constexpr std::pair<Vertex, Vertex> kEdges[] = {
      {0, 1}, {0, 4}, {0, 6},  {0, 9},  {1, 2},  {1, 5},  {1, 7},  {2, 3},
      {2, 6}, {2, 8}, {3, 4},  {3, 7},  {3, 9},  {4, 5},  {4, 8},  {5, 10},
      {5, 11}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10}, {9, 10}, {9, 11},
  };
  std::vector<Edge> edges;
  for (auto [a, b] : kEdges) edges.emplace_back(a, b);
  return Graph(12, std::move(edges));
}

Graph complete_minus_matching(std::size_t k) {
  if (k < 1) throw PreconditionError("complete_minus_matching needs k >= 1");
  std::vector<Edge> edges;
  const Edge removed_a(0, 1);
  const Edge removed_b(2, 3);
  for (Vertex u = 0; u < k + 2; ++u) {
    for (Vertex v = u + 1; v < k + 2; ++v) {
      Edge e(u, v);
      if (e != removed_a && e != removed_b) edges.push_back(e);
    }
  }
  return Graph(k + 2, std::move(edges));
}

Graph complete_plus_isolated(std::size_t k) {
  if (k < 1) throw PreconditionError("complete_plus_isolated needs k >= 1");
  Graph clique = complete_graph(k);
  return Graph(k + 1, clique.edges());
}

}  // namespace classic

Graph make_classic(std::string_view name, std::span<const long long> params) {
  auto need_k = [&](long long min_k) -> std::size_t {
    if (params.size() != 1) {
      throw PreconditionError(std::string(name) + " takes exactly one integer parameter");
    }
    if (params[0] < min_k) {
      throw PreconditionError(std::string(name) + " parameter must be >= " + std::to_string(min_k));
    }
    return static_cast<std::size_t>(params[0]);
  };
  auto no_params = [&] {
    if (!params.empty()) throw PreconditionError(std::string(name) + " takes no parameters");
  };
  if (name == "petersen") return no_params(), classic::petersen();
  if (name == "durer") return no_params(), classic::durer();
  if (name == "grotzsch") return no_params(), classic::grotzsch();
  if (name == "chvatal") return no_params(), classic::chvatal();
  if (name == "complete") return complete_graph(need_k(1));
  if (name == "complete_minus_matching") return classic::complete_minus_matching(need_k(1));
  if (name == "complete_plus_isolated") return classic::complete_plus_isolated(need_k(1));
  if (name == "cycle") return cycle_graph(need_k(3));
  if (name == "path") return path_graph(need_k(1));
  throw PreconditionError("unknown classic graph '" + std::string(name) + "'");
}

}  // namespace resil
