#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resil/budget.hpp"
#include "resil/cnf.hpp"
#include "resil/coloring.hpp"
#include "resil/graph.hpp"
#include "resil/sat.hpp"

namespace resil {

/// Local layout of a gadget: vertex 0 is the base, literal i owns ports
/// 1+2i and 2+2i, internal vertices follow. `edges` lists only the gadget's
/// own edges; port-to-base edges belong to the literal gadgets.
struct GadgetTemplate {
  std::string name;
  int literals = 0;
  int internal = 0;
  std::vector<std::pair<int, int>> edges;

  int num_local_vertices() const { return 1 + 2 * literals + internal; }
  int port(int literal, int side) const { return 1 + 2 * literal + side; }
  int internal_vertex(int j) const { return 1 + 2 * literals + j; }
};

/// Two vertices, both adjacent to the base.
const GadgetTemplate& literal_gadget();
/// Ports of x (literal 0) and not-x (literal 1); admits exactly the
/// patterns where one of them is colored true.
const GadgetTemplate& negation_gadget();
/// Six literal ports; admits every pattern except all-false.
const GadgetTemplate& clause_gadget();

enum class GadgetKind { Base, Literal, Negation, Clause };
const char* to_string(GadgetKind kind);

struct GadgetRecord {
  GadgetKind kind = GadgetKind::Base;
  std::int64_t index = 0;  ///< literal, variable or 0-based clause index; 0 for the base
  Vertex first = 0;        ///< first vertex of the gadget's own range
  Vertex count = 0;
  std::vector<Vertex> ports;  ///< shared port vertices the gadget attaches to
};

/// Graph produced by the 6-CNF reduction plus what a decoder needs.
struct GadgetGraph {
  Graph graph;
  Vertex base = 0;
  std::int32_t source_vars = 0;
  std::map<Literal, std::pair<Vertex, Vertex>> literal_ports;
  std::vector<GadgetRecord> provenance;
};

/// Builds the 3-coloring instance for a CNF of width <= 6.
///
/// Layout: base vertex 0; literal gadgets for +v then -v of every variable
/// occurring in `f`, in variable order; one negation gadget per such
/// variable; one clause gadget per clause. Clauses shorter than six
/// literals repeat their last literal. The graph is 3-colorable iff `f` is
/// satisfiable. Throws PreconditionError if width > 6 and BudgetError past
/// the vertex budget.
GadgetGraph six_cnf_to_graph(const CnfFormula& f, const Budget& budget = Budget::from_env());

/// six_cnf_to_graph(blow_up(f3, 2)).
GadgetGraph three_sat_to_coloring(const CnfFormula& f3, const Budget& budget = Budget::from_env());

/// Colors permuted so that the base vertex is gray.
Coloring normalize_to_gray_base(const GadgetGraph& gg, const Coloring& c);

/// Variable v is true iff the two ports of +v share a color. Variables that
/// do not occur in the formula decode to false. Throws PreconditionError if
/// `c` is not a proper 3-coloring of gg.graph.
Assignment decode_coloring(const GadgetGraph& gg, const Coloring& c);

/// JSON sidecar describing the gadget layout, and its inverse.
std::string provenance_to_json(const GadgetGraph& gg);
GadgetGraph provenance_from_json(const Graph& g, std::string_view json);

/// Outcome of one machine-checked gadget contract.
struct ContractCheck {
  std::string gadget;
  int contract = 0;
  bool ok = false;
  std::string detail;
};

struct GadgetReport {
  std::vector<ContractCheck> checks;
  bool ok() const;
};

/// Exhaustively certifies the gadget library with the base colored gray:
///  1. literal gadget ports only take white/black;
///  2. negation gadget extends iff exactly one of x, not-x is colored true;
///  3. clause gadget extends iff some literal is colored true, for every
///     port coloring;
///  4. every added edge inside a gadget (ports and base included) keeps all
///     admissible truth patterns consistent with some single-literal fixing
///     colorable;
///  5. every internal vertex but at most one per gadget can, after some
///     single-literal fixing, take two colors under every admissible
///     pattern.
GadgetReport verify_gadget_contracts(ScanOptions opts = {});

}  // namespace resil
