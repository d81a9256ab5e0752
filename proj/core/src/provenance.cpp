#include <json.hpp>

#include "resil/errors.hpp"
#include "resil/gadgets.hpp"

namespace resil {

namespace {

using nlohmann::json;

GadgetKind kind_from(const std::string& s) {
  if (s == "base") return GadgetKind::Base;
  if (s == "literal") return GadgetKind::Literal;
  if (s == "negation") return GadgetKind::Negation;
  if (s == "clause") return GadgetKind::Clause;
  throw ParseError(0, "unknown gadget kind '" + s + "'");
}

}  // namespace

// Vertex numbers in the sidecar are 1-based to match the DIMACS graph file.
std::string provenance_to_json(const GadgetGraph& gg) {
  json doc;
  doc["format"] = "resil-gadget-provenance";
  doc["version"] = 1;
  doc["indexing"] = 1;
  doc["num_vertices"] = gg.graph.num_vertices();
  doc["base"] = gg.base + 1;
  doc["source_vars"] = gg.source_vars;
  json lits = json::array();
  for (const auto& [lit, ports] : gg.literal_ports) {
    lits.push_back({{"literal", lit}, {"ports", {ports.first + 1, ports.second + 1}}});
  }
  doc["literal_ports"] = std::move(lits);
  json gadgets = json::array();
  for (const auto& rec : gg.provenance) {
    json ports = json::array();
    for (Vertex p : rec.ports) ports.push_back(p + 1);
    gadgets.push_back({{"kind", to_string(rec.kind)},
                       {"index", rec.index},
                       {"first", rec.first + 1},
                       {"count", rec.count},
                       {"ports", std::move(ports)}});
  }
  doc["gadgets"] = std::move(gadgets);
  return doc.dump(2) + "\n";
}

GadgetGraph provenance_from_json(const Graph& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("provenance sidecar is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "resil-gadget-provenance") throw ParseError(0, "not a provenance sidecar");
    if (doc.at("num_vertices").get<std::size_t>() != g.num_vertices()) {
      throw ParseError(0, "sidecar describes " + doc.at("num_vertices").dump() +
                              " vertices, graph has " + std::to_string(g.num_vertices()));
    }
    auto vertex = [&](const json& j) {
      const auto v = j.get<std::int64_t>();
      if (v < 1 || static_cast<std::uint64_t>(v) > g.num_vertices()) {
        throw ParseError(0, "sidecar vertex " + std::to_string(v) + " out of range");
      }
      return static_cast<Vertex>(v - 1);
    };
    GadgetGraph gg;
    gg.graph = g;
    gg.base = vertex(doc.at("base"));
    gg.source_vars = doc.at("source_vars").get<std::int32_t>();
    for (const auto& item : doc.at("literal_ports")) {
      const auto& ports = item.at("ports");
      gg.literal_ports[item.at("literal").get<Literal>()] = {vertex(ports.at(0)), vertex(ports.at(1))};
    }
    for (const auto& item : doc.at("gadgets")) {
      GadgetRecord rec;
      rec.kind = kind_from(item.at("kind").get<std::string>());
      rec.index = item.at("index").get<std::int64_t>();
      rec.first = vertex(item.at("first"));
      rec.count = item.at("count").get<Vertex>();
      for (const auto& p : item.at("ports")) rec.ports.push_back(vertex(p));
      gg.provenance.push_back(std::move(rec));
    }
    return gg;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed provenance sidecar: ") + e.what());
  }
}

}  // namespace resil
