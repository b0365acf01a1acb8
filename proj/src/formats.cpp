#include "sphere_chroma/formats.hpp"

#include <json.hpp>
#include <sstream>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

using json = nlohmann::ordered_json;

namespace {

std::string dot_quoted(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["format"] = kGraphFormatTag;
  doc["vertex_labels"] = g.labels();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  auto field = [&](const char* name) -> const json& {
    auto it = doc.find(name);
    if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
  };
  const json& format = field("format");
  if (!format.is_string() || format.get<std::string>() != kGraphFormatTag) {
    throw ParseError("field \"format\": expected \"" + std::string(kGraphFormatTag) + "\"");
  }
  const json& labels_doc = field("vertex_labels");
  if (!labels_doc.is_array()) throw ParseError("field \"vertex_labels\": expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_doc.size(); ++i) {
    if (!labels_doc[i].is_string()) {
      throw ParseError("vertex_labels[" + std::to_string(i) + "]: expected a string");
    }
    labels.push_back(labels_doc[i].get<std::string>());
  }
  const json& edges_doc = field("edges");
  if (!edges_doc.is_array()) throw ParseError("field \"edges\": expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_doc.size(); ++i) {
    const auto where = "edges[" + std::to_string(i) + "]";
    const json& e = edges_doc[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw ParseError(where + ": expected a pair of non-negative integers");
    }
    const auto a = e[0].get<std::uint64_t>();
    const auto b = e[1].get<std::uint64_t>();
    if (a == b) throw ParseError(where + ": self-loop at vertex " + std::to_string(a));
    if (a > b) throw ParseError(where + ": expected i < j");
    if (b >= labels.size()) throw ParseError(where + ": vertex index out of range");
    Edge edge{static_cast<VertexId>(a), static_cast<VertexId>(b)};
    if (!edges.empty() && !(edges.back() < edge)) {
      throw ParseError(where + (edges.back() == edge ? ": duplicate edge" : ": edges not sorted"));
    }
    edges.push_back(edge);
  }
  return Graph(std::move(labels), std::move(edges));
}

std::string export_dimacs_kcolor(const Graph& g, unsigned k) {
  if (k == 0) throw DomainError("k must be positive");
  const std::size_t n = g.vertex_count();
  std::ostringstream out;
  out << "p cnf " << n * k << ' ' << n + g.edge_count() * k << '\n';
  auto var = [k](std::size_t v, unsigned c) { return v * k + c + 1; };
  for (std::size_t v = 0; v < n; ++v) {
    for (unsigned c = 0; c < k; ++c) out << var(v, c) << ' ';
    out << "0\n";
  }
  for (const auto& e : g.edges()) {
    for (unsigned c = 0; c < k; ++c) {
      out << '-' << var(e.u, c) << " -" << var(e.v, c) << " 0\n";
    }
  }
  return out.str();
}

std::string export_dot(const Graph& g, const std::optional<Coloring>& coloring) {
  if (coloring && coloring->vertex_count() != g.vertex_count()) {
    throw DomainError("coloring covers " + std::to_string(coloring->vertex_count()) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << dot_quoted(g.label(v));
    if (coloring && (*coloring)[v] != kUncolored) out << " [color=" << (*coloring)[v] << ']';
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << dot_quoted(g.label(e.u)) << " -- " << dot_quoted(g.label(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sphere_chroma
