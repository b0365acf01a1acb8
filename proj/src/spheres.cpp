#include "sphere_chroma/spheres.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <map>
#include <set>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

namespace {

using LabelPair = std::pair<std::string, std::string>;

std::set<LabelPair> labeled_edges(const Graph& g) {
  std::set<LabelPair> out;
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u), b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out.emplace(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace

std::vector<TwoBlockPartition> sphere_vertices(unsigned n) {
  std::vector<TwoBlockPartition> out;
  if (n < 4) return out;
  const SubsetMask all = full_mask(n);
  // Boundary component 1 sits on the canonical side; the other side needs at
  // least two components, as does this one.
  for (SubsetMask side = 0; side <= (all >> 1); ++side) {
    const SubsetMask block = (side << 1) | 1U;
    const auto size = static_cast<unsigned>(std::popcount(block));
    if (size >= 2 && n - size >= 2) out.emplace_back(n, block);
  }
  return out;
}

bool spheres_disjoint(const TwoBlockPartition& a, const TwoBlockPartition& b) {
  const SubsetMask pieces[] = {
      a.block_a() & b.block_a(), a.block_a() & b.block_b(),
      a.block_b() & b.block_a(), a.block_b() & b.block_b()};
  return std::any_of(std::begin(pieces), std::end(pieces),
                     [](SubsetMask piece) { return piece == 0; });
}

Graph sphere_graph_holed(unsigned n) {
  if (n < 2 || n > 24) {
    throw DomainError("sphere_graph_holed requires 2 <= n <= 24 (got " + std::to_string(n) + ")");
  }
  const auto verts = sphere_vertices(n);
  std::vector<std::string> labels;
  for (const auto& p : verts) labels.push_back(p.label());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < verts.size(); ++i) {
    for (VertexId j = i + 1; j < verts.size(); ++j) {
      if (spheres_disjoint(verts[i], verts[j])) edges.push_back({i, j});
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

LemmaReport compare_labeled_graphs(const Graph& spheres, const Graph& kneser) {
  LemmaReport report;
  const std::set<std::string> va(spheres.labels().begin(), spheres.labels().end());
  const std::set<std::string> vb(kneser.labels().begin(), kneser.labels().end());
  std::set_symmetric_difference(va.begin(), va.end(), vb.begin(), vb.end(),
                                std::back_inserter(report.vertex_differences));
  const auto ea = labeled_edges(spheres);
  const auto eb = labeled_edges(kneser);
  std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                      std::back_inserter(report.only_in_sphere_graph));
  std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(),
                      std::back_inserter(report.only_in_kneser));
  report.ok = report.vertex_differences.empty() && report.only_in_sphere_graph.empty() &&
              report.only_in_kneser.empty() && va.size() == spheres.vertex_count() &&
              vb.size() == kneser.vertex_count();
  return report;
}

LemmaReport verify_lemma_sphere_kneser(unsigned n) {
  if (n < 2 || n > 12) {
    throw DomainError("verify_lemma_sphere_kneser requires 2 <= n <= 12 (got " +
                      std::to_string(n) + ")");
  }
  auto report = compare_labeled_graphs(sphere_graph_holed(n),
                                       remove_singleton_partitions(total_kneser(n), n));
  report.n = n;
  return report;
}

IsomorphismCheck verify_petersen_isomorphism() {
  return verify_petersen_isomorphism(sphere_graph_holed(5));
}

IsomorphismCheck verify_petersen_isomorphism(const Graph& target) {
  const Graph petersen = kg(5, 2);
  std::vector<VertexId> map;
  for (const auto& label : petersen.labels()) {
    const TwoBlockPartition pair(5, parse_subset(5, label));
    auto idx = target.find_label(pair.label());
    if (!idx) return {false, "no vertex " + pair.label() + " in target"};
    map.push_back(*idx);
  }
  return check_isomorphism(petersen, target, map);
}

std::vector<NamedColor> parse_named_coloring(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_array()) throw ParseError("coloring document: expected an array");
  std::vector<NamedColor> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    const auto where = "[" + std::to_string(i) + "]";
    if (!entry.is_object() || !entry.contains("partition") || !entry.contains("color") ||
        !entry["partition"].is_string() || !entry["color"].is_string()) {
      throw ParseError(where + ": expected {\"partition\": string, \"color\": string}");
    }
    out.push_back({entry["partition"].get<std::string>(), entry["color"].get<std::string>()});
  }
  return out;
}

Coloring coloring_from_named(const Graph& g, unsigned n, const std::vector<NamedColor>& entries) {
  std::map<std::string, Color> ids;
  std::vector<Color> assignment(g.vertex_count(), kUncolored);
  for (const auto& entry : entries) {
    const auto label = TwoBlockPartition::parse(n, entry.partition).label();
    const auto v = g.find_label(label);
    if (!v) throw DomainError("partition " + entry.partition + " is not a vertex");
    if (assignment[*v] != kUncolored) throw DomainError("partition " + label + " colored twice");
    auto [it, _] = ids.try_emplace(entry.color, static_cast<Color>(ids.size()));
    assignment[*v] = it->second;
  }
  Coloring c(std::move(assignment));
  if (auto v = c.first_uncolored()) {
    throw DomainError("vertex " + g.label(*v) + " has no color");
  }
  return c;
}

}  // namespace sphere_chroma
