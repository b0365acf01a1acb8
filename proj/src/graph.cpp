#include "sphere_chroma/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const auto n = labels_.size();
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") out of range for " +
                        std::to_string(n) + " vertices");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw DomainError("duplicate edge (" + std::to_string(dup->u) + "," +
                      std::to_string(dup->v) + ")");
  }
}

Graph Graph::with_default_labels(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph(std::move(labels), std::move(edges));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<VertexId>> Graph::adjacency_lists() const {
  std::vector<std::vector<VertexId>> adj(vertex_count());
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::optional<VertexId> Graph::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

Graph Graph::induced_subgraph(std::span<const VertexId> keep) const {
  std::vector<VertexId> index(vertex_count(), kUncolored);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= vertex_count()) throw DomainError("vertex out of range");
    if (index[keep[i]] != kUncolored) throw DomainError("repeated vertex");
    index[keep[i]] = static_cast<VertexId>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& e : edges_) {
    if (index[e.u] != kUncolored && index[e.v] != kUncolored) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

AdjacencyMatrix::AdjacencyMatrix(const Graph& g)
    : n_(g.vertex_count()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
  for (const auto& e : g.edges()) {
    bits_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    bits_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
}

Coloring::Coloring(std::vector<Color> assignment)
    : assignment_(std::move(assignment)) {
  std::vector<Color> seen;
  for (Color c : assignment_) {
    if (c != kUncolored) seen.push_back(c);
  }
  std::sort(seen.begin(), seen.end());
  size_ = static_cast<std::size_t>(
      std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::optional<VertexId> Coloring::first_uncolored() const {
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == kUncolored) return static_cast<VertexId>(v);
  }
  return std::nullopt;
}

Coloring Coloring::canonicalized() const {
  std::unordered_map<Color, Color> relabel;
  std::vector<Color> out(assignment_.size(), kUncolored);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == kUncolored) continue;
    auto [it, _] = relabel.try_emplace(assignment_[v],
                                       static_cast<Color>(relabel.size()));
    out[v] = it->second;
  }
  return Coloring(std::move(out));
}

ColoringVerdict validate_coloring(const Graph& g, const Coloring& c) {
  if (c.vertex_count() != g.vertex_count()) {
    throw DomainError("coloring covers " + std::to_string(c.vertex_count()) +
                      " vertices, graph has " +
                      std::to_string(g.vertex_count()));
  }
  if (auto v = c.first_uncolored()) {
    throw DomainError("vertex " + std::to_string(*v) + " (" + g.label(*v) +
                      ") is uncolored");
  }
  for (const auto& e : g.edges()) {
    if (c[e.u] == c[e.v]) return {false, e};
  }
  return {};
}

IsomorphismCheck check_isomorphism(const Graph& g, const Graph& h,
                                   std::span<const VertexId> map) {
  auto fail = [](std::string why) { return IsomorphismCheck{false, std::move(why)}; };
  if (g.vertex_count() != h.vertex_count() || map.size() != g.vertex_count()) {
    return fail("vertex counts differ");
  }
  std::vector<bool> hit(h.vertex_count(), false);
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (map[v] >= h.vertex_count() || hit[map[v]]) {
      return fail("map is not a bijection at " + g.label(static_cast<VertexId>(v)));
    }
    hit[map[v]] = true;
  }
  if (g.edge_count() != h.edge_count()) {
    return fail("edge counts differ: " + std::to_string(g.edge_count()) +
                " vs " + std::to_string(h.edge_count()));
  }
  AdjacencyMatrix adj(h);
  for (const auto& e : g.edges()) {
    if (!adj.adjacent(map[e.u], map[e.v])) {
      return fail("edge " + g.label(e.u) + " -- " + g.label(e.v) +
                  " maps to non-edge " + h.label(map[e.u]) + " -- " +
                  h.label(map[e.v]));
    }
  }
  // Injective on edges with equal counts, so E(h) is covered as well.
  return {};
}

}  // namespace sphere_chroma
