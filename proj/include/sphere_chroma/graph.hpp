#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sphere_chroma {

using VertexId = std::uint32_t;
using Color = std::uint32_t;

inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

/// Unordered vertex pair stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph with labeled vertices.
///
/// Edges are kept normalized (u < v) and sorted lexicographically, so two
/// graphs compare equal exactly when their label lists and edge sets agree.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and edges given in any order or orientation.
  /// Throws DomainError on self-loops, duplicates or out-of-range indices.
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  /// Graph on `n` vertices labeled "v0".."v{n-1}".
  static Graph with_default_labels(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const Edge> edges() const { return edges_; }

  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<VertexId>> adjacency_lists() const;

  /// Index of the vertex with the given label, if any.
  std::optional<VertexId> find_label(const std::string& label) const;

  /// Induced subgraph on `keep`, with vertices renumbered in the order given.
  Graph induced_subgraph(std::span<const VertexId> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

/// Dense adjacency in bit rows; O(1) edge queries for the solvers.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(VertexId a, VertexId b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  std::span<const std::uint64_t> row(VertexId a) const {
    return {bits_.data() + a * words_, words_};
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Vertex coloring; entries may be kUncolored for partial assignments.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> assignment);

  std::size_t vertex_count() const { return assignment_.size(); }
  Color operator[](VertexId v) const { return assignment_.at(v); }
  const std::vector<Color>& assignment() const { return assignment_; }

  /// Number of distinct colors in the image.
  std::size_t size() const { return size_; }

  std::optional<VertexId> first_uncolored() const;

  /// Relabels colors to 0..size-1 in order of first appearance by vertex.
  Coloring canonicalized() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> assignment_;
  std::size_t size_ = 0;
};

struct ColoringVerdict {
  bool valid = true;
  std::optional<Edge> violation;  // lexicographically least violated edge
};

/// Checks properness. Throws DomainError when the coloring is partial or
/// sized for a different graph.
ColoringVerdict validate_coloring(const Graph& g, const Coloring& c);

/// Result of checking a vertex map between two graphs.
struct IsomorphismCheck {
  bool ok = true;
  std::string defect;  // human-readable witness when !ok
};

/// Checks that `map` (vertex of g -> vertex of h) is a bijection carrying
/// E(g) exactly onto E(h).
IsomorphismCheck check_isomorphism(const Graph& g, const Graph& h,
                                   std::span<const VertexId> map);

}  // namespace sphere_chroma
