#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sphere_chroma/graph.hpp"
#include "sphere_chroma/kneser.hpp"

namespace sphere_chroma {

/// Spheres of the n-holed 3-sphere, one per partition of the boundary
/// components {1..n} with both blocks of size >= 2.
std::vector<TwoBlockPartition> sphere_vertices(unsigned n);

/// Two spheres have disjoint representatives iff some piece A∩C, A∩D, B∩C,
/// B∩D of the two boundary partitions is empty.
bool spheres_disjoint(const TwoBlockPartition& a, const TwoBlockPartition& b);

/// Sphere graph of the n-holed 3-sphere in the partition model
/// (2 <= n <= 24; empty for n <= 3).
Graph sphere_graph_holed(unsigned n);

struct LemmaReport {
  unsigned n = 0;
  bool ok = true;
  std::vector<std::string> vertex_differences;
  std::vector<std::pair<std::string, std::string>> only_in_sphere_graph;
  std::vector<std::pair<std::string, std::string>> only_in_kneser;
};

/// Compares the sphere graph with KG(n) minus the singleton partitions as
/// labeled graphs. Requires 2 <= n <= 12.
LemmaReport verify_lemma_sphere_kneser(unsigned n);

/// Label-level comparison used by verify_lemma_sphere_kneser.
LemmaReport compare_labeled_graphs(const Graph& spheres, const Graph& kneser);

/// Checks the bijection A -> (A | complement) from KG(5,2) onto `target`,
/// which defaults to sphere_graph_holed(5).
IsomorphismCheck verify_petersen_isomorphism();
IsomorphismCheck verify_petersen_isomorphism(const Graph& target);

/// One entry of a named coloring data file.
struct NamedColor {
  std::string partition;
  std::string color;
};

/// Parses `[{"partition":"a b|c d e","color":"blue"}, ...]`.
std::vector<NamedColor> parse_named_coloring(std::string_view text);

/// Maps named colors onto the vertices of g (color ids by first appearance
/// in the list). Throws DomainError on unknown or missing partitions.
Coloring coloring_from_named(const Graph& g, unsigned n, const std::vector<NamedColor>& entries);

}  // namespace sphere_chroma
