#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sphere_chroma/graph.hpp"

namespace sphere_chroma {

struct SearchOptions {
  /// Maximum number of search nodes (color assignments) across all k.
  std::optional<std::uint64_t> node_budget;
  /// Worker threads; affects wall time only, never the result.
  unsigned threads = 1;
};

/// Why chi - 1 colors are impossible.
struct InfeasibilityEvidence {
  enum class Kind { kClique, kExhaustiveSearch };
  Kind kind = Kind::kClique;
  std::uint32_t refuted_colors = 0;  // chi - 1
  std::vector<VertexId> clique;      // kClique: a clique of size chi
  std::uint64_t nodes = 0;           // kExhaustiveSearch: nodes explored
};

struct ChiCertificate {
  std::uint32_t chi = 0;
  Coloring witness;  // canonical, size == chi
  std::uint32_t clique_bound = 0;
  std::optional<InfeasibilityEvidence> infeasibility;  // empty when chi == 0
};

/// Budget ran out before the bounds met.
struct Undecided {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  Coloring best;  // witness for `upper`
};

using ChiOutcome = std::variant<ChiCertificate, Undecided>;

/// DSATUR: most saturated vertex first, then highest degree, then least
/// index; each vertex takes the least color absent from its neighbors.
Coloring greedy_dsatur(const Graph& g);

/// Clique grown greedily from every seed; the largest one found.
std::vector<VertexId> greedy_clique(const Graph& g);

inline std::uint32_t clique_lower_bound(const Graph& g) {
  return static_cast<std::uint32_t>(greedy_clique(g).size());
}

/// Tabu local search for a proper k-coloring, seeded from a greedy start.
/// Deterministic for a given seed; an empty result proves nothing.
std::optional<Coloring> tabu_k_coloring(const Graph& g, std::uint32_t k,
                                        std::uint64_t max_iterations,
                                        std::uint64_t seed = 1);

enum class Decision { kColorable, kNotColorable, kBudgetExhausted };

struct KColoringResult {
  Decision decision = Decision::kBudgetExhausted;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

/// Decides whether g is k-colorable by DSATUR-ordered backtracking with
/// forward checking, the clique `pinned` fixed to colors 0..|pinned|-1.
KColoringResult find_k_coloring(const Graph& g, std::uint32_t k,
                                const SearchOptions& options = {},
                                std::span<const VertexId> pinned = {});

/// Exact chromatic number. The DSATUR bound is first tightened by tabu
/// search, then colorings are tried top-down; the last refuted k is chi - 1.
ChiOutcome chromatic_number_exact(const Graph& g,
                                  const SearchOptions& options = {});

}  // namespace sphere_chroma
