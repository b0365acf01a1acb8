#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphere_chroma/chromatic.hpp"
#include "sphere_chroma/graph.hpp"

namespace sphere_chroma {

/// Reduced slope p/q; 1/0 stands for infinity.
class FareyVertex {
 public:
  /// Throws DomainError unless gcd(|p|, q) = 1 with q > 0, or (p, q) = (1, 0).
  FareyVertex(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::string label() const;

  /// |ps - qr| = 1.
  bool farey_adjacent(const FareyVertex& o) const;

  friend bool operator==(const FareyVertex&, const FareyVertex&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Finite piece of the Farey graph, optionally with one fin vertex per
/// Farey edge.
struct FareyBall {
  unsigned depth = 0;
  Graph graph;
  std::vector<bool> is_fin;
  std::vector<std::optional<FareyVertex>> fractions;  // empty for fins

  bool has_fins() const;
};

/// Seed edge 0/1 -- 1/0, then `depth` rounds of mediant insertion into every
/// frontier edge. Requires depth <= 16.
FareyBall farey_ball(unsigned depth);

/// Adds a vertex "fin(u,v)" adjacent to exactly u and v for every Farey edge.
FareyBall add_fins(const FareyBall& ball);

/// p/q gets its parity class (p mod 2, q mod 2); a fin gets the least class
/// its two neighbors do not use.
Coloring parity_coloring(const FareyBall& ball);

/// Empty when the reduced/unimodular/fin invariants hold, else a defect.
std::optional<std::string> check_farey_structure(const FareyBall& ball);

/// Exact chromatic number of a ball. Requires depth <= 10.
ChiOutcome chi_farey_ball(unsigned depth, bool fins, const SearchOptions& options = {});

}  // namespace sphere_chroma
