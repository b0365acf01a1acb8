#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sphere_chroma/graph.hpp"

namespace sphere_chroma {

/// Subset of {1..n} as a bitmask; element i is bit i-1.
using SubsetMask = std::uint32_t;

inline constexpr unsigned kMaxGroundSet = 32;

inline SubsetMask full_mask(unsigned n) {
  return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

/// Sorted members separated by spaces, e.g. "1 3 4".
std::string subset_label(SubsetMask members);

/// Inverse of subset_label for elements of {1..n}.
SubsetMask parse_subset(unsigned n, std::string_view text);

/// Unordered partition of {1..n} into two nonempty blocks, stored in its
/// canonical form: block_a is the block containing 1.
class TwoBlockPartition {
 public:
  /// Either block may be given. Throws DomainError if it is empty, all of
  /// {1..n}, or not contained in {1..n}.
  TwoBlockPartition(unsigned n, SubsetMask block);

  /// Parses "a b|c d" (either block first).
  static TwoBlockPartition parse(unsigned n, std::string_view label);

  unsigned n() const { return n_; }
  SubsetMask block_a() const { return block_a_; }
  SubsetMask block_b() const { return full_mask(n_) & ~block_a_; }
  unsigned min_block_size() const;

  /// "1 2|3 4 5".
  std::string label() const;

  friend auto operator<=>(const TwoBlockPartition&, const TwoBlockPartition&) = default;

 private:
  unsigned n_;
  SubsetMask block_a_;
};

/// True iff one block of p is contained in one block of q. Symmetric, and
/// true for p == q. Throws DomainError when the ground sets differ.
bool nested(const TwoBlockPartition& p, const TwoBlockPartition& q);

/// All 2^{n-1} - 1 partitions, ordered by block_a mask.
std::vector<TwoBlockPartition> two_block_partitions(unsigned n);

/// Kneser graph: k-subsets of {1..n} (colex order), edges between disjoint
/// subsets. Requires n >= 2k >= 2.
Graph kg(unsigned n, unsigned k);

/// Total Kneser graph on two-block partitions with the nested relation.
/// Requires 2 <= n <= 24.
Graph total_kneser(unsigned n);

/// Drops the partitions with a singleton block from a total_kneser graph.
Graph remove_singleton_partitions(const Graph& total, unsigned n);

}  // namespace sphere_chroma
