#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphere_chroma/gf2.hpp"
#include "sphere_chroma/graph.hpp"
#include "sphere_chroma/kneser.hpp"

namespace sphere_chroma {

/// M_r cut along r disjoint non-separating spheres. The result is the
/// 2r-holed 3-sphere whose boundary labels 2i-1 and 2i are glued back
/// together to form the i-th cut sphere.
class CutSystemModel {
 public:
  static constexpr unsigned kMaxRank = 16;

  /// Requires 2 <= r <= 16.
  explicit CutSystemModel(unsigned r);

  unsigned r() const { return r_; }
  unsigned boundary_count() const { return 2 * r_; }

  /// Index i in 1..r of the cut sphere that boundary label j lies on.
  static unsigned cut_sphere_of(unsigned label) { return (label + 1) / 2; }

 private:
  unsigned r_;
};

/// Connected double cover of M_r, given by a nonzero homomorphism
/// pi_1(M_r) -> Z/2Z; phi[i-1] is the image of the i-th free generator.
struct DoubleCover {
  Gf2Vector phi;

  /// phi_1 .. phi_r as a bit string, e.g. "101".
  std::string bits() const;

  friend auto operator<=>(const DoubleCover&, const DoubleCover&) = default;
};

/// The 2^r - 1 connected double covers in increasing binary order of their
/// bit strings. Requires 1 <= r <= 12.
std::vector<DoubleCover> enumerate_double_covers(unsigned r);

/// Partition vertices of the cut model; edges are nested pairs. With
/// `with_cut_spheres`, the r cut spheres "C1".."Cr" are appended, adjacent to
/// every vertex. Requires r <= 12.
Graph glued_sphere_graph(const CutSystemModel& model, bool with_cut_spheres = false);

/// Z/2Z class of a sphere in M_r in the basis g_1..g_r of cut-sphere classes.
Gf2Vector homology_class(const CutSystemModel& model, const TwoBlockPartition& sphere);

/// H_2 of the cover with Z/2Z coefficients. Generators G{i},{s} are the lifts
/// of cut sphere i, indexed by the sheet carrying the copy of boundary label
/// 2i-1; each sheet's boundary sum is a relation.
Gf2Quotient cover_h2(const CutSystemModel& model, const DoubleCover& cover);

/// Class of the sheet-s lift of the sphere cutting off `block`, before
/// canonicalization.
Gf2Vector lift_chain(const CutSystemModel& model, const DoubleCover& cover, SubsetMask block,
                     unsigned sheet);

/// Canonical classes of the two lifts of a sphere, as a sorted set of one
/// or two elements.
struct LiftClassSet {
  std::vector<Gf2Vector> classes;

  friend auto operator<=>(const LiftClassSet&, const LiftClassSet&) = default;
};

LiftClassSet lift_classes(const CutSystemModel& model, const DoubleCover& cover,
                          const TwoBlockPartition& sphere);

/// Lift classes of cut sphere i: {G{i},0, G{i},1}.
LiftClassSet cut_sphere_lift_classes(const CutSystemModel& model, const DoubleCover& cover,
                                     unsigned i);

/// The color of a sphere: its lift classes in every connected double cover.
struct SphereColor {
  std::vector<LiftClassSet> entries;  // in enumerate_double_covers order

  friend auto operator<=>(const SphereColor&, const SphereColor&) = default;
};

/// Covers with their homology, shared by all color computations on a model.
class CoverTable {
 public:
  explicit CoverTable(const CutSystemModel& model);

  const CutSystemModel& model() const { return model_; }
  const std::vector<DoubleCover>& covers() const { return covers_; }
  const Gf2Quotient& homology(std::size_t i) const { return homology_[i]; }

  LiftClassSet lifts(std::size_t cover_index, const TwoBlockPartition& sphere) const;
  SphereColor color(const TwoBlockPartition& sphere) const;
  SphereColor cut_sphere_color(unsigned i) const;

 private:
  CutSystemModel model_;
  std::vector<DoubleCover> covers_;
  std::vector<Gf2Quotient> homology_;
};

SphereColor sphere_color(const CutSystemModel& model, const TwoBlockPartition& sphere);

struct HomologousPair {
  std::string a;
  std::string b;
  std::optional<DoubleCover> witness;  // least cover separating the colors
};

struct ProperReport {
  unsigned r = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::pair<std::string, std::string>> violations;
  std::vector<HomologousPair> homologous_pairs;
  bool ok = true;
};

struct ProperOptions {
  bool with_cut_spheres = false;
  /// Negative control: color spheres by their class in M_r only.
  bool homology_only = false;
};

/// Checks that adjacent spheres of the glued model get different colors.
/// Requires 3 <= r <= 12.
ProperReport verify_coloring_proper(const CutSystemModel& model, const ProperOptions& options = {});

enum class RankMode { kPaper, kComputed };

struct ColorCount {
  unsigned r = 0;
  RankMode mode = RankMode::kPaper;
  std::string t;          // number of connected double covers, decimal
  unsigned rank = 0;      // per-cover rank of H_2
  std::string per_cover;  // 2^rank + C(2^rank, 2), decimal
  std::string x;          // t * per_cover, decimal
  double log2_f = 0;      // t * log2(x)
  std::uint64_t bound_exponent = 0;  // 9 r 2^r
  bool t_within_2r = false;
  bool ok = false;
};

/// Size of the coloring set. kPaper uses rank 4r-2 for every cover;
/// kComputed takes the rank of cover_h2 over all covers. Requires 2 <= r <= 16.
ColorCount count_colors(unsigned r, RankMode mode);

/// Number of distinct colors over the partition vertices. Requires r <= 5.
std::size_t used_color_count(const CutSystemModel& model);

}  // namespace sphere_chroma
