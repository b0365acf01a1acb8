#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sphere_chroma {

/// Vector over Z/2Z of fixed dimension <= 64; coordinate i is bit i.
class Gf2Vector {
 public:
  static constexpr unsigned kMaxDim = 64;

  Gf2Vector() = default;
  explicit Gf2Vector(unsigned dim, std::uint64_t bits = 0);

  static Gf2Vector unit(unsigned dim, unsigned i);

  unsigned dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool operator[](unsigned i) const { return (bits_ >> i) & 1U; }
  unsigned weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

  /// Index of the highest nonzero coordinate; requires !is_zero().
  unsigned leading() const { return 63U - static_cast<unsigned>(std::countl_zero(bits_)); }

  void flip(unsigned i) { bits_ ^= std::uint64_t{1} << i; }

  Gf2Vector& operator+=(const Gf2Vector& o);
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }

  friend auto operator<=>(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  unsigned dim_ = 0;
  std::uint64_t bits_ = 0;
};

/// Rank of a list of vectors by Gaussian elimination.
unsigned gf2_rank(const std::vector<Gf2Vector>& rows);

/// Quotient of the free space on named generators by a set of relations.
///
/// Relations are brought to reduced echelon form with each pivot at its
/// row's highest coordinate. The canonical form of a class is its fully
/// reduced representative, so it only involves non-pivot generators; those
/// form the basis of the quotient.
class Gf2Quotient {
 public:
  Gf2Quotient(std::vector<std::string> generator_names, const std::vector<Gf2Vector>& relations);

  unsigned generator_count() const { return static_cast<unsigned>(names_.size()); }
  unsigned relation_rank() const { return static_cast<unsigned>(echelon_.size()); }
  unsigned rank() const { return generator_count() - relation_rank(); }

  const std::vector<Gf2Vector>& reduced_relations() const { return echelon_; }
  const std::vector<unsigned>& basis_generators() const { return basis_; }

  Gf2Vector canonical(Gf2Vector v) const;
  bool equivalent(const Gf2Vector& a, const Gf2Vector& b) const {
    return canonical(a) == canonical(b);
  }

  /// Coordinates of the class of v in the basis_generators() order.
  std::vector<bool> coordinates(const Gf2Vector& v) const;

  /// "G1,0+G2,1", or "0" for the zero vector.
  std::string format(const Gf2Vector& v) const;

  const std::vector<std::string>& generator_names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<Gf2Vector> echelon_;  // sorted by descending pivot
  std::vector<unsigned> basis_;
};

}  // namespace sphere_chroma
