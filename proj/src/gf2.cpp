#include "sphere_chroma/gf2.hpp"

#include <algorithm>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

Gf2Vector::Gf2Vector(unsigned dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim > kMaxDim) throw DomainError("GF(2) dimension above 64");
  if (dim < kMaxDim && (bits >> dim) != 0) {
    throw DomainError("GF(2) coordinates outside dimension " + std::to_string(dim));
  }
}

Gf2Vector Gf2Vector::unit(unsigned dim, unsigned i) {
  if (i >= dim) throw DomainError("unit vector index out of range");
  return Gf2Vector(dim, std::uint64_t{1} << i);
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& o) {
  if (dim_ != o.dim_) throw DomainError("adding GF(2) vectors of different dimension");
  bits_ ^= o.bits_;
  return *this;
}

unsigned gf2_rank(const std::vector<Gf2Vector>& rows) {
  std::vector<std::uint64_t> basis;  // indexed by insertion; pivots distinct
  for (const auto& row : rows) {
    std::uint64_t x = row.bits();
    for (std::uint64_t b : basis) x = std::min(x, x ^ b);
    if (x != 0) {
      basis.push_back(x);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return static_cast<unsigned>(basis.size());
}

Gf2Quotient::Gf2Quotient(std::vector<std::string> generator_names,
                         const std::vector<Gf2Vector>& relations)
    : names_(std::move(generator_names)) {
  const auto dim = static_cast<unsigned>(names_.size());
  for (auto rel : relations) {
    if (rel.dim() != dim) throw DomainError("relation dimension mismatch");
    for (const auto& row : echelon_) {
      if (rel[row.leading()]) rel += row;
    }
    if (rel.is_zero()) continue;
    const unsigned pivot = rel.leading();
    for (auto& row : echelon_) {
      if (row[pivot]) row += rel;
    }
    echelon_.push_back(rel);
    std::sort(echelon_.begin(), echelon_.end(),
              [](const Gf2Vector& a, const Gf2Vector& b) { return a.leading() > b.leading(); });
  }
  std::uint64_t pivots = 0;
  for (const auto& row : echelon_) pivots |= std::uint64_t{1} << row.leading();
  for (unsigned i = 0; i < dim; ++i) {
    if (!((pivots >> i) & 1U)) basis_.push_back(i);
  }
}

Gf2Vector Gf2Quotient::canonical(Gf2Vector v) const {
  if (v.dim() != generator_count()) throw DomainError("vector dimension mismatch");
  for (const auto& row : echelon_) {
    if (v[row.leading()]) v += row;
  }
  return v;
}

std::vector<bool> Gf2Quotient::coordinates(const Gf2Vector& v) const {
  const Gf2Vector c = canonical(v);
  std::vector<bool> out;
  out.reserve(basis_.size());
  for (unsigned i : basis_) out.push_back(c[i]);
  return out;
}

std::string Gf2Quotient::format(const Gf2Vector& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (unsigned i = 0; i < v.dim(); ++i) {
    if (!v[i]) continue;
    if (!out.empty()) out += '+';
    out += names_[i];
  }
  return out;
}

}  // namespace sphere_chroma
