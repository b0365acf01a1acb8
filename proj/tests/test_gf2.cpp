#include <doctest.h>

#include <random>

#include "sphere_chroma/errors.hpp"
#include "sphere_chroma/gf2.hpp"

using namespace sphere_chroma;

namespace {

std::vector<std::string> names(unsigned dim) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < dim; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// All elements of the span of `rows`, by enumeration.
std::vector<std::uint64_t> span(const std::vector<Gf2Vector>& rows) {
  std::vector<std::uint64_t> out{0};
  for (const auto& r : rows) {
    const auto n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r.bits());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("vector arithmetic") {
  Gf2Vector a(4, 0b0101);
  const Gf2Vector b(4, 0b0011);
  CHECK((a + b).bits() == 0b0110);
  CHECK((a + a).is_zero());
  CHECK(a.weight() == 2);
  CHECK(a.leading() == 2);
  a.flip(3);
  CHECK(a.bits() == 0b1101);
  CHECK(Gf2Vector::unit(4, 1).bits() == 0b0010);
  CHECK_THROWS_AS(Gf2Vector(3, 0b1000), DomainError);
  CHECK_THROWS_AS(Gf2Vector(65), DomainError);
  CHECK_THROWS_AS(Gf2Vector::unit(3, 3), DomainError);
  CHECK_THROWS_AS(a += Gf2Vector(5), DomainError);
  CHECK(Gf2Vector(64, ~std::uint64_t{0}).weight() == 64);
}

TEST_CASE("gf2_rank examples") {
  CHECK(gf2_rank({}) == 0);
  CHECK(gf2_rank({Gf2Vector(3, 0)}) == 0);
  CHECK(gf2_rank({Gf2Vector(3, 0b011), Gf2Vector(3, 0b110), Gf2Vector(3, 0b101)}) == 2);
  CHECK(gf2_rank({Gf2Vector(3, 0b001), Gf2Vector(3, 0b010), Gf2Vector(3, 0b100)}) == 3);
}

TEST_CASE("quotient canonical forms") {
  // x0 + x1 = 0, x2 + x3 = 0 in a 4-dimensional space
  const Gf2Quotient q(names(4), {Gf2Vector(4, 0b0011), Gf2Vector(4, 0b1100), Gf2Vector(4, 0b1111)});
  CHECK(q.relation_rank() == 2);
  CHECK(q.rank() == 2);
  CHECK(q.basis_generators() == std::vector<unsigned>{0, 2});
  CHECK(q.canonical(Gf2Vector(4, 0b0010)).bits() == 0b0001);
  CHECK(q.equivalent(Gf2Vector(4, 0b1010), Gf2Vector(4, 0b0101)));
  CHECK_FALSE(q.equivalent(Gf2Vector(4, 0b0001), Gf2Vector(4, 0b0100)));
  CHECK(q.coordinates(Gf2Vector(4, 0b1000)) == std::vector<bool>{false, true});
  CHECK(q.format(Gf2Vector(4, 0b0101)) == "x0+x2");
  CHECK(q.format(Gf2Vector(4, 0)) == "0");
  CHECK_THROWS_AS(q.canonical(Gf2Vector(3)), DomainError);
  CHECK_THROWS_AS(Gf2Quotient(names(4), {Gf2Vector(3, 1)}), DomainError);
}

TEST_CASE("property: canonical form is idempotent, linear and span-exact") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned dim = 1 + static_cast<unsigned>(rng() % 10);
    const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
    std::vector<Gf2Vector> rels;
    const auto count = rng() % 6;
    for (std::uint64_t i = 0; i < count; ++i) rels.emplace_back(dim, rng() & mask);
    const Gf2Quotient q(names(dim), rels);
    const auto sp = span(rels);

    CHECK(q.rank() == dim - gf2_rank(rels));
    CHECK(sp.size() == (std::size_t{1} << q.relation_rank()));
    for (int k = 0; k < 10; ++k) {
      const Gf2Vector a(dim, rng() & mask), b(dim, rng() & mask);
      const auto ca = q.canonical(a);
      CHECK(q.canonical(ca) == ca);
      CHECK(q.canonical(a + b) == ca + q.canonical(b));
      const bool in_span = std::binary_search(sp.begin(), sp.end(), (a + b).bits());
      CHECK(q.equivalent(a, b) == in_span);
      // Canonical representatives avoid pivot coordinates.
      for (const auto& row : q.reduced_relations()) CHECK_FALSE(ca[row.leading()]);
    }
  }
}
