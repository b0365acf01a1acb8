#include <doctest.h>

#include <bit>

#include "sphere_chroma/chromatic.hpp"
#include "sphere_chroma/errors.hpp"
#include "sphere_chroma/kneser.hpp"

using namespace sphere_chroma;

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

TwoBlockPartition part(unsigned n, const char* label) { return TwoBlockPartition::parse(n, label); }

}  // namespace

TEST_CASE("kg examples") {
  const Graph petersen = kg(5, 2);
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(petersen.label(0) == "1 2");

  const Graph matching = kg(4, 2);
  CHECK(matching.vertex_count() == 6);
  CHECK(matching.edge_count() == 3);

  const Graph k2 = kg(2, 1);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  CHECK_THROWS_AS(kg(3, 2), DomainError);
  CHECK_THROWS_AS(kg(4, 0), DomainError);
}

TEST_CASE("two-block partitions are canonical") {
  const auto p = part(5, "3 4 5|1 2");
  CHECK(p.label() == "1 2|3 4 5");
  CHECK(p == TwoBlockPartition(5, 0b11100));
  CHECK(p.min_block_size() == 2);
  CHECK_THROWS_AS(TwoBlockPartition(5, 0), DomainError);
  CHECK_THROWS_AS(TwoBlockPartition(5, 0b11111), DomainError);
  CHECK_THROWS_AS(TwoBlockPartition(5, 0b100000), DomainError);
  CHECK_THROWS_AS(part(5, "1 2|3 4"), DomainError);
  CHECK_THROWS_AS(part(5, "1 2 3 4 5"), DomainError);
}

TEST_CASE("nested examples") {
  CHECK(nested(part(5, "1 2|3 4 5"), part(5, "1 2 3|4 5")));
  CHECK_FALSE(nested(part(5, "1 2|3 4 5"), part(5, "1 3|2 4 5")));
  CHECK(nested(part(5, "1 2|3 4 5"), part(5, "1 2|3 4 5")));
  CHECK_THROWS_AS(nested(part(5, "1 2|3 4 5"), part(6, "1 2|3 4 5 6")), DomainError);
}

TEST_CASE("total_kneser examples") {
  const Graph t3 = total_kneser(3);
  CHECK(t3.vertex_count() == 3);
  CHECK(t3.edge_count() == 3);

  CHECK(total_kneser(5).vertex_count() == 15);

  const Graph t2 = total_kneser(2);
  CHECK(t2.vertex_count() == 1);
  CHECK(t2.edge_count() == 0);

  CHECK_THROWS_AS(total_kneser(1), DomainError);
  CHECK_THROWS_AS(total_kneser(25), DomainError);
}

TEST_CASE("remove_singleton_partitions examples") {
  CHECK(remove_singleton_partitions(total_kneser(5), 5).vertex_count() == 10);
  CHECK(remove_singleton_partitions(total_kneser(4), 4).vertex_count() == 3);
  CHECK(remove_singleton_partitions(total_kneser(3), 3).vertex_count() == 0);
}

TEST_CASE("property: kg vertex count and regularity") {
  for (unsigned n = 2; n <= 9; ++n) {
    for (unsigned k = 1; 2 * k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const Graph g = kg(n, k);
      CHECK(g.vertex_count() == binomial(n, k));
      for (auto d : g.degrees()) CHECK(d == binomial(n - k, k));
    }
  }
}

TEST_CASE("property: total_kneser vertex count") {
  for (unsigned n = 2; n <= 12; ++n) {
    CHECK(two_block_partitions(n).size() == (std::size_t{1} << (n - 1)) - 1);
  }
  for (unsigned n = 2; n <= 9; ++n) {
    CHECK(total_kneser(n).vertex_count() == (std::size_t{1} << (n - 1)) - 1);
  }
}

TEST_CASE("property: nested is symmetric") {
  for (unsigned n = 2; n <= 7; ++n) {
    const auto parts = two_block_partitions(n);
    for (const auto& p : parts) {
      for (const auto& q : parts) CHECK(nested(p, q) == nested(q, p));
    }
  }
}

TEST_CASE("property: disjoint 2-subsets give nested partitions") {
  for (unsigned n = 4; n <= 7; ++n) {
    const SubsetMask all = full_mask(n);
    for (SubsetMask a = 1; a <= all; ++a) {
      if (std::popcount(a) != 2) continue;
      for (SubsetMask c = 1; c <= all; ++c) {
        if (std::popcount(c) != 2 || a == c) continue;
        const bool disjoint = (a & c) == 0;
        const TwoBlockPartition pa(n, a), pc(n, c);
        if (disjoint) CHECK(nested(pa, pc));
        if (n == 5) CHECK(nested(pa, pc) == disjoint);
      }
    }
  }
}

TEST_CASE("chromatic numbers of small Kneser graphs") {
  const std::pair<unsigned, unsigned> cases[] = {{4, 2}, {5, 2}, {6, 2}, {7, 2}, {7, 3}};
  for (auto [n, k] : cases) {
    CAPTURE(n);
    CAPTURE(k);
    auto cert = std::get<ChiCertificate>(chromatic_number_exact(kg(n, k)));
    CHECK(cert.chi == n - 2 * k + 2);
  }
}
