#include <doctest.h>

#include <numeric>

#include "sphere_chroma/errors.hpp"
#include "sphere_chroma/farey.hpp"

using namespace sphere_chroma;

namespace {

std::uint32_t chi(unsigned depth, bool fins) {
  return std::get<ChiCertificate>(chi_farey_ball(depth, fins)).chi;
}

}  // namespace

TEST_CASE("Farey vertices") {
  CHECK(FareyVertex(1, 0).label() == "1/0");
  CHECK(FareyVertex(-3, 4).label() == "-3/4");
  CHECK(FareyVertex(0, 1).farey_adjacent(FareyVertex(1, 0)));
  CHECK(FareyVertex(1, 2).farey_adjacent(FareyVertex(2, 3)));
  CHECK_FALSE(FareyVertex(1, 3).farey_adjacent(FareyVertex(2, 3)));
  CHECK_THROWS_AS(FareyVertex(2, 4), DomainError);
  CHECK_THROWS_AS(FareyVertex(0, 0), DomainError);
  CHECK_THROWS_AS(FareyVertex(1, -2), DomainError);
  CHECK_THROWS_AS(FareyVertex(-1, 0), DomainError);
}

TEST_CASE("farey_ball examples") {
  const auto d0 = farey_ball(0);
  CHECK(d0.graph.labels() == std::vector<std::string>{"0/1", "1/0"});
  CHECK(d0.graph.edge_count() == 1);

  const auto d1 = farey_ball(1);
  CHECK(d1.graph.labels() == std::vector<std::string>{"0/1", "1/1", "1/0"});
  CHECK(d1.graph.edge_count() == 3);

  const auto d2 = farey_ball(2);
  CHECK(d2.graph.labels() == std::vector<std::string>{"0/1", "1/2", "1/1", "2/1", "1/0"});
  CHECK(d2.graph.edge_count() == 7);
  CHECK_FALSE(d2.has_fins());

  CHECK_THROWS_AS(farey_ball(17), DomainError);
}

TEST_CASE("add_fins examples") {
  const auto t = add_fins(farey_ball(1));
  CHECK(t.graph.vertex_count() == 6);
  CHECK(t.graph.edge_count() == 9);
  CHECK(t.has_fins());
  CHECK(t.graph.label(3) == "fin(0/1,1/1)");

  const auto e = add_fins(farey_ball(0));
  CHECK(e.graph.vertex_count() == 3);
  CHECK(e.graph.edge_count() == 3);

  const auto d2 = add_fins(farey_ball(2));
  CHECK(d2.graph.vertex_count() == 12);
  CHECK(d2.graph.edge_count() == 21);

  CHECK_THROWS_AS(add_fins(d2), DomainError);
}

TEST_CASE("parity_coloring examples") {
  const auto d1 = farey_ball(1);
  CHECK(parity_coloring(d1).assignment() == std::vector<Color>{0, 2, 1});
  CHECK(validate_coloring(d1.graph, parity_coloring(d1)).valid);

  const auto finned = add_fins(farey_ball(8));
  CHECK(validate_coloring(finned.graph, parity_coloring(finned)).valid);

  CHECK(parity_coloring(farey_ball(0)).size() == 2);
}

TEST_CASE("chi_farey_ball examples") {
  CHECK(chi(1, true) == 3);
  CHECK(chi(0, false) == 2);
  CHECK(chi(6, true) == 3);
  CHECK_THROWS_AS(chi_farey_ball(11, false), DomainError);
}

TEST_CASE("check_farey_structure flags defects") {
  auto ball = farey_ball(3);
  CHECK_FALSE(check_farey_structure(ball).has_value());
  CHECK_FALSE(check_farey_structure(add_fins(ball)).has_value());

  // 0/1 -- 1/2 is replaced by 0/1 -- 2/3, which is not unimodular.
  const auto zero = *ball.graph.find_label("0/1");
  const auto two_thirds = *ball.graph.find_label("2/3");
  std::vector<Edge> edges(ball.graph.edges().begin(), ball.graph.edges().end());
  edges.front() = Edge{zero, two_thirds};
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  ball.graph = Graph(ball.graph.labels(), edges);
  CHECK(check_farey_structure(ball).has_value());
}

TEST_CASE("property: ball structure, counts and parity coloring") {
  for (unsigned d = 0; d <= 12; ++d) {
    CAPTURE(d);
    const auto ball = farey_ball(d);
    CHECK(ball.graph.vertex_count() == (std::size_t{1} << d) + 1);
    CHECK(ball.graph.edge_count() == (std::size_t{1} << (d + 1)) - 1);
    CHECK_FALSE(check_farey_structure(ball).has_value());
    for (const auto& f : ball.fractions) {
      REQUIRE(f.has_value());
      CHECK(std::gcd(f->p(), f->q()) == 1);
    }
    for (const auto& e : ball.graph.edges()) {
      CHECK(ball.fractions[e.u]->farey_adjacent(*ball.fractions[e.v]));
    }
    const auto finned = add_fins(ball);
    CHECK_FALSE(check_farey_structure(finned).has_value());
    CHECK(validate_coloring(ball.graph, parity_coloring(ball)).valid);
    CHECK(validate_coloring(finned.graph, parity_coloring(finned)).valid);
    const auto degrees = finned.graph.degrees();
    for (VertexId v = 0; v < finned.graph.vertex_count(); ++v) {
      if (finned.is_fin[v]) CHECK(degrees[v] == 2);
    }
  }
}

TEST_CASE("property: finite balls are 3-chromatic") {
  for (unsigned d = 1; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(chi(d, true) == 3);
    CHECK(chi(d, false) == 3);
  }
}
