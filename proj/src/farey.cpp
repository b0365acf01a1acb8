#include "sphere_chroma/farey.hpp"

#include <algorithm>
#include <numeric>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

FareyVertex::FareyVertex(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  const bool infinity = p == 1 && q == 0;
  if (!infinity && (q <= 0 || std::gcd(p < 0 ? -p : p, q) != 1)) {
    throw DomainError("not a reduced fraction: " + std::to_string(p) + "/" + std::to_string(q));
  }
}

std::string FareyVertex::label() const { return std::to_string(p_) + "/" + std::to_string(q_); }

bool FareyVertex::farey_adjacent(const FareyVertex& o) const {
  const std::int64_t det = p_ * o.q_ - q_ * o.p_;
  return det == 1 || det == -1;
}

bool FareyBall::has_fins() const { return std::find(is_fin.begin(), is_fin.end(), true) != is_fin.end(); }

FareyBall farey_ball(unsigned depth) {
  if (depth > 16) throw DomainError("farey_ball depth must be <= 16");
  // Fractions in slope order; edges are index pairs into the final order.
  std::vector<FareyVertex> row{FareyVertex(0, 1), FareyVertex(1, 0)};
  std::vector<std::pair<FareyVertex, FareyVertex>> edges{{row[0], row[1]}};
  for (unsigned round = 0; round < depth; ++round) {
    std::vector<FareyVertex> next;
    next.reserve(2 * row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      const auto& a = row[i];
      const auto& b = row[i + 1];
      const FareyVertex mediant(a.p() + b.p(), a.q() + b.q());
      next.push_back(a);
      next.push_back(mediant);
      edges.emplace_back(a, mediant);
      edges.emplace_back(mediant, b);
    }
    next.push_back(row.back());
    row = std::move(next);
  }

  auto index_of = [&](const FareyVertex& f) {
    // row is sorted by slope with 1/0 last.
    auto it = std::lower_bound(row.begin(), row.end(), f, [](const FareyVertex& x, const FareyVertex& y) {
      if (x.q() == 0) return false;
      if (y.q() == 0) return true;
      return x.p() * y.q() < y.p() * x.q();
    });
    return static_cast<VertexId>(it - row.begin());
  };

  FareyBall ball;
  ball.depth = depth;
  std::vector<std::string> labels;
  for (const auto& f : row) {
    labels.push_back(f.label());
    ball.fractions.emplace_back(f);
  }
  ball.is_fin.assign(row.size(), false);
  std::vector<Edge> index_edges;
  for (const auto& [a, b] : edges) index_edges.push_back({index_of(a), index_of(b)});
  ball.graph = Graph(std::move(labels), std::move(index_edges));
  return ball;
}

FareyBall add_fins(const FareyBall& ball) {
  if (ball.has_fins()) throw DomainError("ball already has fins");
  FareyBall out = ball;
  std::vector<std::string> labels = ball.graph.labels();
  std::vector<Edge> edges(ball.graph.edges().begin(), ball.graph.edges().end());
  for (const auto& e : ball.graph.edges()) {
    const auto fin = static_cast<VertexId>(labels.size());
    labels.push_back("fin(" + ball.graph.label(e.u) + "," + ball.graph.label(e.v) + ")");
    edges.push_back({e.u, fin});
    edges.push_back({e.v, fin});
    out.is_fin.push_back(true);
    out.fractions.emplace_back(std::nullopt);
  }
  out.graph = Graph(std::move(labels), std::move(edges));
  return out;
}

Coloring parity_coloring(const FareyBall& ball) {
  const auto n = ball.graph.vertex_count();
  std::vector<Color> color(n, kUncolored);
  for (VertexId v = 0; v < n; ++v) {
    if (ball.is_fin[v]) continue;
    const auto& f = *ball.fractions[v];
    const bool p_odd = (f.p() % 2) != 0;
    const bool q_odd = (f.q() % 2) != 0;
    // (0,1) -> 0, (1,0) -> 1, (1,1) -> 2; (0,0) is impossible for reduced p/q.
    color[v] = !p_odd ? 0 : (!q_odd ? 1 : 2);
  }
  const auto adj = ball.graph.adjacency_lists();
  for (VertexId v = 0; v < n; ++v) {
    if (!ball.is_fin[v]) continue;
    Color c = 0;
    while (std::any_of(adj[v].begin(), adj[v].end(), [&](VertexId w) { return color[w] == c; })) ++c;
    color[v] = c;
  }
  return Coloring(std::move(color));
}

std::optional<std::string> check_farey_structure(const FareyBall& ball) {
  const auto& g = ball.graph;
  const auto adj = g.adjacency_lists();
  for (const auto& e : g.edges()) {
    if (ball.is_fin[e.u] || ball.is_fin[e.v]) continue;
    if (!ball.fractions[e.u]->farey_adjacent(*ball.fractions[e.v])) {
      return "edge " + g.label(e.u) + " -- " + g.label(e.v) + " is not unimodular";
    }
  }
  auto adjacent = [&](VertexId a, VertexId b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!ball.is_fin[v]) continue;
    if (adj[v].size() != 2) return g.label(v) + " does not have degree 2";
    if (ball.is_fin[adj[v][0]] || ball.is_fin[adj[v][1]] || !adjacent(adj[v][0], adj[v][1])) {
      return g.label(v) + " does not span a Farey edge";
    }
  }
  return std::nullopt;
}

ChiOutcome chi_farey_ball(unsigned depth, bool fins, const SearchOptions& options) {
  if (depth > 10) throw DomainError("chi_farey_ball depth must be <= 10");
  auto ball = farey_ball(depth);
  if (fins) ball = add_fins(ball);
  return chromatic_number_exact(ball.graph, options);
}

}  // namespace sphere_chroma
