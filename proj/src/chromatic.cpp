#include "sphere_chroma/chromatic.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

namespace {

using Decisions = std::vector<std::pair<VertexId, Color>>;

constexpr std::size_t kNoWinner = std::numeric_limits<std::size_t>::max();

// Degree descending, then index ascending.
std::vector<VertexId> degree_order(const std::vector<std::size_t>& degree) {
  std::vector<VertexId> order(degree.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return degree[a] > degree[b];
  });
  return order;
}

struct Problem {
  std::size_t n = 0;
  std::uint32_t k = 0;
  std::vector<std::vector<VertexId>> adj;
  std::vector<std::size_t> degree;
};

// Shared across the searchers of one decision.
struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::optional<std::uint64_t> budget;
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> winner{kNoWinner};
};

class Searcher {
 public:
  enum class Status { kFound, kExhausted, kAborted };

  Searcher(const Problem& p, SharedState& shared, std::size_t task_index)
      : p_(p),
        shared_(shared),
        task_index_(task_index),
        color_(p.n, kUncolored),
        forbid_(p.n * p.k, 0),
        sat_(p.n, 0),
        class_size_(p.k, 0) {}

  // Applies a decision that is known not to wipe out any domain.
  void apply(VertexId v, Color c) {
    assign(v, c);
    path_.emplace_back(v, c);
  }

  Status search() { return expand(); }

  // Records every search prefix of the given length, in search order.
  void collect(std::size_t depth, std::vector<Decisions>& out) {
    collect_depth_ = depth;
    collect_out_ = &out;
    expand();
    collect_out_ = nullptr;
  }

  const std::vector<Color>& colors() const { return color_; }

 private:
  bool aborted() const {
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return true;
    return shared_.winner.load(std::memory_order_relaxed) < task_index_;
  }

  bool count_node() {
    auto used = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.budget && used > *shared_.budget) {
      shared_.budget_hit.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  VertexId select() const {
    VertexId best = 0;
    bool have = false;
    for (VertexId v = 0; v < p_.n; ++v) {
      if (color_[v] != kUncolored) continue;
      if (!have || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && p_.degree[v] > p_.degree[best])) {
        best = v;
        have = true;
      }
    }
    return best;
  }

  // Returns false when some uncolored neighbor has no color left.
  bool assign(VertexId v, Color c) {
    color_[v] = c;
    ++colored_;
    if (class_size_[c]++ == 0 && c == used_) ++used_;
    bool ok = true;
    for (VertexId w : p_.adj[v]) {
      if (color_[w] != kUncolored) continue;
      if (forbid_[w * p_.k + c]++ == 0 && ++sat_[w] == p_.k) ok = false;
    }
    return ok;
  }

  void unassign(VertexId v, Color c) {
    for (VertexId w : p_.adj[v]) {
      if (color_[w] != kUncolored) continue;
      if (--forbid_[w * p_.k + c] == 0) --sat_[w];
    }
    color_[v] = kUncolored;
    --colored_;
    if (--class_size_[c] == 0 && c + 1 == used_) --used_;
  }

  Status expand() {
    if (collect_out_ != nullptr &&
        (colored_ == p_.n || path_.size() == collect_depth_)) {
      collect_out_->push_back(path_);
      return Status::kExhausted;
    }
    if (colored_ == p_.n) return Status::kFound;
    if (aborted()) return Status::kAborted;

    const VertexId v = select();
    const Color limit = std::min<Color>(used_ + 1, p_.k);
    for (Color c = 0; c < limit; ++c) {
      if (forbid_[v * p_.k + c] != 0) continue;
      if (collect_out_ == nullptr && !count_node()) return Status::kAborted;
      const bool ok = assign(v, c);
      path_.emplace_back(v, c);
      if (ok) {
        Status st = expand();
        if (st != Status::kExhausted) return st;
      }
      path_.pop_back();
      unassign(v, c);
    }
    return Status::kExhausted;
  }

  const Problem& p_;
  SharedState& shared_;
  std::size_t task_index_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::uint32_t> sat_;
  std::vector<std::uint32_t> class_size_;
  Color used_ = 0;
  std::size_t colored_ = 0;
  Decisions path_;
  std::size_t collect_depth_ = 0;
  std::vector<Decisions>* collect_out_ = nullptr;
};

Problem make_problem(const Graph& g, std::uint32_t k) {
  Problem p;
  p.n = g.vertex_count();
  p.k = k;
  p.adj = g.adjacency_lists();
  p.degree = g.degrees();
  return p;
}

struct DecisionOutcome {
  Decision decision = Decision::kBudgetExhausted;
  std::optional<std::vector<Color>> colors;
};

// Splits the search tree into prefixes and runs them on a worker pool. The
// winning prefix is the least successful index, which is exactly the branch
// a sequential search would have returned.
DecisionOutcome decide_parallel(const Problem& p, const Decisions& pins,
                                SharedState& shared, unsigned threads) {
  std::vector<Decisions> tasks;
  const std::size_t target = std::size_t{16} * threads;
  for (std::size_t depth = 1; depth <= p.n; ++depth) {
    std::vector<Decisions> next;
    Searcher s(p, shared, 0);
    for (auto [v, c] : pins) s.apply(v, c);
    s.collect(pins.size() + depth, next);
    const bool saturated = next.size() == tasks.size();
    tasks = std::move(next);
    if (tasks.size() >= target || saturated) break;
  }

  std::vector<Searcher::Status> status(tasks.size(), Searcher::Status::kAborted);
  std::vector<std::vector<Color>> found(tasks.size());
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) return;
      if (shared.winner.load() < i || shared.budget_hit.load()) continue;
      Searcher s(p, shared, i);
      for (auto [v, c] : tasks[i]) s.apply(v, c);
      status[i] = s.search();
      if (status[i] == Searcher::Status::kFound) {
        found[i] = s.colors();
        std::size_t cur = shared.winner.load();
        while (i < cur && !shared.winner.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    switch (status[i]) {
      case Searcher::Status::kFound:
        return {Decision::kColorable, std::move(found[i])};
      case Searcher::Status::kExhausted:
        continue;
      case Searcher::Status::kAborted:
        return {Decision::kBudgetExhausted, std::nullopt};
    }
  }
  return {Decision::kNotColorable, std::nullopt};
}

DecisionOutcome decide(const Problem& p, std::span<const VertexId> pinned,
                       SharedState& shared, unsigned threads) {
  if (pinned.size() > p.k) return {Decision::kNotColorable, std::nullopt};
  Decisions pins;
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    pins.emplace_back(pinned[i], static_cast<Color>(i));
  }
  if (threads > 1) return decide_parallel(p, pins, shared, threads);

  Searcher s(p, shared, 0);
  for (auto [v, c] : pins) s.apply(v, c);
  switch (s.search()) {
    case Searcher::Status::kFound:
      return {Decision::kColorable, s.colors()};
    case Searcher::Status::kExhausted:
      return {Decision::kNotColorable, std::nullopt};
    case Searcher::Status::kAborted:
      break;
  }
  return {Decision::kBudgetExhausted, std::nullopt};
}

}  // namespace

Coloring greedy_dsatur(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.adjacency_lists();
  const auto degree = g.degrees();
  std::vector<Color> color(n, kUncolored);
  std::vector<std::vector<bool>> seen(n);
  std::vector<std::size_t> sat(n, 0);

  for (std::size_t step = 0; step < n; ++step) {
    VertexId v = 0;
    bool have = false;
    for (VertexId u = 0; u < n; ++u) {
      if (color[u] != kUncolored) continue;
      if (!have || sat[u] > sat[v] ||
          (sat[u] == sat[v] && degree[u] > degree[v])) {
        v = u;
        have = true;
      }
    }
    Color c = 0;
    while (c < seen[v].size() && seen[v][c]) ++c;
    color[v] = c;
    for (VertexId w : adj[v]) {
      if (color[w] != kUncolored) continue;
      if (seen[w].size() <= c) seen[w].resize(c + 1, false);
      if (!seen[w][c]) {
        seen[w][c] = true;
        ++sat[w];
      }
    }
  }
  return Coloring(std::move(color));
}

std::vector<VertexId> greedy_clique(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  const AdjacencyMatrix adj(g);
  const auto order = degree_order(g.degrees());
  std::vector<VertexId> best;
  std::vector<VertexId> clique;
  for (VertexId seed : order) {
    clique.assign(1, seed);
    for (VertexId v : order) {
      if (v == seed) continue;
      bool all = std::all_of(clique.begin(), clique.end(),
                             [&](VertexId u) { return adj.adjacent(u, v); });
      if (all) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

std::optional<Coloring> tabu_k_coloring(const Graph& g, std::uint32_t k,
                                        std::uint64_t max_iterations,
                                        std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  const auto adj = g.adjacency_lists();
  // mt19937_64 output is fixed by the standard; reduce by modulo ourselves so
  // runs agree across standard libraries.
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) { return rng() % bound; };

  // Greedy start in DSATUR order, overflowing vertices take color k-1.
  std::vector<Color> color = greedy_dsatur(g).assignment();
  for (auto& c : color) c = std::min<Color>(c, k - 1);

  std::vector<std::uint32_t> gamma(n * k, 0);  // neighbors of v colored c
  std::size_t conflicts = 0;
  for (const auto& e : g.edges()) {
    if (color[e.u] == color[e.v]) ++conflicts;
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : adj[v]) ++gamma[v * k + color[w]];
  }
  std::vector<std::uint64_t> tabu_until(n * k, 0);

  for (std::uint64_t iter = 1; iter <= max_iterations && conflicts > 0; ++iter) {
    std::int64_t best_delta = std::numeric_limits<std::int64_t>::max();
    VertexId best_v = 0;
    Color best_c = 0;
    std::uint64_t ties = 0;
    std::size_t conflicting = 0;
    for (VertexId v = 0; v < n; ++v) {
      const auto own = gamma[v * k + color[v]];
      if (own == 0) continue;
      ++conflicting;
      for (Color c = 0; c < k; ++c) {
        if (c == color[v]) continue;
        const auto delta = static_cast<std::int64_t>(gamma[v * k + c]) - own;
        const bool aspirated = static_cast<std::int64_t>(conflicts) + delta == 0;
        if (tabu_until[v * k + c] >= iter && !aspirated) continue;
        if (delta < best_delta) {
          best_delta = delta;
          best_v = v;
          best_c = c;
          ties = 1;
        } else if (delta == best_delta && below(++ties) == 0) {
          best_v = v;
          best_c = c;
        }
      }
    }
    if (ties == 0) continue;  // every move is tabu this round
    const Color old = color[best_v];
    color[best_v] = best_c;
    conflicts = static_cast<std::size_t>(static_cast<std::int64_t>(conflicts) + best_delta);
    for (VertexId w : adj[best_v]) {
      --gamma[w * k + old];
      ++gamma[w * k + best_c];
    }
    tabu_until[best_v * k + old] = iter + below(10) + (6 * conflicting) / 10;
  }
  if (conflicts > 0) return std::nullopt;
  return Coloring(std::move(color));
}

KColoringResult find_k_coloring(const Graph& g, std::uint32_t k,
                                const SearchOptions& options,
                                std::span<const VertexId> pinned) {
  if (g.empty()) return {Decision::kColorable, Coloring{}, 0};
  if (k == 0) return {Decision::kNotColorable, std::nullopt, 0};
  const AdjacencyMatrix adj(g);
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    for (std::size_t j = i + 1; j < pinned.size(); ++j) {
      if (!adj.adjacent(pinned[i], pinned[j])) {
        throw DomainError("pinned vertices must form a clique");
      }
    }
  }
  const Problem p = make_problem(g, k);
  SharedState shared;
  shared.budget = options.node_budget;
  auto out = decide(p, pinned, shared, std::max(1U, options.threads));
  KColoringResult result{out.decision, std::nullopt, shared.nodes.load()};
  if (out.colors) result.coloring = Coloring(std::move(*out.colors));
  return result;
}

ChiOutcome chromatic_number_exact(const Graph& g,
                                  const SearchOptions& options) {
  if (g.empty()) return ChiCertificate{};

  const auto clique = greedy_clique(g);
  const auto lower = static_cast<std::uint32_t>(clique.size());
  Coloring best = greedy_dsatur(g).canonicalized();
  const std::uint64_t tabu_iterations = 20000 + 200 * g.vertex_count();
  while (best.size() > lower) {
    auto better = tabu_k_coloring(g, static_cast<std::uint32_t>(best.size() - 1), tabu_iterations);
    if (!better) break;
    best = better->canonicalized();
  }
  std::uint64_t spent = 0;

  auto k = static_cast<std::uint32_t>(best.size());
  while (k > lower) {
    --k;
    SearchOptions step = options;
    if (options.node_budget) {
      step.node_budget = *options.node_budget - std::min(spent, *options.node_budget);
    }
    auto r = find_k_coloring(g, k, step, clique);
    spent += r.nodes;
    switch (r.decision) {
      case Decision::kColorable:
        best = r.coloring->canonicalized();
        k = static_cast<std::uint32_t>(best.size());
        break;
      case Decision::kNotColorable: {
        InfeasibilityEvidence ev;
        ev.kind = InfeasibilityEvidence::Kind::kExhaustiveSearch;
        ev.refuted_colors = k;
        ev.nodes = r.nodes;
        return ChiCertificate{k + 1, best, lower, ev};
      }
      case Decision::kBudgetExhausted:
        return Undecided{lower, static_cast<std::uint32_t>(best.size()), best};
    }
  }
  InfeasibilityEvidence ev;
  ev.kind = InfeasibilityEvidence::Kind::kClique;
  ev.refuted_colors = lower - 1;
  ev.clique = clique;
  return ChiCertificate{lower, best, lower, ev};
}

}  // namespace sphere_chroma
