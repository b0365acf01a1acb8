#include "sphere_chroma/kneser.hpp"

#include <bit>
#include <charconv>

#include "sphere_chroma/errors.hpp"

namespace sphere_chroma {

namespace {

void require_ground_set(unsigned n) {
  if (n == 0 || n > kMaxGroundSet) {
    throw DomainError("ground set size " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxGroundSet));
  }
}

SubsetMask parse_block(unsigned n, std::string_view text, std::string_view whole) {
  SubsetMask mask = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    unsigned value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 1 || value > n) {
      throw DomainError("bad partition label \"" + std::string(whole) + "\"");
    }
    const SubsetMask bit = SubsetMask{1} << (value - 1);
    if (mask & bit) throw DomainError("repeated element in \"" + std::string(whole) + "\"");
    mask |= bit;
    pos = static_cast<std::size_t>(end - text.data());
  }
  return mask;
}

}  // namespace

SubsetMask parse_subset(unsigned n, std::string_view text) {
  require_ground_set(n);
  return parse_block(n, text, text);
}

std::string subset_label(SubsetMask members) {
  std::string out;
  for (unsigned i = 0; i < 32; ++i) {
    if (members & (SubsetMask{1} << i)) {
      if (!out.empty()) out += ' ';
      out += std::to_string(i + 1);
    }
  }
  return out;
}

TwoBlockPartition::TwoBlockPartition(unsigned n, SubsetMask block) : n_(n) {
  require_ground_set(n);
  const SubsetMask all = full_mask(n);
  if ((block & ~all) != 0) throw DomainError("block not contained in {1..n}");
  if (block == 0 || block == all) throw DomainError("both blocks must be nonempty");
  block_a_ = (block & 1U) ? block : (all & ~block);
}

TwoBlockPartition TwoBlockPartition::parse(unsigned n, std::string_view label) {
  const auto bar = label.find('|');
  if (bar == std::string_view::npos) {
    throw DomainError("partition label \"" + std::string(label) + "\" lacks '|'");
  }
  const SubsetMask a = parse_block(n, label.substr(0, bar), label);
  const SubsetMask b = parse_block(n, label.substr(bar + 1), label);
  if ((a & b) != 0 || (a | b) != full_mask(n)) {
    throw DomainError("\"" + std::string(label) + "\" is not a partition of {1.." +
                      std::to_string(n) + "}");
  }
  return TwoBlockPartition(n, a);
}

unsigned TwoBlockPartition::min_block_size() const {
  const auto a = static_cast<unsigned>(std::popcount(block_a_));
  return std::min(a, n_ - a);
}

std::string TwoBlockPartition::label() const {
  return subset_label(block_a()) + "|" + subset_label(block_b());
}

bool nested(const TwoBlockPartition& p, const TwoBlockPartition& q) {
  if (p.n() != q.n()) throw DomainError("partitions of different ground sets");
  auto subset = [](SubsetMask x, SubsetMask y) { return (x & ~y) == 0; };
  const SubsetMask a = p.block_a(), b = p.block_b();
  const SubsetMask c = q.block_a(), d = q.block_b();
  return subset(a, c) || subset(a, d) || subset(b, c) || subset(b, d);
}

std::vector<TwoBlockPartition> two_block_partitions(unsigned n) {
  require_ground_set(n);
  std::vector<TwoBlockPartition> out;
  const SubsetMask all = full_mask(n);
  for (SubsetMask a = 1; a < all; a += 2) out.emplace_back(n, a);
  return out;
}

Graph kg(unsigned n, unsigned k) {
  if (k < 1 || n < 2 * k) {
    throw DomainError("kg requires n >= 2k >= 2 (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  require_ground_set(n);
  std::vector<SubsetMask> sets;
  for (std::uint64_t m = 0; m <= full_mask(n); ++m) {
    if (static_cast<unsigned>(std::popcount(m)) == k) sets.push_back(static_cast<SubsetMask>(m));
  }
  std::vector<std::string> labels;
  for (auto m : sets) labels.push_back(subset_label(m));
  std::vector<Edge> edges;
  for (VertexId i = 0; i < sets.size(); ++i) {
    for (VertexId j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]) == 0) edges.push_back({i, j});
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph total_kneser(unsigned n) {
  if (n < 2 || n > 24) {
    throw DomainError("total_kneser requires 2 <= n <= 24 (got " + std::to_string(n) + ")");
  }
  const auto parts = two_block_partitions(n);
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(p.label());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < parts.size(); ++i) {
    for (VertexId j = i + 1; j < parts.size(); ++j) {
      if (nested(parts[i], parts[j])) edges.push_back({i, j});
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph remove_singleton_partitions(const Graph& total, unsigned n) {
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < total.vertex_count(); ++v) {
    if (TwoBlockPartition::parse(n, total.label(v)).min_block_size() >= 2) keep.push_back(v);
  }
  return total.induced_subgraph(keep);
}

}  // namespace sphere_chroma
