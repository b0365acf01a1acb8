#include "sphere_chroma/covercolor.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <set>

#include "sphere_chroma/errors.hpp"
#include "sphere_chroma/spheres.hpp"

namespace sphere_chroma {

namespace {

using boost::multiprecision::cpp_int;

std::vector<DoubleCover> all_covers(unsigned r) {
  std::vector<DoubleCover> out;
  const std::uint64_t count = std::uint64_t{1} << r;
  out.reserve(count - 1);
  for (std::uint64_t x = 1; x < count; ++x) {
    std::uint64_t bits = 0;
    for (unsigned i = 1; i <= r; ++i) {
      if ((x >> (r - i)) & 1U) bits |= std::uint64_t{1} << (i - 1);
    }
    out.push_back({Gf2Vector(r, bits)});
  }
  return out;
}

unsigned generator_index(unsigned cut_sphere, unsigned sheet) {
  return 2 * (cut_sphere - 1) + sheet;
}

void require_cover(const CutSystemModel& model, const DoubleCover& cover) {
  if (cover.phi.dim() != model.r()) throw DomainError("cover rank does not match the model");
  if (cover.phi.is_zero()) throw DomainError("phi = 0 gives the disconnected double cover");
}

LiftClassSet make_set(Gf2Vector a, Gf2Vector b) {
  LiftClassSet s;
  if (b < a) std::swap(a, b);
  s.classes.push_back(a);
  if (a != b) s.classes.push_back(b);
  return s;
}

std::string to_decimal(const cpp_int& v) { return v.str(); }

}  // namespace

CutSystemModel::CutSystemModel(unsigned r) : r_(r) {
  if (r < 2 || r > kMaxRank) {
    throw DomainError("cut-system model requires 2 <= r <= " + std::to_string(kMaxRank) +
                      " (got " + std::to_string(r) + ")");
  }
}

std::string DoubleCover::bits() const {
  std::string out;
  for (unsigned i = 0; i < phi.dim(); ++i) out += phi[i] ? '1' : '0';
  return out;
}

std::vector<DoubleCover> enumerate_double_covers(unsigned r) {
  if (r < 1 || r > 12) {
    throw DomainError("enumerate_double_covers requires 1 <= r <= 12 (got " +
                      std::to_string(r) + ")");
  }
  return all_covers(r);
}

Graph glued_sphere_graph(const CutSystemModel& model, bool with_cut_spheres) {
  if (model.r() > 12) throw DomainError("glued_sphere_graph requires r <= 12");
  // Gluing is injective on the modeled edges: nested spheres of the cut
  // manifold stay disjoint after gluing.
  Graph holed = sphere_graph_holed(model.boundary_count());
  if (!with_cut_spheres) return holed;

  std::vector<std::string> labels = holed.labels();
  std::vector<Edge> edges(holed.edges().begin(), holed.edges().end());
  const auto base = static_cast<VertexId>(labels.size());
  for (unsigned i = 1; i <= model.r(); ++i) {
    const VertexId c = base + i - 1;
    labels.push_back("C" + std::to_string(i));
    for (VertexId v = 0; v < c; ++v) edges.push_back({v, c});
  }
  return Graph(std::move(labels), std::move(edges));
}

Gf2Vector homology_class(const CutSystemModel& model, const TwoBlockPartition& sphere) {
  if (sphere.n() != model.boundary_count()) {
    throw DomainError("sphere is not a partition of the 2r boundary labels");
  }
  Gf2Vector out(model.r());
  for (unsigned j = 1; j <= sphere.n(); ++j) {
    if (sphere.block_a() & (SubsetMask{1} << (j - 1))) out.flip(CutSystemModel::cut_sphere_of(j) - 1);
  }
  return out;
}

Gf2Quotient cover_h2(const CutSystemModel& model, const DoubleCover& cover) {
  require_cover(model, cover);
  const unsigned r = model.r();
  std::vector<std::string> names;
  for (unsigned i = 1; i <= r; ++i) {
    for (unsigned s = 0; s < 2; ++s) names.push_back("G" + std::to_string(i) + "," + std::to_string(s));
  }
  std::vector<Gf2Vector> relations;
  for (unsigned s = 0; s < 2; ++s) {
    relations.push_back(lift_chain(model, cover, full_mask(model.boundary_count()), s));
  }
  return Gf2Quotient(std::move(names), relations);
}

Gf2Vector lift_chain(const CutSystemModel& model, const DoubleCover& cover, SubsetMask block,
                     unsigned sheet) {
  require_cover(model, cover);
  if (sheet > 1) throw DomainError("sheet must be 0 or 1");
  Gf2Vector out(2 * model.r());
  for (unsigned j = 1; j <= model.boundary_count(); ++j) {
    if (!(block & (SubsetMask{1} << (j - 1)))) continue;
    const unsigned i = CutSystemModel::cut_sphere_of(j);
    const unsigned s = (j % 2 == 1) ? sheet : sheet ^ static_cast<unsigned>(cover.phi[i - 1]);
    out.flip(generator_index(i, s));
  }
  return out;
}

LiftClassSet lift_classes(const CutSystemModel& model, const DoubleCover& cover,
                          const TwoBlockPartition& sphere) {
  const auto h2 = cover_h2(model, cover);
  return make_set(h2.canonical(lift_chain(model, cover, sphere.block_a(), 0)),
                  h2.canonical(lift_chain(model, cover, sphere.block_a(), 1)));
}

LiftClassSet cut_sphere_lift_classes(const CutSystemModel& model, const DoubleCover& cover,
                                     unsigned i) {
  if (i < 1 || i > model.r()) throw DomainError("cut sphere index out of range");
  const auto h2 = cover_h2(model, cover);
  const unsigned dim = 2 * model.r();
  return make_set(h2.canonical(Gf2Vector::unit(dim, generator_index(i, 0))),
                  h2.canonical(Gf2Vector::unit(dim, generator_index(i, 1))));
}

CoverTable::CoverTable(const CutSystemModel& model)
    : model_(model), covers_(enumerate_double_covers(model.r())) {
  homology_.reserve(covers_.size());
  for (const auto& c : covers_) homology_.push_back(cover_h2(model_, c));
}

LiftClassSet CoverTable::lifts(std::size_t cover_index, const TwoBlockPartition& sphere) const {
  const auto& cover = covers_.at(cover_index);
  const auto& h2 = homology_[cover_index];
  return make_set(h2.canonical(lift_chain(model_, cover, sphere.block_a(), 0)),
                  h2.canonical(lift_chain(model_, cover, sphere.block_a(), 1)));
}

SphereColor CoverTable::color(const TwoBlockPartition& sphere) const {
  if (sphere.n() != model_.boundary_count()) {
    throw DomainError("sphere is not a partition of the 2r boundary labels");
  }
  SphereColor out;
  out.entries.reserve(covers_.size());
  for (std::size_t i = 0; i < covers_.size(); ++i) out.entries.push_back(lifts(i, sphere));
  return out;
}

SphereColor CoverTable::cut_sphere_color(unsigned i) const {
  if (i < 1 || i > model_.r()) throw DomainError("cut sphere index out of range");
  const unsigned dim = 2 * model_.r();
  SphereColor out;
  for (const auto& h2 : homology_) {
    out.entries.push_back(make_set(h2.canonical(Gf2Vector::unit(dim, generator_index(i, 0))),
                                   h2.canonical(Gf2Vector::unit(dim, generator_index(i, 1)))));
  }
  return out;
}

SphereColor sphere_color(const CutSystemModel& model, const TwoBlockPartition& sphere) {
  return CoverTable(model).color(sphere);
}

ProperReport verify_coloring_proper(const CutSystemModel& model, const ProperOptions& options) {
  if (model.r() < 3 || model.r() > 12) {
    throw DomainError("verify_coloring_proper requires 3 <= r <= 12 (r = 2 is the Farey case)");
  }
  const Graph g = glued_sphere_graph(model, options.with_cut_spheres);
  const CoverTable table(model);
  const unsigned n = model.boundary_count();

  std::vector<Gf2Vector> classes;
  std::vector<SphereColor> colors;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& label = g.label(v);
    if (label.front() == 'C') {
      const auto i = static_cast<unsigned>(std::stoul(label.substr(1)));
      classes.push_back(Gf2Vector::unit(model.r(), i - 1));
      if (!options.homology_only) colors.push_back(table.cut_sphere_color(i));
    } else {
      const auto sphere = TwoBlockPartition::parse(n, label);
      classes.push_back(homology_class(model, sphere));
      if (!options.homology_only) colors.push_back(table.color(sphere));
    }
  }

  ProperReport report;
  report.r = model.r();
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  for (const auto& e : g.edges()) {
    const bool homologous = classes[e.u] == classes[e.v];
    if (options.homology_only) {
      if (homologous) report.violations.emplace_back(g.label(e.u), g.label(e.v));
      continue;
    }
    if (!homologous) {
      if (colors[e.u] == colors[e.v]) report.violations.emplace_back(g.label(e.u), g.label(e.v));
      continue;
    }
    HomologousPair pair{g.label(e.u), g.label(e.v), std::nullopt};
    const auto& cu = colors[e.u].entries;
    const auto& cv = colors[e.v].entries;
    for (std::size_t i = 0; i < cu.size(); ++i) {
      if (cu[i] != cv[i]) {
        pair.witness = table.covers()[i];
        break;
      }
    }
    if (!pair.witness) report.violations.emplace_back(pair.a, pair.b);
    report.homologous_pairs.push_back(std::move(pair));
  }
  report.ok = report.violations.empty();
  return report;
}

ColorCount count_colors(unsigned r, RankMode mode) {
  if (r < 2 || r > 16) {
    throw DomainError("count_colors requires 2 <= r <= 16 (got " + std::to_string(r) + ")");
  }
  ColorCount out;
  out.r = r;
  out.mode = mode;
  const cpp_int t = (cpp_int(1) << r) - 1;

  if (mode == RankMode::kPaper) {
    out.rank = 4 * r - 2;
  } else {
    const CutSystemModel model(r);
    std::set<unsigned> ranks;
    for (const auto& cover : all_covers(r)) ranks.insert(cover_h2(model, cover).rank());
    if (ranks.size() != 1) throw DomainError("cover homology ranks differ across covers");
    out.rank = *ranks.begin();
  }

  const cpp_int classes = cpp_int(1) << out.rank;
  const cpp_int per_cover = classes + classes * (classes - 1) / 2;
  const cpp_int x = t * per_cover;
  out.t = to_decimal(t);
  out.per_cover = to_decimal(per_cover);
  out.x = to_decimal(x);
  // x < 2^150 for r <= 16, well inside long double range.
  out.log2_f = static_cast<double>(static_cast<long double>(t.convert_to<long double>()) *
                                   std::log2(x.convert_to<long double>()));
  out.bound_exponent = 9ULL * r * (1ULL << r);
  out.t_within_2r = t <= (cpp_int(1) << r);
  out.ok = out.t_within_2r && out.log2_f <= static_cast<double>(out.bound_exponent);
  return out;
}

std::size_t used_color_count(const CutSystemModel& model) {
  if (model.r() > 5) throw DomainError("used_color_count requires r <= 5");
  const CoverTable table(model);
  std::set<SphereColor> seen;
  for (const auto& sphere : sphere_vertices(model.boundary_count())) seen.insert(table.color(sphere));
  return seen.size();
}

}  // namespace sphere_chroma
