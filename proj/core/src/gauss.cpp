#include "gauss_forge/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "gauss_forge/error.hpp"

namespace gauss_forge {

std::string_view kind_name(DiagramKind kind) noexcept {
  return kind == DiagramKind::LongKnot ? "long_knot" : "long_link3";
}

std::optional<DiagramKind> parse_kind(std::string_view name) noexcept {
  if (name == "long_knot") return DiagramKind::LongKnot;
  if (name == "long_link3") return DiagramKind::LongLink3;
  return std::nullopt;
}

int strand_count(DiagramKind kind) noexcept { return kind == DiagramKind::LongKnot ? 1 : 3; }

Direction direction_of(double angle) noexcept { return {std::cos(angle), std::sin(angle)}; }

int det_sign(Direction a, Direction b) {
  Rational d = exact(a.x) * exact(b.y) - exact(a.y) * exact(b.x);
  return sgn(d);
}

std::vector<Chord> derive_chords(const Crossing& crossing, std::size_t crossing_index) {
  const auto& passes = crossing.passes;
  std::vector<Chord> chords;
  chords.reserve(passes.size() * (passes.size() - 1) / 2);
  for (std::size_t i = 0; i < passes.size(); ++i) {
    for (std::size_t j = i + 1; j < passes.size(); ++j) {
      const Pass& p = passes[i];
      const Pass& q = passes[j];
      if (p.height == q.height)
        throw Error(ErrorCode::DegenerateHeight,
                    "crossing '" + crossing.id + "': passes " + std::to_string(i) + " and " +
                        std::to_string(j) + " have equal heights");
      Direction dp = direction_of(p.angle);
      Direction dq = direction_of(q.angle);
      int s = det_sign(dp, dq);
      if (s == 0 || std::abs(std::sin(p.angle - q.angle)) < kTransversalityTolerance)
        throw Error(ErrorCode::NonTransverse,
                    "crossing '" + crossing.id + "': passes " + std::to_string(i) + " and " +
                        std::to_string(j) + " are tangent");
      bool i_under = p.height < q.height;
      Chord c;
      c.under = {crossing_index, i_under ? i : j};
      c.over = {crossing_index, i_under ? j : i};
      // det(v_over, v_under) = -det(v_under, v_over)
      c.sign = i_under ? -s : s;
      chords.push_back(c);
    }
  }
  return chords;
}

std::size_t GaussDiagram::strand_size(int strand) const {
  if (strand < 0 || static_cast<std::size_t>(strand) >= strand_sizes_.size()) return 0;
  return strand_sizes_[static_cast<std::size_t>(strand)];
}

std::optional<std::size_t> GaussDiagram::find(std::string_view crossing_id) const {
  auto it = std::lower_bound(crossings_.begin(), crossings_.end(), crossing_id,
                             [](const Crossing& c, std::string_view id) { return c.id < id; });
  if (it == crossings_.end() || it->id != crossing_id) return std::nullopt;
  return static_cast<std::size_t>(it - crossings_.begin());
}

GaussDiagram build_diagram(DiagramKind kind, std::vector<Crossing> crossings) {
  const int strands = strand_count(kind);
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const Crossing& x = crossings[c];
    if (c > 0 && crossings[c - 1].id == x.id)
      throw Error(ErrorCode::Validation, "duplicate crossing id '" + x.id + "'");
    if (x.passes.size() < 2)
      throw Error(ErrorCode::Validation, "crossing '" + x.id + "' has fewer than two passes");
    for (const Pass& p : x.passes) {
      if (p.point.strand < 0 || p.point.strand >= strands)
        throw Error(ErrorCode::Validation, "crossing '" + x.id + "': strand index " +
                                               std::to_string(p.point.strand) + " out of range for " +
                                               std::string(kind_name(kind)));
      if (!std::isfinite(p.angle))
        throw Error(ErrorCode::Validation, "crossing '" + x.id + "': non-finite angle");
    }
  }

  GaussDiagram g;
  g.kind_ = kind;
  g.crossings_ = std::move(crossings);

  struct Slot {
    const StrandPoint* point;
    PassRef ref;
  };
  std::vector<Slot> slots;
  g.ranks_.resize(g.crossings_.size());
  for (std::size_t c = 0; c < g.crossings_.size(); ++c) {
    g.ranks_[c].resize(g.crossings_[c].passes.size());
    for (std::size_t p = 0; p < g.crossings_[c].passes.size(); ++p)
      slots.push_back({&g.crossings_[c].passes[p].point, {c, p}});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return *a.point < *b.point; });
  g.strand_sizes_.assign(static_cast<std::size_t>(strands), 0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i > 0 && *slots[i - 1].point == *slots[i].point)
      throw Error(ErrorCode::Validation, "param " + format_rational(slots[i].point->param) +
                                             " repeated on strand " + std::to_string(slots[i].point->strand));
    auto strand = static_cast<std::size_t>(slots[i].point->strand);
    g.ranks_[slots[i].ref.crossing][slots[i].ref.pass] = g.strand_sizes_[strand]++;
  }

  for (std::size_t c = 0; c < g.crossings_.size(); ++c) {
    auto chords = derive_chords(g.crossings_[c], c);
    g.chords_.insert(g.chords_.end(), chords.begin(), chords.end());
  }
  return g;
}

GaussDiagram mirror(const GaussDiagram& diagram) {
  std::vector<Crossing> crossings = diagram.crossings();
  for (Crossing& c : crossings)
    for (Pass& p : c.passes) p.height = -p.height;
  return build_diagram(diagram.kind(), std::move(crossings));
}

GaussDiagram insert_kink(const GaussDiagram& diagram, int strand, const Rational& location, int sign) {
  if (strand < 0 || strand >= strand_count(diagram.kind()))
    throw Error(ErrorCode::Validation, "strand index out of range");
  std::optional<Rational> next;
  std::set<std::string> ids;
  for (const Crossing& c : diagram.crossings()) {
    ids.insert(c.id);
    for (const Pass& p : c.passes) {
      if (p.point.strand != strand) continue;
      if (p.point.param == location)
        throw Error(ErrorCode::ParamCollision, "param " + format_rational(location) + " already used");
      if (p.point.param > location && (!next || p.point.param < *next)) next = p.point.param;
    }
  }
  Rational second = next ? Rational((location + *next) / 2) : Rational(location + 1);
  std::string id = "kink";
  for (int n = 1; ids.count(id); ++n) id = "kink" + std::to_string(n);

  Crossing kink;
  kink.id = id;
  kink.passes.push_back({{strand, location}, sign > 0 ? std::numbers::pi / 2 : -std::numbers::pi / 2, Rational(0)});
  kink.passes.push_back({{strand, second}, 0.0, Rational(1)});
  std::vector<Crossing> crossings = diagram.crossings();
  crossings.push_back(std::move(kink));
  return build_diagram(diagram.kind(), std::move(crossings));
}

std::size_t expected_chord_count(const GaussDiagram& diagram) {
  std::size_t n = 0;
  for (const Crossing& c : diagram.crossings()) n += c.passes.size() * (c.passes.size() - 1) / 2;
  return n;
}

}  // namespace gauss_forge
