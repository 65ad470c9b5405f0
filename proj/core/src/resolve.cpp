#include "gauss_forge/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gauss_forge/error.hpp"

namespace gauss_forge {

std::string to_string(const TriplePointType& type) {
  std::string s = type.direction == ChordDirection::Left ? "(<-" : "(->";
  for (int sign : type.signs) s += sign > 0 ? ",+" : ",-";
  return s + ")";
}

namespace {

int chord_sign(const Pass& p, const Pass& q) {
  const Pass& over = p.height > q.height ? p : q;
  const Pass& under = p.height > q.height ? q : p;
  return det_sign(direction_of(over.angle), direction_of(under.angle));
}

struct ExactLine {
  Rational dx, dy;  // direction
  Rational nx, ny;  // normal, (-dy, dx)
  Rational offset;  // n . P = offset
};

struct Intersection {
  std::size_t k, l;
  Rational along_k, along_l;  // d . P on each line
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t require_crossing(const GaussDiagram& g, std::string_view id) {
  auto idx = g.find(id);
  if (!idx) throw Error(ErrorCode::UnknownCrossing, "no crossing '" + std::string(id) + "'");
  return *idx;
}

}  // namespace

TriplePointType classify_triple(const Crossing& crossing) {
  if (crossing.passes.size() != 3)
    throw Error(ErrorCode::NotATriple, "crossing '" + crossing.id + "' has " +
                                           std::to_string(crossing.passes.size()) + " passes");
  derive_chords(crossing);  // validates heights and transversality
  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return crossing.passes[i].point < crossing.passes[j].point;
  });
  const Pass& a = crossing.passes[order[0]];
  const Pass& b = crossing.passes[order[1]];
  const Pass& c = crossing.passes[order[2]];
  TriplePointType t;
  t.direction = c.height < a.height ? ChordDirection::Left : ChordDirection::Right;
  t.signs = {chord_sign(a, c), chord_sign(a, b), chord_sign(b, c)};
  return t;
}

GaussDiagram split_crossing(const GaussDiagram& diagram, std::string_view crossing_id,
                            const OffsetAssignment& offsets) {
  const std::size_t index = require_crossing(diagram, crossing_id);
  const Crossing& target = diagram.crossings()[index];
  const std::size_t m = target.passes.size();
  if (offsets.offsets.size() != m)
    throw Error(ErrorCode::Validation, "expected " + std::to_string(m) + " offsets, got " +
                                           std::to_string(offsets.offsets.size()));

  std::vector<ExactLine> lines;
  for (std::size_t k = 0; k < m; ++k) {
    Direction d = direction_of(target.passes[k].angle);
    ExactLine line{exact(d.x), exact(d.y), -exact(d.y), exact(d.x), offsets.offsets[k]};
    lines.push_back(std::move(line));
  }

  std::vector<Intersection> points;
  Rational largest = 0;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k + 1; l < m; ++l) {
      const ExactLine& a = lines[k];
      const ExactLine& b = lines[l];
      Rational det = a.nx * b.ny - a.ny * b.nx;
      if (det == 0) throw Error(ErrorCode::NonTransverse, "parallel passes in '" + target.id + "'");
      Rational px = (a.offset * b.ny - b.offset * a.ny) / det;
      Rational py = (a.nx * b.offset - b.nx * a.offset) / det;
      Intersection x{k, l, a.dx * px + a.dy * py, b.dx * px + b.dy * py};
      largest = std::max<Rational>(largest, abs(x.along_k));
      largest = std::max<Rational>(largest, abs(x.along_l));
      points.push_back(std::move(x));
    }
  }

  // Intersection points that coincide share a position on some line.
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto along = [&](std::size_t i, std::size_t k) -> const Rational& {
    return points[i].k == k ? points[i].along_k : points[i].along_l;
  };
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::size_t> on_k;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].k == k || points[i].l == k) on_k.push_back(i);
    std::sort(on_k.begin(), on_k.end(), [&](std::size_t i, std::size_t j) { return along(i, k) < along(j, k); });
    for (std::size_t t = 1; t < on_k.size(); ++t)
      if (along(on_k[t - 1], k) == along(on_k[t], k))
        parent[find_root(parent, on_k[t])] = find_root(parent, on_k[t - 1]);
  }

  // Scale so that every moved pass stays strictly inside its gap.
  std::optional<Rational> gap;
  for (std::size_t k = 0; k < m; ++k) {
    const StrandPoint& here = target.passes[k].point;
    for (std::size_t c = 0; c < diagram.crossings().size(); ++c) {
      for (std::size_t p = 0; p < diagram.crossings()[c].passes.size(); ++p) {
        if (c == index && p == k) continue;
        const StrandPoint& other = diagram.crossings()[c].passes[p].point;
        if (other.strand != here.strand) continue;
        Rational dist = abs(other.param - here.param);
        if (dist == 0) throw Error(ErrorCode::ScaleOverflow, "coincident params on a strand");
        if (!gap || dist < *gap) gap = dist;
      }
    }
  }
  Rational scale = Rational(gap ? *gap : Rational(1)) / (2 * (largest + 1));
  if (scale <= 0) throw Error(ErrorCode::ScaleOverflow, "no admissible scale for '" + target.id + "'");

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(points.size());
  {
    std::vector<std::ptrdiff_t> slot(points.size(), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::size_t r = find_root(parent, i);
      if (slot[r] < 0) {
        slot[r] = static_cast<std::ptrdiff_t>(groups.size());
        groups.emplace_back();
      }
      groups[static_cast<std::size_t>(slot[r])].push_back(i);
      group_of[i] = static_cast<std::size_t>(slot[r]);
    }
  }

  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < diagram.crossings().size(); ++c)
    if (c != index) crossings.push_back(diagram.crossings()[c]);

  for (const auto& group : groups) {
    std::vector<std::size_t> members;
    for (std::size_t i : group) {
      members.push_back(points[i].k);
      members.push_back(points[i].l);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Crossing piece;
    piece.id = target.id + ".";
    for (std::size_t t = 0; t < members.size(); ++t) piece.id += (t ? "-" : "") + std::to_string(members[t]);
    for (std::size_t k : members) {
      const Rational* position = nullptr;
      for (std::size_t i : group)
        if (points[i].k == k || points[i].l == k) position = &along(i, k);
      Pass pass = target.passes[k];
      pass.point.param += scale * *position;
      piece.passes.push_back(std::move(pass));
    }
    crossings.push_back(std::move(piece));
  }
  return build_diagram(diagram.kind(), std::move(crossings));
}

GaussDiagram resolve_crossing(const GaussDiagram& diagram, std::string_view crossing_id,
                              const OffsetAssignment& offsets) {
  GaussDiagram result = split_crossing(diagram, crossing_id, offsets);
  const std::size_t m = diagram.crossings()[*diagram.find(crossing_id)].passes.size();
  const std::size_t expected = diagram.crossings().size() - 1 + m * (m - 1) / 2;
  if (result.crossings().size() != expected)
    throw Error(ErrorCode::NonGenericOffsets,
                "offsets for '" + std::string(crossing_id) + "' leave concurrent passes");
  return result;
}

GaussDiagram resolve_pass(const GaussDiagram& diagram, std::string_view crossing_id, std::size_t pass_index,
                          const Rational& offset) {
  const std::size_t index = require_crossing(diagram, crossing_id);
  const std::size_t m = diagram.crossings()[index].passes.size();
  if (pass_index >= m) throw Error(ErrorCode::Validation, "pass index out of range");
  if (offset == 0) throw Error(ErrorCode::NonGenericOffsets, "zero offset leaves the crossing unchanged");
  OffsetAssignment offsets{std::vector<Rational>(m, Rational(0))};
  offsets.offsets[pass_index] = offset;
  return split_crossing(diagram, crossing_id, offsets);
}

OffsetAssignment random_offsets(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OffsetAssignment a;
  for (std::size_t k = 0; k < m; ++k) {
    auto n = static_cast<long>(rng() % 2000001ULL) - 1000000L;
    a.offsets.emplace_back(n, 1000000L);
    a.offsets.back().canonicalize();
  }
  return a;
}

GaussDiagram resolve_all(const GaussDiagram& diagram, std::uint64_t seed) {
  std::vector<std::string> targets;
  for (const Crossing& c : diagram.crossings())
    if (c.passes.size() >= 3) targets.push_back(c.id);
  GaussDiagram current = diagram;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::size_t m = current.crossings()[*current.find(targets[t])].passes.size();
    for (std::uint64_t attempt = 0;; ++attempt) {
      try {
        current = resolve_crossing(current, targets[t], random_offsets(m, splitmix(seed ^ splitmix(t * 1000003 + attempt))));
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NonGenericOffsets || attempt >= 64) throw;
      }
    }
  }
  return current;
}

}  // namespace gauss_forge
