#include <array>
#include "gauss_forge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "gauss_forge/error.hpp"
#include "planar.hpp"

namespace gauss_forge {

namespace {

constexpr double kRayTolerance = 1e-9;
constexpr double kEndpointTolerance = 1e-9;

Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

double max_extent(const PolyLink& link) {
  double e = 1.0;
  for (const auto& comp : link.components)
    for (const Vec3& v : comp) e = std::max({e, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
  return e;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

[[noreturn]] void degenerate(const std::string& what) { throw Error(ErrorCode::DegenerateProjection, what); }

}  // namespace

double ray_slope(int k, int count) noexcept { return count == 1 ? 0.0 : 1.0 - k; }

void validate(const PolyLink& link) {
  const int n = static_cast<int>(link.components.size());
  if (n == 0) throw Error(ErrorCode::Validation, "link has no components");
  if (link.closure == Closure::Long && n != 1 && n != 3)
    throw Error(ErrorCode::Validation, "a long link needs 1 or 3 components, got " + std::to_string(n));
  for (int k = 0; k < n; ++k) {
    const auto& comp = link.components[static_cast<std::size_t>(k)];
    const std::size_t needed = link.closure == Closure::Long ? 2 : 3;
    if (comp.size() < needed)
      throw Error(ErrorCode::Validation, "component " + std::to_string(k) + " has too few vertices");
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vec3& v = comp[i];
      if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        throw Error(ErrorCode::Validation, "non-finite vertex in component " + std::to_string(k));
      const bool wraps = link.closure == Closure::Closed;
      if ((i + 1 < comp.size() || wraps) && v == comp[(i + 1) % comp.size()])
        throw Error(ErrorCode::Validation, "repeated consecutive vertex in component " + std::to_string(k));
    }
    if (link.closure == Closure::Long) {
      const double c = ray_slope(k, n);
      auto on_ray = [&](const Vec3& v, bool left) {
        bool side = left ? v.x <= -1.0 + kRayTolerance : v.x >= 1.0 - kRayTolerance;
        double scale = std::max(1.0, std::abs(v.x));
        return side && std::abs(v.y - c * std::abs(v.x)) <= kRayTolerance * scale &&
               std::abs(v.z) <= kRayTolerance * scale;
      };
      if (!on_ray(comp.front(), true) || !on_ray(comp.back(), false))
        throw Error(ErrorCode::Validation, "component " + std::to_string(k) + " does not start and end on its rays");
    }
  }
}

double bbox_diameter(const PolyLink& link) {
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi = -1.0 * lo;
  bool any = false;
  for (const auto& comp : link.components) {
    for (const Vec3& v : comp) {
      any = true;
      lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
      hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
  }
  if (!any) return 0.0;
  Vec3 d = hi - lo;
  return std::sqrt(dot(d, d));
}

Projection project(const PolyLink& link) {
  Projection p;
  for (const auto& comp : link.components) {
    auto& planar = p.planar.emplace_back();
    auto& heights = p.heights.emplace_back();
    for (const Vec3& v : comp) {
      planar.push_back({v.x, v.y});
      heights.push_back(v.z);
    }
  }
  return p;
}

namespace detail {

std::vector<Segment> segments_of(const PolyLink& link) {
  std::vector<Segment> segs;
  const int n = static_cast<int>(link.components.size());
  const double reach = 2.0 * max_extent(link) + 2.0;
  for (int k = 0; k < n; ++k) {
    const auto& comp = link.components[static_cast<std::size_t>(k)];
    std::size_t order = 0;
    if (link.closure == Closure::Long) {
      const double c = ray_slope(k, n);
      segs.push_back({k, order++, {-reach, c * reach, 0.0}, comp.front()});
    }
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) segs.push_back({k, order++, comp[i], comp[i + 1]});
    if (link.closure == Closure::Long) {
      const double c = ray_slope(k, n);
      segs.push_back({k, order++, comp.back(), {reach, c * reach, 0.0}});
    } else {
      segs.push_back({k, order++, comp.back(), comp.front()});
    }
  }
  return segs;
}

bool adjacent(const PolyLink& link, const std::vector<Segment>& segs, std::size_t i, std::size_t j) {
  const Segment& a = segs[i];
  const Segment& b = segs[j];
  if (a.component != b.component) return false;
  std::size_t lo = std::min(a.order, b.order), hi = std::max(a.order, b.order);
  if (hi - lo == 1) return true;
  if (link.closure == Closure::Closed) {
    std::size_t count = link.components[static_cast<std::size_t>(a.component)].size();
    return lo == 0 && hi == count - 1;
  }
  return false;
}

namespace {

struct Hit {
  std::size_t s1, s2;
  double t1, t2;
  Vec2 point;
};

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

std::vector<Cluster> find_crossings(const PolyLink& link, const std::vector<Segment>& segs,
                                    const ExtractOptions& options, GenericityReport& report) {
  const double diam = std::max(bbox_diameter(link), 1e-300);
  const double eps = options.snap_eps > 0 ? options.snap_eps : kDefaultRelativeSnap * diam;

  std::vector<double> lengths(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    lengths[i] = std::hypot(segs[i].b.x - segs[i].a.x, segs[i].b.y - segs[i].a.y);
    if (lengths[i] <= 1e-12 * diam) degenerate("a segment projects to a point");
  }

  std::vector<Hit> hits;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double rx = segs[i].b.x - segs[i].a.x, ry = segs[i].b.y - segs[i].a.y;
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const double sx = segs[j].b.x - segs[j].a.x, sy = segs[j].b.y - segs[j].a.y;
      const double d = cross2(rx, ry, sx, sy);
      const bool parallel = std::abs(d) <= 1e-14 * lengths[i] * lengths[j];
      if (adjacent(link, segs, i, j)) {
        // Only an overlap can matter: the shared vertex is not a crossing.
        if (parallel && rx * sx + ry * sy < 0) degenerate("a strand doubles back on itself in projection");
        continue;
      }
      const double qx = segs[j].a.x - segs[i].a.x, qy = segs[j].a.y - segs[i].a.y;
      if (parallel) {
        if (std::abs(cross2(qx, qy, rx, ry)) > 1e-12 * lengths[i] * lengths[i]) continue;
        double len2 = rx * rx + ry * ry;
        double u0 = (qx * rx + qy * ry) / len2;
        double u1 = u0 + (sx * rx + sy * ry) / len2;
        if (std::max(0.0, std::min(u0, u1)) <= std::min(1.0, std::max(u0, u1)) + kEndpointTolerance)
          degenerate("collinear overlapping segments");
        continue;
      }
      const double t = cross2(qx, qy, sx, sy) / d;
      const double u = cross2(qx, qy, rx, ry) / d;
      if (t < -kEndpointTolerance || t > 1 + kEndpointTolerance || u < -kEndpointTolerance ||
          u > 1 + kEndpointTolerance)
        continue;
      if (t < kEndpointTolerance || t > 1 - kEndpointTolerance || u < kEndpointTolerance ||
          u > 1 - kEndpointTolerance)
        degenerate("a vertex lies on another segment in projection");
      hits.push_back({i, j, t, u, {segs[i].a.x + t * rx, segs[i].a.y + t * ry}});
    }
  }

  std::vector<std::size_t> parent(hits.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < hits.size(); ++a)
    for (std::size_t b = a + 1; b < hits.size(); ++b)
      if (distance(hits[a].point, hits[b].point) <= eps) parent[find_root(parent, b)] = find_root(parent, a);

  report = GenericityReport{};
  report.min_crossing_angle = std::numbers::pi / 2;
  report.min_height_gap = std::numeric_limits<double>::infinity();
  report.min_cluster_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < hits.size(); ++a) {
    for (std::size_t b = a + 1; b < hits.size(); ++b) {
      double dist = distance(hits[a].point, hits[b].point);
      bool same = find_root(parent, a) == find_root(parent, b);
      if (same && dist > eps) throw Error(ErrorCode::SnapAmbiguity, "a crossing cluster is wider than snap_eps");
      if (!same) {
        if (dist < 10 * eps)
          throw Error(ErrorCode::SnapAmbiguity, "two crossings lie between snap_eps and 10*snap_eps apart");
        report.min_cluster_separation = std::min(report.min_cluster_separation, dist);
      }
    }
  }

  std::vector<std::vector<std::size_t>> members(hits.size());
  for (std::size_t a = 0; a < hits.size(); ++a) members[find_root(parent, a)].push_back(a);

  std::vector<Cluster> clusters;
  for (const auto& group : members) {
    if (group.empty()) continue;
    std::vector<std::size_t> seg_ids;
    for (std::size_t h : group) {
      seg_ids.push_back(hits[h].s1);
      seg_ids.push_back(hits[h].s2);
    }
    std::sort(seg_ids.begin(), seg_ids.end());
    seg_ids.erase(std::unique(seg_ids.begin(), seg_ids.end()), seg_ids.end());
    const std::size_t m = seg_ids.size();
    if (group.size() != m * (m - 1) / 2) degenerate("segments meet a crossing cluster non-transversally");

    Cluster cluster;
    for (std::size_t h : group) {
      cluster.point.x += hits[h].point.x / static_cast<double>(group.size());
      cluster.point.y += hits[h].point.y / static_cast<double>(group.size());
    }
    for (std::size_t s : seg_ids) {
      double t = 0.0;
      int count = 0;
      for (std::size_t h : group) {
        if (hits[h].s1 == s) t += hits[h].t1, ++count;
        if (hits[h].s2 == s) t += hits[h].t2, ++count;
      }
      t /= count;
      const Segment& seg = segs[s];
      cluster.passes.push_back(
          {s, t, std::atan2(seg.b.y - seg.a.y, seg.b.x - seg.a.x), seg.a.z + t * (seg.b.z - seg.a.z)});
    }
    std::sort(cluster.passes.begin(), cluster.passes.end(), [&](const ClusterPass& p, const ClusterPass& q) {
      const Segment& a = segs[p.segment];
      const Segment& b = segs[q.segment];
      if (a.component != b.component) return a.component < b.component;
      if (a.order != b.order) return a.order < b.order;
      return p.t < q.t;
    });

    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        double s = std::abs(std::sin(cluster.passes[p].angle - cluster.passes[q].angle));
        double angle = std::asin(std::min(1.0, s));
        if (angle < options.min_angle) degenerate("crossing angle below min_angle");
        report.min_crossing_angle = std::min(report.min_crossing_angle, angle);
        double gap = std::abs(cluster.passes[p].height - cluster.passes[q].height);
        if (gap < options.min_height_gap * diam) degenerate("height gap below min_height_gap");
        report.min_height_gap = std::min(report.min_height_gap, gap);
      }
    }
    report.max_multiplicity = std::max(report.max_multiplicity, m);
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(), [&](const Cluster& a, const Cluster& b) {
    const ClusterPass& p = a.passes.front();
    const ClusterPass& q = b.passes.front();
    const Segment& s = segs[p.segment];
    const Segment& t = segs[q.segment];
    if (s.component != t.component) return s.component < t.component;
    if (s.order != t.order) return s.order < t.order;
    return p.t < q.t;
  });
  report.crossing_count = clusters.size();
  return clusters;
}

}  // namespace detail

Extraction extract_diagram(const PolyLink& link, const ExtractOptions& options) {
  validate(link);
  if (link.closure != Closure::Long) throw Error(ErrorCode::Validation, "extract_diagram needs a long link");
  const auto segs = detail::segments_of(link);
  Extraction out;
  const auto clusters = detail::find_crossings(link, segs, options, out.report);

  // Rank every pass along its strand; segments are in traversal order.
  struct Key {
    int strand;
    std::size_t order;
    double t;
    std::size_t cluster, pass;
  };
  std::vector<Key> keys;
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (std::size_t p = 0; p < clusters[c].passes.size(); ++p) {
      const auto& cp = clusters[c].passes[p];
      keys.push_back({segs[cp.segment].component, segs[cp.segment].order, cp.t, c, p});
    }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.strand != b.strand) return a.strand < b.strand;
    if (a.order != b.order) return a.order < b.order;
    return a.t < b.t;
  });
  std::vector<std::vector<long>> rank(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) rank[c].resize(clusters[c].passes.size());
  long next = 0;
  int strand = -1;
  for (const Key& k : keys) {
    if (k.strand != strand) strand = k.strand, next = 0;
    rank[k.cluster][k.pass] = ++next;
  }

  const int width = std::max<int>(3, static_cast<int>(std::to_string(clusters.size()).size()));
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    Crossing x;
    std::string digits = std::to_string(c);
    x.id = "c" + std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(width, digits.size()), '0') + digits;
    const auto& passes = clusters[c].passes;
    std::vector<std::size_t> by_height(passes.size());
    std::iota(by_height.begin(), by_height.end(), 0);
    std::sort(by_height.begin(), by_height.end(),
              [&](std::size_t a, std::size_t b) { return passes[a].height < passes[b].height; });
    std::vector<long> height_rank(passes.size());
    for (std::size_t r = 0; r < by_height.size(); ++r) height_rank[by_height[r]] = static_cast<long>(r);
    for (std::size_t p = 0; p < passes.size(); ++p)
      x.passes.push_back({{segs[passes[p].segment].component, Rational(rank[c][p])}, passes[p].angle,
                          Rational(height_rank[p])});
    crossings.push_back(std::move(x));
  }
  const DiagramKind kind = link.components.size() == 1 ? DiagramKind::LongKnot : DiagramKind::LongLink3;
  out.diagram = build_diagram(kind, std::move(crossings));
  return out;
}

namespace {

// Closed triangle against closed segment, with a small inclusive margin.
// Triangle and segment in one plane with normal n: 2D overlap test in the
// plane's dominant projection. Touching counts as overlap.
bool coplanar_overlap(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 q0, Vec3 q1, Vec3 n) {
  const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
  auto flat = [&](Vec3 v) -> std::array<double, 2> {
    if (az >= ax && az >= ay) return {v.x, v.y};
    if (ay >= ax) return {v.z, v.x};
    return {v.y, v.z};
  };
  const std::array<std::array<double, 2>, 3> t{flat(p0), flat(p1), flat(p2)};
  const auto a = flat(q0), b = flat(q1);
  auto orient = [](std::array<double, 2> o, std::array<double, 2> u, std::array<double, 2> v) {
    return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0]);
  };
  auto inside = [&](std::array<double, 2> x) {
    const double d0 = orient(t[0], t[1], x), d1 = orient(t[1], t[2], x), d2 = orient(t[2], t[0], x);
    return (d0 >= 0 && d1 >= 0 && d2 >= 0) || (d0 <= 0 && d1 <= 0 && d2 <= 0);
  };
  if (inside(a) || inside(b)) return true;
  for (int e = 0; e < 3; ++e) {
    const auto u = t[static_cast<std::size_t>(e)], v = t[static_cast<std::size_t>((e + 1) % 3)];
    const double o1 = orient(u, v, a), o2 = orient(u, v, b), o3 = orient(a, b, u), o4 = orient(a, b, v);
    if (((o1 <= 0 && o2 >= 0) || (o1 >= 0 && o2 <= 0)) && ((o3 <= 0 && o4 >= 0) || (o3 >= 0 && o4 <= 0))) {
      // collinear pieces need an extent check
      if (o1 == 0 && o2 == 0) {
        auto lo = [](double x, double y) { return std::min(x, y); };
        auto hi = [](double x, double y) { return std::max(x, y); };
        if (hi(a[0], b[0]) < lo(u[0], v[0]) || hi(u[0], v[0]) < lo(a[0], b[0])) continue;
        if (hi(a[1], b[1]) < lo(u[1], v[1]) || hi(u[1], v[1]) < lo(a[1], b[1])) continue;
      }
      return true;
    }
  }
  return false;
}

bool triangle_meets_segment(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 q0, Vec3 q1) {
  const Vec3 e1 = p1 - p0, e2 = p2 - p0;
  const Vec3 dir = q1 - q0;
  const Vec3 n = cross(e1, e2);
  const double scale = std::sqrt(dot(n, n));
  if (scale == 0.0) return false;
  const double margin = 1e-12;
  const Vec3 h = cross(dir, e2);
  const double det = dot(e1, h);
  if (std::abs(det) <= 1e-14 * scale * std::sqrt(dot(dir, dir))) {
    // Segment parallel to the plane: it only matters if it lies in it.
    double off = dot(q0 - p0, n) / scale;
    if (std::abs(off) > margin * std::max(1.0, std::sqrt(dot(dir, dir)))) return false;
    return coplanar_overlap(p0, p1, p2, q0, q1, n);
  }
  const double inv = 1.0 / det;
  const Vec3 s = q0 - p0;
  const double u = inv * dot(s, h);
  if (u < -margin || u > 1 + margin) return false;
  const Vec3 qv = cross(s, e1);
  const double v = inv * dot(dir, qv);
  if (v < -margin || u + v > 1 + margin) return false;
  const double t = inv * dot(e2, qv);
  return t >= -margin && t <= 1 + margin;
}

}  // namespace

PolyLink perturb(const PolyLink& link, double magnitude, std::uint64_t seed, bool subdivide) {
  validate(link);
  PolyLink out = link;
  if (subdivide) {
    for (auto& comp : out.components) {
      std::vector<Vec3> refined;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        refined.push_back(comp[i]);
        bool last = i + 1 == comp.size();
        if (last && out.closure == Closure::Long) break;
        refined.push_back(0.5 * (comp[i] + comp[(i + 1) % comp.size()]));
      }
      comp = std::move(refined);
    }
  }
  if (magnitude == 0.0) return out;
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) throw Error(ErrorCode::Validation, "magnitude must be >= 0");

  std::mt19937_64 rng(seed);
  const bool closed = out.closure == Closure::Closed;
  for (std::size_t k = 0; k < out.components.size(); ++k) {
    auto& comp = out.components[k];
    const std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i) {
      Vec3 d{(2 * detail::uniform01(rng) - 1) * magnitude, (2 * detail::uniform01(rng) - 1) * magnitude,
             (2 * detail::uniform01(rng) - 1) * magnitude};
      if (!closed && (i == 0 || i + 1 == n)) continue;
      const Vec3 v = comp[i];
      const Vec3 moved = v + d;
      const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
      const Vec3 a = comp[prev], b = comp[next];
      if (moved == a || moved == b) throw Error(ErrorCode::IsotopyViolation, "vertex moved onto a neighbour");

      const auto segs = detail::segments_of(out);
      for (const auto& s : segs) {
        if (s.component == static_cast<int>(k)) {
          // The segment index of edge (i, i+1) along the component.
          const std::size_t base = closed ? 0 : 1;
          const std::size_t into = base + prev, outof = base + i;
          if (s.order == into || s.order == outof) continue;
          const bool touches_a = s.order + 1 == into || (closed && (s.order + 1) % n == into % n);
          const bool touches_b = s.order == outof + 1 || (closed && s.order == (outof + 1) % n);
          if (!touches_a && triangle_meets_segment(a, v, moved, s.a, s.b))
            throw Error(ErrorCode::IsotopyViolation, "vertex move sweeps through another segment");
          if (!touches_b && triangle_meets_segment(v, moved, b, s.a, s.b))
            throw Error(ErrorCode::IsotopyViolation, "vertex move sweeps through another segment");
          continue;
        }
        if (triangle_meets_segment(a, v, moved, s.a, s.b) || triangle_meets_segment(v, moved, b, s.a, s.b))
          throw Error(ErrorCode::IsotopyViolation, "vertex move sweeps through another strand");
      }
      comp[i] = moved;
    }
  }
  return out;
}

PolyLink random_long_link(std::uint64_t seed, int components, int segments, const RandomLinkOptions& options) {
  if (components != 1 && components != 3) throw Error(ErrorCode::Validation, "components must be 1 or 3");
  if (segments < 1) throw Error(ErrorCode::Validation, "segments_per_component must be positive");
  const int m = options.forced_multiplicity;
  if (m >= 3) {
    const int per_comp = segments / 2 - (segments % 2 == 0 ? 1 : 0);
    if (per_comp * components < m)
      throw Error(ErrorCode::Validation, "too few segments for the forced multiplicity");
  }

  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * detail::uniform01(rng); };
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    PolyLink link;
    for (int k = 0; k < components; ++k) {
      const double c = ray_slope(k, components);
      auto& comp = link.components.emplace_back();
      comp.push_back({-1.0, c, 0.0});
      for (int i = 1; i < segments; ++i) comp.push_back({uniform(-0.9, 0.9), uniform(-1.2, 1.2), uniform(-1.0, 1.0)});
      comp.push_back({1.0, c, 0.0});
    }
    if (m >= 3) {
      // Segments whose endpoints are both free, pairwise sharing no vertex.
      std::vector<std::pair<int, int>> candidates;
      for (int k = 0; k < components; ++k)
        for (int i = 1; i + 1 < segments; ++i) candidates.emplace_back(k, i);
      std::shuffle(candidates.begin(), candidates.end(), rng);
      std::vector<std::pair<int, int>> chosen;
      for (auto cand : candidates) {
        bool clash = std::any_of(chosen.begin(), chosen.end(), [&](auto c) {
          return c.first == cand.first && std::abs(c.second - cand.second) < 2;
        });
        if (!clash) chosen.push_back(cand);
        if (static_cast<int>(chosen.size()) == m) break;
      }
      if (static_cast<int>(chosen.size()) < m) continue;
      const double px = uniform(-0.3, 0.3), py = uniform(-0.3, 0.3);
      for (auto [k, i] : chosen) {
        const double phi = uniform(0.0, 2 * std::numbers::pi);
        const double r1 = uniform(0.15, 0.6), r2 = uniform(0.15, 0.6), h = uniform(-1.0, 1.0);
        auto& comp = link.components[static_cast<std::size_t>(k)];
        comp[static_cast<std::size_t>(i)] = {px - r1 * std::cos(phi), py - r1 * std::sin(phi), h};
        comp[static_cast<std::size_t>(i) + 1] = {px + r2 * std::cos(phi), py + r2 * std::sin(phi), h};
      }
    }
    try {
      Extraction e = extract_diagram(link);
      if (m >= 3 && e.report.max_multiplicity != static_cast<std::size_t>(m)) continue;
      if (options.max_chords != 0 && e.diagram.chords().size() > options.max_chords) continue;
      return link;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DegenerateProjection && err.code() != ErrorCode::SnapAmbiguity &&
          err.code() != ErrorCode::Validation)
        throw;
    }
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no generic sample after " + std::to_string(options.max_attempts) + " attempts");
}

PolyLink braid_long_link(std::span<const BraidLetter> word) {
  PolyLink link;
  link.components.resize(3);
  std::array<int, 3> level{0, 1, 2};  // strand -> current level
  auto y_of = [](int lvl) { return 1.0 - lvl; };
  for (int k = 0; k < 3; ++k) link.components[static_cast<std::size_t>(k)].push_back({-1.0, y_of(k), 0.0});

  const double w = word.empty() ? 2.0 : 2.0 / static_cast<double>(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    const BraidLetter& letter = word[j];
    const double x0 = -1.0 + w * static_cast<double>(j);
    const double x1 = j + 1 == word.size() ? 1.0 : x0 + w;
    std::array<int, 3> target = level;
    std::array<double, 3> z{0.0, 0.0, 0.0};
    if (letter.kind == BraidLetter::Kind::Sigma) {
      if (letter.index != 0 && letter.index != 1) throw Error(ErrorCode::Validation, "sigma index must be 0 or 1");
      for (int k = 0; k < 3; ++k) {
        if (level[k] == letter.index) {
          target[k] = letter.index + 1;
          z[k] = letter.upper_over ? 0.5 : -0.5;
        } else if (level[k] == letter.index + 1) {
          target[k] = letter.index;
          z[k] = letter.upper_over ? -0.5 : 0.5;
        }
      }
    } else {
      const auto& h = letter.heights;
      if (h[0] == h[1] || h[1] == h[2] || h[0] == h[2]) throw Error(ErrorCode::Validation, "triple heights must differ");
      for (int k = 0; k < 3; ++k) {
        const int lvl = level[k];
        const int below = static_cast<int>(std::count_if(h.begin(), h.end(), [&](int v) { return v < h[lvl]; }));
        target[k] = 2 - lvl;
        z[k] = 0.5 * (below - 1);
      }
    }
    for (int k = 0; k < 3; ++k) {
      auto& comp = link.components[static_cast<std::size_t>(k)];
      const double ya = y_of(level[k]), yb = y_of(target[k]);
      if (ya != yb || z[k] != 0.0) {
        comp.push_back({x0 + 0.25 * (x1 - x0), ya + 0.25 * (yb - ya), z[k]});
        comp.push_back({x0 + 0.75 * (x1 - x0), ya + 0.75 * (yb - ya), z[k]});
      }
      comp.push_back({x1, yb, 0.0});
    }
    level = target;
  }
  if (word.empty())
    for (int k = 0; k < 3; ++k) link.components[static_cast<std::size_t>(k)].push_back({1.0, y_of(k), 0.0});
  for (int k = 0; k < 3; ++k)
    if (level[k] != k) throw Error(ErrorCode::Validation, "braid word is not pure");
  validate(link);
  return link;
}

PolyLink close_long_link(const PolyLink& link) {
  if (link.closure == Closure::Closed) return link;
  validate(link);
  const int n = static_cast<int>(link.components.size());
  const double r1 = 2.0 * max_extent(link) + 2.0;
  const double r2 = 2.0 * r1;
  constexpr int kArcPoints = 16;
  PolyLink out{Closure::Closed, {}};
  for (int k = 0; k < n; ++k) {
    const double c = ray_slope(k, n);
    std::vector<Vec3> comp = link.components[static_cast<std::size_t>(k)];
    // The straight strand closes outside the arc above it.
    const double reach = c == 0.0 ? (n == 1 ? r1 : r2) : r1;
    const double radius = std::hypot(reach, c * reach);
    // Right ray end to left ray end, over the top for c >= 0, else underneath.
    const double start = std::atan2(c * reach, reach);
    const double end = c < 0 ? -std::numbers::pi - start : std::numbers::pi - start;
    comp.push_back({reach, c * reach, 0.0});
    for (int i = 1; i < kArcPoints; ++i) {
      double a = start + (end - start) * i / kArcPoints;
      comp.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
    }
    comp.push_back({-reach, c * reach, 0.0});
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace gauss_forge
