#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gauss_forge/gauss.hpp"

namespace gauss_forge {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

enum class Closure { Long, Closed };

/// Polygonal link in 3-space. A long component k (0-based, of n = 1 or 3)
/// must start on the ray {(x, c|x|, 0) : x <= -1} and end on the ray
/// {(x, c|x|, 0) : x >= 1} with c = 0 for a knot and c = 1 - k for a link;
/// the rays themselves are implied and take part in crossing extraction.
struct PolyLink {
  Closure closure = Closure::Long;
  std::vector<std::vector<Vec3>> components;

  friend bool operator==(const PolyLink&, const PolyLink&) = default;
};

/// Throws Error(Validation) on empty components, repeated consecutive
/// vertices, or long components that miss their prescribed rays.
void validate(const PolyLink& link);

/// Slope c of the implied rays of long component `k` out of `count`.
double ray_slope(int k, int count) noexcept;

/// Diagonal of the bounding box of the vertices (the implied rays excluded).
double bbox_diameter(const PolyLink& link);

/// Planar coordinates and heights, vertex-aligned with the input.
struct Projection {
  std::vector<std::vector<Vec2>> planar;
  std::vector<std::vector<double>> heights;
};

Projection project(const PolyLink& link);

struct GenericityReport {
  double min_crossing_angle = 0.0;      // radians, angle between tangent lines
  double min_height_gap = 0.0;          // smallest height difference inside a crossing
  double min_cluster_separation = 0.0;  // planar distance between distinct crossings
  std::size_t crossing_count = 0;
  std::size_t max_multiplicity = 0;
};

struct ExtractOptions {
  /// Absolute snapping radius; a non-positive value selects
  /// 1e-6 * bbox_diameter(link).
  double snap_eps = 0.0;
  double min_angle = 1e-5;
  /// Relative to bbox_diameter(link).
  double min_height_gap = 1e-9;
};

inline constexpr double kDefaultRelativeSnap = 1e-6;

struct Extraction {
  GaussDiagram diagram;
  GenericityReport report;
};

/// Computes every planar intersection of the link's segments (implied rays
/// included), merges points closer than snap_eps into multiple crossings and
/// converts arclength positions and heights to exact ranks.
/// Throws DegenerateProjection or SnapAmbiguity.
Extraction extract_diagram(const PolyLink& link, const ExtractOptions& options = {});

/// Sequential vertex jitter of size <= magnitude (uniform per coordinate);
/// every single-vertex move is checked by sweeping the two incident edges.
/// Long endpoints stay fixed. With `subdivide`, every edge first gets its
/// midpoint as an extra vertex. Throws IsotopyViolation.
PolyLink perturb(const PolyLink& link, double magnitude, std::uint64_t seed, bool subdivide = false);

struct RandomLinkOptions {
  /// When >= 3, that many segments are routed through one common point so the
  /// diagram carries a multiple crossing of this multiplicity.
  int forced_multiplicity = 0;
  int max_attempts = 2000;
  /// Reject samples whose diagram has more chords than this (0 = no limit).
  std::size_t max_chords = 0;
};

/// Deterministic pseudo-random long knot (components == 1) or long
/// 3-component link. Resamples until extract_diagram succeeds with default
/// tolerances. Throws GenerationExhausted.
PolyLink random_long_link(std::uint64_t seed, int components, int segments_per_component,
                          const RandomLinkOptions& options = {});

/// One column of a 3-strand braid drawn left to right with strand k starting
/// at y = 1 - k. A `Sigma` letter exchanges levels `index` and `index + 1`
/// (index in {0, 1}); `upper_over` puts the strand coming from the upper level
/// on top. A `Triple` letter reverses the three levels through one point; the
/// strand entering at level i gets height `heights[i]`.
struct BraidLetter {
  enum class Kind { Sigma, Triple };
  Kind kind = Kind::Sigma;
  int index = 0;
  bool upper_over = true;
  std::array<int, 3> heights{0, 1, 2};
};

/// Long 3-component link drawn from a pure braid word. Throws Validation when
/// the word does not return every strand to its starting level.
PolyLink braid_long_link(std::span<const BraidLetter> word);

/// Closed polygons obtained by running each long component along its rays and
/// around a large planar arc; the added pieces meet nothing in projection.
/// Closed input is returned unchanged.
PolyLink close_long_link(const PolyLink& link);

}  // namespace gauss_forge
