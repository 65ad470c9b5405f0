#pragma once

// Segment arrangement shared by long-diagram extraction and PD construction.

#include <cstddef>
#include <vector>

#include "gauss_forge/geometry.hpp"

namespace gauss_forge::detail {

struct Segment {
  int component = 0;
  std::size_t order = 0;  // position along the component
  Vec3 a, b;
};

/// Segments in traversal order; long components get their rays as a first
/// and last segment reaching `reach` in |x|.
std::vector<Segment> segments_of(const PolyLink& link);

bool adjacent(const PolyLink& link, const std::vector<Segment>& segs, std::size_t i, std::size_t j);

struct ClusterPass {
  std::size_t segment = 0;
  double t = 0.0;
  double angle = 0.0;
  double height = 0.0;
};

struct Cluster {
  Vec2 point;
  std::vector<ClusterPass> passes;  // sorted by (component, order, t)
};

/// All crossings of the projection after snapping, with every genericity
/// check applied. Clusters come sorted by their first pass.
std::vector<Cluster> find_crossings(const PolyLink& link, const std::vector<Segment>& segs,
                                    const ExtractOptions& options, GenericityReport& report);

/// Uniform double in [0, 1) from the top 53 bits.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace gauss_forge::detail
