#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gauss_forge/closed_diagram.hpp"
#include "gauss_forge/geometry.hpp"

namespace gauss_forge {

/// Integer polynomial in z; coeffs[k] multiplies z^k. Trailing zeros trimmed.
struct ConwayPoly {
  std::vector<long long> coeffs;

  long long coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }
  /// Ascending powers: "1 + z^2", "2z - z^3", "0".
  std::string to_string() const;

  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;
};

inline constexpr std::size_t kDefaultSkeinLimit = 12;
inline constexpr std::size_t kDefaultMagnusLimit = 400;

/// Alexander-Conway polynomial via the skein relation
/// C(L+) - C(L-) = z C(L0), switching the first crossing first met from
/// below along a fixed traversal until the diagram is descending.
/// Throws SizeLimit above `max_crossings`.
ConwayPoly conway(const ClosedDiagram& diagram, std::size_t max_crossings = kDefaultSkeinLimit);

/// Coefficient of z^2 of the Conway polynomial of a knot.
long long casson_oracle(const ClosedDiagram& diagram, std::size_t max_crossings = kDefaultSkeinLimit);

/// Coefficient of X_i X_j in the Magnus expansion (truncated at degree 2) of
/// the longitude of component k, 0-based. Requires vanishing pairwise
/// linking numbers (NonzeroPairwiseLinking) and three components.
long long magnus_mu(const ClosedDiagram& diagram, std::size_t i, std::size_t j, std::size_t k,
                    std::size_t max_crossings = kDefaultMagnusLimit);

/// magnus_mu(d, 0, 1, 2).
long long magnus_mu123(const ClosedDiagram& diagram, std::size_t max_crossings = kDefaultMagnusLimit);

/// Gauss linking integral of two closed polygons (last vertex joins the
/// first), evaluated exactly per segment pair as a signed spherical
/// quadrilateral area over 4 pi. Throws IntersectingInputs.
double gauss_linking_integral(std::span<const Vec3> a, std::span<const Vec3> b);

}  // namespace gauss_forge
