#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gauss_forge/gauss.hpp"

namespace gauss_forge {

enum class ChordDirection { Left, Right };

/// Type (direction, s1, s2, s3) of a triple point. With the passes ordered
/// a < b < c (by strand, then param), s1 is the sign of the chord joining a
/// and c, s2 of the chord joining a and b, s3 of the chord joining b and c.
/// `direction` is Left when the a-c chord runs from c to a.
struct TriplePointType {
  ChordDirection direction = ChordDirection::Left;
  std::array<int, 3> signs{1, 1, 1};

  friend bool operator==(const TriplePointType&, const TriplePointType&) = default;
};

/// "(<-,+,+,+)" / "(->,-,+,-)".
std::string to_string(const TriplePointType& type);

/// Throws NotATriple unless the crossing has exactly three passes.
TriplePointType classify_triple(const Crossing& crossing);

/// Normal displacement of each pass's planar line, indexed like the passes.
struct OffsetAssignment {
  std::vector<Rational> offsets;
};

/// Replaces a multiple crossing by the planar arrangement of its passes'
/// lines shifted by `offsets`. Coincident intersection points become smaller
/// multiple crossings; heights, angles and hence every chord are inherited.
/// New params are the old ones moved by a scale small enough that no other
/// pass on the same strand is overtaken.
GaussDiagram split_crossing(const GaussDiagram& diagram, std::string_view crossing_id,
                            const OffsetAssignment& offsets);

/// As split_crossing, but requires a generic arrangement: the m-fold crossing
/// becomes exactly m(m-1)/2 double crossings. Throws NonGenericOffsets.
GaussDiagram resolve_crossing(const GaussDiagram& diagram, std::string_view crossing_id,
                              const OffsetAssignment& offsets);

/// Moves a single pass off an m-fold crossing: the result holds an
/// (m-1)-fold crossing plus m-1 double crossings. `offset` must be nonzero.
GaussDiagram resolve_pass(const GaussDiagram& diagram, std::string_view crossing_id,
                          std::size_t pass_index, const Rational& offset);

/// Generic pseudo-random offsets for m passes, deterministic in `seed`.
OffsetAssignment random_offsets(std::size_t m, std::uint64_t seed);

/// Resolves every crossing of multiplicity >= 3 with offsets drawn from
/// `seed`; the result has only double crossings.
GaussDiagram resolve_all(const GaussDiagram& diagram, std::uint64_t seed);

}  // namespace gauss_forge
