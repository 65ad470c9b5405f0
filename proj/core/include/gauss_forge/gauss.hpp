#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauss_forge/rational.hpp"

namespace gauss_forge {

enum class DiagramKind { LongKnot, LongLink3 };

std::string_view kind_name(DiagramKind kind) noexcept;
std::optional<DiagramKind> parse_kind(std::string_view name) noexcept;
int strand_count(DiagramKind kind) noexcept;

/// A position on one strand of a long knot/link. Strands are indexed from 0;
/// a long 3-component link orders them as f_1, f_2, f_3.
struct StrandPoint {
  int strand = 0;
  Rational param;

  friend bool operator==(const StrandPoint&, const StrandPoint&) = default;
  friend bool operator<(const StrandPoint& a, const StrandPoint& b) {
    return a.strand != b.strand ? a.strand < b.strand : a.param < b.param;
  }
};

/// One strand passing through a crossing. `angle` is the planar tangent
/// direction (radians) taken in the direction of increasing `param`;
/// `height` is the vertical coordinate at the crossing.
struct Pass {
  StrandPoint point;
  double angle = 0.0;
  Rational height;

  friend bool operator==(const Pass&, const Pass&) = default;
};

/// A transverse m-fold crossing (m >= 2).
struct Crossing {
  std::string id;
  std::vector<Pass> passes;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PassRef {
  std::size_t crossing = 0;
  std::size_t pass = 0;

  friend bool operator==(const PassRef&, const PassRef&) = default;
};

/// A double crossing seen as an arrow from the lower pass to the upper pass.
struct Chord {
  PassRef under;
  PassRef over;
  int sign = 1;

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Exact planar direction of a pass: (cos angle, sin angle) evaluated in
/// double precision and then read as exact dyadic rationals. Every sign and
/// every resolution ordering is derived from these same two numbers.
struct Direction {
  double x = 1.0;
  double y = 0.0;
};

Direction direction_of(double angle) noexcept;

/// Exact sign of det(a, b); 0 only for exactly parallel vectors.
int det_sign(Direction a, Direction b);

/// Smallest |sin| of the angle between two passes' tangent lines below which
/// a crossing is rejected as non-transverse.
inline constexpr double kTransversalityTolerance = 1e-9;

/// One chord per unordered pass pair, oriented from the lower to the higher
/// pass; sign +1 iff det(tangent_over, tangent_under) > 0. `crossing_index` is
/// written into the PassRefs. Throws DegenerateHeight / NonTransverse.
std::vector<Chord> derive_chords(const Crossing& crossing, std::size_t crossing_index = 0);

/// Validated Gauss diagram of a long knot or a long 3-component link.
/// Crossings are kept sorted by id; chords are the union of derive_chords
/// over all crossings, in crossing order. Immutable after construction.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  DiagramKind kind() const noexcept { return kind_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Chord>& chords() const noexcept { return chords_; }

  const Pass& pass(PassRef ref) const { return crossings_[ref.crossing].passes[ref.pass]; }
  const StrandPoint& point(PassRef ref) const { return pass(ref).point; }
  /// Position of the pass among all passes on its strand (0-based).
  std::size_t rank(PassRef ref) const { return ranks_[ref.crossing][ref.pass]; }
  /// Number of passes on `strand`.
  std::size_t strand_size(int strand) const;

  std::optional<std::size_t> find(std::string_view crossing_id) const;

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.kind_ == b.kind_ && a.crossings_ == b.crossings_;
  }

 private:
  friend GaussDiagram build_diagram(DiagramKind kind, std::vector<Crossing> crossings);

  DiagramKind kind_ = DiagramKind::LongKnot;
  std::vector<Crossing> crossings_;
  std::vector<Chord> chords_;
  std::vector<std::vector<std::size_t>> ranks_;
  std::vector<std::size_t> strand_sizes_;
};

/// Validates and derives chords. Throws Error(Validation) for bad strand
/// indices, duplicate params on a strand, duplicate ids or crossings with
/// fewer than two passes; DegenerateHeight / NonTransverse from derive_chords.
GaussDiagram build_diagram(DiagramKind kind, std::vector<Crossing> crossings);

/// Negates every height: each chord reverses and changes sign.
GaussDiagram mirror(const GaussDiagram& diagram);

/// Adds a Reidemeister-I kink: a double crossing whose two passes sit at
/// `location` and at a parameter strictly between `location` and the next
/// pass on the strand. Throws ParamCollision if `location` is taken.
GaussDiagram insert_kink(const GaussDiagram& diagram, int strand, const Rational& location, int sign);

/// Sum over crossings of m(m-1)/2.
std::size_t expected_chord_count(const GaussDiagram& diagram);

}  // namespace gauss_forge
