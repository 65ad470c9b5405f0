#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "gauss_forge/gauss.hpp"

namespace gauss_forge {

/// Two-chord arrow-diagram patterns. The first four apply to long knots,
/// the remaining six to long 3-component links.
enum class Pattern {
  X,
  X1p,
  X2p,
  X3p,
  Xc1,
  Xc2,
  Xc3,
  Xc1p,
  Xc2p,
  Xc3p,
};

inline constexpr std::array<Pattern, 4> kKnotPatterns = {Pattern::X, Pattern::X1p, Pattern::X2p,
                                                         Pattern::X3p};
inline constexpr std::array<Pattern, 6> kLinkPatterns = {Pattern::Xc1,  Pattern::Xc2,  Pattern::Xc3,
                                                         Pattern::Xc1p, Pattern::Xc2p, Pattern::Xc3p};

/// Stable key used in data files ("X", "X1p", ..., "Xc3p").
std::string_view pattern_key(Pattern pattern) noexcept;
/// Display label used by the CLI ("X", "X1'", ..., "Xc3'").
std::string_view pattern_label(Pattern pattern) noexcept;
bool is_primed(Pattern pattern) noexcept;

/// Whether the unordered chord pair {a, b} forms the given pattern.
bool matches(Pattern pattern, const GaussDiagram& diagram, const Chord& a, const Chord& b);

/// The unique pattern formed by {a, b}, if any, among the patterns for the
/// diagram's kind.
std::optional<Pattern> classify_pair(const GaussDiagram& diagram, const Chord& a, const Chord& b);

/// Signed pairing values <P, G_D> for one diagram kind.
class PatternCounts {
 public:
  explicit PatternCounts(DiagramKind kind) : kind_(kind) {}

  DiagramKind kind() const noexcept { return kind_; }
  long long operator[](Pattern p) const { return values_[static_cast<std::size_t>(p)]; }
  void add(Pattern p, long long v) { values_[static_cast<std::size_t>(p)] += v; }

  friend bool operator==(const PatternCounts&, const PatternCounts&) = default;

 private:
  DiagramKind kind_;
  std::array<long long, 10> values_{};
};

PatternCounts count_knot_patterns(const GaussDiagram& diagram);
PatternCounts count_link_patterns(const GaussDiagram& diagram);
/// Dispatches on the diagram kind.
PatternCounts count_patterns(const GaussDiagram& diagram);

/// <X> + (<X'_1> + <X'_2> + <X'_3>)/2, exact.
Rational casson_value(const PatternCounts& counts);
/// sum_k <Xc_k> + (sum_k <Xc'_k>)/2, exact.
Rational mu123_value(const PatternCounts& counts);

/// Casson invariant of a long knot diagram (multiple crossings allowed).
/// Throws KindMismatch, or NonIntegerInvariant if the half-sum is fractional.
long long casson(const GaussDiagram& diagram);

/// Milnor triple linking number of a long 3-component link diagram.
long long mu123(const GaussDiagram& diagram);

/// Sum of signs of chords running from strand i (under) to strand j (over).
long long linking(const GaussDiagram& diagram, int i, int j);

}  // namespace gauss_forge
