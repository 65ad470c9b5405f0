#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gauss_forge/gauss.hpp"
#include "gauss_forge/geometry.hpp"

namespace gauss_forge {

/// One planar-diagram crossing: the four incident arc labels counterclockwise
/// starting from the incoming under-arc, plus the crossing sign. The under
/// strand runs arcs[0] -> arcs[2]; the over strand runs arcs[3] -> arcs[1]
/// for a positive crossing and arcs[1] -> arcs[3] for a negative one.
struct PdCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

/// A visit of a component to a crossing while traversing the link.
struct Visit {
  std::size_t crossing = 0;
  bool over = false;

  friend bool operator==(const Visit&, const Visit&) = default;
};

/// Closed link diagram in planar-diagram form together with its component
/// traversals. Components are ordered by their smallest arc label and each
/// cycle starts at the crossing entered through that label; crossingless
/// components come last.
class ClosedDiagram {
 public:
  ClosedDiagram() = default;

  /// Throws Error(Validation) unless every label occurs exactly once as an
  /// incoming and once as an outgoing slot.
  static ClosedDiagram from_pd(std::vector<PdCrossing> crossings, std::size_t crossingless_components = 0);

  const std::vector<PdCrossing>& crossings() const noexcept { return crossings_; }
  const std::vector<std::vector<Visit>>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossingless_components() const noexcept { return crossingless_; }
  /// Component that passes under (resp. over) at crossing c.
  std::size_t under_component(std::size_t c) const { return under_component_[c]; }
  std::size_t over_component(std::size_t c) const { return over_component_[c]; }

  friend bool operator==(const ClosedDiagram& a, const ClosedDiagram& b) {
    return a.crossings_ == b.crossings_ && a.crossingless_ == b.crossingless_;
  }

 private:
  std::vector<PdCrossing> crossings_;
  std::size_t crossingless_ = 0;
  std::vector<std::vector<Visit>> components_;
  std::vector<std::size_t> under_component_;
  std::vector<std::size_t> over_component_;
};

/// Text format: one crossing per line "X a b c d +" (or "-"), blank lines and
/// lines starting with '#' ignored, and an optional "components N" line giving
/// the total component count when some components have no crossings.
ClosedDiagram parse_pd(std::string_view text);
std::string format_pd(const ClosedDiagram& diagram);

/// Closure of a long diagram with double crossings only: strand order becomes
/// cyclic order. Throws Error(Validation) on multiple crossings.
ClosedDiagram closure(const GaussDiagram& diagram);

/// Long knot diagram obtained by cutting a one-component closed diagram at the
/// start of its smallest arc label.
GaussDiagram cut_open(const ClosedDiagram& diagram);

/// Planar diagram of a polygonal link (long input is closed first). Throws
/// DegenerateProjection when the projection has a multiple crossing.
ClosedDiagram closed_diagram_from_polylink(const PolyLink& link, const ExtractOptions& options = {});

/// Sum of signs at crossings where component i passes under component j.
long long closed_linking(const ClosedDiagram& diagram, std::size_t i, std::size_t j);

}  // namespace gauss_forge
