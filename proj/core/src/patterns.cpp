#include "gauss_forge/patterns.hpp"

#include "gauss_forge/error.hpp"

namespace gauss_forge {

std::string_view pattern_key(Pattern pattern) noexcept {
  switch (pattern) {
    case Pattern::X: return "X";
    case Pattern::X1p: return "X1p";
    case Pattern::X2p: return "X2p";
    case Pattern::X3p: return "X3p";
    case Pattern::Xc1: return "Xc1";
    case Pattern::Xc2: return "Xc2";
    case Pattern::Xc3: return "Xc3";
    case Pattern::Xc1p: return "Xc1p";
    case Pattern::Xc2p: return "Xc2p";
    case Pattern::Xc3p: return "Xc3p";
  }
  return "?";
}

std::string_view pattern_label(Pattern pattern) noexcept {
  switch (pattern) {
    case Pattern::X: return "X";
    case Pattern::X1p: return "X1'";
    case Pattern::X2p: return "X2'";
    case Pattern::X3p: return "X3'";
    case Pattern::Xc1: return "Xc1";
    case Pattern::Xc2: return "Xc2";
    case Pattern::Xc3: return "Xc3";
    case Pattern::Xc1p: return "Xc1'";
    case Pattern::Xc2p: return "Xc2'";
    case Pattern::Xc3p: return "Xc3'";
  }
  return "?";
}

bool is_primed(Pattern pattern) noexcept {
  switch (pattern) {
    case Pattern::X1p:
    case Pattern::X2p:
    case Pattern::X3p:
    case Pattern::Xc1p:
    case Pattern::Xc2p:
    case Pattern::Xc3p:
      return true;
    default:
      return false;
  }
}

namespace {

struct End {
  int strand;
  std::size_t rank;
};

// tail = under pass, head = over pass
struct Arrow {
  End tail;
  End head;
};

Arrow arrow_of(const GaussDiagram& g, const Chord& c) {
  return {{g.point(c.under).strand, g.rank(c.under)}, {g.point(c.over).strand, g.rank(c.over)}};
}

bool on(const End& e, int strand) { return e.strand == strand; }

// Ordered test: does (alpha, beta) realize the pattern with these roles?
bool ordered_match(Pattern pattern, const Arrow& a, const Arrow& b) {
  switch (pattern) {
    // knots: a single strand, compare ranks only
    case Pattern::X:  // a = p1 -> p3, b = p4 -> p2
      return a.tail.rank < b.head.rank && b.head.rank < a.head.rank && a.head.rank < b.tail.rank;
    case Pattern::X1p:  // a = x -> y, b = z -> x, x < y < z
      return a.tail.rank == b.head.rank && a.tail.rank < a.head.rank && a.head.rank < b.tail.rank;
    case Pattern::X2p:  // a = x -> y, b = z -> y, x < y < z
      return a.head.rank == b.head.rank && a.tail.rank < a.head.rank && a.head.rank < b.tail.rank;
    case Pattern::X3p:  // a = x -> z, b = z -> y, x < y < z
      return a.head.rank == b.tail.rank && a.tail.rank < b.head.rank && b.head.rank < a.head.rank;

    // links: a = strand 0 -> strand 1 etc.
    case Pattern::Xc1:
    case Pattern::Xc1p:
      if (!(on(a.tail, 0) && on(a.head, 1) && on(b.tail, 2) && on(b.head, 0))) return false;
      return pattern == Pattern::Xc1 ? a.tail.rank < b.head.rank : a.tail.rank == b.head.rank;
    case Pattern::Xc2:
    case Pattern::Xc2p:
      // strand 1 meets strand 2's head before strand 0's; the other order
      // breaks cyclic symmetry and resolution invariance
      if (!(on(a.tail, 0) && on(a.head, 1) && on(b.tail, 2) && on(b.head, 1))) return false;
      return pattern == Pattern::Xc2 ? b.head.rank < a.head.rank : a.head.rank == b.head.rank;
    case Pattern::Xc3:
    case Pattern::Xc3p:
      if (!(on(a.tail, 0) && on(a.head, 2) && on(b.tail, 2) && on(b.head, 1))) return false;
      return pattern == Pattern::Xc3 ? a.head.rank < b.tail.rank : a.head.rank == b.tail.rank;
  }
  return false;
}

bool knot_pattern(Pattern p) {
  return p == Pattern::X || p == Pattern::X1p || p == Pattern::X2p || p == Pattern::X3p;
}

template <std::size_t N>
PatternCounts count_with(const GaussDiagram& g, const std::array<Pattern, N>& patterns) {
  PatternCounts counts(g.kind());
  const auto& chords = g.chords();
  std::vector<Arrow> arrows;
  arrows.reserve(chords.size());
  for (const Chord& c : chords) arrows.push_back(arrow_of(g, c));
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      for (Pattern p : patterns) {
        if (ordered_match(p, arrows[i], arrows[j]) || ordered_match(p, arrows[j], arrows[i])) {
          counts.add(p, chords[i].sign * chords[j].sign);
          break;
        }
      }
    }
  }
  return counts;
}

void require_kind(const GaussDiagram& g, DiagramKind kind) {
  if (g.kind() != kind)
    throw Error(ErrorCode::KindMismatch, "expected a " + std::string(kind_name(kind)) + " diagram, got " +
                                             std::string(kind_name(g.kind())));
}

long long integral(const Rational& value, const char* what) {
  if (!is_integer(value))
    throw Error(ErrorCode::NonIntegerInvariant, std::string(what) + " evaluates to " + format_rational(value));
  return value.get_num().get_si();
}

}  // namespace

bool matches(Pattern pattern, const GaussDiagram& diagram, const Chord& a, const Chord& b) {
  if (knot_pattern(pattern) != (diagram.kind() == DiagramKind::LongKnot)) return false;
  Arrow x = arrow_of(diagram, a);
  Arrow y = arrow_of(diagram, b);
  return ordered_match(pattern, x, y) || ordered_match(pattern, y, x);
}

std::optional<Pattern> classify_pair(const GaussDiagram& diagram, const Chord& a, const Chord& b) {
  auto pick = [&](const auto& patterns) -> std::optional<Pattern> {
    for (Pattern p : patterns)
      if (matches(p, diagram, a, b)) return p;
    return std::nullopt;
  };
  return diagram.kind() == DiagramKind::LongKnot ? pick(kKnotPatterns) : pick(kLinkPatterns);
}

PatternCounts count_knot_patterns(const GaussDiagram& diagram) {
  require_kind(diagram, DiagramKind::LongKnot);
  return count_with(diagram, kKnotPatterns);
}

PatternCounts count_link_patterns(const GaussDiagram& diagram) {
  require_kind(diagram, DiagramKind::LongLink3);
  return count_with(diagram, kLinkPatterns);
}

PatternCounts count_patterns(const GaussDiagram& diagram) {
  return diagram.kind() == DiagramKind::LongKnot ? count_knot_patterns(diagram) : count_link_patterns(diagram);
}

namespace {

Rational q(long long v) { return Rational(static_cast<long>(v)); }

}  // namespace

Rational casson_value(const PatternCounts& c) {
  Rational primed = q(c[Pattern::X1p] + c[Pattern::X2p] + c[Pattern::X3p]);
  return q(c[Pattern::X]) + primed / 2;
}

Rational mu123_value(const PatternCounts& c) {
  Rational plain = q(c[Pattern::Xc1] + c[Pattern::Xc2] + c[Pattern::Xc3]);
  Rational primed = q(c[Pattern::Xc1p] + c[Pattern::Xc2p] + c[Pattern::Xc3p]);
  return plain + primed / 2;
}

long long casson(const GaussDiagram& diagram) {
  return integral(casson_value(count_knot_patterns(diagram)), "casson");
}

long long mu123(const GaussDiagram& diagram) {
  return integral(mu123_value(count_link_patterns(diagram)), "mu123");
}

long long linking(const GaussDiagram& diagram, int i, int j) {
  long long total = 0;
  for (const Chord& c : diagram.chords())
    if (diagram.point(c.under).strand == i && diagram.point(c.over).strand == j) total += c.sign;
  return total;
}

}  // namespace gauss_forge
