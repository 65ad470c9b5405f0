#include "properties.hpp"

#include <algorithm>

#include "gauss_forge/error.hpp"
#include "gauss_forge/geometry.hpp"
#include "gauss_forge/patterns.hpp"
#include "reference.hpp"

namespace gf_test {

void PropertyReport::expect(bool ok, const std::string& label, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(label + ": " + what);
}

namespace {

bool shares_pass(const Chord& a, const Chord& b) {
  return a.under == b.under || a.under == b.over || a.over == b.under || a.over == b.over;
}

}  // namespace

void check_properties(const GaussDiagram& g, bool realizable, const std::string& label, PropertyReport& r) {
  ++r.diagrams;
  const bool knot = g.kind() == DiagramKind::LongKnot;
  const PatternCounts counts = count_patterns(g);

  const Rational value = knot ? casson_value(counts) : mu123_value(counts);
  r.expect(is_integer(value), label, "invariant " + format_rational(value) + " is not an integer");

  r.expect(g.chords().size() == expected_chord_count(g), label, "chord count law");

  // Kinks before the first pass, after the last and between two passes.
  for (int strand = 0; strand < strand_count(g.kind()); ++strand) {
    std::vector<Rational> params;
    for (const Crossing& c : g.crossings())
      for (const Pass& p : c.passes)
        if (p.point.strand == strand) params.push_back(p.point.param);
    std::sort(params.begin(), params.end());
    std::vector<Rational> spots;
    if (params.empty()) {
      spots.push_back(Rational(0));
    } else {
      spots.push_back(params.front() - 1);
      spots.push_back(params.back() + 1);
      if (params.size() > 1) spots.push_back((params[params.size() / 2 - 1] + params[params.size() / 2]) / 2);
    }
    for (std::size_t s = 0; s < spots.size(); ++s) {
      const int sign = s % 2 ? -1 : 1;
      r.expect(count_patterns(insert_kink(g, strand, spots[s], sign)) == counts, label,
               "kink on strand " + std::to_string(strand) + " changed the counts");
    }
  }

  const auto& chords = g.chords();
  const auto patterns = knot ? std::vector<Pattern>(kKnotPatterns.begin(), kKnotPatterns.end())
                             : std::vector<Pattern>(kLinkPatterns.begin(), kLinkPatterns.end());
  bool exclusive = true, agrees = true, any_shared = false;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      int hits = 0;
      for (Pattern p : patterns) hits += matches(p, g, chords[i], chords[j]) ? 1 : 0;
      exclusive &= hits <= 1;
      agrees &= classify_pair(g, chords[i], chords[j]) == reference_classify(g, chords[i], chords[j]);
      any_shared |= shares_pass(chords[i], chords[j]);
    }
  r.expect(exclusive, label, "a chord pair matches two patterns");
  r.expect(agrees, label, "pattern matcher disagrees with the reference matcher");
  r.expect(counts == reference_counts(g), label, "counts disagree with the reference matcher");

  if (!any_shared) {
    bool zero = true;
    for (Pattern p : patterns)
      if (is_primed(p)) zero &= counts[p] == 0;
    r.expect(zero, label, "primed counts nonzero on a double-only diagram");
  }

  if (realizable) {
    if (knot) {
      r.expect(casson(mirror(g)) == casson(g), label, "casson not mirror invariant");
    } else {
      bool symmetric = true, unlinked = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          symmetric &= linking(g, i, j) == linking(g, j, i);
          unlinked &= linking(g, i, j) == 0;
        }
      r.expect(symmetric, label, "linking numbers not symmetric");
      // with linking present the value also carries lk products, which mirroring moves
      if (unlinked) r.expect(mu123(mirror(g)) == mu123(g), label, "mu123 not mirror invariant");
    }
  }
}

std::vector<GaussDiagram> random_geometric_diagrams(std::size_t count, std::uint64_t seed) {
  std::vector<GaussDiagram> out;
  for (std::size_t n = 0; n < count; ++n) {
    const bool knot = n % 2 == 0;
    RandomLinkOptions opts;
    opts.forced_multiplicity = n % 3 == 0 ? 3 : 0;
    opts.max_chords = knot ? 24 : 30;
    const int segments = knot ? 7 + static_cast<int>(n % 4) : 3 + static_cast<int>(n % 2);
    PolyLink link = random_long_link(seed * 100003 + n, knot ? 1 : 3, segments, opts);
    out.push_back(extract_diagram(link).diagram);
  }
  return out;
}

}  // namespace gf_test
