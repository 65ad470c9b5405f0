#include <gtest/gtest.h>

#include <cmath>

#include "builders.hpp"
#include "gauss_forge/closed_diagram.hpp"
#include "gauss_forge/corpus.hpp"
#include "gauss_forge/geometry.hpp"
#include "gauss_forge/oracles.hpp"
#include "gauss_forge/patterns.hpp"
#include "gauss_forge/resolve.hpp"

using namespace gauss_forge;
using gf_test::code_of;
using gf_test::kPi;

namespace {

PolyLink poly(const std::string& name) { return std::get<PolyLink>(corpus_get(name).payload); }

// Long knot whose segments 1, 4 and 7 pass through (0, 0.3) at heights 2, 3, 1
// with directions pi/3, 0 and 2pi/3. `shift` moves segment 7 sideways.
PolyLink triple_knot(double shift = 0.0) {
  const double cx = 0.0, cy = 0.3, r = 0.4;
  auto end = [&](double angle, double sign, double z, double dx) {
    return Vec3{cx + dx + sign * r * std::cos(angle), cy + sign * r * std::sin(angle), z};
  };
  return {Closure::Long,
          {{{-1, 0, 0},
            {-0.8, -0.9, 0},
            end(kPi / 3, -1, 2, 0),
            end(kPi / 3, 1, 2, 0),
            {0.3, 1.2, 2.5},
            {-0.6, 1.0, 3},
            end(0, -1, 3, 0),
            end(0, 1, 3, 0),
            {0.7, -0.6, 1},
            end(2 * kPi / 3, -1, 1, shift),
            end(2 * kPi / 3, 1, 1, shift),
            {-0.5, 1.4, 0.5},
            {0.9, 1.3, 0},
            {1, 0, 0}}}};
}

const Crossing* crossing_with(const GaussDiagram& g, std::size_t m) {
  for (const Crossing& c : g.crossings())
    if (c.passes.size() == m) return &c;
  return nullptr;
}

// Crossing structure without the float angles.
std::vector<std::vector<std::string>> structure(const GaussDiagram& g) {
  std::vector<std::vector<std::string>> out;
  for (const Crossing& c : g.crossings()) {
    std::vector<std::string> row;
    for (const Pass& p : c.passes)
      row.push_back(std::to_string(p.point.strand) + ":" + format_rational(p.point.param) + "@" +
                    format_rational(p.height));
    out.push_back(row);
  }
  for (const Chord& ch : g.chords()) out.push_back({std::to_string(ch.sign)});
  return out;
}

}  // namespace

TEST(Validate, RejectsBadInput) {
  EXPECT_EQ(code_of([] { validate({Closure::Long, {{{-1, 0, 0}, {0.5, 0.5, 0}}}}); }), ErrorCode::Validation);
  EXPECT_EQ(code_of([] { validate({Closure::Closed, {{}}}); }), ErrorCode::Validation);
  EXPECT_EQ(code_of([] { validate({Closure::Closed, {{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}}); }), ErrorCode::Validation);
  EXPECT_NO_THROW(validate(poly("hopf_positive")));
  EXPECT_DOUBLE_EQ(ray_slope(0, 3), 1.0);
  EXPECT_DOUBLE_EQ(ray_slope(2, 3), -1.0);
  EXPECT_DOUBLE_EQ(ray_slope(0, 1), 0.0);
}

TEST(Project, SquareIsItself) {
  PolyLink sq{Closure::Closed, {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}}};
  Projection p = project(sq);
  ASSERT_EQ(p.planar[0].size(), 4u);
  EXPECT_DOUBLE_EQ(p.planar[0][2].x, 1.0);
  EXPECT_DOUBLE_EQ(p.planar[0][2].y, 1.0);
  for (double h : p.heights[0]) EXPECT_EQ(h, 0.0);
  EXPECT_DOUBLE_EQ(bbox_diameter(sq), std::sqrt(2.0));
}

TEST(Extract, VerticalSegmentIsDegenerate) {
  PolyLink link{Closure::Long, {{{-1, 0, 0}, {0, 0.5, 0}, {0, 0.5, 1}, {1, 0, 0}}}};
  EXPECT_EQ(code_of([&] { extract_diagram(link); }), ErrorCode::DegenerateProjection);
}

TEST(Extract, ParallelOverlapIsDegenerate) {
  PolyLink link{Closure::Long, {{{-1, 0, 0}, {-0.5, 0.5, 0}, {0.5, 0.5, 1}, {0, 0.5, 2}, {0, 1, 0}, {1, 0, 0}}}};
  EXPECT_EQ(code_of([&] { extract_diagram(link); }), ErrorCode::DegenerateProjection);
}

TEST(Extract, HopfCrossingsFollowDetRule) {
  Extraction e = extract_diagram(poly("hopf_positive"));
  EXPECT_EQ(e.report.crossing_count, 2u);
  EXPECT_EQ(e.report.max_multiplicity, 2u);
  ASSERT_EQ(e.diagram.chords().size(), 2u);
  for (const Chord& c : e.diagram.chords()) EXPECT_EQ(c.sign, 1);
  EXPECT_EQ(linking(e.diagram, 0, 1), 1);
  EXPECT_EQ(linking(e.diagram, 1, 0), 1);
  EXPECT_NEAR(e.report.min_crossing_angle, kPi / 2, 1e-12);
}

TEST(Extract, ThreeSegmentsThroughOnePoint) {
  Extraction e = extract_diagram(triple_knot());
  EXPECT_EQ(e.report.max_multiplicity, 3u);
  const Crossing* t = crossing_with(e.diagram, 3);
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(to_string(classify_triple(*t)), "(<-,+,+,+)");
  ASSERT_EQ(e.diagram.kind(), DiagramKind::LongKnot);
  const long long c = casson(e.diagram);
  EXPECT_EQ(c, casson(resolve_all(e.diagram, 3)));
  EXPECT_EQ(c, casson_oracle(closed_diagram_from_polylink(triple_knot(1e-3))));
}

TEST(Extract, NearConcurrencyIsAmbiguous) {
  PolyLink near = triple_knot(2e-3);
  EXPECT_EQ(crossing_with(extract_diagram(near).diagram, 3), nullptr);
  EXPECT_EQ(code_of([&] { extract_diagram(near, {.snap_eps = 1e-3}); }), ErrorCode::SnapAmbiguity);
}

TEST(Extract, SnappingIdempotence) {
  const ExtractOptions opts{.snap_eps = 1e-2};
  Extraction exact = extract_diagram(triple_knot(), opts);
  Extraction split = extract_diagram(triple_knot(4e-4), opts);
  EXPECT_EQ(split.report.max_multiplicity, 3u);
  EXPECT_EQ(structure(split.diagram), structure(exact.diagram));
}

TEST(Extract, ParamsAreRanks) {
  Extraction e = extract_diagram(poly("trefoil_polyline"));
  const GaussDiagram& g = e.diagram;
  std::vector<Rational> params;
  for (const Crossing& c : g.crossings())
    for (const Pass& p : c.passes) params.push_back(p.point.param);
  std::sort(params.begin(), params.end());
  for (std::size_t i = 0; i < params.size(); ++i) EXPECT_EQ(params[i], Rational(static_cast<long>(i + 1)));
}

TEST(Perturb, ZeroMagnitudeIsIdentity) {
  PolyLink t = poly("trefoil_polyline");
  EXPECT_EQ(perturb(t, 0.0, 5), t);
}

TEST(Perturb, TrefoilKeepsCasson) {
  PolyLink t = poly("trefoil_polyline");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    double magnitude = 0.01;
    for (;;) {
      try {
        PolyLink p = perturb(t, magnitude, seed, seed % 2 == 1);
        EXPECT_EQ(casson(extract_diagram(p).diagram), 1) << "seed " << seed;
        break;
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::IsotopyViolation);
        magnitude /= 2;
      }
    }
  }
}

TEST(Perturb, OversizedJitterIsCaught) {
  // Component 0 passes 0.01 above strand 1.
  PolyLink link = poly("hopf_positive");
  link.components[0][1].z = 0.01;
  link.components[0][2].z = 0.01;
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    if (code_of([&] { perturb(link, 0.5, seed); }) == ErrorCode::IsotopyViolation) ++violations;
  EXPECT_GT(violations, 0);
}

TEST(Perturb, KeepsLongEndpoints) {
  PolyLink t = poly("borromean_polyline");
  PolyLink p = perturb(t, 0.005, 9);
  for (std::size_t k = 0; k < t.components.size(); ++k) {
    EXPECT_EQ(p.components[k].front(), t.components[k].front());
    EXPECT_EQ(p.components[k].back(), t.components[k].back());
  }
  EXPECT_NO_THROW(validate(p));
}

TEST(RandomLink, Deterministic) {
  EXPECT_EQ(random_long_link(42, 1, 8), random_long_link(42, 1, 8));
  EXPECT_EQ(random_long_link(42, 3, 4), random_long_link(42, 3, 4));
  EXPECT_NE(random_long_link(42, 1, 8), random_long_link(43, 1, 8));
}

TEST(RandomLink, KnotMatchesConway) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    PolyLink k = random_long_link(seed, 1, 8, {.max_chords = 10});
    GaussDiagram g = extract_diagram(k).diagram;
    EXPECT_EQ(casson(g), casson_oracle(closure(g))) << "seed " << seed;
    EXPECT_EQ(casson(g), casson_oracle(closed_diagram_from_polylink(k))) << "seed " << seed;
  }
}

TEST(RandomLink, ThreeComponents) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    PolyLink l = random_long_link(seed, 3, 4);
    GaussDiagram g = extract_diagram(l).diagram;
    EXPECT_EQ(resolve_all(g, seed), g);
    PolyLink closed = close_long_link(l);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        EXPECT_EQ(linking(g, i, j), linking(g, j, i));
        double v = gauss_linking_integral(closed.components[static_cast<std::size_t>(i)],
                                          closed.components[static_cast<std::size_t>(j)]);
        EXPECT_NEAR(v, static_cast<double>(linking(g, i, j)), 1e-6);
      }
  }
}

TEST(RandomLink, ForcedMultiplicity) {
  for (int m : {3, 4}) {
    PolyLink k = random_long_link(5, 1, 10, {.forced_multiplicity = m});
    Extraction e = extract_diagram(k);
    EXPECT_EQ(e.report.max_multiplicity, static_cast<std::size_t>(m));
    EXPECT_EQ(casson(e.diagram), casson(resolve_all(e.diagram, 1)));
  }
  PolyLink l = random_long_link(6, 3, 5, {.forced_multiplicity = 3});
  EXPECT_EQ(extract_diagram(l).report.max_multiplicity, 3u);
}

TEST(RandomLink, Exhaustion) {
  EXPECT_EQ(code_of([] { random_long_link(1, 1, 12, {.max_attempts = 3, .max_chords = 1}); }),
            ErrorCode::GenerationExhausted);
}

TEST(Braid, PureWordRequired) {
  std::vector<BraidLetter> word = {{BraidLetter::Kind::Sigma, 0, true, {0, 1, 2}}};
  EXPECT_EQ(code_of([&] { braid_long_link(word); }), ErrorCode::Validation);
}

TEST(Braid, FullTwistLinks) {
  BraidLetter s{BraidLetter::Kind::Sigma, 0, true, {0, 1, 2}};
  std::vector<BraidLetter> word = {s, s};
  GaussDiagram g = extract_diagram(braid_long_link(word)).diagram;
  EXPECT_EQ(g.chords().size(), 2u);
  EXPECT_EQ(std::abs(linking(g, 0, 1)), 1);
  EXPECT_EQ(linking(g, 0, 1), linking(g, 1, 0));
}

TEST(Braid, Borromean) {
  BraidLetter a{BraidLetter::Kind::Sigma, 0, true, {0, 1, 2}};
  BraidLetter b{BraidLetter::Kind::Sigma, 1, false, {0, 1, 2}};
  std::vector<BraidLetter> word = {a, b, a, b, a, b};
  GaussDiagram g = extract_diagram(braid_long_link(word)).diagram;
  EXPECT_EQ(g, std::get<GaussDiagram>(corpus_get("borromean_long").payload));
  BraidLetter t{BraidLetter::Kind::Triple, 0, true, {2, 0, 1}};
  BraidLetter back{BraidLetter::Kind::Triple, 0, true, {1, 0, 2}};
  word.push_back(t);
  word.push_back(back);
  GaussDiagram with_triple = extract_diagram(braid_long_link(word)).diagram;
  EXPECT_EQ(crossing_with(with_triple, 3) != nullptr, true);
  EXPECT_EQ(mu123(with_triple), mu123(g));
}

TEST(Close, NoNewCrossings) {
  for (std::string name : {"trefoil_polyline", "figure_eight_polyline", "hopf_positive", "borromean_polyline"}) {
    PolyLink l = poly(name);
    GaussDiagram g = extract_diagram(l).diagram;
    ClosedDiagram d = closed_diagram_from_polylink(l);
    EXPECT_EQ(d.crossings().size(), g.chords().size()) << name;
    EXPECT_EQ(d.component_count(), l.components.size()) << name;
    PolyLink c = close_long_link(l);
    EXPECT_EQ(c.closure, Closure::Closed);
    EXPECT_EQ(close_long_link(c), c);
  }
}

TEST(Close, ClosedDiagramRejectsMultipleCrossings) {
  EXPECT_EQ(code_of([] { closed_diagram_from_polylink(triple_knot()); }), ErrorCode::DegenerateProjection);
}
