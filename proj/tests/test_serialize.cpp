#include <gtest/gtest.h>

#include "builders.hpp"
#include "gauss_forge/corpus.hpp"
#include "gauss_forge/serialize.hpp"

using namespace gauss_forge;
using gf_test::code_of;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(format_rational(Rational(4, -8)), "-1/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "1//2"})
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::Parse) << bad;
  EXPECT_EQ(exact(0.75), Rational(3, 4));
  EXPECT_TRUE(is_integer(Rational(4, 2)));
  EXPECT_FALSE(is_integer(Rational(1, 3)));
}

TEST(Doubles, ShortestRoundTrip) {
  for (double v : {0.0, 1.0, -0.5, 0.1, 1.0471975511965976, -1.5707963267948966, 1e-300, 123456789.125}) {
    std::string s = format_double(v);
    EXPECT_EQ(std::stod(s), v) << s;
  }
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(0.25), "0.25");
}

TEST(DiagramJson, CorpusRoundTripIsByteIdentical) {
  for (const std::string& name : corpus_list()) {
    CorpusEntry e = corpus_get(name);
    if (e.format == PayloadFormat::Diagram) {
      const auto& g = std::get<GaussDiagram>(e.payload);
      EXPECT_EQ(format_diagram_json(g), e.raw) << name;
      EXPECT_EQ(parse_diagram_json(format_diagram_json(g)), g) << name;
    } else if (e.format == PayloadFormat::Polyline) {
      const auto& p = std::get<PolyLink>(e.payload);
      EXPECT_EQ(format_polyline_json(p), e.raw) << name;
      EXPECT_EQ(parse_polyline_json(format_polyline_json(p)), p) << name;
    } else {
      const auto& d = std::get<ClosedDiagram>(e.payload);
      EXPECT_EQ(parse_pd(format_pd(d)), d) << name;
    }
  }
}

TEST(DiagramJson, RationalParamsSurvive) {
  GaussDiagram g = build_diagram(DiagramKind::LongLink3,
                                 {gf_test::crossing("z", {{{0, Rational(1, 3)}, 0.1, Rational(-2, 7)},
                                                          {{2, Rational(5, 9)}, 2.0, Rational(1, 11)}})});
  EXPECT_EQ(parse_diagram_json(format_diagram_json(g)), g);
}

TEST(DiagramJson, Errors) {
  EXPECT_EQ(code_of([] { parse_diagram_json("{"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_diagram_json(R"({"kind": "long_knot"})"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_diagram_json(R"({"kind": "closed", "crossings": []})"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_diagram_json(R"({"kind": "long_knot", "crossings": [], "extra": 1})"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              parse_diagram_json(R"({"kind": "long_knot", "crossings": [{"id": "a", "passes": [
                {"strand": 0, "param": "1/0", "angle": 0, "height": "0"},
                {"strand": 0, "param": "2", "angle": 1, "height": "1"}]}]})");
            }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              parse_diagram_json(R"({"kind": "long_knot", "crossings": [{"id": "a", "passes": [
                {"strand": 0, "param": "1", "angle": 0, "height": "1"},
                {"strand": 0, "param": "2", "angle": 1, "height": "1"}]}]})");
            }),
            ErrorCode::DegenerateHeight);
}

TEST(PolylineJson, Errors) {
  EXPECT_EQ(code_of([] { parse_polyline_json(R"({"closure": "open", "components": []})"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_polyline_json(R"({"closure": "closed", "components": [[[0, 0]]]})"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_polyline_json(R"({"closure": "long", "components": [[[0, 0, 0], [1, 0, 0]]]})"); }),
            ErrorCode::Validation);
}
