#include "gauss_forge/closed_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numbers>
#include <sstream>

#include "gauss_forge/error.hpp"
#include "planar.hpp"

namespace gauss_forge {

namespace {

int over_in(const PdCrossing& x) { return x.sign > 0 ? x.arcs[3] : x.arcs[1]; }
int over_out(const PdCrossing& x) { return x.sign > 0 ? x.arcs[1] : x.arcs[3]; }

}  // namespace

ClosedDiagram ClosedDiagram::from_pd(std::vector<PdCrossing> crossings, std::size_t crossingless_components) {
  ClosedDiagram d;
  d.crossings_ = std::move(crossings);
  d.crossingless_ = crossingless_components;

  // label -> visit entered (resp. left) through it
  std::map<int, Visit> entered, left;
  for (std::size_t c = 0; c < d.crossings_.size(); ++c) {
    const PdCrossing& x = d.crossings_[c];
    if (x.sign != 1 && x.sign != -1)
      throw Error(ErrorCode::Validation, "crossing " + std::to_string(c) + " has sign other than +-1");
    auto put = [&](std::map<int, Visit>& m, int label, bool over) {
      if (!m.emplace(label, Visit{c, over}).second)
        throw Error(ErrorCode::Validation, "arc " + std::to_string(label) + " is used twice in the same role");
    };
    put(entered, x.arcs[0], false);
    put(left, x.arcs[2], false);
    put(entered, over_in(x), true);
    put(left, over_out(x), true);
  }
  for (const auto& [label, v] : entered)
    if (!left.count(label)) throw Error(ErrorCode::Validation, "arc " + std::to_string(label) + " never leaves a crossing");
  if (entered.size() != left.size()) throw Error(ErrorCode::Validation, "arc labels do not close up");

  auto out_label = [&](const Visit& v) {
    const PdCrossing& x = d.crossings_[v.crossing];
    return v.over ? over_out(x) : x.arcs[2];
  };
  std::map<int, bool> used;
  d.under_component_.assign(d.crossings_.size(), 0);
  d.over_component_.assign(d.crossings_.size(), 0);
  for (const auto& [label, first] : entered) {
    if (used[label]) continue;
    const std::size_t comp = d.components_.size();
    auto& cycle = d.components_.emplace_back();
    int current = label;
    while (!used[current]) {
      used[current] = true;
      Visit v = entered.at(current);
      cycle.push_back(v);
      (v.over ? d.over_component_ : d.under_component_)[v.crossing] = comp;
      current = out_label(v);
    }
    if (current != label) throw Error(ErrorCode::Validation, "arc labels do not form closed cycles");
  }
  for (std::size_t i = 0; i < crossingless_components; ++i) d.components_.emplace_back();
  return d;
}

ClosedDiagram parse_pd(std::string_view text) {
  std::vector<PdCrossing> crossings;
  std::size_t declared = 0;
  bool have_declared = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + why);
    };
    if (head == "components") {
      long long n = -1;
      if (!(ls >> n) || n < 0) fail("expected a component count");
      declared = static_cast<std::size_t>(n);
      have_declared = true;
    } else if (head == "X") {
      PdCrossing x;
      for (int& a : x.arcs)
        if (!(ls >> a)) fail("expected four arc labels");
      std::string sign;
      if (!(ls >> sign) || (sign != "+" && sign != "-")) fail("expected a sign '+' or '-'");
      x.sign = sign == "+" ? 1 : -1;
      crossings.push_back(x);
    } else {
      fail("unknown directive '" + head + "'");
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#') fail("trailing text '" + extra + "'");
  }
  ClosedDiagram d = ClosedDiagram::from_pd(crossings);
  if (have_declared) {
    if (declared < d.component_count())
      throw Error(ErrorCode::Validation, "declared component count is below the number of arc cycles");
    d = ClosedDiagram::from_pd(crossings, declared - d.component_count());
  } else if (crossings.empty()) {
    d = ClosedDiagram::from_pd({}, 1);
  }
  return d;
}

std::string format_pd(const ClosedDiagram& d) {
  std::string out;
  for (const PdCrossing& x : d.crossings()) {
    out += "X";
    for (int a : x.arcs) out += " " + std::to_string(a);
    out += x.sign > 0 ? " +\n" : " -\n";
  }
  if (d.crossingless_components() > 0 || d.crossings().empty())
    out += "components " + std::to_string(d.component_count()) + "\n";
  return out;
}

namespace {

struct VisitRecord {
  std::size_t crossing;
  bool over;
};

// PD crossing from the four arc labels around a double crossing.
PdCrossing pd_of(int u_in, int u_out, int o_in, int o_out, int sign) {
  PdCrossing x;
  x.sign = sign;
  x.arcs = sign > 0 ? std::array<int, 4>{u_in, o_out, u_out, o_in} : std::array<int, 4>{u_in, o_in, u_out, o_out};
  return x;
}

ClosedDiagram from_visits(const std::vector<std::vector<VisitRecord>>& strands, const std::vector<int>& signs) {
  struct Slots {
    int u_in = 0, u_out = 0, o_in = 0, o_out = 0;
  };
  std::vector<Slots> slots(signs.size());
  int label = 1;
  std::size_t crossingless = 0;
  for (const auto& visits : strands) {
    if (visits.empty()) {
      ++crossingless;
      continue;
    }
    const int base = label;
    const int n = static_cast<int>(visits.size());
    for (int i = 0; i < n; ++i) {
      const VisitRecord& v = visits[static_cast<std::size_t>(i)];
      const int in = base + i;
      const int out = base + (i + 1) % n;
      Slots& s = slots[v.crossing];
      (v.over ? s.o_in : s.u_in) = in;
      (v.over ? s.o_out : s.u_out) = out;
    }
    label += n;
  }
  std::vector<PdCrossing> pd;
  for (std::size_t c = 0; c < signs.size(); ++c)
    pd.push_back(pd_of(slots[c].u_in, slots[c].u_out, slots[c].o_in, slots[c].o_out, signs[c]));
  return ClosedDiagram::from_pd(std::move(pd), crossingless);
}

}  // namespace

ClosedDiagram closure(const GaussDiagram& g) {
  const int strands = strand_count(g.kind());
  std::vector<std::vector<std::pair<std::size_t, VisitRecord>>> by_rank(static_cast<std::size_t>(strands));
  std::vector<int> signs;
  for (std::size_t c = 0; c < g.crossings().size(); ++c) {
    if (g.crossings()[c].passes.size() != 2)
      throw Error(ErrorCode::Validation, "closure needs double crossings only; resolve first");
  }
  for (std::size_t i = 0; i < g.chords().size(); ++i) {
    const Chord& ch = g.chords()[i];
    signs.push_back(ch.sign);
    by_rank[static_cast<std::size_t>(g.point(ch.under).strand)].push_back({g.rank(ch.under), {i, false}});
    by_rank[static_cast<std::size_t>(g.point(ch.over).strand)].push_back({g.rank(ch.over), {i, true}});
  }
  std::vector<std::vector<VisitRecord>> strands_visits;
  for (auto& s : by_rank) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& out = strands_visits.emplace_back();
    for (const auto& [rank, v] : s) out.push_back(v);
  }
  return from_visits(strands_visits, signs);
}

GaussDiagram cut_open(const ClosedDiagram& d) {
  if (d.component_count() != 1) throw Error(ErrorCode::Validation, "cut_open needs a one-component diagram");
  std::vector<Crossing> crossings(d.crossings().size());
  const int width = std::max<int>(3, static_cast<int>(std::to_string(crossings.size()).size()));
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    std::string digits = std::to_string(c);
    crossings[c].id = "x" + std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(width, digits.size()), '0') + digits;
    crossings[c].passes.resize(2);
  }
  const auto& cycle = d.components()[0];
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Visit& v = cycle[i];
    // Under pass heads east; the over pass direction then fixes the sign.
    const int sign = d.crossings()[v.crossing].sign;
    Pass p;
    p.point = {0, Rational(static_cast<long>(i + 1))};
    p.angle = v.over ? -sign * std::numbers::pi / 2 : 0.0;
    p.height = v.over ? 1 : 0;
    crossings[v.crossing].passes[v.over ? 1 : 0] = p;
  }
  return build_diagram(DiagramKind::LongKnot, std::move(crossings));
}

ClosedDiagram closed_diagram_from_polylink(const PolyLink& link, const ExtractOptions& options) {
  const PolyLink closed = close_long_link(link);
  validate(closed);
  const auto segs = detail::segments_of(closed);
  GenericityReport report;
  // Tolerances stay relative to the input: the closing arcs only enlarge the box.
  ExtractOptions opts = options;
  if (opts.snap_eps <= 0) opts.snap_eps = kDefaultRelativeSnap * bbox_diameter(link);
  opts.min_height_gap *= bbox_diameter(link) / bbox_diameter(closed);
  const auto clusters = detail::find_crossings(closed, segs, opts, report);
  if (report.max_multiplicity > 2) throw Error(ErrorCode::DegenerateProjection, "projection has a multiple crossing");

  struct Key {
    int comp;
    std::size_t order;
    double t;
    VisitRecord v;
  };
  std::vector<Key> keys;
  std::vector<int> signs;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& p = clusters[c].passes;
    const bool first_under = p[0].height < p[1].height;
    const auto& under = first_under ? p[0] : p[1];
    const auto& over = first_under ? p[1] : p[0];
    signs.push_back(det_sign(direction_of(over.angle), direction_of(under.angle)));
    keys.push_back({segs[under.segment].component, segs[under.segment].order, under.t, {c, false}});
    keys.push_back({segs[over.segment].component, segs[over.segment].order, over.t, {c, true}});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.order != b.order) return a.order < b.order;
    return a.t < b.t;
  });
  std::vector<std::vector<VisitRecord>> strands(closed.components.size());
  for (const Key& k : keys) strands[static_cast<std::size_t>(k.comp)].push_back(k.v);
  return from_visits(strands, signs);
}

long long closed_linking(const ClosedDiagram& d, std::size_t i, std::size_t j) {
  long long total = 0;
  for (std::size_t c = 0; c < d.crossings().size(); ++c)
    if (d.under_component(c) == i && d.over_component(c) == j) total += d.crossings()[c].sign;
  return total;
}

}  // namespace gauss_forge
