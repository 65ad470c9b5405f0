// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gauss_forge/closed_diagram.hpp"
#include "gauss_forge/corpus.hpp"
#include "gauss_forge/error.hpp"
#include "gauss_forge/geometry.hpp"
#include "gauss_forge/oracles.hpp"
#include "gauss_forge/patterns.hpp"
#include "gauss_forge/resolve.hpp"
#include "properties.hpp"
#include "reference.hpp"

using namespace gauss_forge;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

GaussDiagram corpus_diagram(const std::string& name) { return std::get<GaussDiagram>(corpus_get(name).payload); }

std::size_t max_multiplicity(const GaussDiagram& g) {
  std::size_t m = 0;
  for (const Crossing& c : g.crossings()) m = std::max(m, c.passes.size());
  return m;
}

Outcome counts_match(const std::string& name, std::array<long long, 4> want, double budget_ms) {
  const GaussDiagram g = corpus_diagram(name);
  const auto start = Clock::now();
  const PatternCounts c = count_patterns(g);
  const long long value = casson(g);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::array<long long, 4> got{c[Pattern::X], c[Pattern::X1p], c[Pattern::X2p], c[Pattern::X3p]};
  std::ostringstream s;
  s << "X=" << got[0] << " X1'=" << got[1] << " X2'=" << got[2] << " X3'=" << got[3] << " casson=" << value
    << ", " << ms << " ms";
  return {got == want && value == 0 && ms < budget_ms, s.str()};
}

// Model triple points inside a double-only long knot: for every type, many
// random offsets; the change in <X> must be the primed half-sum and the
// realized local X-pairs must follow the sign rule.
Outcome weight_law() {
  std::mt19937_64 rng(2024);
  std::map<std::string, GaussDiagram> models;
  std::uniform_real_distribution<double> angle(0.0, 2 * 3.141592653589793);
  for (int attempt = 0; attempt < 20000 && models.size() < 16; ++attempt) {
    const long n_doubles = 3 + static_cast<long>(rng() % 3);
    std::vector<long> params(static_cast<std::size_t>(3 + 2 * n_doubles));
    for (std::size_t i = 0; i < params.size(); ++i) params[i] = static_cast<long>(i + 1);
    std::shuffle(params.begin(), params.end(), rng);
    std::vector<Crossing> xs;
    std::size_t next = 0;
    auto add = [&](std::string id, int passes) {
      Crossing c{std::move(id), {}};
      std::vector<long> heights(static_cast<std::size_t>(passes));
      for (int k = 0; k < passes; ++k) heights[static_cast<std::size_t>(k)] = k;
      std::shuffle(heights.begin(), heights.end(), rng);
      std::vector<double> angles;
      while (angles.size() < static_cast<std::size_t>(passes)) {
        double a = angle(rng);
        bool ok = true;
        for (double b : angles) ok &= std::abs(std::sin(a - b)) > 1e-2;
        if (ok) angles.push_back(a);
      }
      for (int k = 0; k < passes; ++k)
        c.passes.push_back({{0, Rational(params[next++])}, angles[static_cast<std::size_t>(k)],
                            Rational(heights[static_cast<std::size_t>(k)])});
      xs.push_back(std::move(c));
    };
    add("t", 3);
    {
      // only a triple whose middle pass is on top carries primed pairs
      auto& tp = xs.back().passes;
      std::array<std::size_t, 3> idx{0, 1, 2};
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return tp[a].point < tp[b].point; });
      const bool flip = rng() % 2;
      tp[idx[1]].height = Rational(2L);
      tp[idx[0]].height = Rational(flip ? 1L : 0L);
      tp[idx[2]].height = Rational(flip ? 0L : 1L);
    }
    for (long d = 0; d < n_doubles; ++d) add("d" + std::to_string(d), 2);
    GaussDiagram g = build_diagram(DiagramKind::LongKnot, xs);
    const std::string type = to_string(classify_triple(g.crossings()[*g.find("t")]));
    models.emplace(type, g);
  }
  if (models.size() != 16) return {false, "only " + std::to_string(models.size()) + " of 16 triple types found"};

  std::size_t sweeps = 0, fails = 0;
  std::string first_failure;
  for (const auto& [type, g] : models) {
    const TriplePointType t = classify_triple(g.crossings()[*g.find("t")]);
    const auto [s1, s2, s3] = t.signs;
    const PatternCounts before = count_patterns(g);
    const long long primed = before[Pattern::X1p] + before[Pattern::X2p] + before[Pattern::X3p];
    const long long c0 = casson(g);
    // sign products of the two potential local X-pairs
    const int p = t.direction == ChordDirection::Left ? s1 * s2 : s1 * s3, q = s2 * s3;
    bool ok = primed == p + q;
    for (std::uint64_t seed = 0; seed < 128; ++seed) {
      GaussDiagram r;
      try {
        r = resolve_crossing(g, "t", random_offsets(3, seed * 7919 + 1));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NonGenericOffsets) continue;
        throw;
      }
      ++sweeps;
      const PatternCounts after = count_patterns(r);
      ok &= after[Pattern::X1p] == 0 && after[Pattern::X2p] == 0 && after[Pattern::X3p] == 0;
      ok &= 2 * (after[Pattern::X] - before[Pattern::X]) == p + q;
      ok &= casson(r) == c0;
      std::vector<const Chord*> local;
      for (const Chord& ch : r.chords())
        if (r.crossings()[ch.under.crossing].id.rfind("t.", 0) == 0) local.push_back(&ch);
      int realized = 0;
      long long weight = 0;
      for (std::size_t i = 0; i < local.size(); ++i)
        for (std::size_t j = i + 1; j < local.size(); ++j)
          if (classify_pair(r, *local[i], *local[j]) == Pattern::X) {
            ++realized;
            weight += local[i]->sign * local[j]->sign;
          }
      ok &= local.size() == 3;
      ok &= 2 * weight == p + q;
      ok &= p == q ? realized == 1 : (realized == 0 || realized == 2);
      if (!ok && first_failure.empty()) first_failure = type + " seed " + std::to_string(seed);
    }
    if (!ok) ++fails;
  }
  std::ostringstream s;
  s << "16 types, " << sweeps << " resolutions";
  if (fails) s << ", " << fails << " types failed (first: " << first_failure << ")";
  bool enough = sweeps >= 16 * 100;
  return {fails == 0 && enough, s.str()};
}

Outcome resolution_consistency() {
  std::mt19937_64 rng(4);
  std::size_t runs = 0, bad = 0;
  std::set<std::size_t> multiplicities;
  for (int i = 0; i < 200; ++i) {
    const DiagramKind kind = i < 100 ? DiagramKind::LongKnot : DiagramKind::LongLink3;
    gf_test::RandomDiagramOptions o;
    o.doubles = 6;
    o.multiples = 2;
    o.min_multiplicity = 3;
    o.max_multiplicity = 5;
    const GaussDiagram g = gf_test::random_diagram(rng, kind, o);
    for (const Crossing& c : g.crossings()) multiplicities.insert(c.passes.size());
    const auto value = [&](const GaussDiagram& d) { return kind == DiagramKind::LongKnot ? casson(d) : mu123(d); };
    const long long v = value(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const GaussDiagram r = resolve_all(g, seed);
      ++runs;
      if (max_multiplicity(r) != 2 || value(r) != v) ++bad;
    }
  }
  const bool all_m = multiplicities.count(3) && multiplicities.count(4) && multiplicities.count(5);
  return {bad == 0 && all_m, std::to_string(runs) + " resolutions, " + std::to_string(bad) + " mismatches"};
}

Outcome casson_oracle_agreement() {
  std::size_t checked = 0, bad = 0, with_triple = 0;
  std::map<long long, int> values;
  auto check = [&](const GaussDiagram& g, const ClosedDiagram* geometric) {
    const long long c = casson(g);
    values[c]++;
    ++checked;
    if (casson_oracle(closure(resolve_all(g, 1))) != c) ++bad;
    if (geometric && casson_oracle(*geometric) != c) ++bad;
  };
  check(corpus_diagram("trefoil_long"), nullptr);
  check(corpus_diagram("figure_eight_long"), nullptr);
  bool anchors = casson(corpus_diagram("trefoil_long")) == 1 && casson(corpus_diagram("figure_eight_long")) == -1;
  for (std::uint64_t n = 0; n < 50; ++n) {
    RandomLinkOptions o;
    o.max_chords = 10;
    o.forced_multiplicity = n % 5 == 0 ? 3 : 0;
    const PolyLink k = random_long_link(9000 + n, 1, 7 + static_cast<int>(n % 3), o);
    const GaussDiagram g = extract_diagram(k).diagram;
    if (max_multiplicity(g) > 2) {
      ++with_triple;
      check(g, nullptr);
    } else {
      const ClosedDiagram d = closed_diagram_from_polylink(k);
      check(g, &d);
    }
  }
  std::ostringstream s;
  s << checked << " knots (" << with_triple << " with a triple point), values";
  for (auto [v, n] : values) s << " " << v << ":" << n;
  s << ", " << bad << " mismatches";
  return {bad == 0 && anchors, s.str()};
}

bool pairwise_unlinked(const GaussDiagram& g) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && linking(g, i, j) != 0) return false;
  return true;
}

Outcome mu_oracle_agreement() {
  std::size_t checked = 0, bad = 0;
  std::map<long long, int> values;
  auto check = [&](const GaussDiagram& g, const ClosedDiagram* geometric) {
    const long long m = mu123(g);
    values[m]++;
    ++checked;
    if (magnus_mu123(closure(resolve_all(g, 2))) != m) ++bad;
    if (geometric && magnus_mu123(*geometric) != m) ++bad;
  };
  const GaussDiagram b = corpus_diagram("borromean_long");
  check(b, nullptr);
  const bool anchor = mu123(b) == -1;

  std::mt19937_64 rng(77);
  for (int n = 0; n < 14; ++n) {
    auto word = gf_test::random_commutator_braid(rng, 1 + n % 3, n % 2);
    const GaussDiagram g = extract_diagram(braid_long_link(word)).diagram;
    if (!pairwise_unlinked(g)) return {false, "commutator braid with nonzero linking"};
    check(g, nullptr);
  }
  int geometric = 0;
  for (std::uint64_t seed = 1; geometric < 6 && seed < 5000; ++seed) {
    RandomLinkOptions o;
    o.max_chords = 14;
    const PolyLink l = random_long_link(seed, 3, 4, o);
    const GaussDiagram g = extract_diagram(l).diagram;
    if (g.chords().empty() || !pairwise_unlinked(g)) continue;
    const ClosedDiagram d = closed_diagram_from_polylink(l);
    check(g, &d);
    ++geometric;
  }
  std::ostringstream s;
  s << checked << " links (" << geometric << " geometric), values";
  for (auto [v, n] : values) s << " " << v << ":" << n;
  s << ", " << bad << " mismatches";
  return {bad == 0 && anchor && checked == 21, s.str()};
}

Outcome linking_localization() {
  const PolyLink hopf = std::get<PolyLink>(corpus_get("hopf_positive").payload);
  const GaussDiagram g = extract_diagram(hopf).diagram;
  const PolyLink closed = close_long_link(hopf);
  const double integral = gauss_linking_integral(closed.components[0], closed.components[1]);
  char buf[128];
  std::snprintf(buf, sizeof buf, "lk(0,1)=%lld lk(1,0)=%lld integral=%.12g", linking(g, 0, 1), linking(g, 1, 0),
                integral);
  return {linking(g, 0, 1) == 1 && linking(g, 1, 0) == 1 && std::abs(integral - 1.0) < 1e-6, buf};
}

Outcome property_suites() {
  gf_test::PropertyReport r;
  for (const std::string& name : corpus_list()) {
    const CorpusEntry e = corpus_get(name);
    if (auto g = std::get_if<GaussDiagram>(&e.payload)) gf_test::check_properties(*g, true, name, r);
    if (auto p = std::get_if<PolyLink>(&e.payload))
      gf_test::check_properties(extract_diagram(*p).diagram, true, name, r);
    if (auto d = std::get_if<ClosedDiagram>(&e.payload); d && d->component_count() == 1)
      gf_test::check_properties(cut_open(*d), true, name, r);
  }
  const std::size_t corpus_count = r.diagrams;
  const auto geometric = gf_test::random_geometric_diagrams(500, 3);
  for (std::size_t i = 0; i < geometric.size(); ++i)
    gf_test::check_properties(geometric[i], true, "geometric " + std::to_string(i), r);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    gf_test::RandomDiagramOptions o;
    o.multiples = i % 4;
    const DiagramKind kind = i % 2 ? DiagramKind::LongLink3 : DiagramKind::LongKnot;
    gf_test::check_properties(gf_test::random_diagram(rng, kind, o), false, "abstract " + std::to_string(i), r);
  }
  std::ostringstream s;
  s << corpus_count << " corpus + 500 geometric + 500 abstract diagrams, " << r.checks << " checks, "
    << r.failures.size() << " failures";
  if (!r.failures.empty()) s << " (first: " << r.failures.front() << ")";
  return {r.failures.empty(), s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double budget_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "fig11_unknot_triple counts (-1,1,1,0), casson 0", 1e9,
       [] { return counts_match("fig11_unknot_triple", {-1, 1, 1, 0}, 1.0); }},
      {2, "fig12_unknot_triple counts (0,-1,1,0), casson 0", 1e9,
       [] { return counts_match("fig12_unknot_triple", {0, -1, 1, 0}, 1.0); }},
      {3, "triple-point weight law over all 16 types", 1000.0, weight_law},
      {4, "resolution consistency on 200 multi-crossing diagrams x 5 seeds", 30000.0, resolution_consistency},
      {5, "casson agrees with the Conway oracle", 60000.0, casson_oracle_agreement},
      {6, "mu123 agrees with the Magnus oracle", 60000.0, mu_oracle_agreement},
      {7, "hopf_positive linking by counting and by the linking integral", 1e9, linking_localization},
      {8, "property suites", 1e9, property_suites},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    const bool ok = o.ok && ms < c.budget_ms;
    if (!ok) ++failed;
    std::printf("%s  %d  %s [%s] (%.1f ms)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), o.detail.c_str(),
                ms);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
