#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gauss_forge/closed_diagram.hpp"
#include "gauss_forge/corpus.hpp"
#include "gauss_forge/error.hpp"
#include "gauss_forge/geometry.hpp"
#include "gauss_forge/oracles.hpp"
#include "gauss_forge/patterns.hpp"
#include "gauss_forge/resolve.hpp"
#include "gauss_forge/serialize.hpp"

namespace gauss_forge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Input = std::variant<GaussDiagram, PolyLink, ClosedDiagram>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
}

Input load(const std::string& path) {
  const std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return parse_pd(text);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("closure")) return parse_polyline_json(text);
  return parse_diagram_json(text);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GAUSS_FORGE_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw UsageError("GAUSS_FORGE_SEED must be an unsigned integer");
  }
}

GaussDiagram as_diagram(const Input& input) {
  if (auto g = std::get_if<GaussDiagram>(&input)) return *g;
  if (auto link = std::get_if<PolyLink>(&input)) return extract_diagram(*link).diagram;
  return cut_open(std::get<ClosedDiagram>(input));
}

ClosedDiagram as_closed(const Input& input, std::uint64_t seed) {
  if (auto d = std::get_if<ClosedDiagram>(&input)) return *d;
  if (auto link = std::get_if<PolyLink>(&input)) return closed_diagram_from_polylink(*link);
  return closure(resolve_all(std::get<GaussDiagram>(input), seed));
}

std::pair<int, int> parse_pair(const std::string& text, int strands) {
  int i = -1, j = -1;
  char comma = 0, extra = 0;
  if (std::sscanf(text.c_str(), "%d %c %d %c", &i, &comma, &j, &extra) != 3 || comma != ',')
    throw UsageError("--pair expects i,j");
  if (i < 0 || j < 0 || i >= strands || j >= strands || i == j)
    throw UsageError("--pair needs two distinct component indices below " + std::to_string(strands));
  return {i, j};
}

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_report(const GenericityReport& r) {
  return "crossings=" + std::to_string(r.crossing_count) + " max_multiplicity=" + std::to_string(r.max_multiplicity) +
         " min_crossing_angle=" + format_float(r.min_crossing_angle) + " min_height_gap=" +
         format_float(r.min_height_gap) + " min_cluster_separation=" + format_float(r.min_cluster_separation);
}

std::string format_counts(const PatternCounts& counts) {
  std::string line;
  auto emit = [&](auto patterns) {
    for (Pattern p : patterns) {
      if (!line.empty()) line += ' ';
      line += std::string(pattern_label(p)) + "=" + std::to_string(counts[p]);
    }
  };
  if (counts.kind() == DiagramKind::LongKnot)
    emit(kKnotPatterns);
  else
    emit(kLinkPatterns);
  return line;
}

std::size_t max_multiplicity(const GaussDiagram& g) {
  std::size_t m = 0;
  for (const Crossing& c : g.crossings()) m = std::max(m, c.passes.size());
  return m;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casson and triple linking invariants from multi-crossing diagrams", "gauss-forge"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input, output, polyline, invariant, pair = "0,1", crossing, entry;
  std::uint64_t seed = 0;
  bool counts = false, expected = false;
  double snap = kDefaultRelativeSnap;

  auto* compute = app.add_subcommand("compute", "Evaluate an invariant of a diagram");
  compute->add_option("--input", input, "Diagram, polyline or PD file")->required();
  compute->add_option("--invariant", invariant, "casson, mu123 or lk")
      ->check(CLI::IsMember({"casson", "mu123", "lk"}));
  compute->add_option("--pair", pair, "Components i,j for lk (0-based)");
  compute->add_flag("--counts", counts, "Also print every pattern pairing");

  auto* resolve = app.add_subcommand("resolve", "Resolve multiple crossings into double crossings");
  resolve->add_option("--input", input, "Diagram file")->required();
  auto* seed_opt = resolve->add_option("--seed", seed, "Offset seed (default $GAUSS_FORGE_SEED or 0)");
  resolve->add_option("--crossing", crossing, "Resolve only this crossing");
  resolve->add_option("--output", output, "Output diagram file, '-' for stdout")->required();

  auto* ingest = app.add_subcommand("ingest", "Extract a diagram from a polyline file");
  ingest->add_option("--polyline", polyline, "Polyline file")->required();
  ingest->add_option("--snap-eps", snap, "Snapping radius relative to the bounding-box diameter")
      ->check(CLI::PositiveNumber);
  ingest->add_option("--output", output, "Output diagram file, '-' for stdout")->required();

  auto* oracle = app.add_subcommand("oracle", "Independent reference computations");
  oracle->require_subcommand(1);
  std::string oracle_name;
  for (const char* name : {"conway", "a2", "mu123", "gauss-lk"}) {
    auto* sub = oracle->add_subcommand(name, std::string("Oracle ") + name);
    sub->add_option("--input", input, "PD, polyline or diagram file")->required();
    if (std::string(name) == "gauss-lk") sub->add_option("--pair", pair, "Components i,j (0-based)");
    sub->callback([&oracle_name, name] { oracle_name = name; });
  }

  auto* corpus = app.add_subcommand("corpus", "Built-in examples");
  corpus->require_subcommand(1);
  auto* corpus_list_cmd = corpus->add_subcommand("list", "List entry names");
  auto* corpus_emit_cmd = corpus->add_subcommand("emit", "Print an entry's data file");
  corpus_emit_cmd->add_option("name", entry, "Entry name")->required();
  corpus_emit_cmd->add_flag("--expected", expected, "Print the expected values instead");

  auto* check = app.add_subcommand("check", "Validate an input file and report genericity");
  check->add_option("--input", input, "Diagram, polyline or PD file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*compute) {
      const GaussDiagram g = as_diagram(load(input));
      const bool knot = g.kind() == DiagramKind::LongKnot;
      if (invariant.empty()) invariant = knot ? "casson" : "mu123";
      std::string value;
      if (invariant == "casson") {
        value = std::to_string(casson(g));
      } else if (invariant == "mu123") {
        value = std::to_string(mu123(g));
      } else {
        auto [i, j] = parse_pair(pair, strand_count(g.kind()));
        value = std::to_string(linking(g, i, j));
      }
      if (counts)
        out << format_counts(count_patterns(g)) << " " << invariant << "=" << value << "\n";
      else
        out << value << "\n";
    } else if (*resolve) {
      if (!*seed_opt) seed = default_seed();
      GaussDiagram g = as_diagram(load(input));
      if (!crossing.empty()) {
        auto idx = g.find(crossing);
        if (!idx) throw Error(ErrorCode::UnknownCrossing, "no crossing '" + crossing + "'");
        const std::size_t m = g.crossings()[*idx].passes.size();
        for (std::uint64_t attempt = 0;; ++attempt) {
          try {
            g = resolve_crossing(g, crossing, random_offsets(m, seed + attempt));
            break;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NonGenericOffsets || attempt >= 64) throw;
          }
        }
      } else {
        g = resolve_all(g, seed);
      }
      write_output(output, format_diagram_json(g), out);
    } else if (*ingest) {
      const PolyLink link = parse_polyline_json(read_file(polyline));
      ExtractOptions options;
      options.snap_eps = snap * std::max(bbox_diameter(link), 1e-300);
      const Extraction e = extract_diagram(link, options);
      write_output(output, format_diagram_json(e.diagram), out);
      (output == "-" ? err : out) << format_report(e.report) << "\n";
    } else if (*oracle) {
      const Input in = load(input);
      if (oracle_name == "gauss-lk") {
        const PolyLink* link = std::get_if<PolyLink>(&in);
        if (!link) throw Error(ErrorCode::Validation, "gauss-lk needs a polyline file");
        const PolyLink closed = close_long_link(*link);
        auto [i, j] = parse_pair(pair, static_cast<int>(closed.components.size()));
        out << format_float(gauss_linking_integral(closed.components[static_cast<std::size_t>(i)],
                                                   closed.components[static_cast<std::size_t>(j)]))
            << "\n";
      } else {
        const ClosedDiagram d = as_closed(in, default_seed());
        if (oracle_name == "conway")
          out << conway(d).to_string() << "\n";
        else if (oracle_name == "a2")
          out << casson_oracle(d) << "\n";
        else
          out << magnus_mu123(d) << "\n";
      }
    } else if (*corpus) {
      if (*corpus_list_cmd) {
        for (const std::string& name : corpus_list()) out << name << "\n";
      } else if (expected) {
        const CorpusEntry e = corpus_get(entry);
        for (const auto& [key, v] : e.expected) out << key << "=" << v.value << " (" << v.source << ")\n";
      } else {
        out << corpus_get(entry).raw;
      }
    } else if (*check) {
      const Input in = load(input);
      if (auto g = std::get_if<GaussDiagram>(&in)) {
        out << "valid " << kind_name(g->kind()) << " crossings=" << g->crossings().size()
            << " chords=" << g->chords().size() << " max_multiplicity=" << max_multiplicity(*g) << "\n";
      } else if (auto link = std::get_if<PolyLink>(&in)) {
        if (link->closure == Closure::Long) {
          out << "valid polyline " << format_report(extract_diagram(*link).report) << "\n";
        } else {
          const ClosedDiagram d = closed_diagram_from_polylink(*link);
          out << "valid closed polyline crossings=" << d.crossings().size() << " components=" << d.component_count()
              << "\n";
        }
      } else {
        const auto& d = std::get<ClosedDiagram>(in);
        out << "valid pd crossings=" << d.crossings().size() << " components=" << d.component_count() << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gauss_forge::cli
