#include "gauss_forge/corpus.hpp"

#include <json.hpp>

#include "gauss_forge/error.hpp"
#include "gauss_forge/serialize.hpp"

namespace gauss_forge {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_corpus_files();
}

namespace {

using nlohmann::json;

const json& index() {
  static const json doc = [] {
    std::string_view text = corpus_file("index.json");
    return json::parse(text.begin(), text.end());
  }();
  return doc;
}

PayloadFormat format_of(const std::string& name) {
  if (name == "diagram") return PayloadFormat::Diagram;
  if (name == "polyline") return PayloadFormat::Polyline;
  if (name == "pd") return PayloadFormat::Pd;
  throw Error(ErrorCode::Parse, "corpus index: unknown format \"" + name + "\"");
}

}  // namespace

std::string_view corpus_file(std::string_view file_name) {
  for (const auto& [name, content] : detail::embedded_corpus_files())
    if (name == file_name) return content;
  throw Error(ErrorCode::UnknownEntry, "no corpus file '" + std::string(file_name) + "'");
}

std::vector<std::string> corpus_list() {
  std::vector<std::string> names;
  for (const json& e : index().at("entries")) names.push_back(e.at("name").get<std::string>());
  return names;
}

CorpusEntry corpus_get(std::string_view name) {
  for (const json& e : index().at("entries")) {
    if (e.at("name").get<std::string>() != name) continue;
    CorpusEntry entry;
    entry.name = std::string(name);
    entry.file = e.at("file").get<std::string>();
    entry.description = e.value("description", "");
    entry.format = format_of(e.at("format").get<std::string>());
    entry.raw = std::string(corpus_file(entry.file));
    switch (entry.format) {
      case PayloadFormat::Diagram:
        entry.payload = parse_diagram_json(entry.raw);
        break;
      case PayloadFormat::Polyline:
        entry.payload = parse_polyline_json(entry.raw);
        break;
      case PayloadFormat::Pd:
        entry.payload = parse_pd(entry.raw);
        break;
    }
    for (const auto& [key, v] : e.at("expected").items())
      entry.expected[key] = ExpectedValue{v.at("value").get<long long>(), v.at("source").get<std::string>()};
    return entry;
  }
  throw Error(ErrorCode::UnknownEntry, "no corpus entry '" + std::string(name) + "'");
}

}  // namespace gauss_forge
