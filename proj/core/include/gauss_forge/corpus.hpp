#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gauss_forge/closed_diagram.hpp"
#include "gauss_forge/gauss.hpp"
#include "gauss_forge/geometry.hpp"

namespace gauss_forge {

enum class PayloadFormat { Diagram, Polyline, Pd };

struct ExpectedValue {
  long long value = 0;
  /// Where the number comes from, e.g. "worked-example", "oracle:conway".
  std::string source;
};

struct CorpusEntry {
  std::string name;
  std::string file;
  std::string description;
  PayloadFormat format = PayloadFormat::Diagram;
  std::string raw;  // file content, byte for byte
  std::variant<GaussDiagram, PolyLink, ClosedDiagram> payload;
  std::map<std::string, ExpectedValue> expected;
};

/// Names in index order.
std::vector<std::string> corpus_list();
/// Throws Error(UnknownEntry).
CorpusEntry corpus_get(std::string_view name);
/// Raw text of an embedded corpus file. Throws Error(UnknownEntry).
std::string_view corpus_file(std::string_view file_name);

}  // namespace gauss_forge
