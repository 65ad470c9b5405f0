#include "gauss_forge/serialize.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "gauss_forge/error.hpp"

namespace gauss_forge {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) bad(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) bad(where + ": unexpected key \"" + it.key() + "\"");
  }
}

Rational rational_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) bad(where + ": \"" + key + "\" must be a rational string");
  return parse_rational(v.get<std::string>());
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) bad(where + ": expected a number");
  return v.get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

GaussDiagram parse_diagram_json(std::string_view text) {
  const json doc = parse_json(text);
  only_keys(doc, {"kind", "crossings"}, "diagram");
  const json& kind_field = field(doc, "kind", "diagram");
  if (!kind_field.is_string()) bad("diagram: \"kind\" must be a string");
  auto kind = parse_kind(kind_field.get<std::string>());
  if (!kind) bad("diagram: unknown kind \"" + kind_field.get<std::string>() + "\"");
  const json& list = field(doc, "crossings", "diagram");
  if (!list.is_array()) bad("diagram: \"crossings\" must be an array");

  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < list.size(); ++c) {
    const std::string where = "crossings[" + std::to_string(c) + "]";
    only_keys(list[c], {"id", "passes"}, where);
    const json& id = field(list[c], "id", where);
    if (!id.is_string()) bad(where + ": \"id\" must be a string");
    const json& passes = field(list[c], "passes", where);
    if (!passes.is_array()) bad(where + ": \"passes\" must be an array");
    Crossing x;
    x.id = id.get<std::string>();
    for (std::size_t p = 0; p < passes.size(); ++p) {
      const std::string pw = where + ".passes[" + std::to_string(p) + "]";
      only_keys(passes[p], {"strand", "param", "angle", "height"}, pw);
      const json& strand = field(passes[p], "strand", pw);
      if (!strand.is_number_integer()) bad(pw + ": \"strand\" must be an integer");
      Pass pass;
      pass.point.strand = strand.get<int>();
      pass.point.param = rational_field(passes[p], "param", pw);
      pass.angle = number(field(passes[p], "angle", pw), pw + ".angle");
      pass.height = rational_field(passes[p], "height", pw);
      x.passes.push_back(std::move(pass));
    }
    crossings.push_back(std::move(x));
  }
  return build_diagram(*kind, std::move(crossings));
}

std::string format_diagram_json(const GaussDiagram& g) {
  std::string out = "{\n  \"kind\": " + json(std::string(kind_name(g.kind()))).dump() + ",\n  \"crossings\": [";
  const auto& xs = g.crossings();
  for (std::size_t c = 0; c < xs.size(); ++c) {
    out += c ? ",\n" : "\n";
    out += "    {\n      \"id\": " + json(xs[c].id).dump() + ",\n      \"passes\": [\n";
    for (std::size_t p = 0; p < xs[c].passes.size(); ++p) {
      const Pass& pass = xs[c].passes[p];
      out += "        {\"strand\": " + std::to_string(pass.point.strand) + ", \"param\": \"" +
             format_rational(pass.point.param) + "\", \"angle\": " + format_double(pass.angle) +
             ", \"height\": \"" + format_rational(pass.height) + "\"}";
      out += p + 1 < xs[c].passes.size() ? ",\n" : "\n";
    }
    out += "      ]\n    }";
  }
  out += xs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

PolyLink parse_polyline_json(std::string_view text) {
  const json doc = parse_json(text);
  only_keys(doc, {"closure", "components"}, "polyline");
  const json& closure = field(doc, "closure", "polyline");
  PolyLink link;
  if (closure == "long") {
    link.closure = Closure::Long;
  } else if (closure == "closed") {
    link.closure = Closure::Closed;
  } else {
    bad("polyline: \"closure\" must be \"long\" or \"closed\"");
  }
  const json& comps = field(doc, "components", "polyline");
  if (!comps.is_array()) bad("polyline: \"components\" must be an array");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::string where = "components[" + std::to_string(k) + "]";
    if (!comps[k].is_array()) bad(where + ": expected an array of vertices");
    auto& comp = link.components.emplace_back();
    for (std::size_t i = 0; i < comps[k].size(); ++i) {
      const json& v = comps[k][i];
      const std::string vw = where + "[" + std::to_string(i) + "]";
      if (!v.is_array() || v.size() != 3) bad(vw + ": expected [x, y, z]");
      comp.push_back({number(v[0], vw), number(v[1], vw), number(v[2], vw)});
    }
  }
  validate(link);
  return link;
}

std::string format_polyline_json(const PolyLink& link) {
  std::string out = "{\n  \"closure\": \"";
  out += link.closure == Closure::Long ? "long" : "closed";
  out += "\",\n  \"components\": [";
  for (std::size_t k = 0; k < link.components.size(); ++k) {
    out += k ? ",\n    [\n" : "\n    [\n";
    const auto& comp = link.components[k];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      out += "      [" + format_double(comp[i].x) + ", " + format_double(comp[i].y) + ", " + format_double(comp[i].z) + "]";
      out += i + 1 < comp.size() ? ",\n" : "\n";
    }
    out += "    ]";
  }
  out += link.components.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace gauss_forge
