#include "lieq/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lieq/catalog.hpp"
#include "lieq/expression.hpp"

namespace lieq {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON", line, column);
  }
}

const Json& field(const Json& j, const char* name, Json::value_t type) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'", 1, 1);
  const Json& v = j.at(name);
  if (v.type() != type) throw ParseError(std::string("field '") + name + "' has the wrong type", 1, 1);
  return v;
}

std::vector<std::string> strings(const Json& j, const char* name) {
  std::vector<std::string> out;
  for (const auto& v : field(j, name, Json::value_t::array)) {
    if (!v.is_string()) throw ParseError(std::string("'") + name + "' must list strings", 1, 1);
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

LieAlgebra algebra_from_json(const Json& j) {
  const std::string name = field(j, "name", Json::value_t::string).get<std::string>();
  const std::vector<std::string> symbols = strings(j, "symbols");
  const std::vector<std::string> generators = strings(j, "generators");
  auto index = [&](const std::string& g) -> std::size_t {
    auto it = std::find(generators.begin(), generators.end(), g);
    if (it == generators.end()) throw UnknownName("generator", g);
    return static_cast<std::size_t>(it - generators.begin());
  };
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const auto& entry : field(j, "brackets", Json::value_t::array)) {
      BracketEntry e{index(field(entry, "a", Json::value_t::string).get<std::string>()),
                     index(field(entry, "b", Json::value_t::string).get<std::string>()),
                     {}};
      for (const auto& term : field(entry, "result", Json::value_t::array)) {
        e.result.add(index(field(term, "gen", Json::value_t::string).get<std::string>()),
                     parse_scalar(field(term, "coeff", Json::value_t::string).get<std::string>(), symbols));
      }
      entries.push_back(std::move(e));
    }
  }
  return LieAlgebra(name, generators, symbols, entries);
}

Json algebra_to_json(const LieAlgebra& algebra) {
  Json j;
  j["name"] = algebra.name();
  j["symbols"] = algebra.symbols();
  j["generators"] = algebra.generators();
  Json brackets = Json::array();
  for (const auto& [ab, result] : algebra.table()) {
    Json terms = Json::array();
    for (const auto& [d, c] : result.terms()) {
      terms.push_back({{"gen", algebra.generator_name(d)}, {"coeff", c.to_string()}});
    }
    brackets.push_back(
        {{"a", algebra.generator_name(ab.first)}, {"b", algebra.generator_name(ab.second)}, {"result", terms}});
  }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

std::string export_algebra(const LieAlgebra& algebra) { return algebra_to_json(algebra).dump(2) + "\n"; }

RescalingMap parse_rescaling(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("rescaling map must be an object", 1, 1);
  RescalingMap map;
  for (const auto& [name, k] : j.items()) {
    if (!k.is_number_integer()) throw ParseError("exponent of " + name + " must be an integer", 1, 1);
    map[name] = k.get<int>();
  }
  return map;
}

Renaming parse_renaming(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("renaming must be an object", 1, 1);
  Renaming r;
  for (const auto& [from, to] : j.items()) {
    if (!to.is_string()) throw ParseError("renaming target of " + from + " must be a string", 1, 1);
    r[from] = to.get<std::string>();
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LieAlgebra load_algebra(const std::string& name_or_path) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return catalog(name_or_path);
  std::ifstream probe(name_or_path);
  if (!probe) throw UnknownName("catalog algebra or file", name_or_path);
  return parse_algebra(read_file(name_or_path));
}

}  // namespace lieq
