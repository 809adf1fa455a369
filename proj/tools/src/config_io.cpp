#include "infgon_cli/config_io.hpp"

#include <fstream>
#include <sstream>

namespace infgon::cli {

namespace {

using nlohmann::json;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

Int int_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw DomainError(std::string("generator field '") + key + "' must be an integer");
  }
  const Int v = obj.at(key).get<Int>();
  check_coordinate(v, key);
  return v;
}

Generator generator_from_json(const json& g) {
  if (!g.is_object() || !g.contains("kind") || !g.at("kind").is_string()) {
    throw DomainError("each generator needs a string field 'kind'");
  }
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "explicit") {
    ExplicitArcs e;
    if (!g.contains("arcs") || !g.at("arcs").is_array()) throw DomainError("explicit generator needs 'arcs'");
    for (const auto& a : g.at("arcs")) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
        throw DomainError("explicit arcs are pairs [a, b], got " + a.dump());
      }
      e.arcs.push_back(make_finite_arc(a[0].get<Int>(), a[1].get<Int>()));
    }
    return e;
  }
  if (kind == "fan") return Fan{int_field(g, "vertex")};
  if (kind == "zigzag") return Zigzag{int_field(g, "center")};
  if (kind == "splitfan") return SplitFan{int_field(g, "p"), int_field(g, "q")};
  throw DomainError("unknown generator kind '" + kind + "'");
}

}  // namespace

ArcConfiguration config_from_json(const json& doc) {
  if (!doc.is_object()) throw DomainError("configuration must be a JSON object");
  ArcConfiguration c;
  if (doc.contains("generators")) {
    if (!doc.at("generators").is_array()) throw DomainError("'generators' must be a list");
    for (const auto& g : doc.at("generators")) c.generators.push_back(generator_from_json(g));
  }
  if (doc.contains("infinite_arcs")) {
    if (!doc.at("infinite_arcs").is_array()) throw DomainError("'infinite_arcs' must be a list");
    for (const auto& m : doc.at("infinite_arcs")) {
      if (!m.is_number_integer()) throw DomainError("infinite arcs are integers m, got " + m.dump());
      c.infinite_arcs.push_back(m.get<Int>());
    }
  }
  validate(c);
  return c;
}

json config_to_json(const ArcConfiguration& c) {
  json gens = json::array();
  for (const auto& g : c.generators) {
    gens.push_back(std::visit(Overloaded{
                                  [](const ExplicitArcs& e) {
                                    json arcs = json::array();
                                    for (const auto& a : e.arcs) arcs.push_back({a.a, a.b});
                                    return json{{"kind", "explicit"}, {"arcs", arcs}};
                                  },
                                  [](const Fan& f) { return json{{"kind", "fan"}, {"vertex", f.vertex}}; },
                                  [](const Zigzag& z) { return json{{"kind", "zigzag"}, {"center", z.center}}; },
                                  [](const SplitFan& s) { return json{{"kind", "splitfan"}, {"p", s.p}, {"q", s.q}}; },
                              },
                              g));
  }
  return json{{"generators", gens}, {"infinite_arcs", c.infinite_arcs}};
}

ArcConfiguration parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("configuration is not valid JSON: ") + e.what());
  }
  return config_from_json(doc);
}

ArcConfiguration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read configuration file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace infgon::cli
