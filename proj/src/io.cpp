#include "bmod/io.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace bmod::io {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

NamedInv module_from_json(const json& j, const std::string& base_dir);

NamedInv module_from_ref(const json& ref, const std::string& base_dir) {
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    json j = read_json_file(p.string());
    return module_from_json(j, p.parent_path().string());
  }
  return module_from_json(ref, base_dir);
}

NamedInv module_from_json(const json& j, const std::string&) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("join"))
    throw Error("module JSON needs \"elements\" and \"join\"");
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<Idx>> table = j.at("join").get<std::vector<std::vector<Idx>>>();
  ModulePtr base = BModule::make(names, table);
  std::vector<Idx> sigma;
  bool had_sigma = j.contains("sigma");
  if (had_sigma) {
    sigma = j.at("sigma").get<std::vector<Idx>>();
  } else {
    sigma.resize(static_cast<std::size_t>(base->size()));
    std::iota(sigma.begin(), sigma.end(), 0);
  }
  std::string name = j.value("name", "module");
  return NamedInv{name, make_inv(std::move(base), std::move(sigma)), had_sigma};
}

LoadedMorphism morphism_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    throw Error("morphism JSON needs \"dom\", \"cod\" and \"map\"");
  NamedInv dom = module_from_ref(j.at("dom"), base_dir);
  NamedInv cod = module_from_ref(j.at("cod"), base_dir);
  std::vector<Idx> map = j.at("map").get<std::vector<Idx>>();
  InvMorphism h(dom.object, cod.object, std::move(map));
  return LoadedMorphism{std::move(dom), std::move(cod), std::move(h)};
}

}  // namespace

NamedInv load_module_file(const std::string& path) {
  std::filesystem::path p(path);
  return module_from_json(read_json_file(path), p.parent_path().string());
}

NamedInv load_module_json(const std::string& text, const std::string& base_dir) {
  return module_from_json(json::parse(text), base_dir);
}

LoadedMorphism load_morphism_file(const std::string& path) {
  std::filesystem::path p(path);
  return morphism_from_json(read_json_file(path), p.parent_path().string());
}

LoadedSequence load_sequence_file(const std::string& path) {
  std::filesystem::path p(path);
  json j = read_json_file(path);
  if (!j.is_object() || !j.contains("aprime") || !j.contains("adoubleprime"))
    throw Error("sequence JSON needs \"aprime\" and \"adoubleprime\"");
  std::string dir = p.parent_path().string();
  return LoadedSequence{morphism_from_json(j.at("aprime"), dir),
                        morphism_from_json(j.at("adoubleprime"), dir)};
}

std::string module_to_json(const InvModule& e, const std::string& name, bool with_sigma) {
  json j;
  j["name"] = name;
  j["elements"] = e.base()->names();
  std::vector<std::vector<Idx>> table(static_cast<std::size_t>(e.size()));
  for (Idx x = 0; x < e.size(); ++x) {
    table[static_cast<std::size_t>(x)].resize(static_cast<std::size_t>(e.size()));
    for (Idx y = 0; y < e.size(); ++y) table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = e.join(x, y);
  }
  j["join"] = table;
  if (with_sigma) j["sigma"] = e.sigma_map();
  return j.dump(2);
}

std::string morphism_to_json(const InvMorphism& h) {
  json j;
  j["dom"] = json::parse(module_to_json(*h.dom(), "dom", !h.dom()->is_null_object()));
  j["cod"] = json::parse(module_to_json(*h.cod(), "cod", !h.cod()->is_null_object()));
  j["map"] = h.map();
  return j.dump(2);
}

std::string to_dot(const InvModule& e, const std::string& name) {
  static const char* palette[] = {"lightblue", "lightpink",  "lightgreen", "khaki",
                                  "plum",      "lightsalmon", "aquamarine", "wheat"};
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=ellipse, style=filled, fillcolor=white];\n";
  // style sigma-orbits identically
  int color = 0;
  std::vector<int> orbit_color(static_cast<std::size_t>(e.size()), -1);
  for (Idx x = 0; x < e.size(); ++x) {
    if (e.is_fixed(x) || orbit_color[static_cast<std::size_t>(x)] >= 0) continue;
    orbit_color[static_cast<std::size_t>(x)] = color;
    orbit_color[static_cast<std::size_t>(e.sigma(x))] = color;
    color = (color + 1) % 8;
  }
  for (Idx x = 0; x < e.size(); ++x) {
    os << "  n" << x << " [label=\"" << e.name(x) << "\"";
    if (orbit_color[static_cast<std::size_t>(x)] >= 0)
      os << ", fillcolor=" << palette[orbit_color[static_cast<std::size_t>(x)]];
    os << "];\n";
  }
  for (Idx x = 0; x < e.size(); ++x)
    for (Idx y = 0; y < e.size(); ++y)
      if (e.base()->covers(x, y)) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bmod::io
