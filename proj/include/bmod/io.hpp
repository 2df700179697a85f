#pragma once

#include <iosfwd>
#include <string>

#include "bmod/inv.hpp"

namespace bmod::io {

// Module file: {"name": str, "elements": [str...], "join": [[int...]...],
// "sigma": [int...] optional}.  A missing sigma means the identity involution.
// Morphism file: {"dom": <module or path>, "cod": <module or path>,
// "map": [int...]}.  Sequence file: {"aprime": <morphism>,
// "adoubleprime": <morphism>}.

struct NamedInv {
  std::string name;
  InvPtr object;
  bool had_sigma;  // whether the source carried an explicit involution
};

NamedInv load_module_file(const std::string& path);
NamedInv load_module_json(const std::string& text, const std::string& base_dir);

struct LoadedMorphism {
  NamedInv dom, cod;
  InvMorphism morphism;
};
LoadedMorphism load_morphism_file(const std::string& path);

struct LoadedSequence {
  LoadedMorphism aprime, adoubleprime;
};
LoadedSequence load_sequence_file(const std::string& path);

std::string module_to_json(const InvModule& e, const std::string& name, bool with_sigma);
std::string morphism_to_json(const InvMorphism& h);

// Hasse diagram: nodes are elements, edges the covering relation; the two
// members of a sigma-orbit share one style.
std::string to_dot(const InvModule& e, const std::string& name);

}  // namespace bmod::io
