// Command-line front end: validation, computation, recorded-enumeration
// replay, DOT export.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmod/build.hpp"
#include "bmod/checks.hpp"
#include "bmod/galois.hpp"
#include "bmod/io.hpp"
#include "bmod/radical.hpp"
#include "bmod/sdes.hpp"

namespace {

using namespace bmod;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;
constexpr int kExitLimit = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::uint64_t limit = 10'000'000;
  std::string format = "text";
  std::uint64_t seed = 20260809;
  SearchLimits limits() const { return SearchLimits{limit}; }
  bool json_out() const { return format == "json"; }
};

void print_module(const Options& opt, const io::NamedInv& m) {
  if (opt.json_out()) {
    std::cout << io::module_to_json(*m.object, m.name, m.had_sigma) << "\n";
    return;
  }
  std::cout << m.name << ": " << m.object->size() << " elements";
  if (m.had_sigma) std::cout << ", " << mask_count(m.object->fixed_mask()) << " null";
  std::cout << "\n";
  for (Idx x = 0; x < m.object->size(); ++x) {
    std::cout << "  " << m.object->name(x);
    if (m.had_sigma && !m.object->is_fixed(x))
      std::cout << "  (sigma: " << m.object->name(m.object->sigma(x)) << ")";
    std::cout << "\n";
  }
}

int cmd_validate(const Options& opt, const std::string& path) {
  try {
    io::NamedInv m = io::load_module_file(path);
    if (opt.json_out()) {
      json j;
      j["valid"] = true;
      j["elements"] = m.object->size();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "valid module with " << m.object->size() << " elements\n";
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    if (opt.json_out()) {
      json j;
      j["valid"] = false;
      j["law"] = e.law;
      j["witness"] = e.witness;
      j["message"] = e.what();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "invalid: " << e.what() << "\n";
    }
    return kExitClaim;
  }
}

int cmd_hom(const Options& opt, const std::string& a_path, const std::string& b_path, bool inv) {
  io::NamedInv a = io::load_module_file(a_path);
  io::NamedInv b = io::load_module_file(b_path);
  if (inv) {
    auto homs = inv_hom_set(a.object, b.object, opt.limits());
    if (opt.json_out()) {
      json j = json::array();
      for (const InvMorphism& h : homs) j.push_back(h.map());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << homs.size() << " equivariant morphisms\n";
      for (const InvMorphism& h : homs) {
        for (Idx x = 0; x < a.object->size(); ++x) std::cout << (x ? "," : "  ") << h(x);
        std::cout << "\n";
      }
    }
  } else {
    auto homs = hom_set(a.object->base(), b.object->base(), opt.limits());
    if (opt.json_out()) {
      json j = json::array();
      for (const Morphism& h : homs) j.push_back(h.map());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << homs.size() << " morphisms\n";
      for (const Morphism& h : homs) {
        for (Idx x = 0; x < a.object->size(); ++x) std::cout << (x ? "," : "  ") << h(x);
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_dual(const Options& opt, const std::string& path) {
  io::NamedInv a = io::load_module_file(path);
  InvDual d = dual_inv(a.object);
  print_module(opt, io::NamedInv{a.name + "*", d.object, a.had_sigma});
  return kExitOk;
}

int cmd_ker(const Options& opt, const std::string& path) {
  io::LoadedMorphism f = io::load_morphism_file(path);
  InvSub k = inv_kernel(f.morphism);
  if (opt.json_out()) {
    json j;
    j["members"] = mask_to_list(k.members);
    j["module"] = json::parse(io::module_to_json(*k.module, "kernel", true));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kernel has " << k.elems.size() << " elements:";
    for (Idx e : k.elems) std::cout << " " << f.dom.object->name(e);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_coker(const Options& opt, const std::string& path) {
  io::LoadedMorphism f = io::load_morphism_file(path);
  InvQuotient q = inv_cokernel(f.morphism);
  if (opt.json_out()) {
    json j;
    j["module"] = json::parse(io::module_to_json(*q.object, "cokernel", true));
    j["map"] = q.projection.map();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cokernel has " << q.object->size() << " elements; map:";
    for (Idx x = 0; x < f.cod.object->size(); ++x) std::cout << " " << q.projection(x);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_normal_image(const Options& opt, const std::string& subset_path, const std::string& f_path) {
  io::NamedInv f = io::load_module_file(f_path);
  std::ifstream in(subset_path);
  if (!in) throw Error("cannot open file: " + subset_path);
  json j;
  in >> j;
  std::vector<Idx> subset = j.get<std::vector<Idx>>();
  Mask members(static_cast<std::size_t>(f.object->size()), false);
  for (Idx x : subset) {
    if (x < 0 || x >= f.object->size()) throw Error("subset index out of range");
    members[static_cast<std::size_t>(x)] = true;
  }
  Mask im = normal_image(f.object, members);
  if (opt.json_out()) {
    json out;
    out["normal_image"] = mask_to_list(im);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "normal image has " << mask_count(im) << " elements:";
    for (Idx x : mask_to_list(im)) std::cout << " " << f.object->name(x);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_nsb(const Options& opt, const std::string& path) {
  io::NamedInv e = io::load_module_file(path);
  NsbLattice l = nsb(e.object, opt.limits());
  auto witness = modularity_failure(l);
  if (opt.json_out()) {
    json j;
    j["count"] = l.members.size();
    json members = json::array();
    for (const Mask& m : l.members) members.push_back(mask_to_list(m));
    j["members"] = members;
    j["modular"] = !witness.has_value();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << l.members.size() << " normal subobjects\n";
    for (const Mask& m : l.members) {
      std::cout << "  {";
      bool first = true;
      for (Idx x : mask_to_list(m)) {
        std::cout << (first ? "" : ", ") << e.object->name(x);
        first = false;
      }
      std::cout << "}\n";
    }
    std::cout << "lattice is " << (witness ? "not modular" : "modular") << "\n";
  }
  return kExitOk;
}

int cmd_radical(const Options& opt, const std::string& path) {
  io::NamedInv a = io::load_module_file(path);
  Congruence rad = radical(a.object->base());
  auto maxi = maximal_ideals(a.object->base());
  if (opt.json_out()) {
    json j;
    j["classes"] = rad.classes();
    j["trivial"] = rad.is_equality();
    json ms = json::array();
    for (const Ideal& i : maxi) ms.push_back(mask_to_list(i.members));
    j["maximal_ideals"] = ms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << maxi.size() << " maximal ideals; radical congruence has " << rad.class_count()
              << " classes (" << (rad.is_equality() ? "trivial" : "not trivial") << ")\n";
  }
  return kExitOk;
}

int cmd_support(const Options& opt, const std::string& path) {
  io::LoadedMorphism f = io::load_morphism_file(path);
  SupportDecomposition d = support_decomposition(f.morphism.underlying());
  if (opt.json_out()) {
    json j;
    j["support"] = mask_to_list(d.support);
    j["q"] = d.q.map();
    j["inj"] = d.inj.map();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "support has " << d.elems.size() << " elements:";
    for (Idx x : d.elems) std::cout << " " << f.dom.object->name(x);
    std::cout << "\nf = inj o q with q surjective and inj injective\n";
  }
  return kExitOk;
}

int cmd_sdes_validate(const Options& opt, const std::string& path) {
  io::LoadedSequence s = io::load_sequence_file(path);
  try {
    SdesReport rep = validate_sdes(s.aprime.morphism, s.adoubleprime.morphism);
    if (opt.json_out()) {
      json j;
      j["valid"] = true;
      j["five_term_exact"] = rep.five_term_exact;
      j["maps_exact"] = rep.maps_exact;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "short doubly exact; five-term sequence "
                << (rep.five_term_exact ? "exact" : "not exact") << ", structural maps "
                << (rep.maps_exact ? "exact" : "not exact") << "\n";
    }
    return kExitOk;
  } catch (const NotKernel& e) {
    std::cout << "NotKernel: " << e.what() << "\n";
    return kExitClaim;
  } catch (const NotCokernel& e) {
    std::cout << "NotCokernel: " << e.what() << "\n";
    return kExitClaim;
  }
}

int cmd_satellite(const Options& opt, const std::string& seq_path, const std::string& q_path) {
  io::LoadedSequence s = io::load_sequence_file(seq_path);
  io::NamedInv q = io::load_module_file(q_path);
  SdesReport rep = validate_sdes(s.aprime.morphism, s.adoubleprime.morphism);
  FunctorF F(q.object, opt.limits());
  SatelliteResult sf = satellite_eval(F, rep.seq.left, rep.seq, opt.limits());
  if (opt.json_out()) {
    json j;
    j["value"] = json::parse(io::module_to_json(*sf.value.coker.object, "SF", true));
    j["non_null"] = !sf.value.coker.object->is_null_object();
    j["condition_a"] = sf.actions.holds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "SF(A') has " << sf.value.coker.object->size() << " elements, "
              << mask_count(sf.value.coker.object->fixed_mask()) << " null; condition (a) "
              << (sf.actions.holds ? "holds" : "fails") << " for all " << sf.actions.action_table.size()
              << " endomorphisms\n";
  }
  return kExitOk;
}

int print_report(const Options& opt, const Report& rep) {
  if (opt.json_out()) {
    json j;
    j["title"] = rep.title;
    j["ok"] = rep.ok();
    json claims = json::array();
    for (const Claim& c : rep.claims) {
      json cj;
      cj["name"] = c.name;
      cj["expected"] = c.expected;
      cj["got"] = c.got;
      cj["pass"] = c.pass;
      claims.push_back(cj);
    }
    j["claims"] = claims;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.title << "\n";
    for (const Claim& c : rep.claims)
      std::cout << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name << ": expected "
                << c.expected << ", got " << c.got << "\n";
    std::cout << (rep.ok() ? "all claims hold" : "SOME CLAIMS FAILED") << "\n";
  }
  return rep.ok() ? kExitOk : kExitClaim;
}

int cmd_example(const Options& opt, const std::string& which) {
  if (which == "diagonal") return print_report(opt, diagonal_example(opt.limits()));
  if (which == "s3") return print_report(opt, s3_example(opt.limits()));
  std::cerr << "unknown example: " << which << " (expected diagonal or s3)\n";
  return kExitUsage;
}

int cmd_paper_check(const Options& opt) {
  auto criteria = acceptance_criteria(opt.seed, opt.limits());
  bool all_ok = true;
  if (opt.json_out()) {
    json j = json::array();
    for (const Criterion& c : criteria) {
      json cj;
      cj["criterion"] = c.index;
      cj["title"] = c.title;
      cj["ok"] = c.ok();
      json claims = json::array();
      for (const Claim& cl : c.claims) {
        json e;
        e["name"] = cl.name;
        e["expected"] = cl.expected;
        e["got"] = cl.got;
        e["pass"] = cl.pass;
        claims.push_back(e);
      }
      cj["claims"] = claims;
      j.push_back(cj);
      all_ok = all_ok && c.ok();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Criterion& c : criteria) {
      bool ok = c.ok();
      all_ok = all_ok && ok;
      std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.index << ": " << c.title << " ("
                << c.claims.size() << " checks)\n";
      for (const Claim& cl : c.claims)
        if (!cl.pass)
          std::cout << "  FAIL " << cl.name << ": expected " << cl.expected << ", got " << cl.got
                    << "\n";
    }
  }
  return all_ok ? kExitOk : kExitClaim;
}

int cmd_dot(const std::string& path, const std::string& out_path) {
  io::NamedInv m = io::load_module_file(path);
  std::string dot = io::to_dot(*m.object, m.name);
  if (out_path.empty() || out_path == "-") {
    std::cout << dot;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file: " + out_path);
    out << dot;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite B-modules and their involutive cousins"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--limit", opt.limit, "search cap for enumeration routines")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for the randomized property sweeps");

  std::string a_path, b_path, out_path = "-", which;
  bool inv = false;

  auto* validate = app.add_subcommand("validate", "check the module laws of a join table");
  validate->add_option("module", a_path)->required();

  auto* hom = app.add_subcommand("hom", "enumerate all morphisms A -> B");
  hom->add_option("A", a_path)->required();
  hom->add_option("B", b_path)->required();
  hom->add_flag("--inv", inv, "equivariant morphisms in Bmod^s");

  auto* dual = app.add_subcommand("dual", "the dual module");
  dual->add_option("module", a_path)->required();

  auto* ker = app.add_subcommand("ker", "kernel of a morphism in Bmod^s");
  ker->add_option("morphism", a_path)->required();

  auto* coker = app.add_subcommand("coker", "cokernel of a morphism in Bmod^s");
  coker->add_option("morphism", a_path)->required();

  auto* nimage = app.add_subcommand("normal-image", "normal image of a subobject");
  nimage->add_option("subset", a_path)->required();
  nimage->add_option("module", b_path)->required();

  auto* nsbc = app.add_subcommand("nsb", "lattice of normal subobjects");
  nsbc->add_option("module", a_path)->required();

  auto* rad = app.add_subcommand("radical", "radical congruence and maximal ideals");
  rad->add_option("module", a_path)->required();

  auto* support = app.add_subcommand("support", "support decomposition of a morphism");
  support->add_option("morphism", a_path)->required();

  auto* sdes = app.add_subcommand("sdes-validate", "check a short doubly exact sequence");
  sdes->add_option("sequence", a_path)->required();

  auto* satellite = app.add_subcommand("satellite", "satellite value over a resolution");
  satellite->add_option("sequence", a_path)->required();
  satellite->add_option("--hom", b_path, "module Q for the hom functor")->required();

  auto* example = app.add_subcommand("example", "run a worked example report");
  example->add_option("which", which, "diagonal or s3")->required();

  app.add_subcommand("paper-check", "replay every recorded enumeration and property");

  auto* dot = app.add_subcommand("dot", "emit a Hasse diagram in DOT format");
  dot->add_option("module", a_path)->required();
  dot->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, a_path);
    if (hom->parsed()) return cmd_hom(opt, a_path, b_path, inv);
    if (dual->parsed()) return cmd_dual(opt, a_path);
    if (ker->parsed()) return cmd_ker(opt, a_path);
    if (coker->parsed()) return cmd_coker(opt, a_path);
    if (nimage->parsed()) return cmd_normal_image(opt, a_path, b_path);
    if (nsbc->parsed()) return cmd_nsb(opt, a_path);
    if (rad->parsed()) return cmd_radical(opt, a_path);
    if (support->parsed()) return cmd_support(opt, a_path);
    if (sdes->parsed()) return cmd_sdes_validate(opt, a_path);
    if (satellite->parsed()) return cmd_satellite(opt, a_path, b_path);
    if (example->parsed()) return cmd_example(opt, which);
    if (app.get_subcommand("paper-check")->parsed()) return cmd_paper_check(opt);
    if (dot->parsed()) return cmd_dot(a_path, out_path);
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitClaim;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaim;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaim;
  }
  return kExitUsage;
}
