// Command-line front end: check laws on structure files and run the constructions.
// Exit status: 0 all laws pass, 1 some law fails, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ternalg/bialgebra.hpp"
#include "ternalg/duality.hpp"
#include "ternalg/errors.hpp"
#include "ternalg/io.hpp"
#include "ternalg/kernels.hpp"
#include "ternalg/matched_pair.hpp"
#include "ternalg/trimodule.hpp"

namespace {

using namespace ternalg;
using io::Kind;

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;

struct InputError : Error {
  using Error::Error;
};

struct Options {
  std::string file;
  std::string mode = "total";
  std::string law = "all";
  bool quasi = false;
  bool full = false;
  bool json = false;
  std::string endo;
  std::string algebra;
  std::string out;
  bool flip_mu = false;
  bool flip_delta = false;
};

Mode parse_mode(const std::string& name) {
  if (name == "total") return Mode::Total;
  if (name == "partial") return Mode::Partial;
  return Mode::Weak;
}

TernaryAlgebra module_algebra(const io::ModuleData& m, const std::string& algebra_path) {
  if (!algebra_path.empty()) {
    io::StructureFile f = io::load_structure(algebra_path);
    if (f.kind != Kind::Algebra) throw InputError("--algebra expects a file of kind algebra");
    if (f.algebra->dim() != m.dim_a) throw InputError("--algebra dimension does not match the module");
    return *f.algebra;
  }
  if (!m.algebra) throw InputError("module file has no embedded algebra; pass --algebra");
  return *m.algebra;
}

std::vector<LawReport> run_checks(const io::StructureFile& f, const Options& opt) {
  const Mode mode = parse_mode(opt.mode);
  const std::string& law = opt.law;
  const bool all = law == "all";
  std::vector<LawReport> out;
  auto unsupported = [&] {
    throw InputError("law \"" + law + "\" does not apply to kind " + std::string(io::kind_name(f.kind)));
  };
  switch (f.kind) {
    case Kind::Algebra:
      if (all || law == "assoc") out.push_back(check_hom_associativity(*f.algebra, mode));
      if (all || law == "multiplicative") out.push_back(check_multiplicative(*f.algebra));
      break;
    case Kind::Coalgebra:
      if (all || law == "coassoc") out.push_back(check_hom_coassociativity(*f.coalgebra, mode));
      if (all || law == "multiplicative") out.push_back(check_comultiplicative(*f.coalgebra));
      break;
    case Kind::Bialgebra: {
      const TernaryBialgebra& B = *f.bialgebra;
      if (all || law == "bialgebra") {
        out.push_back(check_bialgebra(B, mode));
      } else if (law == "assoc") {
        out.push_back(check_hom_associativity(B.alg(), mode));
      } else if (law == "coassoc") {
        out.push_back(check_hom_coassociativity(B.coalg(), mode));
      } else if (law == "compat") {
        out.push_back(check_compatibility(B));
      }
      if (all || law == "multiplicative") {
        out.push_back(check_multiplicative(B.alg()));
        out.push_back(check_comultiplicative(B.coalg()));
      }
      break;
    }
    case Kind::Module:
      if (all || law == "trimodule") {
        const io::ModuleData& m = *f.module;
        out.push_back(check_trimodule(module_algebra(m, opt.algebra), m.module, m.actions, mode,
                                      opt.full ? TrimoduleLevel::Full : TrimoduleLevel::Quasi));
      }
      break;
    case Kind::MatchedPair:
      if (all || law == "matchedpair") out.push_back(check_matched_pair(*f.matched_pair, mode, opt.full));
      break;
    case Kind::Map:
      break;
  }
  if (out.empty()) unsupported();
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os || !(os << text)) throw InputError("cannot write " + path);
}

int cmd_check(const Options& opt) {
  std::string raw;
  io::StructureFile f = io::load_structure(opt.file, &raw);
  std::vector<LawReport> laws = run_checks(f, opt);
  io::ReportContext ctx{io::sha256_hex(raw), "check --law " + opt.law, opt.mode};
  write_output(opt.json ? io::report_json(ctx, laws) : io::report_text(ctx, laws), opt.out);
  for (const auto& r : laws) {
    if (!r.passed()) return kExitViolations;
  }
  return kExitPass;
}

int cmd_twist(const Options& opt) {
  io::StructureFile f = io::load_structure(opt.file);
  io::StructureFile rho = io::load_structure(opt.endo);
  if (f.kind != Kind::Algebra) throw InputError("twist expects a file of kind algebra");
  if (rho.kind != Kind::Map) throw InputError("--endo expects a file of kind map");
  write_output(io::serialize(yau_twist(*f.algebra, *rho.map)), opt.out);
  return kExitPass;
}

int cmd_dualize(const Options& opt) {
  io::StructureFile f = io::load_structure(opt.file);
  switch (f.kind) {
    case Kind::Algebra: write_output(io::serialize(dualize_algebra(*f.algebra)), opt.out); break;
    case Kind::Coalgebra: write_output(io::serialize(dualize_coalgebra(*f.coalgebra)), opt.out); break;
    case Kind::Bialgebra: write_output(io::serialize(dualize_bialgebra(*f.bialgebra)), opt.out); break;
    case Kind::Map: write_output(io::serialize(dualize_linear_map(*f.map)), opt.out); break;
    default: throw InputError("dualize does not apply to kind " + std::string(io::kind_name(f.kind)));
  }
  return kExitPass;
}

int cmd_semidirect(const Options& opt) {
  io::StructureFile f = io::load_structure(opt.file);
  if (f.kind != Kind::Module) throw InputError("semidirect expects a file of kind module");
  const io::ModuleData& m = *f.module;
  write_output(io::serialize(semidirect_product(module_algebra(m, opt.algebra), m.module, m.actions)), opt.out);
  return kExitPass;
}

int cmd_doublecross(const Options& opt) {
  io::StructureFile f = io::load_structure(opt.file);
  if (f.kind != Kind::MatchedPair) throw InputError("doublecross expects a file of kind matched_pair");
  write_output(io::serialize(bicrossed_product(*f.matched_pair)), opt.out);
  return kExitPass;
}

int cmd_signflip(const Options& opt) {
  io::StructureFile f = io::load_structure(opt.file);
  if (f.kind != Kind::Bialgebra) throw InputError("signflip expects a file of kind bialgebra");
  write_output(io::serialize(sign_variant(*f.bialgebra, opt.flip_mu, opt.flip_delta)), opt.out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  kernels::set_default_policy(kernels::policy_from_env());

  CLI::App app{"Exact verification of ternary hom-structures given by structure constants"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "check laws on a structure file");
  check->add_option("file", opt.file, "structure file")->required();
  check->add_option("--mode", opt.mode, "total, partial or weak")
      ->check(CLI::IsMember({"total", "partial", "weak"}));
  check->add_option("--law", opt.law, "law to check")
      ->check(CLI::IsMember(
          {"assoc", "coassoc", "multiplicative", "compat", "bialgebra", "trimodule", "matchedpair", "all"}));
  auto* quasi = check->add_flag("--quasi", opt.quasi, "trimodule and matched-pair equations only (default)");
  check->add_flag("--full", opt.full, "also check braiding and twist intertwining")->excludes(quasi);
  check->add_flag("--json", opt.json, "emit the machine-readable report");
  check->add_option("--algebra", opt.algebra, "acting algebra for a module file without one");
  check->add_option("--out", opt.out, "write the report here instead of standard output");

  auto* twist = app.add_subcommand("twist", "replace mu by rho o mu with twists rho");
  twist->add_option("file", opt.file, "algebra file with identity twists")->required();
  twist->add_option("--endo", opt.endo, "map file holding rho")->required();

  auto* dualize = app.add_subcommand("dualize", "dual structure with respect to the dual basis");
  dualize->add_option("file", opt.file, "algebra, coalgebra, bialgebra or map file")->required();

  auto* semidirect = app.add_subcommand("semidirect", "product on A + V from a trimodule");
  semidirect->add_option("file", opt.file, "module file")->required();
  semidirect->add_option("--algebra", opt.algebra, "acting algebra for a module file without one");

  auto* doublecross = app.add_subcommand("doublecross", "bicrossed product of a matched pair");
  doublecross->add_option("file", opt.file, "matched_pair file")->required();

  auto* signflip = app.add_subcommand("signflip", "negate the product and/or the coproduct");
  signflip->add_option("file", opt.file, "bialgebra file")->required();
  signflip->add_flag("--mu", opt.flip_mu, "negate the product");
  signflip->add_flag("--delta", opt.flip_delta, "negate the coproduct");

  for (auto* sub : {twist, dualize, semidirect, doublecross, signflip}) {
    sub->add_option("--out", opt.out, "write the result here instead of standard output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (twist->parsed()) return cmd_twist(opt);
    if (dualize->parsed()) return cmd_dualize(opt);
    if (semidirect->parsed()) return cmd_semidirect(opt);
    if (doublecross->parsed()) return cmd_doublecross(opt);
    if (signflip->parsed()) return cmd_signflip(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
