// dendri: command-line front end.
//
// Exit status: 0 pass, 1 verification failure (counterexample on stderr),
// 2 input error.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dendri/dendri.hpp"

namespace {

using namespace dendri;

constexpr const char* kVersion = "dendri 0.1.0";

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string g_command_line;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

struct Input {
  std::string path;
  std::string digest;
};

class Provenance {
 public:
  std::string read(const std::string& path) {
    std::string text = read_text_file(path);
    inputs_.push_back({path, sha256_hex(text)});
    return text;
  }
  void note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }

  [[nodiscard]] json to_json() const {
    json j{{"tool", kVersion}, {"command", g_command_line}};
    json ins = json::array();
    for (const auto& in : inputs_) ins.push_back({{"path", in.path}, {"sha256", in.digest}});
    j["inputs"] = ins;
    for (const auto& [k, v] : notes_) j[k] = v;
    return j;
  }

  [[nodiscard]] std::vector<std::string> comment_lines() const {
    std::vector<std::string> out = {std::string("tool: ") + kVersion, "command: " + g_command_line};
    for (const auto& in : inputs_) out.push_back("input: " + in.path + " sha256=" + in.digest);
    for (const auto& [k, v] : notes_) out.push_back(k + ": " + v);
    return out;
  }

 private:
  std::vector<Input> inputs_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string json_text(json j, const Provenance& prov) {
  j["provenance"] = prov.to_json();
  return j.dump(2) + "\n";
}

FDAlgebra read_algebra(Provenance& prov, const std::string& path) {
  return algebra_from_json(parse_json_text(prov.read(path), path));
}

LinearOperator read_operator(Provenance& prov, const std::string& path) {
  return operator_from_json(parse_json_text(prov.read(path), path));
}

VarietyPresentation read_variety(Provenance& prov, const std::string& source) {
  for (const auto& name : builtin_names())
    if (name == source) return builtin(name);
  std::string name = source;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return parse_variety(prov.read(source), name);
}

int report_failure(const VerificationReport& rep, const std::string& what) {
  std::cerr << "FAIL: " << what << "\n";
  for (const auto& c : rep.counterexamples) std::cerr << "  " << render(c) << "\n";
  return kFail;
}

// ---------------------------------------------------------------------------

struct IdentitiesArgs {
  std::string variety;
  std::string mode = "tri";
  bool dendriform = false;
  std::string out;
};

int cmd_identities(const IdentitiesArgs& a) {
  Provenance prov;
  const VarietyPresentation v = read_variety(prov, a.variety);
  const Mode mode = mode_from_name(a.mode);
  const GeneratedIdentitySet set =
      a.dendriform ? generate_dendriform_identities(v, mode) : generate_variety_identities(v, mode);
  prov.note("variety", v.name);
  write_output(a.out, render_identity_file(set, prov.comment_lines()));
  return kPass;
}

struct VerifyArgs {
  std::string algebra;
  std::string identities;
  std::string variety;
  std::string mode;
  bool dendriform = false;
};

int cmd_verify(const VerifyArgs& a) {
  Provenance prov;
  const FDAlgebra alg = read_algebra(prov, a.algebra);
  std::vector<NamedIdentity> ids;
  if (!a.identities.empty()) {
    if (!a.variety.empty()) throw Error("give either --identities or --variety, not both");
    const IdentityFile f = parse_identity_file(prov.read(a.identities));
    if (f.signature.context != alg.signature().context)
      throw SignatureError("identity file context " + context_name(f.signature.context) + " does not match algebra " +
                           context_name(alg.signature().context));
    for (auto& id : f.identities) ids.push_back({id.id, id.poly.with_signature(alg.signature())});
  } else if (!a.variety.empty()) {
    const VarietyPresentation v = read_variety(prov, a.variety);
    if (a.mode.empty()) {
      if (a.dendriform) throw Error("--dendriform needs --mode");
      ids = v.identities;
    } else {
      const Mode mode = mode_from_name(a.mode);
      ids = (a.dendriform ? generate_dendriform_identities(v, mode) : generate_variety_identities(v, mode)).named();
    }
    for (auto& id : ids) id.poly = id.poly.with_signature(alg.signature());
  } else {
    throw Error("verify needs --identities or --variety");
  }
  const VerificationReport rep = check_identities(alg, ids);
  if (!rep.passed()) return report_failure(rep, "identities do not hold");
  std::cout << "PASS: " << ids.size() << " identities hold on the " << alg.dim() << "-dimensional algebra\n";
  return kPass;
}

struct RbArgs {
  std::string algebra;
  std::string op;
  std::string weight = "0";
};

int cmd_rb_check(const RbArgs& a) {
  Provenance prov;
  const FDAlgebra alg = read_algebra(prov, a.algebra);
  const LinearOperator r = read_operator(prov, a.op);
  const Rational lambda = parse_rational(a.weight);
  const VerificationReport rep = check_rota_baxter(alg, r, lambda);
  if (!rep.passed()) return report_failure(rep, "not a Rota-Baxter operator of weight " + to_string(lambda));
  std::cout << "PASS: Rota-Baxter operator of weight " << to_string(lambda) << "\n";
  return kPass;
}

struct DoubleArgs {
  std::string algebra;
  std::string mode = "tri";
  std::string weight = "0";
  std::string out = "double";
};

int cmd_double(const DoubleArgs& a) {
  Provenance prov;
  const FDAlgebra alg = read_algebra(prov, a.algebra);
  const Mode mode = mode_from_name(a.mode);
  const Rational lambda = parse_rational(a.weight);
  const DoubledAlgebra dd = double_dendriform(alg, mode, lambda);
  const VerificationReport rb = check_rota_baxter(dd.algebra, dd.rb_operator, dd.weight);
  if (!rb.passed()) return report_failure(rb, "operator on the double is not Rota-Baxter");
  const VerificationReport emb = verify_embedding(dd, alg);
  if (!emb.passed()) return report_failure(emb, "embedding check failed");
  prov.note("mode", mode_name(mode));
  prov.note("weight", to_string(lambda));
  write_output(a.out + ".algebra.json", json_text(to_json(dd.algebra), prov));
  write_output(a.out + ".operator.json", json_text(to_json(dd.rb_operator), prov));
  std::cout << "wrote " << a.out << ".algebra.json and " << a.out << ".operator.json (dim " << dd.algebra.dim()
            << ", weight " << to_string(dd.weight) << ")\n";
  return kPass;
}

struct SplitArgs {
  std::string algebra;
  std::string op;
  std::string weight = "0";
  bool scaled = false;
  bool unscaled = false;
  std::string out;
};

int cmd_split(const SplitArgs& a) {
  if (a.scaled == a.unscaled) throw Error("split needs exactly one of --scaled or --unscaled");
  const Rational lambda = parse_rational(a.weight);
  if (a.scaled && lambda == 0) throw Error("--scaled requires a nonzero weight");
  Provenance prov;
  const FDAlgebra alg = read_algebra(prov, a.algebra);
  const LinearOperator r = read_operator(prov, a.op);
  const VerificationReport rb = check_rota_baxter(alg, r, lambda);
  if (!rb.passed()) return report_failure(rb, "not a Rota-Baxter operator of weight " + to_string(lambda));
  const FDAlgebra dend = derived_dendriform(alg, r, lambda, a.scaled);
  prov.note("weight", to_string(lambda));
  prov.note("convention", a.scaled ? "scaled" : "unscaled");
  write_output(a.out, json_text(to_json(dend), prov));
  return kPass;
}

int cmd_koszul(const std::string& variety) {
  Provenance prov;
  const VarietyPresentation v = read_variety(prov, variety);
  const KoszulReport rep = verify_koszul_tri(v, calibrate_pairing());
  std::cout << "variety: " << v.name << "\n" << render(rep);
  if (!rep.passed()) {
    std::cerr << "FAIL: dimension chain or orthogonality mismatch\n";
    return kFail;
  }
  return kPass;
}

struct BarArgs {
  std::string algebra;
  std::string mode = "tri";
  std::string out;
};

int cmd_bar(const BarArgs& a) {
  Provenance prov;
  const FDAlgebra alg = read_algebra(prov, a.algebra);
  const Mode mode = mode_from_name(a.mode);
  std::optional<BarQuotient> bq;
  try {
    bq = bar_quotient(alg, mode);
  } catch (const PreconditionError& e) {
    std::cerr << "FAIL: " << e.what() << "\n";
    return kFail;
  }
  prov.note("mode", mode_name(mode));
  write_output(a.out, json_text(to_json(*bq), prov));
  return kPass;
}

struct RandomArgs {
  int dim = 2;
  int nops = 1;
  std::string context = "omega3";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_random_algebra(const RandomArgs& a) {
  if (a.dim < 1 || a.dim > 16) throw Error("--dim must be in 1..16");
  if (a.nops < 1 || a.nops > 8) throw Error("--nops must be in 1..8");
  const FDAlgebra alg = random_algebra(a.dim, Signature{a.nops, context_from_name(a.context)}, a.seed);
  Provenance prov;
  prov.note("seed", std::to_string(a.seed));
  std::cerr << "seed: " << a.seed << "\n";
  write_output(a.out, json_text(to_json(alg), prov));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 0; k < argc; ++k) {
    if (k) g_command_line += ' ';
    g_command_line += k == 0 ? "dendri" : argv[k];
  }

  CLI::App app{"Successor identities, Rota-Baxter doubles and Koszul checks for nonassociative algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  IdentitiesArgs ia;
  auto* identities = app.add_subcommand("identities", "generate di/tri/skew-tri (dendriform) identities of a variety");
  identities->add_option("--variety", ia.variety, "builtin name or variety file")->required();
  identities->add_option("--mode", ia.mode, "di, tri or stri")->check(CLI::IsMember({"di", "tri", "stri"}));
  identities->add_flag("--dendriform", ia.dendriform, "apply the dendriform successor instead");
  identities->add_option("--out", ia.out, "output file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check identities on a finite-dimensional algebra");
  verify->add_option("--algebra", va.algebra, "algebra JSON file")->required();
  verify->add_option("--identities", va.identities, "identity file");
  verify->add_option("--variety", va.variety, "builtin name or variety file");
  verify->add_option("--mode", va.mode, "di, tri or stri")->check(CLI::IsMember({"di", "tri", "stri"}));
  verify->add_flag("--dendriform", va.dendriform, "use the dendriform identities of the variety");

  RbArgs ra;
  auto* rb = app.add_subcommand("rb-check", "check the Rota-Baxter relation");
  rb->add_option("--algebra", ra.algebra, "algebra JSON file")->required();
  rb->add_option("--operator", ra.op, "operator JSON file")->required();
  rb->add_option("--weight", ra.weight, "weight p/q");

  DoubleArgs da;
  auto* dbl = app.add_subcommand("double", "build the double A + A' and its Rota-Baxter operator");
  dbl->add_option("--algebra", da.algebra, "algebra JSON file")->required();
  dbl->add_option("--mode", da.mode, "di, tri or stri")->check(CLI::IsMember({"di", "tri", "stri"}));
  dbl->add_option("--weight", da.weight, "weight p/q (tri mode only)");
  dbl->add_option("--out", da.out, "output prefix for <prefix>.algebra.json and <prefix>.operator.json");

  SplitArgs sa;
  auto* split = app.add_subcommand("split", "dendriform structure induced by a Rota-Baxter operator");
  split->add_option("--algebra", sa.algebra, "algebra JSON file")->required();
  split->add_option("--operator", sa.op, "operator JSON file")->required();
  split->add_option("--weight", sa.weight, "weight p/q");
  split->add_flag("--scaled", sa.scaled, "x|-y = (1/w) R(x)y, x-|y = (1/w) xR(y), x_|_y = xy");
  split->add_flag("--unscaled", sa.unscaled, "x|-y = R(x)y, x-|y = xR(y), x_|_y = w xy");
  split->add_option("--out", sa.out, "output file (default stdout)");

  std::string kv;
  auto* koszul = app.add_subcommand("koszul", "arity-3 dimension chain and orthogonality report");
  koszul->add_option("--variety", kv, "builtin name or variety file")->required();

  BarArgs ba;
  auto* bar = app.add_subcommand("bar", "bar quotient algebra on Abar + A");
  bar->add_option("--algebra", ba.algebra, "algebra JSON file")->required();
  bar->add_option("--mode", ba.mode, "tri or stri")->check(CLI::IsMember({"tri", "stri"}));
  bar->add_option("--out", ba.out, "output file (default stdout)");

  RandomArgs rnd;
  auto* random = app.add_subcommand("random-algebra", "seeded random sparse algebra");
  random->add_option("--dim", rnd.dim, "dimension");
  random->add_option("--nops", rnd.nops, "number of operation indices");
  random->add_option("--context", rnd.context, "omega, omega2 or omega3")
      ->check(CLI::IsMember({"omega", "omega2", "omega3"}));
  random->add_option("--seed", rnd.seed, "random seed")->required();
  random->add_option("--out", rnd.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*identities) return cmd_identities(ia);
    if (*verify) return cmd_verify(va);
    if (*rb) return cmd_rb_check(ra);
    if (*dbl) return cmd_double(da);
    if (*split) return cmd_split(sa);
    if (*koszul) return cmd_koszul(kv);
    if (*bar) return cmd_bar(ba);
    if (*random) return cmd_random_algebra(rnd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
