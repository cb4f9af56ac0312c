#pragma once

// File formats: algebras and operators as JSON, generated identity sets as
// identity-language text with '#' header comments.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dendri/doubling.hpp"
#include "dendri/fdalg.hpp"
#include "dendri/successor.hpp"
#include "dendri/terms.hpp"

namespace dendri {

using json = nlohmann::ordered_json;

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw Error("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline int require_int(const json& j, const char* key, int lo) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > 1000000)
    throw Error(std::string("key '") + key + "' must be an integer >= " + std::to_string(lo));
  return v.get<int>();
}

}  // namespace detail

inline json to_json(const FDAlgebra& alg) {
  json j;
  j["dim"] = alg.dim();
  j["context"] = context_name(alg.signature().context);
  j["nops"] = alg.signature().nops;
  json ops = json::array();
  for (const OpSymbol& op : alg.symbols()) {
    json table = json::array();
    for (const auto& [a, b, c, v] : alg.entries(op)) table.push_back({a + 1, b + 1, c + 1, rational_to_json(v)});
    ops.push_back({{"family", family_name(op.family)}, {"index", op.index}, {"table", table}});
  }
  j["ops"] = ops;
  return j;
}

inline FDAlgebra algebra_from_json(const json& j) {
  const int dim = detail::require_int(j, "dim", 0);
  const int nops = detail::require_int(j, "nops", 1);
  const json& ctx = detail::require(j, "context");
  if (!ctx.is_string()) throw Error("key 'context' must be a string");
  const Signature sig{nops, context_from_name(ctx.get<std::string>())};
  FDAlgebra alg(dim, sig);
  const json& ops = detail::require(j, "ops");
  if (!ops.is_array()) throw Error("key 'ops' must be an array");
  for (const json& o : ops) {
    const json& fam = detail::require(o, "family");
    if (!fam.is_string()) throw Error("op family must be a string");
    const OpSymbol op{family_from_name(fam.get<std::string>()), detail::require_int(o, "index", 1)};
    if (!sig.admits(op)) throw SignatureError("operation " + to_string(op) + " not allowed by the declared signature");
    const json& table = detail::require(o, "table");
    if (!table.is_array()) throw Error("op table must be an array");
    for (const json& e : table) {
      if (!e.is_array() || e.size() != 4) throw Error("table entries must be [a, b, c, \"p/q\"]");
      int idx[3];
      for (int k = 0; k < 3; ++k) {
        if (!e[static_cast<std::size_t>(k)].is_number_integer()) throw Error("table indices must be integers");
        idx[k] = e[static_cast<std::size_t>(k)].get<int>();
        if (idx[k] < 1 || idx[k] > dim)
          throw DimensionError("table index " + std::to_string(idx[k]) + " outside 1.." + std::to_string(dim));
      }
      if (alg.get(op, idx[0] - 1, idx[1] - 1, idx[2] - 1) != 0)
        throw Error("duplicate table entry for " + to_string(op) + " " + e.dump());
      alg.set(op, idx[0] - 1, idx[1] - 1, idx[2] - 1, rational_from_json(e[3]));
    }
  }
  return alg;
}

inline json to_json(const LinearOperator& r) {
  json rows = json::array();
  for (const auto& row : r.matrix()) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(rational_to_json(x));
    rows.push_back(jr);
  }
  return json{{"dim", r.dim()}, {"matrix", rows}};
}

inline LinearOperator operator_from_json(const json& j) {
  const int dim = detail::require_int(j, "dim", 0);
  const json& m = detail::require(j, "matrix");
  if (!m.is_array() || static_cast<int>(m.size()) != dim) throw DimensionError("operator matrix must have dim rows");
  Matrix rows;
  for (const json& r : m) {
    if (!r.is_array() || static_cast<int>(r.size()) != dim) throw DimensionError("operator matrix must be dim x dim");
    Vec row;
    for (const json& x : r) row.push_back(rational_from_json(x));
    rows.push_back(std::move(row));
  }
  return LinearOperator(std::move(rows));
}

inline json to_json(const BarQuotient& bq) {
  json j = to_json(bq.hat_algebra);
  j["bar_dim"] = bq.bar_dim;
  json proj = json::array();
  for (const auto& row : bq.projection) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(rational_to_json(x));
    proj.push_back(jr);
  }
  j["projection"] = proj;
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(what + ": malformed JSON: " + e.what());
  }
}

inline FDAlgebra load_algebra(const std::string& path) {
  try {
    return algebra_from_json(parse_json_text(read_text_file(path), path));
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

inline LinearOperator load_operator(const std::string& path) {
  try {
    return operator_from_json(parse_json_text(read_text_file(path), path));
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Identity files
// ---------------------------------------------------------------------------

struct IdentityFile {
  Signature signature;
  std::vector<NamedIdentity> identities;
};

/// "# nops:" and "# context:" headers, then one "# source: <id>" comment per identity line.
inline std::string render_identity_file(const Signature& sig, const std::vector<NamedIdentity>& ids,
                                        const std::vector<std::string>& header = {}) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  out += "# nops: " + std::to_string(sig.nops) + "\n";
  out += "# context: " + context_name(sig.context) + "\n";
  for (const auto& id : ids) {
    out += "# source: " + id.id + "\n";
    out += render(id.poly) + "\n";
  }
  return out;
}

inline std::string render_identity_file(const GeneratedIdentitySet& set, const std::vector<std::string>& header = {}) {
  return render_identity_file(set.signature, set.named(), header);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Reads an identity file. `# nops:` is required; `# context:` defaults to omega.
/// Ids come from the preceding `# source:` comment, else from the line order.
inline IdentityFile parse_identity_file(std::string_view text) {
  IdentityFile f;
  f.signature.nops = 0;
  std::vector<std::tuple<int, std::string, std::string>> lines;
  std::string pending;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0, count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = detail::trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      const std::string_view c = detail::trim(s.substr(1));
      if (c.starts_with("nops:")) {
        const std::string_view v = detail::trim(c.substr(5));
        if (!detail::all_digits(v) || v.size() > 6 || std::stoi(std::string(v)) < 1)
          throw Error("line " + std::to_string(lineno) + ": bad nops header");
        f.signature.nops = std::stoi(std::string(v));
      } else if (c.starts_with("context:")) {
        f.signature.context = context_from_name(detail::trim(c.substr(8)));
      } else if (c.starts_with("source:")) {
        pending = std::string(detail::trim(c.substr(7)));
      }
      continue;
    }
    ++count;
    lines.emplace_back(lineno, pending.empty() ? std::to_string(count) : pending, std::string(s));
    pending.clear();
  }
  if (f.signature.nops == 0) throw Error("identity file lacks a '# nops: k' header");
  for (const auto& [no, id, body] : lines) {
    try {
      f.identities.push_back({id, parse_polynomial(body, f.signature)});
    } catch (const ParseError& e) {
      throw Error("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return f;
}

}  // namespace dendri
