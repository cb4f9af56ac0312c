#pragma once

// Variety presentations: a list of polylinear Omega-identities with ids.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dendri/terms.hpp"

namespace dendri {

struct VarietyPresentation {
  std::string name;
  int nops = 1;
  std::vector<NamedIdentity> identities;

  [[nodiscard]] Signature signature() const { return omega(nops); }
};

/// Same operation count and the same identities in the same order.
inline bool same_presentation(const VarietyPresentation& a, const VarietyPresentation& b) {
  if (a.nops != b.nops || a.identities.size() != b.identities.size()) return false;
  for (std::size_t k = 0; k < a.identities.size(); ++k)
    if (!(a.identities[k].poly == b.identities[k].poly)) return false;
  return true;
}

/// Throws unless every identity is polylinear of degree >= 2.
inline void validate_presentation(const VarietyPresentation& v) {
  for (const auto& id : v.identities) {
    const PolylinearInfo info = is_polylinear(id.poly);
    if (!info.polylinear) throw Error("identity " + id.id + " is not polylinear: " + render(id.poly));
    if (id.poly.is_zero()) throw Error("identity " + id.id + " is zero");
    if (info.degree < 2) throw Error("identity " + id.id + " has degree < 2");
  }
}

namespace detail {

inline VarietyPresentation make_variety(std::string name, int nops, std::initializer_list<const char*> lines) {
  VarietyPresentation v{std::move(name), nops, {}};
  int k = 0;
  for (const char* line : lines)
    v.identities.push_back({std::to_string(++k), parse_polynomial(line, omega(nops))});
  return v;
}

}  // namespace detail

inline std::vector<std::string> builtin_names() { return {"associative", "commutative", "lie", "poisson", "perm"}; }

inline VarietyPresentation builtin(std::string_view name) {
  constexpr const char* assoc = "(x1 *1 (x2 *1 x3)) - ((x1 *1 x2) *1 x3)";
  if (name == "associative") return detail::make_variety("associative", 1, {assoc});
  if (name == "commutative")
    return detail::make_variety("commutative", 1, {"(x1 *1 x2) - (x2 *1 x1)", assoc});
  if (name == "lie")
    return detail::make_variety("lie", 1,
                                {"(x1 *1 x2) + (x2 *1 x1)",
                                 "((x1 *1 x2) *1 x3) + ((x2 *1 x3) *1 x1) + ((x3 *1 x1) *1 x2)"});
  if (name == "poisson")
    return detail::make_variety(
        "poisson", 2,
        {"(x1 *1 x2) - (x2 *1 x1)", assoc, "(x1 *2 x2) + (x2 *2 x1)",
         "((x1 *2 x2) *2 x3) + ((x2 *2 x3) *2 x1) + ((x3 *2 x1) *2 x2)",
         "((x1 *1 x2) *2 x3) - ((x1 *2 x3) *1 x2) - (x1 *1 (x2 *2 x3))"});
  if (name == "perm") return detail::make_variety("perm", 1, {assoc, "((x1 *1 x2) *1 x3) - ((x2 *1 x1) *1 x3)"});
  throw Error("unknown variety '" + std::string(name) + "'");
}

/// Parses a variety file: identity lines, '#' comments, and a mandatory
/// "# nops: k" header. Ids are assigned by line order starting at 1.
inline VarietyPresentation parse_variety(std::string_view text, std::string name = "custom") {
  VarietyPresentation v{std::move(name), 0, {}};
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string_view rest = std::string_view(line).substr(first + 1);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest.starts_with("nops:")) {
        rest.remove_prefix(5);
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r')) rest.remove_suffix(1);
        if (!detail::all_digits(rest) || rest.size() > 6 || std::stoi(std::string(rest)) < 1)
          throw Error("line " + std::to_string(lineno) + ": bad nops header");
        v.nops = std::stoi(std::string(rest));
      }
      continue;
    }
    lines.emplace_back(lineno, line);
  }
  if (v.nops == 0) throw Error("variety file lacks a '# nops: k' header");
  int k = 0;
  for (const auto& [no, text_line] : lines) {
    Polynomial p;
    try {
      p = parse_polynomial(text_line, omega(v.nops));
    } catch (const ParseError& e) {
      throw Error("line " + std::to_string(no) + ": " + e.what());
    }
    v.identities.push_back({std::to_string(++k), std::move(p)});
  }
  validate_presentation(v);
  return v;
}

inline VarietyPresentation load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open variety file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return parse_variety(ss.str(), name);
}

}  // namespace dendri
