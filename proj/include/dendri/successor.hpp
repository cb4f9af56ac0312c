#pragma once

// Successor procedures: phi labels an Omega-monomial with -|, |- and _|_
// according to a set H of emphasized variables; phi_star does the same but
// expands every operation of a non-emphasized subtree into a sum of split
// operations.

#include <algorithm>
#include <string>
#include <vector>

#include "dendri/terms.hpp"
#include "dendri/varieties.hpp"

namespace dendri {

enum class Mode { Di, Tri, STri };

inline std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Di: return "di";
    case Mode::Tri: return "tri";
    case Mode::STri: return "stri";
  }
  return "?";
}

inline Mode mode_from_name(std::string_view name) {
  if (name == "di") return Mode::Di;
  if (name == "tri") return Mode::Tri;
  if (name == "stri") return Mode::STri;
  throw Error("unknown mode '" + std::string(name) + "'");
}

/// Output signature of the mode: Omega2 for Di, Omega3 otherwise.
inline Signature mode_signature(Mode m, int nops) { return m == Mode::Di ? omega2(nops) : omega3(nops); }

/// Sorted set of emphasized variable indices.
using EmphasisSet = std::vector<int>;

inline std::string render(const EmphasisSet& h) {
  std::string out = "{";
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(h[k]);
  }
  return out + "}";
}

/// Nonempty subsets of {1..n} in colex order ({1},{2},{1,2},{3},{1,3},...).
inline std::vector<EmphasisSet> nonempty_subsets(int n) {
  std::vector<EmphasisSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    EmphasisSet h;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) h.push_back(k + 1);
    out.push_back(std::move(h));
  }
  return out;
}

/// The H-sets a mode demands for degree n: singletons for Di, all nonempty otherwise.
inline std::vector<EmphasisSet> emphasis_sets(int n, Mode mode) {
  if (mode != Mode::Di) return nonempty_subsets(n);
  std::vector<EmphasisSet> out;
  for (int k = 1; k <= n; ++k) out.push_back({k});
  return out;
}

namespace detail {

inline void check_base_monomial(const Monomial& u) {
  if (!is_polylinear(u, u.degree())) throw Error("successor: monomial " + render(u) + " is not polylinear");
  for (const auto& t : u.tokens())
    if (!t.is_leaf() && t.family != Family::Base)
      throw SignatureError("successor: monomial " + render(u) + " is not an Omega-monomial");
}

inline void check_emphasis(const EmphasisSet& h, int n) {
  if (h.empty()) throw Error("emphasis set is empty");
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 1 || h[k] > n) throw Error("emphasis set " + render(h) + " out of range 1.." + std::to_string(n));
    if (k && h[k] <= h[k - 1]) throw Error("emphasis set " + render(h) + " is not strictly increasing");
  }
}

inline std::pair<EmphasisSet, EmphasisSet> split_emphasis(const EmphasisSet& h, const Monomial& left) {
  EmphasisSet h1, h2;
  for (int v : h) (left.contains_var(v) ? h1 : h2).push_back(v);
  return {h1, h2};
}

inline Monomial relabel_all(const Monomial& u, Family f) {
  return u.map_ops([f](OpSymbol op) { return OpSymbol{f, op.index}; });
}

inline Monomial phi_rec(const Monomial& u, const EmphasisSet& h) {
  if (u.is_leaf()) return u;
  const Monomial v = u.left(), w = u.right();
  const int i = u.op().index;
  auto [h1, h2] = split_emphasis(h, v);
  if (!h1.empty() && !h2.empty()) return Monomial::node({Family::Middle, i}, phi_rec(v, h1), phi_rec(w, h2));
  if (h1.empty()) return Monomial::node({Family::Right, i}, relabel_all(v, Family::Right), phi_rec(w, h));
  return Monomial::node({Family::Left, i}, phi_rec(v, h), relabel_all(w, Family::Left));
}

inline std::vector<Family> star_families(Mode mode) {
  if (mode == Mode::Tri) return {Family::Left, Family::Right, Family::Middle};
  return {Family::Left, Family::Right};
}

/// Every operation of u replaced by the sum over `fams`.
inline Polynomial star_expand(const Monomial& u, const std::vector<Family>& fams, Signature sig) {
  if (u.is_leaf()) return Polynomial::monomial(sig, u);
  const Polynomial l = star_expand(u.left(), fams, sig);
  const Polynomial r = star_expand(u.right(), fams, sig);
  Polynomial out(sig);
  for (Family f : fams) out += combine(l, {f, u.op().index}, r, sig);
  return out;
}

inline Polynomial phi_star_rec(const Monomial& u, const EmphasisSet& h, const std::vector<Family>& fams,
                               Signature sig) {
  if (u.is_leaf()) return Polynomial::monomial(sig, u);
  const Monomial v = u.left(), w = u.right();
  const int i = u.op().index;
  auto [h1, h2] = split_emphasis(h, v);
  if (!h1.empty() && !h2.empty())
    return combine(phi_star_rec(v, h1, fams, sig), {Family::Middle, i}, phi_star_rec(w, h2, fams, sig), sig);
  if (h1.empty()) return combine(star_expand(v, fams, sig), {Family::Right, i}, phi_star_rec(w, h, fams, sig), sig);
  return combine(phi_star_rec(v, h, fams, sig), {Family::Left, i}, star_expand(w, fams, sig), sig);
}

inline int max_op_index(const Monomial& u) {
  int m = 1;
  for (const auto& t : u.tokens())
    if (!t.is_leaf()) m = std::max(m, t.value);
  return m;
}

}  // namespace detail

/// phi(u, H): same tree and leaves, nodes relabelled by the three-case recursion.
inline Monomial phi(const Monomial& u, const EmphasisSet& h) {
  detail::check_base_monomial(u);
  detail::check_emphasis(h, u.degree());
  return detail::phi_rec(u, h);
}

/// Linear extension of phi; output over omega3 with the same operation count.
inline Polynomial phi_poly(const Polynomial& f, const EmphasisSet& h) {
  if (f.signature().context != Context::Omega) throw SignatureError("phi_poly: input must be over omega");
  Polynomial out(omega3(f.signature().nops));
  for (const auto& [u, c] : f) out.add(phi(u, h), c);
  return out;
}

/// phi_star(u, H) over mode_signature(mode, nops). In Di mode |H| must be 1.
inline Polynomial phi_star(const Monomial& u, const EmphasisSet& h, Mode mode, int nops) {
  detail::check_base_monomial(u);
  detail::check_emphasis(h, u.degree());
  if (mode == Mode::Di && h.size() != 1) throw Error("phi_star: Di mode requires |H| = 1, got " + render(h));
  if (detail::max_op_index(u) > nops) throw SignatureError("phi_star: operation index exceeds nops");
  return detail::phi_star_rec(u, h, detail::star_families(mode), mode_signature(mode, nops));
}

inline Polynomial phi_star(const Monomial& u, const EmphasisSet& h, Mode mode) {
  return phi_star(u, h, mode, detail::max_op_index(u));
}

inline Polynomial phi_star_poly(const Polynomial& f, const EmphasisSet& h, Mode mode) {
  if (f.signature().context != Context::Omega) throw SignatureError("phi_star_poly: input must be over omega");
  const int nops = f.signature().nops;
  Polynomial out(mode_signature(mode, nops));
  for (const auto& [u, c] : f) out += c * phi_star(u, h, mode, nops);
  return out;
}

// ---------------------------------------------------------------------------
// Identity families
// ---------------------------------------------------------------------------

struct DottedIdentity {
  std::string source_id;
  EmphasisSet h;
  Polynomial poly;

  [[nodiscard]] std::string id() const { return "f=" + source_id + " H=" + render(h); }
};

struct GeneratedIdentitySet {
  Signature signature;
  std::vector<NamedIdentity> zero_identities;
  std::vector<DottedIdentity> dotted_identities;

  /// Zero identities first, then dotted ones, as (id, polynomial) pairs.
  [[nodiscard]] std::vector<NamedIdentity> named() const {
    std::vector<NamedIdentity> out = zero_identities;
    for (const auto& d : dotted_identities) out.push_back({d.id(), d.poly});
    return out;
  }
  [[nodiscard]] std::size_t size() const { return zero_identities.size() + dotted_identities.size(); }
};

/// Di: (x1 <i x2) >j x3 = (x1 >i x2) >j x3 and x1 <i (x2 >j x3) = x1 <i (x2 <j x3).
/// Tri: the same with the inner op ranging over the two other families.
/// STri: the Di families, over omega3.
inline std::vector<NamedIdentity> generate_zero_identities(int nops, Mode mode) {
  if (nops < 1) throw Error("generate_zero_identities: nops must be >= 1");
  const Signature sig = mode_signature(mode, nops);
  const Monomial x1 = Monomial::leaf(1), x2 = Monomial::leaf(2), x3 = Monomial::leaf(3);
  const std::vector<Family> left_stars =
      mode == Mode::Tri ? std::vector<Family>{Family::Left, Family::Middle} : std::vector<Family>{Family::Left};
  const std::vector<Family> right_stars =
      mode == Mode::Tri ? std::vector<Family>{Family::Right, Family::Middle} : std::vector<Family>{Family::Right};
  std::vector<NamedIdentity> out;
  auto push = [&](Polynomial p, int i, int j) {
    out.push_back({"zero=" + std::to_string(out.size() + 1) + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                   std::move(p)});
  };
  for (int i = 1; i <= nops; ++i)
    for (int j = 1; j <= nops; ++j) {
      const Monomial rr = Monomial::node({Family::Right, j}, Monomial::node({Family::Right, i}, x1, x2), x3);
      for (Family f : left_stars) {
        Polynomial p(sig);
        p.add(Monomial::node({Family::Right, j}, Monomial::node({f, i}, x1, x2), x3), 1);
        p.add(rr, -1);
        push(std::move(p), i, j);
      }
      const Monomial ll = Monomial::node({Family::Left, i}, x1, Monomial::node({Family::Left, j}, x2, x3));
      for (Family f : right_stars) {
        Polynomial p(sig);
        p.add(Monomial::node({Family::Left, i}, x1, Monomial::node({f, j}, x2, x3)), 1);
        p.add(ll, -1);
        push(std::move(p), i, j);
      }
    }
  return out;
}

/// The two vanishing families of s-tri-dendriform algebras:
/// (x1 _|_i x2) |-j x3 = 0 and x1 -|i (x2 _|_j x3) = 0.
inline std::vector<NamedIdentity> generate_vanishing_identities(int nops) {
  const Signature sig = omega3(nops);
  const Monomial x1 = Monomial::leaf(1), x2 = Monomial::leaf(2), x3 = Monomial::leaf(3);
  std::vector<NamedIdentity> out;
  for (int i = 1; i <= nops; ++i)
    for (int j = 1; j <= nops; ++j) {
      const std::string tag = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      out.push_back({"vanish=" + std::to_string(out.size() + 1) + tag,
                     Polynomial::monomial(sig, Monomial::node({Family::Right, j},
                                                              Monomial::node({Family::Middle, i}, x1, x2), x3))});
      out.push_back({"vanish=" + std::to_string(out.size() + 1) + tag,
                     Polynomial::monomial(sig, Monomial::node({Family::Left, i}, x1,
                                                              Monomial::node({Family::Middle, j}, x2, x3)))});
    }
  return out;
}

/// Zero identities of the mode plus phi(f, H) for every f and every H the mode demands.
inline GeneratedIdentitySet generate_variety_identities(const VarietyPresentation& v, Mode mode) {
  validate_presentation(v);
  GeneratedIdentitySet out{mode_signature(mode, v.nops), generate_zero_identities(v.nops, mode), {}};
  for (const auto& f : v.identities) {
    const int n = is_polylinear(f.poly).degree;
    for (const EmphasisSet& h : emphasis_sets(n, mode))
      out.dotted_identities.push_back({f.id, h, phi_poly(f.poly, h).with_signature(out.signature)});
  }
  return out;
}

/// phi_star(f, H) for every f and H; STri adds the two vanishing families.
inline GeneratedIdentitySet generate_dendriform_identities(const VarietyPresentation& v, Mode mode) {
  validate_presentation(v);
  GeneratedIdentitySet out{mode_signature(mode, v.nops), {}, {}};
  if (mode == Mode::STri) out.zero_identities = generate_vanishing_identities(v.nops);
  for (const auto& f : v.identities) {
    const int n = is_polylinear(f.poly).degree;
    for (const EmphasisSet& h : emphasis_sets(n, mode))
      out.dotted_identities.push_back({f.id, h, phi_star_poly(f.poly, h, mode)});
  }
  return out;
}

}  // namespace dendri
