#pragma once

// Arity-3 component of a binary quadratic operad: generator spaces with
// degree-2 relations, coordinates of degree-3 monomials, the pairing with the
// dual space, and the dimension chain for the tri-successor of a variety.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dendri/linalg.hpp"
#include "dendri/successor.hpp"
#include "dendri/terms.hpp"
#include "dendri/varieties.hpp"

namespace dendri {

/// Generators mu with optional relations mu^(12) = sum alpha mu'. The basis of
/// E is every op unswapped followed by the swapped copies of the ops without a
/// relation, so N = 2|I| - |I'|.
class GeneratorSpace {
 public:
  using Relation = std::map<OpSymbol, Rational>;
  using Relations = std::map<OpSymbol, Relation>;

  GeneratorSpace(std::vector<OpSymbol> ops, Relations rel) : ops_(std::move(ops)), rel_(std::move(rel)) {
    for (const OpSymbol& o : ops_) basis_.push_back({o, false});
    for (const OpSymbol& o : ops_)
      if (!rel_.count(o)) basis_.push_back({o, true});
  }

  [[nodiscard]] int N() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const std::vector<OpSymbol>& ops() const { return ops_; }
  [[nodiscard]] const Relations& relations() const { return rel_; }
  [[nodiscard]] const std::pair<OpSymbol, bool>& basis(int k) const { return basis_[static_cast<std::size_t>(k)]; }

  [[nodiscard]] int index(const OpSymbol& op, bool swapped) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k].first == op && basis_[k].second == swapped) return static_cast<int>(k);
    throw SignatureError("generator " + to_string(op) + " not in the generator space");
  }

  /// op or op^(12) in the basis of E.
  [[nodiscard]] std::map<int, Rational> express(const OpSymbol& op, bool swapped) const {
    if (!swapped) return {{index(op, false), Rational(1)}};
    if (auto it = rel_.find(op); it != rel_.end()) {
      std::map<int, Rational> out;
      for (const auto& [p, c] : it->second) out[index(p, false)] += c;
      return out;
    }
    return {{index(op, true), Rational(1)}};
  }

  /// -1 on swapped basis elements (sgn-twisted S2 action), +1 otherwise.
  [[nodiscard]] int sign(int k) const { return basis(k).second ? -1 : 1; }

  /// Dual generators: m_s^(12) = -sum_t alpha_{s,t} m_t where alpha_{s,t} is
  /// the coefficient of mu_s in mu_t^(12).
  [[nodiscard]] GeneratorSpace dual() const {
    Relations rel;
    for (const auto& [s, unused] : rel_) {
      Relation r;
      for (const auto& [t, rt] : rel_)
        if (auto it = rt.find(s); it != rt.end()) r[t] = -it->second;
      rel[s] = r;
    }
    return GeneratorSpace(ops_, rel);
  }

  /// Split generators -|, |-, _|_ of each base op. Relations transfer as
  /// (|-)^(12) = sum alpha -|, (-|)^(12) = sum alpha |-, (_|_)^(12) = sum alpha _|_.
  [[nodiscard]] GeneratorSpace tri() const {
    std::vector<OpSymbol> ops;
    for (const OpSymbol& o : ops_)
      for (Family f : {Family::Left, Family::Right, Family::Middle}) ops.push_back({f, o.index});
    Relations rel;
    auto transfer = [](const Relation& r, Family f) {
      Relation out;
      for (const auto& [p, c] : r) out[{f, p.index}] = c;
      return out;
    };
    for (const auto& [o, r] : rel_) {
      rel[{Family::Right, o.index}] = transfer(r, Family::Left);
      rel[{Family::Left, o.index}] = transfer(r, Family::Right);
      rel[{Family::Middle, o.index}] = transfer(r, Family::Middle);
    }
    return GeneratorSpace(ops, rel);
  }

 private:
  std::vector<OpSymbol> ops_;
  Relations rel_;
  std::vector<std::pair<OpSymbol, bool>> basis_;
};

/// sigma in {e, (13), (23)} as images of (1,2,3).
inline constexpr std::array<std::array<int, 3>, 3> kArity3Perms = {{{1, 2, 3}, {3, 2, 1}, {1, 3, 2}}};

/// Coordinates sigma * N^2 + outer * N + inner of a polylinear degree-3 monomial.
inline std::map<int, Rational> arity3_coords(const GeneratorSpace& g, const Monomial& t) {
  if (t.degree() != 3 || !is_polylinear(t, 3)) throw Error("arity3: monomial " + render(t) + " is not polylinear of degree 3");
  const int n = g.N();
  const Monomial l = t.left(), r = t.right();
  const bool outer_swapped = l.is_leaf();
  const Monomial inner = outer_swapped ? r : l;
  const int lone = outer_swapped ? l.var() : r.var();
  const int a = inner.left().var(), b = inner.right().var();
  int si = 0;
  while (kArity3Perms[static_cast<std::size_t>(si)][2] != lone) ++si;
  const auto& s = kArity3Perms[static_cast<std::size_t>(si)];
  const bool inner_swapped = !(a == s[0] && b == s[1]);
  std::map<int, Rational> out;
  for (const auto& [x, cx] : g.express(t.op(), outer_swapped))
    for (const auto& [y, cy] : g.express(inner.op(), inner_swapped)) out[si * n * n + x * n + y] += cx * cy;
  return out;
}

inline Vec arity3_coords(const GeneratorSpace& g, const Polynomial& f) {
  Vec v(static_cast<std::size_t>(3 * g.N() * g.N()), 0);
  for (const auto& [m, c] : f)
    for (const auto& [k, x] : arity3_coords(g, m)) v[static_cast<std::size_t>(k)] += c * x;
  return v;
}

/// The monomial whose coordinate vector is the k-th unit vector.
inline Monomial arity3_tree(const GeneratorSpace& g, int k) {
  const int n = g.N();
  const auto& s = kArity3Perms[static_cast<std::size_t>(k / (n * n))];
  const auto& [oo, osw] = g.basis((k % (n * n)) / n);
  const auto& [io, isw] = g.basis(k % n);
  const Monomial x0 = Monomial::leaf(s[0]), x1 = Monomial::leaf(s[1]), x2 = Monomial::leaf(s[2]);
  const Monomial inner = isw ? Monomial::node(io, x1, x0) : Monomial::node(io, x0, x1);
  return osw ? Monomial::node(oo, x2, inner) : Monomial::node(oo, inner, x2);
}

inline Polynomial arity3_poly(const GeneratorSpace& g, const Vec& v, Signature sig) {
  Polynomial p(sig);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) p.add(arity3_tree(g, static_cast<int>(k)), v[k]);
  return p;
}

inline const std::vector<std::array<int, 3>>& all_s3() {
  static const std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  return perms;
}

/// Row-reduced basis of the span of all S3-images of the generators.
inline Echelon s3_span(const GeneratorSpace& g, const std::vector<Polynomial>& gens) {
  const std::size_t cols = static_cast<std::size_t>(3 * g.N() * g.N());
  Matrix rows;
  for (const Polynomial& f : gens) {
    if (f.is_zero()) continue;
    const PolylinearInfo info = is_polylinear(f);
    if (!info.polylinear || info.degree != 3) throw Error("s3_span: generator is not polylinear of degree 3");
    for (const auto& s : all_s3()) rows.push_back(arity3_coords(g, apply_permutation(f, s)));
  }
  return rref(std::move(rows), cols);
}

/// Diagonal pairing: sgn(sigma) (if enabled) times the E-level signs of outer and inner generator.
struct PairingForm {
  bool sgn_twist = true;

  [[nodiscard]] Vec diagonal(const GeneratorSpace& g) const {
    const int n = g.N();
    Vec d(static_cast<std::size_t>(3 * n * n), 0);
    for (int si = 0; si < 3; ++si)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          d[static_cast<std::size_t>(si * n * n + x * n + y)] = (sgn_twist && si > 0 ? -1 : 1) * g.sign(x) * g.sign(y);
    return d;
  }

  [[nodiscard]] Rational pair(const GeneratorSpace& g, const Vec& a, const Vec& b) const {
    const Vec d = diagonal(g);
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != 0 && b[k] != 0) s += a[k] * d[k] * b[k];
    return s;
  }
};

/// {w : <r, w> = 0 for all rows r of R}, row reduced.
inline Echelon orthogonal_complement(const GeneratorSpace& g, const Echelon& r, const PairingForm& form) {
  const Vec d = form.diagonal(g);
  Matrix m = r.rows;
  for (auto& row : m)
    for (std::size_t k = 0; k < row.size(); ++k) row[k] *= d[k];
  return rref(nullspace(m, r.cols), r.cols);
}

/// Generator space of a presentation from its degree-2 identities, which must
/// read mu_k^(12) = sum alpha mu_i with alpha an involution on the related ops.
inline GeneratorSpace generator_space(const VarietyPresentation& v) {
  std::vector<OpSymbol> ops;
  for (int i = 1; i <= v.nops; ++i) ops.push_back({Family::Base, i});
  const std::size_t nops = ops.size();
  // Columns: swapped ops first, then unswapped.
  Matrix rows;
  for (const auto& id : v.identities) {
    if (is_polylinear(id.poly).degree != 2) continue;
    Vec row(2 * nops, 0);
    for (const auto& [m, c] : id.poly) {
      const std::size_t k = static_cast<std::size_t>(m.op().index - 1);
      row[m.left().var() == 2 ? k : nops + k] += c;
    }
    rows.push_back(row);
  }
  const Echelon e = rref(rows, 2 * nops);
  GeneratorSpace::Relations rel;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= nops) throw Error("koszul: degree-2 relations are not of the form mu^(12) = sum alpha mu");
    for (std::size_t k = 0; k < nops; ++k)
      if (k != p && e.rows[r][k] != 0) throw Error("koszul: degree-2 relation mixes swapped generators");
    GeneratorSpace::Relation rr;
    for (std::size_t k = 0; k < nops; ++k)
      if (e.rows[r][nops + k] != 0) rr[ops[k]] = -e.rows[r][nops + k];
    rel[ops[p]] = rr;
  }
  for (const auto& [op, r] : rel)
    for (const auto& [p, c] : r)
      if (!rel.count(p)) throw Error("koszul: relation for " + to_string(op) + " uses an unrelated generator");
  // alpha must be an involution: swapping twice is the identity.
  for (const auto& [op, r] : rel) {
    std::map<OpSymbol, Rational> twice;
    for (const auto& [p, c] : r)
      for (const auto& [q, c2] : rel.at(p)) twice[q] += c * c2;
    for (const auto& [q, c] : twice)
      if (c != (q == op ? 1 : 0)) throw Error("koszul: degree-2 relations are not an involution");
    if (!twice.count(op)) throw Error("koszul: degree-2 relations are not an involution");
  }
  return GeneratorSpace(ops, rel);
}

struct KoszulRow {
  std::string quantity;
  std::string formula;
  std::string expected;
  std::string computed;
  bool match = true;
};

struct KoszulReport {
  int N = 0;
  std::size_t dim_R = 0;
  std::size_t dim_R_perp = 0;
  std::size_t dim_O3 = 0;
  std::size_t dim_R3 = 0;
  std::size_t dim_R_perp_star = 0;
  bool orthogonal = false;         // <R^(3), (R^perp)^(3*)> = 0
  bool complement_equal = false;   // (R^perp)^(3*) = (R^(3))^perp

  [[nodiscard]] std::vector<KoszulRow> rows() const {
    const std::size_t n2 = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    auto row = [](std::string q, std::string f, std::size_t e, std::size_t c) {
      return KoszulRow{std::move(q), std::move(f), std::to_string(e), std::to_string(c), e == c};
    };
    const long long d27 = 27 * static_cast<long long>(n2);
    return {
        KoszulRow{"N", "dim E", "-", std::to_string(N), true},
        KoszulRow{"dim R", "S3-span of degree-3 relations", "-", std::to_string(dim_R), true},
        row("dim R^perp", "3N^2 - dim R", 3 * n2 - dim_R, dim_R_perp),
        row("dim O^(3)", "6N^2", 6 * n2, dim_O3),
        row("dim R^(3)", "6N^2 + 7 dim R", 6 * n2 + 7 * dim_R, dim_R3),
        row("dim (R^perp)^(3*)", "21N^2 - 7 dim R", 21 * n2 - 7 * dim_R, dim_R_perp_star),
        row("sum", "27N^2", static_cast<std::size_t>(d27), dim_R3 + dim_R_perp_star),
        KoszulRow{"orthogonality", "<R^(3), (R^perp)^(3*)> = 0", "yes", orthogonal ? "yes" : "no", orthogonal},
        KoszulRow{"complement", "(R^perp)^(3*) = (R^(3))^perp", "yes", complement_equal ? "yes" : "no",
                  complement_equal},
    };
  }

  [[nodiscard]] bool passed() const {
    for (const auto& r : rows())
      if (!r.match) return false;
    return true;
  }
};

inline std::string render(const KoszulReport& rep) {
  std::vector<KoszulRow> rows = rep.rows();
  std::size_t w0 = 8, w1 = 7, w2 = 8, w3 = 8;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.quantity.size());
    w1 = std::max(w1, r.formula.size());
    w2 = std::max(w2, r.expected.size());
    w3 = std::max(w3, r.computed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::string out = pad("quantity", w0) + "  " + pad("formula", w1) + "  " + pad("expected", w2) + "  " +
                    pad("computed", w3) + "  match\n";
  for (const auto& r : rows)
    out += pad(r.quantity, w0) + "  " + pad(r.formula, w1) + "  " + pad(r.expected, w2) + "  " + pad(r.computed, w3) +
           "  " + (r.match ? "yes" : "NO") + "\n";
  return out;
}

inline KoszulReport verify_koszul_tri(const VarietyPresentation& v, const PairingForm& form = {}) {
  validate_presentation(v);
  std::vector<Polynomial> cubic;
  for (const auto& id : v.identities) {
    const int deg = is_polylinear(id.poly).degree;
    if (deg > 3) throw Error("koszul: identity " + id.id + " has degree " + std::to_string(deg) + " (not quadratic)");
    if (deg == 3) cubic.push_back(id.poly);
  }
  const GeneratorSpace g = generator_space(v);
  const GeneratorSpace gd = g.dual(), g3 = g.tri(), gd3 = gd.tri();
  const std::size_t cols3 = static_cast<std::size_t>(3 * g3.N() * g3.N());

  KoszulReport rep;
  rep.N = g.N();
  const Echelon r = s3_span(g, cubic);
  rep.dim_R = r.rank();
  const Echelon rp = orthogonal_complement(g, r, form);
  rep.dim_R_perp = rp.rank();

  std::vector<Polynomial> zero;
  for (const auto& z : generate_zero_identities(v.nops, Mode::Tri)) zero.push_back(z.poly);
  const Echelon o = s3_span(g3, zero);
  rep.dim_O3 = o.rank();

  const std::vector<EmphasisSet> hs = nonempty_subsets(3);
  Matrix r3 = o.rows;
  for (const Vec& row : r.rows) {
    const Polynomial f = arity3_poly(g, row, omega(v.nops));
    for (const auto& h : hs) r3.push_back(arity3_coords(g3, phi_poly(f, h)));
  }
  const Echelon r3e = rref(std::move(r3), cols3);
  rep.dim_R3 = r3e.rank();

  Matrix rs;
  for (const Vec& row : rp.rows) {
    const Polynomial f = arity3_poly(gd, row, omega(v.nops));
    for (const auto& h : hs) rs.push_back(arity3_coords(gd3, phi_star_poly(f, h, Mode::Tri)));
  }
  const Echelon rse = rref(std::move(rs), cols3);
  rep.dim_R_perp_star = rse.rank();

  rep.orthogonal = true;
  for (const Vec& a : r3e.rows) {
    for (const Vec& b : rse.rows)
      if (form.pair(g3, a, b) != 0) {
        rep.orthogonal = false;
        break;
      }
    if (!rep.orthogonal) break;
  }
  rep.complement_equal = same_subspace(orthogonal_complement(g3, r3e, form), rse);
  return rep;
}

/// Calibration: associativity is self-dual and the dual of commutative
/// associative is Lie. Returns whether `form` reproduces both.
inline bool pairing_calibrates(const PairingForm& form) {
  const VarietyPresentation as = builtin("associative");
  const GeneratorSpace ga = generator_space(as);
  const Echelon as_perp = orthogonal_complement(ga, s3_span(ga, {as.identities[0].poly}), form);
  const bool self_dual = same_subspace(as_perp, s3_span(ga.dual(), {as.identities[0].poly}));

  const VarietyPresentation com = builtin("commutative");
  const GeneratorSpace gc = generator_space(com);
  const Echelon com_perp = orthogonal_complement(gc, s3_span(gc, {com.identities[1].poly}), form);
  const VarietyPresentation lie = builtin("lie");
  const bool lie_dual = same_subspace(com_perp, s3_span(gc.dual(), {lie.identities[1].poly}));
  return self_dual && lie_dual;
}

/// The pairing convention that passes calibration; throws unless exactly one does.
inline PairingForm calibrate_pairing() {
  const PairingForm with{true}, without{false};
  const bool a = pairing_calibrates(with), b = pairing_calibrates(without);
  if (a == b) throw Error("koszul: pairing calibration is ambiguous");
  return a ? with : without;
}

}  // namespace dendri
