#pragma once

// Test fixtures and independent oracles. Oracles here never call into the
// library's evaluation or construction code paths; they rebuild what they
// need from structure constants read with FDAlgebra::get.

#include <map>
#include <string>
#include <vector>

#include "dendri/dendri.hpp"

namespace oracle {

using dendri::Family;
using dendri::FDAlgebra;
using dendri::LinearOperator;
using dendri::Monomial;
using dendri::OpSymbol;
using dendri::Rational;
using dendri::Vec;

// ---------------------------------------------------------------------------
// Fixture algebras
// ---------------------------------------------------------------------------

/// Q[x]/(x^n), e_k = x^(k-1).
inline FDAlgebra truncated_poly(int n) {
  return FDAlgebra::from_rule(n, dendri::omega(1), [n](const OpSymbol&, int a, int b) {
    Vec v(static_cast<std::size_t>(n), 0);
    if (a + b < n) v[static_cast<std::size_t>(a + b)] = 1;
    return v;
  });
}

/// Q^n with componentwise product.
inline FDAlgebra componentwise(int n) {
  return FDAlgebra::from_rule(n, dendri::omega(1), [n](const OpSymbol&, int a, int b) {
    Vec v(static_cast<std::size_t>(n), 0);
    if (a == b) v[static_cast<std::size_t>(a)] = 1;
    return v;
  });
}

/// Full matrix algebra M_n, basis E_ij at index i*n + j.
inline FDAlgebra matrices(int n) {
  return FDAlgebra::from_rule(n * n, dendri::omega(1), [n](const OpSymbol&, int x, int y) {
    Vec v(static_cast<std::size_t>(n * n), 0);
    if (x % n == y / n) v[static_cast<std::size_t>((x / n) * n + y % n)] = 1;
    return v;
  });
}

/// 2x2 upper triangular matrices, basis E11, E12, E22.
inline FDAlgebra upper_triangular() {
  const int idx[2][2] = {{0, 1}, {-1, 2}};
  const int row[3] = {0, 0, 1}, col[3] = {0, 1, 1};
  return FDAlgebra::from_rule(3, dendri::omega(1), [&](const OpSymbol&, int x, int y) {
    Vec v(3, 0);
    if (col[x] == row[y]) v[static_cast<std::size_t>(idx[row[x]][col[y]])] = 1;
    return v;
  });
}

/// c * formal integration on Q[x]/(x^n): x^k -> c x^(k+1)/(k+1), top degree -> 0.
inline LinearOperator integration(int n, const Rational& c = 1) {
  std::vector<Vec> images;
  for (int k = 0; k < n; ++k) {
    Vec v(static_cast<std::size_t>(n), 0);
    if (k + 1 < n) v[static_cast<std::size_t>(k + 1)] = c / (k + 1);
    images.push_back(v);
  }
  return LinearOperator::from_images(images);
}

/// Diagonal operator with the given entries.
inline LinearOperator diagonal(const std::vector<Rational>& entries) {
  dendri::Matrix m(entries.size(), Vec(entries.size(), 0));
  for (std::size_t k = 0; k < entries.size(); ++k) m[k][k] = entries[k];
  return LinearOperator(m);
}

/// ad(E12) on upper_triangular(): square-zero derivation.
inline LinearOperator ad_e12() {
  return LinearOperator::from_images({{0, -1, 0}, {0, 0, 0}, {0, 1, 0}});
}

/// The same Omega-algebra read three ways: |- = -| = _|_ = the product.
inline FDAlgebra three_ways(const FDAlgebra& a) {
  return FDAlgebra::from_rule(a.dim(), dendri::omega3(a.signature().nops), [&](const OpSymbol& op, int x, int y) {
    return dendri::to_dense(a.product({Family::Base, op.index}, x, y), a.dim());
  });
}

// ---------------------------------------------------------------------------
// Dense structure constants and naive evaluation
// ---------------------------------------------------------------------------

/// t[op][a][b] = e_a op e_b as a dense vector.
struct Dense {
  int dim = 0;
  std::map<OpSymbol, std::vector<std::vector<Vec>>> t;

  [[nodiscard]] Vec mul(const OpSymbol& op, const Vec& x, const Vec& y) const {
    Vec out(static_cast<std::size_t>(dim), 0);
    const auto& tab = t.at(op);
    for (int a = 0; a < dim; ++a) {
      if (x[static_cast<std::size_t>(a)] == 0) continue;
      for (int b = 0; b < dim; ++b) {
        if (y[static_cast<std::size_t>(b)] == 0) continue;
        const Rational s = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
        for (int c = 0; c < dim; ++c) out[static_cast<std::size_t>(c)] += s * tab[a][b][static_cast<std::size_t>(c)];
      }
    }
    return out;
  }

  [[nodiscard]] Vec eval(const Monomial& u, const std::vector<Vec>& args) const {
    if (u.is_leaf()) return args[static_cast<std::size_t>(u.var() - 1)];
    return mul(u.op(), eval(u.left(), args), eval(u.right(), args));
  }

  [[nodiscard]] Vec eval(const dendri::Polynomial& p, const std::vector<Vec>& args) const {
    Vec out(static_cast<std::size_t>(dim), 0);
    for (const auto& [m, c] : p) {
      const Vec v = eval(m, args);
      for (int k = 0; k < dim; ++k) out[static_cast<std::size_t>(k)] += c * v[static_cast<std::size_t>(k)];
    }
    return out;
  }
};

inline Dense dense(const FDAlgebra& a) {
  Dense d;
  d.dim = a.dim();
  for (const OpSymbol& op : a.symbols()) {
    auto& tab = d.t[op];
    tab.assign(static_cast<std::size_t>(a.dim()), std::vector<Vec>(static_cast<std::size_t>(a.dim())));
    for (int x = 0; x < a.dim(); ++x)
      for (int y = 0; y < a.dim(); ++y) {
        Vec v(static_cast<std::size_t>(a.dim()), 0);
        for (int c = 0; c < a.dim(); ++c) v[static_cast<std::size_t>(c)] = a.get(op, x, y, c);
        tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
      }
  }
  return d;
}

inline Vec unit(int dim, int k) {
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

/// Tri double built straight from the block rules, as dense tables.
inline Dense naive_tri_double(const FDAlgebra& a) {
  const Dense s = dense(a);
  const int d = a.dim();
  Dense out;
  out.dim = 2 * d;
  for (int i = 1; i <= a.signature().nops; ++i) {
    const OpSymbol l{Family::Left, i}, r{Family::Right, i}, m{Family::Middle, i};
    auto& tab = out.t[{Family::Base, i}];
    tab.assign(static_cast<std::size_t>(2 * d), std::vector<Vec>(static_cast<std::size_t>(2 * d), Vec(2 * d, 0)));
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int c = 0; c < d; ++c) {
          const auto& lx = s.t.at(l)[x][y][c];
          const auto& rx = s.t.at(r)[x][y][c];
          const auto& mx = s.t.at(m)[x][y][c];
          tab[x][y][c] = lx + rx + mx;
          tab[x][y + d][c + d] = rx;
          tab[x + d][y][c + d] = lx;
          tab[x + d][y + d][c + d] = mx;
        }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hand-written axiom systems (written out, not generated)
// ---------------------------------------------------------------------------

/// Dendriform trialgebra axioms for op index i, x * y = x < y + x > y + x . y.
inline std::vector<dendri::Polynomial> tri_axioms(int i, int nops) {
  const std::string k = std::to_string(i);
  const std::string l = " <" + k + " ", r = " >" + k + " ", m = " ." + k + " ";
  const std::vector<std::string> lines = {
      // (x<y)<z = x<(y*z)
      "((x1" + l + "x2)" + l + "x3) - (x1" + l + "(x2" + l + "x3)) - (x1" + l + "(x2" + r + "x3)) - (x1" + l + "(x2" + m + "x3))",
      // (x>y)<z = x>(y<z)
      "((x1" + r + "x2)" + l + "x3) - (x1" + r + "(x2" + l + "x3))",
      // (x*y)>z = x>(y>z)
      "((x1" + l + "x2)" + r + "x3) + ((x1" + r + "x2)" + r + "x3) + ((x1" + m + "x2)" + r + "x3) - (x1" + r + "(x2" + r + "x3))",
      // (x>y).z = x>(y.z)
      "((x1" + r + "x2)" + m + "x3) - (x1" + r + "(x2" + m + "x3))",
      // (x<y).z = x.(y>z)
      "((x1" + l + "x2)" + m + "x3) - (x1" + m + "(x2" + r + "x3))",
      // (x.y)<z = x.(y<z)
      "((x1" + m + "x2)" + l + "x3) - (x1" + m + "(x2" + l + "x3))",
      // (x.y).z = x.(y.z)
      "((x1" + m + "x2)" + m + "x3) - (x1" + m + "(x2" + m + "x3))",
  };
  std::vector<dendri::Polynomial> out;
  for (const auto& s : lines) out.push_back(dendri::parse_polynomial(s, dendri::omega3(nops)));
  return out;
}

/// Triassociative axioms for op index i: < points at the left argument, > at the right.
inline std::vector<dendri::Polynomial> triassociative_axioms(int i, int nops) {
  const std::string k = std::to_string(i);
  auto t = [&](char a, char b, bool left_nested) {
    const std::string oa = std::string(" ") + a + k + " ", ob = std::string(" ") + b + k + " ";
    return left_nested ? "((x1" + oa + "x2)" + ob + "x3)" : "(x1" + oa + "(x2" + ob + "x3))";
  };
  const std::vector<std::string> lines = {
      t('<', '<', true) + " - " + t('<', '<', false), t('<', '<', true) + " - " + t('<', '>', false),
      t('>', '<', true) + " - " + t('>', '<', false), t('<', '>', true) + " - " + t('>', '>', false),
      t('>', '>', true) + " - " + t('>', '>', false), t('<', '<', true) + " - " + t('<', '.', false),
      t('.', '<', true) + " - " + t('.', '<', false), t('<', '.', true) + " - " + t('.', '>', false),
      t('>', '.', true) + " - " + t('>', '.', false), t('.', '>', true) + " - " + t('>', '>', false),
      t('.', '.', true) + " - " + t('.', '.', false),
  };
  std::vector<dendri::Polynomial> out;
  for (const auto& s : lines) out.push_back(dendri::parse_polynomial(s, dendri::omega3(nops)));
  return out;
}

/// Triassociative axioms without the two _|_-absorption rules.
inline std::vector<dendri::Polynomial> skew_triassociative_axioms(int i, int nops) {
  auto all = triassociative_axioms(i, nops);
  all.erase(all.begin() + 9);
  all.erase(all.begin() + 5);
  return all;
}

/// Dendriform (di) axioms for op index i.
inline std::vector<dendri::Polynomial> di_axioms(int i, int nops) {
  const std::string k = std::to_string(i);
  const std::string l = " <" + k + " ", r = " >" + k + " ";
  const std::vector<std::string> lines = {
      "((x1" + l + "x2)" + l + "x3) - (x1" + l + "(x2" + l + "x3)) - (x1" + l + "(x2" + r + "x3))",
      "((x1" + r + "x2)" + l + "x3) - (x1" + r + "(x2" + l + "x3))",
      "((x1" + l + "x2)" + r + "x3) + ((x1" + r + "x2)" + r + "x3) - (x1" + r + "(x2" + r + "x3))",
  };
  std::vector<dendri::Polynomial> out;
  for (const auto& s : lines) out.push_back(dendri::parse_polynomial(s, dendri::omega2(nops)));
  return out;
}

/// True iff every polynomial vanishes on all basis tuples, by dense evaluation.
inline bool satisfies(const Dense& a, const std::vector<dendri::Polynomial>& ps) {
  for (const auto& p : ps) {
    const int n = dendri::is_polylinear(p).degree;
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Vec> args;
      for (int v : idx) args.push_back(unit(a.dim, v));
      for (const auto& x : a.eval(p, args))
        if (x != 0) return false;
      int k = n - 1;
      while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == a.dim) idx[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Successor counting
// ---------------------------------------------------------------------------

inline bool has_emphasized(const Monomial& u, const dendri::EmphasisSet& h) {
  for (int v : h)
    if (u.contains_var(v)) return true;
  return false;
}

/// Number of internal nodes lying in maximal subtrees without emphasized leaves.
inline int pure_internal_nodes(const Monomial& u, const dendri::EmphasisSet& h) {
  if (u.is_leaf()) return 0;
  if (!has_emphasized(u, h)) return u.degree() - 1;
  return pure_internal_nodes(u.left(), h) + pure_internal_nodes(u.right(), h);
}

// ---------------------------------------------------------------------------
// Truncated polynomial arithmetic (for the integration operator)
// ---------------------------------------------------------------------------

/// Coefficient lists modulo x^n.
inline std::vector<Rational> poly_mul(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  std::vector<Rational> out(f.size(), 0);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; a + b < f.size(); ++b) out[a + b] += f[a] * g[b];
  return out;
}

inline std::vector<Rational> poly_integrate(const std::vector<Rational>& f) {
  std::vector<Rational> out(f.size(), 0);
  for (std::size_t k = 0; k + 1 < f.size(); ++k) out[k + 1] = f[k] / static_cast<long>(k + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Koszul dimensions computed by an independent exact prototype
// ---------------------------------------------------------------------------

struct KoszulDims {
  const char* variety;
  int N;
  std::size_t dim_R, dim_O3, dim_R3, dim_R_perp, dim_R_perp_star;
};

inline const std::vector<KoszulDims>& koszul_table() {
  static const std::vector<KoszulDims> t = {
      {"associative", 2, 6, 24, 66, 6, 42}, {"commutative", 1, 2, 6, 20, 1, 7}, {"lie", 1, 1, 6, 13, 2, 14},
      {"perm", 2, 9, 24, 87, 3, 21},        {"poisson", 2, 6, 24, 66, 6, 42},
  };
  return t;
}

}  // namespace oracle
