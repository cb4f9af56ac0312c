#pragma once

// The double A + A' of a (tri/di/skew) dendriform algebra with its canonical
// Rota-Baxter operator, and the bar quotient construction on Abar + A.

#include <string>
#include <utility>
#include <vector>

#include "dendri/fdalg.hpp"
#include "dendri/linalg.hpp"
#include "dendri/successor.hpp"
#include "dendri/varieties.hpp"

namespace dendri {

/// Omega-algebra on A + A' (basis e_1..e_d, then e_1'..e_d').
struct DoubledAlgebra {
  Mode mode = Mode::Tri;
  int base_dim = 0;
  FDAlgebra algebra;
  LinearOperator rb_operator;
  Rational weight = 0;

  /// a -> a' (second block).
  [[nodiscard]] Vec embed(const Vec& a) const {
    Vec out(static_cast<std::size_t>(2 * base_dim), 0);
    for (int k = 0; k < base_dim; ++k) out[static_cast<std::size_t>(base_dim + k)] = a[static_cast<std::size_t>(k)];
    return out;
  }
  /// a -> a (first block).
  [[nodiscard]] Vec include(const Vec& a) const {
    Vec out(static_cast<std::size_t>(2 * base_dim), 0);
    for (int k = 0; k < base_dim; ++k) out[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)];
    return out;
  }
};

namespace detail {

inline void check_double_input(const FDAlgebra& alg, Mode mode, const Rational& lambda) {
  const Context want = mode == Mode::Di ? Context::Omega2 : Context::Omega3;
  if (alg.signature().context != want)
    throw SignatureError("double_dendriform: " + mode_name(mode) + " mode needs an " + context_name(want) +
                         " algebra, got " + context_name(alg.signature().context));
  if (mode == Mode::Tri && lambda == 0) throw PreconditionError("double_dendriform: tri mode requires weight != 0");
  if (mode != Mode::Tri && lambda != 0)
    throw PreconditionError("double_dendriform: " + mode_name(mode) + " mode uses weight 0");
}

}  // namespace detail

/// Blocks: a b = sum of split products (|- + -| + _|_ for Tri, |- + -| otherwise),
/// a b' = (a |- b)', a' b = (a -| b)', a' b' = (a _|_ b)' (zero for Di).
/// Operator: Tri R(a') = lambda a, R(a) = -lambda a; Di/STri R(a') = a, R(a) = 0.
inline DoubledAlgebra double_dendriform(const FDAlgebra& alg, Mode mode, const Rational& lambda) {
  detail::check_double_input(alg, mode, lambda);
  const int d = alg.dim();
  const int nops = alg.signature().nops;
  DoubledAlgebra dd;
  dd.mode = mode;
  dd.base_dim = d;
  dd.weight = lambda;
  dd.algebra = FDAlgebra(2 * d, omega(nops));
  for (int i = 1; i <= nops; ++i) {
    const OpSymbol base{Family::Base, i}, left{Family::Left, i}, right{Family::Right, i}, middle{Family::Middle, i};
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        auto put = [&](int x, int y, int shift, const SparseVec& v) {
          for (const auto& [c, t] : v) dd.algebra.set(base, x, y, c + shift, dd.algebra.get(base, x, y, c + shift) + t);
        };
        put(a, b, 0, alg.product(right, a, b));
        put(a, b, 0, alg.product(left, a, b));
        if (mode == Mode::Tri) put(a, b, 0, alg.product(middle, a, b));
        put(a, b + d, d, alg.product(right, a, b));
        put(a + d, b, d, alg.product(left, a, b));
        if (mode != Mode::Di) put(a + d, b + d, d, alg.product(middle, a, b));
      }
  }
  std::vector<Vec> images(static_cast<std::size_t>(2 * d), Vec(static_cast<std::size_t>(2 * d), 0));
  for (int a = 0; a < d; ++a) {
    if (mode == Mode::Tri) {
      images[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = -lambda;
      images[static_cast<std::size_t>(a + d)][static_cast<std::size_t>(a)] = lambda;
    } else {
      images[static_cast<std::size_t>(a + d)][static_cast<std::size_t>(a)] = 1;
    }
  }
  dd.rb_operator = LinearOperator::from_images(images);
  return dd;
}

/// Checks that a -> a' turns the split operations into the Rota-Baxter
/// derived ones: iota(a |- b) = (1/lambda) R(iota a) iota b,
/// iota(a -| b) = (1/lambda) iota a R(iota b), iota(a _|_ b) = iota a iota b
/// (lambda-free for Di/STri; for Di the last clause is iota a iota b = 0).
inline VerificationReport verify_embedding(const DoubledAlgebra& dd, const FDAlgebra& alg) {
  detail::check_double_input(alg, dd.mode, dd.weight);
  if (dd.base_dim != alg.dim()) throw DimensionError("verify_embedding: double was built from another algebra");
  const int d = alg.dim();
  const Rational s = dd.mode == Mode::Tri ? Rational(1 / dd.weight) : Rational(1);
  VerificationReport report;
  auto first_failure = [&](const OpSymbol& op) -> std::optional<Counterexample> {
    const OpSymbol base{Family::Base, op.index};
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec ia = dd.embed(basis_vector(d, a)), ib = dd.embed(basis_vector(d, b));
        Vec lhs, rhs;
        if (op.family == Family::Right) {
          lhs = dd.embed(to_dense(alg.product(op, a, b), d));
          rhs = s * dd.algebra.multiply(base, dd.rb_operator.apply(ia), ib);
        } else if (op.family == Family::Left) {
          lhs = dd.embed(to_dense(alg.product(op, a, b), d));
          rhs = s * dd.algebra.multiply(base, ia, dd.rb_operator.apply(ib));
        } else {
          lhs = dd.mode == Mode::Di ? Vec(static_cast<std::size_t>(2 * d), 0)
                                    : dd.embed(to_dense(alg.product(op, a, b), d));
          rhs = dd.algebra.multiply(base, ia, ib);
        }
        if (lhs != rhs) return Counterexample{"embedding " + to_string(op), {a + 1, b + 1}, lhs - rhs};
      }
    return std::nullopt;
  };
  for (int i = 1; i <= alg.signature().nops; ++i)
    for (Family f : {Family::Right, Family::Left, Family::Middle})
      if (auto c = first_failure({f, i})) report.add(std::move(*c));
  return report;
}

struct DoubleVerdict {
  VerificationReport dendriform;  // A against the dendriform identities of V
  VerificationReport doubled;     // the double against V
};

/// Both sides evaluated independently; their statuses are expected to agree.
inline DoubleVerdict check_double_in_variety(const FDAlgebra& alg, const VarietyPresentation& v, Mode mode,
                                             const Rational& lambda) {
  if (alg.signature().nops != v.nops) throw SignatureError("check_double_in_variety: operation count mismatch");
  const DoubledAlgebra dd = double_dendriform(alg, mode, lambda);
  const GeneratedIdentitySet ids = generate_dendriform_identities(v, mode);
  return {check_identities(alg, ids), check_identities(dd.algebra, v.identities)};
}

// ---------------------------------------------------------------------------
// Bar quotient
// ---------------------------------------------------------------------------

/// Abar = A / A0 with A0 spanned by a |- b - a -| b (and a |- b - a _|_ b for
/// Tri). The Omega-algebra lives on Abar + A (bar block first):
///   abar bbar = (a |- b)bar, abar x = a |- x, x bbar = x -| b, x y = x _|_ y.
struct BarQuotient {
  Mode mode = Mode::Tri;
  int dim = 0;
  int bar_dim = 0;
  std::vector<int> bar_coords;  // A-coordinates (0-based) that survive as the basis of Abar
  Matrix projection;            // bar_dim x dim, column j = image of e_j
  Echelon kernel;               // A0
  FDAlgebra hat_algebra;

  [[nodiscard]] Vec project(const Vec& a) const {
    Vec out(static_cast<std::size_t>(bar_dim), 0);
    for (int q = 0; q < bar_dim; ++q)
      for (int j = 0; j < dim; ++j)
        out[static_cast<std::size_t>(q)] += projection[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] *
                                            a[static_cast<std::size_t>(j)];
    return out;
  }
  /// abar as a vector of Abar + A.
  [[nodiscard]] Vec hat_bar(const Vec& a) const {
    Vec out = project(a);
    out.resize(static_cast<std::size_t>(bar_dim + dim), 0);
    return out;
  }
  /// x in the A block of Abar + A.
  [[nodiscard]] Vec hat_a(const Vec& x) const {
    Vec out(static_cast<std::size_t>(bar_dim), 0);
    out.insert(out.end(), x.begin(), x.end());
    return out;
  }
  /// A-block part of a vector of Abar + A.
  [[nodiscard]] Vec a_part(const Vec& h) const { return Vec(h.begin() + bar_dim, h.end()); }
};

inline BarQuotient bar_quotient(const FDAlgebra& alg, Mode mode) {
  if (mode == Mode::Di) throw Error("bar_quotient: mode must be tri or stri");
  if (alg.signature().context != Context::Omega3) throw SignatureError("bar_quotient: algebra must be over omega3");
  const int d = alg.dim();
  const int nops = alg.signature().nops;

  const VerificationReport zero = check_identities(alg, generate_zero_identities(nops, mode));
  if (!zero.passed())
    throw PreconditionError("bar_quotient: zero identity violated: " + render(zero.counterexamples.front()));

  Matrix gens;
  for (int i = 1; i <= nops; ++i)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec r = to_dense(alg.product({Family::Right, i}, a, b), d);
        gens.push_back(r - to_dense(alg.product({Family::Left, i}, a, b), d));
        if (mode == Mode::Tri) gens.push_back(r - to_dense(alg.product({Family::Middle, i}, a, b), d));
      }
  BarQuotient bq;
  bq.mode = mode;
  bq.dim = d;
  bq.kernel = rref(std::move(gens), static_cast<std::size_t>(d));

  std::vector<Family> ideal_families = {Family::Left, Family::Right};
  if (mode == Mode::Tri) ideal_families.push_back(Family::Middle);
  for (int i = 1; i <= nops; ++i)
    for (Family f : ideal_families) {
      const OpSymbol op{f, i};
      for (const Vec& z : bq.kernel.rows)
        for (int x = 0; x < d; ++x) {
          const Vec ex = basis_vector(d, x);
          for (const Vec& prod : {alg.multiply(op, z, ex), alg.multiply(op, ex, z)})
            if (!bq.kernel.contains(prod))
              throw PreconditionError("bar_quotient: A0 is not an ideal for " + to_string(op) + " (product with e" +
                                      std::to_string(x + 1) + ")");
        }
    }

  std::vector<int> pivot_row(static_cast<std::size_t>(d), -1);
  for (std::size_t k = 0; k < bq.kernel.pivots.size(); ++k) pivot_row[bq.kernel.pivots[k]] = static_cast<int>(k);
  for (int j = 0; j < d; ++j)
    if (pivot_row[static_cast<std::size_t>(j)] < 0) bq.bar_coords.push_back(j);
  bq.bar_dim = static_cast<int>(bq.bar_coords.size());
  bq.projection.assign(static_cast<std::size_t>(bq.bar_dim), Vec(static_cast<std::size_t>(d), 0));
  for (int q = 0; q < bq.bar_dim; ++q) {
    const int t = bq.bar_coords[static_cast<std::size_t>(q)];
    bq.projection[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)] = 1;
    for (int j = 0; j < d; ++j) {
      const int r = pivot_row[static_cast<std::size_t>(j)];
      if (r >= 0)
        bq.projection[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] =
            -bq.kernel.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)];
    }
  }

  const int bd = bq.bar_dim;
  bq.hat_algebra = FDAlgebra::from_rule(bd + d, omega(nops), [&](const OpSymbol& op, int x, int y) {
    const OpSymbol left{Family::Left, op.index}, right{Family::Right, op.index}, middle{Family::Middle, op.index};
    const bool xbar = x < bd, ybar = y < bd;
    const int ax = xbar ? bq.bar_coords[static_cast<std::size_t>(x)] : x - bd;
    const int ay = ybar ? bq.bar_coords[static_cast<std::size_t>(y)] : y - bd;
    if (xbar && ybar) return bq.hat_bar(to_dense(alg.product(right, ax, ay), d));
    if (xbar) return bq.hat_a(to_dense(alg.product(right, ax, ay), d));
    if (ybar) return bq.hat_a(to_dense(alg.product(left, ax, ay), d));
    return bq.hat_a(to_dense(alg.product(middle, ax, ay), d));
  });
  return bq;
}

}  // namespace dendri
