#pragma once

// Seeded random structures for property tests: sparse algebras and
// polylinear monomials.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dendri/fdalg.hpp"
#include "dendri/terms.hpp"

namespace dendri {

using Rng = std::mt19937_64;

struct RandomAlgebraOptions {
  double density = 0.3;
  std::vector<int> coefficients = {-2, -1, 1, 2};
};

/// Sparse random structure constants. Each (op, a, b, c) is nonzero with
/// probability `density`; an all-zero draw is redrawn.
inline FDAlgebra random_algebra(int dim, Signature sig, Rng& rng, const RandomAlgebraOptions& opt = {}) {
  std::bernoulli_distribution keep(opt.density);
  std::uniform_int_distribution<std::size_t> pick(0, opt.coefficients.size() - 1);
  for (;;) {
    FDAlgebra alg(dim, sig);
    for (const OpSymbol& op : alg.symbols())
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          for (int c = 0; c < dim; ++c)
            if (keep(rng)) alg.set(op, a, b, c, opt.coefficients[pick(rng)]);
    if (!alg.is_zero() || dim == 0) return alg;
  }
}

inline FDAlgebra random_algebra(int dim, Signature sig, std::uint64_t seed, const RandomAlgebraOptions& opt = {}) {
  Rng rng(seed);
  return random_algebra(dim, sig, rng, opt);
}

/// Uniformly shaped random binary tree on leaves x1..xn in a random order,
/// with Base ops of random index in 1..nops.
inline Monomial random_polylinear_monomial(int n, int nops, Rng& rng) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::uniform_int_distribution<int> op_pick(1, nops);
  auto build = [&](auto& self, int lo, int hi) -> Monomial {
    if (hi - lo == 1) return Monomial::leaf(vars[static_cast<std::size_t>(lo)]);
    std::uniform_int_distribution<int> split(lo + 1, hi - 1);
    const int mid = split(rng);
    Monomial l = self(self, lo, mid);
    Monomial r = self(self, mid, hi);
    return Monomial::node({Family::Base, op_pick(rng)}, l, r);
  };
  return build(build, 0, n);
}

/// Random polylinear polynomial of degree n with `terms` monomials (some may cancel).
inline Polynomial random_polylinear_polynomial(int n, int nops, int terms, Rng& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Polynomial p(omega(nops));
  for (int k = 0; k < terms; ++k) p.add(random_polylinear_monomial(n, nops, rng), coeff(rng));
  return p;
}

}  // namespace dendri
