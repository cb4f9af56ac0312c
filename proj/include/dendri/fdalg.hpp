#pragma once

// Finite-dimensional algebras given by rational structure constants:
// evaluation of polynomials, exhaustive identity checks on basis tuples,
// Rota-Baxter checks and the derived (tri/di)dendriform structures.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "dendri/linalg.hpp"
#include "dendri/successor.hpp"
#include "dendri/terms.hpp"

namespace dendri {

/// Sparse vector: (0-based coordinate, nonzero coefficient), sorted by coordinate.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace_back(static_cast<int>(k), v[k]);
  return out;
}

inline Vec to_dense(const SparseVec& v, int dim) {
  Vec out(static_cast<std::size_t>(dim), 0);
  for (const auto& [k, c] : v) out[static_cast<std::size_t>(k)] = c;
  return out;
}

inline Vec basis_vector(int dim, int k) {
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

inline Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vec operator*(const Rational& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline std::string render(const Vec& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(v[k]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// FDAlgebra
// ---------------------------------------------------------------------------

/// e_a op e_b = sum_c t[a,b,c] e_c for every declared op. Indices are 0-based
/// in the API below; files and reports use 1-based indices.
class FDAlgebra {
 public:
  FDAlgebra() = default;
  FDAlgebra(int dim, Signature sig) : dim_(dim), sig_(sig), symbols_(sig.symbols()) {
    if (dim < 0) throw DimensionError("negative dimension");
    tables_.assign(symbols_.size(), std::vector<SparseVec>(static_cast<std::size_t>(dim) * dim));
  }

  /// Builds an algebra from a bilinear rule on basis vectors.
  static FDAlgebra from_rule(int dim, Signature sig, const std::function<Vec(const OpSymbol&, int, int)>& rule) {
    FDAlgebra alg(dim, sig);
    for (const OpSymbol& op : alg.symbols_)
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          const Vec v = rule(op, a, b);
          if (static_cast<int>(v.size()) != dim) throw DimensionError("from_rule: product of wrong length");
          alg.table(op, a, b) = to_sparse(v);
        }
    return alg;
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Signature& signature() const { return sig_; }
  [[nodiscard]] const std::vector<OpSymbol>& symbols() const { return symbols_; }

  void set(const OpSymbol& op, int a, int b, int c, const Rational& value) {
    check_index(a);
    check_index(b);
    check_index(c);
    SparseVec& row = table(op, a, b);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
    if (it != row.end() && it->first == c) {
      if (value == 0)
        row.erase(it);
      else
        it->second = value;
    } else if (value != 0) {
      row.insert(it, {c, value});
    }
  }

  [[nodiscard]] Rational get(const OpSymbol& op, int a, int b, int c) const {
    for (const auto& [k, v] : product(op, a, b))
      if (k == c) return v;
    return 0;
  }

  /// e_a op e_b as a sparse vector.
  [[nodiscard]] const SparseVec& product(const OpSymbol& op, int a, int b) const {
    return tables_[slot(op)][static_cast<std::size_t>(a) * dim_ + b];
  }

  [[nodiscard]] SparseVec multiply(const OpSymbol& op, const SparseVec& x, const SparseVec& y) const {
    const auto& t = tables_[slot(op)];
    std::map<int, Rational> acc;
    for (const auto& [a, xa] : x)
      for (const auto& [b, yb] : y) {
        const SparseVec& row = t[static_cast<std::size_t>(a) * dim_ + b];
        if (row.empty()) continue;
        const Rational s = xa * yb;
        for (const auto& [c, v] : row) acc[c] += s * v;
      }
    SparseVec out;
    for (auto& [c, v] : acc)
      if (v != 0) out.emplace_back(c, std::move(v));
    return out;
  }

  [[nodiscard]] Vec multiply(const OpSymbol& op, const Vec& x, const Vec& y) const {
    check_vec(x);
    check_vec(y);
    return to_dense(multiply(op, to_sparse(x), to_sparse(y)), dim_);
  }

  /// Nonzero entries (a, b, c, value), 0-based, in lexicographic order.
  [[nodiscard]] std::vector<std::tuple<int, int, int, Rational>> entries(const OpSymbol& op) const {
    std::vector<std::tuple<int, int, int, Rational>> out;
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b)
        for (const auto& [c, v] : product(op, a, b)) out.emplace_back(a, b, c, v);
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& t : tables_)
      for (const auto& row : t)
        if (!row.empty()) return false;
    return true;
  }

  friend bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
    return a.dim_ == b.dim_ && a.sig_ == b.sig_ && a.tables_ == b.tables_;
  }

  [[nodiscard]] std::size_t slot(const OpSymbol& op) const {
    if (!sig_.admits(op))
      throw SignatureError("operation " + to_string(op) + " not declared by the algebra (" +
                           context_name(sig_.context) + ", " + std::to_string(sig_.nops) + " ops)");
    for (std::size_t k = 0; k < symbols_.size(); ++k)
      if (symbols_[k] == op) return k;
    throw SignatureError("operation " + to_string(op) + " not declared");
  }

  void check_vec(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim_)
      throw DimensionError("vector of length " + std::to_string(v.size()) + " for algebra of dimension " +
                           std::to_string(dim_));
  }

 private:
  SparseVec& table(const OpSymbol& op, int a, int b) {
    return tables_[slot(op)][static_cast<std::size_t>(a) * dim_ + b];
  }
  void check_index(int k) const {
    if (k < 0 || k >= dim_) throw DimensionError("basis index out of range");
  }

  int dim_ = 0;
  Signature sig_;
  std::vector<OpSymbol> symbols_;
  std::vector<std::vector<SparseVec>> tables_;
};

// ---------------------------------------------------------------------------
// Linear operators
// ---------------------------------------------------------------------------

/// d x d matrix acting by columns: R(e_j) = sum_i M[i][j] e_i.
class LinearOperator {
 public:
  LinearOperator() = default;
  explicit LinearOperator(Matrix m) : m_(std::move(m)) {
    for (const auto& row : m_)
      if (row.size() != m_.size()) throw DimensionError("operator matrix is not square");
  }

  static LinearOperator zero(int dim) {
    return LinearOperator(Matrix(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0)));
  }
  static LinearOperator identity(int dim) {
    LinearOperator r = zero(dim);
    for (int k = 0; k < dim; ++k) r.m_[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    return r;
  }
  /// Operator sending e_j to images[j].
  static LinearOperator from_images(const std::vector<Vec>& images) {
    const std::size_t d = images.size();
    LinearOperator r = zero(static_cast<int>(d));
    for (std::size_t j = 0; j < d; ++j) {
      if (images[j].size() != d) throw DimensionError("operator image of wrong length");
      for (std::size_t i = 0; i < d; ++i) r.m_[i][j] = images[j][i];
    }
    return r;
  }

  [[nodiscard]] int dim() const { return static_cast<int>(m_.size()); }
  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] const Rational& at(int i, int j) const {
    return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  [[nodiscard]] Vec apply(const Vec& v) const {
    if (v.size() != m_.size()) throw DimensionError("operator applied to vector of wrong length");
    Vec out(m_.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < m_.size(); ++i)
        if (m_[i][j] != 0) out[i] += m_[i][j] * v[j];
    }
    return out;
  }

  [[nodiscard]] Vec column(int j) const { return apply(basis_vector(dim(), j)); }

  [[nodiscard]] LinearOperator compose(const LinearOperator& inner) const {
    if (inner.dim() != dim()) throw DimensionError("operator composition dimension mismatch");
    std::vector<Vec> images;
    for (int j = 0; j < dim(); ++j) images.push_back(apply(inner.column(j)));
    return from_images(images);
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& row : m_)
      if (!dendri::is_zero(row)) return false;
    return true;
  }

  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

 private:
  Matrix m_;
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline SparseVec eval_tokens(const FDAlgebra& alg, std::span<const Monomial::Token> tokens, std::size_t& pos,
                             const std::vector<SparseVec>& args) {
  const Monomial::Token& t = tokens[pos++];
  if (t.is_leaf()) return args[static_cast<std::size_t>(t.value - 1)];
  SparseVec l = eval_tokens(alg, tokens, pos, args);
  SparseVec r = eval_tokens(alg, tokens, pos, args);
  if (l.empty() || r.empty()) return {};
  return alg.multiply(t.op(), l, r);
}

inline void check_poly_signature(const FDAlgebra& alg, const Polynomial& p) {
  for (const auto& [m, c] : p)
    for (const auto& t : m.tokens())
      if (!t.is_leaf()) (void)alg.slot(t.op());
}

inline int max_var(const Polynomial& p) {
  int n = 0;
  for (const auto& [m, c] : p)
    for (int v : m.leaves()) n = std::max(n, v);
  return n;
}

inline SparseVec evaluate_sparse(const FDAlgebra& alg, const Polynomial& p, const std::vector<SparseVec>& args) {
  std::map<int, Rational> acc;
  for (const auto& [m, c] : p) {
    std::size_t pos = 0;
    for (const auto& [k, v] : eval_tokens(alg, m.tokens(), pos, args)) acc[k] += c * v;
  }
  SparseVec out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, std::move(v));
  return out;
}

}  // namespace detail

/// Multilinear evaluation of p with x_k := assignment[k-1].
inline Vec evaluate(const FDAlgebra& alg, const Polynomial& p, const std::vector<Vec>& assignment) {
  detail::check_poly_signature(alg, p);
  if (detail::max_var(p) > static_cast<int>(assignment.size()))
    throw DimensionError("evaluate: polynomial uses x" + std::to_string(detail::max_var(p)) + " but only " +
                         std::to_string(assignment.size()) + " values were given");
  std::vector<SparseVec> args;
  for (const Vec& v : assignment) {
    alg.check_vec(v);
    args.push_back(to_sparse(v));
  }
  return to_dense(detail::evaluate_sparse(alg, p, args), alg.dim());
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

struct Counterexample {
  std::string identity_id;
  std::vector<int> tuple;  // 1-based basis indices
  Vec residual;
};

struct VerificationReport {
  enum class Status { Pass, Fail };
  Status status = Status::Pass;
  std::vector<Counterexample> counterexamples;
  std::optional<std::uint64_t> seed;

  [[nodiscard]] bool passed() const { return status == Status::Pass; }

  void add(Counterexample c) {
    status = Status::Fail;
    counterexamples.push_back(std::move(c));
  }
  void merge(const VerificationReport& other) {
    for (const auto& c : other.counterexamples) add(c);
  }
};

inline std::string render(const Counterexample& c) {
  std::string out = c.identity_id + " at (";
  for (std::size_t k = 0; k < c.tuple.size(); ++k) {
    if (k) out += ',';
    out += 'e' + std::to_string(c.tuple[k]);
  }
  return out + "): residual " + render(c.residual);
}

namespace detail {

inline unsigned worker_count(std::size_t jobs) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

/// Runs fn(k) for k in [0, jobs) on a small thread pool.
inline void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t k = 0; k < jobs; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < jobs; k = next++) fn(k);
    });
  for (auto& t : pool) t.join();
}

/// First basis tuple (lexicographic) on which p does not vanish, if any.
/// Work is split by the first tuple entry; later slices stop early once an
/// earlier slice has found a counterexample.
inline std::optional<Counterexample> first_counterexample(const FDAlgebra& alg, const std::string& id,
                                                          const Polynomial& p, int n) {
  const int d = alg.dim();
  if (p.is_zero() || d == 0) return std::nullopt;
  std::vector<SparseVec> basis;
  for (int k = 0; k < d; ++k) basis.push_back({{k, Rational(1)}});
  std::vector<std::optional<Counterexample>> found(static_cast<std::size_t>(d));
  std::atomic<int> best{d};
  parallel_for(static_cast<std::size_t>(d), [&](std::size_t first) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    idx[0] = static_cast<int>(first);
    std::vector<SparseVec> args(static_cast<std::size_t>(n));
    for (;;) {
      if (best.load() < static_cast<int>(first)) return;
      for (int k = 0; k < n; ++k) args[static_cast<std::size_t>(k)] = basis[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      SparseVec r = evaluate_sparse(alg, p, args);
      if (!r.empty()) {
        std::vector<int> tuple;
        for (int v : idx) tuple.push_back(v + 1);
        found[first] = Counterexample{id, tuple, to_dense(r, d)};
        int cur = best.load();
        while (static_cast<int>(first) < cur && !best.compare_exchange_weak(cur, static_cast<int>(first))) {
        }
        return;
      }
      int k = n - 1;
      while (k >= 1 && ++idx[static_cast<std::size_t>(k)] == d) idx[static_cast<std::size_t>(k--)] = 0;
      if (k < 1) return;
    }
  });
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace detail

/// Pass iff every identity vanishes on all d^n basis tuples. Records the
/// lexicographically first counterexample of each failing identity.
inline VerificationReport check_identities(const FDAlgebra& alg, const std::vector<NamedIdentity>& identities) {
  VerificationReport report;
  for (const auto& id : identities) {
    detail::check_poly_signature(alg, id.poly);
    const PolylinearInfo info = is_polylinear(id.poly);
    if (!info.polylinear) throw Error("identity " + id.id + " is not polylinear");
    if (auto c = detail::first_counterexample(alg, id.id, id.poly, info.degree)) report.add(std::move(*c));
  }
  return report;
}

inline VerificationReport check_identities(const FDAlgebra& alg, const GeneratedIdentitySet& set) {
  return check_identities(alg, set.named());
}

inline VerificationReport check_identity(const FDAlgebra& alg, const Polynomial& p, const std::string& id = "p") {
  return check_identities(alg, std::vector<NamedIdentity>{{id, p}});
}

// ---------------------------------------------------------------------------
// Rota-Baxter operators and derived structures
// ---------------------------------------------------------------------------

/// R(x) op R(y) = R(x op R(y) + R(x) op y + lambda x op y) on all basis pairs and ops.
inline VerificationReport check_rota_baxter(const FDAlgebra& alg, const LinearOperator& r, const Rational& lambda) {
  if (alg.signature().context != Context::Omega) throw SignatureError("check_rota_baxter: algebra must be over omega");
  if (r.dim() != alg.dim()) throw DimensionError("check_rota_baxter: operator dimension does not match algebra");
  VerificationReport report;
  const int d = alg.dim();
  auto first_failure = [&](const OpSymbol& op) -> std::optional<Counterexample> {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec x = basis_vector(d, a), y = basis_vector(d, b);
        const Vec rx = r.column(a), ry = r.column(b);
        const Vec lhs = alg.multiply(op, rx, ry);
        const Vec inner = alg.multiply(op, x, ry) + alg.multiply(op, rx, y) + lambda * alg.multiply(op, x, y);
        const Vec residual = lhs - r.apply(inner);
        if (!is_zero(residual)) return Counterexample{"rota-baxter " + to_string(op), {a + 1, b + 1}, residual};
      }
    return std::nullopt;
  };
  for (const OpSymbol& op : alg.symbols())
    if (auto c = first_failure(op)) report.add(std::move(*c));
  return report;
}

/// Dendriform structure induced by a Rota-Baxter operator. With lambda = 0 the
/// result is over omega2: x |- y = R(x) y, x -| y = x R(y). Otherwise over
/// omega3; scaled uses (1/lambda) R(x) y, (1/lambda) x R(y), x y and unscaled
/// uses R(x) y, x R(y), lambda x y.
inline FDAlgebra derived_dendriform(const FDAlgebra& alg, const LinearOperator& r, const Rational& lambda,
                                    bool scaled) {
  if (lambda == 0 && scaled) throw PreconditionError("derived_dendriform: scaled convention requires lambda != 0");
  const VerificationReport rb = check_rota_baxter(alg, r, lambda);
  if (!rb.passed())
    throw PreconditionError("derived_dendriform: not a Rota-Baxter operator of weight " + to_string(lambda) + ": " +
                            render(rb.counterexamples.front()));
  const int d = alg.dim();
  const int nops = alg.signature().nops;
  const Signature sig = lambda == 0 ? omega2(nops) : omega3(nops);
  const Rational s = scaled ? Rational(1 / lambda) : Rational(1);
  return FDAlgebra::from_rule(d, sig, [&](const OpSymbol& op, int a, int b) {
    const OpSymbol base{Family::Base, op.index};
    switch (op.family) {
      case Family::Right: return s * alg.multiply(base, r.column(a), basis_vector(d, b));
      case Family::Left: return s * alg.multiply(base, basis_vector(d, a), r.column(b));
      default: {
        const Rational m = scaled ? Rational(1) : lambda;
        return m * to_dense(alg.product(base, a, b), d);
      }
    }
  });
}

namespace detail {

inline Polynomial associator(int i) {
  const std::string op = "*" + std::to_string(i);
  return parse_polynomial("(x1 " + op + " (x2 " + op + " x3)) - ((x1 " + op + " x2) " + op + " x3)", omega(i));
}

inline void require_associative(const FDAlgebra& alg, const char* who) {
  if (alg.signature().context != Context::Omega) throw SignatureError(std::string(who) + ": algebra must be over omega");
  for (int i = 1; i <= alg.signature().nops; ++i) {
    const Polynomial p = associator(i).with_signature(omega(alg.signature().nops));
    const VerificationReport rep = check_identity(alg, p, "associativity *" + std::to_string(i));
    if (!rep.passed())
      throw PreconditionError(std::string(who) + ": algebra is not associative: " + render(rep.counterexamples.front()));
  }
}

}  // namespace detail

/// Omega3-structure on A (x) A (x) A (dimension d^3, basis index (p d + q) d + r):
///   a.b.c |- a'.b'.c' = abca' . b' . c'
///   a.b.c -| a'.b'.c' = a . b . ca'b'c'
///   a.b.c _|_ a'.b'.c' = a . bca'b' . c'
inline FDAlgebra triassociative_tensor_cube(const FDAlgebra& alg) {
  detail::require_associative(alg, "triassociative_tensor_cube");
  const int d = alg.dim();
  const int d3 = d * d * d;
  auto idx = [d](int p, int q, int r) { return (p * d + q) * d + r; };
  return FDAlgebra::from_rule(d3, omega3(alg.signature().nops), [&](const OpSymbol& op, int x, int y) {
    const OpSymbol base{Family::Base, op.index};
    const int a = x / (d * d), b = (x / d) % d, c = x % d;
    const int a2 = y / (d * d), b2 = (y / d) % d, c2 = y % d;
    auto prod = [&](std::initializer_list<int> ks) {
      auto it = ks.begin();
      SparseVec v{{*it, Rational(1)}};
      for (++it; it != ks.end(); ++it) v = alg.multiply(base, v, SparseVec{{*it, Rational(1)}});
      return v;
    };
    Vec out(static_cast<std::size_t>(d3), 0);
    switch (op.family) {
      case Family::Right:
        for (const auto& [k, v] : prod({a, b, c, a2})) out[static_cast<std::size_t>(idx(k, b2, c2))] += v;
        break;
      case Family::Left:
        for (const auto& [k, v] : prod({c, a2, b2, c2})) out[static_cast<std::size_t>(idx(a, b, k))] += v;
        break;
      default:
        for (const auto& [k, v] : prod({b, c, a2, b2})) out[static_cast<std::size_t>(idx(a, k, c2))] += v;
        break;
    }
    return out;
  });
}

/// Omega3-structure a |- b = D(a) b, a -| b = a D(b), a _|_ b = a b on an
/// associative algebra with a square-zero derivation D. Both the Leibniz rule
/// and D^2 = 0 are checked.
inline FDAlgebra stri_from_derivation(const FDAlgebra& alg, const LinearOperator& dop) {
  detail::require_associative(alg, "stri_from_derivation");
  const int d = alg.dim();
  if (dop.dim() != d) throw DimensionError("stri_from_derivation: operator dimension does not match algebra");
  for (const OpSymbol& op : alg.symbols())
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec lhs = dop.apply(to_dense(alg.product(op, a, b), d));
        const Vec rhs =
            alg.multiply(op, dop.column(a), basis_vector(d, b)) + alg.multiply(op, basis_vector(d, a), dop.column(b));
        if (lhs != rhs)
          throw PreconditionError("stri_from_derivation: Leibniz rule fails for " + to_string(op) + " at (e" +
                                  std::to_string(a + 1) + ",e" + std::to_string(b + 1) + "): residual " +
                                  render(lhs - rhs));
      }
  for (int a = 0; a < d; ++a) {
    const Vec v = dop.apply(dop.column(a));
    if (!is_zero(v))
      throw PreconditionError("stri_from_derivation: D^2 e" + std::to_string(a + 1) + " = " + render(v) + " is not zero");
  }
  return FDAlgebra::from_rule(d, omega3(alg.signature().nops), [&](const OpSymbol& op, int a, int b) {
    const OpSymbol base{Family::Base, op.index};
    switch (op.family) {
      case Family::Right: return alg.multiply(base, dop.column(a), basis_vector(d, b));
      case Family::Left: return alg.multiply(base, basis_vector(d, a), dop.column(b));
      default: return to_dense(alg.product(base, a, b), d);
    }
  });
}

// ---------------------------------------------------------------------------
// Derived bracket on s-trialgebras
// ---------------------------------------------------------------------------

/// Bracket built from the split operations of op index 1.
enum class BracketForm {
  LeftMinusRight,  // [x,y] = x -| y - x |- y
  LeftMinusSwap,   // [x,y] = x -| y - y |- x
};

/// Omega-algebra with x *1 y = x _|_1 y and x *2 y = [x,y].
inline FDAlgebra derived_bracket_algebra(const FDAlgebra& alg, BracketForm form) {
  if (alg.signature().context != Context::Omega3) throw SignatureError("derived bracket: algebra must be over omega3");
  const int d = alg.dim();
  const OpSymbol left{Family::Left, 1}, right{Family::Right, 1}, middle{Family::Middle, 1};
  return FDAlgebra::from_rule(d, omega(2), [&](const OpSymbol& op, int a, int b) {
    if (op.index == 1) return to_dense(alg.product(middle, a, b), d);
    const Vec l = to_dense(alg.product(left, a, b), d);
    const Vec r = form == BracketForm::LeftMinusRight ? to_dense(alg.product(right, a, b), d)
                                                      : to_dense(alg.product(right, b, a), d);
    return l - r;
  });
}

/// Leibniz identity [[x,y],z] = [[x,z],y] + [x,[y,z]], the Poisson rule
/// [xy,z] = x[y,z] + [x,z]y and associativity of the product.
inline std::vector<NamedIdentity> derived_bracket_identities() {
  const Signature sig = omega(2);
  return {
      {"leibniz", parse_polynomial("((x1 *2 x2) *2 x3) - ((x1 *2 x3) *2 x2) - (x1 *2 (x2 *2 x3))", sig)},
      {"poisson", parse_polynomial("((x1 *1 x2) *2 x3) - (x1 *1 (x2 *2 x3)) - ((x1 *2 x3) *1 x2)", sig)},
      {"associativity", parse_polynomial("(x1 *1 (x2 *1 x3)) - ((x1 *1 x2) *1 x3)", sig)},
  };
}

inline VerificationReport check_derived_bracket(const FDAlgebra& alg, BracketForm form) {
  return check_identities(derived_bracket_algebra(alg, form), derived_bracket_identities());
}

}  // namespace dendri
