#pragma once

// Nonassociative monomials (planar binary trees with labelled leaves) and
// exact rational polynomials over them, plus the text format used for
// identities:
//
//   identity := poly | poly '=' poly
//   poly     := term (('+'|'-') term)*
//   term     := [rational] monomial
//   monomial := 'x'INT | '(' monomial op monomial ')'
//   op       := '*'INT | '<'INT | '>'INT | '.'INT     (index defaults to 1)

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dendri/error.hpp"
#include "dendri/rational.hpp"

namespace dendri {

// ---------------------------------------------------------------------------
// Operation symbols and signatures
// ---------------------------------------------------------------------------

/// Base is the plain operation of an Omega-algebra; Left (-|), Right (|-) and
/// Middle (_|_) are its split copies in di-/trialgebra signatures.
enum class Family : std::uint8_t { Base, Left, Right, Middle };

inline constexpr Family kAllFamilies[] = {Family::Base, Family::Left, Family::Right, Family::Middle};

inline char family_char(Family f) {
  switch (f) {
    case Family::Base: return '*';
    case Family::Left: return '<';
    case Family::Right: return '>';
    case Family::Middle: return '.';
  }
  return '?';
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Base: return "base";
    case Family::Left: return "left";
    case Family::Right: return "right";
    case Family::Middle: return "middle";
  }
  return "?";
}

inline Family family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw Error("unknown operation family '" + std::string(name) + "'");
}

struct OpSymbol {
  Family family = Family::Base;
  int index = 1;

  auto operator<=>(const OpSymbol&) const = default;
};

inline std::string to_string(const OpSymbol& op) {
  return std::string(1, family_char(op.family)) + std::to_string(op.index);
}

/// Omega: base operations only. Omega2: left/right. Omega3: left/right/middle.
enum class Context : std::uint8_t { Omega, Omega2, Omega3 };

inline std::string context_name(Context c) {
  switch (c) {
    case Context::Omega: return "omega";
    case Context::Omega2: return "omega2";
    case Context::Omega3: return "omega3";
  }
  return "?";
}

inline Context context_from_name(std::string_view name) {
  if (name == "omega") return Context::Omega;
  if (name == "omega2") return Context::Omega2;
  if (name == "omega3") return Context::Omega3;
  throw Error("unknown context '" + std::string(name) + "'");
}

inline bool context_allows(Context c, Family f) {
  switch (c) {
    case Context::Omega: return f == Family::Base;
    case Context::Omega2: return f == Family::Left || f == Family::Right;
    case Context::Omega3: return f != Family::Base;
  }
  return false;
}

inline std::vector<Family> context_families(Context c) {
  std::vector<Family> out;
  for (Family f : kAllFamilies)
    if (context_allows(c, f)) out.push_back(f);
  return out;
}

struct Signature {
  int nops = 1;
  Context context = Context::Omega;

  bool operator==(const Signature&) const = default;

  [[nodiscard]] bool admits(const OpSymbol& op) const {
    return op.index >= 1 && op.index <= nops && context_allows(context, op.family);
  }

  /// Every symbol of the signature, ordered by (family, index).
  [[nodiscard]] std::vector<OpSymbol> symbols() const {
    std::vector<OpSymbol> out;
    for (Family f : context_families(context))
      for (int i = 1; i <= nops; ++i) out.push_back({f, i});
    return out;
  }
};

inline Signature omega(int nops) { return {nops, Context::Omega}; }
inline Signature omega2(int nops) { return {nops, Context::Omega2}; }
inline Signature omega3(int nops) { return {nops, Context::Omega3}; }

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// A planar binary tree stored as its preorder token sequence. Leaves carry a
/// variable index >= 1, internal nodes an OpSymbol.
class Monomial {
 public:
  struct Token {
    std::uint8_t kind = 0;  // 0 = leaf, 1 = node; leaves sort first
    Family family = Family::Base;
    int value = 0;          // variable index for leaves, op index for nodes

    auto operator<=>(const Token&) const = default;
    [[nodiscard]] bool is_leaf() const { return kind == 0; }
    [[nodiscard]] OpSymbol op() const { return {family, value}; }
  };

  static Monomial leaf(int var) {
    if (var < 1) throw Error("variable index must be positive");
    Monomial m;
    m.tokens_.push_back({0, Family::Base, var});
    m.degree_ = 1;
    return m;
  }

  static Monomial node(const OpSymbol& op, const Monomial& left, const Monomial& right) {
    Monomial m;
    m.tokens_.reserve(1 + left.tokens_.size() + right.tokens_.size());
    m.tokens_.push_back({1, op.family, op.index});
    m.tokens_.insert(m.tokens_.end(), left.tokens_.begin(), left.tokens_.end());
    m.tokens_.insert(m.tokens_.end(), right.tokens_.begin(), right.tokens_.end());
    m.degree_ = left.degree_ + right.degree_;
    return m;
  }

  [[nodiscard]] bool is_leaf() const { return tokens_.front().is_leaf(); }
  [[nodiscard]] int var() const { return tokens_.front().value; }
  [[nodiscard]] OpSymbol op() const { return tokens_.front().op(); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::span<const Token> tokens() const { return tokens_; }

  [[nodiscard]] Monomial left() const { return slice(1, subtree_end(tokens_, 1)); }
  [[nodiscard]] Monomial right() const {
    const std::size_t mid = subtree_end(tokens_, 1);
    return slice(mid, tokens_.size());
  }

  /// Leaf variables in left-to-right order.
  [[nodiscard]] std::vector<int> leaves() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree_));
    for (const Token& t : tokens_)
      if (t.is_leaf()) out.push_back(t.value);
    return out;
  }

  [[nodiscard]] bool contains_var(int v) const {
    return std::any_of(tokens_.begin(), tokens_.end(),
                       [v](const Token& t) { return t.is_leaf() && t.value == v; });
  }

  template <class F>
  [[nodiscard]] Monomial map_ops(F&& f) const {
    Monomial m = *this;
    for (Token& t : m.tokens_)
      if (!t.is_leaf()) {
        const OpSymbol op = f(t.op());
        t.family = op.family;
        t.value = op.index;
      }
    return m;
  }

  template <class F>
  [[nodiscard]] Monomial map_vars(F&& f) const {
    Monomial m = *this;
    for (Token& t : m.tokens_)
      if (t.is_leaf()) t.value = f(t.value);
    return m;
  }

  /// Same tree shape and leaf labels, ignoring node labels.
  [[nodiscard]] bool same_shape(const Monomial& other) const {
    if (tokens_.size() != other.tokens_.size()) return false;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].kind != other.tokens_[i].kind) return false;
      if (tokens_[i].is_leaf() && tokens_[i].value != other.tokens_[i].value) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.tokens_ == b.tokens_; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.tokens_ < b.tokens_;
  }

  /// One past the last token of the subtree starting at `pos`.
  static std::size_t subtree_end(std::span<const Token> tokens, std::size_t pos) {
    int need = 1;
    while (need > 0) {
      need += tokens[pos].is_leaf() ? -1 : 1;
      ++pos;
    }
    return pos;
  }

 private:
  Monomial() = default;

  [[nodiscard]] Monomial slice(std::size_t begin, std::size_t end) const {
    Monomial m;
    m.tokens_.assign(tokens_.begin() + static_cast<std::ptrdiff_t>(begin),
                     tokens_.begin() + static_cast<std::ptrdiff_t>(end));
    m.degree_ = static_cast<int>(std::count_if(m.tokens_.begin(), m.tokens_.end(),
                                               [](const Token& t) { return t.is_leaf(); }));
    return m;
  }

  std::vector<Token> tokens_;
  int degree_ = 0;
};

namespace detail {

inline void render_into(std::span<const Monomial::Token> tokens, std::size_t& pos, std::string& out) {
  const Monomial::Token& t = tokens[pos++];
  if (t.is_leaf()) {
    out += 'x';
    out += std::to_string(t.value);
    return;
  }
  out += '(';
  render_into(tokens, pos, out);
  out += ' ';
  out += to_string(t.op());
  out += ' ';
  render_into(tokens, pos, out);
  out += ')';
}

}  // namespace detail

inline std::string render(const Monomial& m) {
  std::string out;
  std::size_t pos = 0;
  detail::render_into(m.tokens(), pos, out);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Finite formal sum of monomials with rational coefficients; identities are
/// polynomials read as "= 0". Terms are kept in canonical monomial order and
/// zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(Signature sig = {}) : sig_(sig) {}

  static Polynomial monomial(Signature sig, const Monomial& m, const Rational& c = 1) {
    Polynomial p(sig);
    p.add(m, c);
    return p;
  }

  [[nodiscard]] const Signature& signature() const { return sig_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }

  [[nodiscard]] Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    check_admitted(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_same_signature(q);
    for (const auto& [m, c] : q.terms_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    check_same_signature(q);
    for (const auto& [m, c] : q.terms_) add(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  /// Re-labels the signature; throws if some term uses an op outside `sig`.
  [[nodiscard]] Polynomial with_signature(Signature sig) const {
    Polynomial p(sig);
    for (const auto& [m, c] : terms_) p.add(m, c);
    return p;
  }

  template <class F>
  [[nodiscard]] Polynomial map_monomials(Signature sig, F&& f) const {
    Polynomial p(sig);
    for (const auto& [m, c] : terms_) p.add(f(m), c);
    return p;
  }

 private:
  void check_admitted(const Monomial& m) const {
    for (const auto& t : m.tokens())
      if (!t.is_leaf() && !sig_.admits(t.op()))
        throw SignatureError("operation " + to_string(t.op()) + " not admitted by signature (" +
                             context_name(sig_.context) + ", " + std::to_string(sig_.nops) + " ops)");
  }
  void check_same_signature(const Polynomial& q) const {
    if (!(q.sig_ == sig_)) throw SignatureError("polynomials over different signatures");
  }

  Signature sig_;
  Terms terms_;
};

/// An identity together with a stable id used in reports and files.
struct NamedIdentity {
  std::string id;
  Polynomial poly;
};

/// Sum over all (a, b) of coeff_a * coeff_b * (a op b), as a polynomial over `out`.
inline Polynomial combine(const Polynomial& a, const OpSymbol& op, const Polynomial& b, Signature out) {
  Polynomial p(out);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) p.add(Monomial::node(op, ma, mb), ca * cb);
  return p;
}

inline std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) {
      out += to_string(mag);
      out += ' ';
    }
    out += render(m);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

class IdentityParser {
 public:
  IdentityParser(std::string_view text, Signature sig) : text_(text), sig_(sig) {}

  Polynomial parse_identity() {
    Polynomial lhs = parse_poly();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Polynomial rhs = parse_poly();
      lhs -= rhs;
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int read_index(const char* what) {
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.size() > 9) {
      pos_ = start;
      fail(std::string(what) + " index too large");
    }
    return std::stoi(digits);
  }

  Polynomial parse_poly() {
    Polynomial p(sig_);
    skip_ws();
    Rational sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    parse_term(p, sign);
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      parse_term(p, c == '-' ? Rational(-1) : Rational(1));
    }
    return p;
  }

  void parse_term(Polynomial& p, const Rational& sign) {
    skip_ws();
    Rational coeff = 1;
    bool has_coeff = false;
    if (at_digit()) {
      has_coeff = true;
      std::string num = read_digits();
      if (peek() == '/') {
        ++pos_;
        if (!at_digit()) fail("expected denominator");
        const std::size_t den_pos = pos_;
        std::string den = read_digits();
        if (mpz_class(den) == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        num += "/" + den;
      }
      coeff = parse_rational(num);
      skip_ws();
    }
    const char c = peek();
    if (c != 'x' && c != '(') {
      if (has_coeff && coeff == 0) return;
      fail(has_coeff ? "constant terms are not allowed" : "expected a term");
    }
    const Monomial m = parse_monomial();
    try {
      p.add(m, sign * coeff);
    } catch (const SignatureError& e) {
      fail(e.what());
    }
  }

  Monomial parse_monomial() {
    skip_ws();
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      if (!at_digit()) fail("expected variable index after 'x'");
      const std::size_t var_pos = pos_;
      const int v = read_index("variable");
      if (v == 0) {
        pos_ = var_pos;
        fail("variable index 0");
      }
      return Monomial::leaf(v);
    }
    if (c != '(') fail("expected 'x' or '('");
    ++pos_;
    Monomial left = parse_monomial();
    skip_ws();
    const std::size_t op_pos = pos_;
    const OpSymbol op = parse_op();
    Monomial right = parse_monomial();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    if (!sig_.admits(op)) {
      pos_ = op_pos;
      if (op.index < 1 || op.index > sig_.nops)
        fail("unknown operation index " + std::to_string(op.index) + " (signature declares " +
             std::to_string(sig_.nops) + ")");
      fail("operation family '" + std::string(1, family_char(op.family)) + "' not allowed in context " +
           context_name(sig_.context));
    }
    return Monomial::node(op, left, right);
  }

  OpSymbol parse_op() {
    OpSymbol op;
    switch (peek()) {
      case '*': op.family = Family::Base; break;
      case '<': op.family = Family::Left; break;
      case '>': op.family = Family::Right; break;
      case '.': op.family = Family::Middle; break;
      default: fail("expected an operation symbol");
    }
    ++pos_;
    op.index = at_digit() ? read_index("operation") : 1;
    return op;
  }

  std::string_view text_;
  Signature sig_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an identity in the text format above; `lhs = rhs` becomes lhs - rhs.
inline Polynomial parse_polynomial(std::string_view text, Signature sig) {
  return detail::IdentityParser(text, sig).parse_identity();
}

// ---------------------------------------------------------------------------
// Polylinearity and variable permutations
// ---------------------------------------------------------------------------

struct PolylinearInfo {
  bool polylinear = false;
  int degree = 0;
};

inline bool is_polylinear(const Monomial& m, int n) {
  if (m.degree() != n) return false;
  std::vector<int> vars = m.leaves();
  std::sort(vars.begin(), vars.end());
  for (int k = 0; k < n; ++k)
    if (vars[static_cast<std::size_t>(k)] != k + 1) return false;
  return true;
}

/// True iff every monomial has the same degree n and uses each of x1..xn once.
/// The zero polynomial counts as polylinear of degree 0.
inline PolylinearInfo is_polylinear(const Polynomial& p) {
  if (p.is_zero()) return {true, 0};
  const int n = p.begin()->first.degree();
  for (const auto& [m, c] : p)
    if (!is_polylinear(m, n)) return {false, n};
  return {true, n};
}

/// Relabels x_k as x_{sigma[k-1]}. `sigma` must be a permutation of 1..n where
/// n is the degree of the polylinear polynomial `p`.
inline Polynomial apply_permutation(const Polynomial& p, std::span<const int> sigma) {
  const PolylinearInfo info = is_polylinear(p);
  if (!info.polylinear) throw Error("apply_permutation: polynomial is not polylinear");
  const int n = static_cast<int>(sigma.size());
  if (!p.is_zero() && info.degree != n)
    throw DimensionError("apply_permutation: degree " + std::to_string(info.degree) +
                         " does not match permutation of size " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw Error("apply_permutation: not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return p.map_monomials(p.signature(), [&](const Monomial& m) {
    return m.map_vars([&](int v) { return sigma[static_cast<std::size_t>(v - 1)]; });
  });
}

}  // namespace dendri
