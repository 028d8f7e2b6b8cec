#pragma once

// Sparse multivariate polynomials over a FieldCtx with monomial orders,
// weighted grading, parsing and printing, evaluation over extensions, and
// Frobenius powers.  Polynomials are immutable canonical values: terms
// strictly descending in the ring order, no zero coefficients.

#include <array>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/gf.hpp"

namespace sepcm {

constexpr std::size_t kMaxVars = 16;
constexpr std::uint32_t kExpCap = 1u << 24;  // Frobenius powers grow exponents fast

struct MonomialOrder {
  enum class Kind { grevlex, lex, elim };
  Kind kind = Kind::grevlex;
  std::size_t block = 0;  // for elim: number of leading variables to eliminate

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elim(std::size_t k) { return {Kind::elim, k}; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::elim || a.block == b.block);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::elim: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
  }
};

struct Monomial {
  std::array<std::uint32_t, kMaxVars> e{};

  bool is_one(std::size_t nv) const {
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

class PolyRing {
 public:
  static std::shared_ptr<const PolyRing> make(FieldCtxPtr field, std::vector<std::string> vars,
                                              MonomialOrder order = MonomialOrder::grevlex(),
                                              std::vector<std::uint32_t> weights = {},
                                              bool allow_tag_names = false) {
    return std::shared_ptr<const PolyRing>(
        new PolyRing(std::move(field), std::move(vars), order, std::move(weights), allow_tag_names));
  }

  const FieldCtx& field() const { return *field_; }
  FieldCtxPtr field_ptr() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }

  long var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<long>(i);
    return -1;
  }

  std::uint64_t wdeg(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) d += std::uint64_t(m.e[i]) * weights_[i];
    return d;
  }

  /// order comparison: >0 when a > b, 0 when equal
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
      case MonomialOrder::Kind::lex:
        return cmp_lex(a, b, 0, vars_.size());
      case MonomialOrder::Kind::grevlex:
        return cmp_grevlex(a, b, 0, vars_.size());
      case MonomialOrder::Kind::elim: {
        int c = cmp_grevlex(a, b, 0, order_.block);
        if (c) return c;
        return cmp_grevlex(a, b, order_.block, vars_.size());
      }
    }
    return 0;
  }

 private:
  PolyRing(FieldCtxPtr field, std::vector<std::string> vars, MonomialOrder order,
           std::vector<std::uint32_t> weights, bool allow_tag_names)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order), weights_(std::move(weights)) {
    check(!vars_.empty() && vars_.size() <= kMaxVars, ErrorKind::SizeCap,
          "ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    check(weights_.size() == vars_.size(), ErrorKind::DimensionMismatch,
          "one weight per variable required");
    for (auto w : weights_)
      check(w >= 1, ErrorKind::DimensionMismatch, "weights must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      check(!v.empty(), ErrorKind::UnknownVariable, "empty variable name");
      check(field_->n() == 1 || v != field_->generator_name(), ErrorKind::UnknownVariable,
            "variable name collides with the field generator symbol");
      if (!allow_tag_names)
        check(!is_tag_name(v), ErrorKind::UnknownVariable,
              "variable name \"" + v + "\" uses the reserved tag prefix T<number>");
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        check(v != vars_[j], ErrorKind::UnknownVariable, "duplicate variable name \"" + v + "\"");
    }
    if (order_.kind == MonomialOrder::Kind::elim)
      check(order_.block >= 1 && order_.block < vars_.size(), ErrorKind::DimensionMismatch,
            "elimination block must cut the variable list properly");
  }

  static bool is_tag_name(const std::string& v) {
    if (v.size() < 2 || v[0] != 'T') return false;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  }

  int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }

  int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += std::uint64_t(a.e[i]) * weights_[i];
      db += std::uint64_t(b.e[i]) * weights_[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  FieldCtxPtr field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<std::uint32_t> weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono_var(std::size_t i, std::uint32_t e = 1) {
  Monomial m{};
  m.e[i] = e;
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b, std::size_t nv) {
  Monomial r{};
  for (std::size_t i = 0; i < nv; ++i) {
    std::uint64_t s = std::uint64_t(a.e[i]) + b.e[i];
    check(s <= kExpCap, ErrorKind::ExponentOverflow, "monomial exponent overflow");
    r.e[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b, std::size_t nv) {
  for (std::size_t i = 0; i < nv; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b, std::size_t nv) {
  Monomial r{};
  for (std::size_t i = 0; i < nv; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t nv) {
  Monomial r{};
  for (std::size_t i = 0; i < nv; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b, std::size_t nv) {
  Monomial r{};
  for (std::size_t i = 0; i < nv; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

struct Term {
  Monomial m;
  FieldElem c;
};

class Polynomial {
 public:
  Polynomial() : ring_(nullptr) {}
  explicit Polynomial(const PolyRing* ring) : ring_(ring) {}

  static Polynomial zero(const PolyRing& R) { return Polynomial(&R); }
  static Polynomial constant(const PolyRing& R, FieldElem c) {
    Polynomial f(&R);
    if (!c.is_zero()) f.terms_.push_back({mono_one(), c});
    return f;
  }
  static Polynomial one(const PolyRing& R) { return constant(R, FieldElem::one(R.field())); }
  static Polynomial variable(const PolyRing& R, std::size_t i) {
    Polynomial f(&R);
    f.terms_.push_back({mono_var(i), FieldElem::one(R.field())});
    return f;
  }
  static Polynomial monomial(const PolyRing& R, Monomial m, FieldElem c) {
    Polynomial f(&R);
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
  }

  /// canonicalize an arbitrary term list
  static Polynomial from_terms(const PolyRing& R, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [&R](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
    Polynomial f(&R);
    for (auto& t : terms) {
      if (t.c.is_zero()) continue;
      if (!f.terms_.empty() && f.terms_.back().m == t.m) {
        FieldElem s = f.terms_.back().c + t.c;
        if (s.is_zero())
          f.terms_.pop_back();
        else
          f.terms_.back().c = s;
      } else {
        f.terms_.push_back(t);
      }
    }
    return f;
  }

  const PolyRing& ring() const { return *ring_; }
  const PolyRing* ring_ptr() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const {
    check(!terms_.empty(), ErrorKind::ZeroDivisorQuery, "zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  FieldElem leading_coeff() const { return leading_term().c; }

  /// max weighted degree; -1 for the zero polynomial
  long degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(ring_->wdeg(t.m)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = ring_->wdeg(terms_.front().m);
    for (const auto& t : terms_)
      if (ring_->wdeg(t.m) != d) return false;
    return true;
  }

  bool is_constant() const { return terms_.empty() || terms_.front().m.is_one(ring_->nvars()); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.same(b);
    // merge two sorted term lists
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = a.ring_->cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0)
        r.terms_.push_back(a.terms_[i++]);
      else if (c < 0)
        r.terms_.push_back(b.terms_[j++]);
      else {
        FieldElem s = a.terms_[i].c + b.terms_[j].c;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, s});
        ++i;
        ++j;
      }
    }
    while (i < a.terms_.size()) r.terms_.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) r.terms_.push_back(b.terms_[j++]);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.same(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    std::size_t nv = a.ring_->nvars();
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) out.push_back({mono_mul(ta.m, tb.m, nv), ta.c * tb.c});
    return from_terms(*a.ring_, std::move(out));
  }

  Polynomial mul_term(const Monomial& m, const FieldElem& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    std::size_t nv = ring_->nvars();
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.m, m, nv), t.c * c});
    return r;  // multiplying by a monomial preserves the order
  }

  Polynomial scale(const FieldElem& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scale(leading_coeff().inverse());
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial r = one(*ring_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// f^(p^m), termwise by the Frobenius homomorphism (char p)
  Polynomial frobenius_power(std::uint64_t m) const {
    std::uint64_t pm = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      pm *= ring_->field().p();
      check(pm <= kExpCap, ErrorKind::ExponentOverflow, "p^m exceeds the exponent cap");
    }
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    std::size_t nv = ring_->nvars();
    for (const auto& t : terms_) {
      Monomial mm{};
      for (std::size_t i = 0; i < nv; ++i) {
        std::uint64_t s = std::uint64_t(t.m.e[i]) * pm;
        check(s <= kExpCap, ErrorKind::ExponentOverflow, "monomial exponent overflow");
        mm.e[i] = static_cast<std::uint32_t>(s);
      }
      r.terms_.push_back({mm, frobenius(t.c, m)});
    }
    // scaling exponents uniformly preserves every monomial order we use
    return r;
  }

  /// Substitute x_j -> sum_i M[j][i] x_i simultaneously (row j = image of x_j).
  Polynomial apply_matrix(const std::vector<std::vector<FieldElem>>& M) const {
    std::size_t nv = ring_->nvars();
    check(M.size() == nv, ErrorKind::DimensionMismatch, "matrix size must equal variable count");
    std::vector<Polynomial> image(nv, Polynomial(ring_));
    for (std::size_t j = 0; j < nv; ++j) {
      check(M[j].size() == nv, ErrorKind::DimensionMismatch, "matrix must be square");
      std::vector<Term> ts;
      for (std::size_t i = 0; i < nv; ++i)
        if (!M[j][i].is_zero()) ts.push_back({mono_var(i), M[j][i]});
      image[j] = from_terms(*ring_, std::move(ts));
    }
    // cache powers of each image polynomial
    std::vector<std::vector<Polynomial>> powers(nv);
    for (std::size_t j = 0; j < nv; ++j) powers[j].push_back(one(*ring_));
    Polynomial acc(ring_);
    for (const auto& t : terms_) {
      Polynomial prod = constant(*ring_, t.c);
      for (std::size_t j = 0; j < nv; ++j) {
        std::uint32_t e = t.m.e[j];
        if (!e) continue;
        while (powers[j].size() <= e) powers[j].push_back(powers[j].back() * image[j]);
        prod = prod * powers[j][e];
      }
      acc = acc + prod;
    }
    return acc;
  }

  /// value at a point over a compatible extension field
  FieldElem evaluate(const std::vector<FieldElem>& point) const {
    check(point.size() == ring_->nvars(), ErrorKind::DimensionMismatch,
          "point length must equal variable count");
    const FieldCtx* tgt = point.empty() ? &ring_->field() : point.front().ctx_ptr();
    for (const auto& p : point)
      check(p.ctx_ptr() == tgt, ErrorKind::IncompatibleFields, "mixed point coordinates");
    FieldElem acc = FieldElem::zero(*tgt);
    for (const auto& t : terms_) {
      FieldElem v = embed(t.c, *tgt);
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.m.e[i]) v = v * point[i].pow(t.m.e[i]);
      acc = acc + v;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    std::size_t nv = ring_->nvars();
    for (const auto& t : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t i = 0; i < nv; ++i) {
        if (!t.m.e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->vars()[i];
        if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
      }
      std::string coeff = t.c.to_string();
      if (mono.empty()) {
        out += coeff;
      } else if (t.c.is_one()) {
        out += mono;
      } else {
        if (coeff.find('+') != std::string::npos || coeff.find('-') != std::string::npos)
          coeff = "(" + coeff + ")";
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

 private:
  void same(const Polynomial& b) const {
    check(ring_ == b.ring_, ErrorKind::OrderMismatch,
          "polynomials of different rings cannot be combined");
  }

  const PolyRing* ring_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// parsing

namespace detail {

struct PolyParser {
  const PolyRing& R;
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void err(const std::string& m) const {
    fail(ErrorKind::SyntaxError, m + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  Polynomial expr() {
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        bool sub = s[pos] == '-';
        ++pos;
        Polynomial t = term();
        acc = sub ? acc - t : acc + t;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::uint64_t e = 0;
      bool any = false;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        e = e * 10 + (s[pos] - '0');
        check(e <= kExpCap, ErrorKind::ExponentOverflow, "exponent too large");
        ++pos;
        any = true;
      }
      if (!any) err("exponent expected");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos >= s.size()) err("unexpected end of input");
    char ch = s[pos];
    if (ch == '(') {
      ++pos;
      Polynomial e = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') err("missing )");
      ++pos;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::int64_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > (1ll << 40)) v %= static_cast<std::int64_t>(R.field().p());
        ++pos;
      }
      return Polynomial::constant(R, FieldElem::from_int(R.field(), v));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        name += s[pos];
        ++pos;
      }
      long idx = R.var_index(name);
      if (idx >= 0) return Polynomial::variable(R, static_cast<std::size_t>(idx));
      if (R.field().n() >= 2 && name == R.field().generator_name())
        return Polynomial::constant(R, FieldElem::generator(R.field()));
      fail(ErrorKind::UnknownVariable, "unknown variable \"" + name + "\" in \"" + s + "\"");
    }
    err(std::string("unexpected character '") + ch + "'");
  }
};

}  // namespace detail

/// Parse canonical polynomial syntax; parse(print(f)) == f.
inline Polynomial parse_poly(const PolyRing& R, const std::string& text) {
  detail::PolyParser p{R, text};
  Polynomial f = p.expr();
  p.skip();
  if (p.pos != text.size()) p.err("trailing characters");
  return f;
}

/// Map a polynomial into another ring over the same field: variable i of the
/// source becomes variable var_map[i] of the target.
inline Polynomial map_to_ring(const Polynomial& f, const PolyRing& target,
                              const std::vector<std::size_t>& var_map) {
  check(&target.field() == &f.ring().field(), ErrorKind::IncompatibleFields,
        "rings must share one field context");
  check(var_map.size() >= f.ring().nvars(), ErrorKind::DimensionMismatch, "variable map too short");
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m{};
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
      if (!t.m.e[i]) continue;
      check(var_map[i] < target.nvars(), ErrorKind::DimensionMismatch, "variable map out of range");
      m.e[var_map[i]] += t.m.e[i];
    }
    out.push_back({m, FieldElem(&target.field(), t.c.index())});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace sepcm
