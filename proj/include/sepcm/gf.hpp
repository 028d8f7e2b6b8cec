#pragma once

// Exact arithmetic in finite fields F_{p^n}: construction with deterministic
// irreducible moduli, embeddings between compatible fields, Frobenius maps,
// and roots of unity.  Desk scale: p^n <= 2^20.
//
// Elements are stored as a context pointer plus the index
// sum_i c_i p^i of the reduced coefficient vector (c_0,...,c_{n-1}); the
// index order 0,1,2,... is the canonical enumeration order used whenever a
// "smallest" element is selected.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sepcm/error.hpp"

namespace sepcm {

constexpr std::uint64_t kFieldSizeCap = 1u << 20;

namespace detail {

inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint64_t pow_u64_checked(std::uint64_t b, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > cap) return cap + 1;
  }
  return r;
}

// dense univariate polynomials over Z_p, coefficient index = degree
using ZpPoly = std::vector<std::uint32_t>;

inline void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  zp_trim(r);
  return r;
}

// remainder of a modulo monic f
inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, std::uint64_t p) {
  zp_trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() >= f.size()) {
    std::uint64_t c = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::uint64_t sub = (c * f[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    zp_trim(a);
  }
  return a;
}

inline ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
  ZpPoly r{1};
  base = zp_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = zp_mod(zp_mul(r, base, p), f, p);
    base = zp_mod(zp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on integers
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  check(r == 1, ErrorKind::ZeroDivisorQuery, "inverse of zero");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    // make b monic for zp_mod
    ZpPoly bm = b;
    std::uint64_t lcinv = inv_mod_u64(bm.back(), p);
    for (auto& c : bm) c = static_cast<std::uint32_t>((std::uint64_t(c) * lcinv) % p);
    ZpPoly r = zp_mod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin test: x^(p^n) == x mod f, and gcd(x^(p^(n/l)) - x, f) = 1 for every
// prime l | n.
inline bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  ZpPoly x{0, 1};
  // g_k := x^(p^k) mod f, computed by iterating the p-th power map
  std::vector<ZpPoly> frob(n + 1);
  frob[0] = zp_mod(x, f, p);
  for (std::size_t k = 1; k <= n; ++k) frob[k] = zp_powmod(frob[k - 1], p, f, p);
  ZpPoly diff = frob[n];
  // diff -= x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
  zp_trim(diff);
  if (!diff.empty()) return false;
  for (std::uint64_t l : prime_divisors(n)) {
    ZpPoly d = frob[n / l];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
    zp_trim(d);
    ZpPoly g = zp_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Lexicographically smallest monic irreducible of degree n over F_p,
/// returned as a coefficient list c_0..c_n with c_n = 1.  The candidate
/// enumeration treats (c_0,...,c_{n-1}) as a base-p number counting upward.
inline std::vector<std::uint32_t> find_irreducible(std::uint64_t p, std::uint32_t n) {
  check(detail::is_prime_u64(p), ErrorKind::CompositeP, "p = " + std::to_string(p) + " is not prime");
  check(n >= 1, ErrorKind::SizeCap, "extension degree must be >= 1");
  check(detail::pow_u64_checked(p, n, kFieldSizeCap) <= kFieldSizeCap, ErrorKind::SizeCap,
        "p^n exceeds the desk-scale cap 2^20");
  if (n == 1) return {0, 1};  // the polynomial w; prime fields carry no modulus
  std::uint64_t count = detail::pow_u64_checked(p, n, kFieldSizeCap);
  for (std::uint64_t k = 0; k < count; ++k) {
    detail::ZpPoly f(n + 1, 0);
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (detail::zp_irreducible(f, p)) return f;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");  // unreachable
}

class FieldElem;

/// Immutable description of F_{p^n}.  All element operations go through the
/// context; elements of different contexts never mix.
class FieldCtx {
 public:
  static std::shared_ptr<const FieldCtx> make(std::uint64_t p, std::uint32_t n = 1,
                                              std::vector<std::uint32_t> modulus = {},
                                              std::string generator = "w") {
    return std::shared_ptr<const FieldCtx>(new FieldCtx(p, n, std::move(modulus), std::move(generator)));
  }

  std::uint64_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const std::string& generator_name() const { return gen_name_; }
  bool prime_field() const { return n_ == 1; }

  // ---- element arithmetic on indices ----
  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (n_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p_);
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::uint32_t d = static_cast<std::uint32_t>((a % p_ + b % p_) % p_);
      r += d * place;
      a /= static_cast<std::uint32_t>(p_);
      b /= static_cast<std::uint32_t>(p_);
      place *= static_cast<std::uint32_t>(p_);
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (n_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::uint32_t d = a % static_cast<std::uint32_t>(p_);
      r += (d == 0 ? 0 : static_cast<std::uint32_t>(p_) - d) * place;
      a /= static_cast<std::uint32_t>(p_);
      place *= static_cast<std::uint32_t>(p_);
    }
    return r;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  /// Extended Euclid on the coefficient polynomial (integers for n = 1).
  std::uint32_t inv(std::uint32_t a) const {
    check(a != 0, ErrorKind::ZeroDivisorQuery, "inverse of zero");
    if (n_ == 1) return static_cast<std::uint32_t>(detail::inv_mod_u64(a, p_));
    detail::ZpPoly r0 = modulus_, r1 = decode(a);
    detail::ZpPoly s0{}, s1{1};
    detail::zp_trim(r1);
    while (!r1.empty()) {
      // divide r0 by r1: quotient q, remainder r
      detail::ZpPoly q;
      detail::ZpPoly rem = r0;
      detail::zp_trim(rem);
      std::uint64_t lcinv = detail::inv_mod_u64(r1.back(), p_);
      if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        std::uint64_t c = (std::uint64_t(rem.back()) * lcinv) % p_;
        std::size_t shift = rem.size() - r1.size();
        q[shift] = static_cast<std::uint32_t>(c);
        for (std::size_t i = 0; i < r1.size(); ++i) {
          std::uint64_t sub = (c * r1[i]) % p_;
          rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p_ - sub) % p_);
        }
        detail::zp_trim(rem);
      }
      // (r0, r1) <- (r1, rem);  (s0, s1) <- (s1, s0 - q*s1)
      detail::ZpPoly qs = detail::zp_mul(q, s1, p_);
      detail::ZpPoly snew = s0;
      if (snew.size() < qs.size()) snew.resize(qs.size(), 0);
      for (std::size_t i = 0; i < qs.size(); ++i)
        snew[i] = static_cast<std::uint32_t>((snew[i] + p_ - qs[i]) % p_);
      detail::zp_trim(snew);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(snew);
    }
    // r0 = gcd (a unit); normalize s0 by its inverse
    check(r0.size() == 1, ErrorKind::Internal, "gcd with irreducible modulus not a unit");
    std::uint64_t c = detail::inv_mod_u64(r0[0], p_);
    for (auto& x : s0) x = static_cast<std::uint32_t>((std::uint64_t(x) * c) % p_);
    s0 = detail::zp_mod(std::move(s0), modulus_, p_);
    return encode(s0);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// a^(p^m)
  std::uint32_t frobenius(std::uint32_t a, std::uint64_t m) const {
    if (a == 0 || n_ == 1) return a;  // Frobenius is the identity on F_p
    std::uint64_t e = 1;
    std::uint64_t mod = q_ - 1;
    std::uint64_t base = p_ % mod;
    for (std::uint64_t i = 0; i < m; ++i) e = (e * base) % mod;
    std::uint64_t s = (std::uint64_t(log_[a]) * e) % mod;
    return exp_[s];
  }

  std::uint64_t mult_order(std::uint32_t a) const {
    check(a != 0, ErrorKind::ZeroDivisorQuery, "order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t l : detail::prime_divisors(q_ - 1))
      while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
    return ord;
  }

  std::vector<std::uint32_t> coeffs(std::uint32_t a) const {
    auto d = decode(a);
    d.resize(n_, 0);
    return d;
  }

  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < n_ && i < c.size(); ++i) {
      r += static_cast<std::uint32_t>(c[i] % p_) * place;
      place *= static_cast<std::uint32_t>(p_);
    }
    return r;
  }

  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(m);
  }

  std::string elem_to_string(std::uint32_t a) const {
    if (n_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string out;
    for (std::uint32_t i = n_; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c[i]);
      } else {
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += gen_name_;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  // deterministic embedding root cache, guarded for concurrent readers
  std::uint32_t embedding_root(const FieldCtx& target) const;

 private:
  FieldCtx(std::uint64_t p, std::uint32_t n, std::vector<std::uint32_t> modulus, std::string gen)
      : p_(p), n_(n), gen_name_(std::move(gen)) {
    check(detail::is_prime_u64(p_), ErrorKind::CompositeP,
          "p = " + std::to_string(p_) + " is not prime");
    check(n_ >= 1, ErrorKind::SizeCap, "extension degree must be >= 1");
    std::uint64_t q = detail::pow_u64_checked(p_, n_, kFieldSizeCap);
    check(q <= kFieldSizeCap, ErrorKind::SizeCap, "p^n exceeds the desk-scale cap 2^20");
    q_ = q;
    if (n_ == 1) {
      modulus_.clear();
    } else {
      if (modulus.empty()) {
        modulus_ = find_irreducible(p_, n_);
      } else {
        modulus_ = std::move(modulus);
        for (auto& c : modulus_) c %= static_cast<std::uint32_t>(p_);
        check(modulus_.size() == n_ + 1 && modulus_.back() == 1, ErrorKind::SizeCap,
              "modulus must be monic of degree n");
        check(detail::zp_irreducible(modulus_, p_), ErrorKind::SizeCap,
              "modulus is reducible over F_p");
      }
      build_tables();
    }
  }

  detail::ZpPoly decode(std::uint32_t a) const {
    detail::ZpPoly c;
    while (a) {
      c.push_back(a % static_cast<std::uint32_t>(p_));
      a /= static_cast<std::uint32_t>(p_);
    }
    return c;
  }

  std::uint32_t encode(const detail::ZpPoly& c) const {
    std::uint32_t r = 0, place = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      r += c[i] * place;
      place *= static_cast<std::uint32_t>(p_);
    }
    return r;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    auto r = detail::zp_mod(detail::zp_mul(decode(a), decode(b), p_), modulus_, p_);
    return encode(r);
  }

  void build_tables() {
    // find the smallest primitive element in index order
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
      std::uint64_t ord = q_ - 1;
      bool primitive = true;
      for (std::uint64_t l : detail::prime_divisors(q_ - 1)) {
        // compute cand^((q-1)/l) with slow multiplication
        std::uint64_t e = ord / l;
        std::uint32_t r = 1, base = cand;
        std::uint64_t ee = e;
        while (ee) {
          if (ee & 1) r = mul_slow(r, base);
          base = mul_slow(base, base);
          ee >>= 1;
        }
        if (r == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    check(g != 0, ErrorKind::Internal, "no primitive element found");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = cur;
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, g);
    }
  }

  std::uint64_t p_;
  std::uint32_t n_;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;  // c_0..c_n, monic; empty when n = 1
  std::string gen_name_;
  std::vector<std::uint32_t> exp_, log_;

  mutable std::mutex embed_mutex_;
  mutable std::map<const FieldCtx*, std::uint32_t> embed_cache_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Value type: a field element bound to its context.  Cross-context
/// arithmetic is a hard error, never a coercion.
class FieldElem {
 public:
  FieldElem() : ctx_(nullptr), v_(0) {}
  FieldElem(const FieldCtx* ctx, std::uint32_t idx) : ctx_(ctx), v_(idx) {}

  static FieldElem zero(const FieldCtx& F) { return FieldElem(&F, 0); }
  static FieldElem one(const FieldCtx& F) { return FieldElem(&F, 1); }
  static FieldElem from_int(const FieldCtx& F, std::int64_t v) { return FieldElem(&F, F.from_int(v)); }
  static FieldElem generator(const FieldCtx& F) {
    check(F.n() >= 2, ErrorKind::UnknownVariable, "prime field has no generator element");
    return FieldElem(&F, static_cast<std::uint32_t>(F.p()));
  }

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  std::uint32_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::vector<std::uint32_t> coeffs() const { return ctx_->coeffs(v_); }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    a.same(b);
    return FieldElem(a.ctx_, a.ctx_->add(a.v_, b.v_));
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) {
    a.same(b);
    return FieldElem(a.ctx_, a.ctx_->sub(a.v_, b.v_));
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    a.same(b);
    return FieldElem(a.ctx_, a.ctx_->mul(a.v_, b.v_));
  }
  FieldElem operator-() const { return FieldElem(ctx_, ctx_->neg(v_)); }
  FieldElem inverse() const { return FieldElem(ctx_, ctx_->inv(v_)); }
  FieldElem pow(std::uint64_t e) const { return FieldElem(ctx_, ctx_->pow(v_, e)); }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  std::string to_string() const { return ctx_->elem_to_string(v_); }

 private:
  void same(const FieldElem& b) const {
    check(ctx_ == b.ctx_, ErrorKind::IncompatibleFields,
          "elements of different field contexts cannot be combined");
  }
  const FieldCtx* ctx_;
  std::uint32_t v_;
};

/// a^(p^m)
inline FieldElem frobenius(const FieldElem& a, std::uint64_t m) {
  return FieldElem(&a.ctx(), a.ctx().frobenius(a.index(), m));
}

/// Element of exact multiplicative order r; smallest in index order.
inline FieldElem root_of_unity(const FieldCtx& F, std::uint64_t r) {
  check(r >= 1, ErrorKind::NoSuchRoot, "order must be positive");
  check((F.q() - 1) % r == 0, ErrorKind::NoSuchRoot,
        "no element of order " + std::to_string(r) + " in field of size " + std::to_string(F.q()));
  for (std::uint32_t a = 1; a < F.q(); ++a)
    if (F.mult_order(a) == r) return FieldElem(&F, a);
  fail(ErrorKind::Internal, "cyclic group must contain the requested order");
}

inline std::uint32_t FieldCtx::embedding_root(const FieldCtx& target) const {
  std::lock_guard<std::mutex> lock(embed_mutex_);
  auto it = embed_cache_.find(&target);
  if (it != embed_cache_.end()) return it->second;
  // smallest root of this context's modulus inside the target field
  std::uint32_t found = 0;
  bool have = false;
  for (std::uint32_t z = 0; z < target.q(); ++z) {
    // Horner evaluation of modulus at z over the target field
    std::uint32_t acc = 0;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      acc = target.mul(acc, z);
      acc = target.add(acc, modulus_[i] % static_cast<std::uint32_t>(target.p()));
    }
    if (acc == 0) {
      found = z;
      have = true;
      break;
    }
  }
  check(have, ErrorKind::Internal, "source modulus has no root in compatible extension");
  embed_cache_.emplace(&target, found);
  return found;
}

/// Fixed ring embedding F_{p^n} -> F_{p^(ne)}; a field homomorphism fixing F_p.
inline FieldElem embed(const FieldElem& a, const FieldCtx& target) {
  const FieldCtx& src = a.ctx();
  if (&src == &target) return a;
  check(src.p() == target.p(), ErrorKind::IncompatibleFields, "different characteristics");
  check(target.n() % src.n() == 0, ErrorKind::IncompatibleFields,
        "target degree is not a multiple of source degree");
  if (src.prime_field()) return FieldElem(&target, a.index());
  std::uint32_t z = src.embedding_root(target);
  auto c = a.coeffs();
  std::uint32_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = target.mul(acc, z);
    acc = target.add(acc, c[i]);
  }
  return FieldElem(&target, acc);
}

/// Parse a field element literal: integers and the generator symbol combined
/// with + - * ^ and parentheses ("w^2+w+1", "2*w+1", "3").
inline FieldElem parse_field_elem(const FieldCtx& F, const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto err = [&](const std::string& m) -> FieldElem {
    fail(ErrorKind::SyntaxError, m + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  };

  struct Parser {
    const FieldCtx& F;
    const std::string& s;
    std::size_t& pos;
    void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    FieldElem expr() {
      skip();
      bool neg = false;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
      }
      FieldElem acc = term();
      if (neg) acc = -acc;
      for (;;) {
        skip();
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
          bool sub = s[pos] == '-';
          ++pos;
          FieldElem t = term();
          acc = sub ? acc - t : acc + t;
        } else {
          return acc;
        }
      }
    }
    FieldElem term() {
      FieldElem acc = factor();
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
    FieldElem factor() {
      FieldElem base = atom();
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip();
        std::uint64_t e = 0;
        bool any = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          e = e * 10 + (s[pos] - '0');
          ++pos;
          any = true;
        }
        check(any, ErrorKind::SyntaxError, "exponent expected in \"" + s + "\"");
        base = base.pow(e);
      }
      return base;
    }
    FieldElem atom() {
      skip();
      check(pos < s.size(), ErrorKind::SyntaxError, "unexpected end of \"" + s + "\"");
      if (s[pos] == '(') {
        ++pos;
        FieldElem e = expr();
        skip();
        check(pos < s.size() && s[pos] == ')', ErrorKind::SyntaxError, "missing ) in \"" + s + "\"");
        ++pos;
        return e;
      }
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          v = v * 10 + (s[pos] - '0');
          if (v > (1ll << 40)) v %= static_cast<std::int64_t>(F.p());
          ++pos;
        }
        return FieldElem::from_int(F, v);
      }
      if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
        std::string name;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
          name += s[pos];
          ++pos;
        }
        check(F.n() >= 2 && name == F.generator_name(), ErrorKind::UnknownVariable,
              "unknown symbol \"" + name + "\" in field element");
        return FieldElem::generator(F);
      }
      fail(ErrorKind::SyntaxError,
           std::string("unexpected character '") + s[pos] + "' in \"" + s + "\"");
    }
  };

  skip();
  Parser parser{F, text, pos};
  FieldElem e = parser.expr();
  skip();
  if (pos != text.size()) return err("trailing characters");
  return e;
}

}  // namespace sepcm
