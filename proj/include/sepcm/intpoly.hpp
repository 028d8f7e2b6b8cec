#pragma once

// Dense integer-coefficient polynomials in one variable t, used for Hilbert
// series numerators.

#include <cstdint>
#include <string>
#include <vector>

#include "sepcm/error.hpp"

namespace sepcm {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }
  static IntPoly constant(std::int64_t v) { return IntPoly(std::vector<std::int64_t>{v}); }
  static IntPoly monomial(std::int64_t coeff, std::size_t deg) {
    std::vector<std::int64_t> c(deg + 1, 0);
    c[deg] = coeff;
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
  }

  IntPoly reversed() const {
    std::vector<std::int64_t> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }
  IntPoly operator-() const {
    std::vector<std::int64_t> r = c_;
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Exact division; returns false (and leaves quotient empty) when not divisible.
  bool div_exact(const IntPoly& d, IntPoly& quotient) const {
    check(!d.is_zero(), ErrorKind::ZeroDivisorQuery, "division by zero polynomial");
    std::vector<std::int64_t> rem = c_;
    std::vector<std::int64_t> q(rem.size(), 0);
    while (rem.size() >= d.c_.size() && !rem.empty()) {
      std::int64_t lead = rem.back();
      if (lead % d.c_.back() != 0) return false;
      std::int64_t f = lead / d.c_.back();
      std::size_t shift = rem.size() - d.c_.size();
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    if (!rem.empty()) return false;
    quotient = IntPoly(std::move(q));
    return true;
  }

  /// "1+2t^4+t^8" with ascending powers; "0" for zero.
  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::int64_t v = c_[i];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? "+" : "-";
      else if (v < 0) out += "-";
      std::int64_t a = v > 0 ? v : -v;
      if (i == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;  // index = degree
};

/// 1 - t^e
inline IntPoly one_minus_t_pow(std::size_t e) {
  std::vector<std::int64_t> c(e + 1, 0);
  c[0] = 1;
  c[e] = -1;
  return IntPoly(std::move(c));
}

}  // namespace sepcm
