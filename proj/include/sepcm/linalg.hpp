#pragma once

// Dense matrices over a FieldCtx: products, inverses, reduced row echelon
// form, kernels, and deterministic linear solving (free variables pinned to
// zero).  Everything here works on raw element indices for speed.

#include <cstdint>
#include <optional>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/gf.hpp"

namespace sepcm {

class Mat {
 public:
  Mat() : F_(nullptr), rows_(0), cols_(0) {}
  Mat(const FieldCtx* F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(const FieldCtx& F, std::size_t n) {
    Mat m(&F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const FieldCtx& field() const { return *F_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FieldElem elem(std::size_t i, std::size_t j) const { return FieldElem(F_, at(i, j)); }
  void set(std::size_t i, std::size_t j, const FieldElem& v) {
    check(v.ctx_ptr() == F_, ErrorKind::IncompatibleFields, "matrix entry from wrong field");
    at(i, j) = v.index();
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.F_ == y.F_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  /// row-major entry ordering; used as the canonical matrix order
  bool lex_less(const Mat& other) const { return a_ < other.a_; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    check(x.F_ == y.F_, ErrorKind::IncompatibleFields, "matrix product across fields");
    check(x.cols_ == y.rows_, ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Mat r(x.F_, x.rows_, y.cols_);
    const FieldCtx& F = *x.F_;
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        std::uint32_t v = x.at(i, k);
        if (!v) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          std::uint32_t w = y.at(k, j);
          if (w) r.at(i, j) = F.add(r.at(i, j), F.mul(v, w));
        }
      }
    return r;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    check(x.F_ == y.F_ && x.rows_ == y.rows_ && x.cols_ == y.cols_, ErrorKind::DimensionMismatch,
          "matrix sum shape mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.F_->add(r.a_[i], y.a_[i]);
    return r;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    check(x.F_ == y.F_ && x.rows_ == y.rows_ && x.cols_ == y.cols_, ErrorKind::DimensionMismatch,
          "matrix difference shape mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.F_->sub(r.a_[i], y.a_[i]);
    return r;
  }

  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
    check(v.size() == cols_, ErrorKind::DimensionMismatch, "vector length mismatch");
    std::vector<std::uint32_t> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        std::uint32_t m = at(i, j);
        if (m && v[j]) acc = F_->add(acc, F_->mul(m, v[j]));
      }
      r[i] = acc;
    }
    return r;
  }

  std::optional<Mat> inverse() const {
    check(rows_ == cols_, ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    Mat aug(F_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = 1;
    }
    auto piv = aug.rref_in_place();
    if (piv.size() != rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
      if (piv[i] != i) return std::nullopt;  // pivots must stay in the left block
    Mat inv(F_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  /// Reduced row echelon form in place; returns the pivot column indices.
  std::vector<std::size_t> rref_in_place() {
    const FieldCtx& F = *F_;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && at(pr, c) == 0) ++pr;
      if (pr == rows_) continue;
      if (pr != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
      std::uint32_t inv = F.inv(at(r, c));
      if (inv != 1)
        for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        std::uint32_t f = at(i, c);
        if (!f) continue;
        for (std::size_t j = c; j < cols_; ++j)
          at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Mat copy = *this;
    return copy.rref_in_place().size();
  }

  /// Basis of the right kernel, canonicalized to reduced echelon rows.
  std::vector<std::vector<std::uint32_t>> kernel_basis() const {
    Mat copy = *this;
    auto piv = copy.rref_in_place();
    std::vector<bool> is_piv(cols_, false);
    std::vector<std::size_t> piv_row(cols_, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      is_piv[piv[r]] = true;
      piv_row[piv[r]] = r;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
      if (is_piv[fc]) continue;
      std::vector<std::uint32_t> v(cols_, 0);
      v[fc] = 1;
      for (std::size_t c = 0; c < cols_; ++c)
        if (is_piv[c]) v[c] = F_->neg(copy.at(piv_row[c], fc));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of A x = b with free variables set to zero, or nullopt.
  std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const {
    check(b.size() == rows_, ErrorKind::DimensionMismatch, "rhs length mismatch");
    Mat aug(F_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    auto piv = aug.rref_in_place();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, cols_);
    return x;
  }

  /// stack rows of two matrices with equal column counts
  static Mat vstack(const Mat& top, const Mat& bottom) {
    check(top.F_ == bottom.F_ && top.cols_ == bottom.cols_, ErrorKind::DimensionMismatch,
          "vstack shape mismatch");
    Mat r(top.F_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + top.a_.size());
    return r;
  }

 private:
  const FieldCtx* F_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

/// Echelonize a list of coordinate vectors (rows); canonical reduced basis.
inline std::vector<std::vector<std::uint32_t>> echelonize_rows(
    const FieldCtx& F, const std::vector<std::vector<std::uint32_t>>& rows, std::size_t width) {
  if (rows.empty()) return {};
  Mat m(&F, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
  auto piv = m.rref_in_place();
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::vector<std::uint32_t> v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = m.at(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sepcm
