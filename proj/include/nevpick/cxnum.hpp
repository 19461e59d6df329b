// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Dense complex linear algebra: Hermitian symmetrization, a cyclic Jacobi
/// eigensolver, Cholesky factorization and the largest eigenvalue of a
/// Hermitian-definite pencil.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nevpick/error.hpp"

namespace nevpick {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
    }
    for (const cplx& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::NonFiniteValue, "matrix entry is not finite");
      }
    }
  }
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  Matrix adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conj() const {
    Matrix r = *this;
    for (cplx& z : r.data_) z = std::conj(z);
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  bool operator==(const Matrix&) const = default;

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const cplx& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

/// Maximum absolute row sum.
inline double inf_norm(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

inline double max_abs_entry(const Matrix& m) {
  double best = 0.0;
  for (const cplx& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

/// max_ij |a_ij - b_ij|
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  double best = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) best = std::max(best, std::abs(ea[k] - eb[k]));
  return best;
}

/// Square matrix with entry(i,j) == conj(entry(j,i)) exactly and a real
/// diagonal. Only obtainable through make_hermitian or hermitian_part.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  std::size_t dim() const noexcept { return m_.rows(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }
  /// max|M - M*| of the matrix this was symmetrized from.
  double asymmetry_defect() const noexcept { return defect_; }

  HermitianMatrix conj() const { return HermitianMatrix(m_.conj(), defect_); }

  friend HermitianMatrix hermitian_part(const Matrix& m);

 private:
  HermitianMatrix(Matrix m, double defect) : m_(std::move(m)), defect_(defect) {}

  Matrix m_;
  double defect_ = 0.0;
};

/// (M + M*)/2 without a tolerance check. Throws NotSquare.
inline HermitianMatrix hermitian_part(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
  const std::size_t n = m.rows();
  Matrix h(n, n);
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = m(i, i).real();
    defect = std::max(defect, 2.0 * std::abs(m(i, i).imag()));
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return HermitianMatrix(std::move(h), defect);
}

/// Symmetrizes M, failing with NotHermitian when max|M - M*| exceeds tol.
inline HermitianMatrix make_hermitian(const Matrix& m, double tol) {
  HermitianMatrix h = hermitian_part(m);
  if (h.asymmetry_defect() > tol) {
    throw Error(ErrorCode::NotHermitian, "asymmetry defect " + std::to_string(h.asymmetry_defect()) +
                                             " exceeds tolerance " + std::to_string(tol));
  }
  return h;
}

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]
  int sweeps = 0;
};

struct CholeskyFactor {
  Matrix lower;
};

inline constexpr int kJacobiMaxSweeps = 50;

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q)
/// and then applies the real symmetric rotation that annihilates it.
inline EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");

  Matrix a = h.matrix();
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double target = 1e-14 * scale;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  int sweep = 0;
  bool rotated = true;
  for (;;) {
    // A sweep with nothing above the skip threshold cannot make progress.
    if (!rotated || detail::off_diagonal_norm(a) <= target) break;
    if (sweep == kJacobiMaxSweeps) {
      throw Error(ErrorCode::ConvergenceFailure,
                  "Jacobi eigensolver did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    ++sweep;
    rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-30) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Negligible against both diagonal entries: drop it outright.
        if (sweep > 3 && mag <= 0.5 * eps * std::abs(app) && mag <= 0.5 * eps * std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const cplx phase = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const cplx upp = c;
        const cplx upq = s;
        const cplx uqp = -s * std::conj(phase);
        const cplx uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline double min_eigenvalue(const HermitianMatrix& h) { return eig_hermitian(h).eigenvalues.front(); }

inline double max_eigenvalue(const HermitianMatrix& h) { return eig_hermitian(h).eigenvalues.back(); }

/// Lower-triangular L with real positive diagonal and L L* = H.
inline CholeskyFactor cholesky(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(h(i, i).real()));
  const double pivot_floor = 1e-13 * std::max(1.0, max_diag);

  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > pivot_floor)) {
      throw Error(ErrorCode::NotPositiveDefinite, "pivot " + std::to_string(j) + " is " + std::to_string(d));
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return {std::move(l)};
}

/// Solves L X = B for lower-triangular L.
inline Matrix forward_substitute(const Matrix& lower, const Matrix& b) {
  const std::size_t n = lower.rows();
  if (b.rows() != n) throw Error(ErrorCode::DimensionMismatch, "forward substitution shape");
  Matrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = b(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * x(k, c);
      x(i, c) = s / lower(i, i);
    }
  }
  return x;
}

/// Largest lambda with det(B - lambda G) = 0, G positive definite.
/// Whitens with G = L L* and diagonalizes L^{-1} B L^{-*}.
inline double pencil_max_eig(const HermitianMatrix& b, const HermitianMatrix& g) {
  if (b.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "pencil dimensions differ");
  const CholeskyFactor f = cholesky(g);
  const Matrix y = forward_substitute(f.lower, b.matrix());           // L^{-1} B
  const Matrix w = forward_substitute(f.lower, y.adjoint());          // L^{-1} (L^{-1} B)* = L^{-1} B L^{-*}
  return max_eigenvalue(hermitian_part(w));
}

}  // namespace nevpick
