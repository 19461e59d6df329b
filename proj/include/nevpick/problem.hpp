// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Coefficient matrices built from the jets and the two criterion matrices
///   A = Gamma - C Gamma C*          (Pick form)
///   S = G - D^T G conj(D)           (contraction form on the kernel space)
/// Interpolation is possible iff either one is positive semidefinite, and
/// S == conj(A) identically.

#pragma once

#include <algorithm>
#include <cstddef>

#include "nevpick/cxnum.hpp"
#include "nevpick/instance.hpp"
#include "nevpick/kernel.hpp"

namespace nevpick {

/// Block-diagonal C, block i the lower-triangular Toeplitz matrix
/// (C_i)_{kp} = c_{i,k-p}.
inline Matrix coeff_matrix(const Instance& inst) {
  validate(inst);
  const std::size_t dim = inst.total_dim();
  const auto off = block_offsets(inst);
  Matrix c(dim, dim);
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    const auto& jet = inst.nodes[i].jet;
    for (std::size_t k = 0; k < jet.size(); ++k)
      for (std::size_t p = 0; p <= k; ++p) c(off[i] + k, off[i] + p) = jet[k - p];
  }
  return c;
}

/// Block-diagonal D, block i the upper-triangular Toeplitz matrix whose
/// rows read conj(c_{i0}), conj(c_{i1}), ... starting at the diagonal. This
/// is the matrix of M_phi^* on the kernel basis; it is built here from that
/// description and not as coeff_matrix(inst).adjoint().
inline Matrix adjoint_matrix(const Instance& inst) {
  validate(inst);
  const std::size_t dim = inst.total_dim();
  const auto off = block_offsets(inst);
  Matrix d(dim, dim);
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    const auto& jet = inst.nodes[i].jet;
    const std::size_t n = jet.size();
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t k = 0; row + k < n; ++k) d(off[i] + row, off[i] + row + k) = std::conj(jet[k]);
  }
  return d;
}

/// Tolerance for the asymmetry left behind by the triple product.
inline double criterion_symmetry_tol(const Matrix& kernel, const Matrix& product) {
  return 1e-9 * std::max({1.0, inf_norm(kernel), inf_norm(product)});
}

inline HermitianMatrix takahashi_matrix(const Instance& inst) {
  const HermitianMatrix gamma = gamma_matrix(inst);
  const Matrix c = coeff_matrix(inst);
  const Matrix cgc = c * gamma.matrix() * c.adjoint();
  return make_hermitian(gamma.matrix() - cgc, criterion_symmetry_tol(gamma.matrix(), cgc));
}

inline HermitianMatrix sarason_matrix(const Instance& inst) {
  const HermitianMatrix g = gram_matrix(inst);
  const Matrix d = adjoint_matrix(inst);
  const Matrix dgd = d.transpose() * g.matrix() * d.conj();
  return make_hermitian(g.matrix() - dgd, criterion_symmetry_tol(g.matrix(), dgd));
}

}  // namespace nevpick
