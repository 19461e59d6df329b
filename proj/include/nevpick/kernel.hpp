// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Szego-kernel matrices. Gamma holds the recentred Taylor coefficients of
/// 1/(1 - z conj(zeta)); G is the Gram matrix of the kernels
/// k_{alpha,m}(z) = z^m / (1 - conj(alpha) z)^{m+1}, which reproduce the
/// m-th Taylor coefficient at alpha.
///
/// Both use the same flattened basis order: node-major, derivative
/// ascending.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nevpick/cxnum.hpp"
#include "nevpick/error.hpp"
#include "nevpick/instance.hpp"

namespace nevpick {

struct KernelIndex {
  std::size_t node = 0;
  std::size_t derivative = 0;

  bool operator==(const KernelIndex&) const = default;
};

inline std::vector<KernelIndex> kernel_basis(const Instance& inst) {
  std::vector<KernelIndex> basis;
  basis.reserve(inst.total_dim());
  for (std::size_t i = 0; i < inst.nodes.size(); ++i)
    for (std::size_t m = 0; m < inst.nodes[i].order(); ++m) basis.push_back({i, m});
  return basis;
}

/// Starting row of each node's block.
inline std::vector<std::size_t> block_offsets(const Instance& inst) {
  std::vector<std::size_t> off;
  off.reserve(inst.nodes.size());
  std::size_t acc = 0;
  for (const Node& n : inst.nodes) {
    off.push_back(acc);
    acc += n.order();
  }
  return off;
}

namespace detail {

/// Exact binomial coefficient while it fits in 64 bits, double beyond.
inline double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  std::uint64_t exact = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(exact) * (n - k + i);
    if (next > UINT64_MAX) {
      double r = static_cast<double>(exact);
      for (unsigned j = i; j <= k; ++j) r = r * (n - k + j) / j;
      return r;
    }
    exact = static_cast<std::uint64_t>(next / i);  // divides exactly: C(n-k+i, i)
  }
  return static_cast<double>(exact);
}

/// (m+n-j)! / ((m-j)! (n-j)! j!)
inline double trinomial(unsigned m, unsigned n, unsigned j) {
  return binomial(m + n - j, j) * binomial(m + n - 2 * j, m - j);
}

inline cplx ipow(cplx z, unsigned e) {
  cplx r = 1.0;
  while (e) {
    if (e & 1u) r *= z;
    z *= z;
    e >>= 1u;
  }
  return r;
}

/// Coefficient of u^m v^n in 1 / (1 - (x+u)(y+v)).
///   sum_j trinomial(m,n,j) y^{m-j} x^{n-j} (1 - x y)^{-(m+n+1-j)}
inline cplx recentred_kernel_coeff(cplx x, cplx y, unsigned m, unsigned n) {
  const cplx d = 1.0 - x * y;
  const cplx inv_d = 1.0 / d;
  cplx sum = 0.0;
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    sum += trinomial(m, n, j) * ipow(y, m - j) * ipow(x, n - j) * ipow(inv_d, m + n + 1 - j);
  }
  return sum;
}

inline void check_in_disc(cplx z, const char* what) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::OutsideDisc, std::string(what) + " outside the disc");
}

}  // namespace detail

/// a_{mn} in 1/(1 - z conj(zeta)) = sum a_{kl} (z - alpha)^k conj(zeta - beta)^l.
inline cplx szego_coeff(cplx alpha, cplx beta, std::size_t m, std::size_t n) {
  detail::check_in_disc(alpha, "alpha");
  detail::check_in_disc(beta, "beta");
  return detail::recentred_kernel_coeff(alpha, std::conj(beta), static_cast<unsigned>(m),
                                        static_cast<unsigned>(n));
}

/// <k_{alpha,m}, k_{beta,n}> = (1/n!) d^n/dz^n at z = beta of z^m / (1 - conj(alpha) z)^{m+1}.
inline cplx gram_entry(cplx alpha, std::size_t m, cplx beta, std::size_t n) {
  detail::check_in_disc(alpha, "alpha");
  detail::check_in_disc(beta, "beta");
  return detail::recentred_kernel_coeff(std::conj(alpha), beta, static_cast<unsigned>(m),
                                        static_cast<unsigned>(n));
}

namespace detail {

template <typename EntryFn>
HermitianMatrix assemble_kernel_matrix(const Instance& inst, EntryFn entry) {
  const auto basis = kernel_basis(inst);
  const std::size_t dim = basis.size();
  Matrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r; c < dim; ++c) {
      const KernelIndex& a = basis[r];
      const KernelIndex& b = basis[c];
      const cplx v = entry(inst.nodes[a.node].alpha, a.derivative, inst.nodes[b.node].alpha, b.derivative);
      out(r, c) = v;
      if (c != r) out(c, r) = entry(inst.nodes[b.node].alpha, b.derivative, inst.nodes[a.node].alpha, a.derivative);
    }
  }
  return hermitian_part(out);
}

}  // namespace detail

/// Gamma, block (i,j) = [a_{kl}(alpha_i, alpha_j)].
inline HermitianMatrix gamma_matrix(const Instance& inst) {
  validate(inst);
  return detail::assemble_kernel_matrix(
      inst, [](cplx a, std::size_t m, cplx b, std::size_t n) { return szego_coeff(a, b, m, n); });
}

/// Gram matrix of {k_{alpha_i,m}} in kernel_basis order.
inline HermitianMatrix gram_matrix(const Instance& inst) {
  validate(inst);
  return detail::assemble_kernel_matrix(
      inst, [](cplx a, std::size_t m, cplx b, std::size_t n) { return gram_entry(a, m, b, n); });
}

inline constexpr double kNearBoundaryRadius = 0.999;
inline constexpr double kNearCoincidentDistance = 1e-6;

/// Non-fatal notes about an instance whose kernel matrices are likely to be
/// badly conditioned.
inline std::vector<std::string> conditioning_warnings(const Instance& inst) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    if (std::abs(inst.nodes[i].alpha) > kNearBoundaryRadius) {
      out.push_back("node " + std::to_string(i) + " is within 1e-3 of the unit circle; Gamma is ill-conditioned");
    }
  }
  for (std::size_t i = 0; i < inst.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < inst.nodes.size(); ++j)
      if (std::abs(inst.nodes[i].alpha - inst.nodes[j].alpha) < kNearCoincidentDistance) {
        out.push_back("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                      " are closer than 1e-6; Gamma is ill-conditioned");
      }
  return out;
}

}  // namespace nevpick
