// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Truncated Taylor series at a point of the disc. Coefficients are stored
/// as f^{(k)}(center) / k!, never as raw derivatives.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nevpick/error.hpp"
#include "nevpick/instance.hpp"

namespace nevpick {

inline constexpr double kJetDivisionFloor = 1e-13;

class Jet {
 public:
  Jet(cplx center, std::vector<cplx> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::OrderMismatch, "jet order must be at least 1");
    if (!(std::abs(center_) < 1.0)) throw Error(ErrorCode::OutsideDisc, "jet center outside the disc");
    for (const cplx& c : coeffs_) {
      if (!detail::finite(c)) throw Error(ErrorCode::NonFiniteValue, "jet coefficient");
    }
  }

  /// The jet of a constant function.
  static Jet constant(cplx center, std::size_t order, cplx value) {
    std::vector<cplx> c(order);
    c.at(0) = value;
    return Jet(center, std::move(c));
  }

  /// The jet of z itself: (center, 1, 0, ...).
  static Jet variable(cplx center, std::size_t order) {
    std::vector<cplx> c(order);
    c.at(0) = center;
    if (order > 1) c[1] = 1.0;
    return Jet(center, std::move(c));
  }

  cplx center() const noexcept { return center_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }

 private:
  cplx center_;
  std::vector<cplx> coeffs_;
};

namespace detail {
inline void check_compatible(const Jet& p, const Jet& q) {
  if (p.center() != q.center()) throw Error(ErrorCode::CenterMismatch, "jets have different centers");
  if (p.order() != q.order()) throw Error(ErrorCode::OrderMismatch, "jets have different orders");
}
}  // namespace detail

inline Jet jet_add(const Jet& p, const Jet& q) {
  detail::check_compatible(p, q);
  std::vector<cplx> r(p.order());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = p[k] + q[k];
  return Jet(p.center(), std::move(r));
}

/// Truncated Cauchy product.
inline Jet jet_mul(const Jet& p, const Jet& q) {
  detail::check_compatible(p, q);
  const std::size_t n = p.order();
  std::vector<cplx> r(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) r[k] += p[j] * q[k - j];
  return Jet(p.center(), std::move(r));
}

inline Jet jet_reciprocal(const Jet& p) {
  const cplx c0 = p[0];
  if (std::abs(c0) <= kJetDivisionFloor) {
    throw Error(ErrorCode::DivisionByZeroJet, "leading coefficient is (numerically) zero");
  }
  const std::size_t n = p.order();
  std::vector<cplx> q(n);
  q[0] = 1.0 / c0;
  for (std::size_t k = 1; k < n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += p[j] * q[k - j];
    q[k] = -s / c0;
  }
  return Jet(p.center(), std::move(q));
}

/// e^{i phase} * prod_k (z - a_k) / (1 - conj(a_k) z).
struct BlaschkeSpec {
  std::vector<cplx> zeros;
  double phase = 0.0;
};

/// Jet of a single factor (z - a) / (1 - conj(a) z).
inline Jet blaschke_factor_jet(cplx zero, cplx center, std::size_t order) {
  if (!(std::abs(zero) < 1.0)) throw Error(ErrorCode::OutsideDisc, "Blaschke zero outside the disc");
  std::vector<cplx> num(order), den(order);
  num[0] = center - zero;
  den[0] = 1.0 - std::conj(zero) * center;
  if (order > 1) {
    num[1] = 1.0;
    den[1] = -std::conj(zero);
  }
  return jet_mul(Jet(center, std::move(num)), jet_reciprocal(Jet(center, std::move(den))));
}

inline Jet blaschke_jet(const BlaschkeSpec& spec, cplx center, std::size_t order) {
  if (!(std::abs(center) < 1.0)) throw Error(ErrorCode::OutsideDisc, "jet center outside the disc");
  Jet acc = Jet::constant(center, order, std::polar(1.0, spec.phase));
  for (const cplx& a : spec.zeros) acc = jet_mul(acc, blaschke_factor_jet(a, center, order));
  return acc;
}

/// The inner function whose zeros are the instance nodes, node i repeated
/// n_i times.
inline BlaschkeSpec psi_spec(const Instance& inst) {
  BlaschkeSpec spec;
  for (const Node& node : inst.nodes)
    for (std::size_t k = 0; k < node.order(); ++k) spec.zeros.push_back(node.alpha);
  return spec;
}

/// Jet of psi at node `node_index`. Its first n_{node_index} coefficients vanish.
inline Jet psi_jet(const Instance& inst, std::size_t node_index, std::size_t order) {
  if (node_index >= inst.nodes.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "node index " + std::to_string(node_index));
  }
  return blaschke_jet(psi_spec(inst), inst.nodes[node_index].alpha, order);
}

}  // namespace nevpick
