// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Ground truth that does not go through the closed forms: seeded random
/// instances, feasible instances read off finite Blaschke products, a
/// brute-force expansion of the Szego kernel, and the identity cross-check
/// between the two criterion matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

#include "nevpick/cxnum.hpp"
#include "nevpick/error.hpp"
#include "nevpick/feasibility.hpp"
#include "nevpick/instance.hpp"
#include "nevpick/jets.hpp"
#include "nevpick/kernel.hpp"
#include "nevpick/problem.hpp"

namespace nevpick {

/// Generator identifier reported next to seeds. Distributions are the
/// standard library's, so corpora reproduce across builds sharing a
/// standard library implementation.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

struct OracleConfig {
  std::uint64_t seed = 0;
  std::size_t max_nodes = 3;
  std::size_t max_order = 4;
  double max_radius = 0.9;
  std::size_t blaschke_degree = 3;
  double contraction = 1.0;
  double min_separation = 1e-3;
  /// Witness node sets whose Gamma exceeds this 2-norm condition number are
  /// redrawn.
  double max_condition = 1e8;
};

inline void validate(const OracleConfig& cfg) {
  if (cfg.max_nodes == 0 || cfg.max_order == 0) throw Error(ErrorCode::InvalidConfig, "counts must be positive");
  if (!(cfg.max_radius > 0.0 && cfg.max_radius <= 0.95)) {
    throw Error(ErrorCode::InvalidConfig, "max_radius must lie in (0, 0.95]");
  }
  if (!(cfg.contraction > 0.0 && cfg.contraction <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "contraction must lie in (0, 1]");
  }
  if (!(cfg.min_separation > 0.0)) throw Error(ErrorCode::InvalidConfig, "min_separation must be positive");
  if (!(cfg.max_condition > 1.0)) throw Error(ErrorCode::InvalidConfig, "max_condition must exceed 1");
}

namespace detail {

inline cplx uniform_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double t = 2.0 * std::numbers::pi * unit(rng);
  return std::polar(r, t);
}

/// Node positions and orders shared by both generators.
inline std::vector<Node> draw_nodes(std::mt19937_64& rng, const OracleConfig& cfg) {
  std::uniform_int_distribution<std::size_t> count(1, cfg.max_nodes);
  std::uniform_int_distribution<std::size_t> order(1, cfg.max_order);
  const std::size_t n = count(rng);
  std::vector<Node> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx alpha;
    int tries = 0;
    for (;;) {
      alpha = uniform_in_disc(rng, cfg.max_radius);
      const bool separated = std::all_of(nodes.begin(), nodes.end(), [&](const Node& other) {
        return std::abs(other.alpha - alpha) >= cfg.min_separation;
      });
      if (separated) break;
      if (++tries > 10000) throw Error(ErrorCode::InvalidConfig, "cannot place separated nodes");
    }
    nodes.push_back({alpha, std::vector<cplx>(order(rng))});
  }
  return nodes;
}

}  // namespace detail

/// Nodes uniform in |z| <= max_radius, jets 0.5 * standard complex Gaussian.
/// Usually infeasible; meant for identity checks.
inline Instance random_instance(const OracleConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  Instance inst{detail::draw_nodes(rng, cfg)};
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  for (Node& node : inst.nodes)
    for (cplx& c : node.jet) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      c = 0.5 * cplx(re, im);
    }
  return inst;
}

struct Witness {
  Instance instance;
  BlaschkeSpec generator;
  double contraction = 1.0;
};

/// Jets of contraction * B at random nodes, B a Blaschke product of degree
/// cfg.blaschke_degree with zeros in |z| <= 0.9. Feasible by construction.
/// Node sets are redrawn until cond(Gamma) <= cfg.max_condition so that
/// strict feasibility stays numerically visible.
inline Witness make_witness(const OracleConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  Witness w;
  w.contraction = cfg.contraction;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  w.generator.phase = angle(rng);
  for (std::size_t k = 0; k < cfg.blaschke_degree; ++k) {
    w.generator.zeros.push_back(detail::uniform_in_disc(rng, 0.9));
  }
  for (int attempt = 0;; ++attempt) {
    w.instance.nodes = detail::draw_nodes(rng, cfg);
    const auto ev = eig_hermitian(gamma_matrix(w.instance)).eigenvalues;
    if (ev.front() > 0.0 && ev.back() <= cfg.max_condition * ev.front()) break;
    if (attempt == 1000) throw Error(ErrorCode::InvalidConfig, "cannot draw a well-conditioned node set");
  }
  for (Node& node : w.instance.nodes) {
    const Jet j = blaschke_jet(w.generator, node.alpha, node.order());
    for (std::size_t k = 0; k < node.order(); ++k) node.jet[k] = cfg.contraction * j[k];
  }
  return w;
}

inline Instance witness_instance(const OracleConfig& cfg) { return make_witness(cfg).instance; }

/// Coefficient of u^m v^n of 1/(1 - (alpha+u)(conj(beta)+v)) by summing the
/// truncated geometric series (1/d) sum_k (X/d)^k, X = u conj(beta) + alpha v + u v,
/// d = 1 - alpha conj(beta), with dense bivariate polynomial products.
inline cplx szego_coeff_bruteforce(cplx alpha, cplx beta, std::size_t m, std::size_t n) {
  if (!(std::abs(alpha) < 1.0) || !(std::abs(beta) < 1.0)) {
    throw Error(ErrorCode::OutsideDisc, "bruteforce expansion point outside the disc");
  }
  if (m > 8 || n > 8) throw Error(ErrorCode::IndexOutOfRange, "bruteforce expansion is capped at order 8");

  const std::size_t rows = m + 1;
  const std::size_t cols = n + 1;
  using Poly = std::vector<cplx>;  // coefficient of u^i v^j at i*cols + j
  const cplx d = 1.0 - alpha * std::conj(beta);

  Poly x(rows * cols);
  if (rows > 1) x[1 * cols + 0] = std::conj(beta) / d;
  if (cols > 1) x[0 * cols + 1] = alpha / d;
  if (rows > 1 && cols > 1) x[1 * cols + 1] = 1.0 / d;

  auto multiply = [&](const Poly& p, const Poly& q) {
    Poly r(rows * cols);
    for (std::size_t i1 = 0; i1 < rows; ++i1)
      for (std::size_t j1 = 0; j1 < cols; ++j1) {
        const cplx a = p[i1 * cols + j1];
        if (a == cplx{}) continue;
        for (std::size_t i2 = 0; i1 + i2 < rows; ++i2)
          for (std::size_t j2 = 0; j1 + j2 < cols; ++j2) r[(i1 + i2) * cols + j1 + j2] += a * q[i2 * cols + j2];
      }
    return r;
  };

  Poly power(rows * cols);
  power[0] = 1.0;
  Poly sum = power;
  // X has no constant term, so X^k only reaches u^m v^n for k <= m + n.
  for (std::size_t k = 1; k <= m + n; ++k) {
    power = multiply(power, x);
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += power[t];
  }
  return sum[m * cols + n] / d;
}

/// (1 - c_i conj(c_j)) / (1 - alpha_i conj(alpha_j)) for order-one data.
inline Matrix classical_pick_matrix(const Instance& inst) {
  const std::size_t n = inst.nodes.size();
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Node& a = inst.nodes[i];
      const Node& b = inst.nodes[j];
      if (a.order() != 1 || b.order() != 1) {
        throw Error(ErrorCode::OrderMismatch, "classical Pick matrix needs order-one jets");
      }
      p(i, j) = (1.0 - a.jet[0] * std::conj(b.jet[0])) / (1.0 - a.alpha * std::conj(b.alpha));
    }
  return p;
}

struct CrossCheckReport {
  double gram_vs_gamma = 0.0;          // max|G - conj(Gamma)|
  double adjoint_vs_coeff = 0.0;       // max|D - C*|
  double sarason_vs_takahashi = 0.0;   // max|S - conj(A)|
  double eigen_gap = 0.0;              // max_k |lambda_k(S) - lambda_k(A)|
  double scale = 1.0;                  // max(1, ||Gamma||_inf)
  double tolerance = 0.0;              // 1e-10 * scale

  bool passed() const {
    return gram_vs_gamma <= tolerance && adjoint_vs_coeff <= tolerance && sarason_vs_takahashi <= tolerance &&
           eigen_gap <= 1e-9 * scale;
  }
};

/// `perturbation * max(1, ||Gamma||_inf)` is added to one entry of S before the
/// comparison; it exists only to prove the harness can fail.
inline CrossCheckReport cross_check(const Instance& inst, double perturbation = 0.0) {
  validate(inst);
  const HermitianMatrix gamma = gamma_matrix(inst);
  const HermitianMatrix g = gram_matrix(inst);
  const Matrix c = coeff_matrix(inst);
  const Matrix d = adjoint_matrix(inst);
  const HermitianMatrix a = takahashi_matrix(inst);
  HermitianMatrix s = sarason_matrix(inst);
  const double scale = std::max(1.0, inf_norm(gamma.matrix()));
  if (perturbation != 0.0) {
    Matrix raw = s.matrix();
    raw(0, raw.cols() - 1) += perturbation * scale;
    s = hermitian_part(raw);
  }

  CrossCheckReport r;
  r.scale = scale;
  r.tolerance = 1e-10 * r.scale;
  r.gram_vs_gamma = max_abs_diff(g.matrix(), gamma.matrix().conj());
  r.adjoint_vs_coeff = max_abs_diff(d, c.adjoint());
  r.sarason_vs_takahashi = max_abs_diff(s.matrix(), a.matrix().conj());
  const auto ea = eig_hermitian(a).eigenvalues;
  const auto es = eig_hermitian(s).eigenvalues;
  for (std::size_t k = 0; k < ea.size(); ++k) r.eigen_gap = std::max(r.eigen_gap, std::abs(ea[k] - es[k]));
  return r;
}

}  // namespace nevpick
