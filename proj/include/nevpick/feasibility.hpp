// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nevpick/cxnum.hpp"
#include "nevpick/instance.hpp"
#include "nevpick/kernel.hpp"
#include "nevpick/problem.hpp"

namespace nevpick {

inline constexpr double kRelativePsdTolerance = 1e-9;

enum class Formulation { Takahashi, Sarason };

struct CheckOptions {
  /// Absolute tolerance; default is kRelativePsdTolerance * max(1, ||A||_inf).
  std::optional<double> tolerance;
  Formulation formulation = Formulation::Takahashi;
};

struct Verdict {
  bool feasible = false;
  double lambda_min = 0.0;
  double tolerance_used = 0.0;
  /// |lambda_min| <= tolerance_used: the data sits on the edge of the
  /// feasible set (e.g. jets of an inner function).
  bool boundary = false;
  std::vector<std::string> warnings;
};

inline double default_tolerance(const HermitianMatrix& a) {
  return kRelativePsdTolerance * std::max(1.0, inf_norm(a.matrix()));
}

inline Verdict check(const Instance& inst, const CheckOptions& opts = {}) {
  validate(inst);
  const HermitianMatrix a =
      opts.formulation == Formulation::Takahashi ? takahashi_matrix(inst) : sarason_matrix(inst);
  Verdict v;
  v.lambda_min = min_eigenvalue(a);
  v.tolerance_used = opts.tolerance.value_or(default_tolerance(a));
  v.feasible = v.lambda_min >= -v.tolerance_used;
  v.boundary = std::abs(v.lambda_min) <= v.tolerance_used;
  v.warnings = conditioning_warnings(inst);
  return v;
}

/// Divides every jet coefficient by rho.
inline Instance scale_instance(const Instance& inst, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::NonPositiveScale, "scale must be positive and finite");
  }
  Instance out = inst;
  for (Node& n : out.nodes)
    for (cplx& c : n.jet) c /= rho;
  return out;
}

struct RadiusReport {
  /// Smallest sup-norm of an interpolant.
  double rho_star = 0.0;
  /// Largest eigenvalue of the pencil (C Gamma C*, Gamma); rho_star^2.
  double certifying_eig = 0.0;
  /// lambda_min(A) for the data divided by rho_star; 0 for zero data.
  double lambda_min_at_rho = 0.0;
  /// The PSD tolerance of that rescaled check.
  double tolerance = 0.0;
  std::vector<std::string> warnings;
};

/// rho* = sqrt(lambda_max(C Gamma C*, Gamma)): the data divided by rho is
/// feasible iff rho^2 Gamma - C Gamma C* >= 0.
inline RadiusReport minimal_radius(const Instance& inst) {
  validate(inst);
  RadiusReport r;
  r.warnings = conditioning_warnings(inst);

  const bool all_zero = std::all_of(inst.nodes.begin(), inst.nodes.end(), [](const Node& n) {
    return std::all_of(n.jet.begin(), n.jet.end(), [](cplx c) { return c == cplx{}; });
  });
  if (all_zero) {
    r.tolerance = default_tolerance(gamma_matrix(inst));
    return r;
  }

  const HermitianMatrix gamma = gamma_matrix(inst);
  const Matrix c = coeff_matrix(inst);
  const HermitianMatrix cgc = hermitian_part(c * gamma.matrix() * c.adjoint());
  r.certifying_eig = std::max(0.0, pencil_max_eig(cgc, gamma));
  r.rho_star = std::sqrt(r.certifying_eig);

  if (r.rho_star > 0.0) {
    const Verdict at = check(scale_instance(inst, r.rho_star));
    r.lambda_min_at_rho = at.lambda_min;
    r.tolerance = at.tolerance_used;
  }
  return r;
}

}  // namespace nevpick
