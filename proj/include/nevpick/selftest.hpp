// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Seeded consistency suites run by `nevpick selftest`.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nevpick/feasibility.hpp"
#include "nevpick/kernel.hpp"
#include "nevpick/oracle.hpp"

namespace nevpick {

struct SelftestOptions {
  std::uint64_t seed = 20261015;
  std::size_t count = 500;
  /// Nonzero values corrupt the identity suite on purpose.
  double inject_asymmetry = 0.0;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst = 0.0;  // largest normalized defect, or smallest margin
};

struct SelftestSummary {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
  }
};

/// Independent seed per (suite, sample) pair.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// Nodes N <= 4, orders <= 4, |alpha| <= 0.9.
inline OracleConfig identity_suite_config(std::uint64_t seed) {
  OracleConfig cfg;
  cfg.seed = seed;
  cfg.max_nodes = 4;
  cfg.max_order = 4;
  cfg.max_radius = 0.9;
  return cfg;
}

/// Nodes N <= 3, orders <= 4, Blaschke degree (index mod 6).
inline OracleConfig witness_suite_config(std::uint64_t seed, std::size_t index, double contraction) {
  OracleConfig cfg;
  cfg.seed = seed;
  cfg.max_nodes = 3;
  cfg.max_order = 4;
  cfg.max_radius = 0.9;
  cfg.blaschke_degree = index % 6;
  cfg.contraction = contraction;
  return cfg;
}

inline SelftestSummary run_selftest(const SelftestOptions& opts) {
  SelftestSummary summary;

  SuiteResult ident{"identities"};
  for (std::size_t i = 0; i < opts.count; ++i) {
    const Instance inst = random_instance(identity_suite_config(derive_seed(opts.seed, 1, i)));
    const CrossCheckReport r = cross_check(inst, opts.inject_asymmetry);
    const double worst = std::max({r.gram_vs_gamma, r.adjoint_vs_coeff, r.sarason_vs_takahashi}) / r.tolerance;
    ident.worst = std::max(ident.worst, worst);
    (r.passed() ? ident.passed : ident.failed)++;
  }
  summary.suites.push_back(ident);

  SuiteResult sound{"witness_soundness"};
  sound.worst = INFINITY;
  for (std::size_t i = 0; i < opts.count; ++i) {
    const Verdict v = check(witness_instance(witness_suite_config(derive_seed(opts.seed, 2, i), i, 1.0)));
    sound.worst = std::min(sound.worst, v.lambda_min + v.tolerance_used);
    (v.feasible ? sound.passed : sound.failed)++;
  }
  summary.suites.push_back(sound);

  SuiteResult strict{"witness_strictness"};
  strict.worst = INFINITY;
  for (std::size_t i = 0; i < opts.count; ++i) {
    const Verdict v = check(witness_instance(witness_suite_config(derive_seed(opts.seed, 3, i), i, 0.9)));
    strict.worst = std::min(strict.worst, v.lambda_min);
    (v.lambda_min > 0.0 ? strict.passed : strict.failed)++;
  }
  summary.suites.push_back(strict);

  SuiteResult brute{"closed_form_vs_bruteforce"};
  std::mt19937_64 rng(derive_seed(opts.seed, 4, 0));
  std::uniform_int_distribution<std::size_t> order(0, 5);
  for (std::size_t i = 0; i < opts.count; ++i) {
    const cplx a = detail::uniform_in_disc(rng, 0.9);
    const cplx b = detail::uniform_in_disc(rng, 0.9);
    const std::size_t m = order(rng);
    const std::size_t n = order(rng);
    const cplx expected = szego_coeff_bruteforce(a, b, m, n);
    const double rel = std::abs(szego_coeff(a, b, m, n) - expected) / std::abs(expected);
    brute.worst = std::max(brute.worst, rel);
    (rel <= 1e-9 ? brute.passed : brute.failed)++;
  }
  summary.suites.push_back(brute);

  return summary;
}

}  // namespace nevpick
