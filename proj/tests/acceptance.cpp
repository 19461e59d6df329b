// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nevpick/io.hpp"
#include "nevpick/nevpick.hpp"
#include "nevpick/selftest.hpp"

namespace {

using namespace nevpick;
using namespace std::complex_literals;

constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " first failure: " << what << ";";
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. G - conj(Gamma), D - C*, S - conj(A) each <= 1e-10 max(1, ||Gamma||_inf)
//    over 500 random instances (N <= 4, n_i <= 4, |alpha| <= 0.9), within 30 s.
void equivalence(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    const Instance inst = random_instance(identity_suite_config(derive_seed(kSeed, 101, i)));
    const HermitianMatrix gamma = gamma_matrix(inst);
    const double limit = 1e-10 * std::max(1.0, inf_norm(gamma.matrix()));
    const Matrix c = coeff_matrix(inst);
    const double d1 = max_abs_diff(gram_matrix(inst).matrix(), gamma.matrix().conj());
    const double d2 = max_abs_diff(adjoint_matrix(inst), c.adjoint());
    const double d3 = max_abs_diff(sarason_matrix(inst).matrix(), takahashi_matrix(inst).matrix().conj());
    worst = std::max({worst, d1 / limit, d2 / limit, d3 / limit});
    o.require(d1 <= limit && d2 <= limit && d3 <= limit, "instance " + std::to_string(i));
  }
  const double t = seconds_since(t0);
  o.require(t <= 30.0, "runtime");
  o.detail << " worst defect/limit=" << worst << " time=" << t << "s";
}

// 2. 500 Blaschke witnesses (degree <= 5) feasible at contraction 1,
//    strictly feasible at contraction 0.9.
void witness_soundness(Outcome& o) {
  std::size_t false_negatives = 0, not_strict = 0;
  double min_margin = INFINITY, min_strict = INFINITY;
  for (std::size_t i = 0; i < 500; ++i) {
    const Verdict v = check(witness_instance(witness_suite_config(derive_seed(kSeed, 102, i), i, 1.0)));
    min_margin = std::min(min_margin, v.lambda_min + v.tolerance_used);
    if (!v.feasible) ++false_negatives;
    const Verdict s = check(witness_instance(witness_suite_config(derive_seed(kSeed, 103, i), i, 0.9)));
    min_strict = std::min(min_strict, s.lambda_min);
    if (!(s.lambda_min > 0.0)) ++not_strict;
  }
  o.require(false_negatives == 0, std::to_string(false_negatives) + " false negatives");
  o.require(not_strict == 0, std::to_string(not_strict) + " not strictly feasible");
  o.detail << " false_negatives=" << false_negatives << " min(lambda_min+tol)=" << min_margin
           << " not_strict=" << not_strict << " min strict lambda_min=" << min_strict;
}

// 3. Closed form vs bivariate expansion within 1e-9 relative, 1000 samples.
void closed_form_vs_bruteforce(Outcome& o) {
  std::mt19937_64 rng(derive_seed(kSeed, 104, 0));
  std::uniform_int_distribution<std::size_t> ord(0, 5);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const cplx a = detail::uniform_in_disc(rng, 0.9), b = detail::uniform_in_disc(rng, 0.9);
    const std::size_t m = ord(rng), n = ord(rng);
    const cplx want = szego_coeff_bruteforce(a, b, m, n);
    const double rel = std::abs(szego_coeff(a, b, m, n) - want) / std::abs(want);
    worst = std::max(worst, rel);
    o.require(rel <= 1e-9, "sample " + std::to_string(i));
  }
  o.detail << " worst relative error=" << worst;
}

// 4. (a) order-one data gives the classical Pick matrix to 1e-12;
//    (b) a single node at 0 gives Gamma = I and A = I - C C*;
//    (c) Schwarz jets (0,1) -> boundary, lambda_min = 0 +- 1e-10; (0,2) -> -3 +- 1e-9.
void classical_reductions(Outcome& o) {
  double pick_err = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    OracleConfig cfg = identity_suite_config(derive_seed(kSeed, 105, i));
    cfg.max_order = 1;
    const Instance inst = random_instance(cfg);
    pick_err = std::max(pick_err, max_abs_diff(takahashi_matrix(inst).matrix(), classical_pick_matrix(inst)));
  }
  o.require(pick_err <= 1e-12, "classical Pick");

  std::mt19937_64 rng(derive_seed(kSeed, 106, 0));
  std::normal_distribution<double> g;
  double gamma_err = 0.0, a_err = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    Node node{0.0, {}};
    for (std::size_t k = 0; k < n; ++k) node.jet.push_back({g(rng), g(rng)});
    const Instance inst{{node}};
    const Matrix c = coeff_matrix(inst);
    gamma_err = std::max(gamma_err, max_abs_diff(gamma_matrix(inst).matrix(), Matrix::identity(n)));
    const Matrix expect = Matrix::identity(n) - c * c.adjoint();
    a_err = std::max(a_err, max_abs_diff(takahashi_matrix(inst).matrix(), expect) /
                                std::max(1.0, inf_norm(expect)));
  }
  o.require(gamma_err <= std::numeric_limits<double>::epsilon(), "Gamma = I at origin");
  o.require(a_err <= 1e-14, "A = I - CC*");

  const Verdict s1 = check(Instance{{{0.0, {0.0, 1.0}}}});
  const Verdict s2 = check(Instance{{{0.0, {0.0, 2.0}}}});
  o.require(s1.feasible && s1.boundary && std::abs(s1.lambda_min) <= 1e-10, "Schwarz (0,1)");
  o.require(!s2.feasible && std::abs(s2.lambda_min + 3.0) <= 1e-9, "Schwarz (0,2)");
  o.detail << " pick_err=" << pick_err << " gamma_err=" << gamma_err << " a_rel_err=" << a_err
           << " schwarz1 lambda=" << s1.lambda_min << " schwarz2 lambda=" << s2.lambda_min;
}

// 5. rho* = |c| for single points (1e-10 abs); rho*(scale by r) = rho*/r
//    within 1e-8 relative for r in {0.5, 2, 10}; criticality within 10 tol.
void minimal_radius_suite(Outcome& o) {
  std::mt19937_64 rng(derive_seed(kSeed, 107, 0));
  std::normal_distribution<double> g;
  double single_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx alpha = detail::uniform_in_disc(rng, 0.9);
    const cplx c(g(rng), g(rng));
    single_err = std::max(single_err, std::abs(minimal_radius(Instance{{{alpha, {c}}}}).rho_star - std::abs(c)));
  }
  o.require(single_err <= 1e-10, "single point");

  double scale_err = 0.0, crit = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    OracleConfig cfg = identity_suite_config(derive_seed(kSeed, 108, i));
    cfg.max_nodes = 3;
    const Instance inst = random_instance(cfg);
    const RadiusReport base = minimal_radius(inst);
    crit = std::max(crit, std::abs(base.lambda_min_at_rho) / base.tolerance);
    for (double r : {0.5, 2.0, 10.0}) {
      // Jets multiplied by r.
      const double scaled = minimal_radius(scale_instance(inst, 1.0 / r)).rho_star;
      scale_err = std::max(scale_err, std::abs(scaled - r * base.rho_star) / (r * base.rho_star));
    }
  }
  o.require(scale_err <= 1e-8, "scaling law");
  o.require(crit <= 10.0, "criticality");
  o.detail << " single_err=" << single_err << " scale_rel_err=" << scale_err << " max|lambda_at_rho|/tol=" << crit;
}

// 6. Jacobi residuals <= 1e-10 max(1, ||H||_F) up to dim 50; [[2,i],[-i,2]] -> {1,3}.
void linear_algebra(Outcome& o) {
  std::mt19937_64 rng(derive_seed(kSeed, 109, 0));
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 50; ++n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    const HermitianMatrix h = hermitian_part(m + m.adjoint());
    const EigenDecomposition e = eig_hermitian(h);
    const double scale = std::max(1.0, frobenius_norm(h.matrix()));
    for (std::size_t k = 0; k < n; ++k) {
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cplx hv = 0.0;
        for (std::size_t j = 0; j < n; ++j) hv += h(i, j) * e.eigenvectors(j, k);
        res += std::norm(hv - e.eigenvalues[k] * e.eigenvectors(i, k));
      }
      worst = std::max(worst, std::sqrt(res) / scale);
    }
  }
  o.require(worst <= 1e-10, "residual");
  const auto ev = eig_hermitian(make_hermitian(Matrix{{2.0, 1i}, {-1i, 2.0}}, 0.0)).eigenvalues;
  o.require(std::abs(ev[0] - 1.0) <= 1e-12 && std::abs(ev[1] - 3.0) <= 1e-12, "2x2 spectrum");
  o.detail << " worst scaled residual=" << worst << " eig={" << ev[0] << ", " << ev[1] << "}";
}

// 7. psi's jet at alpha_i has its first n_i coefficients <= 1e-12.
void psi_vanishing(Outcome& o) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    const Instance inst = random_instance(identity_suite_config(derive_seed(kSeed, 110, i)));
    for (std::size_t node = 0; node < inst.nodes.size(); ++node) {
      const std::size_t n = inst.nodes[node].order();
      const Jet j = psi_jet(inst, node, n);
      for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(j[k]));
    }
  }
  o.require(worst <= 1e-12, "vanishing");
  o.detail << " max |leading coeff|=" << worst;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NEVPICK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// 8. check exits 0/1/2 on the canonical inputs; machine output re-parses;
//    identical seeds give byte-identical machine output.
void cli_contract(Outcome& o) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "nevpick_acceptance";
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string feasible = write("feasible.json", R"({"nodes": [{"alpha": [0, 0], "jet": [[0.5, 0]]}]})");
  const std::string infeasible =
      write("infeasible.json", R"({"nodes": [{"alpha": [0, 0], "jet": [[0, 0], [2, 0]]}]})");
  const std::string malformed = write("malformed.json", R"({"nodes": [{"alpha": [0, 0], "jet": )");
  const std::string mixed = write(
      "mixed.json",
      R"({"nodes": [{"alpha": [0.3, 0.1], "jet": [[0.2, 0.1], [0.3, -0.2]]}, {"alpha": [-0.4, 0.2], "jet": [[0.1, 0]]}]})");

  const int e0 = run_cli("check " + feasible).exit_code;
  const int e1 = run_cli("check " + infeasible).exit_code;
  const int e2 = run_cli("check " + malformed).exit_code;
  o.require(e0 == 0 && e1 == 1 && e2 == 2, "exit codes");

  bool reparsed = true;
  try {
    const RunResult m = run_cli("--format=machine matrices " + mixed);
    const io::json j = io::parse_json(m.out);
    for (auto it = j.at("matrices").begin(); it != j.at("matrices").end(); ++it) {
      const Matrix mat = io::matrix_from_json(it.value());
      if (it.key() == "A" || it.key() == "Gamma" || it.key() == "G" || it.key() == "S") {
        reparsed = reparsed && mat == mat.adjoint();
      }
    }
    const io::json c = io::parse_json(run_cli("--format=machine check " + infeasible).out);
    reparsed = reparsed && std::abs(c.at("verdict").at("lambda_min").get<double>() + 3.0) <= 1e-9;
    (void)io::parse_json(run_cli("--format=machine radius " + mixed).out);
    (void)io::parse_json(run_cli("--format=machine selftest --count=5").out);
  } catch (const std::exception& e) {
    reparsed = false;
  }
  o.require(reparsed, "machine output re-parse");

  bool identical = true;
  for (const std::string& cmd : {"check " + mixed, "radius " + mixed, "matrices " + mixed,
                                std::string("selftest --count=25 --seed=99")}) {
    const RunResult a = run_cli("--format=machine " + cmd);
    const RunResult b = run_cli("--format=machine " + cmd);
    identical = identical && !a.out.empty() && a.out == b.out;
  }
  o.require(identical, "determinism");
  fs::remove_all(dir);
  o.detail << " exit codes=" << e0 << "/" << e1 << "/" << e2 << " reparse=" << reparsed
           << " deterministic=" << identical;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 equivalence of both criterion matrices", equivalence},
      {"2 witness soundness and strictness", witness_soundness},
      {"3 closed form vs brute-force expansion", closed_form_vs_bruteforce},
      {"4 classical reductions", classical_reductions},
      {"5 minimal radius", minimal_radius_suite},
      {"6 Hermitian eigensolver", linear_algebra},
      {"7 psi vanishing at nodes", psi_vanishing},
      {"8 CLI contract", cli_contract},
  };
  std::size_t failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    o.detail << std::setprecision(3);
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " |" << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
