// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

// nevpick: decide Nevanlinna-Pick-Caratheodory interpolation problems.
//
// Exit codes: 0 success / feasible, 1 infeasible or selftest failure,
// 2 input error, 3 numerical failure.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nevpick/io.hpp"
#include "nevpick/nevpick.hpp"
#include "nevpick/selftest.hpp"

namespace {

using nevpick::io::json;

enum Exit : int { kOk = 0, kInfeasible = 1, kInputError = 2, kNumericalError = 3 };

struct GlobalFlags {
  std::string format = "human";
  std::optional<double> tol;
  bool machine() const { return format == "machine"; }
};

const std::vector<std::string> kMatrixNames = {"Gamma", "C", "A", "G", "D", "S"};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit_machine(const json& j) { std::cout << j.dump() << '\n'; }

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
}

void print_matrix(const std::string& name, const nevpick::Matrix& m) {
  std::cout << name << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto z = m(i, j);
      std::ostringstream cell;
      cell << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
      std::cout << std::setw(24) << cell.str();
    }
    std::cout << '\n';
  }
}

int cmd_check(const std::string& path, const GlobalFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  const nevpick::Instance inst = nevpick::io::load_instance(path);
  nevpick::CheckOptions opts;
  opts.tolerance = flags.tol;
  const nevpick::Verdict v = nevpick::check(inst, opts);

  if (flags.machine()) {
    emit_machine({{"command", "check"},
                  {"verdict",
                   {{"feasible", v.feasible},
                    {"lambda_min", v.lambda_min},
                    {"tolerance_used", v.tolerance_used},
                    {"boundary", v.boundary}}},
                  {"warnings", v.warnings}});
  } else {
    std::cout << std::setprecision(6) << (v.feasible ? "feasible" : "infeasible") << " lambda_min=" << v.lambda_min
              << " tolerance=" << v.tolerance_used << (v.boundary ? " (boundary)" : "") << '\n';
    print_warnings(v.warnings);
    std::cout << "time_ms=" << elapsed_ms(start) << '\n';
  }
  return v.feasible ? kOk : kInfeasible;
}

int cmd_radius(const std::string& path, const GlobalFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  const nevpick::Instance inst = nevpick::io::load_instance(path);
  const nevpick::RadiusReport r = nevpick::minimal_radius(inst);

  if (flags.machine()) {
    emit_machine({{"command", "radius"},
                  {"radius",
                   {{"rho_star", r.rho_star},
                    {"certifying_eig", r.certifying_eig},
                    {"lambda_min_at_rho", r.lambda_min_at_rho},
                    {"tolerance", r.tolerance}}},
                  {"warnings", r.warnings}});
  } else {
    std::cout << std::setprecision(6) << "rho_star=" << r.rho_star << " certifying_eig=" << r.certifying_eig
              << " criticality_residual=" << r.lambda_min_at_rho << " tolerance=" << r.tolerance << '\n';
    print_warnings(r.warnings);
    std::cout << "time_ms=" << elapsed_ms(start) << '\n';
  }
  return kOk;
}

std::vector<std::string> split_names(const std::string& only) {
  if (only.empty()) return kMatrixNames;
  std::vector<std::string> out;
  std::stringstream ss(only);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::find(kMatrixNames.begin(), kMatrixNames.end(), item) == kMatrixNames.end()) {
      throw nevpick::Error(nevpick::ErrorCode::ParseError,
                           "unknown matrix \"" + item + "\" (expected Gamma, C, A, G, D or S)");
    }
    out.push_back(item);
  }
  return out;
}

int cmd_matrices(const std::string& path, const std::string& only, const GlobalFlags& flags) {
  const auto names = split_names(only);
  const nevpick::Instance inst = nevpick::io::load_instance(path);

  auto build = [&](const std::string& name) -> nevpick::Matrix {
    if (name == "Gamma") return nevpick::gamma_matrix(inst).matrix();
    if (name == "C") return nevpick::coeff_matrix(inst);
    if (name == "A") return nevpick::takahashi_matrix(inst).matrix();
    if (name == "G") return nevpick::gram_matrix(inst).matrix();
    if (name == "D") return nevpick::adjoint_matrix(inst);
    return nevpick::sarason_matrix(inst).matrix();
  };

  if (flags.machine()) {
    json mats = json::object();
    for (const auto& name : names) mats[name] = nevpick::io::matrix_to_json(build(name));
    emit_machine({{"command", "matrices"}, {"matrices", std::move(mats)},
                  {"warnings", nevpick::conditioning_warnings(inst)}});
  } else {
    for (const auto& name : names) print_matrix(name, build(name));
    print_warnings(nevpick::conditioning_warnings(inst));
  }
  return kOk;
}

int cmd_selftest(const nevpick::SelftestOptions& opts, const GlobalFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  const nevpick::SelftestSummary s = nevpick::run_selftest(opts);

  if (flags.machine()) {
    json suites = json::array();
    for (const auto& r : s.suites) {
      suites.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"worst", r.worst}});
    }
    emit_machine({{"command", "selftest"},
                  {"rng", nevpick::kRngAlgorithm},
                  {"seed", opts.seed},
                  {"count", opts.count},
                  {"suites", std::move(suites)},
                  {"all_passed", s.all_passed()}});
  } else {
    std::cout << "rng=" << nevpick::kRngAlgorithm << " seed=" << opts.seed << " count=" << opts.count << '\n';
    for (const auto& r : s.suites) {
      std::cout << std::setprecision(6) << (r.failed == 0 ? "PASS " : "FAIL ") << std::left << std::setw(28)
                << r.name << std::right << " passed=" << r.passed << " failed=" << r.failed << " worst=" << r.worst
                << '\n';
    }
    std::cout << (s.all_passed() ? "all suites passed" : "selftest FAILED") << '\n';
    std::cout << "time_ms=" << elapsed_ms(start) << '\n';
  }
  return s.all_passed() ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility and minimal norm of Nevanlinna-Pick-Caratheodory interpolation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  double tol = 0.0;
  auto* tol_opt = app.add_option("--tol", tol, "Absolute PSD tolerance (default 1e-9 * max(1, ||A||_inf))")
                      ->check(CLI::NonNegativeNumber);

  std::string path;
  auto* check = app.add_subcommand("check", "Decide feasibility (exit 0 feasible, 1 infeasible)");
  check->add_option("instance", path, "Instance JSON file")->required();

  auto* radius = app.add_subcommand("radius", "Minimal sup-norm of an interpolant");
  radius->add_option("instance", path, "Instance JSON file")->required();

  std::string only;
  auto* matrices = app.add_subcommand("matrices", "Print Gamma, C, A, G, D and S = G - D^T G conj(D)");
  matrices->add_option("instance", path, "Instance JSON file")->required();
  matrices->add_option("--only", only, "Comma-separated subset of Gamma,C,A,G,D,S");

  nevpick::SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Run the seeded consistency suites");
  selftest->add_option("--seed", st.seed, "Base seed")->capture_default_str();
  selftest->add_option("--count", st.count, "Samples per suite")->capture_default_str();
  bool inject = false;
  selftest->add_flag("--inject-asymmetry", inject, "Corrupt the identity suite (harness check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  if (*tol_opt) flags.tol = tol;
  if (inject) st.inject_asymmetry = 1e-6;

  try {
    if (*check) return cmd_check(path, flags);
    if (*radius) return cmd_radius(path, flags);
    if (*matrices) return cmd_matrices(path, only, flags);
    return cmd_selftest(st, flags);
  } catch (const nevpick::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (flags.machine()) {
      emit_machine({{"error", {{"code", std::string(nevpick::to_string(e.code()))}, {"message", e.what()}}}});
    }
    return e.is_input_error() ? kInputError : kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalError;
  }
}
