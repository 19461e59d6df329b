// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "nevpick/error.hpp"

namespace nevpick {

using cplx = std::complex<double>;

/// Nodes must satisfy |alpha| <= 1 - kDiscMargin.
inline constexpr double kDiscMargin = 1e-9;
/// Two nodes closer than this are treated as the same point.
inline constexpr double kNodeSeparation = 1e-12;

/// An interpolation node: the point alpha and the prescribed Taylor
/// coefficients jet[k] = phi^{(k)}(alpha) / k!.
struct Node {
  cplx alpha;
  std::vector<cplx> jet;

  std::size_t order() const noexcept { return jet.size(); }
};

struct Instance {
  std::vector<Node> nodes;

  /// Sum of the node orders, i.e. the size of every criterion matrix.
  std::size_t total_dim() const noexcept {
    std::size_t m = 0;
    for (const Node& n : nodes) m += n.order();
    return m;
  }
};

namespace detail {
inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace detail

inline void validate(const Instance& inst) {
  if (inst.nodes.empty()) throw Error(ErrorCode::EmptyInstance, "instance has no nodes");
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    const Node& node = inst.nodes[i];
    const std::string where = "node " + std::to_string(i);
    if (!detail::finite(node.alpha)) throw Error(ErrorCode::NonFiniteValue, where + " alpha");
    if (std::abs(node.alpha) > 1.0 - kDiscMargin) {
      throw Error(ErrorCode::NodeOutsideDisc, where + " lies outside the open unit disc");
    }
    if (node.jet.empty()) throw Error(ErrorCode::EmptyJet, where + " has an empty jet");
    for (const cplx& c : node.jet) {
      if (!detail::finite(c)) throw Error(ErrorCode::NonFiniteValue, where + " jet coefficient");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(node.alpha - inst.nodes[j].alpha) <= kNodeSeparation) {
        throw Error(ErrorCode::DuplicateNode, "nodes " + std::to_string(j) + " and " + std::to_string(i));
      }
    }
  }
}

}  // namespace nevpick
