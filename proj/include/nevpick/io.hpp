// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// JSON encodings.
///
/// Instance:  {"nodes": [{"alpha": [re, im], "jet": [[re, im], ...]}, ...]}
///            jet[k] is the k-th Taylor coefficient phi^{(k)}(alpha)/k!.
/// Matrix:    {"dim": n, "entries": [[re, im], ...]}  (row-major, n*n entries)
///
/// Unknown fields are rejected.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nevpick/cxnum.hpp"
#include "nevpick/error.hpp"
#include "nevpick/instance.hpp"

namespace nevpick::io {

using json = nlohmann::json;

namespace detail {

inline void require_only(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || it.key() == a;
    if (!ok) throw Error(ErrorCode::ParseError, where + ": unknown field \"" + it.key() + "\"");
  }
  for (std::string_view a : allowed) {
    if (!obj.contains(std::string(a))) {
      throw Error(ErrorCode::ParseError, where + ": missing field \"" + std::string(a) + "\"");
    }
  }
}

inline cplx complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, where + " must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline Instance instance_from_json(const json& j) {
  detail::require_only(j, {"nodes"}, "instance");
  const json& nodes = j.at("nodes");
  if (!nodes.is_array()) throw Error(ErrorCode::ParseError, "\"nodes\" must be an array");
  Instance inst;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    detail::require_only(nodes[i], {"alpha", "jet"}, where);
    Node node;
    node.alpha = detail::complex_from_json(nodes[i].at("alpha"), where + ".alpha");
    const json& jet = nodes[i].at("jet");
    if (!jet.is_array()) throw Error(ErrorCode::ParseError, where + ".jet must be an array");
    for (std::size_t k = 0; k < jet.size(); ++k) {
      node.jet.push_back(detail::complex_from_json(jet[k], where + ".jet[" + std::to_string(k) + "]"));
    }
    inst.nodes.push_back(std::move(node));
  }
  return inst;
}

inline json instance_to_json(const Instance& inst) {
  json nodes = json::array();
  for (const Node& n : inst.nodes) {
    json jet = json::array();
    for (const cplx& c : n.jet) jet.push_back(complex_to_json(c));
    nodes.push_back({{"alpha", complex_to_json(n.alpha)}, {"jet", std::move(jet)}});
  }
  return {{"nodes", std::move(nodes)}};
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

/// Parses and validates.
inline Instance parse_instance(std::string_view text) {
  Instance inst = instance_from_json(parse_json(text));
  validate(inst);
  return inst;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

inline json matrix_to_json(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "matrix format holds square matrices only");
  json entries = json::array();
  for (const cplx& z : m.entries()) entries.push_back(complex_to_json(z));
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const json& j) {
  detail::require_only(j, {"dim", "entries"}, "matrix");
  if (!j.at("dim").is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"dim\" must be a count");
  const auto dim = j.at("dim").get<std::size_t>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != dim * dim) {
    throw Error(ErrorCode::ParseError, "\"entries\" must hold dim*dim pairs");
  }
  std::vector<cplx> data;
  data.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    data.push_back(detail::complex_from_json(entries[k], "entries[" + std::to_string(k) + "]"));
  }
  return Matrix(dim, dim, std::move(data));
}

}  // namespace nevpick::io
