#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "sforest/error.hpp"
#include "sforest/graph.hpp"
#include "sforest/relation.hpp"

namespace testing {

using NamePair = std::pair<const char*, const char*>;

inline sforest::Relation rel(std::initializer_list<const char*> domain, std::initializer_list<NamePair> pairs = {}) {
  std::vector<sforest::VarPair> ps;
  for (const auto& [a, b] : pairs) ps.emplace_back(sforest::VarName(a), sforest::VarName(b));
  return sforest::Relation(sforest::vars(domain), ps);
}

inline sforest::Graph graph(std::initializer_list<const char*> vertices, std::initializer_list<NamePair> edges = {}) {
  std::vector<sforest::VarPair> es;
  for (const auto& [a, b] : edges) es.emplace_back(sforest::VarName(a), sforest::VarName(b));
  return sforest::Graph(sforest::vars(vertices), es);
}

/// The kind of the sforest::Error thrown by f, or nullopt if none is thrown.
template <typename F>
std::optional<sforest::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const sforest::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing
