#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sforest/graph.hpp"
#include "sforest/relationship.hpp"
#include "sforest/sterm.hpp"

namespace sforest {

inline constexpr std::size_t kMaxCollapseVertices = 8;
inline constexpr std::size_t kMaxVerifyVertices = 7;

using Edge = std::pair<std::size_t, std::size_t>;

/// The 1-skeleton of the permutohedron: all permutations of a domain in
/// lexicographic order, joined when they differ by swapping two neighbours.
struct PermutohedronSkeleton {
  std::vector<VarName> domain;
  std::vector<Permutation> vertices;
  std::vector<Edge> edges;  // (i, j) with i < j, sorted
};

/// Throws BudgetExceeded unless 1 <= |domain| <= 8.
PermutohedronSkeleton permutohedron(std::vector<VarName> domain);

/// The forest of t_forests(g) whose linear extensions contain `p`: the first
/// element heads the record of a connected graph, and a disconnected graph
/// records each component from the subsequence on it.
/// Throws DomainMismatch unless p orders exactly the vertices of g.
STerm class_of_permutation(const Graph& g, const Permutation& p);

/// The permutohedron with each permutation replaced by its class. Edges join
/// distinct classes that contain neighbouring permutations.
struct CollapseSkeleton {
  Graph graph;
  std::vector<Permutation> permutations;  // lexicographic
  std::vector<std::size_t> class_of;      // index into vertices, per permutation
  std::vector<STerm> vertices;            // sorted
  std::vector<Edge> edges;                // (i, j) with i < j, sorted
  std::vector<std::size_t> class_sizes;   // per vertex
};

/// Throws BudgetExceeded beyond 8 vertices.
CollapseSkeleton collapse(const Graph& g);

struct VerificationReport {
  std::string proposition;
  bool passed = true;
  std::size_t checked = 0;
  nlohmann::json counterexample;  // null when passed
};

nlohmann::json to_json(const VerificationReport& report);

/// The linear-extension sets of the forests of g are pairwise disjoint and
/// cover every permutation. Throws BudgetExceeded beyond 7 vertices.
VerificationReport verify_partition(const Graph& g);

/// Each forest's linear extensions induce a connected subgraph of the
/// permutohedron skeleton. Throws BudgetExceeded beyond 7 vertices.
VerificationReport verify_class_connected(const Graph& g);

enum class SkeletonFormat { Dot, Json };

/// Deterministic DOT or JSON rendering. Nodes are rendered S-terms or
/// space-separated permutation sequences.
std::string export_skeleton(const CollapseSkeleton& s, SkeletonFormat format);
std::string export_skeleton(const PermutohedronSkeleton& s, SkeletonFormat format);

}  // namespace sforest
