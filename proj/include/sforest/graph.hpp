#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sforest/relation.hpp"
#include "sforest/sterm.hpp"

namespace sforest {

/// A finite simple graph on a nonempty set of at most 64 named vertices.
/// Vertices are sorted; each vertex's neighbourhood is a bit mask over
/// vertex positions.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  /// Throws InvalidGraph on an empty vertex set, loops, or endpoints outside
  /// the vertex set, and BudgetExceeded beyond kMaxVertices.
  Graph(std::vector<VarName> vertices, const std::vector<VarPair>& edges);

  /// Reads a symmetric irreflexive relation as a graph (InvalidGraph otherwise).
  static Graph from_relation(const Relation& r);

  const std::vector<VarName>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::uint64_t all_mask() const noexcept;

  /// Each edge once, endpoints in order, edges sorted.
  std::vector<VarPair> edges() const;
  std::size_t edge_count() const;

  std::optional<std::size_t> index_of(const VarName& v) const;
  bool adjacent(const VarName& a, const VarName& b) const;
  std::uint64_t neighbours(std::size_t i) const noexcept { return adjacency_[i]; }

  /// Connected components of the subgraph induced by `mask`, each as a mask,
  /// ordered by lowest vertex.
  std::vector<std::uint64_t> components_within(std::uint64_t mask) const;

  /// The induced subgraph on a nonempty vertex mask.
  Graph induced(std::uint64_t mask) const;

  /// The symmetric irreflexive relation of the graph.
  Relation as_relation() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<VarName> vertices_;
  std::vector<std::uint64_t> adjacency_;
};

bool graph_connected(const Graph& g);

/// Components as induced subgraphs, ordered by least vertex name.
std::vector<Graph> graph_components(const Graph& g);

/// G − x; nullopt when x is the only vertex. Throws NotInGraph.
std::optional<Graph> remove_vertex(const Graph& g, const VarName& x);

/// The S-forests recording the ways to take a graph apart by vertex removal.
struct ForestSet {
  Graph graph;
  std::vector<STerm> forests;  // sorted, distinct
};

/// The inductive set of destruction records: a single vertex x gives {x};
/// a connected graph gives {x * t | t recorded for G − x}; a disconnected
/// graph gives the sums of one record per component.
ForestSet t_forests(const Graph& g);

/// True iff `t` belongs to t_forests(g), decided by following the same
/// inductive clauses downward without enumerating the set.
bool is_t_member(const Graph& g, const STerm& t);

/// The unique graph on `vertices` whose forest set is `forests` (when the set
/// is a genuine image): x and y are adjacent iff no forest has a sum with x
/// and y in different summands. Throws MalformedForestSet when `forests` is
/// empty or holds a term that is not an S-forest on exactly `vertices`.
Graph reconstruct_graph(std::vector<VarName> vertices, const std::vector<STerm>& forests);

/// The residual graphs that are being taken apart in parallel at one instant.
using FilmFrame = std::vector<Graph>;

/// Replays a forest as a destruction of `g`. Each step removes, in every
/// parallel branch, the next recorded vertex; a recorded sum splits the
/// branch into its summands' parts. The first frame shows the starting
/// branches and the last frame is empty. Throws NotAForestOf.
std::vector<FilmFrame> destruction_film(const Graph& g, const STerm& t);

}  // namespace sforest
