#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sforest/graph.hpp"
#include "sforest/relation.hpp"
#include "sforest/sterm.hpp"

namespace sforest {

/// x, y, z, u, v, w, p, q: the first n of them, sorted. n <= 8.
std::vector<VarName> standard_names(std::size_t n);

/// Every subset of `domain`, as sorted vectors, in bitmask order.
std::vector<std::vector<VarName>> subsets_of(const std::vector<VarName>& domain);

/// All 2^(n^2) relations on a sorted domain. n <= 4.
std::vector<Relation> all_relations(const std::vector<VarName>& domain);

/// All strict partial orders on a sorted domain, built by inserting one
/// element at a time between a down-set and an up-set. n <= 6.
std::vector<Relation> all_partial_orders(const std::vector<VarName>& domain);

/// All canonical diversified S-terms whose variables are exactly `vars`.
/// n <= 6.
std::vector<STerm> all_diversified_terms(const std::vector<VarName>& vars);

/// All canonical S-forests whose variables are exactly `vars`. n <= 7.
std::vector<STerm> all_s_forests(const std::vector<VarName>& vars);

/// All 2^(n(n-1)/2) graphs on the given vertices. n <= 6.
std::vector<Graph> all_graphs(const std::vector<VarName>& vertices);

/// Each possible edge present independently with probability 1/2.
Graph random_graph(const std::vector<VarName>& vertices, std::mt19937_64& rng);

/// Transitive closure of a random subset of the pairs compatible with a
/// random linear order.
Relation random_partial_order(const std::vector<VarName>& domain, std::mt19937_64& rng);

}  // namespace sforest
