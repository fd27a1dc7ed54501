#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sforest/enumerate.hpp"

using namespace sforest;
using testing::error_kind;

TEST_CASE("standard names") {
  CHECK(standard_names(4) == vars({"u", "x", "y", "z"}));
  CHECK(standard_names(0).empty());
  CHECK(error_kind([] { standard_names(9); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("subsets") {
  const auto subs = subsets_of(vars({"a", "b", "c"}));
  CHECK(subs.size() == 8);
  CHECK(subs.front().empty());
  CHECK(subs.back() == vars({"a", "b", "c"}));
}

TEST_CASE("relations and partial orders") {
  CHECK(all_relations(standard_names(2)).size() == 16);
  CHECK(all_relations(standard_names(0)).size() == 1);
  CHECK(error_kind([] { all_relations(standard_names(5)); }) == ErrorKind::BudgetExceeded);
  for (std::size_t n = 0; n <= 3; ++n) {
    std::set<Relation> filtered;
    for (const auto& r : all_relations(standard_names(n)))
      if (oracle::is_partial_order(oracle::from(r))) filtered.insert(r);
    const auto built = all_partial_orders(standard_names(n));
    CHECK(std::set<Relation>(built.begin(), built.end()) == filtered);
    CHECK(built.size() == filtered.size());
  }
  CHECK(error_kind([] { all_partial_orders(standard_names(7)); }) == ErrorKind::BudgetExceeded);
  CHECK(error_kind([] { all_relations(vars({"x", "x"})); }) == ErrorKind::InvalidInput);
}

TEST_CASE("terms, forests and graphs") {
  CHECK(all_diversified_terms({}).empty());
  CHECK(all_diversified_terms(vars({"x", "y"})).size() == 3);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(all_s_forests(standard_names(n)).size() == static_cast<std::size_t>(std::pow(n + 1, n - 1)));
  }
  CHECK(all_graphs(standard_names(4)).size() == 64);
  CHECK(all_graphs(standard_names(1)).size() == 1);
}

TEST_CASE("seeded random generators are reproducible and well formed") {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int i = 0; i < 50; ++i) {
    const auto ga = random_graph(standard_names(6), a);
    const auto gb = random_graph(standard_names(6), b);
    CHECK(ga == gb);
    const auto ra = random_partial_order(standard_names(6), a);
    const auto rb = random_partial_order(standard_names(6), b);
    CHECK(ra == rb);
    CHECK(oracle::is_partial_order(oracle::from(ra)));
  }
}
