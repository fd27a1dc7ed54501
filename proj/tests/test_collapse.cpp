#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sforest/collapse.hpp"
#include "sforest/enumerate.hpp"

using namespace sforest;
using testing::error_kind;
using testing::graph;

namespace {

const Graph kPath3 = graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
const Graph kTrianglePlusPoint = graph({"x", "y", "z", "u"}, {{"x", "y"}, {"x", "z"}, {"y", "z"}});

Permutation seq(std::initializer_list<const char*> names) { return Permutation(vars(names)); }

std::size_t adjacent_swaps(const Permutation& a, const Permutation& b) {
  const auto& p = a.sequence();
  const auto& q = b.sequence();
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < p.size(); ++i) diffs += p[i] != q[i];
  if (diffs != 2) return 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] == q[i + 1] && p[i + 1] == q[i]) return 1;
  }
  return 0;
}

// The forest whose linear extensions contain p, found by scanning every forest.
STerm class_by_search(const Graph& g, const Permutation& p) {
  const auto wanted = oracle::strings_of(p);
  std::vector<STerm> hits;
  for (const auto& t : t_forests(g).forests) {
    for (const auto& l : oracle::linear_extensions(oracle::kappa(t))) {
      if (l == wanted) hits.push_back(t);
    }
  }
  REQUIRE(hits.size() == 1);
  return hits.front();
}

}  // namespace

TEST_CASE("permutohedron skeletons") {
  const auto two = permutohedron(vars({"x", "y"}));
  CHECK(two.vertices.size() == 2);
  CHECK(two.edges.size() == 1);
  const auto three = permutohedron(vars({"x", "y", "z"}));
  CHECK(three.vertices.size() == 6);
  CHECK(three.edges.size() == 6);
  const auto four = permutohedron(vars({"x", "y", "z", "u"}));
  CHECK(four.vertices.size() == 24);
  CHECK(four.edges.size() == 36);
  CHECK(four.vertices.front().str() == "u x y z");
  CHECK(error_kind([] { permutohedron({}); }) == ErrorKind::BudgetExceeded);
  CHECK(error_kind([] { permutohedron(standard_names(8)); }) != ErrorKind::BudgetExceeded);

  for (std::size_t n = 1; n <= 5; ++n) {
    const auto s = permutohedron(standard_names(n));
    CHECK(s.vertices.size() == oracle::factorial(n));
    std::vector<std::size_t> degree(s.vertices.size(), 0);
    for (const auto& [a, b] : s.edges) {
      CHECK(a < b);
      CHECK(adjacent_swaps(s.vertices[a], s.vertices[b]) == 1);
      ++degree[a];
      ++degree[b];
    }
    for (std::size_t d : degree) CHECK(d == n - 1);
    std::size_t brute = 0;
    for (std::size_t a = 0; a < s.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < s.vertices.size(); ++b) brute += adjacent_swaps(s.vertices[a], s.vertices[b]);
    CHECK(brute == s.edges.size());
  }
}

TEST_CASE("class of a permutation") {
  CHECK(render_sterm(class_of_permutation(kPath3, seq({"x", "z", "y"}))) == "x*z*y");
  CHECK(render_sterm(class_of_permutation(kPath3, seq({"y", "x", "z"}))) == "y*(x+z)");
  for (const auto& p : {seq({"x", "y", "z", "u"}), seq({"x", "y", "u", "z"}), seq({"x", "u", "y", "z"}),
                        seq({"u", "x", "y", "z"})}) {
    CHECK(class_of_permutation(kTrianglePlusPoint, p) == parse_sterm("(x*y*z)+u"));
  }
  CHECK(error_kind([] { class_of_permutation(kPath3, seq({"x", "y"})); }) == ErrorKind::DomainMismatch);
  CHECK(error_kind([] { class_of_permutation(kPath3, seq({"x", "y", "u"})); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("greedy classes agree with the definitional search on every graph up to 4 vertices") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(standard_names(n))) {
      for (const auto& p : permutohedron(g.vertices()).vertices) {
        CHECK(class_of_permutation(g, p) == class_by_search(g, p));
      }
    }
  }
}

TEST_CASE("collapse examples") {
  const auto hexagon = collapse(kTrianglePlusPoint);
  CHECK(hexagon.vertices.size() == 6);
  CHECK(hexagon.edges.size() == 6);
  std::vector<std::size_t> degree(6, 0);
  for (const auto& [a, b] : hexagon.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (std::size_t d : degree) CHECK(d == 2);
  const auto cls = std::find(hexagon.vertices.begin(), hexagon.vertices.end(), parse_sterm("(x*y*z)+u"));
  REQUIRE(cls != hexagon.vertices.end());
  CHECK(hexagon.class_sizes[static_cast<std::size_t>(cls - hexagon.vertices.begin())] == 4);

  const auto cycle = collapse(graph({"x", "y", "z", "u"}, {{"x", "y"}, {"x", "u"}, {"y", "z"}, {"z", "u"}}));
  CHECK(cycle.vertices.size() == 20);
  CHECK(error_kind([] { collapse(Graph(standard_names(8), {})); }) != ErrorKind::BudgetExceeded);
}

TEST_CASE("collapse invariants on every graph up to 4 vertices") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(standard_names(n))) {
      const auto s = collapse(g);
      const auto fs = t_forests(g);
      CHECK(s.vertices == fs.forests);
      REQUIRE(s.class_of.size() == s.permutations.size());
      for (std::size_t k = 0; k < s.vertices.size(); ++k) {
        CHECK(s.class_sizes[k] == count_linear_extensions(kappa(s.vertices[k])));
      }
      // the preimage of each forest is exactly its set of linear extensions
      std::map<std::size_t, std::set<std::vector<std::string>>> preimage;
      for (std::size_t i = 0; i < s.permutations.size(); ++i) {
        preimage[s.class_of[i]].insert(oracle::strings_of(s.permutations[i]));
      }
      for (std::size_t k = 0; k < s.vertices.size(); ++k) {
        const auto exts = oracle::linear_extensions(oracle::kappa(s.vertices[k]));
        CHECK(preimage[k] == std::set<std::vector<std::string>>(exts.begin(), exts.end()));
      }
      // edges are exactly the class pairs joined by some adjacent swap
      std::set<Edge> expected;
      for (std::size_t a = 0; a < s.permutations.size(); ++a) {
        for (std::size_t b = a + 1; b < s.permutations.size(); ++b) {
          if (!adjacent_swaps(s.permutations[a], s.permutations[b])) continue;
          const auto ca = s.class_of[a];
          const auto cb = s.class_of[b];
          if (ca != cb) expected.emplace(std::min(ca, cb), std::max(ca, cb));
        }
      }
      CHECK(std::set<Edge>(s.edges.begin(), s.edges.end()) == expected);

      const auto part = verify_partition(g);
      CHECK(part.passed);
      CHECK(part.checked == oracle::factorial(n));
      CHECK(verify_class_connected(g).passed);
    }
  }
}

TEST_CASE("edgeless and complete extremes") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto edgeless = collapse(Graph(standard_names(n), {}));
    CHECK(edgeless.vertices.size() == 1);
    CHECK(edgeless.class_sizes.front() == oracle::factorial(n));
    CHECK(edgeless.edges.empty());

    const auto names = standard_names(n);
    std::vector<VarPair> all;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(names[i], names[j]);
    const auto full = collapse(Graph(names, all));
    const auto skeleton = permutohedron(names);
    CHECK(full.vertices.size() == oracle::factorial(n));
    // reading each product of variables as a sequence maps the skeleton onto the permutohedron
    std::set<std::pair<std::string, std::string>> collapsed;
    auto as_sequence = [](const STerm& t) {
      std::string out;
      if (t.is_var()) return t.name().str();
      for (const auto& a : t.args()) out += (out.empty() ? "" : " ") + a.name().str();
      return out;
    };
    for (const auto& [a, b] : full.edges) {
      auto sa = as_sequence(full.vertices[a]);
      auto sb = as_sequence(full.vertices[b]);
      collapsed.emplace(std::min(sa, sb), std::max(sa, sb));
    }
    std::set<std::pair<std::string, std::string>> original;
    for (const auto& [a, b] : skeleton.edges) {
      auto sa = skeleton.vertices[a].str();
      auto sb = skeleton.vertices[b].str();
      original.emplace(std::min(sa, sb), std::max(sa, sb));
    }
    CHECK(collapsed == original);
  }
}

TEST_CASE("partition and connectivity on seeded random graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_graph(standard_names(5 + i % 2), rng);
    CHECK(verify_partition(g).passed);
    CHECK(verify_class_connected(g).passed);
    CHECK(collapse(g).vertices.size() == t_forests(g).forests.size());
  }
  CHECK(error_kind([] { verify_partition(Graph(standard_names(8), {})); }) == ErrorKind::BudgetExceeded);
  CHECK(verify_partition(graph({"x"})).passed);
  CHECK(verify_class_connected(graph({"x"})).passed);
}

TEST_CASE("the four permutations of one hexagon class form a path") {
  const auto s = permutohedron(kTrianglePlusPoint.vertices());
  const std::set<std::string> members{"x y z u", "x y u z", "x u y z", "u x y z"};
  std::map<std::string, int> degree;
  for (const auto& [a, b] : s.edges) {
    const auto sa = s.vertices[a].str();
    const auto sb = s.vertices[b].str();
    if (members.count(sa) && members.count(sb)) {
      ++degree[sa];
      ++degree[sb];
    }
  }
  std::multiset<int> degrees;
  for (const auto& m : members) degrees.insert(degree[m]);
  CHECK(degrees == std::multiset<int>{1, 1, 2, 2});
}

TEST_CASE("exports") {
  const auto two = permutohedron(vars({"x", "y"}));
  CHECK(export_skeleton(two, SkeletonFormat::Dot) ==
        "graph permutohedron {\n  \"x y\";\n  \"y x\";\n  \"x y\" -- \"y x\";\n}\n");
  const auto json = nlohmann::json::parse(export_skeleton(two, SkeletonFormat::Json));
  CHECK(json["vertices"] == nlohmann::json({"x y", "y x"}));
  CHECK(json["edges"] == nlohmann::json::array({{0, 1}}));

  const auto path4 = graph({"x", "y", "z", "u"}, {{"x", "y"}, {"y", "z"}, {"z", "u"}});
  const auto text = export_skeleton(collapse(path4), SkeletonFormat::Json);
  CHECK(text == export_skeleton(collapse(path4), SkeletonFormat::Json));
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["vertices"].size() == 14);
  CHECK(doc["edges"].size() == 21);
  std::size_t total = 0;
  for (const auto& [label, size] : doc["class_sizes"].items()) total += size.get<std::size_t>();
  CHECK(total == 24);
  auto labels = doc["vertices"].get<std::vector<std::string>>();
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  for (const auto& e : doc["edges"]) CHECK(e[0].get<std::size_t>() < e[1].get<std::size_t>());

  const auto dot = export_skeleton(collapse(kTrianglePlusPoint), SkeletonFormat::Dot);
  CHECK(dot.rfind("graph collapse {\n", 0) == 0);
  CHECK(dot.find("\"u+x*y*z\" -- \"u+x*z*y\";") != std::string::npos);
}
