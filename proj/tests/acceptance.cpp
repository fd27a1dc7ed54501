// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sforest/cli.hpp"
#include "sforest/collapse.hpp"
#include "sforest/enumerate.hpp"
#include "sforest/relationship.hpp"
#include "sforest/serialize.hpp"

using namespace sforest;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string graph_file(const std::string& name) { return std::string(SFOREST_GRAPHS_DIR) + "/" + name; }

Graph load(const std::string& name) { return parse_graph(read_text_file(graph_file(name))); }

std::set<STerm> parsed(const std::vector<std::string>& labels) {
  std::set<STerm> out;
  for (const auto& l : labels) out.insert(parse_sterm(l));
  return out;
}

template <typename F>
void each_order_pair(std::size_t max_n, F&& f) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto names = standard_names(n);
    for (const auto& left : subsets_of(names)) {
      if (left.empty() || left.size() == n) continue;
      std::vector<VarName> right;
      std::set_difference(names.begin(), names.end(), left.begin(), left.end(), std::back_inserter(right));
      const auto rs = all_partial_orders(left);
      const auto ss = all_partial_orders(right);
      for (const auto& r : rs)
        for (const auto& s : ss) f(r, s);
    }
  }
}

std::string describe(const Relation& r, const Relation& s) { return to_json(r).dump() + " / " + to_json(s).dump(); }

// 1. Vertex counts of the seven example collapses, under one second.
Outcome vertex_counts() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"ex511.json", 24}, {"ex512.json", 22}, {"ex513.json", 20}, {"ex514.json", 18},
      {"ex515.json", 14}, {"ex516.json", 16}, {"ex52.json", 6}};
  std::ostringstream counts;
  for (const auto& [file, count] : expected) {
    const auto n = collapse(load(file)).vertices.size();
    counts << file << "=" << n << " ";
    o.require(n == count, file + " gave " + std::to_string(n) + ", expected " + std::to_string(count));
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail = counts.str() + "in " + std::to_string(t) + " s";
  return o;
}

// 2. Label sets of the path and triangle-plus-point collapses equal the figure labels.
Outcome label_sets() {
  Outcome o;
  const std::vector<std::string> path_labels = {
      "x*z*(y+u)", "y*(x+(z*u))",   "x*y*z*u", "z*((y*x)+u)", "z*((x*y)+u)", "u*z*y*x", "u*z*x*y",
      "y*(x+(u*z))", "x*y*u*z", "x*u*z*y", "u*x*z*y",     "u*x*y*z",     "u*y*(x+z)", "x*u*y*z"};
  const std::vector<std::string> hexagon_labels = {"(z*x*y)+u", "(z*y*x)+u", "(x*y*z)+u",
                                                   "(y*x*z)+u", "(x*z*y)+u", "(y*z*x)+u"};
  const auto path = collapse(load("ex515.json"));
  const auto hexagon = collapse(load("ex52.json"));
  o.require(path.vertices.size() == 14 && parsed(path_labels) == std::set<STerm>(path.vertices.begin(), path.vertices.end()),
            "path labels differ");
  o.require(hexagon.vertices.size() == 6 &&
                parsed(hexagon_labels) == std::set<STerm>(hexagon.vertices.begin(), hexagon.vertices.end()),
            "hexagon labels differ");
  if (o.passed) o.detail = "14 + 6 labels match as canonical forms";
  return o;
}

// 3. sterm_of_ftp and kappa are mutually inverse on FTPs of size at most 4.
Outcome isomorphism() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t relations = 0;
  std::size_t terms = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& r : all_relations(standard_names(n))) {
      const auto naive = oracle::from(r);
      if (!oracle::is_partial_order(naive) || !oracle::is_trifunctional(naive)) continue;
      ++relations;
      o.require(kappa(sterm_of_ftp(r)) == r, "kappa(sterm_of_ftp(r)) != r for " + to_json(r).dump());
    }
    for (const auto& t : all_diversified_terms(standard_names(n))) {
      ++terms;
      o.require(sterm_of_ftp(kappa(t)) == t, "sterm_of_ftp(kappa(t)) != t for " + render_sterm(t));
    }
  }
  o.require(relations == 1 + 3 + 19 + 195, "found " + std::to_string(relations) + " FTPs");
  o.require(terms == relations, "terms and FTPs differ in number");
  const double t = seconds_since(start);
  o.require(t < 10.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail = std::to_string(relations) + " relations, " + std::to_string(terms) + " terms in " +
                           std::to_string(t) + " s";
  return o;
}

// 4. E, P and L commute with the operations on partial-order pairs up to 4 elements.
Outcome homomorphisms() {
  Outcome o;
  std::size_t pairs = 0;
  each_order_pair(4, [&](const Relation& r, const Relation& s) {
    ++pairs;
    const auto sum = disjoint_union(r, s);
    const auto cat = concatenation(r, s);
    o.require(map_E(sum) == shuffle_sum(map_E(r), map_E(s), ShuffleMode::All), "E(r+s) at " + describe(r, s));
    o.require(map_P(sum) == shuffle_sum(map_P(r), map_P(s), ShuffleMode::PartialOrders),
              "P(r+s) at " + describe(r, s));
    o.require(map_P(cat) == concat_product(map_P(r), map_P(s)), "P(r.s) at " + describe(r, s));
    o.require(map_L(sum) == shuffle_sum(map_L(r), map_L(s), ShuffleMode::LinearOrders),
              "L(r+s) at " + describe(r, s));
    o.require(map_L(cat) == concat_product(map_L(r), map_L(s)), "L(r.s) at " + describe(r, s));
  });
  std::size_t orders = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::set<PairSet>> images;
    const auto all = all_partial_orders(standard_names(n));
    for (const auto& r : all) images.insert(map_L(r).family());
    orders += all.size();
    o.require(images.size() == all.size(), "L not one-one on " + std::to_string(n) + " elements");
  }
  const Relation x(vars({"x"}), {});
  const Relation y(vars({"y"}), {});
  const auto witness = find_q1_not_q2_witness(x, y);
  o.require(witness.has_value() && witness->contains(VarName("y"), VarName("x")), "no loose witness for x, y");
  o.require(!find_q1_not_q2_witness(x, y, true), "partial-order witness found for x, y");
  if (o.passed) {
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(orders) + " orders; witness " +
               to_json(*witness).dump();
  }
  return o;
}

// 5. Forest and tree correspondence on every diversified term up to 4 variables.
Outcome forest_correspondence() {
  Outcome o;
  std::size_t terms = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : all_diversified_terms(standard_names(n))) {
      ++terms;
      const Relation r = kappa(t);
      const bool forest = is_s_forest(t);
      o.require(forest == is_ftp_forest(r), "forest mismatch at " + render_sterm(t));
      o.require(forest == oracle::is_ftp_forest(oracle::from(r)), "naive forest mismatch at " + render_sterm(t));
      o.require(is_s_tree(t) == is_ftp_tree(r), "tree mismatch at " + render_sterm(t));
      if (is_ftp_forest(r)) o.require(is_s_forest(sterm_of_ftp(r)), "preimage not a forest: " + render_sterm(t));
      if (is_ftp_tree(r)) o.require(is_s_tree(sterm_of_ftp(r)), "preimage not a tree: " + render_sterm(t));
    }
  }
  if (o.passed) o.detail = std::to_string(terms) + " terms";
  return o;
}

// 6. Partition and class connectivity on all small graphs and 200 random ones, under 60 s.
Outcome partition_connectivity() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& g : all_graphs(standard_names(n))) graphs.push_back(std::move(g));
  }
  for (auto& g : all_graphs(vars({"x", "y", "z", "u"}))) graphs.push_back(std::move(g));
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) graphs.push_back(random_graph(standard_names(5 + i % 2), rng));
  for (const auto& g : graphs) {
    const auto part = verify_partition(g);
    const auto conn = verify_class_connected(g);
    o.require(part.passed, "partition fails on " + to_json(g).dump() + ": " + part.counterexample.dump());
    o.require(conn.passed, "connectivity fails on " + to_json(g).dump() + ": " + conn.counterexample.dump());
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail = std::to_string(graphs.size()) + " graphs in " + std::to_string(t) + " s";
  return o;
}

// 7. Complete graphs give n!, paths Catalan(n), edgeless graphs 1, matching the definitional oracle.
Outcome sequences() {
  Outcome o;
  static const char* order[] = {"x", "y", "z", "u", "v", "w"};
  auto check = [&](const Graph& g, std::size_t expected, const std::string& what) {
    const auto fs = t_forests(g);
    const auto brute = oracle::t_forests(oracle::from(g));
    o.require(fs.forests.size() == expected, what + " gave " + std::to_string(fs.forests.size()));
    o.require(brute.size() == expected, what + " oracle gave " + std::to_string(brute.size()));
    o.require(std::set<STerm>(fs.forests.begin(), fs.forests.end()) == brute, what + " differs from the oracle");
  };
  std::ostringstream seen;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto names = standard_names(n);
    std::vector<VarPair> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
    check(Graph(names, edges), oracle::factorial(n), "K" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<VarName> names;
    std::vector<VarPair> edges;
    for (std::size_t i = 0; i < n; ++i) {
      names.emplace_back(order[i]);
      if (i > 0) edges.emplace_back(names[i - 1], names[i]);
    }
    check(Graph(names, edges), oracle::catalan(n), "P" + std::to_string(n));
    seen << oracle::catalan(n) << (n < 6 ? "," : "");
  }
  for (std::size_t n = 1; n <= 6; ++n) check(Graph(standard_names(n), {}), 1, "E" + std::to_string(n));
  if (o.passed) o.detail = "n! up to 5, Catalan " + seen.str() + ", edgeless 1";
  return o;
}

std::string run_in_process(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = sforest::run(args, out, err);
  return out.str();
}

std::string run_binary(const std::string& command, int& code) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  code = pclose(pipe);
  return out;
}

// 8. Repeated collapse and verify invocations are byte-identical.
Outcome determinism() {
  Outcome o;
  std::vector<std::vector<std::string>> commands;
  for (const char* file : {"ex511.json", "ex512.json", "ex513.json", "ex514.json", "ex515.json", "ex516.json",
                           "ex52.json", "star5.txt"}) {
    commands.push_back({"collapse", graph_file(file), "--format", "json"});
    commands.push_back({"collapse", graph_file(file), "--format", "dot"});
  }
  commands.push_back({"verify", "--max-n", "4", "--random-count", "5", "--seed", "3"});
  for (const auto& args : commands) {
    int first_code = 0;
    int second_code = 0;
    const auto first = run_in_process(args, first_code);
    const auto second = run_in_process(args, second_code);
    o.require(first_code == 0 && second_code == 0, args[0] + " " + args[1] + " did not succeed");
    o.require(first == second && !first.empty(), args[0] + " " + args[1] + " output differs between runs");

    std::string command = SFOREST_CLI;
    for (const auto& a : args) command += " '" + a + "'";
    int a_code = 0;
    int b_code = 0;
    const auto a = run_binary(command, a_code);
    const auto b = run_binary(command, b_code);
    o.require(a_code == 0 && b_code == 0, command + " did not succeed");
    o.require(a == b && a == first, command + " output differs between processes");
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands, in process and as separate processes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 example collapse vertex counts", vertex_counts},
      {"2 label sets of the path and hexagon collapses", label_sets},
      {"3 terms and trifunctional partial orders are isomorphic", isomorphism},
      {"4 E, P, L homomorphisms and shuffle witnesses", homomorphisms},
      {"5 forest and tree correspondence", forest_correspondence},
      {"6 partition and class connectivity", partition_connectivity},
      {"7 factorial, Catalan and edgeless forest counts", sequences},
      {"8 deterministic collapse and verify output", determinism},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " :: " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
