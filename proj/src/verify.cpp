#include "sforest/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "sforest/enumerate.hpp"
#include "sforest/relationship.hpp"
#include "sforest/serialize.hpp"

namespace sforest {
namespace {

using json = nlohmann::json;

class Suite {
 public:
  explicit Suite(std::string id) { report_.proposition = std::move(id); }

  // Records one instance; the first failure is kept as the counterexample.
  void check(bool ok, const std::function<json()>& describe) {
    ++report_.checked;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
  }

  VerificationReport finish() { return std::move(report_); }

 private:
  VerificationReport report_;
};

json pair_json(const Relation& r, const Relation& s) { return {{"r", to_json(r)}, {"s", to_json(s)}}; }

// Ordered splits of a domain into two nonempty disjoint parts.
template <typename F>
void for_each_split(const std::vector<VarName>& domain, F&& f) {
  for (const auto& left : subsets_of(domain)) {
    if (left.empty() || left.size() == domain.size()) continue;
    std::vector<VarName> right;
    std::set_difference(domain.begin(), domain.end(), left.begin(), left.end(), std::back_inserter(right));
    f(left, right);
  }
}

// Every (r, s) on an ordered split of the first n standard names, 2 <= n <= max_n.
template <typename Gen, typename F>
void for_each_pair(std::size_t max_n, Gen&& generate, F&& f) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    for_each_split(standard_names(n), [&](const auto& left, const auto& right) {
      const auto rs = generate(left);
      const auto ss = generate(right);
      for (const Relation& r : rs) {
        for (const Relation& s : ss) f(r, s);
      }
    });
  }
}

std::vector<Relation> ftp_relations(std::size_t max_n) {
  std::vector<Relation> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (Relation& r : all_partial_orders(standard_names(n))) {
      if (is_trifunctional(r)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<STerm> terms_up_to(std::size_t max_n) {
  std::vector<STerm> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto ts = all_diversified_terms(standard_names(n));
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

bool permutations_connected(const std::vector<Permutation>& perms) {
  if (perms.empty()) return false;
  std::set<std::vector<VarName>> members;
  for (const Permutation& p : perms) members.insert(p.sequence());
  std::set<std::vector<VarName>> seen{perms.front().sequence()};
  std::deque<std::vector<VarName>> queue{perms.front().sequence()};
  while (!queue.empty()) {
    std::vector<VarName> q = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      std::swap(q[k], q[k + 1]);
      if (members.count(q) && seen.insert(q).second) queue.push_back(q);
      std::swap(q[k], q[k + 1]);
    }
  }
  return seen.size() == members.size();
}

bool respects(const Permutation& p, const Relation& r) {
  const Relation order = p.to_relation();
  return r.bits().is_subset_of(order.bits());
}

std::vector<Graph> graphs_for(const VerifyOptions& o, std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto gs = all_graphs(standard_names(n));
    out.insert(out.end(), gs.begin(), gs.end());
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.random_count; ++i) out.push_back(random_graph(standard_names(5 + i % 2), rng));
  return out;
}

// ---- relations ----------------------------------------------------------

VerificationReport prop_2_1(std::size_t n) {
  Suite suite("2.1");
  for_each_pair(n, all_relations, [&](const Relation& a, const Relation& b) {
    const bool both = is_partial_order(a) && is_partial_order(b);
    suite.check(both == is_partial_order(disjoint_union(a, b)) && both == is_partial_order(concatenation(a, b)),
                [&] { return pair_json(a, b); });
  });
  return suite.finish();
}

VerificationReport prop_2_2(std::size_t n) {
  Suite suite("2.2");
  for_each_pair(n, all_relations, [&](const Relation& a, const Relation& b) {
    const bool both = is_trifunctional(a) && is_trifunctional(b);
    suite.check(both == is_trifunctional(disjoint_union(a, b)) && both == is_trifunctional(concatenation(a, b)),
                [&] { return pair_json(a, b); });
  });
  return suite.finish();
}

VerificationReport prop_2_3(std::size_t n) {
  Suite suite("2.3");
  for_each_pair(n, all_relations, [&](const Relation& a, const Relation& b) {
    suite.check(!is_connected(disjoint_union(a, b)) && is_connected(concatenation(a, b)),
                [&] { return pair_json(a, b); });
  });
  return suite.finish();
}

VerificationReport prop_2_4(std::size_t n) {
  Suite suite("2.4");
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Relation& r : all_relations(standard_names(k))) {
      const auto parts = connected_components(r);
      bool ok = !parts.empty();
      Relation rebuilt;
      for (const Relation& p : parts) {
        ok = ok && !p.empty() && is_connected(p);
        rebuilt = disjoint_union(rebuilt, p);
      }
      suite.check(ok && rebuilt == r, [&] { return json{{"r", to_json(r)}}; });
    }
  }
  // Decompositions of a sum are the union of the summands' decompositions.
  for_each_pair(n, all_relations, [&](const Relation& a, const Relation& b) {
    auto expected = connected_components(a);
    for (Relation& p : connected_components(b)) expected.push_back(std::move(p));
    std::sort(expected.begin(), expected.end(),
              [](const Relation& x, const Relation& y) { return x.domain().front() < y.domain().front(); });
    suite.check(connected_components(disjoint_union(a, b)) == expected, [&] { return pair_json(a, b); });
  });
  return suite.finish();
}

VerificationReport prop_2_5(std::size_t n) {
  Suite suite("2.5");
  for (std::size_t k = 2; k <= n; ++k) {
    for_each_split(standard_names(k), [&](const auto& left, const auto& right) {
      const auto rs = all_relations(left);
      for (const Relation& s : all_relations(right)) {
        std::map<Relation, const Relation*> after;
        std::map<Relation, const Relation*> before;
        for (const Relation& r : rs) {
          const bool fresh_after = after.emplace(concatenation(r, s), &r).second;
          const bool fresh_before = before.emplace(concatenation(s, r), &r).second;
          suite.check(fresh_after && fresh_before, [&] { return pair_json(r, s); });
        }
      }
    });
  }
  return suite.finish();
}

VerificationReport prop_2_6(std::size_t n) {
  Suite suite("2.6");
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<Relation, std::pair<Relation, Relation>> seen;
    for (const auto& left : subsets_of(standard_names(k))) {
      if (left.size() == k) continue;
      std::vector<VarName> right;
      const auto all = standard_names(k);
      std::set_difference(all.begin(), all.end(), left.begin(), left.end(), std::back_inserter(right));
      const auto rs = all_relations(left);
      for (const Relation& s : all_relations(right)) {
        if (s.size() != 1 && is_connected(s)) continue;
        for (const Relation& r : rs) {
          auto [it, fresh] = seen.emplace(concatenation(r, s), std::pair{r, s});
          suite.check(fresh, [&] {
            return json{{"first", pair_json(it->second.first, it->second.second)}, {"second", pair_json(r, s)}};
          });
        }
      }
    }
  }
  return suite.finish();
}

// ---- terms --------------------------------------------------------------

VerificationReport prop_3_1(std::size_t n) {
  Suite suite("3.1");
  std::map<Relation, STerm> seen;
  for (const STerm& t : terms_up_to(n)) {
    auto [it, fresh] = seen.emplace(kappa(t), t);
    suite.check(fresh, [&] { return json{{"terms", {render_sterm(it->second), render_sterm(t)}}}; });
  }
  return suite.finish();
}

VerificationReport prop_3_2(const std::vector<Relation>& ftps) {
  Suite suite("3.2");
  for (const Relation& r : ftps) {
    if (r.size() < 2 || !is_connected(r)) continue;
    const auto split = prime_concat_split(r);
    suite.check(split && !split->first.empty() && !split->second.empty() &&
                    concatenation(split->first, split->second) == r,
                [&] { return json{{"r", to_json(r)}}; });
  }
  return suite.finish();
}

VerificationReport prop_3_3(const std::vector<Relation>& ftps, std::size_t n) {
  Suite suite("3.3");
  for (const Relation& r : ftps) {
    const STerm t = sterm_of_ftp(r);
    suite.check(is_diversified(t) && kappa(t) == r, [&] { return json{{"r", to_json(r)}}; });
  }
  // Every FTP is reached, so the counts agree size by size.
  for (std::size_t k = 1; k <= n; ++k) {
    const auto names = standard_names(k);
    const auto hits = std::count_if(ftps.begin(), ftps.end(), [&](const Relation& r) { return r.domain() == names; });
    const auto terms = all_diversified_terms(names).size();
    suite.check(static_cast<std::size_t>(hits) == terms,
                [&] { return json{{"size", k}, {"ftp", hits}, {"terms", terms}}; });
  }
  return suite.finish();
}

// ---- relationships ------------------------------------------------------

VerificationReport prop_4_1(std::size_t n) {
  Suite suite("4.1");
  auto check = [&](const Relation& r, const Relation& s) {
    const Relationship lhs = map_E(disjoint_union(r, s));
    suite.check(lhs == shuffle_sum(map_E(r), map_E(s), ShuffleMode::All), [&] { return pair_json(r, s); });
  };
  for_each_pair(std::min<std::size_t>(n, 3), all_relations, check);
  if (n >= 4) {
    for_each_split(standard_names(4), [&](const auto& left, const auto& right) {
      for (const Relation& r : all_partial_orders(left)) {
        for (const Relation& s : all_partial_orders(right)) check(r, s);
      }
    });
  }
  return suite.finish();
}

VerificationReport prop_4_2(std::size_t n) {
  Suite suite("4.2");
  for_each_pair(n, all_partial_orders, [&](const Relation& r, const Relation& s) {
    suite.check(map_P(disjoint_union(r, s)) == shuffle_sum(map_P(r), map_P(s), ShuffleMode::PartialOrders),
                [&] { return pair_json(r, s); });
  });
  return suite.finish();
}

VerificationReport prop_4_3(std::size_t n) {
  Suite suite("4.3");
  for_each_pair(n, all_partial_orders, [&](const Relation& r, const Relation& s) {
    suite.check(map_P(concatenation(r, s)) == concat_product(map_P(r), map_P(s)) &&
                    !find_q1_not_q2_witness(r, s, true),
                [&] { return pair_json(r, s); });
  });
  return suite.finish();
}

template <typename F>
void for_each_incomparable(std::size_t n, F&& f) {
  for (std::size_t k = 2; k <= n; ++k) {
    for (const Relation& r : all_partial_orders(standard_names(k))) {
      for (const VarName& x : r.domain()) {
        for (const VarName& y : r.domain()) {
          if (x != y && !r.contains(y, x)) f(r, x, y);
        }
      }
    }
  }
}

json incomparable_json(const Relation& r, const VarName& x, const VarName& y) {
  return {{"r", to_json(r)}, {"pair", {x.str(), y.str()}}};
}

VerificationReport prop_4_4(std::size_t n) {
  Suite suite("4.4");
  for_each_incomparable(n, [&](const Relation& r, const VarName& x, const VarName& y) {
    const Relation e = extend_with_pair(r, x, y);
    suite.check(is_partial_order(e) && r.bits().is_subset_of(e.bits()) && e.contains(x, y),
                [&] { return incomparable_json(r, x, y); });
  });
  return suite.finish();
}

VerificationReport prop_4_5(std::size_t n) {
  Suite suite("4.5");
  for_each_incomparable(n, [&](const Relation& r, const VarName& x, const VarName& y) {
    const Relation l = linear_extension_through(r, x, y);
    suite.check(is_linear_order(l) && r.bits().is_subset_of(l.bits()) && l.contains(x, y),
                [&] { return incomparable_json(r, x, y); });
  });
  return suite.finish();
}

VerificationReport prop_4_6(std::size_t n) {
  Suite suite("4.6");
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::set<PairSet>, Relation> seen;
    for (const Relation& r : all_partial_orders(standard_names(k))) {
      auto [it, fresh] = seen.emplace(map_L(r).family(), r);
      suite.check(fresh, [&] { return json{{"first", to_json(it->second)}, {"second", to_json(r)}}; });
    }
  }
  return suite.finish();
}

template <typename F>
void for_each_order_pair(const VerifyOptions& o, std::size_t n, std::uint64_t stream, F&& f) {
  for_each_pair(n, all_partial_orders, f);
  std::mt19937_64 rng(o.seed ^ stream);
  for (std::size_t i = 0; i < o.random_count; ++i) {
    const auto names = standard_names(6 + i % 2);
    const std::size_t cut = 1 + static_cast<std::size_t>(rng() % (names.size() - 1));
    const std::vector<VarName> left(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(cut));
    const std::vector<VarName> right(names.begin() + static_cast<std::ptrdiff_t>(cut), names.end());
    const Relation r = random_partial_order(left, rng);
    const Relation s = random_partial_order(right, rng);
    f(r, s);
  }
}

VerificationReport prop_4_7(const VerifyOptions& o, std::size_t n) {
  Suite suite("4.7");
  for_each_order_pair(o, n, 47, [&](const Relation& r, const Relation& s) {
    suite.check(map_L(disjoint_union(r, s)) == shuffle_sum(map_L(r), map_L(s), ShuffleMode::LinearOrders),
                [&] { return pair_json(r, s); });
  });
  return suite.finish();
}

VerificationReport prop_4_8(const VerifyOptions& o, std::size_t n) {
  Suite suite("4.8");
  for_each_order_pair(o, n, 48, [&](const Relation& r, const Relation& s) {
    suite.check(map_L(concatenation(r, s)) == concat_product(map_L(r), map_L(s)),
                [&] { return pair_json(r, s); });
  });
  return suite.finish();
}

// ---- forests ------------------------------------------------------------

VerificationReport prop_5_1(const std::vector<STerm>& terms) {
  Suite suite("5.1");
  for (const STerm& t : terms) {
    suite.check(is_s_forest(t) == is_ftp_forest(kappa(t)), [&] { return json{{"term", render_sterm(t)}}; });
  }
  return suite.finish();
}

VerificationReport prop_5_2(const std::vector<STerm>& terms) {
  Suite suite("5.2");
  for (const STerm& t : terms) {
    const auto root = ftp_tree_root(kappa(t));
    bool ok = is_s_tree(t) == root.has_value();
    if (ok && root) ok = t.is_var() ? t.name() == *root : t.args().front().name() == *root;
    suite.check(ok, [&] { return json{{"term", render_sterm(t)}}; });
  }
  return suite.finish();
}

VerificationReport prop_5_3(const std::vector<Relation>& ftps, std::size_t n) {
  Suite suite("5.3");
  for (const Relation& r : ftps) {
    if (!is_ftp_forest(r)) continue;
    const STerm t = sterm_of_ftp(r);
    suite.check(is_s_forest(t) && kappa(t) == r, [&] { return json{{"r", to_json(r)}}; });
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const auto names = standard_names(k);
    const auto forests = std::count_if(ftps.begin(), ftps.end(), [&](const Relation& r) {
      return r.domain() == names && is_ftp_forest(r);
    });
    const auto expected = all_s_forests(names).size();
    suite.check(static_cast<std::size_t>(forests) == expected,
                [&] { return json{{"size", k}, {"ftp_forests", forests}, {"s_forests", expected}}; });
  }
  return suite.finish();
}

VerificationReport prop_5_4(const std::vector<Relation>& ftps) {
  Suite suite("5.4");
  for (const Relation& r : ftps) {
    if (!is_ftp_tree(r)) continue;
    const STerm t = sterm_of_ftp(r);
    suite.check(is_s_tree(t) && kappa(t) == r, [&] { return json{{"r", to_json(r)}}; });
  }
  return suite.finish();
}

VerificationReport prop_5_5(const VerifyOptions& o, std::size_t n, const std::vector<Graph>& graphs) {
  Suite suite("5.5");
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Relation& r : all_partial_orders(standard_names(k))) {
      suite.check(permutations_connected(linear_extensions(r)), [&] { return json{{"r", to_json(r)}}; });
    }
  }
  std::mt19937_64 rng(o.seed ^ 55);
  for (std::size_t i = 0; i < o.random_count; ++i) {
    const Relation r = random_partial_order(standard_names(6), rng);
    suite.check(permutations_connected(linear_extensions(r)), [&] { return json{{"r", to_json(r)}}; });
  }
  for (const Graph& g : graphs) {
    const VerificationReport rep = verify_class_connected(g);
    suite.check(rep.passed, [&] { return json{{"graph", to_json(g)}, {"detail", rep.counterexample}}; });
  }
  return suite.finish();
}

VerificationReport prop_5_6(const std::vector<Graph>& graphs) {
  Suite suite("5.6");
  for (const Graph& g : graphs) {
    const ForestSet fs = t_forests(g);
    const std::set<STerm> forests(fs.forests.begin(), fs.forests.end());
    for (const Permutation& p : permutohedron(g.vertices()).vertices) {
      const STerm t = class_of_permutation(g, p);
      suite.check(forests.count(t) && respects(p, kappa(t)), [&] {
        return json{{"graph", to_json(g)}, {"permutation", p.str()}, {"class", render_sterm(t)}};
      });
    }
  }
  return suite.finish();
}

VerificationReport prop_5_7(const std::vector<Graph>& graphs) {
  Suite suite("5.7");
  for (const Graph& g : graphs) {
    const VerificationReport rep = verify_partition(g);
    suite.check(rep.passed, [&] { return json{{"graph", to_json(g)}, {"detail", rep.counterexample}}; });
  }
  return suite.finish();
}

}  // namespace

std::vector<VerificationReport> verify_all(const VerifyOptions& o) {
  const std::size_t rel_n = std::min<std::size_t>(o.max_n, 4);
  const std::size_t order_n = std::min<std::size_t>(o.max_n, 5);
  const std::size_t pair_n = std::min<std::size_t>(o.max_n, 4);
  const std::size_t graph_n = std::min<std::size_t>(o.max_n, 5);

  const std::vector<Relation> ftps = ftp_relations(order_n);
  const std::vector<STerm> terms = terms_up_to(order_n);
  const std::vector<Graph> graphs = graphs_for(o, graph_n);

  std::vector<VerificationReport> out;
  out.push_back(prop_2_1(rel_n));
  out.push_back(prop_2_2(rel_n));
  out.push_back(prop_2_3(rel_n));
  out.push_back(prop_2_4(rel_n));
  out.push_back(prop_2_5(rel_n));
  out.push_back(prop_2_6(rel_n));
  out.push_back(prop_3_1(order_n));
  out.push_back(prop_3_2(ftps));
  out.push_back(prop_3_3(ftps, order_n));
  out.push_back(prop_4_1(pair_n));
  out.push_back(prop_4_2(pair_n));
  out.push_back(prop_4_3(pair_n));
  out.push_back(prop_4_4(order_n));
  out.push_back(prop_4_5(order_n));
  out.push_back(prop_4_6(order_n));
  out.push_back(prop_4_7(o, pair_n));
  out.push_back(prop_4_8(o, pair_n));
  out.push_back(prop_5_1(terms));
  out.push_back(prop_5_2(terms));
  out.push_back(prop_5_3(ftps, order_n));
  out.push_back(prop_5_4(ftps));
  out.push_back(prop_5_5(o, order_n, graphs));
  out.push_back(prop_5_6(graphs));
  out.push_back(prop_5_7(graphs));
  std::sort(out.begin(), out.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.proposition < b.proposition; });
  return out;
}

json verify_report_json(const VerifyOptions& o, const std::vector<VerificationReport>& reports) {
  json props = json::array();
  bool passed = true;
  for (const VerificationReport& r : reports) {
    props.push_back(to_json(r));
    passed = passed && r.passed;
  }
  return {{"max_n", o.max_n},
          {"random_count", o.random_count},
          {"seed", o.seed},
          {"status", passed ? "pass" : "fail"},
          {"propositions", props}};
}

}  // namespace sforest
