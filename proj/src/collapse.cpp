#include "sforest/collapse.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>

#include "sforest/error.hpp"

namespace sforest {
namespace {

using IndexSeq = std::vector<std::uint8_t>;

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Position of `seq` in the lexicographic list of permutations of 0..n-1.
std::size_t lex_rank(const IndexSeq& seq) {
  const std::size_t n = seq.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller_after += seq[j] < seq[i];
    rank += smaller_after * factorial(n - 1 - i);
  }
  return rank;
}

void require_size(std::size_t n, std::size_t limit, const char* what) {
  if (n == 0 || n > limit) {
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + " needs between 1 and " +
                                               std::to_string(limit) + " elements, got " +
                                               std::to_string(n));
  }
}

IndexSeq indices_of(const Graph& g, const Permutation& p) {
  std::vector<VarName> sorted = p.sequence();
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.vertices()) {
    throw Error(ErrorKind::DomainMismatch, "permutation '" + p.str() + "' does not order the graph's vertices");
  }
  IndexSeq seq;
  seq.reserve(p.size());
  for (const VarName& v : p.sequence()) seq.push_back(static_cast<std::uint8_t>(*g.index_of(v)));
  return seq;
}

STerm classify(const Graph& g, const std::vector<std::size_t>& seq, std::uint64_t mask) {
  if (seq.size() == 1) return STerm::var(g.vertices()[seq.front()]);
  const auto parts = g.components_within(mask);
  if (parts.size() == 1) {
    const std::size_t head = seq.front();
    std::vector<std::size_t> rest(seq.begin() + 1, seq.end());
    return STerm::product(
        {STerm::var(g.vertices()[head]), classify(g, rest, mask & ~(std::uint64_t{1} << head))});
  }
  std::vector<STerm> summands;
  summands.reserve(parts.size());
  for (std::uint64_t part : parts) {
    std::vector<std::size_t> sub;
    for (std::size_t i : seq) {
      if (part & (std::uint64_t{1} << i)) sub.push_back(i);
    }
    summands.push_back(classify(g, sub, part));
  }
  return STerm::sum(std::move(summands));
}

std::vector<IndexSeq> all_index_sequences(std::size_t n) {
  IndexSeq seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<std::uint8_t>(i);
  std::vector<IndexSeq> out;
  out.reserve(factorial(n));
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::vector<Edge> adjacent_swap_edges(const std::vector<IndexSeq>& perms) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    IndexSeq q = perms[a];
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      std::swap(q[k], q[k + 1]);
      const std::size_t b = lex_rank(q);
      if (a < b) edges.emplace_back(a, b);
      std::swap(q[k], q[k + 1]);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string render_dot(const char* name, const std::vector<std::string>& labels,
                       const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const std::string& l : labels) os << "  " << quoted(l) << ";\n";
  for (const auto& [a, b] : edges) os << "  " << quoted(labels[a]) << " -- " << quoted(labels[b]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_json(const std::vector<std::string>& labels, const std::vector<Edge>& edges,
                        const std::vector<std::size_t>& class_sizes) {
  nlohmann::json j;
  j["vertices"] = labels;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
  j["class_sizes"] = nlohmann::json::object();
  for (std::size_t k = 0; k < labels.size(); ++k) j["class_sizes"][labels[k]] = class_sizes[k];
  return j.dump(2) + "\n";
}

std::vector<std::size_t> rank_all(const Graph& g, const std::vector<Permutation>& perms) {
  std::vector<std::size_t> out;
  out.reserve(perms.size());
  for (const Permutation& p : perms) out.push_back(lex_rank(indices_of(g, p)));
  return out;
}

}  // namespace

PermutohedronSkeleton permutohedron(std::vector<VarName> domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  require_size(domain.size(), kMaxCollapseVertices, "permutohedron");

  const auto perms = all_index_sequences(domain.size());
  PermutohedronSkeleton s;
  s.domain = domain;
  s.vertices.reserve(perms.size());
  for (const IndexSeq& seq : perms) {
    std::vector<VarName> names;
    names.reserve(seq.size());
    for (std::uint8_t i : seq) names.push_back(domain[i]);
    s.vertices.emplace_back(std::move(names));
  }
  s.edges = adjacent_swap_edges(perms);
  return s;
}

STerm class_of_permutation(const Graph& g, const Permutation& p) {
  const IndexSeq seq = indices_of(g, p);
  return classify(g, std::vector<std::size_t>(seq.begin(), seq.end()), g.all_mask());
}

CollapseSkeleton collapse(const Graph& g) {
  require_size(g.size(), kMaxCollapseVertices, "collapse");
  PermutohedronSkeleton p = permutohedron(g.vertices());

  std::vector<STerm> classes;
  classes.reserve(p.vertices.size());
  for (const Permutation& perm : p.vertices) classes.push_back(class_of_permutation(g, perm));

  CollapseSkeleton s{g, std::move(p.vertices), {}, classes, {}, {}};
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());

  s.class_sizes.assign(s.vertices.size(), 0);
  s.class_of.reserve(classes.size());
  for (const STerm& c : classes) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(s.vertices.begin(), s.vertices.end(), c) - s.vertices.begin());
    s.class_of.push_back(k);
    ++s.class_sizes[k];
  }

  std::set<Edge> edges;
  for (const auto& [a, b] : p.edges) {
    std::size_t ca = s.class_of[a];
    std::size_t cb = s.class_of[b];
    if (ca == cb) continue;
    edges.emplace(std::min(ca, cb), std::max(ca, cb));
  }
  s.edges.assign(edges.begin(), edges.end());
  return s;
}

nlohmann::json to_json(const VerificationReport& report) {
  return {{"proposition", report.proposition},
          {"status", report.passed ? "pass" : "fail"},
          {"checked", report.checked},
          {"counterexample", report.counterexample}};
}

VerificationReport verify_partition(const Graph& g) {
  require_size(g.size(), kMaxVerifyVertices, "partition check");
  VerificationReport report{"partition", true, 0, nullptr};
  const std::size_t total = factorial(g.size());
  std::vector<std::ptrdiff_t> owner(total, -1);
  const ForestSet fs = t_forests(g);

  for (std::size_t k = 0; k < fs.forests.size() && report.passed; ++k) {
    const auto perms = linear_extensions(kappa(fs.forests[k]));
    const auto ranks = rank_all(g, perms);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      ++report.checked;
      if (owner[ranks[i]] >= 0) {
        report.passed = false;
        report.counterexample = {
            {"permutation", perms[i].str()},
            {"forests",
             {render_sterm(fs.forests[static_cast<std::size_t>(owner[ranks[i]])]),
              render_sterm(fs.forests[k])}}};
        break;
      }
      owner[ranks[i]] = static_cast<std::ptrdiff_t>(k);
    }
  }
  if (report.passed) {
    auto missing = std::find(owner.begin(), owner.end(), -1);
    if (missing != owner.end()) {
      const auto seqs = all_index_sequences(g.size());
      std::vector<VarName> names;
      for (std::uint8_t i : seqs[static_cast<std::size_t>(missing - owner.begin())]) {
        names.push_back(g.vertices()[i]);
      }
      report.passed = false;
      report.counterexample = {{"uncovered_permutation", Permutation(names).str()}};
    }
  }
  return report;
}

VerificationReport verify_class_connected(const Graph& g) {
  require_size(g.size(), kMaxVerifyVertices, "class connectivity check");
  VerificationReport report{"class-connectivity", true, 0, nullptr};
  const ForestSet fs = t_forests(g);
  const std::size_t n = g.size();
  const auto seqs = all_index_sequences(n);

  for (const STerm& t : fs.forests) {
    const auto perms = linear_extensions(kappa(t));
    const auto ranks = rank_all(g, perms);
    std::set<std::size_t> members(ranks.begin(), ranks.end());
    std::set<std::size_t> seen{ranks.front()};
    std::deque<std::size_t> queue{ranks.front()};
    while (!queue.empty()) {
      IndexSeq q = seqs[queue.front()];
      queue.pop_front();
      for (std::size_t k = 0; k + 1 < n; ++k) {
        std::swap(q[k], q[k + 1]);
        const std::size_t r = lex_rank(q);
        if (members.count(r) && seen.insert(r).second) queue.push_back(r);
        std::swap(q[k], q[k + 1]);
      }
    }
    ++report.checked;
    if (seen.size() != members.size()) {
      report.passed = false;
      report.counterexample = {{"forest", render_sterm(t)},
                               {"class_size", members.size()},
                               {"reached", seen.size()}};
      break;
    }
  }
  return report;
}

std::string export_skeleton(const CollapseSkeleton& s, SkeletonFormat format) {
  // exported node order is by rendered label, so indices are re-sorted
  std::vector<std::size_t> order(s.vertices.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::vector<std::string> rendered;
  rendered.reserve(s.vertices.size());
  for (const STerm& t : s.vertices) rendered.push_back(render_sterm(t));
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rendered[a] < rendered[b]; });

  std::vector<std::size_t> position(order.size());
  std::vector<std::string> labels;
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = k;
    labels.push_back(rendered[order[k]]);
    sizes.push_back(s.class_sizes[order[k]]);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : s.edges) {
    edges.emplace_back(std::min(position[a], position[b]), std::max(position[a], position[b]));
  }
  std::sort(edges.begin(), edges.end());

  if (format == SkeletonFormat::Dot) return render_dot("collapse", labels, edges);
  return render_json(labels, edges, sizes);
}

std::string export_skeleton(const PermutohedronSkeleton& s, SkeletonFormat format) {
  std::vector<std::string> labels;
  labels.reserve(s.vertices.size());
  for (const Permutation& p : s.vertices) labels.push_back(p.str());
  if (format == SkeletonFormat::Dot) return render_dot("permutohedron", labels, s.edges);
  return render_json(labels, s.edges, std::vector<std::size_t>(labels.size(), 1));
}

}  // namespace sforest
