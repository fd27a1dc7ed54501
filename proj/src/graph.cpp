#include "sforest/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "sforest/error.hpp"

namespace sforest {
namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::size_t lowest(std::uint64_t mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

std::uint64_t mask_of(const Graph& g, const STerm& t) {
  std::uint64_t m = 0;
  for (const VarName& v : variables(t)) {
    auto i = g.index_of(v);
    if (!i) return ~std::uint64_t{0};
    m |= bit(*i);
  }
  return m;
}

STerm tail_of(const STerm& product) {
  auto args = product.args();
  return STerm::product(std::vector<STerm>(args.begin() + 1, args.end()));
}

class ForestBuilder {
 public:
  explicit ForestBuilder(const Graph& g) : g_(g) {}

  const std::vector<STerm>& forests(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<STerm> out = compute(mask);
    std::sort(out.begin(), out.end());
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  std::vector<STerm> compute(std::uint64_t mask) {
    if (std::popcount(mask) == 1) return {STerm::var(g_.vertices()[lowest(mask)])};

    const auto parts = g_.components_within(mask);
    std::vector<STerm> out;
    if (parts.size() == 1) {
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        const std::size_t x = lowest(rest);
        const STerm head = STerm::var(g_.vertices()[x]);
        for (const STerm& t : forests(mask & ~bit(x))) out.push_back(STerm::product({head, t}));
      }
      return out;
    }

    // one record per component, all combinations
    std::vector<std::vector<STerm>> choices;
    choices.reserve(parts.size());
    for (std::uint64_t p : parts) choices.push_back(forests(p));
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      std::vector<STerm> args;
      args.reserve(parts.size());
      for (std::size_t k = 0; k < parts.size(); ++k) args.push_back(choices[k][pick[k]]);
      out.push_back(STerm::sum(std::move(args)));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    return out;
  }

  const Graph& g_;
  std::unordered_map<std::uint64_t, std::vector<STerm>> memo_;
};

bool member_within(const Graph& g, std::uint64_t mask, const STerm& t) {
  if (std::popcount(mask) == 1) return t.is_var() && t.name() == g.vertices()[lowest(mask)];

  const auto parts = g.components_within(mask);
  if (parts.size() == 1) {
    if (!t.is_product() || !t.args()[0].is_var()) return false;
    auto x = g.index_of(t.args()[0].name());
    if (!x || !(mask & bit(*x))) return false;
    return member_within(g, mask & ~bit(*x), tail_of(t));
  }

  if (!t.is_sum()) return false;
  std::vector<std::vector<STerm>> groups(parts.size());
  for (const STerm& a : t.args()) {
    const std::uint64_t m = mask_of(g, a);
    auto it = std::find_if(parts.begin(), parts.end(),
                           [m](std::uint64_t p) { return (m & ~p) == 0; });
    if (it == parts.end()) return false;
    groups[static_cast<std::size_t>(it - parts.begin())].push_back(a);
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (groups[k].empty() || !member_within(g, parts[k], STerm::sum(std::move(groups[k])))) {
      return false;
    }
  }
  return true;
}

// Marks every pair of vertices that some sum in `t` places in different summands.
void mark_separated(const Graph& g, const STerm& t, std::vector<std::uint64_t>& separated) {
  if (t.is_var()) return;
  if (t.is_sum()) {
    std::vector<std::uint64_t> masks;
    for (const STerm& a : t.args()) masks.push_back(mask_of(g, a));
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if (i == j) continue;
        for (std::uint64_t m = masks[i]; m; m &= m - 1) separated[lowest(m)] |= masks[j];
      }
    }
  }
  for (const STerm& a : t.args()) mark_separated(g, a, separated);
}

struct Branch {
  std::uint64_t mask;
  STerm record;
};

void push_branches(const Graph& g, std::uint64_t mask, STerm record, std::vector<Branch>& out) {
  if (record.is_sum()) {
    for (const STerm& a : record.args()) out.push_back({mask_of(g, a), a});
    return;
  }
  out.push_back({mask, std::move(record)});
}

FilmFrame frame_of(const Graph& g, std::vector<Branch>& branches) {
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return lowest(a.mask) < lowest(b.mask); });
  FilmFrame frame;
  for (const Branch& b : branches) frame.push_back(g.induced(b.mask));
  return frame;
}

}  // namespace

Graph::Graph(std::vector<VarName> vertices, const std::vector<VarPair>& edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw Error(ErrorKind::InvalidGraph, "a graph needs at least one vertex");
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorKind::BudgetExceeded, "graphs are limited to 64 vertices");
  }
  vertices_ = std::move(vertices);
  adjacency_.assign(vertices_.size(), 0);
  for (const auto& [a, b] : edges) {
    auto i = index_of(a);
    auto j = index_of(b);
    if (!i || !j) {
      throw Error(ErrorKind::InvalidGraph, "edge {" + a.str() + "," + b.str() + "} leaves the vertex set");
    }
    if (*i == *j) throw Error(ErrorKind::InvalidGraph, "loop at " + a.str());
    adjacency_[*i] |= bit(*j);
    adjacency_[*j] |= bit(*i);
  }
}

Graph Graph::from_relation(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.has(i, i)) throw Error(ErrorKind::InvalidGraph, "relation is not irreflexive");
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.has(i, j) != r.has(j, i)) throw Error(ErrorKind::InvalidGraph, "relation is not symmetric");
    }
  }
  return Graph(r.domain(), r.pairs());
}

std::uint64_t Graph::all_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : bit(size()) - 1;
}

std::vector<VarPair> Graph::edges() const {
  std::vector<VarPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacency_[i] & bit(j)) out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::optional<std::size_t> Graph::index_of(const VarName& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::adjacent(const VarName& a, const VarName& b) const {
  auto i = index_of(a);
  auto j = index_of(b);
  return i && j && (adjacency_[*i] & bit(*j));
}

std::vector<std::uint64_t> Graph::components_within(std::uint64_t mask) const {
  std::vector<std::uint64_t> out;
  std::uint64_t left = mask;
  while (left) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adjacency_[lowest(f)];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

Graph Graph::induced(std::uint64_t mask) const {
  Graph g;
  std::vector<std::size_t> at;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    at.push_back(lowest(m));
    g.vertices_.push_back(vertices_[at.back()]);
  }
  if (g.vertices_.empty()) throw Error(ErrorKind::InvalidGraph, "a graph needs at least one vertex");
  g.adjacency_.assign(at.size(), 0);
  for (std::size_t i = 0; i < at.size(); ++i) {
    for (std::size_t j = 0; j < at.size(); ++j) {
      if (adjacency_[at[i]] & bit(at[j])) g.adjacency_[i] |= bit(j);
    }
  }
  return g;
}

Relation Graph::as_relation() const {
  PairSet bits(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (adjacency_[i] & bit(j)) bits.set(i, j);
    }
  }
  return Relation::from_bits(vertices_, std::move(bits));
}

bool graph_connected(const Graph& g) { return g.components_within(g.all_mask()).size() == 1; }

std::vector<Graph> graph_components(const Graph& g) {
  std::vector<Graph> out;
  for (std::uint64_t m : g.components_within(g.all_mask())) out.push_back(g.induced(m));
  return out;
}

std::optional<Graph> remove_vertex(const Graph& g, const VarName& x) {
  auto i = g.index_of(x);
  if (!i) throw Error(ErrorKind::NotInGraph, x.str() + " is not a vertex");
  if (g.size() == 1) return std::nullopt;
  return g.induced(g.all_mask() & ~bit(*i));
}

ForestSet t_forests(const Graph& g) {
  ForestBuilder builder(g);
  return ForestSet{g, builder.forests(g.all_mask())};
}

bool is_t_member(const Graph& g, const STerm& t) {
  if (!is_diversified(t) || variables(t) != g.vertices()) return false;
  return member_within(g, g.all_mask(), t);
}

Graph reconstruct_graph(std::vector<VarName> vertices, const std::vector<STerm>& forests) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty() || forests.empty()) {
    throw Error(ErrorKind::MalformedForestSet, "need a nonempty vertex set and forest set");
  }
  for (const STerm& t : forests) {
    if (!is_s_forest(t) || variables(t) != vertices) {
      throw Error(ErrorKind::MalformedForestSet,
                  render_sterm(t) + " is not an S-forest on the given vertices");
    }
  }
  const Graph edgeless(vertices, {});
  std::vector<std::uint64_t> separated(vertices.size(), 0);
  for (const STerm& t : forests) mark_separated(edgeless, t, separated);

  std::vector<VarPair> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!(separated[i] & bit(j))) edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  return Graph(std::move(vertices), edges);
}

std::vector<FilmFrame> destruction_film(const Graph& g, const STerm& t) {
  if (!is_t_member(g, t)) {
    throw Error(ErrorKind::NotAForestOf, render_sterm(t) + " does not record a destruction of this graph");
  }
  std::vector<Branch> branches;
  push_branches(g, g.all_mask(), t, branches);

  std::vector<FilmFrame> film;
  film.push_back(frame_of(g, branches));
  while (!branches.empty()) {
    std::vector<Branch> next;
    for (const Branch& b : branches) {
      if (b.record.is_var()) continue;
      const std::size_t head = *g.index_of(b.record.args()[0].name());
      push_branches(g, b.mask & ~bit(head), tail_of(b.record), next);
    }
    branches = std::move(next);
    film.push_back(frame_of(g, branches));
  }
  return film;
}

}  // namespace sforest
