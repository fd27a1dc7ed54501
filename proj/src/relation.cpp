#include "sforest/relation.hpp"

#include <algorithm>
#include <numeric>

#include "sforest/error.hpp"

namespace sforest {
namespace {

void sort_unique(std::vector<VarName>& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

// Positions of `part` (sorted) inside `whole` (sorted, superset of part).
std::vector<std::size_t> embed(const std::vector<VarName>& part, const std::vector<VarName>& whole) {
  std::vector<std::size_t> out;
  out.reserve(part.size());
  std::size_t k = 0;
  for (const VarName& v : part) {
    while (whole[k] != v) ++k;
    out.push_back(k);
  }
  return out;
}

struct Merged {
  std::vector<VarName> domain;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

Merged merge_disjoint(const Relation& a, const Relation& b, const char* op) {
  Merged m;
  m.domain.reserve(a.size() + b.size());
  std::merge(a.domain().begin(), a.domain().end(), b.domain().begin(), b.domain().end(),
             std::back_inserter(m.domain));
  if (std::adjacent_find(m.domain.begin(), m.domain.end()) != m.domain.end()) {
    throw Error(ErrorKind::DomainOverlap, std::string(op) + " needs disjoint domains");
  }
  m.left = embed(a.domain(), m.domain);
  m.right = embed(b.domain(), m.domain);
  return m;
}

void copy_pairs(const Relation& from, const std::vector<std::size_t>& at, PairSet& into) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < from.size(); ++j) {
      if (from.has(i, j)) into.set(at[i], at[j]);
    }
  }
}

// Union-find labelling of the undirected closure; label = least index in the class.
std::vector<std::size_t> component_labels(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.has(i, j)) continue;
      std::size_t a = find(i);
      std::size_t b = find(j);
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      parent[a] = b;
    }
  }
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = find(i);
  return label;
}

std::pair<Relation, Relation> split_connected(const Relation& r);

// Moves leading factors out of `right` until it cannot be split further.
void make_right_prime(Relation& left, Relation& right) {
  while (right.size() >= 2 && is_connected(right)) {
    auto [head, tail] = split_connected(right);
    left = concatenation(left, head);
    right = std::move(tail);
  }
}

// Induction on the number of inner elements: with none, sources precede
// sinks; otherwise drop the least inner element, split the rest, and put the
// element back on the side the pairs dictate.
std::pair<Relation, Relation> split_connected(const Relation& r) {
  const std::vector<VarName> inner = inner_elements(r);
  if (inner.empty()) {
    std::vector<VarName> sources;
    std::vector<VarName> sinks;
    for (std::size_t i = 0; i < r.size(); ++i) {
      bool out = false;
      for (std::size_t j = 0; j < r.size(); ++j) out = out || r.has(i, j);
      (out ? sources : sinks).push_back(r.domain()[i]);
    }
    return {r.restrict_to(sources), r.restrict_to(sinks)};
  }

  const VarName& x = inner.front();
  const std::size_t xi = *r.index_of(x);
  auto [left, right] = split_connected(remove_element(r, x));
  make_right_prime(left, right);

  std::size_t witness = r.size();
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r.has(xi, j)) {
      witness = j;
      break;
    }
  }
  const VarName& w = r.domain()[witness];

  std::vector<VarName> first = left.domain();
  std::vector<VarName> second = right.domain();
  bool x_goes_right = false;
  if (!left.has_element(w)) {
    x_goes_right = std::all_of(first.begin(), first.end(),
                               [&](const VarName& y) { return r.contains(y, x); });
  }
  if (x_goes_right) {
    second.push_back(x);
    sort_unique(second);
  } else {
    first.push_back(x);
    sort_unique(first);
  }
  return {r.restrict_to(first), r.restrict_to(second)};
}

}  // namespace

Relation::Relation(std::vector<VarName> domain, const std::vector<VarPair>& pairs)
    : domain_(std::move(domain)) {
  sort_unique(domain_);
  bits_ = PairSet(domain_.size());
  for (const auto& [a, b] : pairs) {
    auto i = index_of(a);
    auto j = index_of(b);
    if (!i || !j) {
      throw Error(ErrorKind::InvalidRelation,
                  "pair (" + a.str() + "," + b.str() + ") leaves the domain");
    }
    bits_.set(*i, *j);
  }
}

Relation Relation::discrete(std::vector<VarName> domain) { return Relation(std::move(domain), {}); }

Relation Relation::from_bits(std::vector<VarName> domain, PairSet bits) {
  Relation r;
  r.domain_ = std::move(domain);
  r.bits_ = std::move(bits);
  return r;
}

std::optional<std::size_t> Relation::index_of(const VarName& v) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - domain_.begin());
}

bool Relation::contains(const VarName& a, const VarName& b) const {
  auto i = index_of(a);
  auto j = index_of(b);
  return i && j && bits_.test(*i, *j);
}

std::vector<VarPair> Relation::pairs() const {
  std::vector<VarPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (bits_.test(i, j)) out.emplace_back(domain_[i], domain_[j]);
    }
  }
  return out;
}

Relation Relation::restrict_to(std::span<const VarName> subset) const {
  std::vector<VarName> dom(subset.begin(), subset.end());
  sort_unique(dom);
  std::vector<std::size_t> at;
  at.reserve(dom.size());
  for (const VarName& v : dom) {
    auto i = index_of(v);
    if (!i) throw Error(ErrorKind::NotInDomain, v.str() + " is not in the domain");
    at.push_back(*i);
  }
  PairSet bits(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (bits_.test(at[i], at[j])) bits.set(i, j);
    }
  }
  return from_bits(std::move(dom), std::move(bits));
}

Relation disjoint_union(const Relation& a, const Relation& b) {
  Merged m = merge_disjoint(a, b, "disjoint union");
  PairSet bits(m.domain.size());
  copy_pairs(a, m.left, bits);
  copy_pairs(b, m.right, bits);
  return Relation::from_bits(std::move(m.domain), std::move(bits));
}

Relation concatenation(const Relation& a, const Relation& b) {
  Merged m = merge_disjoint(a, b, "concatenation");
  PairSet bits(m.domain.size());
  copy_pairs(a, m.left, bits);
  copy_pairs(b, m.right, bits);
  for (std::size_t i : m.left) {
    for (std::size_t j : m.right) bits.set(i, j);
  }
  return Relation::from_bits(std::move(m.domain), std::move(bits));
}

bool is_partial_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (r.has(i, i)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.has(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (r.has(j, k) && !r.has(i, k)) return false;
      }
    }
  }
  return true;
}

bool is_trifunctional(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      if (!r.has(x, z)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!r.has(y, z)) continue;
        for (std::size_t u = 0; u < n; ++u) {
          if (!r.has(y, u)) continue;
          if (!r.has(x, u) && !r.has(y, x) && !r.has(u, z)) return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const Relation& r) {
  const auto label = component_labels(r);
  return std::all_of(label.begin(), label.end(), [](std::size_t l) { return l == 0; });
}

std::vector<Relation> connected_components(const Relation& r) {
  const auto label = component_labels(r);
  std::vector<Relation> out;
  for (std::size_t root = 0; root < r.size(); ++root) {
    if (label[root] != root) continue;
    std::vector<VarName> members;
    for (std::size_t i = root; i < r.size(); ++i) {
      if (label[i] == root) members.push_back(r.domain()[i]);
    }
    out.push_back(r.restrict_to(members));
  }
  return out;
}

std::vector<VarName> inner_elements(const Relation& r) {
  std::vector<VarName> out;
  for (std::size_t y = 0; y < r.size(); ++y) {
    bool in = false;
    bool out_edge = false;
    for (std::size_t k = 0; k < r.size(); ++k) {
      in = in || r.has(k, y);
      out_edge = out_edge || r.has(y, k);
    }
    if (in && out_edge) out.push_back(r.domain()[y]);
  }
  return out;
}

Relation remove_element(const Relation& r, const VarName& y) {
  if (!r.has_element(y)) throw Error(ErrorKind::NotInDomain, y.str() + " is not in the domain");
  std::vector<VarName> rest;
  rest.reserve(r.size() - 1);
  for (const VarName& v : r.domain()) {
    if (v != y) rest.push_back(v);
  }
  return r.restrict_to(rest);
}

bool is_ftp(const Relation& r) { return !r.empty() && is_partial_order(r) && is_trifunctional(r); }

std::optional<std::pair<Relation, Relation>> prime_concat_split(const Relation& r) {
  if (!is_ftp(r)) throw Error(ErrorKind::NotFTP, "relation is not a trifunctional partial order");
  if (r.size() < 2 || !is_connected(r)) return std::nullopt;
  auto [left, right] = split_connected(r);
  make_right_prime(left, right);
  return std::make_pair(std::move(left), std::move(right));
}

bool is_ftp_forest(const Relation& r) {
  if (!is_partial_order(r)) return false;
  const std::size_t n = r.size();
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!r.has(x, z)) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (r.has(y, z) && !r.has(x, y) && !r.has(y, x)) return false;
      }
    }
  }
  return true;
}

std::optional<VarName> ftp_tree_root(const Relation& r) {
  if (r.empty() || !is_ftp_forest(r)) return std::nullopt;
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool root = true;
    for (std::size_t y = 0; y < r.size() && root; ++y) {
      if (y != x && !r.has(x, y)) root = false;
    }
    if (root) return r.domain()[x];
  }
  return std::nullopt;
}

}  // namespace sforest
