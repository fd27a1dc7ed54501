#include "sforest/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>

#include "sforest/error.hpp"

namespace sforest {
namespace {

using Mask = std::uint32_t;

void require_at_most(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + " is limited to " + std::to_string(limit) +
                                               " elements, got " + std::to_string(n));
  }
}

std::vector<VarName> sorted_unique(std::vector<VarName> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw Error(ErrorKind::InvalidInput, "repeated name in enumeration domain");
  }
  return v;
}

Mask low_bit(Mask m) { return m & (~m + 1); }

// Nonempty proper submasks of `m` that contain its lowest element.
template <typename F>
void for_each_anchored_block(Mask m, F&& f) {
  const Mask low = low_bit(m);
  const Mask rest = m & ~low;
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    if ((sub | low) != m) f(sub | low);
    if (sub == 0) break;
  }
}

// Nonempty proper submasks of `m`.
template <typename F>
void for_each_proper_block(Mask m, F&& f) {
  for (Mask sub = (m - 1) & m; sub != 0; sub = (sub - 1) & m) f(sub);
}

class TermEnumerator {
 public:
  explicit TermEnumerator(const std::vector<VarName>& vars) : vars_(vars) {}

  const std::vector<STerm>& terms(Mask m) {
    if (auto it = terms_.find(m); it != terms_.end()) return it->second;
    std::vector<STerm> out;
    if (std::has_single_bit(m)) {
      out.push_back(single(m));
    } else {
      const auto& s = sums(m);
      const auto& p = prods(m);
      out.insert(out.end(), s.begin(), s.end());
      out.insert(out.end(), p.begin(), p.end());
    }
    return terms_[m] = std::move(out);
  }

 private:
  STerm single(Mask m) const { return STerm::var(vars_[static_cast<std::size_t>(std::countr_zero(m))]); }

  const std::vector<STerm>& sums(Mask m) {
    if (auto it = sums_.find(m); it != sums_.end()) return it->second;
    std::vector<STerm> out;
    for_each_anchored_block(m, [&](Mask block) {
      const std::vector<STerm> heads = non_sum(block);
      const std::vector<STerm>& tails = terms(m & ~block);
      for (const STerm& a : heads) {
        for (const STerm& b : tails) out.push_back(STerm::sum({a, b}));
      }
    });
    return sums_[m] = std::move(out);
  }

  const std::vector<STerm>& prods(Mask m) {
    if (auto it = prods_.find(m); it != prods_.end()) return it->second;
    std::vector<STerm> out;
    for_each_proper_block(m, [&](Mask block) {
      const std::vector<STerm> heads = non_prod(block);
      const std::vector<STerm>& tails = terms(m & ~block);
      for (const STerm& a : heads) {
        for (const STerm& b : tails) out.push_back(STerm::product({a, b}));
      }
    });
    return prods_[m] = std::move(out);
  }

  std::vector<STerm> non_sum(Mask m) { return std::has_single_bit(m) ? std::vector{single(m)} : prods(m); }
  std::vector<STerm> non_prod(Mask m) { return std::has_single_bit(m) ? std::vector{single(m)} : sums(m); }

  const std::vector<VarName>& vars_;
  std::map<Mask, std::vector<STerm>> terms_;
  std::map<Mask, std::vector<STerm>> sums_;
  std::map<Mask, std::vector<STerm>> prods_;
};

class ForestEnumerator {
 public:
  explicit ForestEnumerator(const std::vector<VarName>& vars) : vars_(vars) {}

  const std::vector<STerm>& forests(Mask m) {
    if (auto it = forests_.find(m); it != forests_.end()) return it->second;
    std::vector<STerm> out = trees(m);
    if (!std::has_single_bit(m)) {
      for_each_anchored_block(m, [&](Mask block) {
        const std::vector<STerm> heads = trees(block);
        const std::vector<STerm>& tails = forests(m & ~block);
        for (const STerm& a : heads) {
          for (const STerm& b : tails) out.push_back(STerm::sum({a, b}));
        }
      });
    }
    return forests_[m] = std::move(out);
  }

 private:
  const std::vector<STerm>& trees(Mask m) {
    if (auto it = trees_.find(m); it != trees_.end()) return it->second;
    std::vector<STerm> out;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const Mask root = low_bit(rest);
      const STerm head = STerm::var(vars_[static_cast<std::size_t>(std::countr_zero(root))]);
      if (root == m) {
        out.push_back(head);
        continue;
      }
      const std::vector<STerm>& below = forests(m & ~root);
      for (const STerm& f : below) out.push_back(STerm::product({head, f}));
    }
    return trees_[m] = std::move(out);
  }

  const std::vector<VarName>& vars_;
  std::map<Mask, std::vector<STerm>> forests_;
  std::map<Mask, std::vector<STerm>> trees_;
};

void close_transitively(PairSet& bits, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!bits.test(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (bits.test(k, j)) bits.set(i, j);
      }
    }
  }
}

}  // namespace

std::vector<VarName> standard_names(std::size_t n) {
  static constexpr std::array<const char*, 8> kNames{"x", "y", "z", "u", "v", "w", "p", "q"};
  require_at_most(n, kNames.size(), "standard names");
  std::vector<VarName> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(kNames[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VarName>> subsets_of(const std::vector<VarName>& domain) {
  require_at_most(domain.size(), 16, "subset enumeration");
  std::vector<std::vector<VarName>> out;
  const Mask limit = Mask{1} << domain.size();
  for (Mask m = 0; m < limit; ++m) {
    std::vector<VarName> s;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (m & (Mask{1} << i)) s.push_back(domain[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Relation> all_relations(const std::vector<VarName>& domain) {
  const std::vector<VarName> d = sorted_unique(domain);
  require_at_most(d.size(), 4, "relation enumeration");
  const std::size_t n = d.size();
  const std::size_t cells = n * n;
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    PairSet bits(n);
    for (std::size_t c = 0; c < cells; ++c) {
      if (m & (std::uint64_t{1} << c)) bits.set(c / n, c % n);
    }
    out.push_back(Relation::from_bits(d, std::move(bits)));
  }
  return out;
}

std::vector<Relation> all_partial_orders(const std::vector<VarName>& domain) {
  const std::vector<VarName> d = sorted_unique(domain);
  require_at_most(d.size(), 6, "partial order enumeration");
  const std::size_t n = d.size();
  std::vector<PairSet> layer{PairSet(n)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<PairSet> next;
    const Mask span = Mask{1} << k;
    for (const PairSet& p : layer) {
      for (Mask down = 0; down < span; ++down) {
        bool down_closed = true;
        for (std::size_t i = 0; i < k && down_closed; ++i) {
          if (!(down & (Mask{1} << i))) continue;
          for (std::size_t e = 0; e < k; ++e) {
            if (p.test(e, i) && !(down & (Mask{1} << e))) down_closed = false;
          }
        }
        if (!down_closed) continue;
        for (Mask up = 0; up < span; ++up) {
          if (up & down) continue;
          bool ok = true;
          for (std::size_t i = 0; i < k && ok; ++i) {
            if (!(up & (Mask{1} << i))) continue;
            for (std::size_t e = 0; e < k && ok; ++e) {
              if (p.test(i, e) && !(up & (Mask{1} << e))) ok = false;
              if ((down & (Mask{1} << e)) && !p.test(e, i)) ok = false;
            }
          }
          if (!ok) continue;
          PairSet q = p;
          for (std::size_t i = 0; i < k; ++i) {
            if (down & (Mask{1} << i)) q.set(i, k);
            if (up & (Mask{1} << i)) q.set(k, i);
          }
          next.push_back(std::move(q));
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  std::vector<Relation> out;
  out.reserve(layer.size());
  for (PairSet& p : layer) out.push_back(Relation::from_bits(d, std::move(p)));
  return out;
}

std::vector<STerm> all_diversified_terms(const std::vector<VarName>& vars) {
  const std::vector<VarName> v = sorted_unique(vars);
  require_at_most(v.size(), 6, "term enumeration");
  if (v.empty()) return {};
  TermEnumerator e(v);
  std::vector<STerm> out = e.terms((Mask{1} << v.size()) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<STerm> all_s_forests(const std::vector<VarName>& vars) {
  const std::vector<VarName> v = sorted_unique(vars);
  require_at_most(v.size(), 7, "forest enumeration");
  if (v.empty()) return {};
  ForestEnumerator e(v);
  std::vector<STerm> out = e.forests((Mask{1} << v.size()) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> all_graphs(const std::vector<VarName>& vertices) {
  const std::vector<VarName> v = sorted_unique(vertices);
  require_at_most(v.size(), 6, "graph enumeration");
  std::vector<VarPair> slots;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) slots.emplace_back(v[i], v[j]);
  }
  std::vector<Graph> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << slots.size()); ++m) {
    std::vector<VarPair> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (m & (std::uint32_t{1} << s)) edges.push_back(slots[s]);
    }
    out.emplace_back(v, edges);
  }
  return out;
}

Graph random_graph(const std::vector<VarName>& vertices, std::mt19937_64& rng) {
  std::vector<VarPair> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (rng() & 1U) edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  return Graph(vertices, edges);
}

Relation random_partial_order(const std::vector<VarName>& domain, std::mt19937_64& rng) {
  const std::vector<VarName> d = sorted_unique(domain);
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // modulo draw keeps seeded runs identical across standard libraries
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  PairSet bits(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng() & 1U) bits.set(order[a], order[b]);
    }
  }
  close_transitively(bits, n);
  return Relation::from_bits(d, std::move(bits));
}

}  // namespace sforest
