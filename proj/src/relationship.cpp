#include "sforest/relationship.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "sforest/error.hpp"

namespace sforest {
namespace {

bool bits_partial_order(const PairSet& q, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (q.test(i, i)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!q.test(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (q.test(j, k) && !q.test(i, k)) return false;
      }
    }
  }
  return true;
}

bool bits_linear_order(const PairSet& q, std::size_t n) {
  if (!bits_partial_order(q, n)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!q.test(i, j) && !q.test(j, i)) return false;
    }
  }
  return true;
}

// Sequence of indices of a linear order given as bits: sort by number of predecessors.
std::vector<std::size_t> linear_sequence(const PairSet& q, std::size_t n) {
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (q.test(j, i)) ++rank[i];
    }
  }
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[rank[i]] = i;
  return seq;
}

struct Joint {
  std::vector<VarName> domain;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

Joint join_domains(const std::vector<VarName>& x, const std::vector<VarName>& y) {
  Joint j;
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(j.domain));
  if (std::adjacent_find(j.domain.begin(), j.domain.end()) != j.domain.end()) {
    throw Error(ErrorKind::DomainOverlap, "relationships need disjoint domains");
  }
  for (const VarName& v : x) {
    j.left.push_back(static_cast<std::size_t>(
        std::lower_bound(j.domain.begin(), j.domain.end(), v) - j.domain.begin()));
  }
  for (const VarName& v : y) {
    j.right.push_back(static_cast<std::size_t>(
        std::lower_bound(j.domain.begin(), j.domain.end(), v) - j.domain.begin()));
  }
  return j;
}

void place(const PairSet& from, const std::vector<std::size_t>& at, PairSet& into) {
  const std::size_t n = at.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (from.test(i, j)) into.set(at[i], at[j]);
    }
  }
}

void require_budget(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + " is limited to " +
                                               std::to_string(limit) + " elements, got " +
                                               std::to_string(n));
  }
}

void require_partial_order(const Relation& r) {
  if (!is_partial_order(r)) throw Error(ErrorKind::NotPartialOrder, "relation is not a partial order");
}

// All supersets of `base` among n x n pair sets, optionally only partial orders.
std::set<PairSet> supersets(const PairSet& base, std::size_t n, bool partial_only) {
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!base.test(i, j)) free.emplace_back(i, j);
    }
  }
  std::set<PairSet> out;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PairSet q = base;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((mask >> k) & 1u) q.set(free[k].first, free[k].second);
    }
    if (!partial_only || bits_partial_order(q, n)) out.insert(std::move(q));
  }
  return out;
}

PairSet closure(PairSet q, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!q.test(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (q.test(k, j)) q.set(i, j);
      }
    }
  }
  return q;
}

void check_extension_pair(const Relation& r, const VarName& x, const VarName& y) {
  require_partial_order(r);
  if (!r.has_element(x)) throw Error(ErrorKind::NotInDomain, x.str() + " is not in the domain");
  if (!r.has_element(y)) throw Error(ErrorKind::NotInDomain, y.str() + " is not in the domain");
  if (x == y) throw Error(ErrorKind::PairConflict, "cannot order " + x.str() + " before itself");
  if (r.contains(y, x)) {
    throw Error(ErrorKind::PairConflict, "(" + y.str() + "," + x.str() + ") is already present");
  }
}

std::uint64_t predecessor_mask(const Relation& r, std::size_t i) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r.has(j, i)) m |= std::uint64_t{1} << j;
  }
  return m;
}

std::vector<std::uint64_t> predecessor_masks(const Relation& r) {
  require_partial_order(r);
  require_budget(r.size(), 64, "linear extension enumeration");
  std::vector<std::uint64_t> preds(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) preds[i] = predecessor_mask(r, i);
  return preds;
}

void extend_rec(const std::vector<std::uint64_t>& preds, std::uint64_t placed,
                std::vector<std::size_t>& seq, const std::vector<VarName>& domain,
                std::vector<Permutation>& out) {
  const std::size_t n = preds.size();
  if (seq.size() == n) {
    std::vector<VarName> names;
    names.reserve(n);
    for (std::size_t i : seq) names.push_back(domain[i]);
    out.emplace_back(std::move(names));
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if ((placed & bit) || (preds[i] & ~placed)) continue;
    seq.push_back(i);
    extend_rec(preds, placed | bit, seq, domain, out);
    seq.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------- Relationship

Relationship::Relationship(std::vector<VarName> domain, const std::vector<Relation>& members) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  domain_ = std::move(domain);
  for (const Relation& m : members) {
    if (m.domain() != domain_) {
      throw Error(ErrorKind::InvalidRelation, "relationship member over a different domain");
    }
    family_.insert(m.bits());
  }
}

Relationship Relationship::from_bits(std::vector<VarName> domain, std::set<PairSet> family) {
  Relationship r;
  r.domain_ = std::move(domain);
  r.family_ = std::move(family);
  return r;
}

Relationship Relationship::singleton(const Relation& r) {
  return from_bits(r.domain(), {r.bits()});
}

bool Relationship::contains(const Relation& r) const {
  return r.domain() == domain_ && family_.count(r.bits()) > 0;
}

std::vector<Relation> Relationship::members() const {
  std::vector<Relation> out;
  out.reserve(family_.size());
  for (const PairSet& p : family_) out.push_back(Relation::from_bits(domain_, p));
  return out;
}

// ----------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<VarName> sequence) : sequence_(std::move(sequence)) {
  std::vector<VarName> sorted = sequence_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidInput, "permutation repeats an element");
  }
}

Permutation Permutation::from_relation(const Relation& r) {
  if (!is_linear_order(r)) throw Error(ErrorKind::InvalidInput, "relation is not a linear order");
  std::vector<VarName> seq;
  for (std::size_t i : linear_sequence(r.bits(), r.size())) seq.push_back(r.domain()[i]);
  return Permutation(std::move(seq));
}

Relation Permutation::to_relation() const {
  std::vector<VarPair> pairs;
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence_.size(); ++j) pairs.emplace_back(sequence_[i], sequence_[j]);
  }
  return Relation(sequence_, pairs);
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (i) out += ' ';
    out += sequence_[i].str();
  }
  return out;
}

bool is_linear_order(const Relation& r) { return bits_linear_order(r.bits(), r.size()); }

// ------------------------------------------------------------------ Operations

Relationship shuffle_sum(const Relationship& u, const Relationship& v, ShuffleMode mode) {
  Joint j = join_domains(u.domain(), v.domain());
  const std::size_t n = j.domain.size();
  std::set<PairSet> family;

  if (mode == ShuffleMode::LinearOrders) {
    const std::size_t nx = u.domain().size();
    const std::size_t ny = v.domain().size();
    for (const PairSet& r : u.family()) {
      if (!bits_linear_order(r, nx)) continue;
      const auto rs = linear_sequence(r, nx);
      for (const PairSet& s : v.family()) {
        if (!bits_linear_order(s, ny)) continue;
        const auto ss = linear_sequence(s, ny);
        // every interleaving: choose which of the n slots hold left elements
        std::vector<char> from_left(n, 0);
        std::fill(from_left.end() - static_cast<std::ptrdiff_t>(nx), from_left.end(), 1);
        do {
          std::vector<std::size_t> seq;
          seq.reserve(n);
          std::size_t a = 0;
          std::size_t b = 0;
          for (char left : from_left) seq.push_back(left ? j.left[rs[a++]] : j.right[ss[b++]]);
          PairSet q(n);
          for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t t = p + 1; t < n; ++t) q.set(seq[p], seq[t]);
          }
          family.insert(std::move(q));
        } while (std::next_permutation(from_left.begin(), from_left.end()));
      }
    }
    return Relationship::from_bits(std::move(j.domain), std::move(family));
  }

  const bool partial = mode == ShuffleMode::PartialOrders;
  require_budget(n, partial ? kMaxPartialShuffleDomain : kMaxExhaustiveDomain, "shuffle sum");
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t a : j.left) {
    for (std::size_t b : j.right) {
      cross.emplace_back(a, b);
      cross.emplace_back(b, a);
    }
  }
  const std::uint64_t total = std::uint64_t{1} << cross.size();
  for (const PairSet& r : u.family()) {
    if (partial && !bits_partial_order(r, u.domain().size())) continue;
    for (const PairSet& s : v.family()) {
      if (partial && !bits_partial_order(s, v.domain().size())) continue;
      PairSet base(n);
      place(r, j.left, base);
      place(s, j.right, base);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        PairSet q = base;
        for (std::size_t k = 0; k < cross.size(); ++k) {
          if ((mask >> k) & 1u) q.set(cross[k].first, cross[k].second);
        }
        if (!partial || bits_partial_order(q, n)) family.insert(std::move(q));
      }
    }
  }
  return Relationship::from_bits(std::move(j.domain), std::move(family));
}

Relationship concat_product(const Relationship& u, const Relationship& v) {
  Joint j = join_domains(u.domain(), v.domain());
  const std::size_t n = j.domain.size();
  std::set<PairSet> family;
  for (const PairSet& r : u.family()) {
    for (const PairSet& s : v.family()) {
      PairSet q(n);
      place(r, j.left, q);
      place(s, j.right, q);
      for (std::size_t a : j.left) {
        for (std::size_t b : j.right) q.set(a, b);
      }
      family.insert(std::move(q));
    }
  }
  return Relationship::from_bits(std::move(j.domain), std::move(family));
}

Relationship map_E(const Relation& r) {
  require_budget(r.size(), kMaxExhaustiveDomain, "map_E");
  return Relationship::from_bits(r.domain(), supersets(r.bits(), r.size(), false));
}

Relationship map_P(const Relation& r) {
  require_partial_order(r);
  require_budget(r.size(), kMaxExhaustiveDomain, "map_P");
  return Relationship::from_bits(r.domain(), supersets(r.bits(), r.size(), true));
}

Relationship map_L(const Relation& r) {
  std::set<PairSet> family;
  for (const Permutation& p : linear_extensions(r)) family.insert(p.to_relation().bits());
  return Relationship::from_bits(r.domain(), std::move(family));
}

std::vector<Permutation> linear_extensions(const Relation& r) {
  const auto preds = predecessor_masks(r);
  std::vector<Permutation> out;
  std::vector<std::size_t> seq;
  seq.reserve(r.size());
  extend_rec(preds, 0, seq, r.domain(), out);
  return out;
}

std::size_t count_linear_extensions(const Relation& r) {
  const auto preds = predecessor_masks(r);
  const std::size_t n = preds.size();
  // number of ways to finish from each reachable down-set
  std::unordered_map<std::uint64_t, std::size_t> memo;
  auto count = [&](auto&& self, std::uint64_t placed) -> std::size_t {
    if (static_cast<std::size_t>(std::popcount(placed)) == n) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) || (preds[i] & ~placed)) continue;
      total += self(self, placed | bit);
    }
    memo.emplace(placed, total);
    return total;
  };
  return count(count, 0);
}

Relation extend_with_pair(const Relation& r, const VarName& x, const VarName& y) {
  check_extension_pair(r, x, y);
  PairSet q = r.bits();
  q.set(*r.index_of(x), *r.index_of(y));
  return Relation::from_bits(r.domain(), closure(std::move(q), r.size()));
}

Relation linear_extension_through(const Relation& r, const VarName& x, const VarName& y) {
  Relation current = extend_with_pair(r, x, y);
  const std::size_t n = current.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!current.has(i, j) && !current.has(j, i)) {
        current = extend_with_pair(current, current.domain()[i], current.domain()[j]);
      }
    }
  }
  return current;
}

std::optional<Relation> find_q1_not_q2_witness(const Relation& r, const Relation& s,
                                               bool partial_orders_only) {
  Joint j = join_domains(r.domain(), s.domain());
  if (r.empty() || s.empty()) throw Error(ErrorKind::InvalidInput, "both domains must be nonempty");
  const std::size_t n = j.domain.size();
  require_budget(n, kMaxExhaustiveDomain, "witness search");

  PairSet base(n);
  place(r.bits(), j.left, base);
  place(s.bits(), j.right, base);
  for (std::size_t a : j.left) {
    for (std::size_t b : j.right) base.set(a, b);
  }

  std::optional<PairSet> best;
  for (const PairSet& q : supersets(base, n, partial_orders_only)) {
    bool reversed = false;
    for (std::size_t a : j.left) {
      for (std::size_t b : j.right) reversed = reversed || q.test(b, a);
    }
    if (!reversed) continue;
    if (!best || q.count() < best->count() || (q.count() == best->count() && q < *best)) best = q;
  }
  if (!best) return std::nullopt;
  return Relation::from_bits(std::move(j.domain), std::move(*best));
}

}  // namespace sforest
