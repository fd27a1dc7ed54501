#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sforest/pair_set.hpp"
#include "sforest/var_name.hpp"

namespace sforest {

using VarPair = std::pair<VarName, VarName>;

/// A finite binary relation <R, X>: a domain X of variables and a set R of
/// ordered pairs over X. The domain is kept sorted; pairs are stored as a bit
/// matrix indexed by position in the domain, so two relations are equal
/// exactly when their domains and pair sets are equal as sets.
class Relation {
 public:
  /// The empty relation on the empty domain.
  Relation() = default;

  /// Duplicate names in `domain` are merged. Throws InvalidRelation if a pair
  /// mentions a name outside the domain.
  Relation(std::vector<VarName> domain, const std::vector<VarPair>& pairs);

  /// <∅, X>.
  static Relation discrete(std::vector<VarName> domain);

  /// `domain` must be sorted and duplicate-free; `bits.order()` must match.
  static Relation from_bits(std::vector<VarName> domain, PairSet bits);

  const std::vector<VarName>& domain() const noexcept { return domain_; }
  const PairSet& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return domain_.size(); }
  bool empty() const noexcept { return domain_.empty(); }

  std::optional<std::size_t> index_of(const VarName& v) const;
  bool has_element(const VarName& v) const { return index_of(v).has_value(); }
  bool contains(const VarName& a, const VarName& b) const;
  bool has(std::size_t i, std::size_t j) const noexcept { return bits_.test(i, j); }

  /// Pairs sorted lexicographically on (first, second).
  std::vector<VarPair> pairs() const;
  std::size_t pair_count() const noexcept { return bits_.count(); }

  /// The induced relation on `subset`, which must lie inside the domain.
  Relation restrict_to(std::span<const VarName> subset) const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  std::vector<VarName> domain_;
  PairSet bits_;
};

/// <R ∪ S, X ∪ Y>. Throws DomainOverlap unless the domains are disjoint.
Relation disjoint_union(const Relation& a, const Relation& b);

/// <R ∪ S ∪ (X × Y), X ∪ Y>. Throws DomainOverlap unless the domains are disjoint.
Relation concatenation(const Relation& a, const Relation& b);

/// Irreflexive and transitive.
bool is_partial_order(const Relation& r);

/// (x,z), (y,z), (y,u) ∈ R implies (x,u) ∈ R or (y,x) ∈ R or (u,z) ∈ R.
bool is_trifunctional(const Relation& r);

/// Every two distinct elements are joined by a zig-zag chain of pairs.
/// Vacuously true on empty and singleton domains.
bool is_connected(const Relation& r);

/// The finest decomposition of `r` into a disjoint union of connected
/// relations, ordered by the least name of each component.
std::vector<Relation> connected_components(const Relation& r);

/// Elements with both an incoming and an outgoing pair.
std::vector<VarName> inner_elements(const Relation& r);

/// <R − y, X − {y}>. Throws NotInDomain.
Relation remove_element(const Relation& r, const VarName& y);

/// Trifunctional partial order on a nonempty domain.
bool is_ftp(const Relation& r);

/// Splits a connected FTP relation with at least two elements into nonempty
/// factors whose concatenation is `r`, the right one prime (disconnected or a
/// singleton). Returns nullopt when `r` is not connected or has at most one
/// element. Throws NotFTP.
std::optional<std::pair<Relation, Relation>> prime_concat_split(const Relation& r);

/// A partial order in which any two predecessors of a common element are
/// comparable.
bool is_ftp_forest(const Relation& r);

/// The root of an FTP-tree, i.e. the element preceding every other one, or
/// nullopt when `r` is not an FTP-tree.
std::optional<VarName> ftp_tree_root(const Relation& r);

inline bool is_ftp_tree(const Relation& r) { return ftp_tree_root(r).has_value(); }

}  // namespace sforest
