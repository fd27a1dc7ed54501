#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sforest/pair_set.hpp"
#include "sforest/relation.hpp"

namespace sforest {

/// A relationship [U, X]: a family U of pair sets over a common domain X.
/// Members are stored as bit matrices over the sorted domain; equality is set
/// equality of families.
class Relationship {
 public:
  Relationship() = default;

  /// Every member must have exactly `domain` as its domain (InvalidRelation).
  Relationship(std::vector<VarName> domain, const std::vector<Relation>& members);

  /// `domain` sorted and duplicate-free; every member of order domain.size().
  static Relationship from_bits(std::vector<VarName> domain, std::set<PairSet> family);

  /// [{R}, X].
  static Relationship singleton(const Relation& r);

  const std::vector<VarName>& domain() const noexcept { return domain_; }
  const std::set<PairSet>& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return family_.size(); }
  bool empty() const noexcept { return family_.empty(); }

  bool contains(const Relation& r) const;

  /// Members as relations, in family order.
  std::vector<Relation> members() const;

  friend bool operator==(const Relationship&, const Relationship&) = default;

 private:
  std::vector<VarName> domain_;
  std::set<PairSet> family_;
};

/// A linear order on a finite domain, held as its sequence of elements.
class Permutation {
 public:
  /// Throws InvalidInput on repeated names.
  explicit Permutation(std::vector<VarName> sequence);

  /// Throws InvalidInput unless `r` is a linear order.
  static Permutation from_relation(const Relation& r);

  const std::vector<VarName>& sequence() const noexcept { return sequence_; }
  std::size_t size() const noexcept { return sequence_.size(); }

  Relation to_relation() const;

  /// Names joined by single spaces.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<VarName> sequence_;
};

bool is_linear_order(const Relation& r);

enum class ShuffleMode { All, PartialOrders, LinearOrders };

/// Largest domain for which the unfiltered maps are materialized.
inline constexpr std::size_t kMaxExhaustiveDomain = 4;
/// Largest joint domain for the partial-order shuffle sum.
inline constexpr std::size_t kMaxPartialShuffleDomain = 5;

/// All Q over X ∪ Y with Q ∩ X² ∈ U and Q ∩ Y² ∈ V, filtered by `mode`.
/// Throws DomainOverlap, and BudgetExceeded when the joint domain is too
/// large for `mode` (All: 4, PartialOrders: 5, LinearOrders: unbounded).
Relationship shuffle_sum(const Relationship& u, const Relationship& v, ShuffleMode mode);

/// { R · S | R ∈ U, S ∈ V }. Throws DomainOverlap.
Relationship concat_product(const Relationship& u, const Relationship& v);

/// All supersets of R inside X². Throws BudgetExceeded beyond 4 elements.
Relationship map_E(const Relation& r);

/// All partial orders extending R. Throws NotPartialOrder, BudgetExceeded.
Relationship map_P(const Relation& r);

/// All linear extensions of R. Throws NotPartialOrder.
Relationship map_L(const Relation& r);

/// Linear extensions of a partial order in lexicographic order of their
/// sequences, enumerated by repeatedly choosing a minimal element.
/// Throws NotPartialOrder.
std::vector<Permutation> linear_extensions(const Relation& r);

/// Number of linear extensions, without materializing them.
std::size_t count_linear_extensions(const Relation& r);

/// Tr(R ∪ {(x, y)}). Throws PairConflict if x = y or (y, x) ∈ R,
/// NotPartialOrder, NotInDomain.
Relation extend_with_pair(const Relation& r, const VarName& x, const VarName& y);

/// A linear order containing R and (x, y), obtained by adding (x, y) and then
/// repeatedly adding the least incomparable pair. Same errors as
/// extend_with_pair.
Relation linear_extension_through(const Relation& r, const VarName& x, const VarName& y);

/// Some Q with R ∪ S ∪ (X × Y) ⊆ Q ⊆ (X ∪ Y)² that is not of the form
/// R' ∪ S' ∪ (X × Y) with R ⊆ R' ⊆ X², S ⊆ S' ⊆ Y². The returned witness has
/// the fewest pairs, ties broken by the bit order. With
/// `partial_orders_only`, Q must also be a partial order.
/// Throws DomainOverlap, InvalidInput on an empty side, BudgetExceeded
/// beyond 4 joint elements.
std::optional<Relation> find_q1_not_q2_witness(const Relation& r, const Relation& s,
                                               bool partial_orders_only = false);

}  // namespace sforest
