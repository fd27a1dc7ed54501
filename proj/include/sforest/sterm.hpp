#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sforest/relation.hpp"
#include "sforest/var_name.hpp"

namespace sforest {

/// A term over variables with an associative, commutative sum `+` and an
/// associative product `*`, held in canonical form: sums and products are
/// flattened n-ary nodes, and sum arguments are sorted. Two terms denote the
/// same element of the free structure exactly when they compare equal.
///
/// The total order used for canonical sorting compares kinds first
/// (Var < Sum < Prod), then names, then argument lists lexicographically.
class STerm {
 public:
  enum class Kind : std::uint8_t { Var, Sum, Prod };

  static STerm var(VarName name);
  static STerm var(const char* name) { return var(VarName(name)); }

  /// Flattens nested sums and sorts. A single argument is returned unchanged.
  static STerm sum(std::vector<STerm> args);

  /// Flattens nested products. A single argument is returned unchanged.
  static STerm product(std::vector<STerm> args);

  Kind kind() const noexcept { return kind_; }
  bool is_var() const noexcept { return kind_ == Kind::Var; }
  bool is_sum() const noexcept { return kind_ == Kind::Sum; }
  bool is_product() const noexcept { return kind_ == Kind::Prod; }

  /// Only meaningful for variables.
  const VarName& name() const { return *name_; }
  std::span<const STerm> args() const noexcept { return args_; }

  friend std::strong_ordering operator<=>(const STerm& a, const STerm& b);
  friend bool operator==(const STerm& a, const STerm& b);

 private:
  STerm(Kind kind, std::optional<VarName> name, std::vector<STerm> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::optional<VarName> name_;
  std::vector<STerm> args_;
};

/// Grammar (whitespace ignored, `*` stands for the product):
///   term := prod ('+' prod)*
///   prod := atom ('*' atom)*
///   atom := name | '(' term ')'
/// Throws ParseError with the offending position.
STerm parse_sterm(std::string_view text);

/// Inverse of parse_sterm on canonical terms; parentheses only where `*`
/// would otherwise capture part of a sum.
std::string render_sterm(const STerm& t);

inline std::ostream& operator<<(std::ostream& os, const STerm& t) { return os << render_sterm(t); }

/// Sorted, duplicate-free.
std::vector<VarName> variables(const STerm& t);

/// No variable occurs twice.
bool is_diversified(const STerm& t);

/// Diversified member of the inductive set generated by variables, sums of
/// members, and products `s * t` with `t` a member and `s` free of `+`.
bool is_s_forest(const STerm& t);

/// An S-forest whose top node is not a sum.
bool is_s_tree(const STerm& t);

/// Interprets `+` as disjoint union and `*` as concatenation of relations.
/// Throws NotDiversified.
Relation kappa(const STerm& t);

/// The unique canonical term whose kappa is `r`. Throws NotFTP.
STerm sterm_of_ftp(const Relation& r);

}  // namespace sforest
