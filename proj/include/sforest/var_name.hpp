#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sforest {

/// True for identifiers matching [a-z][a-z0-9_]*.
bool is_valid_var_name(std::string_view text) noexcept;

/// A variable name. Ordered lexicographically, which fixes every canonical
/// form and output order in the library.
class VarName {
 public:
  explicit VarName(std::string text);
  explicit VarName(const char* text) : VarName(std::string(text)) {}

  const std::string& str() const noexcept { return text_; }

  friend auto operator<=>(const VarName&, const VarName&) = default;
  friend bool operator==(const VarName&, const VarName&) = default;

 private:
  std::string text_;
};

inline std::ostream& operator<<(std::ostream& os, const VarName& v) { return os << v.str(); }

/// Builds names from string literals, e.g. `vars({"x", "y"})`.
std::vector<VarName> vars(std::initializer_list<const char*> names);

}  // namespace sforest

template <>
struct std::hash<sforest::VarName> {
  std::size_t operator()(const sforest::VarName& v) const noexcept {
    return std::hash<std::string>{}(v.str());
  }
};
