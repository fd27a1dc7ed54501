#include "sforest/var_name.hpp"

#include "sforest/error.hpp"

namespace sforest {

bool is_valid_var_name(std::string_view text) noexcept {
  if (text.empty() || text.front() < 'a' || text.front() > 'z') return false;
  for (char c : text) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

VarName::VarName(std::string text) : text_(std::move(text)) {
  if (!is_valid_var_name(text_)) {
    throw Error(ErrorKind::InvalidName, "'" + text_ + "' is not a variable name");
  }
}

std::vector<VarName> vars(std::initializer_list<const char*> names) {
  std::vector<VarName> out;
  out.reserve(names.size());
  for (const char* n : names) out.emplace_back(n);
  return out;
}

}  // namespace sforest
