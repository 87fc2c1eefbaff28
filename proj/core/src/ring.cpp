#include "monreg/ring.hpp"

#include <cctype>

#include "monreg/errors.hpp"

namespace monreg {

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("a ring needs at least one variable");
  for (VarIndex i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw InvalidArgument("invalid variable name '" + names_[i] + "'");
    if (!lookup_.emplace(names_[i], i).second)
      throw InvalidArgument("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<VarIndex> RingContext::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VarIndex RingContext::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("undeclared variable '" + std::string(name) + "'");
}

bool RingContext::valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace monreg
