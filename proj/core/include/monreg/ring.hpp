#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace monreg {

/// Index of a variable in its ring's declaration order.
using VarIndex = std::size_t;

/// The polynomial ring Q[x_0, ..., x_{n-1}]: an ordered list of variable names.
class RingContext {
 public:
  /// Throws InvalidArgument on empty, duplicate or malformed names.
  explicit RingContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VarIndex i) const { return names_.at(i); }

  std::optional<VarIndex> find(std::string_view name) const;
  /// Throws InvalidArgument for an undeclared name.
  VarIndex index(std::string_view name) const;

  static bool valid_name(std::string_view name);

  bool operator==(const RingContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarIndex> lookup_;
};

}  // namespace monreg
