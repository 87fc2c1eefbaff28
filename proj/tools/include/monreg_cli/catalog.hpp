#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monreg_cli/problem.hpp"

/// The worked examples as problem-file text, keyed by short names.
namespace monreg::cli::catalog {

struct Entry {
  std::string_view key;
  std::string_view text;
};

const std::vector<Entry>& entries();
/// Throws InvalidArgument for an unknown key.
ProblemFile load(std::string_view key);

}  // namespace monreg::cli::catalog
