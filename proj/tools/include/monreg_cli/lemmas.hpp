#pragma once

#include <functional>
#include <string>
#include <vector>

namespace monreg::cli {

/// One regression against a worked example. `run` returns an empty string
/// on success, otherwise a description of the mismatch.
struct LemmaCheck {
  std::string name;
  std::string theorem;
  std::function<std::string()> run;
};

const std::vector<LemmaCheck>& lemma_checks();

}  // namespace monreg::cli
