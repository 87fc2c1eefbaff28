#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "monreg_cli/problem.hpp"

namespace monreg::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

struct CommandOptions {
  std::string command;
  std::string file;
  unsigned power = 1;
  std::optional<std::string> form;
  std::optional<std::string> vertex;
  bool json = false;
  bool strict = false;
};

/// What a command produced: a verdict, the theorem or lemma it rests on,
/// human-readable lines and the same content as JSON fields.
struct Report {
  bool pass = true;
  std::string theorem;
  std::vector<std::string> lines;
  nlohmann::json data = nlohmann::json::object();
};

const std::vector<std::string>& command_names();
bool needs_problem(const std::string& command);

/// Runs one command on an already parsed problem (ignored by verify-lemmas).
Report execute(const CommandOptions& options, const ProblemFile* problem);

/// Full invocation: reads the file, runs, prints, maps errors to exit codes.
int run(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace monreg::cli
