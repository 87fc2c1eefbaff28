#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monreg/errors.hpp"
#include "monreg/monomial_ideal.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/ring.hpp"
#include "monreg/term_order.hpp"

namespace monreg::cli {

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InvalidArgument("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct NamedForm {
  std::string id;
  LinearSum sum;
  bool operator==(const NamedForm&) const = default;
};

/// One problem: a ring, an optional lex order, an ideal and named forms.
///
///   ring: a b c
///   order: lex c a        # omitted names follow in declaration order
///   ideal: a^2*b b*c
///   form f1: a + b
struct ProblemFile {
  RingContext ring;
  bool order_declared = false;
  TermOrder order;
  MonomialIdeal ideal;
  std::vector<NamedForm> forms;

  /// Throws InvalidArgument for an unknown id.
  const NamedForm& form(std::string_view id) const;
  bool operator==(const ProblemFile&) const = default;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem_file(const std::string& path);
/// Canonical text; parse_problem(to_text(p)) == p.
std::string to_text(const ProblemFile& problem);

/// `a^2*b`, `1` for the unit; names must be declared in `ring`.
Monomial parse_monomial(const RingContext& ring, std::string_view token);
/// `a + b + c` over distinct declared names.
LinearSum parse_linear_sum(const RingContext& ring, std::string_view text);

}  // namespace monreg::cli
