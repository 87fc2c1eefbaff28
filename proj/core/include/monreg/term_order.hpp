#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"
#include "monreg/ring.hpp"

namespace monreg {

/// Lexicographic term order along a variable priority (highest first).
class TermOrder {
 public:
  /// The empty order on zero variables.
  TermOrder() = default;
  /// Lex in declaration order: x_0 > x_1 > ... .
  static TermOrder lex(std::size_t nvars);
  /// Throws InvalidArgument unless `priority` is a permutation of 0..n-1.
  static TermOrder lex(std::vector<VarIndex> priority);
  /// The listed variables first (in the given order), the rest appended in
  /// declaration order. Throws on repeats or out-of-range indices.
  static TermOrder lex_leading(std::size_t nvars, std::span<const VarIndex> leading);

  std::size_t num_vars() const { return priority_.size(); }
  const std::vector<VarIndex>& priority() const { return priority_; }
  /// Position of `var` in the priority list (0 = highest).
  std::size_t rank(VarIndex var) const { return rank_.at(var); }
  bool ranks_above(VarIndex a, VarIndex b) const { return rank(a) < rank(b); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// `lex g f d a b c e`
  std::string to_string(const RingContext& ring) const;

  bool operator==(const TermOrder&) const = default;

 private:
  explicit TermOrder(std::vector<VarIndex> priority);

  std::vector<VarIndex> priority_;
  std::vector<std::size_t> rank_;
};

/// Strict-weak "greater first" comparator for ordered containers.
struct OrderGreater {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

}  // namespace monreg
