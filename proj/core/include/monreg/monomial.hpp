#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monreg/ring.hpp"

namespace monreg {

using Exponent = std::uint32_t;

/// A monomial x^a in a ring with a fixed number of variables, stored as its
/// exponent vector. The unit monomial is the all-zero vector.
///
/// Binary operations require both operands to have the same number of
/// variables and throw RingMismatch otherwise.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, VarIndex var, Exponent power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](VarIndex i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// True for 1 and for x^e, e > 0.
  bool is_pure_power() const;
  std::vector<VarIndex> support() const;
  /// Support as a bitmask; requires num_vars() <= 64.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  /// Exact quotient; throws InvalidArgument if `divisor` does not divide *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial with_exponent(VarIndex var, Exponent e) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Canonical (declaration-order lex) comparison; used for containers, not
  /// for leading terms.
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

  /// Human form such as `a^2*b`; the unit prints as `1`.
  std::string to_string(const RingContext& ring) const;

 private:
  std::vector<Exponent> exps_;
};

/// (lcm, gcd) in one call; lcm * gcd == a * b.
std::pair<Monomial, Monomial> monomial_lcm_gcd(const Monomial& a, const Monomial& b);

void require_same_ring(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace monreg
