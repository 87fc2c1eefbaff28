#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"
#include "monreg/ring.hpp"
#include "monreg/term_order.hpp"

namespace monreg {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term& other) const {
    return monomial == other.monomial && coeff == other.coeff;
  }
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in canonical monomial order (descending) with no zero
/// coefficients, so structural equality is polynomial equality. The empty
/// term list is the zero polynomial.
class Polynomial {
 public:
  /// The zero polynomial in `nvars` variables.
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(const Monomial& m, Rational coeff = 1);
  /// Combines like terms and drops zeros.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Largest term under `order`; throws InvalidArgument on zero.
  const Term& leading_term(const TermOrder& order) const;
  const Monomial& leading_monomial(const TermOrder& order) const {
    return leading_term(order).monomial;
  }
  /// Divides by the leading coefficient under `order` (zero stays zero).
  Polynomial monic(const TermOrder& order) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const = default;

  /// e.g. `a^2*b - 3/2*c + 1`
  std::string to_string(const RingContext& ring) const;

 private:
  void normalize();

  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// A linear sum b_0 + b_1 + ... + b_t of distinct variables; b_0 is the head.
class LinearSum {
 public:
  /// Throws InvalidArgument if empty or if a variable repeats.
  explicit LinearSum(std::vector<VarIndex> vars);

  VarIndex head() const { return vars_.front(); }
  const std::vector<VarIndex>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool contains(VarIndex v) const;

  Polynomial to_polynomial(std::size_t nvars) const;
  /// `a + c + e` in the ring's names.
  std::string to_string(const RingContext& ring) const;

  bool operator==(const LinearSum&) const = default;

 private:
  std::vector<VarIndex> vars_;
};

}  // namespace monreg
