#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/ring.hpp"

namespace monreg {

/// A monomial ideal held by its minimal generating set G(I).
///
/// Generators are stored minimal and sorted (degree ascending, then canonical
/// lex descending), so two ideals are equal iff their generator lists are.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Minimalizes `gens`; all must live in `nvars` variables.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  static MonomialIdeal unit(std::size_t nvars);
  /// The prime generated by the listed variables.
  static MonomialIdeal prime(std::size_t nvars, std::span<const VarIndex> vars);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;
  /// Every term divisible by a generator (the zero polynomial is a member).
  bool contains(const Polynomial& f) const;
  bool contains(const MonomialIdeal& other) const;

  /// d_x(I): maximum exponent of `var` over the minimal generators (0 for the zero ideal).
  Exponent degree_in_variable(VarIndex var) const;

  /// Substitutes x = 1 for every variable outside `keep` (localization at a monomial prime).
  MonomialIdeal localized(std::uint64_t keep_mask) const;

  std::string to_string(const RingContext& ring) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Inclusion-minimal antichain of `gens` (sorted as in MonomialIdeal).
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Display order: degree ascending, then canonical lex descending.
bool display_less(const Monomial& a, const Monomial& b);

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
/// Minimal generators of I^t; throws InvalidArgument for t = 0.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned t);
/// (I : m), generated by g / gcd(g, m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// I ∩ J, generated by pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

Exponent degree_in_variable(VarIndex var, const Monomial& m);
Exponent degree_in_variable(VarIndex var, const MonomialIdeal& ideal);

}  // namespace monreg
