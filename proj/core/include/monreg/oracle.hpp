#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monreg/monomial_ideal.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/ring.hpp"
#include "monreg/term_order.hpp"

/// Ground-truth machinery that the closed-form criteria are checked against.
namespace monreg::oracle {

/// A monomial prime P_C = (x_i : i in C).
struct MonomialPrime {
  std::vector<VarIndex> support;  // sorted

  static MonomialPrime from_mask(std::uint64_t mask);
  std::uint64_t mask() const;
  /// A linear sum lies in the prime iff its support is inside C.
  bool contains(const LinearSum& f) const;
  std::string to_string(const RingContext& ring) const;

  auto operator<=>(const MonomialPrime&) const = default;
};

struct DecompositionOptions {
  std::size_t max_nodes = 5'000'000;
};

/// Irredundant irreducible decomposition: every component is generated by
/// pure powers of variables and their intersection is `ideal`. Components
/// are sorted by their generator lists. Throws InvalidArgument on the zero
/// or unit ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     const DecompositionOptions& options = {});

/// Supports of the irreducible components, deduplicated and sorted.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal,
                                             const DecompositionOptions& options = {});

/// Minimal primes (minimal vertex covers for a square-free ideal).
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// P_C in Ass(R/I), decided by localizing at P_C and testing whether the
/// maximal ideal of Q[C] annihilates a nonzero element of the quotient.
bool is_associated(const MonomialIdeal& ideal, std::uint64_t support_mask);

struct ZeroDivisorReport {
  bool zerodivisor = false;
  std::optional<MonomialPrime> witness;
};

/// A linear sum is a zerodivisor on R/I iff its support lies in some
/// associated prime. The zero and unit ideals have no such prime.
ZeroDivisorReport is_zerodivisor_linear(const MonomialIdeal& ideal, const LinearSum& f);

/// Betti numbers of R/I (total, per homological degree) and the derived
/// projective dimension and depth.
struct TorProfile {
  std::map<std::size_t, std::size_t> betti;
  std::size_t pd = 0;
  std::size_t depth = 0;
};

struct TaylorOptions {
  std::size_t max_generators = 16;
};

/// Tor of R/I through the Taylor complex, one multidegree block at a time.
/// Requires a proper ideal with at most `max_generators` minimal generators.
TorProfile taylor_tor(const MonomialIdeal& ideal, const TaylorOptions& options = {});

struct LatticeOptions {
  std::size_t max_lattice_points = 2'000'000;
  std::size_t max_support = 24;
};

/// Tor of R/I through the upper Koszul complexes K^m over the LCM lattice.
/// Same Betti numbers as taylor_tor without the generator bound.
TorProfile lattice_tor(const MonomialIdeal& ideal, const LatticeOptions& options = {});

/// Projective dimension of R/I via the LCM lattice, scanning homological
/// degrees top-down and stopping as soon as the maximum is settled.
std::size_t projective_dimension(const MonomialIdeal& ideal, const LatticeOptions& options = {});

/// The LCM lattice: lcms of all nonempty subsets of G(I).
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_points);

struct DepthOptions {
  TaylorOptions taylor;
  LatticeOptions lattice;
};

/// depth R/I = n - pd(R/I) (Auslander-Buchsbaum). Uses taylor_tor when the
/// ideal has at most taylor.max_generators generators, the LCM lattice
/// otherwise. Throws InvalidArgument for the unit ideal.
std::size_t depth(const MonomialIdeal& ideal, const DepthOptions& options = {});

/// Integer polynomial in t, coefficient i at index i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial one_minus_t_power(std::size_t d);  // 1 - t^d

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial shifted(std::size_t d) const;  // t^d * this

  bool operator==(const IntPolynomial&) const = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// K(t) with HS(R/I) = K(t) / (1 - t)^n, by the pivot recursion
/// K(I) = K(I + (p)) + t^deg(p) K(I : p).
IntPolynomial hilbert_numerator(const MonomialIdeal& ideal);

/// The same numerator by inclusion-exclusion over generator subsets,
/// K(t) = sum_S (-1)^|S| t^deg lcm(S). At most 16 generators.
IntPolynomial hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal,
                                                    std::size_t max_generators = 16);

/// forms is a regular sequence on R/I iff
/// K(ini(I + forms)) = K(I) * (1 - t)^s.
bool is_regular_sequence(const MonomialIdeal& ideal, std::span<const LinearSum> forms, const TermOrder& order);

/// Standard polarization: x^a becomes x * x_1 * ... * x_{a-1} with fresh
/// variables appended after the original ones.
struct Polarization {
  MonomialIdeal ideal;
  /// origin[j] is the original variable that polarized variable j copies.
  std::vector<VarIndex> origin;

  std::size_t added_variables() const { return origin.size() - original_count; }
  std::size_t original_count = 0;
};

Polarization polarize(const MonomialIdeal& ideal);
/// Names for the polarized ring: originals, then `<name>_<k>` (made unique).
RingContext polarized_ring(const RingContext& ring, const Polarization& pol);
/// Collapses every copy onto its original variable.
MonomialPrime depolarize_prime(const MonomialPrime& prime, const Polarization& pol);

}  // namespace monreg::oracle
