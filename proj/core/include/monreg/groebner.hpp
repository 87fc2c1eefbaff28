#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monreg/monomial_ideal.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/term_order.hpp"

namespace monreg::gb {

struct Options {
  /// Abort with ResourceLimit once this many terms have been processed by
  /// reduction steps within one call.
  std::size_t max_terms = 1'000'000;
};

/// A reduced Gröbner basis: monic elements, no leading monomial divides any
/// term of another element, sorted by leading monomial ascending.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> elements;

  MonomialIdeal initial_ideal() const;
  Polynomial reduce(const Polynomial& f, const Options& options = {}) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
};

/// S(f, g) = lcm/ini(f) * f - lcm/ini(g) * g with f and g made monic first.
/// Throws InvalidArgument if either input is zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Remainder of full multivariate division. When several leading monomials
/// divide the current term, the basis element with the smallest leading
/// monomial (then the lowest input position) is used.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order,
                       const Options& options = {});

/// Reduced Gröbner basis of the ideal generated by `gens`. Throws
/// InvalidArgument when every generator is zero.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         const Options& options = {});

MonomialIdeal initial_ideal(std::span<const Polynomial> gens, const TermOrder& order,
                            const Options& options = {});

/// Generators of a monomial ideal as polynomials.
std::vector<Polynomial> as_polynomials(const MonomialIdeal& ideal);

/// ideal ∪ extra, as a polynomial generating list.
std::vector<Polynomial> with_extra(const MonomialIdeal& ideal, std::span<const Polynomial> extra);

/// Monomial-ideal membership: every term lies in the ideal.
bool contains(const MonomialIdeal& ideal, const Polynomial& f);

/// Polynomial-ideal membership through the normal form modulo a Gröbner basis.
bool contains_poly_ideal(std::span<const Polynomial> gens, const TermOrder& order, const Polynomial& f,
                         const Options& options = {});

}  // namespace monreg::gb
