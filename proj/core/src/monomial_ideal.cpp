#include "monreg/monomial_ideal.hpp"

#include <algorithm>

#include "monreg/errors.hpp"

namespace monreg {

bool display_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), display_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  out.reserve(gens.size());
  // Sorted by degree, so a divisor always precedes its multiples.
  for (Monomial& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const Monomial& g : gens) {
    if (g.num_vars() != nvars) throw RingMismatch("ideal generator in a foreign ring");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

MonomialIdeal MonomialIdeal::prime(std::size_t nvars, std::span<const VarIndex> vars) {
  std::vector<Monomial> gens;
  for (VarIndex v : vars) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.num_vars() != nvars_) throw RingMismatch("membership test across rings");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
  if (f.num_vars() != nvars_) throw RingMismatch("membership test across rings");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return contains(t.monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.nvars_ != nvars_) throw RingMismatch("containment test across rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Exponent MonomialIdeal::degree_in_variable(VarIndex var) const {
  if (var >= nvars_) throw InvalidArgument("variable index out of range");
  Exponent d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g[var]);
  return d;
}

MonomialIdeal MonomialIdeal::localized(std::uint64_t keep_mask) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    for (VarIndex i = 0; i < nvars_; ++i) {
      if (!(keep_mask >> i & 1)) e[i] = 0;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(nvars_, std::move(gens));
}

std::string MonomialIdeal::to_string(const RingContext& ring) const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(ring);
  }
  return out + ")";
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw RingMismatch("ideal sum across rings");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw RingMismatch("ideal product across rings");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators()) {
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned t) {
  if (t == 0) throw InvalidArgument("ideal power needs t >= 1");
  MonomialIdeal out = ideal;
  for (unsigned i = 1; i < t; ++i) out = out * ideal;
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.num_vars() != ideal.num_vars()) throw RingMismatch("colon by a foreign monomial");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.quotient(gcd(g, m)));
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw RingMismatch("ideal intersection across rings");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators()) {
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

Exponent degree_in_variable(VarIndex var, const Monomial& m) {
  if (var >= m.num_vars()) throw InvalidArgument("variable index out of range");
  return m[var];
}

Exponent degree_in_variable(VarIndex var, const MonomialIdeal& ideal) {
  return ideal.degree_in_variable(var);
}

}  // namespace monreg
