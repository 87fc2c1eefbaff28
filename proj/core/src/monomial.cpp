#include "monreg/monomial.hpp"

#include <algorithm>
#include <limits>

#include "monreg/errors.hpp"

namespace monreg {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw RingMismatch("monomials in " + std::to_string(a.num_vars()) + " and " +
                       std::to_string(b.num_vars()) + " variables");
}

Monomial Monomial::variable(std::size_t nvars, VarIndex var, Exponent power) {
  if (var >= nvars) throw InvalidArgument("variable index out of range");
  Monomial m(nvars);
  m.exps_[var] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_pure_power() const {
  return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }) <= 1;
}

std::vector<VarIndex> Monomial::support() const {
  std::vector<VarIndex> out;
  for (VarIndex i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64) throw ResourceLimit("support masks need at most 64 variables");
  std::uint64_t mask = 0;
  for (VarIndex i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  return out;
}

Monomial Monomial::with_exponent(VarIndex var, Exponent e) const {
  Monomial out(*this);
  out.exps_.at(var) = e;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > std::numeric_limits<Exponent>::max() - other.exps_[i])
      throw Overflow("exponent overflow in monomial product");
    exps_[i] += other.exps_[i];
  }
  return *this;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial out(a);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial out(a);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

std::pair<Monomial, Monomial> monomial_lcm_gcd(const Monomial& a, const Monomial& b) {
  return {lcm(a, b), gcd(a, b)};
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(const RingContext& ring) const {
  if (ring.size() != exps_.size()) throw RingMismatch("monomial printed in a foreign ring");
  std::string out;
  for (VarIndex i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace monreg
