#include <algorithm>
#include <set>

#include "monreg/errors.hpp"
#include "monreg/oracle.hpp"

namespace monreg::oracle {

Polarization polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  Polarization pol{MonomialIdeal(0), {}, n};
  // first_copy[x] is the index of x_1; copies of x are contiguous.
  std::vector<std::size_t> first_copy(n, 0);
  for (VarIndex i = 0; i < n; ++i) pol.origin.push_back(i);
  for (VarIndex x = 0; x < n; ++x) {
    Exponent d = ideal.degree_in_variable(x);
    first_copy[x] = pol.origin.size();
    for (Exponent k = 1; k < d; ++k) pol.origin.push_back(x);
  }
  const std::size_t total = pol.origin.size();
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> e(total, 0);
    for (VarIndex x = 0; x < n; ++x) {
      if (!g[x]) continue;
      e[x] = 1;
      for (Exponent k = 1; k < g[x]; ++k) e[first_copy[x] + k - 1] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  pol.ideal = ideal.is_zero() ? MonomialIdeal(total) : MonomialIdeal(total, std::move(gens));
  return pol;
}

RingContext polarized_ring(const RingContext& ring, const Polarization& pol) {
  if (ring.size() != pol.original_count) throw RingMismatch("ring does not match the polarized ideal");
  std::vector<std::string> names = ring.names();
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<Exponent> copies(ring.size(), 0);
  for (std::size_t j = pol.original_count; j < pol.origin.size(); ++j) {
    VarIndex x = pol.origin[j];
    std::string name = ring.name(x) + "_" + std::to_string(++copies[x]);
    while (taken.count(name)) name += "_";
    taken.insert(name);
    names.push_back(std::move(name));
  }
  return RingContext(std::move(names));
}

MonomialPrime depolarize_prime(const MonomialPrime& prime, const Polarization& pol) {
  std::set<VarIndex> support;
  for (VarIndex v : prime.support) {
    if (v >= pol.origin.size()) throw InvalidArgument("prime variable outside the polarized ring");
    support.insert(pol.origin[v]);
  }
  return MonomialPrime{std::vector<VarIndex>(support.begin(), support.end())};
}

}  // namespace monreg::oracle
