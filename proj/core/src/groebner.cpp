#include "monreg/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "monreg/errors.hpp"

namespace monreg::gb {

namespace {

// Counts reduction work against Options::max_terms.
class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void spend(std::size_t n) {
    used_ += n;
    if (used_ > limit_)
      throw ResourceLimit("Gröbner computation exceeded " + std::to_string(limit_) + " processed terms");
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct Reducer {
  const Polynomial* poly;
  Monomial lead;
  Rational lead_coeff;
  std::size_t position;
};

// Tie-break order: leading monomial ascending, then input position.
std::vector<Reducer> sorted_reducers(std::span<const Polynomial> basis, const TermOrder& order) {
  std::vector<Reducer> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) throw InvalidArgument("normal form modulo a zero basis element");
    const Term& lt = basis[i].leading_term(order);
    out.push_back({&basis[i], lt.monomial, lt.coeff, i});
  }
  std::stable_sort(out.begin(), out.end(), [&](const Reducer& a, const Reducer& b) {
    auto c = order.compare(a.lead, b.lead);
    if (c != 0) return c < 0;
    return a.position < b.position;
  });
  return out;
}

Polynomial reduce_with(const Polynomial& f, const std::vector<Reducer>& reducers, const TermOrder& order,
                       Budget& budget) {
  std::map<Monomial, Rational, OrderGreater> work(OrderGreater{&order});
  for (const Term& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    budget.spend(1);
    const Reducer* hit = nullptr;
    for (const Reducer& r : reducers) {
      if (r.lead.divides(top->first)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    Monomial shift = top->first.quotient(hit->lead);
    Rational factor = top->second / hit->lead_coeff;
    for (const Term& t : hit->poly->terms()) {
      Monomial m = t.monomial * shift;
      auto [it, inserted] = work.try_emplace(std::move(m), 0);
      it->second -= factor * t.coeff;
      if (it->second == 0) work.erase(it);
    }
    budget.spend(hit->poly->size());
  }
  return Polynomial(f.num_vars(), std::move(remainder));
}

void require_nonzero(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("S-polynomial of the zero polynomial");
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  require_nonzero(f);
  require_nonzero(g);
  Polynomial fm = f.monic(order), gm = g.monic(order);
  const Monomial& lf = fm.leading_monomial(order);
  const Monomial& lg = gm.leading_monomial(order);
  Monomial l = lcm(lf, lg);
  return fm.times(l.quotient(lf)) - gm.times(l.quotient(lg));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order,
                       const Options& options) {
  Budget budget(options.max_terms);
  return reduce_with(f, sorted_reducers(basis, order), order, budget);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order, const Options& options) {
  Budget budget(options.max_terms);
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.num_vars() != order.num_vars()) throw RingMismatch("generator and term order rings differ");
    if (!g.is_zero()) basis.push_back(g.monic(order));
  }
  if (basis.empty()) throw InvalidArgument("Buchberger needs a nonzero generator");
  std::vector<Monomial> leads;
  for (const Polynomial& b : basis) leads.push_back(b.leading_monomial(order));

  // Normal strategy: smallest lcm of leading monomials first, then indices.
  auto pair_less = [&](const std::tuple<Monomial, std::size_t, std::size_t>& a,
                       const std::tuple<Monomial, std::size_t, std::size_t>& b) {
    auto c = order.compare(std::get<0>(a), std::get<0>(b));
    if (c != 0) return c < 0;
    return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
  };
  std::set<std::tuple<Monomial, std::size_t, std::size_t>, decltype(pair_less)> pairs(pair_less);
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      // Coprime leading monomials: the S-polynomial reduces to zero.
      if (gcd(leads[i], leads[k]).is_one()) continue;
      // Two monomials: the S-polynomial is exactly zero.
      if (basis[i].is_monomial() && basis[k].is_monomial()) continue;
      pairs.emplace(lcm(leads[i], leads[k]), i, k);
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    auto [l, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial s = s_polynomial(basis[i], basis[j], order);
    Polynomial r = reduce_with(s, sorted_reducers(basis, order), order, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    leads.push_back(basis.back().leading_monomial(order));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return order.compare(leads[a], leads[b]) < 0; });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (std::size_t k : idx) {
    bool redundant = std::any_of(minimal_leads.begin(), minimal_leads.end(),
                                 [&](const Monomial& m) { return m.divides(leads[k]); });
    if (!redundant) {
      minimal.push_back(basis[k]);
      minimal_leads.push_back(leads[k]);
    }
  }

  // Inter-reduce tails.
  GroebnerBasis out{order, {}};
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(minimal[m]);
    }
    Polynomial reduced =
        others.empty() ? minimal[k] : reduce_with(minimal[k], sorted_reducers(others, order), order, budget);
    out.elements.push_back(reduced.monic(order));
  }
  return out;
}

MonomialIdeal GroebnerBasis::initial_ideal() const {
  std::vector<Monomial> leads;
  for (const Polynomial& p : elements) leads.push_back(p.leading_monomial(order));
  return MonomialIdeal(order.num_vars(), std::move(leads));
}

Polynomial GroebnerBasis::reduce(const Polynomial& f, const Options& options) const {
  return normal_form(f, elements, order, options);
}

MonomialIdeal initial_ideal(std::span<const Polynomial> gens, const TermOrder& order, const Options& options) {
  return buchberger(gens, order, options).initial_ideal();
}

std::vector<Polynomial> as_polynomials(const MonomialIdeal& ideal) {
  std::vector<Polynomial> out;
  out.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) out.emplace_back(g);
  return out;
}

std::vector<Polynomial> with_extra(const MonomialIdeal& ideal, std::span<const Polynomial> extra) {
  std::vector<Polynomial> out = as_polynomials(ideal);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

bool contains(const MonomialIdeal& ideal, const Polynomial& f) { return ideal.contains(f); }

bool contains_poly_ideal(std::span<const Polynomial> gens, const TermOrder& order, const Polynomial& f,
                         const Options& options) {
  if (f.is_zero()) return true;
  bool any_nonzero = std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return !g.is_zero(); });
  if (!any_nonzero) return false;
  return buchberger(gens, order, options).reduce(f, options).is_zero();
}

}  // namespace monreg::gb
