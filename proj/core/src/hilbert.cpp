#include <algorithm>
#include <bit>
#include <unordered_map>

#include "monreg/errors.hpp"
#include "monreg/groebner.hpp"
#include "monreg/oracle.hpp"

namespace monreg::oracle {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::one_minus_t_power(std::size_t d) {
  std::vector<std::int64_t> c(d + 1, 0);
  c[0] += 1;
  c[d] -= 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      std::int64_t p;
      if (__builtin_mul_overflow(a.c_[i], b.c_[j], &p) || __builtin_add_overflow(c[i + j], p, &c[i + j]))
        throw Overflow("Hilbert numerator coefficient overflow");
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(std::size_t d) const {
  if (c_.empty()) return {};
  std::vector<std::int64_t> c(d, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i];
    if (!v) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    std::uint64_t a = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    if (i == 0 || a != 1) out += std::to_string(a);
    if (i > 0) out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

namespace {

struct GensHash {
  std::size_t operator()(const std::vector<Monomial>& gens) const {
    std::size_t h = gens.size();
    for (const Monomial& g : gens) h = h * 1000003u ^ g.hash();
    return h;
  }
};

class PivotNumerator {
 public:
  explicit PivotNumerator(std::size_t n) : n_(n) {}

  IntPolynomial run(const std::vector<Monomial>& gens) {
    if (gens.empty()) return IntPolynomial({1});
    if (gens.size() == 1 && gens.front().is_one()) return {};
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    IntPolynomial result = compute(gens);
    memo_.emplace(gens, result);
    return result;
  }

 private:
  IntPolynomial compute(const std::vector<Monomial>& gens) {
    // Variable shared by the most generators.
    std::vector<std::size_t> count(n_, 0);
    for (const Monomial& g : gens) {
      for (VarIndex v = 0; v < n_; ++v) count[v] += g[v] ? 1 : 0;
    }
    VarIndex x = static_cast<VarIndex>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[x] <= 1) {
      IntPolynomial k({1});
      for (const Monomial& g : gens) k = k * IntPolynomial::one_minus_t_power(g.degree());
      return k;
    }
    Exponent e = 0;
    for (const Monomial& g : gens) {
      if (g[x] && (!e || g[x] < e)) e = g[x];
    }
    Monomial pivot = Monomial::variable(n_, x, e);
    std::vector<Monomial> plus = gens;
    plus.push_back(pivot);
    IntPolynomial with = run(minimalize(std::move(plus)));
    IntPolynomial quotient = run(colon(MonomialIdeal(n_, gens), pivot).generators());
    return with + quotient.shifted(e);
  }

  std::size_t n_;
  std::unordered_map<std::vector<Monomial>, IntPolynomial, GensHash> memo_;
};

}  // namespace

IntPolynomial hilbert_numerator(const MonomialIdeal& ideal) {
  return PivotNumerator(ideal.num_vars()).run(ideal.generators());
}

IntPolynomial hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal, std::size_t max_generators) {
  const std::vector<Monomial>& gens = ideal.generators();
  if (gens.size() > max_generators)
    throw ResourceLimit("inclusion-exclusion needs " + std::to_string(gens.size()) + " generators, limit is " +
                        std::to_string(max_generators));
  if (ideal.is_unit()) return {};
  const std::uint64_t subsets = std::uint64_t{1} << gens.size();
  std::vector<Monomial> lcms(subsets);
  lcms[0] = Monomial(ideal.num_vars());
  std::vector<std::int64_t> c(1, 1);
  for (std::uint64_t s = 1; s < subsets; ++s) {
    std::uint64_t low = s & -s;
    lcms[s] = lcm(lcms[s & ~low], gens[std::countr_zero(low)]);
    std::size_t d = lcms[s].degree();
    if (c.size() <= d) c.resize(d + 1, 0);
    c[d] += std::popcount(s) % 2 ? -1 : 1;
  }
  return IntPolynomial(std::move(c));
}

bool is_regular_sequence(const MonomialIdeal& ideal, std::span<const LinearSum> forms, const TermOrder& order) {
  const std::size_t n = ideal.num_vars();
  if (order.num_vars() != n) throw RingMismatch("term order and ideal live in different rings");
  std::vector<Polynomial> extra;
  for (const LinearSum& f : forms) {
    for (VarIndex v : f.variables()) {
      if (v >= n) throw InvalidArgument("linear sum variable outside the ring");
    }
    extra.push_back(f.to_polynomial(n));
  }
  IntPolynomial expected = hilbert_numerator(ideal);
  for (std::size_t i = 0; i < forms.size(); ++i) expected = expected * IntPolynomial::one_minus_t_power(1);
  std::vector<Polynomial> gens = gb::with_extra(ideal, extra);
  if (gens.empty()) return forms.empty();
  MonomialIdeal ini = gb::initial_ideal(gens, order);
  return hilbert_numerator(ini) == expected;
}

}  // namespace monreg::oracle
