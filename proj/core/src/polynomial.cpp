#include "monreg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "monreg/errors.hpp"

namespace monreg {

Polynomial::Polynomial(const Monomial& m, Rational coeff) : nvars_(m.num_vars()) {
  if (coeff != 0) terms_.push_back({m, std::move(coeff)});
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.monomial.num_vars() != nvars_) throw RingMismatch("polynomial term in a foreign ring");
  }
  normalize();
}

void Polynomial::normalize() {
  std::map<Monomial, Rational, std::greater<>> acc;
  for (Term& t : terms_) acc[std::move(t.monomial)] += t.coeff;
  terms_.clear();
  for (auto& [m, c] : acc) {
    if (c != 0) terms_.push_back({m, c});
  }
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw InvalidArgument("the zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  Rational lc = leading_term(order).coeff;
  if (lc == 1) return *this;
  return scaled(1 / lc);
}

namespace {

// Merge of two canonical-descending term lists with a sign on the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw RingMismatch("polynomial sum across rings");
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw RingMismatch("polynomial difference across rings");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("polynomial product across rings");
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) terms.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial(a.nvars_, std::move(terms));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  if (m.num_vars() != nvars_) throw RingMismatch("monomial multiplier in a foreign ring");
  Polynomial out(nvars_);
  out.terms_ = terms_;
  // Multiplying by a monomial preserves the canonical (lex) order.
  for (Term& t : out.terms_) t.monomial *= m;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out{Monomial(nvars_)};
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string(const RingContext& ring) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = t.monomial.is_one();
    if (c != 1 || unit) {
      out += c.get_str();
      if (!unit) out += '*';
    }
    if (!unit) out += t.monomial.to_string(ring);
  }
  return out;
}

LinearSum::LinearSum(std::vector<VarIndex> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw InvalidArgument("a linear sum needs at least one variable");
  std::set<VarIndex> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw InvalidArgument("linear sum variables must be distinct");
}

bool LinearSum::contains(VarIndex v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

Polynomial LinearSum::to_polynomial(std::size_t nvars) const {
  std::vector<Term> terms;
  for (VarIndex v : vars_) terms.push_back({Monomial::variable(nvars, v), 1});
  return Polynomial(nvars, std::move(terms));
}

std::string LinearSum::to_string(const RingContext& ring) const {
  std::string out;
  for (VarIndex v : vars_) {
    if (!out.empty()) out += " + ";
    out += ring.name(v);
  }
  return out;
}

}  // namespace monreg
