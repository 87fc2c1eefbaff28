#include "monreg/initreg.hpp"

#include <algorithm>
#include <map>

#include "initreg_internal.hpp"
#include "monreg/combinatorics.hpp"
#include "monreg/errors.hpp"
#include "monreg/groebner.hpp"

namespace monreg::initreg {

namespace detail {

std::optional<Monomial> generator_divisible_by(const MonomialIdeal& ideal, const Monomial& m) {
  for (const Monomial& g : ideal.generators()) {
    if (m.divides(g)) return g;
  }
  return std::nullopt;
}

namespace {

Monomial var(const MonomialIdeal& ideal, VarIndex v) { return Monomial::variable(ideal.num_vars(), v); }

// Variables of `vars` dividing some M in N(x); reported as (v, x) with x*M.
void neighborhood_clash(const MonomialIdeal& ideal, std::span<const VarIndex> vars, VarIndex x, Verdict& out) {
  for (const Monomial& m : comb::neighborhood_monomials(ideal, x)) {
    for (VarIndex v : vars) {
      if (m[v]) out.failures.push_back({"neighborhood", {v, x}, m * var(ideal, x)});
    }
  }
}

}  // namespace

void cross_conditions(const MonomialIdeal& ideal, std::span<const Pair> pairs, std::span<const Triple> triples,
                      Verdict& out) {
  std::map<VarIndex, std::size_t> uses;
  for (const Pair& p : pairs) {
    for (VarIndex v : p) ++uses[v];
  }
  for (const Triple& t : triples) {
    for (VarIndex v : t) ++uses[v];
  }
  for (auto [v, count] : uses) {
    if (count > 1) out.failures.push_back({"overlap", {v}, std::nullopt});
  }
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    for (std::size_t r = j + 1; r < pairs.size(); ++r) {
      VarIndex a = pairs[j][1], b = pairs[r][1];
      if (auto g = generator_divisible_by(ideal, var(ideal, a) * var(ideal, b)))
        out.failures.push_back({"shared-generator", {a, b}, *g});
    }
  }
  for (std::size_t j = 0; j < triples.size(); ++j) {
    for (VarIndex x : {triples[j][1], triples[j][2]}) {
      for (std::size_t i = 0; i < triples.size(); ++i) {
        if (i != j) neighborhood_clash(ideal, triples[i], x, out);
      }
      for (const Pair& p : pairs) neighborhood_clash(ideal, p, x, out);
    }
  }
}

}  // namespace detail

using detail::generator_divisible_by;

namespace {

Monomial var(std::size_t n, VarIndex v) { return Monomial::variable(n, v); }

void require_in_ring(const MonomialIdeal& ideal, std::initializer_list<VarIndex> vars) {
  for (VarIndex v : vars) {
    if (v >= ideal.num_vars()) throw InvalidArgument("variable outside the ring");
  }
}

void require_distinct(std::initializer_list<VarIndex> vars) {
  std::vector<VarIndex> v(vars);
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InvalidArgument("variables must be distinct");
}

void require_descending(const TermOrder& order, VarIndex b0, VarIndex b1, VarIndex b2) {
  if (!order.ranks_above(b0, b1) || !order.ranks_above(b1, b2))
    throw InvalidArgument("term order must satisfy b0 > b1 > b2");
}

}  // namespace

std::string Failure::describe(const RingContext& ring) const {
  std::string out = code;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : " ") + ring.name(vars[i]);
  if (generator) out += " at " + generator->to_string(ring);
  return out;
}

bool Verdict::has(const std::string& code) const {
  return std::any_of(failures.begin(), failures.end(), [&](const Failure& f) { return f.code == code; });
}

StarCheck check_star(const MonomialIdeal& ideal, const LinearSum& s) {
  const std::size_t n = ideal.num_vars();
  for (VarIndex v : s.variables()) {
    if (v >= n) throw InvalidArgument("linear sum variable outside the ring");
  }
  StarCheck out;
  for (VarIndex b : s.variables()) {
    for (const Monomial& g : ideal.generators()) {
      if (g[b] > 1) out.verdict.failures.push_back({"star-power", {b}, g});
    }
  }
  const VarIndex b0 = s.head();
  for (const Monomial& g : ideal.generators()) {
    if (!g[b0]) continue;
    bool covered = std::any_of(s.variables().begin() + 1, s.variables().end(), [&](VarIndex b) { return g[b] > 0; });
    if (!covered) out.verdict.failures.push_back({"star-cover", {b0}, g});
  }
  if (out.verdict.pass()) {
    out.witness = StarWitness{b0, std::vector<VarIndex>(s.variables().begin() + 1, s.variables().end()),
                              TermOrder::lex_leading(n, s.variables())};
  }
  return out;
}

Monomial hat_substitute(const Monomial& m, VarIndex b0, VarIndex b1) {
  if (b0 == b1) throw InvalidArgument("hat substitution needs distinct variables");
  if (b0 >= m.num_vars() || b1 >= m.num_vars()) throw InvalidArgument("variable outside the ring");
  Exponent e = m[b0];
  if (!e) return m;
  return m.with_exponent(b0, 0) * var(m.num_vars(), b1).with_exponent(b1, e);
}

std::vector<MonomialIdeal> iterated_initial(const MonomialIdeal& ideal, std::span<const LinearSum> forms,
                                            const TermOrder& order) {
  const std::size_t n = ideal.num_vars();
  if (order.num_vars() != n) throw RingMismatch("term order and ideal live in different rings");
  for (const LinearSum& f : forms) {
    for (VarIndex v : f.variables()) {
      if (v >= n) throw InvalidArgument("linear sum variable outside the ring");
      if (v != f.head() && !order.ranks_above(f.head(), v))
        throw InvalidArgument("term order must rank each form's head above its tail");
    }
  }
  std::vector<MonomialIdeal> chain{ideal};
  for (const LinearSum& f : forms) {
    std::vector<Polynomial> extra{f.to_polynomial(n)};
    chain.push_back(gb::initial_ideal(gb::with_extra(chain.back(), extra), order));
  }
  return chain;
}

InitialRegularityReport is_initially_regular(const MonomialIdeal& ideal, std::span<const LinearSum> forms,
                                             const TermOrder& order, bool strict) {
  InitialRegularityReport report;
  report.chain = iterated_initial(ideal, forms, order);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const MonomialIdeal& target = report.chain[strict ? i + 1 : i];
    oracle::ZeroDivisorReport z = oracle::is_zerodivisor_linear(target, forms[i]);
    report.steps.push_back({!z.zerodivisor, z.witness});
    report.regular = report.regular && !z.zerodivisor;
  }
  return report;
}

MonomialIdeal colon_linear_binomial(const MonomialIdeal& ideal, unsigned t, VarIndex b0, VarIndex b1) {
  require_in_ring(ideal, {b0, b1});
  require_distinct({b0, b1});
  if (t < 1 || t > 3) throw HypothesisViolation("the binomial colon is monomial only for powers 1..3");
  if (!check_star(ideal, LinearSum({b0, b1})).verdict.pass())
    throw HypothesisViolation("condition (*) fails for the pair");
  if (ideal.is_unit()) return ideal;
  MonomialIdeal power = ideal.is_zero() ? ideal : ideal_power(ideal, t);
  const std::size_t n = ideal.num_vars();
  return intersect(colon(power, var(n, b0)), colon(power, var(n, b1)));
}

Verdict criterion_binomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1) {
  require_in_ring(ideal, {b0, b1});
  require_distinct({b0, b1});
  const std::size_t n = ideal.num_vars();
  Verdict out = check_star(ideal, LinearSum({b0, b1})).verdict;
  std::vector<VarIndex> touching;
  for (VarIndex c = 0; c < n; ++c) {
    if (generator_divisible_by(ideal, var(n, b1) * var(n, c))) touching.push_back(c);
  }
  for (std::size_t i = 0; i < touching.size(); ++i) {
    for (std::size_t j = i; j < touching.size(); ++j) {
      VarIndex c = touching[i], d = touching[j];
      if (auto g = generator_divisible_by(ideal, var(n, c) * var(n, d))) {
        out.failures.push_back({"obstruction", {c, d}, *g});
        return out;
      }
    }
  }
  return out;
}

Verdict criterion_binomial_family(const MonomialIdeal& ideal, std::span<const Pair> pairs) {
  Verdict out;
  detail::cross_conditions(ideal, pairs, {}, out);
  for (const Pair& p : pairs) {
    Verdict one = criterion_binomial(ideal, p[0], p[1]);
    out.failures.insert(out.failures.end(), one.failures.begin(), one.failures.end());
  }
  return out;
}

Verdict criterion_trinomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1, VarIndex b2) {
  require_in_ring(ideal, {b0, b1, b2});
  require_distinct({b0, b1, b2});
  const std::size_t n = ideal.num_vars();
  const std::vector<Monomial>& gens = ideal.generators();
  Verdict out;
  for (VarIndex b : {b0, b1, b2}) {
    for (const Monomial& g : gens) {
      if (g[b] > 1) out.failures.push_back({"clause-a", {b}, g});
    }
  }
  const Monomial b0b1 = var(n, b0) * var(n, b1), b0b2 = var(n, b0) * var(n, b2);
  for (const Monomial& g : gens) {
    if (g[b0] && g != b0b1 && g != b0b2) out.failures.push_back({"clause-b", {b0}, g});
  }
  if (auto g = generator_divisible_by(ideal, var(n, b1) * var(n, b2)))
    out.failures.push_back({"clause-c", {b1, b2}, *g});

  auto divides_gen = [&](VarIndex x, VarIndex y) { return generator_divisible_by(ideal, var(n, x) * var(n, y)); };
  std::vector<bool> with_b1(n), with_b2(n);
  for (VarIndex z = 0; z < n; ++z) {
    with_b1[z] = divides_gen(b1, z).has_value();
    with_b2[z] = divides_gen(b2, z).has_value();
  }
  // clause (d) at b1 and at b2
  for (const std::vector<bool>* with : {&with_b1, &with_b2}) {
    [&] {
      for (VarIndex z1 = 0; z1 < n; ++z1) {
        for (VarIndex z2 = z1; z2 < n; ++z2) {
          if (!(*with)[z1] || !(*with)[z2]) continue;
          if (auto g = divides_gen(z1, z2)) {
            out.failures.push_back({"clause-d", {z1, z2}, *g});
            return;
          }
        }
      }
    }();
  }
  [&] {
    for (VarIndex x1 = 0; x1 < n; ++x1) {
      for (VarIndex x2 = 0; x2 < n; ++x2) {
        if (!with_b1[x1] || !with_b2[x2]) continue;
        if (auto g = divides_gen(x1, x2)) {
          out.failures.push_back({"clause-e", {x1, x2}, *g});
          return;
        }
      }
    }
  }();
  return out;
}

Verdict criterion_trinomial_family(const MonomialIdeal& ideal, std::span<const Triple> triples) {
  Verdict out;
  detail::cross_conditions(ideal, {}, triples, out);
  for (const Triple& t : triples) {
    Verdict one = criterion_trinomial(ideal, t[0], t[1], t[2]);
    out.failures.insert(out.failures.end(), one.failures.begin(), one.failures.end());
  }
  return out;
}

MonomialIdeal closed_form_ini_trinomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1, VarIndex b2,
                                        const TermOrder& order) {
  require_in_ring(ideal, {b0, b1, b2});
  require_distinct({b0, b1, b2});
  require_descending(order, b0, b1, b2);
  const std::size_t n = ideal.num_vars();
  if (!check_star(ideal, LinearSum({b0, b1, b2})).verdict.pass())
    throw HypothesisViolation("condition (*) fails for the triple");
  if (generator_divisible_by(ideal, var(n, b1) * var(n, b2)))
    throw HypothesisViolation("b1*b2 divides a minimal generator");
  std::vector<Monomial> gens{var(n, b0)};
  for (const Monomial& m : ideal.generators()) gens.push_back(hat_substitute(m, b0, b1));
  const Monomial b2sq = var(n, b2).with_exponent(b2, 2);
  for (const Monomial& x_gen : ideal.generators()) {
    if (!x_gen[b1]) continue;
    Monomial x = x_gen.with_exponent(b1, x_gen[b1] - 1);
    if (x[b0]) continue;
    for (const Monomial& m_gen : ideal.generators()) {
      if (!m_gen[b0] || !m_gen[b2]) continue;
      Monomial m = m_gen.with_exponent(b0, m_gen[b0] - 1).with_exponent(b2, m_gen[b2] - 1);
      gens.push_back(lcm(x, m) * b2sq);
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal closed_form_ini_square_trinomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1, VarIndex b2,
                                               const TermOrder& order) {
  require_in_ring(ideal, {b0, b1, b2});
  require_distinct({b0, b1, b2});
  require_descending(order, b0, b1, b2);
  if (!criterion_trinomial(ideal, b0, b1, b2).pass())
    throw HypothesisViolation("clauses (a)-(e) do not all hold for the triple");
  MonomialIdeal ini = closed_form_ini_trinomial(ideal, b0, b1, b2, order);
  const std::size_t n = ideal.num_vars();
  return MonomialIdeal(n, {var(n, b0)}) + ini * ini;
}

std::string to_string(FormKind kind) { return kind == FormKind::binomial ? "binomial" : "trinomial"; }

std::string to_string(SequenceVerdict verdict) {
  return verdict == SequenceVerdict::regular ? "regular" : "initially_regular";
}

TermOrder sequence_order(std::size_t nvars, std::span<const Pair> pairs, std::span<const Triple> triples) {
  std::vector<VarIndex> leading;
  for (std::size_t pos = 0; pos < 3; ++pos) {
    if (pos < 2) {
      for (const Pair& p : pairs) leading.push_back(p[pos]);
    }
    for (const Triple& t : triples) leading.push_back(t[pos]);
  }
  return TermOrder::lex_leading(nvars, leading);
}

CombinedResult criterion_combined(const MonomialIdeal& ideal, std::span<const Pair> pairs,
                                  std::span<const Triple> triples) {
  CombinedResult out;
  detail::cross_conditions(ideal, pairs, triples, out.verdict);
  for (const Pair& p : pairs) {
    Verdict one = criterion_binomial(ideal, p[0], p[1]);
    out.verdict.failures.insert(out.verdict.failures.end(), one.failures.begin(), one.failures.end());
  }
  for (const Triple& t : triples) {
    Verdict one = criterion_trinomial(ideal, t[0], t[1], t[2]);
    out.verdict.failures.insert(out.verdict.failures.end(), one.failures.begin(), one.failures.end());
  }
  if (!out.verdict.pass()) return out;
  SequenceCertificate cert;
  for (const Pair& p : pairs) {
    cert.forms.emplace_back(std::vector<VarIndex>{p[0], p[1]});
    cert.kinds.push_back(FormKind::binomial);
  }
  for (const Triple& t : triples) {
    cert.forms.emplace_back(std::vector<VarIndex>{t[0], t[1], t[2]});
    cert.kinds.push_back(FormKind::trinomial);
  }
  cert.verdict = triples.empty() ? SequenceVerdict::regular : SequenceVerdict::initially_regular;
  cert.depth_lower_bound = cert.forms.size();
  cert.order = sequence_order(ideal.num_vars(), pairs, triples);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace monreg::initreg
