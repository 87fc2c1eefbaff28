#include "monreg_cli/lemmas.hpp"

#include <algorithm>
#include <sstream>

#include "monreg/combinatorics.hpp"
#include "monreg/errors.hpp"
#include "monreg/groebner.hpp"
#include "monreg/initreg.hpp"
#include "monreg/oracle.hpp"
#include "monreg_cli/catalog.hpp"
#include "monreg_cli/commands.hpp"

namespace monreg::cli {

namespace {

using initreg::Pair;
using initreg::Triple;

struct Example {
  ProblemFile p;
  explicit Example(std::string_view key) : p(catalog::load(key)) {}

  VarIndex v(std::string_view name) const { return p.ring.index(name); }
  Monomial m(std::string_view text) const { return parse_monomial(p.ring, text); }
  LinearSum form(std::string_view id) const { return p.form(id).sum; }
  LinearSum sum(std::string_view text) const { return parse_linear_sum(p.ring, text); }
  MonomialIdeal ideal(std::string_view text) const {
    std::istringstream in{std::string(text)};
    std::vector<Monomial> gens;
    for (std::string tok; in >> tok;) gens.push_back(m(tok));
    return MonomialIdeal(p.ring.size(), gens);
  }
  Polynomial poly(std::string_view text) const {
    Polynomial out(p.ring.size());
    std::string s(text);
    std::replace(s.begin(), s.end(), '+', ' ');
    std::istringstream in(s);
    for (std::string tok; in >> tok;) out += Polynomial(m(tok));
    return out;
  }
  std::string show(const MonomialIdeal& i) const { return i.to_string(p.ring); }
};

std::string expect(bool ok, const std::string& message) { return ok ? "" : message; }

template <class T>
std::string expect_eq(const T& got, const T& want, const std::string& what) {
  if (got == want) return "";
  std::ostringstream s;
  s << what << ": got " << got << ", expected " << want;
  return s.str();
}

bool contains_generator(const MonomialIdeal& i, const Monomial& m) {
  const auto& g = i.generators();
  return std::find(g.begin(), g.end(), m) != g.end();
}

std::string depth_check(std::string_view key, unsigned t, std::size_t want) {
  Example e(key);
  return expect_eq(oracle::depth(ideal_power(e.p.ideal, t)), want,
                   std::string(key) + " depth of R/I^" + std::to_string(t));
}

std::vector<LemmaCheck> build() {
  std::vector<LemmaCheck> c;
  auto add = [&](std::string name, std::string theorem, std::function<std::string()> fn) {
    c.push_back({std::move(name), std::move(theorem), std::move(fn)});
  };

  // Groebner
  add("s-resultant-common-factor", "S-polynomials of multiples of one form", [] {
    Example e("path-3");
    TermOrder order = TermOrder::lex(e.p.ring.size());
    Polynomial f = e.poly("a + b");
    Polynomial s = gb::s_polynomial(f.times(e.m("c")), f.times(e.m("d^2")), order);
    return expect(s.is_zero(), "S(Mf, Nf) is not zero");
  });
  add("s-resultant-disjoint-factors", "S-polynomials of monomial multiples", [] {
    Example e("path-3");
    TermOrder order = TermOrder::lex(e.p.ring.size());
    Monomial m1 = e.m("c*d"), m2 = e.m("d^2");
    Polynomial g1 = e.poly("a + b"), g2 = e.poly("a^2 + b");
    Polynomial lhs = gb::s_polynomial(g1.times(m1), g2.times(m2), order);
    Polynomial rhs = gb::s_polynomial(g1, g2, order).times(lcm(m1, m2));
    return expect(lhs == rhs, "S(M1 g1, M2 g2) differs from lcm(M1, M2) S(g1, g2)");
  });
  add("pentagon-initial-ideal", "Buchberger's criterion", [] {
    Example e("pentagon");
    MonomialIdeal ini = gb::initial_ideal(gb::with_extra(e.p.ideal, {{e.form("f").to_polynomial(5)}}), e.p.order);
    return expect(ini.contains(e.m("x4*x5")) && ini.contains(e.m("x3*x5^2")),
                  "ini(I, f) misses x4x5 or x3x5^2: " + e.show(ini));
  });
  add("star-graph-initial-ideal", "Buchberger's criterion", [] {
    Example e("star");
    MonomialIdeal ini =
        gb::initial_ideal(gb::with_extra(e.p.ideal, {{e.form("f").to_polynomial(e.p.ring.size())}}), e.p.order);
    MonomialIdeal want = e.ideal(
        "b0 b1*x1 b2*x2 b3*x3 b4*x4 b1^2 b1*b2 b1*b3 b1*b4 b1*b5 x1*b2^2 x1*b2*b3 x1*b2*b4 x1*b2*b5 "
        "x1*x2*b3^2 x1*x2*b3*b4 x1*x2*b3*b5 x1*x2*x3*b4^2 x1*x2*x3*b4*b5 x1*x2*x3*x4*b5^2");
    return expect(ini == want && want.size() == 20, "got " + e.show(ini));
  });
  add("colon-counterexample-b-f1", "monomial membership", [] {
    Example e("colon-counterexample");
    Monomial f1 = e.m("b^3*x1*x2*x3*x4*y1*y2*y3*y4");
    return expect(ideal_power(e.p.ideal, 4).contains(e.m("b") * f1), "b f1 is not in I^4");
  });
  add("colon-counterexample-a-f1", "monomial membership", [] {
    Example e("colon-counterexample");
    Monomial f1 = e.m("b^3*x1*x2*x3*x4*y1*y2*y3*y4");
    return expect(!ideal_power(e.p.ideal, 4).contains(e.m("a") * f1), "a f1 is in I^4");
  });

  // initreg
  add("star-intro-trinomial", "condition (star)", [] {
    Example e("intro");
    return expect(initreg::check_star(e.p.ideal, e.form("f3")).witness.has_value(), "a + c + e has no witness");
  });
  add("star-intro-binomial", "condition (star)", [] {
    Example e("intro");
    return expect(initreg::check_star(e.p.ideal, e.form("f1")).witness.has_value(), "g + f has no witness");
  });
  add("hat-substitution", "hat substitution", [] {
    Example e("star");
    Monomial got = initreg::hat_substitute(e.m("b0*b1*x1"), e.v("b0"), e.v("b1"));
    return expect(got == e.m("b1^2*x1"), "b0 b1 x1 does not map to b1^2 x1");
  });
  add("intro-initially-regular", "initial regularity bounds depth", [] {
    Example e("intro");
    std::vector<LinearSum> forms{e.form("f1"), e.form("f2"), e.form("f3")};
    return expect(initreg::is_initially_regular(e.p.ideal, forms, e.p.order).regular,
                  "(g+f, d+a, a+c+e) is not initially regular on R/I");
  });
  add("tree-13-initially-regular-square", "initial regularity bounds depth", [] {
    Example e("tree-13");
    MonomialIdeal sq = ideal_power(e.p.ideal, 2);
    std::vector<LinearSum> all{e.form("f1"), e.form("f2"), e.form("g1"), e.form("g2")};
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<LinearSum> forms;
      for (unsigned i = 0; i < 4; ++i)
        if (mask >> i & 1) forms.push_back(all[i]);
      if (!initreg::is_initially_regular(sq, forms, e.p.order).regular)
        return "subset " + std::to_string(mask) + " is not initially regular on R/I^2";
    }
    return std::string();
  });
  add("colon-fourth-power", "binomial colon lemma", [] {
    Example e("colon-counterexample");
    VarIndex a = e.v("a"), b = e.v("b");
    try {
      initreg::colon_linear_binomial(e.p.ideal, 4, a, b);
      return std::string("t = 4 was accepted");
    } catch (const HypothesisViolation&) {
    }
    MonomialIdeal i4 = ideal_power(e.p.ideal, 4);
    Polynomial f1 = e.poly("b^3*x1*x2*x3*x4*y1*y2*y3*y4");
    Polynomial f2 = e.poly("a*b^2*x1*x2*x3*x4*y1*y2*y3*y4");
    Polynomial s = e.poly("a + b");
    if (!i4.contains((f1 - f2) * s)) return std::string("(f1 - f2)(a + b) is not in I^4");
    if (i4.contains(f1 * s)) return std::string("f1 (a + b) is in I^4");
    return expect(!i4.contains(f2 * s), "f2 (a + b) is in I^4");
  });
  add("six-edge-good-pair", "binomial regularity on R/I^2", [] {
    Example e("six-edge");
    return expect(initreg::criterion_binomial(e.p.ideal, e.v("f"), e.v("e")).pass(), "(f, e) fails");
  });
  add("six-edge-bad-pair", "binomial regularity on R/I^2", [] {
    Example e("six-edge");
    auto v = initreg::criterion_binomial(e.p.ideal, e.v("a"), e.v("b"));
    std::vector<VarIndex> cd{e.v("c"), e.v("d")};
    bool witness = std::any_of(v.failures.begin(), v.failures.end(), [&](const initreg::Failure& f) {
      auto vars = f.vars;
      std::sort(vars.begin(), vars.end());
      return f.code == "obstruction" && vars == cd;
    });
    return expect(!v.pass() && witness, "(a, b) does not fail with witness (c, d)");
  });
  add("six-edge-squares-not-necessary", "binomial regularity on R/I^2", [] {
    Example e("six-edge-squares");
    bool fails = !initreg::criterion_binomial(e.p.ideal, e.v("a"), e.v("b")).pass();
    bool regular = !oracle::is_zerodivisor_linear(ideal_power(e.p.ideal, 2), e.form("f1")).zerodivisor;
    return expect(fails && regular, "expected a criterion failure with an oracle-regular a + b");
  });
  add("path-6-binomial-family", "binomial families on R/I^2", [] {
    Example e("path-6");
    std::vector<Pair> pairs{{e.v("a"), e.v("b")}, {e.v("g"), e.v("f")}};
    return expect(initreg::criterion_binomial_family(e.p.ideal, pairs).pass(), "{(a,b), (g,f)} fails");
  });
  add("path-3-binomial-family", "binomial families on R/I^2", [] {
    Example e("path-3");
    std::vector<Pair> pairs{{e.v("a"), e.v("b")}, {e.v("d"), e.v("c")}};
    auto v = initreg::criterion_binomial_family(e.p.ideal, pairs);
    bool shared = std::any_of(v.failures.begin(), v.failures.end(), [&](const initreg::Failure& f) {
      return f.code == "shared-generator" && f.generator == e.m("b*c");
    });
    return expect(shared, "{(a,b), (d,c)} does not fail on bc");
  });
  add("pentagon-trinomial", "trinomial regularity on R/I^2", [] {
    Example e("pentagon");
    auto v = initreg::criterion_trinomial(e.p.ideal, e.v("x1"), e.v("x2"), e.v("x5"));
    return expect(v.has("clause-e"), "(x1, x2, x5) does not fail clause (e)");
  });
  add("pentagon-square-closed-form", "trinomial initial ideal of a square", [] {
    Example e("pentagon");
    try {
      initreg::closed_form_ini_square_trinomial(e.p.ideal, e.v("x1"), e.v("x2"), e.v("x5"), e.p.order);
      return std::string("closed form accepted the pentagon");
    } catch (const HypothesisViolation&) {
    }
    std::vector<Polynomial> f{e.form("f").to_polynomial(5)};
    MonomialIdeal ini2 = gb::initial_ideal(gb::with_extra(ideal_power(e.p.ideal, 2), f), e.p.order);
    MonomialIdeal ini1 = gb::initial_ideal(gb::with_extra(e.p.ideal, f), e.p.order);
    MonomialIdeal formula = e.ideal("x1") + ideal_power(ini1, 2);
    Monomial m = e.m("x3*x4*x5^2");
    return expect(contains_generator(ini2, m) && !formula.contains(m),
                  "x3x4x5^2 is not a separating minimal generator");
  });
  add("tree-13-trinomial-family", "trinomial families on R/I^2", [] {
    Example e("tree-13");
    std::vector<Triple> triples{{e.v("x5"), e.v("x6"), e.v("x4")}, {e.v("x9"), e.v("x8"), e.v("x10")}};
    return expect(initreg::criterion_trinomial_family(e.p.ideal, triples).pass(), "triples fail");
  });
  add("tree-13-combined", "combined binomial and trinomial criterion", [] {
    Example e("tree-13");
    std::vector<Pair> pairs{{e.v("x1"), e.v("x2")}, {e.v("x13"), e.v("x12")}};
    std::vector<Triple> triples{{e.v("x5"), e.v("x6"), e.v("x4")}, {e.v("x9"), e.v("x8"), e.v("x10")}};
    auto r = initreg::criterion_combined(e.p.ideal, pairs, triples);
    if (!r.certificate) return std::string("no certificate");
    return expect_eq(r.certificate->depth_lower_bound, std::size_t{4}, "bound");
  });
  add("tree-8-combined", "combined binomial and trinomial criterion", [] {
    Example e("tree-8");
    std::vector<Pair> pairs{{e.v("x1"), e.v("x2")}, {e.v("x5"), e.v("x4")}, {e.v("x8"), e.v("x7")}};
    auto r = initreg::criterion_combined(e.p.ideal, pairs, {});
    if (!r.certificate) return std::string("no certificate");
    return expect_eq(r.certificate->depth_lower_bound, std::size_t{3}, "bound");
  });
  add("tree-13-find-sequences", "combined binomial and trinomial criterion", [] {
    auto cert = initreg::find_sequences(Example("tree-13").p.ideal);
    return expect(cert.verified && cert.depth_lower_bound >= 4,
                  "bound " + std::to_string(cert.depth_lower_bound) + " < 4");
  });
  add("tree-8-find-sequences", "combined binomial and trinomial criterion", [] {
    auto cert = initreg::find_sequences(Example("tree-8").p.ideal);
    return expect(cert.verified && cert.depth_lower_bound >= 3,
                  "bound " + std::to_string(cert.depth_lower_bound) + " < 3");
  });

  // combinatorics
  add("intro-hypergraph", "hypergraph of a square-free ideal", [] {
    Example e("intro");
    comb::Hypergraph h = comb::to_hypergraph(e.p.ideal);
    std::size_t three = std::count_if(h.edges.begin(), h.edges.end(),
                                      [](comb::VertexSet s) { return std::popcount(s) == 3; });
    bool abc = std::count(h.edges.begin(), h.edges.end(), e.m("a*b*c").support_mask()) == 1;
    bool acd = std::count(h.edges.begin(), h.edges.end(), e.m("a*c*d").support_mask()) == 1;
    return expect(h.edges.size() == 5 && three == 2 && abc && acd, "unexpected hypergraph");
  });
  add("pentagon-path-star-form", "star of a vertex", [] {
    Example e("pentagon-path");
    LinearSum s = comb::star_form(comb::to_hypergraph(e.p.ideal), e.v("h"));
    return expect(s == e.sum("h + g"), "star of h is " + s.to_string(e.p.ring));
  });
  add("star-graph-star-form", "star of a vertex", [] {
    Example e("star");
    LinearSum s = comb::star_form(comb::to_hypergraph(e.p.ideal), e.v("b0"));
    return expect(s == e.form("f"), "star of b0 is " + s.to_string(e.p.ring));
  });
  add("pentagon-path-cycle", "graphs with one odd cycle", [] {
    Example e("pentagon-path");
    auto a = comb::analyze_cycles(comb::to_hypergraph(e.p.ideal));
    bool ok = !a.is_bipartite && a.unique_odd_cycle && a.unique_odd_cycle->size() == 5 && a.k == 2 &&
              a.distances.at(e.v("h")) == comb::Distance{3};
    return expect(ok, "expected a unique 5-cycle, k = 2, d(h, C) = 3");
  });
  add("pentagon-path-bound", "star forms on powers of graphs with at most one odd cycle", [] {
    Example e("pentagon-path");
    auto b = comb::power_regularity_bound(comb::to_hypergraph(e.p.ideal), e.v("h"));
    return expect_eq(b.to_string(), std::string("4"), "bound for h");
  });
  add("path-6-bound", "star forms on powers of graphs with at most one odd cycle", [] {
    Example e("path-6");
    auto b = comb::power_regularity_bound(comb::to_hypergraph(e.p.ideal), e.v("a"));
    return expect(b.infinite, "bound for a is " + b.to_string());
  });
  add("star-graph-neighborhood-center", "neighborhood monomials", [] {
    Example e("star");
    auto got = comb::neighborhood_monomials(e.p.ideal, e.v("b0"));
    std::vector<Monomial> want{e.m("b1"), e.m("b2"), e.m("b3"), e.m("b4"), e.m("b5")};
    std::sort(want.begin(), want.end());
    return expect(got == want, "N(b0) differs");
  });
  add("star-graph-neighborhood-spoke", "neighborhood monomials", [] {
    Example e("star");
    auto got = comb::neighborhood_monomials(e.p.ideal, e.v("b2"));
    std::vector<Monomial> want{e.m("x2"), e.m("b0")};
    std::sort(want.begin(), want.end());
    return expect(got == want, "N(b2) differs");
  });
  add("intro-not-saturating", "2-saturating sets describe Ass(R/I^2)", [] {
    Example e("intro");
    std::uint64_t ace = e.m("a*c*e").support_mask();
    for (const auto& p : comb::tt_associated_primes_square(e.p.ideal)) {
      if ((p.mask() & ace) == ace) return "a + c + e lies in " + p.to_string(e.p.ring);
    }
    return expect(!oracle::is_zerodivisor_linear(ideal_power(e.p.ideal, 2), e.form("f3")).zerodivisor,
                  "a + c + e is a zerodivisor on R/I^2");
  });
  add("tree-8-leaves", "leaves at distance at least 4", [] {
    Example e("tree-8");
    auto lb = comb::leaves_bound(comb::to_hypergraph(e.p.ideal));
    std::vector<VarIndex> want{e.v("x1"), e.v("x5"), e.v("x8")};
    auto leaves = lb.leaves;
    std::sort(leaves.begin(), leaves.end());
    return expect(lb.bound == 3 && leaves == want, "bound " + std::to_string(lb.bound));
  });

  // oracle
  add("pentagon-path-fifth-power-maximal", "irreducible decomposition", [] {
    Example e("pentagon-path");
    auto primes = oracle::associated_primes(ideal_power(e.p.ideal, 5));
    std::uint64_t all = (std::uint64_t{1} << e.p.ring.size()) - 1;
    return expect(std::any_of(primes.begin(), primes.end(), [&](const auto& p) { return p.mask() == all; }),
                  "the maximal ideal is not associated to I^5");
  });
  add("intro-trinomial-regular", "associated primes of monomial ideals", [] {
    Example e("intro");
    return expect(!oracle::is_zerodivisor_linear(e.p.ideal, e.form("f3")).zerodivisor,
                  "a + c + e is a zerodivisor on R/I");
  });
  add("intro-depth", "Auslander-Buchsbaum formula", [] { return depth_check("intro", 1, 3); });
  add("path-6-depth", "Auslander-Buchsbaum formula", [] {
    std::string r = depth_check("path-6", 1, 3);
    return r.empty() ? depth_check("path-6", 2, 2) : r;
  });
  add("six-edge-depth", "Auslander-Buchsbaum formula", [] {
    std::string r = depth_check("six-edge", 1, 2);
    return r.empty() ? depth_check("six-edge", 2, 1) : r;
  });
  add("tree-13-depth", "Auslander-Buchsbaum formula", [] {
    std::string r = depth_check("tree-13", 1, 5);
    return r.empty() ? depth_check("tree-13", 2, 4) : r;
  });
  add("path-6-regular-sequence", "Hilbert series of regular sequences", [] {
    Example e("path-6");
    std::vector<LinearSum> forms{e.form("f1"), e.form("f2")};
    return expect(oracle::is_regular_sequence(ideal_power(e.p.ideal, 2), forms, e.p.order),
                  "(a+b, g+f) is not regular on R/I^2");
  });
  add("path-3-not-regular-sequence", "Hilbert series of regular sequences", [] {
    Example e("path-3");
    std::vector<LinearSum> forms{e.form("f1"), e.form("f2")};
    return expect(!oracle::is_regular_sequence(ideal_power(e.p.ideal, 2), forms, e.p.order),
                  "(a+b, d+c) is regular on R/I^2");
  });
  add("polarize-square", "polarization", [] {
    RingContext ring({"b1"});
    oracle::Polarization pol = oracle::polarize(MonomialIdeal(1, {Monomial{2}}));
    bool ok = pol.ideal == MonomialIdeal(2, {Monomial{1, 1}}) && pol.origin == std::vector<VarIndex>{0, 0};
    return expect(ok, "(b1^2) did not polarize to (b1 b1')");
  });

  // cli
  add("parse-intro", "problem files", [] {
    return expect_eq(Example("intro").p.ideal.size(), std::size_t{5}, "generators of the intro ideal");
  });
  add("cli-depth-square", "Auslander-Buchsbaum formula", [] {
    ProblemFile p = catalog::load("tree-13");
    CommandOptions o;
    o.command = "depth";
    o.power = 2;
    Report r = execute(o, &p);
    return expect(r.pass && r.data.at("depth") == 4, "depth --power 2 did not report 4");
  });
  add("cli-graph-bound", "star forms on powers of graphs with at most one odd cycle", [] {
    ProblemFile p = catalog::load("pentagon-path");
    CommandOptions o;
    o.command = "graph-bound";
    o.vertex = "h";
    Report r = execute(o, &p);
    return expect(r.pass && !r.lines.empty() && r.lines.front() == "4", "graph-bound --vertex h did not print 4");
  });
  return c;
}

}  // namespace

const std::vector<LemmaCheck>& lemma_checks() {
  static const std::vector<LemmaCheck> checks = build();
  return checks;
}

}  // namespace monreg::cli
