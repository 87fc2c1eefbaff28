#include <gtest/gtest.h>

#include <algorithm>

#include "monreg/errors.hpp"
#include "monreg/monomial_ideal.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/ring.hpp"
#include "monreg/term_order.hpp"
#include "test_support.hpp"

namespace monreg {
namespace {

using testing::Rng;

struct Abc {
  RingContext ring{{"a", "b", "c", "d", "e", "f", "g"}};
  Monomial m(std::initializer_list<Exponent> e) const {
    std::vector<Exponent> v(e);
    v.resize(ring.size(), 0);
    return Monomial(v);
  }
  MonomialIdeal ideal(std::vector<Monomial> gens) const { return MonomialIdeal(ring.size(), std::move(gens)); }
};

TEST(Ring, RejectsBadNames) {
  EXPECT_THROW(RingContext({}), InvalidArgument);
  EXPECT_THROW(RingContext({"a", "a"}), InvalidArgument);
  EXPECT_THROW(RingContext({"1a"}), InvalidArgument);
  EXPECT_THROW(RingContext({""}), InvalidArgument);
  RingContext r({"x_1", "Y2"});
  EXPECT_EQ(r.index("Y2"), 1u);
  EXPECT_THROW(r.index("z"), InvalidArgument);
}

TEST(Monomial, LcmAndGcd) {
  Abc t;
  EXPECT_EQ(lcm(t.m({2, 1}), t.m({0, 1, 1})), t.m({2, 1, 1}));
  EXPECT_EQ(gcd(t.m({2, 1}), t.m({0, 1, 1})), t.m({0, 1}));
  Monomial one(7);
  EXPECT_EQ(lcm(t.m({1, 1}), one), t.m({1, 1}));
  EXPECT_EQ(gcd(t.m({1, 1}), one), one);
  EXPECT_EQ(lcm(t.m({1, 1}), t.m({0, 0, 1, 1})), t.m({1, 1, 1, 1}));
  EXPECT_EQ(gcd(t.m({1, 1}), t.m({0, 0, 1, 1})), one);
}

TEST(Monomial, DivisionAndQuotient) {
  Abc t;
  EXPECT_TRUE(t.m({1}).divides(t.m({2, 1})));
  EXPECT_FALSE(t.m({0, 2}).divides(t.m({2, 1})));
  EXPECT_EQ(t.m({2, 1}).quotient(t.m({1})), t.m({1, 1}));
  EXPECT_THROW(t.m({1}).quotient(t.m({0, 1})), InvalidArgument);
}

TEST(TermOrder, Comparisons) {
  Abc t;
  // g f d a b c e
  TermOrder o = TermOrder::lex({6, 5, 3, 0, 1, 2, 4});
  EXPECT_TRUE(o.greater(t.m({0, 0, 0, 0, 0, 1, 1}), t.m({1, 0, 0, 0, 1})));
  EXPECT_EQ(o.compare(t.m({1, 1}), t.m({1, 1})), std::strong_ordering::equal);
  TermOrder ab = TermOrder::lex(2);
  EXPECT_TRUE(ab.greater(Monomial{1, 1}, Monomial{0, 2}));
  EXPECT_THROW(TermOrder::lex(std::vector<VarIndex>{0, 0}), InvalidArgument);
  EXPECT_EQ(TermOrder::lex_leading(4, std::vector<VarIndex>{2}).priority(), (std::vector<VarIndex>{2, 0, 1, 3}));
}

TEST(TermOrder, MultiplicativeAndOneMinimal) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    TermOrder o = testing::random_order(rng, 5);
    Monomial a = testing::random_monomial(rng, 5, 4, 3);
    Monomial b = testing::random_monomial(rng, 5, 4, 3);
    Monomial c = testing::random_monomial(rng, 5, 4, 3);
    EXPECT_TRUE(o.greater(a, Monomial(5)));
    if (o.greater(a, b)) {
      EXPECT_TRUE(o.greater(a * c, b * c));
    }
    EXPECT_NE(o.compare(a, b) == std::strong_ordering::equal, a != b);
  }
}

TEST(Polynomial, ArithmeticNormalizes) {
  Polynomial a(Monomial{1, 0}), b(Monomial{0, 1});
  Polynomial s = a + b;
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE((s - a - b).is_zero());
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  EXPECT_EQ(s.pow(2), a * a + (a * b).scaled(2) + b * b);
  EXPECT_EQ(s.pow(0), Polynomial(Monomial(2)));
  EXPECT_EQ(s.scaled(Rational(3, 2)).leading_term(TermOrder::lex(2)).coeff, Rational(3, 2));
  EXPECT_THROW(Polynomial(2).leading_term(TermOrder::lex(2)), InvalidArgument);
}

TEST(LinearSum, Validation) {
  EXPECT_THROW(LinearSum({}), InvalidArgument);
  EXPECT_THROW(LinearSum({1, 1}), InvalidArgument);
  LinearSum s({2, 0});
  EXPECT_EQ(s.head(), 2u);
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
}

TEST(MonomialIdeal, Minimalize) {
  Abc t;
  EXPECT_EQ(t.ideal({t.m({1, 1}), t.m({1, 1, 1}), t.m({0, 0, 1, 1})}).generators(),
            t.ideal({t.m({1, 1}), t.m({0, 0, 1, 1})}).generators());
  EXPECT_EQ(t.ideal({t.m({1, 1}), t.m({0, 0, 1, 1})}).size(), 2u);
  EXPECT_TRUE(t.ideal({}).is_zero());
  EXPECT_TRUE(t.ideal({Monomial(7), t.m({1, 1})}).is_unit());
}

TEST(MonomialIdeal, Powers) {
  MonomialIdeal ab(2, {Monomial{1, 0}, Monomial{0, 1}});
  EXPECT_EQ(ideal_power(ab, 2), MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
  EXPECT_EQ(ideal_power(MonomialIdeal(2, {Monomial{1, 1}}), 3), MonomialIdeal(2, {Monomial{3, 3}}));
  EXPECT_THROW(ideal_power(ab, 0), InvalidArgument);
  MonomialIdeal pentagon(5, {Monomial{1, 1, 0, 0, 0}, Monomial{0, 1, 1, 0, 0}, Monomial{0, 0, 1, 1, 0},
                             Monomial{0, 0, 0, 1, 1}, Monomial{1, 0, 0, 0, 1}});
  EXPECT_EQ(ideal_power(pentagon, 2).size(), 15u);
}

TEST(MonomialIdeal, ColonAndIntersect) {
  Abc t;
  EXPECT_EQ(colon(t.ideal({t.m({1, 1}), t.m({0, 1, 1})}), t.m({0, 1})), t.ideal({t.m({1}), t.m({0, 0, 1})}));
  EXPECT_EQ(colon(t.ideal({t.m({1, 1})}), t.m({0, 0, 1})), t.ideal({t.m({1, 1})}));
  EXPECT_EQ(colon(t.ideal({t.m({2, 1})}), t.m({3})), t.ideal({t.m({0, 1})}));
  EXPECT_EQ(intersect(t.ideal({t.m({1})}), t.ideal({t.m({0, 1})})), t.ideal({t.m({1, 1})}));
  MonomialIdeal i = t.ideal({t.m({1, 1}), t.m({0, 0, 1})});
  EXPECT_EQ(intersect(i, i), i);
  EXPECT_EQ(intersect(i, t.ideal({t.m({0, 1})})), t.ideal({t.m({1, 1}), t.m({0, 1, 1})}));
}

TEST(MonomialIdeal, DegreeInVariable) {
  Abc t;
  EXPECT_EQ(degree_in_variable(0, t.m({2, 1})), 2u);
  EXPECT_EQ(t.ideal({t.m({2, 1}), t.m({0, 1, 2})}).degree_in_variable(1), 1u);
  EXPECT_EQ(t.ideal({t.m({1, 1})}).degree_in_variable(4), 0u);
  EXPECT_EQ(MonomialIdeal(3).degree_in_variable(0), 0u);
}

TEST(MonomialIdeal, ContainsPolynomial) {
  MonomialIdeal i(2, {Monomial{1, 0}});
  EXPECT_TRUE(i.contains(Polynomial(2)));
  EXPECT_TRUE(i.contains(Polynomial(Monomial{1, 1}) + Polynomial(Monomial{2, 0})));
  EXPECT_FALSE(i.contains(Polynomial(Monomial{1, 1}) + Polynomial(Monomial{0, 2})));
}

TEST(CoreProperty, MinimalizeIdempotentAndOrderFree) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 8; ++k) gens.push_back(testing::random_monomial(rng, 5, 5, 3));
    auto once = minimalize(gens);
    EXPECT_EQ(minimalize(once), once);
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(minimalize(gens), once);
    for (const Monomial& g : gens)
      EXPECT_TRUE(std::any_of(once.begin(), once.end(), [&](const Monomial& h) { return h.divides(g); }));
  }
}

TEST(CoreProperty, PowersCompose) {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 4, 4, 3, 2);
    for (unsigned s = 1; s <= 2; ++s) {
      for (unsigned t = 1; t <= 2; ++t) {
        EXPECT_EQ(ideal_power(i, s + t), ideal_power(i, s) * ideal_power(i, t));
      }
    }
  }
}

TEST(CoreProperty, ColonComposes) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 5, 6, 5, 3);
    Monomial m = testing::random_monomial(rng, 5, 3, 2);
    Monomial mp = testing::random_monomial(rng, 5, 3, 2);
    EXPECT_EQ(colon(i, m * mp), colon(colon(i, m), mp));
  }
}

TEST(CoreProperty, IntersectLaws) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal a = testing::random_ideal(rng, 5, 4, 4, 3);
    MonomialIdeal b = testing::random_ideal(rng, 5, 4, 4, 3);
    MonomialIdeal c = testing::random_ideal(rng, 5, 4, 4, 3);
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    EXPECT_EQ(intersect(a, a), a);
    // membership agrees degree by degree
    MonomialIdeal ab = intersect(a, b);
    for (const Monomial& m : testing::monomials_of_degree(5, 4))
      EXPECT_EQ(ab.contains(m), a.contains(m) && b.contains(m));
  }
}

TEST(CoreProperty, ZeroAndUnitIdeals) {
  MonomialIdeal zero(3), unit = MonomialIdeal::unit(3);
  MonomialIdeal x(3, {Monomial{1, 0, 0}});
  EXPECT_EQ(zero + x, x);
  EXPECT_EQ(unit * x, x);
  EXPECT_EQ(zero * x, zero);
  EXPECT_EQ(intersect(unit, x), x);
  EXPECT_EQ(colon(x, Monomial{1, 0, 0}), unit);
  EXPECT_TRUE(zero.contains(Polynomial(3)));
  EXPECT_FALSE(zero.contains(Monomial(3)));
}

}  // namespace
}  // namespace monreg
