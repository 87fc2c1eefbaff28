#include <gtest/gtest.h>

#include <algorithm>

#include "monreg/combinatorics.hpp"
#include "monreg/errors.hpp"
#include "monreg/groebner.hpp"
#include "monreg/oracle.hpp"
#include "test_support.hpp"

namespace monreg {
namespace {

using oracle::MonomialPrime;
using testing::Rng;

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> g) { return MonomialIdeal(n, std::move(g)); }

std::vector<std::uint64_t> masks(const std::vector<MonomialPrime>& primes) {
  std::vector<std::uint64_t> out;
  for (const auto& p : primes) out.push_back(p.mask());
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal triangle() { return ideal(3, {Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}}); }

TEST(Decomposition, HandExamples) {
  auto ab = oracle::irreducible_decomposition(ideal(2, {Monomial{1, 1}}));
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_EQ(ab[0], ideal(2, {Monomial{1, 0}}));
  EXPECT_EQ(ab[1], ideal(2, {Monomial{0, 1}}));
  // (a^2 b, c) = (a^2, c) ∩ (b, c)
  auto q = oracle::irreducible_decomposition(ideal(3, {Monomial{2, 1, 0}, Monomial{0, 0, 1}}));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_NE(std::find(q.begin(), q.end(), ideal(3, {Monomial{2, 0, 0}, Monomial{0, 0, 1}})), q.end());
  EXPECT_NE(std::find(q.begin(), q.end(), ideal(3, {Monomial{0, 1, 0}, Monomial{0, 0, 1}})), q.end());
  auto p = oracle::irreducible_decomposition(ideal(2, {Monomial{1, 0}, Monomial{0, 1}}));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_THROW(oracle::irreducible_decomposition(MonomialIdeal(2)), InvalidArgument);
  EXPECT_THROW(oracle::irreducible_decomposition(MonomialIdeal::unit(2)), InvalidArgument);
}

TEST(AssociatedPrimes, HandExamples) {
  EXPECT_EQ(masks(oracle::associated_primes(ideal(2, {Monomial{1, 1}}))), (std::vector<std::uint64_t>{1, 2}));
  auto sq = masks(oracle::associated_primes(ideal_power(triangle(), 2)));
  EXPECT_NE(std::find(sq.begin(), sq.end(), 7u), sq.end());
}

TEST(ZeroDivisor, HandExamples) {
  auto r = oracle::is_zerodivisor_linear(ideal(2, {Monomial{1, 1}}), LinearSum({1}));
  EXPECT_TRUE(r.zerodivisor);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->mask(), 2u);
  EXPECT_FALSE(oracle::is_zerodivisor_linear(ideal(2, {Monomial{1, 1}}), LinearSum({0, 1})).zerodivisor);
  EXPECT_FALSE(oracle::is_zerodivisor_linear(MonomialIdeal(2), LinearSum({0})).zerodivisor);
  EXPECT_FALSE(oracle::is_zerodivisor_linear(MonomialIdeal::unit(2), LinearSum({0})).zerodivisor);
}

TEST(Tor, HandExamples) {
  auto principal = oracle::taylor_tor(ideal(2, {Monomial{1, 1}}));
  EXPECT_EQ(principal.pd, 1u);
  EXPECT_EQ(principal.depth, 1u);
  auto max = oracle::taylor_tor(ideal(2, {Monomial{1, 0}, Monomial{0, 1}}));
  EXPECT_EQ(max.pd, 2u);
  EXPECT_EQ(max.depth, 0u);
  EXPECT_EQ(max.betti.at(0), 1u);
  EXPECT_EQ(max.betti.at(1), 2u);
  EXPECT_EQ(max.betti.at(2), 1u);
  EXPECT_THROW(oracle::depth(MonomialIdeal::unit(2)), InvalidArgument);
}

TEST(Hilbert, HandExamples) {
  using oracle::IntPolynomial;
  EXPECT_EQ(oracle::hilbert_numerator(ideal(2, {Monomial{1, 0}})), IntPolynomial({1, -1}));
  EXPECT_EQ(oracle::hilbert_numerator(ideal(2, {Monomial{1, 1}})), IntPolynomial({1, 0, -1}));
  EXPECT_EQ(oracle::hilbert_numerator(ideal(2, {Monomial{1, 0}, Monomial{0, 1}})), IntPolynomial({1, -2, 1}));
  EXPECT_TRUE(oracle::is_regular_sequence(ideal(2, {Monomial{1, 1}}), {}, TermOrder::lex(2)));
}

TEST(Polarization, HandExamples) {
  MonomialIdeal sf = triangle();
  auto same = oracle::polarize(sf);
  EXPECT_EQ(same.ideal, sf);
  EXPECT_EQ(same.added_variables(), 0u);
  // (a^2 b, b c^2) -> (a a' b, b c c')
  auto pol = oracle::polarize(ideal(3, {Monomial{2, 1, 0}, Monomial{0, 1, 2}}));
  EXPECT_EQ(pol.ideal, ideal(5, {Monomial{1, 1, 0, 1, 0}, Monomial{0, 1, 1, 0, 1}}));
  EXPECT_EQ(pol.origin, (std::vector<VarIndex>{0, 1, 2, 0, 2}));
  RingContext ring({"a", "b", "c"});
  EXPECT_EQ(oracle::polarized_ring(ring, pol).names(), (std::vector<std::string>{"a", "b", "c", "a_1", "c_1"}));
  EXPECT_EQ(oracle::depolarize_prime(MonomialPrime{{1, 3}}, pol).mask(), 0b011u);
}

TEST(OracleProperty, DecompositionIntersectsBack) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 5, 5, 4, 3);
    auto comps = oracle::irreducible_decomposition(i);
    MonomialIdeal back = comps.front();
    for (std::size_t k = 1; k < comps.size(); ++k) back = intersect(back, comps[k]);
    EXPECT_EQ(back, i);
    for (const auto& q : comps)
      for (const Monomial& g : q.generators()) EXPECT_TRUE(g.is_pure_power());
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = 0; b < comps.size(); ++b)
        if (a != b) {
          EXPECT_FALSE(comps[b].contains(comps[a]));
        }
  }
}

TEST(OracleProperty, AssociatedPrimesMatchBruteForce) {
  Rng rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 5, 5, 4, 3);
    auto ass = masks(oracle::associated_primes(i));
    EXPECT_EQ(ass, testing::brute_associated_supports(i));
    for (std::uint64_t c = 1; c < 32; ++c)
      EXPECT_EQ(oracle::is_associated(i, c), std::binary_search(ass.begin(), ass.end(), c)) << c;
    auto minimal = masks(oracle::minimal_primes(i));
    for (std::uint64_t m : minimal) EXPECT_TRUE(std::binary_search(ass.begin(), ass.end(), m));
  }
}

TEST(OracleProperty, ZeroDivisorMatchesBruteForce) {
  Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 4, 4, 3, 2);
    std::vector<VarIndex> vars{0, 1, 2, 3};
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(1 + trial % 3);
    LinearSum f(vars);
    auto r = oracle::is_zerodivisor_linear(i, f);
    EXPECT_EQ(r.zerodivisor, testing::brute_zerodivisor(i, f));
    if (r.zerodivisor) {
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(r.witness->contains(f));
      EXPECT_TRUE(oracle::is_associated(i, r.witness->mask()));
    }
    std::vector<LinearSum> one{f};
    EXPECT_EQ(oracle::is_regular_sequence(i, one, TermOrder::lex(4)), !r.zerodivisor);
  }
}

TEST(OracleProperty, TaylorAgreesWithLattice) {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 5, 7, 4, 3);
    auto t = oracle::taylor_tor(i);
    auto l = oracle::lattice_tor(i);
    EXPECT_EQ(t.betti, l.betti);
    EXPECT_EQ(t.pd, oracle::projective_dimension(i));
    EXPECT_EQ(t.depth, oracle::depth(i));
    EXPECT_EQ(t.betti.at(0), 1u);
    EXPECT_LE(t.pd, 5u);
    // depth 0 iff the maximal ideal is associated
    EXPECT_EQ(t.depth == 0, oracle::is_associated(i, 0b11111));
  }
}

TEST(OracleProperty, EulerCharacteristicMatchesHilbertNumerator) {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 4, 7, 4, 3);
    auto k = oracle::hilbert_numerator(i);
    EXPECT_EQ(k, oracle::hilbert_numerator_inclusion_exclusion(i));
    // K(1) = sum (-1)^i beta_i
    std::int64_t at_one = 0;
    for (std::int64_t c : k.coefficients()) at_one += c;
    std::int64_t euler = 0;
    for (auto [deg, b] : oracle::taylor_tor(i).betti) euler += (deg % 2 ? -1 : 1) * static_cast<std::int64_t>(b);
    EXPECT_EQ(at_one, euler);
  }
}

TEST(OracleProperty, HilbertFunctionMatchesCounting) {
  Rng rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 3, 4, 3, 2);
    auto k = oracle::hilbert_numerator(i);
    // HF(d) = sum_j K_j * C(d - j + 2, 2)
    for (unsigned d = 0; d < 8; ++d) {
      std::int64_t hf = 0;
      for (unsigned j = 0; j <= d; ++j) hf += k[j] * static_cast<std::int64_t>((d - j + 2) * (d - j + 1) / 2);
      std::size_t all = testing::monomials_of_degree(3, d).size();
      EXPECT_EQ(hf, static_cast<std::int64_t>(all - testing::count_in_degree(i, d)));
    }
  }
}

TEST(OracleProperty, PolarizationPreservesProjectiveDimension) {
  Rng rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal i = testing::random_ideal(rng, 4, 4, 3, 3);
    auto pol = oracle::polarize(i);
    EXPECT_TRUE(pol.ideal.is_squarefree());
    EXPECT_EQ(oracle::depth(pol.ideal) - pol.added_variables(), oracle::depth(i));
    auto ass = masks(oracle::associated_primes(i));
    for (const auto& p : oracle::associated_primes(pol.ideal)) {
      std::uint64_t back = oracle::depolarize_prime(p, pol).mask();
      EXPECT_TRUE(std::binary_search(ass.begin(), ass.end(), back));
    }
  }
}

TEST(OracleProperty, RegularSequenceMatchesChainOfZerodivisorTests) {
  Rng rng(28);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal i = testing::random_squarefree(rng, 6, 4, 3);
    std::vector<LinearSum> forms{LinearSum({0, 1}), LinearSum({2, 3})};
    TermOrder o = TermOrder::lex(6);
    bool first = !oracle::is_zerodivisor_linear(i, forms[0]).zerodivisor;
    std::vector<Polynomial> extra{forms[0].to_polynomial(6)};
    MonomialIdeal j = gb::initial_ideal(gb::with_extra(i, extra), o);
    bool second = !oracle::is_zerodivisor_linear(j, forms[1]).zerodivisor;
    if (first && second) {
      EXPECT_TRUE(oracle::is_regular_sequence(i, forms, o));
    }
    if (!first) {
      EXPECT_FALSE(oracle::is_regular_sequence(i, forms, o));
    }
  }
}

TEST(OracleProperty, BipartitePowersKeepMinimalPrimes) {
  Rng rng(29);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 30; ++trial) {
    MonomialIdeal i = testing::random_graph(rng, 6, 0.35);
    auto g = comb::to_hypergraph(i);
    if (!comb::analyze_cycles(g).is_bipartite) continue;
    ++checked;
    auto minimal = masks(oracle::minimal_primes(i));
    for (unsigned r = 1; r <= 3; ++r) {
      MonomialIdeal p = ideal_power(i, r);
      EXPECT_EQ(masks(oracle::associated_primes(p)), minimal);
      EXPECT_GE(oracle::depth(p), 1u);
    }
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace monreg
