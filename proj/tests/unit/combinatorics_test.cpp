#include <gtest/gtest.h>

#include <algorithm>

#include "monreg/combinatorics.hpp"
#include "monreg/errors.hpp"
#include "monreg/oracle.hpp"
#include "test_support.hpp"

namespace monreg {
namespace {

using comb::Hypergraph;
using comb::VertexSet;
using testing::Rng;

MonomialIdeal graph(std::size_t n, std::initializer_list<std::pair<VarIndex, VarIndex>> edges) {
  std::vector<Monomial> g;
  for (auto [a, b] : edges) {
    std::vector<Exponent> e(n, 0);
    e[a] = e[b] = 1;
    g.emplace_back(e);
  }
  return MonomialIdeal(n, g);
}

MonomialIdeal triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
MonomialIdeal pentagon() { return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
MonomialIdeal path4() { return graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

std::vector<std::uint64_t> masks(const std::vector<oracle::MonomialPrime>& primes) {
  std::vector<std::uint64_t> out;
  for (const auto& p : primes) out.push_back(p.mask());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Hypergraph, FromIdeal) {
  Hypergraph h = comb::to_hypergraph(graph(3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(h.is_graph());
  EXPECT_EQ(h.edges, (std::vector<VertexSet>{0b011, 0b110}));
  EXPECT_EQ(h.neighbors(1), (std::vector<VarIndex>{0, 2}));
  EXPECT_THROW(comb::to_hypergraph(MonomialIdeal(2, {Monomial{2, 0}})), InvalidArgument);
}

TEST(Hypergraph, RoundTrip) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal i = testing::random_squarefree(rng, 7, 6, 4);
    EXPECT_EQ(comb::edge_ideal(comb::to_hypergraph(i)), i);
  }
}

TEST(StarForm, Leaf) {
  Hypergraph h = comb::to_hypergraph(path4());
  EXPECT_EQ(comb::star_form(h, 0), LinearSum({0, 1}));
  EXPECT_EQ(comb::star_form(h, 1), LinearSum({1, 0, 2}));
  Hypergraph iso = comb::to_hypergraph(graph(3, {{0, 1}}));
  EXPECT_THROW(comb::star_form(iso, 2), InvalidArgument);
}

TEST(Cycles, Classification) {
  EXPECT_TRUE(comb::analyze_cycles(comb::to_hypergraph(path4())).is_bipartite);
  auto t = comb::analyze_cycles(comb::to_hypergraph(triangle()));
  EXPECT_FALSE(t.is_bipartite);
  ASSERT_TRUE(t.unique_odd_cycle);
  EXPECT_EQ(t.k, 1u);
  for (auto d : t.distances) EXPECT_EQ(d, comb::Distance{0});
  // two triangles sharing an edge contain two odd cycles
  auto two = comb::analyze_cycles(comb::to_hypergraph(graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}})));
  EXPECT_EQ(two.odd_cycles.size(), 2u);
  EXPECT_FALSE(two.unique_odd_cycle);
}

TEST(Cycles, Guards) {
  Rng rng(5);
  MonomialIdeal big = testing::random_graph(rng, 20, 0.5);
  EXPECT_THROW(comb::analyze_cycles(comb::to_hypergraph(big)), ResourceLimit);
}

TEST(PowerBound, Examples) {
  auto pent = comb::to_hypergraph(pentagon());
  EXPECT_EQ(comb::power_regularity_bound(pent, 0).to_string(), "2");
  EXPECT_TRUE(comb::power_regularity_bound(comb::to_hypergraph(path4()), 0).infinite);
  auto two = comb::to_hypergraph(graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_THROW(comb::power_regularity_bound(two, 0), HypothesisViolation);
}

TEST(Neighborhood, Examples) {
  EXPECT_TRUE(comb::neighborhood_monomials(graph(4, {{0, 1}}), 3).empty());
  auto n = comb::neighborhood_monomials(MonomialIdeal(3, {Monomial{1, 1, 1}, Monomial{1, 0, 2}}), 0);
  EXPECT_EQ(n, (std::vector<Monomial>{Monomial{0, 0, 2}, Monomial{0, 1, 1}}));
}

TEST(Decomposable, Examples) {
  Hypergraph two = comb::to_hypergraph(graph(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(comb::is_decomposable(two, 0b1111));
  Hypergraph tri = comb::to_hypergraph(triangle());
  EXPECT_FALSE(comb::is_decomposable(tri, 0b111));
  EXPECT_FALSE(comb::is_decomposable_by_partition(tri, 0b111));
  Hypergraph empties{3, 0b111, {0}};
  EXPECT_TRUE(comb::is_decomposable(empties, 0));
}

TEST(Saturating, Examples) {
  Hypergraph tri = comb::to_hypergraph(triangle());
  EXPECT_TRUE(comb::is_2_saturating(tri, 0b111));
  Hypergraph edge = comb::to_hypergraph(graph(2, {{0, 1}}));
  for (VertexSet u = 0; u < 4; ++u) EXPECT_FALSE(comb::is_2_saturating(edge, u));
  auto tt = masks(comb::tt_associated_primes_square(triangle()));
  EXPECT_TRUE(std::binary_search(tt.begin(), tt.end(), 0b111u));
  Hypergraph pent = comb::to_hypergraph(pentagon());
  EXPECT_EQ(comb::is_2_saturating(pent, 0b11111), oracle::is_associated(ideal_power(pentagon(), 2), 0b11111));
}

TEST(Leaves, Examples) {
  auto p = comb::leaves_bound(comb::to_hypergraph(path4()));
  EXPECT_EQ(p.bound, 1u);
  // K_{1,5}: five leaves pairwise at distance 2
  auto star = comb::leaves_bound(comb::to_hypergraph(graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})));
  EXPECT_EQ(star.bound, 1u);
  ASSERT_EQ(star.forms.size(), 1u);
  EXPECT_EQ(star.forms.front().variables().at(1), 0u);
}

TEST(Dot, ListsVerticesAndEdges) {
  RingContext ring({"a", "b", "c"});
  std::string dot = comb::to_dot(comb::to_hypergraph(graph(3, {{0, 1}})), ring);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("a -- b"), std::string::npos);
}

TEST(CombinatoricsProperty, DecomposabilityAgreesWithPartitions) {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = comb::to_hypergraph(testing::random_squarefree(rng, 6, 5, 3));
    for (VarIndex i = 0; i < 6; ++i) {
      Hypergraph views[] = {h, h.deleted(i), h.restricted(h.vertices & ~(VertexSet{1} << i))};
      for (const Hypergraph& v : views)
        for (VertexSet u = 0; u < 64; ++u)
          EXPECT_EQ(comb::is_decomposable(v, u), comb::is_decomposable_by_partition(v, u));
    }
  }
}

TEST(CombinatoricsProperty, TeraiTrungMatchesOracle) {
  Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal i = testing::random_squarefree(rng, 6, 5, 3);
    EXPECT_EQ(masks(comb::tt_associated_primes_square(i)), masks(oracle::associated_primes(ideal_power(i, 2))));
  }
}

TEST(CombinatoricsProperty, StarFormsRegularUpToBound) {
  Rng rng(34);
  int graphs = 0;
  for (int trial = 0; trial < 300 && graphs < 25; ++trial) {
    MonomialIdeal i = testing::random_graph(rng, 6, 0.35);
    Hypergraph g = comb::to_hypergraph(i);
    auto a = comb::analyze_cycles(g);
    if (!a.is_bipartite && !a.unique_odd_cycle) continue;
    ++graphs;
    for (VarIndex v = 0; v < 6; ++v) {
      if (g.neighbors(v).empty()) continue;
      auto bound = comb::power_regularity_bound(g, v);
      LinearSum f = comb::star_form(g, v);
      std::size_t top = bound.infinite ? 3 : std::min<std::size_t>(bound.value, 4);
      for (unsigned r = 1; r <= top; ++r)
        EXPECT_FALSE(oracle::is_zerodivisor_linear(ideal_power(i, r), f).zerodivisor) << "r=" << r;
    }
  }
  EXPECT_GE(graphs, 10);
}

TEST(CombinatoricsProperty, OddCyclesAreOddAndClosed) {
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    Hypergraph g = comb::to_hypergraph(testing::random_graph(rng, 7, 0.3));
    auto a = comb::analyze_cycles(g);
    EXPECT_EQ(a.is_bipartite, a.odd_cycles.empty());
    for (const auto& c : a.odd_cycles) {
      EXPECT_EQ(c.size() % 2, 1u);
      for (std::size_t k = 0; k < c.size(); ++k) {
        VertexSet e = (VertexSet{1} << c[k]) | (VertexSet{1} << c[(k + 1) % c.size()]);
        EXPECT_TRUE(std::binary_search(g.edges.begin(), g.edges.end(), e));
      }
    }
  }
}

TEST(CombinatoricsProperty, LeavesBoundIsRegular) {
  Rng rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = testing::random_graph(rng, 7, 0.25);
    auto lb = comb::leaves_bound(comb::to_hypergraph(i));
    EXPECT_EQ(lb.forms.size(), lb.bound);
    if (lb.bound == 0) continue;
    std::vector<LinearSum> forms = lb.forms;
    std::vector<VarIndex> heads;
    for (const auto& f : forms) heads.push_back(f.head());
    TermOrder o = TermOrder::lex_leading(7, heads);
    EXPECT_TRUE(oracle::is_regular_sequence(ideal_power(i, 2), forms, o));
    EXPECT_LE(lb.bound, oracle::depth(ideal_power(i, 2)));
  }
}

TEST(Leaves, PendantOnTriangleIsExcluded) {
  // triangle a b c with pendant d on c: depth R/I^2 = 0
  MonomialIdeal i = graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(comb::leaves_bound(comb::to_hypergraph(i)).bound, 0u);
  EXPECT_EQ(oracle::depth(ideal_power(i, 2)), 0u);
}

}  // namespace
}  // namespace monreg
