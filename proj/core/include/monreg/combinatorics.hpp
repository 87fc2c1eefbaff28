#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monreg/monomial_ideal.hpp"
#include "monreg/oracle.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/ring.hpp"

/// Graphs and hypergraphs of square-free monomial ideals.
namespace monreg::comb {

using VertexSet = std::uint64_t;

/// Vertices and edges as bitmasks over variable indices (at most 64).
/// Hypergraphs built from ideals are simple; derived views such as H(i) or
/// H_C may contain the empty edge or nested edges.
struct Hypergraph {
  std::size_t num_vars = 0;
  VertexSet vertices = 0;
  std::vector<VertexSet> edges;  // sorted, distinct

  bool is_graph() const;
  std::vector<VarIndex> neighbors(VarIndex v) const;
  /// H(i): vertex i removed from the vertex set and from every edge.
  Hypergraph deleted(VarIndex i) const;
  /// H_C: edges e ∩ C over the vertex set C.
  Hypergraph restricted(VertexSet c) const;

  bool operator==(const Hypergraph&) const = default;
};

/// Edges are the supports of the minimal generators. Throws InvalidArgument
/// unless the ideal is square-free and the ring has at most 64 variables.
Hypergraph to_hypergraph(const MonomialIdeal& ideal);
MonomialIdeal edge_ideal(const Hypergraph& h);

/// v + (all neighbors of v). Throws InvalidArgument for an isolated vertex
/// or a hypergraph that is not a graph.
LinearSum star_form(const Hypergraph& g, VarIndex v);

/// Distances are in edges; nullopt stands for an unreachable vertex.
using Distance = std::optional<std::size_t>;

struct GraphAnalysis {
  bool is_bipartite = true;
  /// Each odd cycle once, rotated to start at its smallest vertex and
  /// oriented so the second vertex is smaller than the last.
  std::vector<std::vector<VarIndex>> odd_cycles;
  std::optional<std::vector<VarIndex>> unique_odd_cycle;
  /// Set when the odd cycle is unique: its length is 2k + 1.
  std::size_t k = 0;
  /// d(v, C) for every variable when the odd cycle is unique.
  std::vector<Distance> distances;
};

struct CycleOptions {
  std::size_t max_vertices = 16;
  std::size_t max_cycles = 200'000;
};

/// Bipartiteness by 2-colouring; odd cycles by exhaustive enumeration,
/// guarded by the number of non-isolated vertices.
GraphAnalysis analyze_cycles(const Hypergraph& g, const CycleOptions& options = {});

/// BFS distances from v; nullopt for other components.
std::vector<Distance> distances_from(const Hypergraph& g, VarIndex v);

struct PowerBound {
  bool infinite = false;
  std::size_t value = 0;  // meaningful when !infinite
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
  bool operator==(const PowerBound&) const = default;
};

/// The largest r for which the star form of v is guaranteed regular on
/// R/I^r: unbounded for bipartite graphs (and when v cannot reach the odd
/// cycle), max(k, k + l - 1) with l = d(v, C) for a unique odd cycle.
/// Throws HypothesisViolation when the graph has several odd cycles.
PowerBound power_regularity_bound(const Hypergraph& g, VarIndex v, const CycleOptions& options = {});

/// N(x) = {M : xM in G(I)}, sorted.
std::vector<Monomial> neighborhood_monomials(const MonomialIdeal& ideal, VarIndex x);

/// Some two disjoint edges (possibly the empty edge twice) lie inside U.
bool is_decomposable(const Hypergraph& h, VertexSet u);
/// The literal definition: U splits into two parts each containing an edge.
bool is_decomposable_by_partition(const Hypergraph& h, VertexSet u);

/// U is indecomposable in H while U \ {i} is decomposable in H(i) for every
/// vertex i of H.
bool is_2_saturating(const Hypergraph& h, VertexSet u);

struct SaturatingOptions {
  std::size_t max_vertices = 20;
};

/// First 2-saturating subset in increasing mask order, if any.
std::optional<VertexSet> find_2_saturating_set(const Hypergraph& h, const SaturatingOptions& options = {});

struct TTOptions {
  std::size_t max_vars = 12;
};

/// All C such that H_C has a 2-saturating set, together with the minimal
/// primes of I, as sorted monomial primes.
std::vector<oracle::MonomialPrime> tt_associated_primes_square(const MonomialIdeal& ideal,
                                                               const TTOptions& options = {});

struct LeavesBound {
  std::size_t bound = 0;
  std::vector<VarIndex> leaves;
  /// c_i + b_i with b_i the unique neighbour of leaf c_i.
  std::vector<LinearSum> forms;
};

struct LeavesOptions {
  std::size_t max_leaves = 64;
};

/// A maximum set of leaves at pairwise distance at least 4 whose neighbors lie on no triangle (exact search).
LeavesBound leaves_bound(const Hypergraph& g, const LeavesOptions& options = {});

/// `graph G { ... }` with one line per vertex and per edge.
std::string to_dot(const Hypergraph& g, const RingContext& ring);

}  // namespace monreg::comb
