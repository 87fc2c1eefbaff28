#include "monreg/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "monreg/errors.hpp"

namespace monreg::comb {

namespace {

VertexSet bit(VarIndex v) { return VertexSet{1} << v; }

VertexSet all_vertices(std::size_t n) { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

std::vector<VarIndex> members(VertexSet s) {
  std::vector<VarIndex> out;
  for (; s; s &= s - 1) out.push_back(static_cast<VarIndex>(std::countr_zero(s)));
  return out;
}

void normalize_edges(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void require_graph(const Hypergraph& g) {
  if (!g.is_graph()) throw InvalidArgument("expected a graph: every edge must have two vertices");
}

std::vector<VertexSet> adjacency(const Hypergraph& g) {
  std::vector<VertexSet> adj(g.num_vars, 0);
  for (VertexSet e : g.edges) {
    std::vector<VarIndex> ends = members(e);
    adj[ends[0]] |= bit(ends[1]);
    adj[ends[1]] |= bit(ends[0]);
  }
  return adj;
}

std::vector<Distance> bfs(const std::vector<VertexSet>& adj, VertexSet sources) {
  std::vector<Distance> dist(adj.size());
  std::deque<VarIndex> queue;
  for (VarIndex s : members(sources)) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    VarIndex u = queue.front();
    queue.pop_front();
    for (VarIndex w : members(adj[u])) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

class CycleEnumerator {
 public:
  CycleEnumerator(const std::vector<VertexSet>& adj, std::size_t max_cycles) : adj_(adj), max_cycles_(max_cycles) {}

  std::vector<std::vector<VarIndex>> odd_cycles() {
    for (VarIndex s = 0; s < adj_.size(); ++s) {
      start_ = s;
      path_ = {s};
      extend(bit(s));
    }
    return std::move(odd_);
  }

 private:
  void extend(VertexSet on_path) {
    VarIndex u = path_.back();
    for (VarIndex w : members(adj_[u])) {
      if (w == start_ && path_.size() >= 3) {
        if (path_[1] < path_.back()) record();
        continue;
      }
      if (w <= start_ || (on_path & bit(w))) continue;
      path_.push_back(w);
      extend(on_path | bit(w));
      path_.pop_back();
    }
  }

  void record() {
    if (++seen_ > max_cycles_)
      throw ResourceLimit("cycle enumeration exceeded " + std::to_string(max_cycles_) + " cycles");
    if (path_.size() % 2 == 1) odd_.push_back(path_);
  }

  const std::vector<VertexSet>& adj_;
  std::size_t max_cycles_;
  std::size_t seen_ = 0;
  VarIndex start_ = 0;
  std::vector<VarIndex> path_;
  std::vector<std::vector<VarIndex>> odd_;
};

}  // namespace

bool Hypergraph::is_graph() const {
  return std::all_of(edges.begin(), edges.end(), [](VertexSet e) { return std::popcount(e) == 2; });
}

std::vector<VarIndex> Hypergraph::neighbors(VarIndex v) const {
  VertexSet out = 0;
  for (VertexSet e : edges) {
    if (e & bit(v)) out |= e;
  }
  return members(out & ~bit(v));
}

Hypergraph Hypergraph::deleted(VarIndex i) const {
  Hypergraph h{num_vars, vertices & ~bit(i), {}};
  for (VertexSet e : edges) h.edges.push_back(e & ~bit(i));
  normalize_edges(h.edges);
  return h;
}

Hypergraph Hypergraph::restricted(VertexSet c) const {
  Hypergraph h{num_vars, vertices & c, {}};
  for (VertexSet e : edges) h.edges.push_back(e & c);
  normalize_edges(h.edges);
  return h;
}

Hypergraph to_hypergraph(const MonomialIdeal& ideal) {
  if (ideal.num_vars() > 64) throw InvalidArgument("hypergraphs support at most 64 variables");
  if (!ideal.is_squarefree()) throw InvalidArgument("hypergraph of a non-square-free ideal");
  Hypergraph h{ideal.num_vars(), all_vertices(ideal.num_vars()), {}};
  for (const Monomial& g : ideal.generators()) h.edges.push_back(g.support_mask());
  normalize_edges(h.edges);
  return h;
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  for (VertexSet e : h.edges) {
    std::vector<Exponent> exps(h.num_vars, 0);
    for (VarIndex v : members(e)) exps[v] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(h.num_vars, std::move(gens));
}

LinearSum star_form(const Hypergraph& g, VarIndex v) {
  require_graph(g);
  std::vector<VarIndex> vars{v};
  for (VarIndex w : g.neighbors(v)) vars.push_back(w);
  if (vars.size() == 1) throw InvalidArgument("star form of an isolated vertex");
  return LinearSum(std::move(vars));
}

std::vector<Distance> distances_from(const Hypergraph& g, VarIndex v) {
  require_graph(g);
  return bfs(adjacency(g), bit(v));
}

GraphAnalysis analyze_cycles(const Hypergraph& g, const CycleOptions& options) {
  require_graph(g);
  std::vector<VertexSet> adj = adjacency(g);
  GraphAnalysis out;
  // 2-colouring, component by component.
  std::vector<int> colour(adj.size(), -1);
  for (VarIndex s = 0; s < adj.size() && out.is_bipartite; ++s) {
    if (colour[s] != -1 || !adj[s]) continue;
    colour[s] = 0;
    std::deque<VarIndex> queue{s};
    while (!queue.empty() && out.is_bipartite) {
      VarIndex u = queue.front();
      queue.pop_front();
      for (VarIndex w : members(adj[u])) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          out.is_bipartite = false;
        }
      }
    }
  }
  if (out.is_bipartite) return out;

  std::size_t active = std::count_if(adj.begin(), adj.end(), [](VertexSet a) { return a != 0; });
  if (active > options.max_vertices)
    throw ResourceLimit("odd-cycle enumeration limited to " + std::to_string(options.max_vertices) + " vertices");
  out.odd_cycles = CycleEnumerator(adj, options.max_cycles).odd_cycles();
  if (out.odd_cycles.size() == 1) {
    const std::vector<VarIndex>& c = out.odd_cycles.front();
    out.unique_odd_cycle = c;
    out.k = (c.size() - 1) / 2;
    VertexSet on_cycle = 0;
    for (VarIndex v : c) on_cycle |= bit(v);
    out.distances = bfs(adj, on_cycle);
  }
  return out;
}

PowerBound power_regularity_bound(const Hypergraph& g, VarIndex v, const CycleOptions& options) {
  star_form(g, v);
  GraphAnalysis a = analyze_cycles(g, options);
  if (a.is_bipartite) return {true, 0};
  if (!a.unique_odd_cycle)
    throw HypothesisViolation("graph has " + std::to_string(a.odd_cycles.size()) +
                              " odd cycles; the bound needs a unique odd cycle");
  const Distance& ell = a.distances[v];
  if (!ell) return {true, 0};
  return {false, std::max(a.k, a.k + *ell - 1)};
}

std::vector<Monomial> neighborhood_monomials(const MonomialIdeal& ideal, VarIndex x) {
  std::vector<Monomial> out;
  for (const Monomial& g : ideal.generators()) {
    if (g[x]) out.push_back(g.with_exponent(x, g[x] - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_decomposable(const Hypergraph& h, VertexSet u) {
  std::vector<VertexSet> inside;
  for (VertexSet e : h.edges) {
    if ((e & ~u) == 0) inside.push_back(e);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i; j < inside.size(); ++j) {
      if ((inside[i] & inside[j]) == 0) return true;
    }
  }
  return false;
}

bool is_decomposable_by_partition(const Hypergraph& h, VertexSet u) {
  auto has_edge = [&](VertexSet part) {
    return std::any_of(h.edges.begin(), h.edges.end(), [&](VertexSet e) { return (e & ~part) == 0; });
  };
  for (VertexSet a = u;; a = (a - 1) & u) {
    if (has_edge(a) && has_edge(u & ~a)) return true;
    if (a == 0) break;
  }
  return false;
}

bool is_2_saturating(const Hypergraph& h, VertexSet u) {
  if (is_decomposable(h, u)) return false;
  for (VarIndex i : members(h.vertices)) {
    if (!is_decomposable(h.deleted(i), u & ~bit(i))) return false;
  }
  return true;
}

std::optional<VertexSet> find_2_saturating_set(const Hypergraph& h, const SaturatingOptions& options) {
  std::vector<VarIndex> verts = members(h.vertices);
  if (verts.size() > options.max_vertices)
    throw ResourceLimit("2-saturating search limited to " + std::to_string(options.max_vertices) + " vertices");
  std::vector<Hypergraph> deletions;
  for (VarIndex i : verts) deletions.push_back(h.deleted(i));
  const std::uint64_t count = std::uint64_t{1} << verts.size();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    VertexSet u = 0;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (idx >> j & 1) u |= bit(verts[j]);
    }
    if (is_decomposable(h, u)) continue;
    bool saturating = true;
    for (std::size_t j = 0; j < verts.size() && saturating; ++j)
      saturating = is_decomposable(deletions[j], u & ~bit(verts[j]));
    if (saturating) return u;
  }
  return std::nullopt;
}

std::vector<oracle::MonomialPrime> tt_associated_primes_square(const MonomialIdeal& ideal, const TTOptions& options) {
  const std::size_t n = ideal.num_vars();
  if (n > options.max_vars)
    throw ResourceLimit("Terai-Trung enumeration limited to " + std::to_string(options.max_vars) + " variables");
  Hypergraph h = to_hypergraph(ideal);
  std::vector<oracle::MonomialPrime> out = oracle::minimal_primes(ideal);
  for (VertexSet c = 1; c <= all_vertices(n); ++c) {
    if (find_2_saturating_set(h.restricted(c))) out.push_back(oracle::MonomialPrime::from_mask(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(std::vector<std::uint64_t> conflicts) : conflicts_(std::move(conflicts)) {}

  std::uint64_t run() {
    std::uint64_t all = conflicts_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << conflicts_.size()) - 1;
    descend(0, all);
    return best_;
  }

 private:
  void descend(std::uint64_t chosen, std::uint64_t open) {
    if (std::popcount(chosen) > std::popcount(best_)) best_ = chosen;
    if (std::popcount(chosen) + std::popcount(open) <= std::popcount(best_)) return;
    if (!open) return;
    int v = std::countr_zero(open);
    std::uint64_t vb = std::uint64_t{1} << v;
    descend(chosen | vb, open & ~vb & ~conflicts_[v]);
    descend(chosen, open & ~vb);
  }

  std::vector<std::uint64_t> conflicts_;
  std::uint64_t best_ = 0;
};

}  // namespace

LeavesBound leaves_bound(const Hypergraph& g, const LeavesOptions& options) {
  require_graph(g);
  std::vector<VertexSet> adj = adjacency(g);
  std::vector<VarIndex> leaves;
  for (VarIndex v = 0; v < adj.size(); ++v) {
    if (std::popcount(adj[v]) != 1) continue;
    VarIndex b = static_cast<VarIndex>(std::countr_zero(adj[v]));
    bool on_triangle = false;
    for (VarIndex c : members(adj[b])) on_triangle = on_triangle || (adj[c] & adj[b]) != 0;
    if (!on_triangle) leaves.push_back(v);
  }
  if (leaves.size() > std::min<std::size_t>(options.max_leaves, 64))
    throw ResourceLimit("leaves search limited to " + std::to_string(options.max_leaves) + " leaves");
  std::vector<std::uint64_t> conflicts(leaves.size(), 0);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    std::vector<Distance> d = bfs(adj, bit(leaves[i]));
    for (std::size_t j = 0; j < leaves.size(); ++j) {
      if (i != j && d[leaves[j]] && *d[leaves[j]] < 4) conflicts[i] |= std::uint64_t{1} << j;
    }
  }
  LeavesBound out;
  for (std::uint64_t chosen = IndependentSetSearch(conflicts).run(); chosen; chosen &= chosen - 1) {
    VarIndex c = leaves[std::countr_zero(chosen)];
    out.leaves.push_back(c);
    out.forms.emplace_back(std::vector<VarIndex>{c, members(adj[c]).front()});
  }
  out.bound = out.leaves.size();
  return out;
}

std::string to_dot(const Hypergraph& g, const RingContext& ring) {
  require_graph(g);
  if (ring.size() != g.num_vars) throw RingMismatch("ring does not match the graph");
  std::string out = "graph G {\n";
  for (VarIndex v : members(g.vertices)) out += "  " + ring.name(v) + ";\n";
  for (VertexSet e : g.edges) {
    std::vector<VarIndex> ends = members(e);
    out += "  " + ring.name(ends[0]) + " -- " + ring.name(ends[1]) + ";\n";
  }
  return out + "}\n";
}

}  // namespace monreg::comb
