#include <algorithm>
#include <bit>
#include <unordered_set>

#include "monreg/errors.hpp"
#include "monreg/oracle.hpp"

namespace monreg::oracle {

MonomialPrime MonomialPrime::from_mask(std::uint64_t mask) {
  MonomialPrime p;
  for (VarIndex i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) p.support.push_back(i);
  }
  return p;
}

std::uint64_t MonomialPrime::mask() const {
  std::uint64_t m = 0;
  for (VarIndex v : support) m |= std::uint64_t{1} << v;
  return m;
}

bool MonomialPrime::contains(const LinearSum& f) const {
  return std::all_of(f.variables().begin(), f.variables().end(), [&](VarIndex v) {
    return std::binary_search(support.begin(), support.end(), v);
  });
}

std::string MonomialPrime::to_string(const RingContext& ring) const {
  std::string out = "(";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) out += ", ";
    out += ring.name(support[i]);
  }
  return out + ")";
}

namespace {

struct GensHash {
  std::size_t operator()(const std::vector<Monomial>& gens) const {
    std::size_t h = gens.size();
    for (const Monomial& g : gens) h = h * 1000003u ^ g.hash();
    return h;
  }
};

// Exponent vector of an irreducible ideal (x_i^{a_i}); 0 marks an absent variable.
std::vector<Exponent> irreducible_key(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<Exponent> key(n, 0);
  for (const Monomial& g : gens) {
    for (VarIndex i = 0; i < n; ++i) {
      if (g[i]) key[i] = g[i];
    }
  }
  return key;
}

// Q_a ⊆ Q_b.
bool irreducible_contained(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && (!b[i] || b[i] > a[i])) return false;
  }
  return true;
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal, const DecompositionOptions& options) {
  if (ideal.is_zero()) throw InvalidArgument("irreducible decomposition of the zero ideal");
  if (ideal.is_unit()) throw InvalidArgument("irreducible decomposition of the unit ideal");
  const std::size_t n = ideal.num_vars();

  // Splitting (J, u*v) = (J, u) ∩ (J, v) for coprime u, v until every
  // generator is a pure power.
  std::unordered_set<std::vector<Monomial>, GensHash> seen;
  std::vector<std::vector<Monomial>> stack{ideal.generators()};
  std::vector<std::vector<Exponent>> leaves;
  std::unordered_set<std::size_t> leaf_hashes;
  while (!stack.empty()) {
    std::vector<Monomial> gens = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(gens).second) continue;
    if (seen.size() > options.max_nodes)
      throw ResourceLimit("irreducible decomposition exceeded " + std::to_string(options.max_nodes) + " nodes");
    auto split = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return !g.is_pure_power(); });
    if (split == gens.end()) {
      leaves.push_back(irreducible_key(gens, n));
      continue;
    }
    const Monomial g = *split;
    VarIndex x = g.support().front();
    Monomial u = Monomial::variable(n, x, g[x]);
    Monomial v = g.with_exponent(x, 0);
    for (const Monomial& piece : {v, u}) {
      std::vector<Monomial> child = gens;
      child.push_back(piece);
      stack.push_back(minimalize(std::move(child)));
    }
  }

  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  // Q_b is redundant when some other Q_a ⊆ Q_b.
  std::vector<std::size_t> support_size(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    support_size[i] = std::count_if(leaves[i].begin(), leaves[i].end(), [](Exponent e) { return e != 0; });
  std::vector<MonomialIdeal> out;
  for (std::size_t b = 0; b < leaves.size(); ++b) {
    bool redundant = false;
    for (std::size_t a = 0; a < leaves.size() && !redundant; ++a) {
      if (a != b && support_size[a] <= support_size[b] && irreducible_contained(leaves[a], leaves[b]))
        redundant = true;
    }
    if (redundant) continue;
    std::vector<Monomial> gens;
    for (VarIndex i = 0; i < n; ++i) {
      if (leaves[b][i]) gens.push_back(Monomial::variable(n, i, leaves[b][i]));
    }
    out.emplace_back(n, std::move(gens));
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& p, const MonomialIdeal& q) {
    return std::lexicographical_compare(p.generators().begin(), p.generators().end(), q.generators().begin(),
                                        q.generators().end(), display_less);
  });
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal, const DecompositionOptions& options) {
  std::vector<MonomialPrime> out;
  for (const MonomialIdeal& q : irreducible_decomposition(ideal, options)) {
    MonomialPrime p;
    for (const Monomial& g : q.generators()) p.support.push_back(g.support().front());
    std::sort(p.support.begin(), p.support.end());
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  std::vector<Monomial> radical_gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    for (Exponent& x : e) x = x ? 1 : 0;
    radical_gens.emplace_back(std::move(e));
  }
  return associated_primes(MonomialIdeal(ideal.num_vars(), std::move(radical_gens)));
}

namespace {

// Search for u = lcm_c(g_c / x_c) outside J, one generator g_c ∋ c per
// variable c of C. Such u is annihilated by m_C exactly when P_C is associated.
class SocleSearch {
 public:
  SocleSearch(const MonomialIdeal& local, std::vector<VarIndex> vars) : ideal_(local), vars_(std::move(vars)) {
    for (VarIndex c : vars_) {
      std::vector<Monomial> cands;
      for (const Monomial& g : ideal_.generators()) {
        if (g[c]) cands.push_back(g.with_exponent(c, g[c] - 1));
      }
      choices_.push_back(minimal_candidates(std::move(cands)));
    }
    // Most constrained variable first.
    std::vector<std::size_t> idx(vars_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return choices_[a].size() < choices_[b].size(); });
    std::vector<std::vector<Monomial>> sorted;
    for (std::size_t i : idx) sorted.push_back(std::move(choices_[i]));
    choices_ = std::move(sorted);
  }

  bool run() {
    for (const auto& c : choices_) {
      if (c.empty()) return false;
    }
    return descend(0, Monomial(ideal_.num_vars()));
  }

 private:
  static std::vector<Monomial> minimal_candidates(std::vector<Monomial> cands) {
    // Smaller g_c / x_c gives a smaller lcm, so only minimal candidates matter.
    return minimalize(std::move(cands));
  }

  bool descend(std::size_t depth, const Monomial& partial) {
    if (ideal_.contains(partial)) return false;
    if (depth == choices_.size()) return true;
    if (!failed_[depth].insert(partial).second) return false;
    for (const Monomial& cand : choices_[depth]) {
      if (descend(depth + 1, lcm(partial, cand))) return true;
    }
    return false;
  }

  const MonomialIdeal& ideal_;
  std::vector<VarIndex> vars_;
  std::vector<std::vector<Monomial>> choices_;
  std::unordered_map<std::size_t, std::unordered_set<Monomial, MonomialHash>> failed_;
};

}  // namespace

bool is_associated(const MonomialIdeal& ideal, std::uint64_t support_mask) {
  if (ideal.num_vars() > 64) throw ResourceLimit("associated-prime test supports at most 64 variables");
  if (ideal.is_zero()) return support_mask == 0;
  MonomialIdeal local = ideal.localized(support_mask);
  if (local.is_unit()) return false;
  return SocleSearch(local, MonomialPrime::from_mask(support_mask).support).run();
}

ZeroDivisorReport is_zerodivisor_linear(const MonomialIdeal& ideal, const LinearSum& f) {
  const std::size_t n = ideal.num_vars();
  for (VarIndex v : f.variables()) {
    if (v >= n) throw InvalidArgument("linear sum variable outside the ring");
  }
  if (ideal.is_zero() || ideal.is_unit()) return {};
  if (n > 24) {
    for (const MonomialPrime& p : associated_primes(ideal)) {
      if (p.contains(f)) return {true, p};
    }
    return {};
  }
  // Associated primes containing supp(f): supersets C of supp(f), smallest first.
  std::uint64_t base = 0;
  for (VarIndex v : f.variables()) base |= std::uint64_t{1} << v;
  std::uint64_t rest = ((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)) & ~base;
  std::vector<std::uint64_t> extras;
  for (std::uint64_t t = rest;; t = (t - 1) & rest) {
    extras.push_back(t);
    if (t == 0) break;
  }
  std::stable_sort(extras.begin(), extras.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint64_t t : extras) {
    if (is_associated(ideal, base | t)) return {true, MonomialPrime::from_mask(base | t)};
  }
  return {};
}

}  // namespace monreg::oracle
