#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "monreg/errors.hpp"
#include "monreg/linear_algebra.hpp"
#include "monreg/oracle.hpp"

namespace monreg::oracle {

namespace {

using Mask = std::uint64_t;

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("resolution of the unit ideal");
}

void finish(TorProfile& profile, std::size_t nvars) {
  profile.pd = profile.betti.empty() ? 0 : profile.betti.rbegin()->first;
  profile.depth = nvars - profile.pd;
}

// Homology rank of a chain complex given by the bases in degrees k-1, k, k+1
// and a boundary oracle; used by both the Taylor and the Koszul routes.
template <class Boundary>
std::size_t homology_rank(const std::vector<Mask>& lower, const std::vector<Mask>& mid,
                          const std::vector<Mask>& upper, Boundary boundary) {
  if (mid.empty()) return 0;
  auto rank_of = [&](const std::vector<Mask>& src, const std::vector<Mask>& dst) -> std::size_t {
    if (src.empty() || dst.empty()) return 0;
    std::unordered_map<Mask, std::size_t> column;
    column.reserve(dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i) column.emplace(dst[i], i);
    std::vector<linalg::SparseRow> rows;
    rows.reserve(src.size());
    for (Mask s : src) {
      linalg::SparseRow row;
      int position = 0;
      for (Mask rest = s; rest; rest &= rest - 1, ++position) {
        Mask face = s & ~(rest & -rest);
        if (!boundary(face)) continue;
        auto it = column.find(face);
        if (it != column.end()) row.emplace_back(it->second, position % 2 ? -1 : 1);
      }
      std::sort(row.begin(), row.end());
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return linalg::rank(rows);
  };
  std::size_t r_down = rank_of(mid, lower);
  std::size_t r_up = rank_of(upper, mid);
  return mid.size() - r_down - r_up;
}

}  // namespace

TorProfile taylor_tor(const MonomialIdeal& ideal, const TaylorOptions& options) {
  require_proper(ideal);
  const std::vector<Monomial>& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > options.max_generators)
    throw ResourceLimit("Taylor complex needs " + std::to_string(r) + " generators, limit is " +
                        std::to_string(options.max_generators));
  TorProfile profile;
  const std::size_t n = ideal.num_vars();
  if (r == 0) {
    profile.betti[0] = 1;
    finish(profile, n);
    return profile;
  }
  const Mask subsets = Mask{1} << r;
  std::vector<Monomial> lcms(subsets);
  lcms[0] = Monomial(n);
  std::unordered_map<Monomial, std::vector<Mask>, MonomialHash> blocks;
  blocks[lcms[0]].push_back(0);
  for (Mask s = 1; s < subsets; ++s) {
    Mask low = s & -s;
    lcms[s] = lcm(lcms[s & ~low], gens[std::countr_zero(low)]);
    blocks[lcms[s]].push_back(s);
  }
  for (auto& [m, block] : blocks) {
    std::size_t top = 0;
    for (Mask s : block) top = std::max<std::size_t>(top, std::popcount(s));
    std::vector<std::vector<Mask>> by_size(top + 2);
    for (Mask s : block) by_size[std::popcount(s)].push_back(s);
    const Monomial& target = m;
    auto same_lcm = [&](Mask face) { return lcms[face] == target; };
    for (std::size_t i = 0; i <= top; ++i) {
      static const std::vector<Mask> none;
      const std::vector<Mask>& lower = i ? by_size[i - 1] : none;
      std::size_t h = homology_rank(lower, by_size[i], by_size[i + 1], same_lcm);
      if (h) profile.betti[i] += h;
    }
  }
  finish(profile, n);
  return profile;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_points) {
  const std::vector<Monomial>& gens = ideal.generators();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> points(seen.begin(), seen.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const Monomial& g : gens) {
      if (g.divides(points[i])) continue;
      Monomial m = lcm(points[i], g);
      if (seen.insert(m).second) {
        points.push_back(std::move(m));
        if (points.size() > max_points)
          throw ResourceLimit("LCM lattice exceeds " + std::to_string(max_points) + " points");
      }
    }
  }
  std::sort(points.begin(), points.end(), display_less);
  return points;
}

namespace {

// Upper Koszul complex K^m: faces F ⊆ supp(m) with x^{m - F} ∈ I, given by
// its facets supp(m) \ tight(g) for generators g | m.
struct KoszulComplex {
  std::vector<Mask> facets;
  std::size_t max_facet = 0;
  bool cone = false;

  std::vector<Mask> faces(std::size_t size) const {
    std::unordered_set<Mask> out;
    for (Mask f : facets) {
      if (static_cast<std::size_t>(std::popcount(f)) < size) continue;
      std::vector<int> bits;
      for (Mask r = f; r; r &= r - 1) bits.push_back(std::countr_zero(r));
      // Enumerate size-subsets of the facet by index combinations.
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        Mask face = 0;
        for (std::size_t p : pick) face |= Mask{1} << bits[p];
        out.insert(face);
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == bits.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    std::vector<Mask> v(out.begin(), out.end());
    std::sort(v.begin(), v.end());
    return v;
  }

  // dim of reduced homology in dimension k (k >= -1).
  std::size_t reduced_homology(int k) const {
    if (cone) return 0;
    if (k + 1 > static_cast<int>(max_facet)) return 0;
    auto level = [&](int dim) -> std::vector<Mask> {
      if (dim < -1) return {};
      if (dim + 1 > static_cast<int>(max_facet)) return {};
      return faces(static_cast<std::size_t>(dim + 1));
    };
    return homology_rank(level(k - 1), level(k), level(k + 1), [](Mask) { return true; });
  }
};

class KoszulBuilder {
 public:
  KoszulBuilder(const MonomialIdeal& ideal, const LatticeOptions& options) : ideal_(ideal), options_(options) {
    if (ideal.num_vars() > 64) throw ResourceLimit("LCM lattice route supports at most 64 variables");
  }

  KoszulComplex build(const Monomial& m) const {
    Mask supp = m.support_mask();
    if (static_cast<std::size_t>(std::popcount(supp)) > options_.max_support)
      throw ResourceLimit("lattice point support exceeds " + std::to_string(options_.max_support));
    std::vector<Mask> cands;
    for (const Monomial& g : ideal_.generators()) {
      if (!g.divides(m)) continue;
      Mask tight = 0;
      for (Mask r = supp; r; r &= r - 1) {
        int j = std::countr_zero(r);
        if (g[j] == m[j]) tight |= Mask{1} << j;
      }
      cands.push_back(supp & ~tight);
    }
    std::sort(cands.begin(), cands.end(),
              [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    KoszulComplex k;
    for (Mask c : cands) {
      bool covered = std::any_of(k.facets.begin(), k.facets.end(), [&](Mask f) { return (c & ~f) == 0; });
      if (!covered) k.facets.push_back(c);
    }
    Mask common = supp;
    for (Mask f : k.facets) {
      common &= f;
      k.max_facet = std::max<std::size_t>(k.max_facet, std::popcount(f));
    }
    k.cone = common != 0;
    return k;
  }

 private:
  const MonomialIdeal& ideal_;
  const LatticeOptions& options_;
};

}  // namespace

TorProfile lattice_tor(const MonomialIdeal& ideal, const LatticeOptions& options) {
  require_proper(ideal);
  TorProfile profile;
  profile.betti[0] = 1;
  if (ideal.is_zero()) {
    finish(profile, ideal.num_vars());
    return profile;
  }
  KoszulBuilder builder(ideal, options);
  for (const Monomial& m : lcm_lattice(ideal, options.max_lattice_points)) {
    KoszulComplex k = builder.build(m);
    if (k.cone) continue;
    for (int dim = -1; dim + 1 <= static_cast<int>(k.max_facet); ++dim) {
      std::size_t h = k.reduced_homology(dim);
      if (h) profile.betti[static_cast<std::size_t>(dim + 2)] += h;
    }
  }
  finish(profile, ideal.num_vars());
  return profile;
}

std::size_t projective_dimension(const MonomialIdeal& ideal, const LatticeOptions& options) {
  require_proper(ideal);
  if (ideal.is_zero()) return 0;
  KoszulBuilder builder(ideal, options);
  std::vector<KoszulComplex> complexes;
  for (const Monomial& m : lcm_lattice(ideal, options.max_lattice_points)) {
    KoszulComplex k = builder.build(m);
    if (!k.cone) complexes.push_back(std::move(k));
  }
  std::size_t top = std::min(ideal.num_vars(), ideal.size());
  for (std::size_t i = top; i >= 1; --i) {
    int dim = static_cast<int>(i) - 2;
    for (const KoszulComplex& k : complexes) {
      if (k.reduced_homology(dim)) return i;
    }
  }
  return 0;
}

std::size_t depth(const MonomialIdeal& ideal, const DepthOptions& options) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  if (ideal.is_zero()) return n;
  if (n <= 64) {
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (is_associated(ideal, all)) return 0;
  }
  if (ideal.size() <= options.taylor.max_generators) return taylor_tor(ideal, options.taylor).depth;
  return n - projective_dimension(ideal, options.lattice);
}

}  // namespace monreg::oracle
