#include <algorithm>
#include <bit>

#include "initreg_internal.hpp"
#include "monreg/errors.hpp"
#include "monreg/initreg.hpp"

namespace monreg::initreg {

namespace {

struct Candidate {
  FormKind kind;
  Triple vars;  // a pair leaves vars[2] unused
};

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    }
    return words_.size() * 64;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

void split(const std::vector<Candidate>& chosen, std::vector<Pair>& pairs, std::vector<Triple>& triples) {
  pairs.clear();
  triples.clear();
  for (const Candidate& c : chosen) {
    if (c.kind == FormKind::binomial)
      pairs.push_back({c.vars[0], c.vars[1]});
    else
      triples.push_back(c.vars);
  }
}

bool compatible(const MonomialIdeal& ideal, const Candidate& a, const Candidate& b) {
  std::vector<Pair> pairs;
  std::vector<Triple> triples;
  split({a, b}, pairs, triples);
  Verdict v;
  detail::cross_conditions(ideal, pairs, triples, v);
  return v.pass();
}

// Maximum clique in the compatibility graph by branch and bound.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adj, std::size_t max_nodes) : adj_(adj), max_nodes_(max_nodes) {}

  std::vector<std::size_t> run(bool& exhausted) {
    Bitset all(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i) all.set(i);
    std::vector<std::size_t> current;
    expand(current, all);
    exhausted = nodes_ > max_nodes_;
    return best_;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bitset open) {
    if (++nodes_ > max_nodes_) return;
    if (current.size() > best_.size()) best_ = current;
    while (open.any()) {
      if (current.size() + open.count() <= best_.size()) return;
      std::size_t v = open.first();
      open.reset(v);
      current.push_back(v);
      expand(current, open & adj_[v]);
      current.pop_back();
      if (nodes_ > max_nodes_) return;
    }
  }

  const std::vector<Bitset>& adj_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

SequenceCertificate find_sequences(const MonomialIdeal& ideal, const SearchOptions& options) {
  const std::size_t n = ideal.num_vars();
  if (ideal.is_unit()) {
    SequenceCertificate empty;
    empty.order = TermOrder::lex(n);
    empty.verified = true;
    return empty;
  }
  std::vector<Candidate> candidates;
  for (VarIndex b0 = 0; b0 < n; ++b0) {
    for (VarIndex b1 = 0; b1 < n; ++b1) {
      if (b1 != b0 && criterion_binomial(ideal, b0, b1).pass())
        candidates.push_back({FormKind::binomial, {b0, b1, 0}});
    }
  }
  for (VarIndex b0 = 0; b0 < n; ++b0) {
    for (VarIndex b1 = 0; b1 < n; ++b1) {
      for (VarIndex b2 = 0; b2 < n; ++b2) {
        if (b1 == b0 || b2 == b0 || b2 == b1) continue;
        if (criterion_trinomial(ideal, b0, b1, b2).pass()) candidates.push_back({FormKind::trinomial, {b0, b1, b2}});
      }
    }
  }

  std::vector<Bitset> adj(candidates.size(), Bitset(candidates.size()));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (compatible(ideal, candidates[i], candidates[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  bool exhausted = false;
  std::vector<std::size_t> best = CliqueSearch(adj, options.max_nodes).run(exhausted);
  if (exhausted) {
    for (std::size_t v = 0; v < candidates.size(); ++v) {
      bool fits = std::all_of(best.begin(), best.end(), [&](std::size_t u) { return u != v && adj[u].test(v); });
      if (fits) best.push_back(v);
    }
  }
  std::sort(best.begin(), best.end());
  std::vector<Candidate> chosen;
  for (std::size_t i : best) chosen.push_back(candidates[i]);

  MonomialIdeal square = ideal.is_zero() ? ideal : ideal_power(ideal, 2);
  std::vector<Pair> pairs;
  std::vector<Triple> triples;
  while (true) {
    split(chosen, pairs, triples);
    CombinedResult combined = criterion_combined(ideal, pairs, triples);
    if (!combined.certificate) throw Error("sequence search assembled a family that fails the combined criterion");
    SequenceCertificate cert = std::move(*combined.certificate);
    if (is_initially_regular(square, cert.forms, cert.order).regular) {
      cert.verified = true;
      return cert;
    }
    chosen.pop_back();
  }
}

}  // namespace monreg::initreg
