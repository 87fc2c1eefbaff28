#include "monreg/term_order.hpp"

#include <numeric>

#include "monreg/errors.hpp"

namespace monreg {

TermOrder::TermOrder(std::vector<VarIndex> priority) : priority_(std::move(priority)) {
  const std::size_t n = priority_.size();
  if (n == 0) throw InvalidArgument("term order over an empty ring");
  rank_.assign(n, n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    VarIndex v = priority_[pos];
    if (v >= n || rank_[v] != n) throw InvalidArgument("term order priority is not a permutation");
    rank_[v] = pos;
  }
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<VarIndex> p(nvars);
  std::iota(p.begin(), p.end(), VarIndex{0});
  return TermOrder(std::move(p));
}

TermOrder TermOrder::lex(std::vector<VarIndex> priority) { return TermOrder(std::move(priority)); }

TermOrder TermOrder::lex_leading(std::size_t nvars, std::span<const VarIndex> leading) {
  std::vector<bool> used(nvars, false);
  std::vector<VarIndex> p;
  p.reserve(nvars);
  for (VarIndex v : leading) {
    if (v >= nvars || used[v]) throw InvalidArgument("leading variables must be distinct and in range");
    used[v] = true;
    p.push_back(v);
  }
  for (VarIndex v = 0; v < nvars; ++v) {
    if (!used[v]) p.push_back(v);
  }
  return TermOrder(std::move(p));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_ring(a, b);
  if (a.num_vars() != priority_.size()) throw RingMismatch("term order and monomial rings differ");
  for (VarIndex v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::to_string(const RingContext& ring) const {
  std::string out = "lex";
  for (VarIndex v : priority_) out += ' ' + ring.name(v);
  return out;
}

}  // namespace monreg
