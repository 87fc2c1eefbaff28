#include "monreg/linear_algebra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace monreg::linalg {

namespace {

struct OverflowSignal {};

struct Int64Ops {
  using T = std::int64_t;
  static T from(std::int64_t v) { return v; }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
  static bool is_zero(const T& a) { return a == 0; }
  static bool is_one_abs(const T& a) { return a == 1 || a == -1; }
  static T div(T a, T b) { return a / b; }
};

struct MpzOps {
  using T = mpz_class;
  static T from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_zero(const T& a) { return a == 0; }
  static bool is_one_abs(const T& a) { return a == 1 || a == -1; }
  static T div(const T& a, const T& b) { return a / b; }
};

template <class Ops>
std::size_t rank_impl(const std::vector<SparseRow>& input) {
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::size_t, T>>;

  std::vector<const SparseRow*> order;
  for (const SparseRow& r : input) {
    if (!r.empty()) order.push_back(&r);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const SparseRow* a, const SparseRow* b) { return a->size() < b->size(); });

  std::unordered_map<std::size_t, Row> pivots;  // leading column -> echelon row
  std::size_t rank = 0;
  for (const SparseRow* src : order) {
    Row row;
    row.reserve(src->size());
    for (auto& [c, v] : *src) row.emplace_back(c, Ops::from(v));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        break;
      }
      const Row& piv = it->second;
      // row <- a*row - b*piv, cancelling the leading column.
      T a = piv.front().second, b = row.front().second;
      T g = Ops::gcd(a, b);
      a = Ops::div(a, g);
      b = Ops::div(b, g);
      Row next;
      next.reserve(row.size() + piv.size());
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          next.emplace_back(row[i].first, Ops::mul(a, row[i].second));
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          next.emplace_back(piv[j].first, Ops::sub(T(0), Ops::mul(b, piv[j].second)));
          ++j;
        } else {
          T v = Ops::sub(Ops::mul(a, row[i].second), Ops::mul(b, piv[j].second));
          if (!Ops::is_zero(v)) next.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      if (!next.empty()) {
        T content = next.front().second;
        for (auto& e : next) {
          if (Ops::is_one_abs(content)) break;
          content = Ops::gcd(content, e.second);
        }
        if (!Ops::is_one_abs(content) && !Ops::is_zero(content)) {
          for (auto& e : next) e.second = Ops::div(e.second, content);
        }
      }
      row = std::move(next);
    }
  }
  return rank;
}

}  // namespace

std::size_t rank(const std::vector<SparseRow>& rows) {
  try {
    return rank_impl<Int64Ops>(rows);
  } catch (const OverflowSignal&) {
    return rank_impl<MpzOps>(rows);
  }
}

}  // namespace monreg::linalg
