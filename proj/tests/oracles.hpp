#ifndef DCOSET_TESTS_ORACLES_HPP
#define DCOSET_TESTS_ORACLES_HPP

// Reference computations kept apart from the library code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcoset/lattice.hpp"
#include "dcoset/monoid.hpp"

namespace oracle {

using Vec = std::vector<std::int32_t>;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// All nonzero a with |a| <= max_degree and sum a_i w_i = 0, by DFS.
inline std::set<Vec> invariants(const dcoset::WeightSystem& ws, int max_degree) {
  std::set<Vec> out;
  const std::size_t n = ws.size();
  Vec a(n, 0);
  std::vector<std::int64_t> acc(ws.rank(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (left < max_degree && std::all_of(acc.begin(), acc.end(), [](auto x) { return x == 0; })) {
        out.insert(a);
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      a[i] = k;
      self(self, i + 1, left - k);
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += ws[i][c];
    }
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] -= (left + 1) * ws[i][c];
    a[i] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

// Invariants with no nonzero invariant strictly below them.
inline std::vector<Vec> irreducibles(const dcoset::WeightSystem& ws, int max_degree) {
  const auto all = invariants(ws, max_degree);
  std::vector<Vec> out;
  for (const auto& a : all) {
    bool reducible = false;
    Vec b(a.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, bool strict, bool nonzero) -> void {
      if (reducible) return;
      if (i == a.size()) {
        if (strict && nonzero && all.count(b)) reducible = true;
        return;
      }
      for (std::int32_t k = 0; k <= a[i]; ++k) {
        b[i] = k;
        self(self, i + 1, strict || k < a[i], nonzero || k > 0);
      }
      b[i] = 0;
    };
    rec(rec, 0, false, false);
    if (!reducible) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rank over Q by plain Gaussian elimination.
inline std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const cpp_rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t relation_rank(const std::vector<dcoset::Relation>& rs) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : rs) rows.emplace_back(r.exponents.begin(), r.exponents.end());
  return rational_rank(rows);
}

// Every invariant of degree <= max_degree is a sum of basis elements.
inline bool decomposes(const dcoset::WeightSystem& ws, const std::vector<dcoset::Relation>& basis,
                       int max_degree) {
  std::map<Vec, bool> memo;
  auto rec = [&](auto&& self, const Vec& a) -> bool {
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return true;
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& h : basis) {
      bool fits = true;
      for (std::size_t i = 0; i < a.size() && fits; ++i) fits = h.exponents[i] <= a[i];
      if (!fits) continue;
      Vec rest = a;
      for (std::size_t i = 0; i < a.size(); ++i) rest[i] -= h.exponents[i];
      if (self(self, rest)) {
        ok = true;
        break;
      }
    }
    memo[a] = ok;
    return ok;
  };
  for (const auto& a : invariants(ws, max_degree)) {
    if (!rec(rec, a)) return false;
  }
  return true;
}

// Leibniz formula over all permutations.
inline cpp_int leibniz_det(const std::vector<std::vector<cpp_int>>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  cpp_int det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    cpp_int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= x[i][p[i]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

inline std::vector<std::vector<cpp_int>> random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<std::vector<cpp_int>> x(n, std::vector<cpp_int>(n));
  for (auto& r : x)
    for (auto& v : r) v = d(rng);
  return x;
}

inline std::vector<dcoset::Weight> sorted_weights(const dcoset::WeightSystem& ws) {
  auto w = ws.weights();
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace oracle

#endif  // DCOSET_TESTS_ORACLES_HPP
