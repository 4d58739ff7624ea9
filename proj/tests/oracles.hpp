#pragma once

// Independent reference computations used only by the tests. None of these
// call the library code path they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <vector>

#include "yoklab/basis_index.hpp"
#include "yoklab/scalars.hpp"

namespace oracle {

// Smallest g whose multiplicative order mod p is p - 1, by walking powers.
inline std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    std::uint64_t x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  return p == 2 ? 1 : 0;
}

// Coefficients (constant first) of x^r - 1 divided by Phi_d for every proper
// divisor d, computed recursively by long division over the integers.
inline std::vector<long> cyclotomic(int r) {
  std::vector<long> num(r + 1, 0);
  num[0] = -1;
  num[r] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d) continue;
    auto den = cyclotomic(d);
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (int k = static_cast<int>(num.size()) - 1; k >= static_cast<int>(den.size()) - 1; --k) {
      long c = num[k] / den.back();
      quot[k - den.size() + 1] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[k - den.size() + 1 + j] -= c * den[j];
    }
    num = quot;
  }
  return num;
}

// Word length of every permutation of {1..n} by breadth-first search over
// adjacent transpositions applied on the right.
inline std::map<std::vector<int>, int> bfs_lengths(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  std::map<std::vector<int>, int> dist{{id, 0}};
  std::queue<std::vector<int>> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop();
    for (int i = 0; i + 1 < n; ++i) {
      auto v = w;
      std::swap(v[i], v[i + 1]);
      if (dist.emplace(v, dist[w] + 1).second) todo.push(v);
    }
  }
  return dist;
}

inline int inversions(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

// Longest permutation mapping every block of `parts` to itself.
inline std::vector<int> young_longest(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::vector<int> block(n + 1);
  for (int b = 0, pos = 1; b < static_cast<int>(parts.size()); ++b)
    for (int k = 0; k < parts[b]; ++k) block[pos++] = b;
  std::vector<int> w(n), best;
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    bool ok = true;
    for (int i = 1; i <= n; ++i) ok = ok && block[i] == block[w[i - 1]];
    if (ok && (best.empty() || inversions(w) > inversions(best))) best = w;
  } while (std::next_permutation(w.begin(), w.end()));
  return best;
}

// Number of (c, D) with c in {1..r}^n and D a subset of {1..n-1} such that
// c_d = c_{d+1} for every d in D.
inline std::uint64_t label_count(int r, int n) {
  std::uint64_t total = 0;
  std::vector<int> c(n, 1);
  while (true) {
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
      bool ok = true;
      for (int d = 1; d < n; ++d)
        if ((mask >> (d - 1) & 1) && c[d - 1] != c[d]) ok = false;
      total += ok;
    }
    int k = n - 1;
    while (k >= 0 && c[k] == r) c[k--] = 1;
    if (k < 0) break;
    ++c[k];
  }
  return total;
}

// Rank of a dense matrix by plain row reduction using only field operations.
template <yoklab::Field F>
std::size_t rank(const F& f, std::vector<std::vector<typename F::value_type>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && f.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const auto inv = f.inv(rows[r][c]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      const auto factor = f.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

// Dimension of A s A: the span of b_x s b_y over all basis elements and
// seeds, ranked densely.
template <class Algebra>
std::size_t two_sided_ideal_dim(const Algebra& alg, const std::vector<typename Algebra::Vec>& seeds) {
  const auto& f = alg.field();
  const std::size_t d = alg.dimension();
  std::vector<std::vector<typename Algebra::Scalar>> rows;
  for (const auto& s : seeds)
    for (std::size_t x = 0; x < d; ++x) {
      typename Algebra::Vec bx{{static_cast<yoklab::Index>(x), f.one()}};
      const auto left = alg.mul_vec(bx, s);
      if (left.empty()) continue;
      for (std::size_t y = 0; y < d; ++y) {
        typename Algebra::Vec by{{static_cast<yoklab::Index>(y), f.one()}};
        const auto v = alg.mul_vec(left, by);
        if (v.empty()) continue;
        std::vector<typename Algebra::Scalar> row(d, f.zero());
        for (const auto& [k, c] : v) row[k] = c;
        rows.push_back(std::move(row));
      }
    }
  return rank(f, std::move(rows));
}

}  // namespace oracle
