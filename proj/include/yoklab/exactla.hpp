#pragma once

// Sparse exact linear algebra over a Field: sparse vectors keyed by basis
// index, reduced row-echelon subspaces, operator closure, and dense rank.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "yoklab/basis_index.hpp"
#include "yoklab/error.hpp"
#include "yoklab/parallel.hpp"
#include "yoklab/scalars.hpp"

namespace yoklab {

// No stored zeros; keys are basis indices.
template <class V>
using SparseVector = std::map<Index, V>;

// v[key] += c, dropping the entry if it cancels.
template <Field F>
void add_term(const F& f, SparseVector<typename F::value_type>& v, Index key,
              const typename F::value_type& c) {
  if (f.is_zero(c)) return;
  auto [it, inserted] = v.try_emplace(key, c);
  if (inserted) return;
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) v.erase(it);
}

// y += a * x
template <Field F>
void add_scaled(const F& f, SparseVector<typename F::value_type>& y,
                const typename F::value_type& a, const SparseVector<typename F::value_type>& x) {
  if (f.is_zero(a)) return;
  for (const auto& [k, c] : x) add_term(f, y, k, f.mul(a, c));
}

template <Field F>
SparseVector<typename F::value_type> scaled(const F& f, const typename F::value_type& a,
                                            const SparseVector<typename F::value_type>& x) {
  SparseVector<typename F::value_type> out;
  add_scaled(f, out, a, x);
  return out;
}

template <Field F>
SparseVector<typename F::value_type> difference(const F& f, SparseVector<typename F::value_type> x,
                                                const SparseVector<typename F::value_type>& y) {
  add_scaled(f, x, f.from_int(-1), y);
  return x;
}

template <Field F>
bool vectors_equal(const F& f, const SparseVector<typename F::value_type>& x,
                   const SparseVector<typename F::value_type>& y) {
  if (x.size() != y.size()) return false;
  auto a = x.begin();
  for (auto b = y.begin(); b != y.end(); ++a, ++b)
    if (a->first != b->first || !f.equals(a->second, b->second)) return false;
  return true;
}

// Span of sparse vectors kept in reduced row-echelon form: each row's pivot
// is its smallest key, has coefficient 1, and appears in no other row.
template <Field F>
class Subspace {
 public:
  using Scalar = typename F::value_type;
  using Vec = SparseVector<Scalar>;

  explicit Subspace(F field) : field_(std::move(field)) {}

  const F& field() const { return field_; }
  std::size_t dimension() const { return rows_.size(); }
  // pivot -> row, in increasing pivot order.
  const std::map<Index, Vec>& rows() const { return rows_; }

  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

  std::vector<Index> pivots() const {
    std::vector<Index> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
  }

  // Residual of v after eliminating every pivot coordinate.
  Vec reduce(Vec v) const {
    std::vector<std::pair<Index, Scalar>> hits;
    for (const auto& [k, c] : v)
      if (rows_.count(k)) hits.emplace_back(k, c);
    for (const auto& [k, c] : hits) add_scaled(field_, v, field_.neg(c), rows_.at(k));
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  // Adds v to the span; returns the normalized new row, or nothing if v was
  // already contained.
  std::optional<Vec> insert(const Vec& v) {
    Vec u = reduce(v);
    if (u.empty()) return std::nullopt;
    const Index pivot = u.begin()->first;
    const Scalar lead_inv = field_.inv(u.begin()->second);
    for (auto& [k, c] : u) c = field_.mul(c, lead_inv);
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Scalar c = field_.neg(it->second);
      add_scaled(field_, row, c, u);
    }
    rows_.emplace(pivot, u);
    return u;
  }

  // Keys in [0, universe) that are not pivots; they index a basis of the
  // quotient by this subspace.
  std::vector<Index> complement_keys(std::size_t universe) const {
    std::vector<Index> out;
    for (std::size_t k = 0; k < universe; ++k)
      if (!rows_.count(static_cast<Index>(k))) out.push_back(static_cast<Index>(k));
    return out;
  }

  // Coordinates of v + S in the quotient basis given by `complement`.
  std::vector<Scalar> quotient_coordinates(std::span<const Index> complement, const Vec& v) const {
    Vec residual = reduce(v);
    std::vector<Scalar> out;
    out.reserve(complement.size());
    for (Index k : complement) {
      auto it = residual.find(k);
      out.push_back(it == residual.end() ? field_.zero() : it->second);
    }
    return out;
  }

  bool same_span(const Subspace& other) const {
    if (rows_.size() != other.rows_.size()) return false;
    auto a = rows_.begin();
    for (auto b = other.rows_.begin(); b != other.rows_.end(); ++a, ++b)
      if (a->first != b->first || !vectors_equal(field_, a->second, b->second)) return false;
    return true;
  }

 private:
  F field_;
  std::map<Index, Vec> rows_;
};

template <Field F>
Subspace<F> echelonize(const F& f, std::span<const SparseVector<typename F::value_type>> vectors) {
  Subspace<F> s(f);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

template <Field F>
Subspace<F> echelonize(const F& f, const std::vector<SparseVector<typename F::value_type>>& vectors) {
  return echelonize(f, std::span<const SparseVector<typename F::value_type>>(vectors));
}

template <class V>
using LinearOperator = std::function<SparseVector<V>(const SparseVector<V>&)>;

// Smallest subspace containing `seed` and stable under every operator.
// Serial: one worklist entry at a time. Parallel: each round applies all
// operators to the whole frontier concurrently, then inserts in a fixed
// order. Both return the same reduced echelon form.
template <Field F>
Subspace<F> closure_under(const std::vector<LinearOperator<typename F::value_type>>& ops,
                          Subspace<F> seed, Exec exec = Exec::Serial) {
  using Vec = SparseVector<typename F::value_type>;
  std::vector<Vec> frontier = seed.basis();
  if (exec == Exec::Serial) {
    std::deque<Vec> work(frontier.begin(), frontier.end());
    while (!work.empty()) {
      Vec v = std::move(work.front());
      work.pop_front();
      for (const auto& op : ops)
        if (auto added = seed.insert(op(v))) work.push_back(std::move(*added));
    }
    return seed;
  }
  while (!frontier.empty()) {
    const std::size_t m = ops.size();
    auto images = tabulate<Vec>(exec, frontier.size() * m,
                                [&](std::size_t k) { return ops[k % m](frontier[k / m]); });
    std::vector<Vec> next;
    for (auto& img : images)
      if (auto added = seed.insert(img)) next.push_back(std::move(*added));
    frontier = std::move(next);
  }
  return seed;
}

// Row-major dense matrix.
template <class V>
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<V> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, const V& fill) : rows(r), cols(c), data(r * c, fill) {}

  V& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const V& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

// In-place forward elimination; returns pivot columns.
template <Field F>
std::vector<std::size_t> forward_eliminate(const F& f, DenseMatrix<typename F::value_type>& m, Exec exec,
                                           bool full) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && f.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    const auto lead_inv = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), lead_inv);
    const std::size_t first = full ? 0 : row + 1;
    for_each_index(exec, m.rows - first, [&](std::size_t k) {
      const std::size_t i = first + k;
      if (i == row || f.is_zero(m.at(i, col))) return;
      const auto factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
    });
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace detail

template <Field F>
std::size_t matrix_rank(const F& f, DenseMatrix<typename F::value_type> m, Exec exec = Exec::Serial) {
  return detail::forward_eliminate(f, m, exec, false).size();
}

template <Field F>
bool invertible(const F& f, const DenseMatrix<typename F::value_type>& m, Exec exec = Exec::Serial) {
  if (m.rows != m.cols) throw UsageError("invertible: matrix is not square");
  return matrix_rank(f, m, exec) == m.rows;
}

// Basis of {x : M x = 0}, one vector per free column.
template <Field F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const F& f, DenseMatrix<typename F::value_type> m) {
  auto pivots = detail::forward_eliminate(f, m, Exec::Serial, true);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> x(m.cols, f.zero());
    x[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = f.neg(m.at(k, free));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace yoklab
