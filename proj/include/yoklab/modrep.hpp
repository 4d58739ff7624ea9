#pragma once

// Simple modules of Y_{r,n}(0): one-dimensional representations from (c, J)
// labels, an independent brute-force enumeration, the commutator ideal, and
// a two-sided certificate that it is the Jacobson radical.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "yoklab/ideals.hpp"
#include "yoklab/labels.hpp"
#include "yoklab/ycore.hpp"

namespace yoklab {

template <class V>
struct OneDimRep {
  std::vector<V> t_values;  // n entries
  std::vector<V> g_values;  // n-1 entries
};

template <Field F>
bool same_rep(const F& f, const OneDimRep<typename F::value_type>& a, const OneDimRep<typename F::value_type>& b) {
  if (a.t_values.size() != b.t_values.size() || a.g_values.size() != b.g_values.size()) return false;
  for (std::size_t i = 0; i < a.t_values.size(); ++i)
    if (!f.equals(a.t_values[i], b.t_values[i])) return false;
  for (std::size_t i = 0; i < a.g_values.size(); ++i)
    if (!f.equals(a.g_values[i], b.g_values[i])) return false;
  return true;
}

// t_i -> zeta^{c_i}; g_k -> -1 on the label's descent positions, 0 elsewhere.
template <Field F>
OneDimRep<typename F::value_type> rep_of_label(const F& f, const SimpleLabel& label) {
  validate_label(label, f.order());
  const int n = static_cast<int>(label.c.size());
  OneDimRep<typename F::value_type> rep;
  for (int ci : label.c) rep.t_values.push_back(f.zeta_pow(ci));
  rep.g_values.assign(n - 1, f.zero());
  for (int k : label.descent_positions()) rep.g_values[k - 1] = f.from_int(-1);
  return rep;
}

// Evaluates every defining relation under scalar substitution, with
// e_i = (1/r) Sum_s t_i^s t_{i+1}^{-s}.
template <Field F>
bool check_one_dim(const F& f, const OneDimRep<typename F::value_type>& rep, const typename F::value_type& q) {
  const int n = static_cast<int>(rep.t_values.size());
  const int r = f.order();
  if (static_cast<int>(rep.g_values.size()) != n - 1) return false;
  const auto& t = rep.t_values;
  const auto& g = rep.g_values;
  for (const auto& ti : t)
    if (!f.equals(power(f, ti, r), f.one())) return false;
  for (int i = 1; i < n; ++i) {
    Permutation s = Permutation::simple(n, i);
    for (int j = 1; j <= n; ++j)
      if (!f.equals(f.mul(g[i - 1], t[j - 1]), f.mul(t[s(j) - 1], g[i - 1]))) return false;
  }
  for (int i = 1; i + 1 < n; ++i) {
    auto lhs = f.mul(f.mul(g[i - 1], g[i]), g[i - 1]);
    auto rhs = f.mul(f.mul(g[i], g[i - 1]), g[i]);
    if (!f.equals(lhs, rhs)) return false;
  }
  const auto qm1 = f.sub(q, f.one());
  const auto inv_r = f.inv(f.from_int(r));
  for (int i = 1; i < n; ++i) {
    auto e = f.zero();
    for (int s = 0; s < r; ++s) e = f.add(e, f.mul(power(f, t[i - 1], s), power(f, t[i], -s)));
    e = f.mul(e, inv_r);
    auto rhs = f.add(q, f.mul(qm1, f.mul(e, g[i - 1])));
    if (!f.equals(f.mul(g[i - 1], g[i - 1]), rhs)) return false;
  }
  return true;
}

// All maps t_i -> zeta^{c_i}, g_k -> {0, -1} that satisfy the q = 0 relations.
template <Field F>
std::vector<OneDimRep<typename F::value_type>> enumerate_one_dim_bruteforce(const F& f, int n) {
  std::vector<OneDimRep<typename F::value_type>> out;
  const auto q = f.zero();
  for (const auto& c : all_color_vectors(f.order(), n)) {
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
      OneDimRep<typename F::value_type> rep;
      for (int ci : c) rep.t_values.push_back(f.zeta_pow(ci));
      for (int k = 0; k < n - 1; ++k) rep.g_values.push_back(mask & (1ul << k) ? f.from_int(-1) : f.zero());
      if (check_one_dim(f, rep, q)) out.push_back(std::move(rep));
    }
  }
  return out;
}

// rep(E_chi g_w) = [chi = c] * Prod_{i in word(w)} rep(g_i)
template <Field F>
typename F::value_type evaluate_rep(const YAlgebra<F>& y, const OneDimRep<typename F::value_type>& rep,
                                    const SparseVector<typename F::value_type>& e_vec) {
  const auto& f = y.field();
  const auto& idx = y.index();
  ColorVector c;
  for (const auto& tv : rep.t_values) {
    int color = 0;
    for (int k = 1; k <= y.r(); ++k)
      if (f.equals(f.zeta_pow(k), tv)) color = k;
    if (color == 0) throw UsageError("evaluate_rep: t-value is not a power of zeta");
    c.push_back(color);
  }
  const std::size_t chi = idx.color_index(c);
  auto total = f.zero();
  for (const auto& [key, coeff] : e_vec) {
    if (idx.label_of(key) != chi) continue;
    auto v = coeff;
    for (int i : idx.word(idx.perm_of(key))) v = f.mul(v, rep.g_values[i - 1]);
    total = f.add(total, v);
  }
  return total;
}

template <Field F>
void require_q_zero(const YAlgebra<F>& y) {
  if (!y.q_is_zero()) throw UsageError("this analysis requires q = 0");
}

// Seeds [g_i, g_{i+1}], [g_i, t_i], [g_i, t_{i+1}].
template <Field F>
std::vector<SparseVector<typename F::value_type>> commutator_seeds(const YAlgebra<F>& y) {
  std::vector<SparseVector<typename F::value_type>> seeds;
  auto push = [&](const auto& a, const auto& b) {
    auto c = commutator(y, y.to_E(a).terms, y.to_E(b).terms);
    if (!c.empty()) seeds.push_back(std::move(c));
  };
  for (int i = 1; i < y.n(); ++i) {
    if (i + 1 < y.n()) push(y.gen_g(i), y.gen_g(i + 1));
    push(y.gen_g(i), y.gen_t(i));
    push(y.gen_g(i), y.gen_t(i + 1));
  }
  return seeds;
}

// Every generator commutator not among the seeds is zero.
template <Field F>
bool omitted_commutators_vanish(const YAlgebra<F>& y) {
  const int n = y.n();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2 && !commutator(y, y.gen_g(i).terms, y.gen_g(j).terms).empty()) return false;
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1 && !commutator(y, y.gen_g(i).terms, y.to_E(y.gen_t(j)).terms).empty()) return false;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!commutator(y, y.to_E(y.gen_t(i)).terms, y.to_E(y.gen_t(j)).terms).empty()) return false;
  return true;
}

template <Field F>
Subspace<F> commutator_ideal(const YAlgebra<F>& y, Exec exec = Exec::Serial) {
  require_q_zero(y);
  return two_sided_ideal(y, commutator_seeds(y), exec);
}

// (g_i g_{i+1} - g_{i+1} g_i)^3 = 0 and
// (g_i t_i - t_i g_i)^2 = (g_i t_{i+1} - t_{i+1} g_i)^2 = 0.
template <Field F>
RelationReport verify_nilpotency_identities(const YAlgebra<F>& y) {
  require_q_zero(y);
  RelationReport rep;
  rep.presentation = "commutator nilpotency";
  auto comm = [&](const auto& a, const auto& b) { return y.sub(y.mul(a, b), y.mul(b, a)); };
  for (int i = 1; i < y.n(); ++i) {
    const std::string tag = "i=" + std::to_string(i);
    if (i + 1 < y.n()) {
      auto c = comm(y.gen_g(i), y.gen_g(i + 1));
      rep.record("(g_i g_{i+1} - g_{i+1} g_i)^3 = 0", tag, y.is_zero(y.mul(y.mul(c, c), c)));
    }
    auto a = comm(y.gen_g(i), y.gen_t(i));
    rep.record("(g_i t_i - t_i g_i)^2 = 0", tag, y.is_zero(y.mul(a, a)));
    auto b = comm(y.gen_g(i), y.gen_t(i + 1));
    rep.record("(g_i t_{i+1} - t_{i+1} g_i)^2 = 0", tag, y.is_zero(y.mul(b, b)));
  }
  return rep;
}

struct SemisimplicityCertificate {
  std::size_t quotient_dimension = 0;
  std::uint64_t label_count = 0;
  bool dimension_matches = false;
  bool quotient_commutative = false;
  bool reps_vanish_on_ideal = false;
  bool character_matrix_invertible = false;
  bool quotient_relations_hold = false;
  std::string witness;

  bool ok() const {
    return dimension_matches && quotient_commutative && reps_vanish_on_ideal && character_matrix_invertible &&
           quotient_relations_hold;
  }
};

// Y/J is isomorphic to a product of copies of the field: the label
// characters kill J and, on a lifted basis of Y/J, form an invertible square
// matrix. Together with nilpotency of J this pins J down as the radical.
template <Field F>
SemisimplicityCertificate semisimplicity_certificate(const YAlgebra<F>& y, const Subspace<F>& ideal,
                                                     const std::vector<SimpleLabel>& labels,
                                                     Exec exec = Exec::Serial) {
  require_q_zero(y);
  using Vec = SparseVector<typename F::value_type>;
  const auto& f = y.field();
  SemisimplicityCertificate cert;
  const auto complement = ideal.complement_keys(y.dimension());
  cert.quotient_dimension = complement.size();
  cert.label_count = labels.size();
  cert.dimension_matches = complement.size() == labels.size();
  if (!cert.dimension_matches) cert.witness = "dim(Y/J) != number of labels";

  std::vector<Vec> lifted;
  for (Index k : complement) lifted.push_back(Vec{{k, f.one()}});
  const std::size_t m = lifted.size();
  auto pair_ok = tabulate<char>(exec, m * m, [&](std::size_t k) -> char {
    const std::size_t a = k / m, b = k % m;
    if (b <= a) return 1;
    return ideal.contains(commutator(y, lifted[a], lifted[b])) ? 1 : 0;
  });
  cert.quotient_commutative = std::all_of(pair_ok.begin(), pair_ok.end(), [](char c) { return c == 1; });
  if (!cert.quotient_commutative && cert.witness.empty()) cert.witness = "a commutator of lifted basis elements lies outside J";

  std::vector<OneDimRep<typename F::value_type>> reps;
  for (const auto& l : labels) reps.push_back(rep_of_label(f, l));
  cert.reps_vanish_on_ideal = true;
  for (const auto& rep : reps)
    for (const auto& [p, row] : ideal.rows())
      if (!f.is_zero(evaluate_rep(y, rep, row))) cert.reps_vanish_on_ideal = false;
  if (!cert.reps_vanish_on_ideal && cert.witness.empty()) cert.witness = "a label character is nonzero on J";

  if (cert.dimension_matches) {
    DenseMatrix<typename F::value_type> chars(reps.size(), m, f.zero());
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) chars.at(i, j) = evaluate_rep(y, reps[i], lifted[j]);
    cert.character_matrix_invertible = invertible(f, chars, exec);
    if (!cert.character_matrix_invertible && cert.witness.empty()) cert.witness = "character matrix is singular";
  }

  bool rel = true;
  for (int i = 1; i < y.n(); ++i) {
    auto g = y.gen_g(i);
    // g^2 + g in J; g t_i - t_{i+1} g in J
    rel = rel && ideal.contains(y.add(y.mul(g, g), g).terms);
    rel = rel && ideal.contains(y.sub(y.mul(g, y.gen_t(i)), y.mul(y.gen_t(i + 1), g)).terms);
  }
  cert.quotient_relations_hold = rel;
  if (!rel && cert.witness.empty()) cert.witness = "a quotient relation fails modulo J";
  return cert;
}

struct RadicalReport {
  std::vector<std::size_t> power_dims;
  std::optional<int> nilpotency_index;
  std::size_t quotient_dimension = 0;
};

template <Field F>
RadicalReport radical_report(const YAlgebra<F>& y, const Subspace<F>& ideal, Exec exec = Exec::Serial) {
  RadicalReport rep;
  rep.power_dims = ideal_power_dims(y, commutator_seeds(y), ideal, exec);
  rep.nilpotency_index = nilpotency_index(rep.power_dims);
  rep.quotient_dimension = y.dimension() - ideal.dimension();
  return rep;
}

}  // namespace yoklab
