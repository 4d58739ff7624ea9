#pragma once

// Radical, simple modules, Frobenius form and cells of the nil algebra.

#include <optional>
#include <string>
#include <vector>

#include "yoklab/ideals.hpp"
#include "yoklab/nil.hpp"
#include "yoklab/random.hpp"
#include "yoklab/structure.hpp"

namespace yoklab {

// T_w for every w != 1.
template <Field F>
std::vector<SparseVector<typename F::value_type>> nil_radical_seeds(const NilAlgebra<F>& a) {
  std::vector<SparseVector<typename F::value_type>> out;
  for (std::size_t w = 1; w < a.index().num_perms(); ++w) out.push_back(a.basis(0, w).terms);
  return out;
}

template <Field F>
Subspace<F> nil_radical(const NilAlgebra<F>& a, Exec exec = Exec::Serial) {
  return two_sided_ideal(a, nil_radical_seeds(a), exec);
}

// The ideal is exactly the span of the keys t^a T_w with w != 1.
template <Field F>
bool is_positive_length_span(const NilAlgebra<F>& a, const Subspace<F>& s) {
  const auto& idx = a.index();
  if (s.dimension() != idx.num_labels() * (idx.num_perms() - 1)) return false;
  for (const auto& [p, row] : s.rows())
    for (const auto& [k, c] : row)
      if (idx.perm_of(k) == idx.identity_index()) return false;
  return true;
}

struct NilRadicalReport {
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;
  bool span_matches = false;
  std::vector<std::size_t> power_dims;
  std::optional<int> nilpotency_index;
  int nilpotency_bound = 0;
  std::size_t quotient_dimension = 0;

  bool ok() const {
    return span_matches && nilpotency_index && *nilpotency_index <= nilpotency_bound;
  }
};

template <Field F>
NilRadicalReport nil_radical_report(const NilAlgebra<F>& a, Exec exec = Exec::Serial) {
  const auto& idx = a.index();
  NilRadicalReport rep;
  auto rad = nil_radical(a, exec);
  rep.dimension = rad.dimension();
  rep.expected_dimension = idx.num_labels() * (idx.num_perms() - 1);
  rep.span_matches = is_positive_length_span(a, rad);
  rep.power_dims = ideal_power_dims(a, nil_radical_seeds(a), rad, exec);
  rep.nilpotency_index = nilpotency_index(rep.power_dims);
  rep.nilpotency_bound = a.n() * (a.n() - 1) + 1;
  rep.quotient_dimension = a.dimension() - rad.dimension();
  return rep;
}

template <class V>
struct NilSimple {
  std::vector<V> t_values;  // t_j -> zeta^{c_j}
  std::vector<V> T_values;  // T_i -> 0
};

template <Field F>
std::vector<NilSimple<typename F::value_type>> nil_simples(const NilAlgebra<F>& a) {
  const auto& f = a.field();
  std::vector<NilSimple<typename F::value_type>> out;
  for (const auto& c : all_color_vectors(a.r(), a.n())) {
    NilSimple<typename F::value_type> s;
    for (int ci : c) s.t_values.push_back(f.zeta_pow(ci));
    s.T_values.assign(a.n() - 1, f.zero());
    out.push_back(std::move(s));
  }
  return out;
}

// Every defining relation under scalar substitution.
template <Field F>
bool check_nil_one_dim(const F& f, const NilSimple<typename F::value_type>& s) {
  const int n = static_cast<int>(s.t_values.size());
  const auto& t = s.t_values;
  const auto& T = s.T_values;
  for (const auto& tj : t)
    if (!f.equals(power(f, tj, f.order()), f.one())) return false;
  for (int i = 1; i < n; ++i) {
    Permutation sp = Permutation::simple(n, i);
    for (int j = 1; j <= n; ++j)
      if (!f.equals(f.mul(T[i - 1], t[j - 1]), f.mul(t[sp(j) - 1], T[i - 1]))) return false;
    if (!f.is_zero(f.mul(T[i - 1], T[i - 1]))) return false;
  }
  for (int i = 1; i + 1 < n; ++i)
    if (!f.equals(f.mul(f.mul(T[i - 1], T[i]), T[i - 1]), f.mul(f.mul(T[i], T[i - 1]), T[i]))) return false;
  return true;
}

// eta(t^a T_w) = [w = 1] Prod_j t_values[j]^{a_j}
template <Field F>
typename F::value_type evaluate_nil_simple(const NilAlgebra<F>& a, const NilSimple<typename F::value_type>& s,
                                           const SparseVector<typename F::value_type>& v) {
  const auto& f = a.field();
  const auto& idx = a.index();
  auto total = f.zero();
  for (const auto& [k, c] : v) {
    const std::size_t w = idx.perm_of(k);
    auto x = c;
    for (int i : idx.word(w)) x = f.mul(x, s.T_values[i - 1]);
    const auto e = idx.exponents(idx.label_of(k));
    for (int j = 0; j < a.n(); ++j) x = f.mul(x, power(f, s.t_values[j], e[j]));
    total = f.add(total, x);
  }
  return total;
}

struct NilSimplesReport {
  std::size_t count = 0;
  std::size_t expected = 0;
  bool relations_hold = false;
  bool pairwise_distinct = false;
  bool vanish_on_radical = false;
  bool character_matrix_invertible = false;

  bool ok() const {
    return count == expected && relations_hold && pairwise_distinct && vanish_on_radical && character_matrix_invertible;
  }
};

template <Field F>
NilSimplesReport nil_simples_report(const NilAlgebra<F>& a, const Subspace<F>& radical, Exec exec = Exec::Serial) {
  const auto& f = a.field();
  const auto simples = nil_simples(a);
  NilSimplesReport rep;
  rep.count = simples.size();
  rep.expected = a.index().num_labels();
  rep.relations_hold = std::all_of(simples.begin(), simples.end(), [&](const auto& s) { return check_nil_one_dim(f, s); });
  rep.pairwise_distinct = true;
  for (std::size_t x = 0; x < simples.size(); ++x)
    for (std::size_t y = x + 1; y < simples.size(); ++y) {
      bool same = true;
      for (int j = 0; j < a.n(); ++j) same = same && f.equals(simples[x].t_values[j], simples[y].t_values[j]);
      if (same) rep.pairwise_distinct = false;
    }
  rep.vanish_on_radical = true;
  for (const auto& s : simples)
    for (const auto& [p, row] : radical.rows())
      if (!f.is_zero(evaluate_nil_simple(a, s, row))) rep.vanish_on_radical = false;
  const auto complement = radical.complement_keys(a.dimension());
  if (complement.size() == simples.size()) {
    DenseMatrix<typename F::value_type> m(simples.size(), complement.size(), f.zero());
    for (std::size_t i = 0; i < simples.size(); ++i)
      for (std::size_t j = 0; j < complement.size(); ++j)
        m.at(i, j) = evaluate_nil_simple(a, simples[i], {{complement[j], f.one()}});
    rep.character_matrix_invertible = invertible(f, m, exec);
  }
  return rep;
}

// K E_chi T_{w_0}: the left ideal it generates is 1-dimensional, t_j acts by
// zeta^{c_j}, every T_i annihilates it, and it is a two-sided ideal.
template <Field F>
CheckResult minimal_ideal_check(const NilAlgebra<F>& a, std::size_t chi) {
  const auto& f = a.field();
  const auto& idx = a.index();
  CheckResult res;
  const auto x = a.E_basis(chi, idx.longest_index());
  const std::string tag = "chi " + std::to_string(chi);
  ++res.checked;
  auto left = closure_under(multiplication_operators(a, true, false), echelonize(f, std::vector{x.terms}));
  if (left.dimension() != 1) res.fail(tag + ": left ideal has dimension " + std::to_string(left.dimension()));
  const auto c = idx.colors(chi);
  for (int j = 1; j <= a.n(); ++j)
    if (!a.equal(a.mul(a.gen_t(j), x), a.scale(f.zeta_pow(c[j - 1]), x))) res.fail(tag + ": t_" + std::to_string(j));
  for (int i = 1; i < a.n(); ++i)
    if (!a.mul(a.gen_T(i), x).terms.empty()) res.fail(tag + ": T_" + std::to_string(i));
  if (two_sided_ideal(a, {x.terms}).dimension() != 1) res.fail(tag + ": not a two-sided ideal");
  return res;
}

template <Field F>
typename F::value_type nil_trace(const NilAlgebra<F>& a, const typename NilAlgebra<F>::Elem& x, TraceForm form) {
  return form == TraceForm::CoefficientSum ? a.lambda(x) : a.lambda_identity(x);
}

template <Field F>
DenseMatrix<typename F::value_type> nil_gram_matrix(const NilAlgebra<F>& a, TraceForm form = TraceForm::CoefficientSum,
                                                    Exec exec = Exec::Serial) {
  const auto& f = a.field();
  const std::size_t d = a.dimension();
  DenseMatrix<typename F::value_type> g(d, d, f.zero());
  for_each_index(exec, d, [&](std::size_t x) {
    for (std::size_t y = 0; y < d; ++y) {
      typename NilAlgebra<F>::Vec bx{{static_cast<Index>(x), f.one()}}, by{{static_cast<Index>(y), f.one()}};
      g.at(x, y) = nil_trace(a, {Basis::Nil, a.mul_vec(bx, by)}, form);
    }
  });
  return g;
}

template <Field F>
bool nil_frobenius_check(const NilAlgebra<F>& a, TraceForm form = TraceForm::CoefficientSum, Exec exec = Exec::Serial) {
  return invertible(a.field(), nil_gram_matrix(a, form, exec), exec);
}

// lambda(xy) = lambda(psi(y) x) over all basis pairs.
template <Field F>
CheckResult nil_psi_exhaustive(const NilAlgebra<F>& a, TraceForm form = TraceForm::CoefficientSum) {
  const auto& f = a.field();
  CheckResult res;
  for (std::size_t x = 0; x < a.dimension(); ++x)
    for (std::size_t y = 0; y < a.dimension(); ++y) {
      typename NilAlgebra<F>::Elem bx{Basis::Nil, {{static_cast<Index>(x), f.one()}}};
      typename NilAlgebra<F>::Elem by{Basis::Nil, {{static_cast<Index>(y), f.one()}}};
      ++res.checked;
      if (!f.equals(nil_trace(a, a.mul(bx, by), form), nil_trace(a, a.mul(a.psi(by), bx), form)))
        res.fail("basis pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  return res;
}

template <Field F>
CheckResult nil_psi_sampled(const NilAlgebra<F>& a, std::size_t samples, std::uint64_t seed,
                            TraceForm form = TraceForm::CoefficientSum) {
  const auto& f = a.field();
  RandomElements<F> rnd(f, a.dimension(), seed);
  CheckResult res;
  for (std::size_t s = 0; s < samples; ++s) {
    typename NilAlgebra<F>::Elem x{Basis::Nil, rnd.vector()}, y{Basis::Nil, rnd.vector()};
    ++res.checked;
    if (!f.equals(nil_trace(a, a.mul(x, y), form), nil_trace(a, a.mul(a.psi(y), x), form))) res.fail("sample " + std::to_string(s));
  }
  return res;
}

// psi(psi(x)) = x on generators and random elements; psi preserves the
// defining relations (it maps generators to generators and is checked to be
// multiplicative on generator pairs).
template <Field F>
CheckResult nil_psi_involution_check(const NilAlgebra<F>& a, std::size_t samples, std::uint64_t seed) {
  CheckResult res;
  const auto gens = a.generator_vecs();
  for (const auto& g : gens) {
    typename NilAlgebra<F>::Elem x{Basis::Nil, g};
    ++res.checked;
    if (!a.equal(a.psi(a.psi(x)), x)) res.fail("generator");
    for (const auto& h : gens) {
      typename NilAlgebra<F>::Elem y{Basis::Nil, h};
      if (!a.equal(a.psi(a.mul(x, y)), a.mul(a.psi(x), a.psi(y)))) res.fail("psi not multiplicative");
    }
  }
  RandomElements<F> rnd(a.field(), a.dimension(), seed);
  for (std::size_t s = 0; s < samples; ++s) {
    typename NilAlgebra<F>::Elem x{Basis::Nil, rnd.vector()};
    ++res.checked;
    if (!a.equal(a.psi(a.psi(x)), x)) res.fail("sample " + std::to_string(s));
  }
  return res;
}

// Cell basis E_chi T_w of the nil algebra.
template <Field F>
struct NilCells {
  using Scalar = typename F::value_type;
  const NilAlgebra<F>& a;
  const F& field() const { return a.field(); }
  const BasisIndex& index() const { return a.index(); }
  std::size_t dimension() const { return a.dimension(); }
  SparseVector<Scalar> cell_vector(Index k) const { return a.from_E({{k, a.field().one()}}); }
  SparseVector<Scalar> mul_vec(const SparseVector<Scalar>& x, const SparseVector<Scalar>& y) const {
    return a.mul_vec(x, y);
  }
  SparseVector<Scalar> cell_coordinates(const SparseVector<Scalar>& v) const { return a.to_E(v); }
};

// Predicted nonzero cells: (chi, 1) for every chi.
template <Field F>
std::vector<Index> nil_predicted_cells(const NilAlgebra<F>& a) {
  std::vector<Index> out;
  for (std::size_t chi = 0; chi < a.index().num_labels(); ++chi) out.push_back(a.index().key(0, chi));
  return out;
}

// E_chi' T_i * E_chi T_w = [s_i(chi) = chi'] [l(s_i w) > l(w)] E_chi' T_{s_i w}.
template <Field F>
CheckResult nil_triangularity_check(const NilAlgebra<F>& a, Exec exec = Exec::Serial) {
  const auto& idx = a.index();
  const auto& f = a.field();
  NilCells<F> cells{a};
  auto witness = tabulate<std::string>(exec, a.dimension(), [&](std::size_t k) -> std::string {
    const Index cell = static_cast<Index>(k);
    const std::size_t chi = idx.label_of(cell), w = idx.perm_of(cell);
    const auto b = cells.cell_vector(cell);
    for (int i = 1; i < a.n(); ++i) {
      const std::size_t s = idx.perm_index(Permutation::simple(a.n(), i));
      const std::size_t sw = idx.left_simple(w, i);
      for (std::size_t chi2 = 0; chi2 < idx.num_labels(); ++chi2) {
        SparseVector<typename F::value_type> expect;
        if (idx.act(s, chi) == chi2 && idx.length(sw) > idx.length(w)) expect.emplace(idx.key(sw, chi2), f.one());
        auto got = a.to_E(a.mul_vec(cells.cell_vector(idx.key(s, chi2)), b));
        if (!vectors_equal(f, got, expect))
          return "left T_" + std::to_string(i) + " at chi'=" + std::to_string(chi2) + ", cell " + std::to_string(k);
      }
    }
    return {};
  });
  CheckResult res;
  res.checked = a.dimension();
  for (auto& w : witness)
    if (!w.empty()) res.fail(w);
  return res;
}

}  // namespace yoklab
