#pragma once

// Trace forms, the twisted trace identity and standard-basis cells of
// Y_{r,n}(0).
//
// Cells are the pairs (chi, w) ordered by
// (l(w), w, chi), which is integer order on basis keys, and beta(chi, w) is
// the coefficient of E_chi g_w in (E_chi g_w)^2.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "yoklab/labels.hpp"
#include "yoklab/random.hpp"
#include "yoklab/ycore.hpp"

namespace yoklab {

// Linear forms vanishing off w = w_0. CoefficientSum is tau(t^a g_w) = [w = w_0]
// for every a; it only sees the t-part through the trivial character, so for
// r > 1 the right ideal (t_1 - 1)Y lies in its kernel. IdentityCoefficient
// keeps only the coefficient of g_{w_0} itself (a = 0).
enum class TraceForm { CoefficientSum, IdentityCoefficient };

inline std::string trace_form_name(TraceForm form) {
  return form == TraceForm::CoefficientSum ? "coefficient-sum" : "identity-coefficient";
}

// Evaluates the form on t-basis coordinates.
template <Field F>
typename F::value_type trace_of_T(const F& f, const BasisIndex& idx, const SparseVector<typename F::value_type>& t,
                                  TraceForm form) {
  if (form == TraceForm::IdentityCoefficient) {
    auto it = t.find(idx.key(idx.longest_index(), 0));
    return it == t.end() ? f.zero() : it->second;
  }
  auto s = f.zero();
  for (const auto& [k, c] : t)
    if (idx.perm_of(k) == idx.longest_index()) s = f.add(s, c);
  return s;
}

template <Field F>
typename F::value_type tau_of_E(const F& f, const BasisIndex& idx, const SparseVector<typename F::value_type>& e,
                                TraceForm form = TraceForm::CoefficientSum) {
  SparseVector<typename F::value_type> top;
  for (const auto& [k, c] : e)
    if (idx.perm_of(k) == idx.longest_index()) top.emplace(k, c);
  return trace_of_T(f, idx, idempotents_to_exponents(f, idx, top), form);
}

template <Field F>
typename F::value_type tau(const YAlgebra<F>& y, const typename YAlgebra<F>::Elem& x,
                           TraceForm form = TraceForm::CoefficientSum) {
  return trace_of_T(y.field(), y.index(), y.to_T(x).terms, form);
}

// E-basis images of every t-basis vector t^a g_w, indexed by key.
template <Field F>
std::vector<SparseVector<typename F::value_type>> t_basis_in_E(const YAlgebra<F>& y, Exec exec) {
  return tabulate<SparseVector<typename F::value_type>>(exec, y.dimension(), [&](std::size_t k) {
    return y.to_E({Basis::T, {{static_cast<Index>(k), y.field().one()}}}).terms;
  });
}

// G[x][y] = tau(b_x b_y) over the t-basis.
template <Field F>
DenseMatrix<typename F::value_type> gram_matrix(const YAlgebra<F>& y, TraceForm form = TraceForm::CoefficientSum,
                                                Exec exec = Exec::Serial) {
  const auto& f = y.field();
  const std::size_t d = y.dimension();
  const auto basis = t_basis_in_E(y, exec);
  DenseMatrix<typename F::value_type> g(d, d, f.zero());
  for_each_index(exec, d, [&](std::size_t a) {
    for (std::size_t b = 0; b < d; ++b) g.at(a, b) = tau_of_E(f, y.index(), y.mul_vec(basis[a], basis[b]), form);
  });
  return g;
}

struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;

  void fail(std::string w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
};

template <Field F>
bool frobenius_check(const YAlgebra<F>& y, TraceForm form = TraceForm::CoefficientSum, Exec exec = Exec::Serial) {
  return invertible(y.field(), gram_matrix(y, form, exec), exec);
}

// For every t^a g_w: tau(g_{w_0 w^-1} t^a g_w) != 0 and tau(t^a g_w g_{w^-1 w_0}) != 0.
template <Field F>
CheckResult constructive_witness_check(const YAlgebra<F>& y) {
  const auto& idx = y.index();
  const auto& f = y.field();
  CheckResult res;
  const std::size_t w0 = idx.longest_index();
  for (std::size_t k = 0; k < y.dimension(); ++k) {
    const std::size_t w = idx.perm_of(static_cast<Index>(k));
    const std::size_t winv = idx.inverse(w);
    typename YAlgebra<F>::Elem h{Basis::T, {{static_cast<Index>(k), f.one()}}};
    auto left = y.g_word(idx.word(idx.compose(w0, winv)));
    auto right = y.g_word(idx.word(idx.compose(winv, w0)));
    ++res.checked;
    if (f.is_zero(tau(y, y.mul(left, h))) || f.is_zero(tau(y, y.mul(h, right))))
      res.fail("t-basis key " + std::to_string(k));
  }
  return res;
}

// tau(ab) = tau(phi(b) a), over all t-basis pairs.
template <Field F>
CheckResult nakayama_exhaustive(const YAlgebra<F>& y, TraceForm form = TraceForm::CoefficientSum,
                               Exec exec = Exec::Serial) {
  const auto& f = y.field();
  const std::size_t d = y.dimension();
  const auto basis = t_basis_in_E(y, exec);
  const auto phis = tabulate<SparseVector<typename F::value_type>>(
      exec, d, [&](std::size_t k) { return y.phi({Basis::E, basis[k]}).terms; });
  auto bad = tabulate<long>(exec, d, [&](std::size_t a) -> long {
    for (std::size_t b = 0; b < d; ++b)
      if (!f.equals(tau_of_E(f, y.index(), y.mul_vec(basis[a], basis[b]), form),
                    tau_of_E(f, y.index(), y.mul_vec(phis[b], basis[a]), form)))
        return static_cast<long>(b);
    return -1;
  });
  CheckResult res;
  res.checked = d * d;
  for (std::size_t a = 0; a < d; ++a)
    if (bad[a] >= 0) res.fail("basis pair (" + std::to_string(a) + ", " + std::to_string(bad[a]) + ")");
  return res;
}

template <Field F>
CheckResult nakayama_sampled(const YAlgebra<F>& y, std::size_t samples, std::uint64_t seed,
                             TraceForm form = TraceForm::CoefficientSum) {
  const auto& f = y.field();
  RandomElements<F> rnd(f, y.dimension(), seed);
  CheckResult res;
  for (std::size_t s = 0; s < samples; ++s) {
    typename YAlgebra<F>::Elem a{Basis::T, rnd.vector()}, b{Basis::T, rnd.vector()};
    ++res.checked;
    if (!f.equals(tau(y, y.mul(a, b), form), tau(y, y.mul(y.phi(b), a), form))) res.fail("sample " + std::to_string(s));
  }
  return res;
}

// phi(phi(x)) = x on every generator and on `samples` random elements.
template <Field F>
CheckResult phi_involution_check(const YAlgebra<F>& y, std::size_t samples, std::uint64_t seed) {
  CheckResult res;
  for (const auto& g : y.generator_vecs()) {
    ++res.checked;
    typename YAlgebra<F>::Elem x{Basis::E, g};
    if (!y.equal(y.phi(y.phi(x)), x)) res.fail("generator");
  }
  RandomElements<F> rnd(y.field(), y.dimension(), seed);
  for (std::size_t s = 0; s < samples; ++s) {
    typename YAlgebra<F>::Elem x{Basis::T, rnd.vector()};
    ++res.checked;
    if (!y.equal(y.phi(y.phi(x)), x)) res.fail("sample " + std::to_string(s));
  }
  return res;
}

template <class V>
struct CellReport {
  std::size_t chi = 0;  // color label index
  std::size_t w = 0;    // permutation index
  V beta;
  bool predicted = false;
  bool square_triangular = true;
};

// beta(chi, w), plus whether every term of the square lies in a cell >= (chi, w).
template <Field F>
std::pair<typename F::value_type, bool> beta_of(const F& f, const BasisIndex& idx,
                                                const SparseVector<typename F::value_type>& square, Index cell) {
  bool triangular = true;
  for (const auto& [k, c] : square)
    if (k < cell) triangular = false;
  (void)idx;
  auto it = square.find(cell);
  return {it == square.end() ? f.zero() : it->second, triangular};
}

template <Field F>
typename F::value_type beta(const YAlgebra<F>& y, std::size_t chi, std::size_t w) {
  const Index cell = y.index().key(w, chi);
  typename YAlgebra<F>::Vec b{{cell, y.field().one()}};
  return beta_of(y.field(), y.index(), y.mul_vec(b, b), cell).first;
}

// Cells (chi_c, w_0(flatten J)) for every label.
inline std::vector<Index> predicted_cells(const BasisIndex& idx, const std::vector<SimpleLabel>& labels) {
  std::vector<Index> out;
  for (const auto& l : labels)
    out.push_back(idx.key(idx.perm_index(young_longest(l.flattened())), idx.color_index(l.c)));
  std::sort(out.begin(), out.end());
  return out;
}

// Reports for every cell, in cell order. `predicted` marks the cells named
// by the simple labels.
template <class Algebra>
std::vector<CellReport<typename Algebra::Scalar>> cell_reports(const Algebra& alg, const std::vector<Index>& predicted,
                                                               Exec exec = Exec::Serial) {
  const auto& idx = alg.index();
  const auto& f = alg.field();
  return tabulate<CellReport<typename Algebra::Scalar>>(exec, alg.dimension(), [&](std::size_t k) {
    const Index cell = static_cast<Index>(k);
    auto b = alg.cell_vector(cell);
    auto [value, tri] = beta_of(f, idx, alg.cell_coordinates(alg.mul_vec(b, b)), cell);
    CellReport<typename Algebra::Scalar> rep{idx.label_of(cell), idx.perm_of(cell), value,
                                              std::binary_search(predicted.begin(), predicted.end(), cell), tri};
    return rep;
  });
}

struct CellSummary {
  std::size_t nonzero = 0;
  bool squares_triangular = true;
  bool classification_match = true;
  std::vector<Index> only_computed;   // nonzero but not predicted
  std::vector<Index> only_predicted;  // predicted but zero
};

template <Field F, class V>
CellSummary summarize_cells(const F& f, const std::vector<CellReport<V>>& reports, const BasisIndex& idx) {
  CellSummary s;
  for (const auto& rep : reports) {
    const bool nz = !f.is_zero(rep.beta);
    s.nonzero += nz;
    s.squares_triangular = s.squares_triangular && rep.square_triangular;
    if (nz && !rep.predicted) s.only_computed.push_back(idx.key(rep.w, rep.chi));
    if (!nz && rep.predicted) s.only_predicted.push_back(idx.key(rep.w, rep.chi));
  }
  s.classification_match = s.only_computed.empty() && s.only_predicted.empty();
  return s;
}

// Adapter presenting Y(0) with its E-basis as the cell basis.
template <Field F>
struct YCells {
  using Scalar = typename F::value_type;
  const YAlgebra<F>& y;
  const F& field() const { return y.field(); }
  const BasisIndex& index() const { return y.index(); }
  std::size_t dimension() const { return y.dimension(); }
  SparseVector<Scalar> cell_vector(Index k) const { return {{k, y.field().one()}}; }
  SparseVector<Scalar> mul_vec(const SparseVector<Scalar>& a, const SparseVector<Scalar>& b) const {
    return y.mul_vec(a, b);
  }
  SparseVector<Scalar> cell_coordinates(const SparseVector<Scalar>& v) const { return v; }
};

// Checks the four-case rule for E_chi' g_i * E_chi g_w, and that right
// multiplication by g_i or E_chi'' keeps every term in cells >= (chi, w)
// with the same chi.
template <Field F>
CheckResult triangularity_check(const YAlgebra<F>& y, Exec exec = Exec::Serial) {
  if (!y.q_is_zero()) throw UsageError("triangularity_check requires q = 0");
  const auto& idx = y.index();
  const auto& f = y.field();
  const std::size_t labels = idx.num_labels();
  const auto minus_one = f.from_int(-1);
  auto witness = tabulate<std::string>(exec, y.dimension(), [&](std::size_t k) -> std::string {
    const Index cell = static_cast<Index>(k);
    const std::size_t chi = idx.label_of(cell), w = idx.perm_of(cell);
    const typename YAlgebra<F>::Vec b{{cell, f.one()}};
    for (int i = 1; i < y.n(); ++i) {
      const std::size_t s = idx.perm_index(Permutation::simple(y.n(), i));
      const std::size_t si_chi = idx.act(s, chi);
      const std::size_t sw = idx.left_simple(w, i);
      for (std::size_t chi2 = 0; chi2 < labels; ++chi2) {
        typename YAlgebra<F>::Vec x{{idx.key(s, chi2), f.one()}}, expect;
        if (si_chi == chi2) {
          if (idx.length(sw) > idx.length(w)) expect.emplace(idx.key(sw, chi2), f.one());
          else if (chi2 == chi) expect.emplace(cell, minus_one);
        }
        if (!vectors_equal(f, y.mul_vec(x, b), expect))
          return "left g_" + std::to_string(i) + " at chi'=" + std::to_string(chi2) + ", cell " + std::to_string(k);
      }
      for (const auto& [key, c] : y.mul_vec(b, y.gen_g(i).terms))
        if (key < cell || idx.label_of(key) != chi) return "right g_" + std::to_string(i) + ", cell " + std::to_string(k);
    }
    for (std::size_t chi2 = 0; chi2 < labels; ++chi2) {
      typename YAlgebra<F>::Vec e{{idx.key(0, chi2), f.one()}};
      for (const auto& prod : {y.mul_vec(e, b), y.mul_vec(b, e)})
        for (const auto& [key, c] : prod)
          if (key != cell) return "idempotent " + std::to_string(chi2) + ", cell " + std::to_string(k);
    }
    return {};
  });
  CheckResult res;
  res.checked = y.dimension();
  for (auto& w : witness)
    if (!w.empty()) res.fail(w);
  return res;
}

// beta = (-1)^{l(w)} on every nonzero cell.
template <Field F, class V>
bool beta_sign_observation(const F& f, const BasisIndex& idx, const std::vector<CellReport<V>>& reports) {
  for (const auto& rep : reports) {
    if (f.is_zero(rep.beta)) continue;
    if (!f.equals(rep.beta, f.from_int(idx.length(rep.w) % 2 ? -1 : 1))) return false;
  }
  return true;
}

}  // namespace yoklab
