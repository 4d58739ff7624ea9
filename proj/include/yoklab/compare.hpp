#pragma once

// Invariants of Y(0) and of the fourth presentation at q = 0, computed
// independently on each side.

#include <vector>

#include "yoklab/aks.hpp"
#include "yoklab/ideals.hpp"
#include "yoklab/modrep.hpp"

namespace yoklab {

struct AlgebraInvariants {
  std::size_t dimension = 0;
  std::size_t one_dim_count = 0;
  std::vector<std::size_t> commutator_power_dims;

  bool operator==(const AlgebraInvariants&) const = default;
};

// A one-dimensional representation of the fourth presentation: L_c -> 1 for
// the single color vector `active` (the L_c are orthogonal idempotents
// summing to 1) and h_i -> h_values[i-1].
template <class V>
struct AksOneDimRep {
  std::size_t active = 0;
  std::vector<V> h_values;
};

template <Field F>
bool check_aks_one_dim(const AksAlgebra<F>& a, const AksOneDimRep<typename F::value_type>& rep) {
  const auto& f = a.field();
  const auto& idx = a.index();
  const int n = a.n();
  const auto q = a.q();
  const auto qm1 = f.sub(q, f.one());
  auto L = [&](std::size_t c) { return c == rep.active ? f.one() : f.zero(); };
  const auto& h = rep.h_values;
  for (int i = 1; i < n; ++i) {
    if (!f.equals(f.mul(h[i - 1], h[i - 1]), f.add(q, f.mul(qm1, h[i - 1])))) return false;
    const std::size_t s = idx.perm_index(Permutation::simple(n, i));
    for (std::size_t c = 0; c < idx.num_labels(); ++c) {
      const std::size_t sc = idx.act(s, c);
      auto rhs = f.mul(L(sc), h[i - 1]);
      const int ci = idx.digit(c, i - 1), cn = idx.digit(c, i);
      if (ci < cn) rhs = f.add(rhs, f.mul(qm1, L(c)));
      if (ci > cn) rhs = f.sub(rhs, f.mul(qm1, L(sc)));
      if (!f.equals(f.mul(h[i - 1], L(c)), rhs)) return false;
    }
  }
  for (int i = 1; i + 1 < n; ++i)
    if (!f.equals(f.mul(f.mul(h[i - 1], h[i]), h[i - 1]), f.mul(f.mul(h[i], h[i - 1]), h[i]))) return false;
  return true;
}

// Brute force over active color vectors and h_i in {0, -1} (the roots of
// h^2 = -h at q = 0).
template <Field F>
std::vector<AksOneDimRep<typename F::value_type>> enumerate_aks_one_dim(const AksAlgebra<F>& a) {
  const auto& f = a.field();
  std::vector<AksOneDimRep<typename F::value_type>> out;
  for (std::size_t c = 0; c < a.index().num_labels(); ++c)
    for (unsigned long mask = 0; mask < (1ul << (a.n() - 1)); ++mask) {
      AksOneDimRep<typename F::value_type> rep{c, {}};
      for (int k = 0; k < a.n() - 1; ++k) rep.h_values.push_back(mask & (1ul << k) ? f.from_int(-1) : f.zero());
      if (check_aks_one_dim(a, rep)) out.push_back(std::move(rep));
    }
  return out;
}

template <Field F>
AlgebraInvariants y_invariants(const YAlgebra<F>& y, Exec exec = Exec::Serial) {
  AlgebraInvariants inv;
  inv.dimension = y.dimension();
  inv.one_dim_count = enumerate_one_dim_bruteforce(y.field(), y.n()).size();
  const auto seeds = all_generator_commutators(y);
  inv.commutator_power_dims = ideal_power_dims(y, seeds, two_sided_ideal(y, seeds, exec), exec);
  return inv;
}

template <Field F>
AlgebraInvariants aks_invariants(const AksAlgebra<F>& a, Exec exec = Exec::Serial) {
  AlgebraInvariants inv;
  inv.dimension = a.dimension();
  inv.one_dim_count = enumerate_aks_one_dim(a).size();
  const auto seeds = all_generator_commutators(a);
  inv.commutator_power_dims = ideal_power_dims(a, seeds, two_sided_ideal(a, seeds, exec), exec);
  return inv;
}

}  // namespace yoklab
