#pragma once

// Ideal computations shared by every algebra engine: two-sided closure,
// commutator seeds, and the dimension sequence of ideal powers.

#include <concepts>
#include <optional>
#include <vector>

#include "yoklab/exactla.hpp"

namespace yoklab {

// An algebra engine with a fixed native basis of `dimension()` keys.
template <class A>
concept FiniteAlgebra = requires(const A& a, const typename A::Vec& x) {
  typename A::FieldType;
  { a.field() } -> std::convertible_to<const typename A::FieldType&>;
  { a.dimension() } -> std::convertible_to<std::size_t>;
  { a.mul_vec(x, x) } -> std::same_as<typename A::Vec>;
  { a.generator_vecs() } -> std::same_as<std::vector<typename A::Vec>>;
};

template <FiniteAlgebra A>
std::vector<LinearOperator<typename A::Scalar>> multiplication_operators(const A& alg, bool left, bool right) {
  std::vector<LinearOperator<typename A::Scalar>> ops;
  for (auto g : alg.generator_vecs()) {
    if (left) ops.push_back([&alg, g](const typename A::Vec& v) { return alg.mul_vec(g, v); });
    if (right) ops.push_back([&alg, g](const typename A::Vec& v) { return alg.mul_vec(v, g); });
  }
  return ops;
}

template <FiniteAlgebra A>
Subspace<typename A::FieldType> two_sided_ideal(const A& alg, const std::vector<typename A::Vec>& seeds,
                                                Exec exec = Exec::Serial) {
  return closure_under(multiplication_operators(alg, true, true), echelonize(alg.field(), seeds), exec);
}

template <FiniteAlgebra A>
Subspace<typename A::FieldType> right_ideal(const A& alg, const std::vector<typename A::Vec>& seeds,
                                            Exec exec = Exec::Serial) {
  return closure_under(multiplication_operators(alg, false, true), echelonize(alg.field(), seeds), exec);
}

// xy - yx
template <FiniteAlgebra A>
typename A::Vec commutator(const A& alg, const typename A::Vec& x, const typename A::Vec& y) {
  return difference(alg.field(), alg.mul_vec(x, y), alg.mul_vec(y, x));
}

// Nonzero commutators of all generator pairs.
template <FiniteAlgebra A>
std::vector<typename A::Vec> all_generator_commutators(const A& alg) {
  auto gens = alg.generator_vecs();
  std::vector<typename A::Vec> out;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      auto c = commutator(alg, gens[a], gens[b]);
      if (!c.empty()) out.push_back(std::move(c));
    }
  return out;
}

// Dimensions of I, I^2, I^3, ... for the two-sided ideal I generated by
// `seeds`, stopping at the first zero power or when the sequence stalls.
// Uses I^{m+1} = I^m * I = (span of x s, x in I^m, s a seed) * A, which holds
// because I^m is a left ideal and I = A seeds A.
template <FiniteAlgebra A>
std::vector<std::size_t> ideal_power_dims(const A& alg, const std::vector<typename A::Vec>& seeds,
                                          const Subspace<typename A::FieldType>& ideal, Exec exec = Exec::Serial) {
  using Vec = typename A::Vec;
  std::vector<std::size_t> dims{ideal.dimension()};
  Subspace<typename A::FieldType> power = ideal;
  while (power.dimension() > 0) {
    const auto rows = power.basis();
    auto products = tabulate<Vec>(exec, rows.size() * seeds.size(), [&](std::size_t k) {
      return alg.mul_vec(rows[k / seeds.size()], seeds[k % seeds.size()]);
    });
    Subspace<typename A::FieldType> next = right_ideal(alg, products, exec);
    if (next.dimension() >= power.dimension()) {
      dims.push_back(next.dimension());
      break;
    }
    dims.push_back(next.dimension());
    power = std::move(next);
  }
  return dims;
}

// Smallest m with I^m = 0 from a power sequence; none if it stalled.
inline std::optional<int> nilpotency_index(const std::vector<std::size_t>& power_dims) {
  for (std::size_t k = 0; k < power_dims.size(); ++k)
    if (power_dims[k] == 0) return static_cast<int>(k + 1);
  return std::nullopt;
}

}  // namespace yoklab
