#pragma once

// Seeded random elements for sampled identity checks. Coefficients are
// (+-1..4) * zeta^k on a handful of random keys.

#include <cstdint>
#include <random>

#include "yoklab/exactla.hpp"

namespace yoklab {

template <Field F>
class RandomElements {
 public:
  RandomElements(F field, std::size_t dimension, std::uint64_t seed)
      : field_(std::move(field)), dimension_(dimension), rng_(seed) {}

  typename F::value_type scalar() {
    std::uniform_int_distribution<int> mag(1, 4), sign(0, 1), power(0, field_.order() - 1);
    auto c = field_.from_int(sign(rng_) ? mag(rng_) : -mag(rng_));
    return field_.mul(c, field_.zeta_pow(power(rng_)));
  }

  // Up to max_terms distinct random keys; never empty.
  SparseVector<typename F::value_type> vector(std::size_t max_terms = 6) {
    std::uniform_int_distribution<std::size_t> count(1, max_terms), key(0, dimension_ - 1);
    SparseVector<typename F::value_type> v;
    const std::size_t k = count(rng_);
    for (std::size_t i = 0; i < k; ++i) v[static_cast<Index>(key(rng_))] = scalar();
    return v;
  }

 private:
  F field_;
  std::size_t dimension_;
  std::mt19937_64 rng_;
};

}  // namespace yoklab
