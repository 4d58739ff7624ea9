#pragma once

// Change of coordinates between t-monomials t^a and the primitive
// idempotents E_chi of the group algebra of (Z/r)^n, applied independently
// on every w-component. Both directions are n successive size-r discrete
// Fourier transforms, one per tensor slot.
//
//   t^a   = Sum_chi zeta^(a.c) E_chi
//   E_chi = r^-n Sum_a zeta^(-a.c) t^a

#include "yoklab/basis_index.hpp"
#include "yoklab/exactla.hpp"

namespace yoklab {

namespace detail {

// data indexed by label; transform along slot `pos`. Input digit is `from`,
// output digit is `to`; the kernel is zeta^(sign * a * c) where a is the
// exponent digit and c = color digit + 1.
template <Field F>
void slot_transform(const F& f, const BasisIndex& idx, std::vector<typename F::value_type>& data, int pos,
                    bool exponent_to_color) {
  const int r = idx.r();
  const int n = idx.n();
  std::size_t stride = 1;
  for (int i = pos + 1; i < n; ++i) stride *= static_cast<std::size_t>(r);
  const auto inv_r = f.inv(f.from_int(r));
  std::vector<typename F::value_type> line(r, f.zero());
  for (std::size_t base = 0; base < data.size(); ++base) {
    if (idx.digit(base, pos) != 0) continue;
    for (int out = 0; out < r; ++out) {
      auto acc = f.zero();
      for (int in = 0; in < r; ++in) {
        const auto& x = data[base + static_cast<std::size_t>(in) * stride];
        if (f.is_zero(x)) continue;
        long e = exponent_to_color ? static_cast<long>(in) * (out + 1) : -static_cast<long>(out) * (in + 1);
        f.add_mul(acc, x, f.zeta_pow(e));
      }
      if (!exponent_to_color) acc = f.mul(acc, inv_r);
      line[out] = std::move(acc);
    }
    for (int out = 0; out < r; ++out) data[base + static_cast<std::size_t>(out) * stride] = line[out];
  }
}

template <Field F>
SparseVector<typename F::value_type> transform_labels(const F& f, const BasisIndex& idx,
                                                      const SparseVector<typename F::value_type>& v,
                                                      bool exponent_to_color) {
  SparseVector<typename F::value_type> out;
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t w = idx.perm_of(it->first);
    std::vector<typename F::value_type> data(idx.num_labels(), f.zero());
    for (; it != v.end() && idx.perm_of(it->first) == w; ++it) data[idx.label_of(it->first)] = it->second;
    for (int pos = 0; pos < idx.n(); ++pos) slot_transform(f, idx, data, pos, exponent_to_color);
    for (std::size_t l = 0; l < data.size(); ++l)
      if (!f.is_zero(data[l])) out.emplace(idx.key(w, l), std::move(data[l]));
  }
  return out;
}

}  // namespace detail

// t^a w-components -> E_chi w-components.
template <Field F>
SparseVector<typename F::value_type> exponents_to_idempotents(const F& f, const BasisIndex& idx,
                                                              const SparseVector<typename F::value_type>& v) {
  return detail::transform_labels(f, idx, v, true);
}

// E_chi w-components -> t^a w-components.
template <Field F>
SparseVector<typename F::value_type> idempotents_to_exponents(const F& f, const BasisIndex& idx,
                                                              const SparseVector<typename F::value_type>& v) {
  return detail::transform_labels(f, idx, v, false);
}

}  // namespace yoklab
