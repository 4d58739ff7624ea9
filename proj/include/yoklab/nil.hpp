#pragma once

// The nil Yokonuma-Hecke algebra: generators t_1..t_n, T_1..T_{n-1} with
// T_i^2 = 0, T_i t_j = t_{s_i(j)} T_i and the braid relations. Basis
// {t^a T_w}; multiplication
//
//   t^a T_u * t^b T_v = t^{a + u(b)} T_{uv}   if l(uv) = l(u) + l(v)
//                     = 0                     otherwise.

#include "yoklab/basis_index.hpp"
#include "yoklab/element.hpp"
#include "yoklab/fourier.hpp"
#include "yoklab/report.hpp"

namespace yoklab {

template <Field F>
class NilAlgebra {
 public:
  using FieldType = F;
  using Scalar = typename F::value_type;
  using Vec = SparseVector<Scalar>;
  using Elem = Element<Scalar>;

  NilAlgebra(F field, int n) : field_(std::move(field)), index_(field_.order(), n) {}

  const F& field() const { return field_; }
  const BasisIndex& index() const { return index_; }
  int r() const { return index_.r(); }
  int n() const { return index_.n(); }
  std::size_t dimension() const { return index_.dimension(); }

  Elem basis(std::size_t exponent_label, std::size_t w) const {
    return {Basis::Nil, {{index_.key(w, exponent_label), field_.one()}}};
  }
  Elem one() const { return basis(0, 0); }

  Elem gen_t(int j) const {
    if (j < 1 || j > n()) throw UsageError("index " + std::to_string(j) + " outside 1..n");
    std::vector<int> a(n(), 0);
    a[j - 1] = 1 % r();
    return basis(index_.exponent_index(a), 0);
  }

  Elem gen_T(int i) const {
    if (i < 1 || i >= n()) throw UsageError("generator T_" + std::to_string(i) + " outside 1..n-1");
    return basis(0, index_.perm_index(Permutation::simple(n(), i)));
  }

  Elem T_w(const Permutation& w) const { return basis(0, index_.perm_index(w)); }

  Elem add(const Elem& x, const Elem& y) const {
    Elem out = x;
    add_scaled(field_, out.terms, field_.one(), y.terms);
    return out;
  }
  Elem sub(const Elem& x, const Elem& y) const { return add(x, scale(field_.from_int(-1), y)); }
  Elem scale(const Scalar& a, const Elem& x) const { return {Basis::Nil, scaled(field_, a, x.terms)}; }
  bool equal(const Elem& x, const Elem& y) const { return vectors_equal(field_, x.terms, y.terms); }

  Elem mul(const Elem& x, const Elem& y) const {
    if (x.basis != Basis::Nil || y.basis != Basis::Nil)
      throw UsageError("nil algebra element must use basis NIL");
    return {Basis::Nil, mul_vec(x.terms, y.terms)};
  }

  Vec mul_vec(const Vec& x, const Vec& y) const {
    Vec out;
    for (const auto& [kx, cx] : x) {
      const std::size_t u = index_.perm_of(kx);
      const std::size_t a = index_.label_of(kx);
      for (const auto& [ky, cy] : y) {
        const std::size_t v = index_.perm_of(ky);
        const std::size_t uv = index_.compose(u, v);
        if (index_.length(uv) != index_.length(u) + index_.length(v)) continue;
        const std::size_t b = index_.act(u, index_.label_of(ky));
        add_term(field_, out, index_.key(uv, index_.add_labels(a, b)), field_.mul(cx, cy));
      }
    }
    return out;
  }

  std::vector<Vec> generator_vecs() const {
    std::vector<Vec> out;
    for (int j = 1; j <= n(); ++j) out.push_back(gen_t(j).terms);
    for (int i = 1; i < n(); ++i) out.push_back(gen_T(i).terms);
    return out;
  }

  // Coordinates in {E_chi T_w} and back.
  Vec to_E(const Vec& x) const { return exponents_to_idempotents(field_, index_, x); }
  Vec from_E(const Vec& x) const { return idempotents_to_exponents(field_, index_, x); }
  Elem E_basis(std::size_t chi, std::size_t w) const {
    return {Basis::Nil, from_E(Vec{{index_.key(w, chi), field_.one()}})};
  }

  // psi: T_i -> T_{n-i}, t_j -> t_{n+1-j}, extended multiplicatively along a
  // fixed reduced word.
  Elem psi(const Elem& x) const {
    Vec out;
    for (const auto& [key, c] : x.terms) {
      std::vector<int> a = index_.exponents(index_.label_of(key));
      std::reverse(a.begin(), a.end());
      Elem image = basis(index_.exponent_index(a), 0);
      for (int i : index_.word(index_.perm_of(key))) image = mul(image, gen_T(n() - i));
      add_scaled(field_, out, c, image.terms);
    }
    return {Basis::Nil, std::move(out)};
  }

  // lambda(t^a T_w) = delta(w, w_0), for every a.
  Scalar lambda(const Elem& x) const {
    Scalar s = field_.zero();
    for (const auto& [key, c] : x.terms)
      if (index_.perm_of(key) == index_.longest_index()) s = field_.add(s, c);
    return s;
  }

  // Coefficient of T_{w_0} alone (a = 0).
  Scalar lambda_identity(const Elem& x) const {
    auto it = x.terms.find(index_.key(index_.longest_index(), 0));
    return it == x.terms.end() ? field_.zero() : it->second;
  }

  RelationReport verify_relations() const {
    RelationReport rep;
    rep.presentation = "nil";
    const int nn = n();
    for (int j = 1; j <= nn; ++j) {
      Elem p = one();
      for (int k = 0; k < r(); ++k) p = mul(p, gen_t(j));
      rep.record("t_j^r = 1", std::to_string(j), equal(p, one()));
    }
    for (int i = 1; i <= nn; ++i)
      for (int j = i + 1; j <= nn; ++j)
        rep.record("t_i t_j = t_j t_i", std::to_string(i) + "," + std::to_string(j),
                   equal(mul(gen_t(i), gen_t(j)), mul(gen_t(j), gen_t(i))));
    for (int i = 1; i < nn; ++i) {
      Permutation s = Permutation::simple(nn, i);
      for (int j = 1; j <= nn; ++j)
        rep.record("T_i t_j = t_{s_i(j)} T_i", std::to_string(i) + "," + std::to_string(j),
                   equal(mul(gen_T(i), gen_t(j)), mul(gen_t(s(j)), gen_T(i))));
    }
    for (int i = 1; i < nn; ++i)
      for (int j = i + 2; j < nn; ++j)
        rep.record("T_i T_j = T_j T_i (|i-j| >= 2)", std::to_string(i) + "," + std::to_string(j),
                   equal(mul(gen_T(i), gen_T(j)), mul(gen_T(j), gen_T(i))));
    for (int i = 1; i + 1 < nn; ++i) {
      Elem a = gen_T(i), b = gen_T(i + 1);
      rep.record("T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", std::to_string(i), equal(mul(mul(a, b), a), mul(mul(b, a), b)));
    }
    for (int i = 1; i < nn; ++i)
      rep.record("T_i^2 = 0", std::to_string(i), mul(gen_T(i), gen_T(i)).terms.empty());
    return rep;
  }

 private:
  F field_;
  BasisIndex index_;
};

}  // namespace yoklab
