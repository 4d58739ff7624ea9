#pragma once

// The fourth presentation: generators h_1..h_{n-1} and orthogonal idempotents
// L_c (c in C^n), basis {L_c h_w}. Built from its relations alone:
//
//   h_i h_w   = h_{s_i w}                          l(s_i w) > l(w)
//             = q h_{s_i w} + (q-1) h_w             otherwise
//   h_i L_c   = L_{s_i(c)} h_i + (q-1) L_c          c_i < c_{i+1}
//             = L_{s_i(c)} h_i                      c_i = c_{i+1}
//             = L_{s_i(c)} h_i - (q-1) L_{s_i(c)}   c_i > c_{i+1}
//
// Products are normalized by letting h_u act on the right factor from the
// left, one generator at a time (last letter of the reduced word first),
// then projecting with L_c.

#include <map>

#include "yoklab/basis_index.hpp"
#include "yoklab/element.hpp"
#include "yoklab/report.hpp"

namespace yoklab {

template <Field F>
class AksAlgebra {
 public:
  using FieldType = F;
  using Scalar = typename F::value_type;
  using Vec = SparseVector<Scalar>;
  using Elem = Element<Scalar>;

  AksAlgebra(F field, int n, Scalar q)
      : field_(std::move(field)), index_(field_.order(), n), q_(std::move(q)) {
    q_minus_one_ = field_.sub(q_, field_.one());
  }

  const F& field() const { return field_; }
  const BasisIndex& index() const { return index_; }
  int r() const { return index_.r(); }
  int n() const { return index_.n(); }
  const Scalar& q() const { return q_; }
  bool q_is_zero() const { return field_.is_zero(q_); }
  std::size_t dimension() const { return index_.dimension(); }

  Elem basis(std::size_t c, std::size_t w) const { return {Basis::L, {{index_.key(w, c), field_.one()}}}; }
  Elem L(const ColorVector& c) const { return basis(index_.color_index(c), 0); }

  Elem one() const {
    Elem out{Basis::L, {}};
    for (std::size_t c = 0; c < index_.num_labels(); ++c) out.terms.emplace(index_.key(0, c), field_.one());
    return out;
  }

  // h_i = Sum_c L_c h_{s_i}
  Elem gen_h(int i) const {
    if (i < 1 || i >= n()) throw UsageError("generator h_" + std::to_string(i) + " outside 1..n-1");
    const std::size_t s = index_.perm_index(Permutation::simple(n(), i));
    Elem out{Basis::L, {}};
    for (std::size_t c = 0; c < index_.num_labels(); ++c) out.terms.emplace(index_.key(s, c), field_.one());
    return out;
  }

  Elem add(const Elem& x, const Elem& y) const {
    require_L(x);
    require_L(y);
    Elem out = x;
    add_scaled(field_, out.terms, field_.one(), y.terms);
    return out;
  }
  Elem sub(const Elem& x, const Elem& y) const { return add(x, scale(field_.from_int(-1), y)); }
  Elem scale(const Scalar& a, const Elem& x) const { return {x.basis, scaled(field_, a, x.terms)}; }
  bool equal(const Elem& x, const Elem& y) const { return vectors_equal(field_, x.terms, y.terms); }

  Elem mul(const Elem& x, const Elem& y) const {
    require_L(x);
    require_L(y);
    return {Basis::L, mul_vec(x.terms, y.terms)};
  }

  Vec mul_vec(const Vec& x, const Vec& y) const {
    Vec out;
    if (x.empty() || y.empty()) return out;
    // Group left terms by their h-part so h_u * y is computed once per u.
    std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_perm;
    for (const auto& [k, c] : x) by_perm[index_.perm_of(k)].emplace_back(index_.label_of(k), c);
    for (const auto& [u, terms] : by_perm) {
      Vec hy = y;
      const auto& word = index_.word(u);
      for (auto it = word.rbegin(); it != word.rend(); ++it) hy = left_h(*it, hy);
      for (const auto& [k, c] : hy) {
        const std::size_t label = index_.label_of(k);
        for (const auto& [cl, cx] : terms)
          if (cl == label) add_term(field_, out, k, field_.mul(cx, c));
      }
    }
    return out;
  }

  // h_i * v
  Vec left_h(int i, const Vec& v) const {
    Vec out;
    const std::size_t s = index_.perm_index(Permutation::simple(n(), i));
    for (const auto& [k, c] : v) {
      const std::size_t w = index_.perm_of(k);
      const std::size_t d = index_.label_of(k);
      const std::size_t sd = index_.act(s, d);
      const std::size_t sw = index_.left_simple(w, i);
      if (index_.length(sw) > index_.length(w)) {
        add_term(field_, out, index_.key(sw, sd), c);
      } else {
        add_term(field_, out, index_.key(sw, sd), field_.mul(q_, c));
        add_term(field_, out, index_.key(w, sd), field_.mul(q_minus_one_, c));
      }
      const int di = index_.digit(d, i - 1), dn = index_.digit(d, i);
      if (di < dn) add_term(field_, out, index_.key(w, d), field_.mul(q_minus_one_, c));
      if (di > dn) add_term(field_, out, index_.key(w, sd), field_.neg(field_.mul(q_minus_one_, c)));
    }
    return out;
  }

  // h_1..h_{n-1}, then L_c for every c.
  std::vector<Vec> generator_vecs() const {
    std::vector<Vec> out;
    for (int i = 1; i < n(); ++i) out.push_back(gen_h(i).terms);
    for (std::size_t c = 0; c < index_.num_labels(); ++c) out.push_back(basis(c, 0).terms);
    return out;
  }

  RelationReport verify_presentation4() const {
    RelationReport rep;
    rep.presentation = "4";
    const int nn = n();
    const std::size_t labels = index_.num_labels();
    Elem total{Basis::L, {}};
    for (std::size_t c = 0; c < labels; ++c) total = add(total, basis(c, 0));
    rep.record("Sum_c L_c = 1", "", equal(total, one()));
    for (std::size_t a = 0; a < labels; ++a)
      for (std::size_t b = 0; b < labels; ++b) {
        Elem expect = a == b ? basis(a, 0) : Elem{Basis::L, {}};
        rep.record("L_c' L_c = delta L_c", std::to_string(a) + "," + std::to_string(b),
                   equal(mul(basis(a, 0), basis(b, 0)), expect));
      }
    for (int i = 1; i < nn; ++i)
      for (int j = i + 2; j < nn; ++j)
        rep.record("h_i h_j = h_j h_i (|i-j| > 1)", std::to_string(i) + "," + std::to_string(j),
                   equal(mul(gen_h(i), gen_h(j)), mul(gen_h(j), gen_h(i))));
    for (int i = 1; i + 1 < nn; ++i) {
      Elem a = gen_h(i), b = gen_h(i + 1);
      rep.record("h_i h_{i+1} h_i = h_{i+1} h_i h_{i+1}", std::to_string(i), equal(mul(mul(a, b), a), mul(mul(b, a), b)));
    }
    for (int i = 1; i < nn; ++i) {
      Elem h = gen_h(i);
      Elem rhs = add(scale(q_, one()), scale(q_minus_one_, h));
      rep.record("h_i^2 = q + (q-1) h_i", std::to_string(i), equal(mul(h, h), rhs));
    }
    for (int i = 1; i < nn; ++i) {
      const std::size_t s = index_.perm_index(Permutation::simple(nn, i));
      Elem h = gen_h(i);
      for (std::size_t c = 0; c < labels; ++c) {
        const std::size_t sc = index_.act(s, c);
        Elem rhs = mul(basis(sc, 0), h);
        const int ci = index_.digit(c, i - 1), cn = index_.digit(c, i);
        if (ci < cn) rhs = add(rhs, scale(q_minus_one_, basis(c, 0)));
        if (ci > cn) rhs = sub(rhs, scale(q_minus_one_, basis(sc, 0)));
        rep.record("h_i L_c = L_{s_i(c)} h_i - (q-1)(case)", "i=" + std::to_string(i) + ",c=" + std::to_string(c),
                   equal(mul(h, basis(c, 0)), rhs));
      }
    }
    return rep;
  }

 private:
  void require_L(const Elem& x) const {
    if (x.basis != Basis::L) throw UsageError("fourth-presentation element must use basis L, got " + basis_name(x.basis));
  }

  F field_;
  BasisIndex index_;
  Scalar q_;
  Scalar q_minus_one_;
};

}  // namespace yoklab
