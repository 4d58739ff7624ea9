#pragma once

// The Yokonuma-Hecke algebra Y_{r,n}(q) over an exact field.
//
// Internal normal form is the E-basis {E_chi g_w}; the t-basis {t^a g_w} is
// an input/output view reached through fourier.hpp. Products are normalized
// by pushing the generators of the right factor's reduced word one at a time:
//
//   E_chi g_w * g_i = E_chi g_{w s_i}                                l(w s_i) > l(w)
//                   = q E_chi g_{w s_i}
//                     + (q-1) [c_{w(i)} = c_{w(i+1)}] E_chi g_w      otherwise
//
// together with E_chi g_u * E_chi' = delta(chi, u(chi')) E_chi g_u.

#include <map>
#include <span>
#include <string>

#include "yoklab/basis_index.hpp"
#include "yoklab/element.hpp"
#include "yoklab/fourier.hpp"
#include "yoklab/report.hpp"

namespace yoklab {

template <Field F>
class YAlgebra {
 public:
  using FieldType = F;
  using Scalar = typename F::value_type;
  using Vec = SparseVector<Scalar>;
  using Elem = Element<Scalar>;

  YAlgebra(F field, int n, Scalar q)
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
  Basis native_basis() const { return Basis::E; }

  // --- basis elements and generators

  Elem one() const { return {Basis::T, {{index_.key(0, 0), field_.one()}}}; }

  Elem basis_T(std::size_t exponent_label, std::size_t w) const {
    return {Basis::T, {{index_.key(w, exponent_label), field_.one()}}};
  }
  Elem basis_E(std::size_t color_label, std::size_t w) const {
    return {Basis::E, {{index_.key(w, color_label), field_.one()}}};
  }

  Elem gen_t(int j) const {
    check_position(j);
    std::vector<int> a(n(), 0);
    a[j - 1] = 1 % r();
    return basis_T(index_.exponent_index(a), 0);
  }

  // g_i = Sum_chi E_chi g_{s_i}
  Elem gen_g(int i) const {
    check_generator(i);
    const std::size_t s = index_.perm_index(Permutation::simple(n(), i));
    Elem out{Basis::E, {}};
    for (std::size_t chi = 0; chi < index_.num_labels(); ++chi) out.terms.emplace(index_.key(s, chi), field_.one());
    return out;
  }

  // e_{i,k} = (1/r) Sum_s t_i^s t_k^{-s}, in the t-basis.
  Elem e_idem(int i, int k) const {
    check_position(i);
    check_position(k);
    Elem out{Basis::T, {}};
    const auto inv_r = field_.inv(field_.from_int(r()));
    for (int s = 0; s < r(); ++s) {
      std::vector<int> a(n(), 0);
      a[i - 1] = (a[i - 1] + s) % r();
      a[k - 1] = (a[k - 1] + r() - s) % r();
      add_term(field_, out.terms, index_.key(0, index_.exponent_index(a)), inv_r);
    }
    return out;
  }

  // E_chi = Prod_i (1/r) Sum_s chi(t_i)^s t_i^{-s}, expanded factor by
  // factor in the commutative t-monomials.
  Elem E_idem(const ColorVector& chi) const {
    index_.color_index(chi);
    const auto inv_r = field_.inv(field_.from_int(r()));
    Vec acc{{index_.key(0, 0), field_.one()}};
    for (int i = 0; i < n(); ++i) {
      Vec next;
      for (const auto& [key, c] : acc) {
        std::vector<int> a = index_.exponents(index_.label_of(key));
        for (int s = 0; s < r(); ++s) {
          std::vector<int> b = a;
          b[i] = (b[i] + r() - s) % r();
          Scalar coeff = field_.mul(c, field_.mul(inv_r, field_.zeta_pow(static_cast<long>(chi[i]) * s)));
          add_term(field_, next, index_.key(0, index_.exponent_index(b)), coeff);
        }
      }
      acc = std::move(next);
    }
    return {Basis::T, std::move(acc)};
  }

  // P_k(x) = Prod_{l != k} (x - zeta^l) / (zeta^k - zeta^l)
  Elem lagrange_eval(int k, const Elem& x) const {
    if (k < 1 || k > r()) throw UsageError("lagrange_eval: k outside 1..r");
    Elem result = to_E(one());
    for (int l = 1; l <= r(); ++l) {
      if (l == k) continue;
      Elem factor = sub(x, scale(field_.zeta_pow(l), one()));
      Scalar denom = field_.sub(field_.zeta_pow(k), field_.zeta_pow(l));
      result = scale(field_.inv(denom), mul(result, factor));
    }
    return result;
  }

  Elem g_word(std::span<const int> word) const {
    Elem out = to_E(one());
    for (int i : word) out = mul(out, gen_g(i));
    return out;
  }

  Elem g_w(const Permutation& w) const {
    if (w.size() != n()) throw UsageError("g_w: permutation size mismatch");
    auto word = reduced_word(w);
    return g_word(word);
  }

  // --- coordinate changes

  Elem to_E(const Elem& x) const {
    require_own_basis(x);
    if (x.basis == Basis::E) return x;
    return {Basis::E, exponents_to_idempotents(field_, index_, x.terms)};
  }

  Elem to_T(const Elem& x) const {
    require_own_basis(x);
    if (x.basis == Basis::T) return x;
    return {Basis::T, idempotents_to_exponents(field_, index_, x.terms)};
  }

  // --- linear structure

  Elem add(const Elem& x, const Elem& y) const {
    if (x.basis == y.basis) {
      require_own_basis(x);
      Elem out = x;
      add_scaled(field_, out.terms, field_.one(), y.terms);
      return out;
    }
    return add(to_E(x), to_E(y));
  }
  Elem sub(const Elem& x, const Elem& y) const { return add(x, scale(field_.from_int(-1), y)); }
  Elem scale(const Scalar& a, const Elem& x) const { return {x.basis, scaled(field_, a, x.terms)}; }
  bool equal(const Elem& x, const Elem& y) const {
    return vectors_equal(field_, to_E(x).terms, to_E(y).terms);
  }
  bool is_zero(const Elem& x) const { return x.terms.empty(); }

  // --- multiplication

  Elem mul(const Elem& x, const Elem& y) const {
    return {Basis::E, mul_vec(to_E(x).terms, to_E(y).terms)};
  }

  // Product of two E-basis coordinate vectors.
  Vec mul_vec(const Vec& x, const Vec& y) const {
    Vec out;
    if (x.empty() || y.empty()) return out;
    for (const auto& [kx, cx] : x) {
      const std::size_t u = index_.perm_of(kx);
      const std::size_t chi = index_.label_of(kx);
      const std::size_t chi_right = index_.act(index_.inverse(u), chi);
      for (std::size_t v = 0; v < index_.num_perms(); ++v) {
        auto it = y.find(index_.key(v, chi_right));
        if (it == y.end()) continue;
        const Scalar c = field_.mul(cx, it->second);
        for (const auto& [z, cz] : push_word(chi, u, v)) add_term(field_, out, index_.key(z, chi), field_.mul(c, cz));
      }
    }
    return out;
  }

  // E_chi g_u * g_v expanded as Sum_z coeff_z E_chi g_z.
  std::map<std::size_t, Scalar> push_word(std::size_t chi, std::size_t u, std::size_t v) const {
    std::map<std::size_t, Scalar> state{{u, field_.one()}};
    for (int i : index_.word(v)) {
      std::map<std::size_t, Scalar> next;
      auto bump = [&](std::size_t z, const Scalar& c) {
        if (field_.is_zero(c)) return;
        auto [it, fresh] = next.try_emplace(z, c);
        if (!fresh) {
          it->second = field_.add(it->second, c);
          if (field_.is_zero(it->second)) next.erase(it);
        }
      };
      for (const auto& [w, c] : state) {
        const Permutation& pw = index_.perm(w);
        const std::size_t ws = index_.right_simple(w, i);
        if (pw(i) < pw(i + 1)) {
          bump(ws, c);
          continue;
        }
        bump(ws, field_.mul(q_, c));
        if (index_.digit(chi, pw(i) - 1) == index_.digit(chi, pw(i + 1) - 1)) bump(w, field_.mul(q_minus_one_, c));
      }
      state = std::move(next);
    }
    return state;
  }

  // Generators t_1..t_n, g_1..g_{n-1} as E-basis vectors.
  std::vector<Vec> generator_vecs() const {
    std::vector<Vec> out;
    for (int j = 1; j <= n(); ++j) out.push_back(to_E(gen_t(j)).terms);
    for (int i = 1; i < n(); ++i) out.push_back(gen_g(i).terms);
    return out;
  }

  // --- involution phi: g_i -> g_{n-i}, t_j -> t_{n+1-j}

  Elem phi(const Elem& x) const {
    Elem tx = to_T(x);
    Vec out;
    for (const auto& [key, c] : tx.terms) {
      std::vector<int> a = index_.exponents(index_.label_of(key));
      std::reverse(a.begin(), a.end());
      Elem image = basis_T(index_.exponent_index(a), 0);
      for (int i : index_.word(index_.perm_of(key))) image = mul(image, gen_g(n() - i));
      add_scaled(field_, out, c, to_E(image).terms);
    }
    return {Basis::E, std::move(out)};
  }

  // --- presentation checks

  // 1: generators t_j, g_i with the defining relations.
  // 2: generators E_chi, g_i (second presentation).
  RelationReport verify_presentation(int which) const {
    if (which == 1) return verify_first();
    if (which == 2) return verify_second();
    throw UsageError("verify_presentation: expected 1 or 2");
  }

  // Commutation identities among t_i, e_{j,k}, g_i.
  RelationReport verify_idempotent_identities() const {
    RelationReport rep;
    rep.presentation = "idempotent identities";
    const int nn = n();
    for (int i = 1; i <= nn; ++i)
      for (int k = 1; k <= nn; ++k) {
        Elem e = e_idem(i, k);
        std::string tag = "e_{" + std::to_string(i) + "," + std::to_string(k) + "}";
        rep.record("e_ik^2 = e_ik = e_ki", tag, equal(mul(e, e), e) && equal(e, e_idem(k, i)));
        for (int j = 1; j <= nn; ++j) {
          Elem t = gen_t(j);
          rep.record("t_i e_jk = e_jk t_i", tag + " t_" + std::to_string(j), equal(mul(t, e), mul(e, t)));
        }
        for (int j = 1; j <= nn; ++j)
          for (int l = 1; l <= nn; ++l) {
            Elem f = e_idem(j, l);
            rep.record("e_ij e_kl = e_kl e_ij", tag, equal(mul(e, f), mul(f, e)));
          }
        for (int g = 1; g < nn; ++g) {
          Permutation s = Permutation::simple(nn, g);
          Elem lhs = mul(e, gen_g(g));
          Elem rhs = mul(gen_g(g), e_idem(s(i), s(k)));
          rep.record("e_jk g_i = g_i e_{s_i(j),s_i(k)}", tag + " g_" + std::to_string(g), equal(lhs, rhs));
          Elem ei = e_idem(g, g + 1);
          Elem lhs2 = mul(ei, e);
          Elem rhs2 = mul(e_idem(s(i), s(k)), ei);
          rep.record("e_i e_kl = e_{s_i(k),s_i(l)} e_i", tag + " e_" + std::to_string(g), equal(lhs2, rhs2));
        }
      }
    for (int i = 1; i < nn; ++i) {
      Elem ei = e_idem(i, i + 1);
      rep.record("e_i g_i = g_i e_i", "i=" + std::to_string(i), equal(mul(ei, gen_g(i)), mul(gen_g(i), ei)));
      Vec bridge;
      for (std::size_t chi = 0; chi < index_.num_labels(); ++chi)
        if (index_.digit(chi, i - 1) == index_.digit(chi, i)) bridge.emplace(index_.key(0, chi), field_.one());
      rep.record("e_i = Sum_{c_i = c_i+1} E_chi", "i=" + std::to_string(i), equal(ei, Elem{Basis::E, bridge}));
    }
    return rep;
  }

 private:
  void check_position(int j) const {
    if (j < 1 || j > n()) throw UsageError("index " + std::to_string(j) + " outside 1..n");
  }
  void check_generator(int i) const {
    if (i < 1 || i >= n()) throw UsageError("generator g_" + std::to_string(i) + " outside 1..n-1");
  }
  void require_own_basis(const Elem& x) const {
    if (x.basis != Basis::T && x.basis != Basis::E)
      throw UsageError("Yokonuma-Hecke element must use basis T or E, got " + basis_name(x.basis));
  }

  Elem scalar_elem(const Scalar& c) const { return scale(c, one()); }

  RelationReport verify_first() const {
    RelationReport rep;
    rep.presentation = "1";
    const int nn = n();
    auto name = [](std::string s, int i) { return s + std::to_string(i); };
    for (int j = 1; j <= nn; ++j) {
      Elem p = to_E(one());
      Elem t = gen_t(j);
      for (int k = 0; k < r(); ++k) p = mul(p, t);
      rep.record("t_j^r = 1", name("j=", j), equal(p, one()));
    }
    for (int i = 1; i <= nn; ++i)
      for (int j = i + 1; j <= nn; ++j)
        rep.record("t_i t_j = t_j t_i", name("i=", i) + name(",j=", j),
                   equal(mul(gen_t(i), gen_t(j)), mul(gen_t(j), gen_t(i))));
    for (int i = 1; i < nn; ++i) {
      Permutation s = Permutation::simple(nn, i);
      for (int j = 1; j <= nn; ++j)
        rep.record("g_i t_j = t_{s_i(j)} g_i", name("i=", i) + name(",j=", j),
                   equal(mul(gen_g(i), gen_t(j)), mul(gen_t(s(j)), gen_g(i))));
    }
    for (int i = 1; i < nn; ++i)
      for (int j = i + 2; j < nn; ++j)
        rep.record("g_i g_j = g_j g_i (|i-j| >= 2)", name("i=", i) + name(",j=", j),
                   equal(mul(gen_g(i), gen_g(j)), mul(gen_g(j), gen_g(i))));
    for (int i = 1; i + 1 < nn; ++i) {
      Elem a = gen_g(i), b = gen_g(i + 1);
      rep.record("g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", name("i=", i), equal(mul(mul(a, b), a), mul(mul(b, a), b)));
    }
    for (int i = 1; i < nn; ++i) {
      Elem g = gen_g(i);
      Elem rhs = add(scalar_elem(q_), scale(q_minus_one_, mul(e_idem(i, i + 1), g)));
      rep.record("g_i^2 = q + (q-1) e_i g_i", name("i=", i), equal(mul(g, g), rhs));
    }
    return rep;
  }

  RelationReport verify_second() const {
    RelationReport rep;
    rep.presentation = "2";
    const int nn = n();
    const std::size_t labels = index_.num_labels();
    std::vector<Elem> E;
    for (std::size_t chi = 0; chi < labels; ++chi) E.push_back(to_E(E_idem(index_.colors(chi))));
    Elem total{Basis::E, {}};
    for (const auto& e : E) total = add(total, e);
    rep.record("Sum_chi E_chi = 1", "", equal(total, one()));
    for (std::size_t a = 0; a < labels; ++a)
      for (std::size_t b = 0; b < labels; ++b) {
        Elem expect = a == b ? E[a] : Elem{Basis::E, {}};
        rep.record("E_chi' E_chi = delta E_chi", std::to_string(a) + "," + std::to_string(b), equal(mul(E[a], E[b]), expect));
      }
    for (int i = 1; i < nn; ++i) {
      const std::size_t s = index_.perm_index(Permutation::simple(nn, i));
      for (std::size_t chi = 0; chi < labels; ++chi)
        rep.record("g_i E_chi = E_{s_i(chi)} g_i", "i=" + std::to_string(i) + ",chi=" + std::to_string(chi),
                   equal(mul(gen_g(i), E[chi]), mul(E[index_.act(s, chi)], gen_g(i))));
    }
    for (int i = 1; i < nn; ++i)
      for (int j = i + 2; j < nn; ++j)
        rep.record("g_i g_j = g_j g_i (|i-j| > 1)", std::to_string(i) + "," + std::to_string(j),
                   equal(mul(gen_g(i), gen_g(j)), mul(gen_g(j), gen_g(i))));
    for (int i = 1; i + 1 < nn; ++i) {
      Elem a = gen_g(i), b = gen_g(i + 1);
      rep.record("g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", std::to_string(i), equal(mul(mul(a, b), a), mul(mul(b, a), b)));
    }
    for (int i = 1; i < nn; ++i) {
      const std::size_t s = index_.perm_index(Permutation::simple(nn, i));
      Elem fixed{Basis::E, {}};
      for (std::size_t chi = 0; chi < labels; ++chi)
        if (index_.act(s, chi) == chi) fixed = add(fixed, E[chi]);
      Elem g = gen_g(i);
      Elem rhs = add(scalar_elem(q_), scale(q_minus_one_, mul(fixed, g)));
      rep.record("g_i^2 = q + (q-1) Sum_{s_i(chi)=chi} E_chi g_i", std::to_string(i), equal(mul(g, g), rhs));
    }
    return rep;
  }

  F field_;
  BasisIndex index_;
  Scalar q_;
  Scalar q_minus_one_;
};

}  // namespace yoklab
