#include <doctest.h>

#include <map>

#include "yoklab/random.hpp"
#include "yoklab/ycore.hpp"

using namespace yoklab;

namespace {

using Q = CyclotomicField;
using YQ = YAlgebra<Q>;

YQ make(int r, int n, const std::string& q = "0") {
  Q f(r);
  return YQ(f, n, f.parse(q));
}

Element<CyclotomicNumber> key_elem(const YQ& y, Index k) { return {Basis::E, {{k, y.field().one()}}}; }

bool assoc(const YQ& y, const SparseVector<CyclotomicNumber>& a, const SparseVector<CyclotomicNumber>& b,
           const SparseVector<CyclotomicNumber>& c) {
  return vectors_equal(y.field(), y.mul_vec(y.mul_vec(a, b), c), y.mul_vec(a, y.mul_vec(b, c)));
}

}  // namespace

TEST_CASE("generators and idempotents") {
  const auto y = make(3, 3);
  CHECK(y.gen_t(2).terms.size() == 1);
  CHECK(y.equal(y.e_idem(2, 2), y.one()));
  CHECK_THROWS_AS(y.gen_g(3), UsageError);
  CHECK_THROWS_AS(y.gen_t(0), UsageError);
  const auto y1 = make(1, 3);
  CHECK(y1.equal(y1.e_idem(1, 2), y1.one()));
  // e_i is idempotent and t_i e_i = t_{i+1} e_i
  const auto e = y.e_idem(1, 2);
  CHECK(y.equal(y.mul(e, e), e));
  CHECK(y.equal(y.mul(y.gen_t(1), e), y.mul(y.gen_t(2), e)));
}

TEST_CASE("E_chi are orthogonal idempotents summing to one") {
  const auto y = make(3, 2);
  auto total = y.scale(y.field().zero(), y.one());
  for (const auto& chi : std::vector<ColorVector>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}) {
    const auto e = y.E_idem(chi);
    CHECK(y.equal(y.mul(e, e), e));
    CHECK(y.equal(e, y.basis_E(y.index().color_index(chi), 0)));
    // t_k E_chi = zeta^{c_k} E_chi
    for (int k = 1; k <= 2; ++k)
      CHECK(y.equal(y.mul(y.gen_t(k), e), y.scale(y.field().zeta_pow(chi[k - 1]), e)));
    total = y.add(total, e);
  }
  CHECK(y.equal(total, y.one()));
}

TEST_CASE("basis elements are generator products along reduced words") {
  for (auto [r, n] : {std::pair{2, 3}, {3, 2}, {1, 4}}) {
    const auto y = make(r, n);
    const auto& idx = y.index();
    for (std::size_t w = 0; w < idx.num_perms(); ++w) {
      const auto gw = y.g_w(idx.perm(w));
      CHECK(y.equal(gw, y.g_word(reduced_word(idx.perm(w)))));
      for (std::size_t a = 0; a < idx.num_labels(); a += 1 + idx.num_labels() / 5) {
        auto product = y.one();
        const auto ex = idx.exponents(a);
        for (int j = 1; j <= n; ++j)
          for (int k = 0; k < ex[j - 1]; ++k) product = y.mul(product, y.gen_t(j));
        CHECK(y.equal(y.mul(product, gw), y.basis_T(a, w)));
      }
    }
  }
}

TEST_CASE("associativity is exhaustive at r=2, n=2") {
  const auto y = make(2, 2);
  std::size_t failures = 0;
  for (Index a = 0; a < y.dimension(); ++a)
    for (Index b = 0; b < y.dimension(); ++b)
      for (Index c = 0; c < y.dimension(); ++c)
        failures += !assoc(y, key_elem(y, a).terms, key_elem(y, b).terms, key_elem(y, c).terms);
  CHECK(failures == 0);
}

TEST_CASE("associativity on random triples") {
  for (auto [r, n, q] : {std::tuple{2, 3, "0"}, {3, 2, "0"}, {2, 3, "2"}, {3, 3, "1/2*z - 1"}}) {
    const auto y = make(r, n, q);
    RandomElements<Q> gen(y.field(), y.dimension(), 17);
    std::size_t failures = 0;
    for (int k = 0; k < 200; ++k) failures += !assoc(y, gen.vector(4), gen.vector(4), gen.vector(4));
    CHECK(failures == 0);
  }
}

TEST_CASE("presentations hold on the grid") {
  for (auto [r, n, q] : {std::tuple{1, 3, "0"}, {2, 2, "0"}, {2, 3, "0"}, {3, 2, "0"}, {3, 3, "0"}, {2, 3, "3"}, {4, 2, "z"}}) {
    const auto y = make(r, n, q);
    CAPTURE(r);
    CAPTURE(n);
    CHECK(y.verify_presentation(1).all_zero());
    CHECK(y.verify_presentation(2).all_zero());
    CHECK(y.verify_idempotent_identities().all_zero());
  }
  CHECK_THROWS_AS(make(2, 2).verify_presentation(3), UsageError);
}

TEST_CASE("r = 1 agrees with the Iwahori-Hecke left action") {
  // g_i g_w = g_{s_i w} if l(s_i w) > l(w), else q g_{s_i w} + (q - 1) g_w,
  // on one-line notation with s_i w swapping the values i and i+1.
  for (const char* qs : {"0", "2", "1/3"}) {
    const auto y = make(1, 4, qs);
    const auto& f = y.field();
    const auto q = f.parse(qs);
    const auto& idx = y.index();
    std::map<std::vector<int>, std::size_t> where;
    for (std::size_t w = 0; w < idx.num_perms(); ++w) where[idx.perm(w).images()] = w;
    for (int i = 1; i < 4; ++i)
      for (std::size_t w = 0; w < idx.num_perms(); ++w) {
        auto img = idx.perm(w).images();
        const auto pi = std::find(img.begin(), img.end(), i) - img.begin();
        const auto pj = std::find(img.begin(), img.end(), i + 1) - img.begin();
        const bool up = pi < pj;
        std::swap(img[pi], img[pj]);
        SparseVector<CyclotomicNumber> expect;
        if (up) {
          add_term(f, expect, idx.key(where[img], 0), f.one());
        } else {
          add_term(f, expect, idx.key(where[img], 0), q);
          add_term(f, expect, idx.key(w, 0), f.sub(q, f.one()));
        }
        CHECK(vectors_equal(f, y.mul(y.gen_g(i), y.basis_E(0, w)).terms, expect));
      }
  }
}

TEST_CASE("T and E coordinates round trip") {
  const auto y = make(3, 3);
  RandomElements<Q> gen(y.field(), y.dimension(), 5);
  for (int k = 0; k < 50; ++k) {
    Element<CyclotomicNumber> x{Basis::T, gen.vector()};
    CHECK(vectors_equal(y.field(), y.to_T(y.to_E(x)).terms, x.terms));
    Element<CyclotomicNumber> e{Basis::E, gen.vector()};
    CHECK(vectors_equal(y.field(), y.to_E(y.to_T(e)).terms, e.terms));
  }
  CHECK_THROWS_AS(y.to_E(Element<CyclotomicNumber>{Basis::L, {}}), UsageError);
}

TEST_CASE("phi reverses exponents and conjugates by the longest element") {
  for (auto [r, n] : {std::pair{2, 3}, {3, 2}}) {
    const auto y = make(r, n);
    const auto& idx = y.index();
    const auto w0 = longest_element(n);
    for (std::size_t w = 0; w < idx.num_perms(); ++w)
      for (std::size_t a = 0; a < idx.num_labels(); ++a) {
        auto ex = idx.exponents(a);
        std::reverse(ex.begin(), ex.end());
        const auto conj = w0 * idx.perm(w) * w0;
        const auto expect = y.mul(y.basis_T(idx.exponent_index(ex), 0), y.g_w(conj));
        CHECK(y.equal(y.phi(y.basis_T(a, w)), expect));
      }
  }
}
