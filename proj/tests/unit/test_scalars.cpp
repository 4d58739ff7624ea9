#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "yoklab/error.hpp"
#include "yoklab/scalars.hpp"

using namespace yoklab;

namespace {

template <Field F>
typename F::value_type random_scalar(const F& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), power(0, 2 * f.order());
  auto x = f.zero();
  for (int k = 0; k < 3; ++k) x = f.add(x, f.mul(f.from_int(coeff(rng)), f.zeta_pow(power(rng))));
  return x;
}

template <Field F>
void check_axioms(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    REQUIRE(f.equals(f.add(a, b), f.add(b, a)));
    REQUIRE(f.equals(f.mul(a, b), f.mul(b, a)));
    REQUIRE(f.equals(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
    REQUIRE(f.equals(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    REQUIRE(f.equals(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    REQUIRE(f.is_zero(f.add(a, f.neg(a))));
    REQUIRE(f.equals(f.sub(a, b), f.add(a, f.neg(b))));
    auto acc = c;
    f.add_mul(acc, a, b);
    REQUIRE(f.equals(acc, f.add(c, f.mul(a, b))));
    if (!f.is_zero(a)) {
      REQUIRE(f.equals(f.mul(a, f.inv(a)), f.one()));
      REQUIRE(f.equals(f.div(b, a), f.mul(b, f.inv(a))));
    }
  }
}

template <Field F>
void check_zeta(const F& f) {
  const int r = f.order();
  CHECK(f.equals(power(f, f.zeta(), r), f.one()));
  for (int k = 1; k < r; ++k) CHECK_FALSE(f.equals(power(f, f.zeta(), k), f.one()));
  CHECK(f.equals(f.zeta_pow(-1), f.inv(f.zeta())));
  CHECK(f.equals(f.zeta_pow(r + 2), f.zeta_pow(2)));
}

}  // namespace

TEST_CASE("cyclotomic polynomials agree with division of x^r - 1") {
  for (int r = 1; r <= 12; ++r) {
    const auto expect = oracle::cyclotomic(r);
    const auto got = cyclotomic_polynomial(r);
    REQUIRE(got.size() == expect.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == expect[k]);
  }
}

TEST_CASE("field axioms on random triples") {
  for (int r : {1, 2, 3, 4, 5, 6}) check_axioms(CyclotomicField(r), 17 + r);
  check_axioms(PrimeField(13, 3), 5);
  check_axioms(PrimeField(13, 4), 6);
  check_axioms(PrimeField(7, 3), 7);
}

TEST_CASE("zeta is a primitive r-th root of unity") {
  for (int r = 1; r <= 8; ++r) check_zeta(CyclotomicField(r));
  for (int r : {1, 2, 3, 4, 6, 12}) check_zeta(PrimeField(13, r));
  check_zeta(PrimeField(7, 3));
}

TEST_CASE("prime field generator is the smallest primitive root") {
  for (std::uint64_t p : {3u, 5u, 7u, 13u, 31u, 97u, 101u}) {
    CHECK(smallest_primitive_root(p) == oracle::primitive_root(p));
    CHECK(PrimeField(p, 1).primitive_root() == oracle::primitive_root(p));
  }
  // zeta = g^((p-1)/r) with g = 2 for p = 13
  CHECK(PrimeField(13, 3).zeta().value == 3);
  CHECK(PrimeField(13, 4).zeta().value == 8);
  CHECK(PrimeField(13, 2).zeta().value == 12);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(PrimeField(15, 1), UsageError);
  CHECK_THROWS_AS(PrimeField(11, 3), UsageError);
  CHECK_THROWS_AS(PrimeField(13, 0), UsageError);
  CHECK_THROWS_AS(CyclotomicField(0), UsageError);
  CHECK_THROWS_AS(parse_field_spec("fp:", 2), UsageError);
  CHECK_THROWS_AS(make_field(parse_field_spec("fp:12", 2)), UsageError);
  CHECK_THROWS_AS(parse_field_spec("rational", 2), UsageError);
  CHECK_THROWS_AS(parse_field_spec("fp:1234567890123456789", 2), UsageError);
  CHECK(std::holds_alternative<PrimeField>(make_field(parse_field_spec("fp:13", 3))));
  CHECK(std::holds_alternative<CyclotomicField>(make_field(parse_field_spec("cyclotomic", 3))));
  CHECK_THROWS_AS(make_field(parse_field_spec("fp:13", 5)), UsageError);
}

TEST_CASE("scalar grammar") {
  CyclotomicField f(5);
  CHECK(f.is_zero(f.parse("0")));
  CHECK(f.equals(f.parse("z^5"), f.one()));
  CHECK(f.equals(f.parse("z"), f.zeta()));
  CHECK(f.equals(f.parse(" 3/4 * z^2 - z^1 + 2 "),
                 f.add(f.sub(f.mul(f.from_rational(mpq_class(3, 4)), f.zeta_pow(2)), f.zeta()), f.from_int(2))));
  CHECK(f.render(f.parse("1/2*z^2 - 1")) == "1/2*z^2 - 1");
  CHECK(f.render(f.zero()) == "0");
  CHECK(f.render(f.zeta()) == "z^1");
  CHECK_THROWS_AS(f.parse(""), UsageError);
  CHECK_THROWS_AS(f.parse("1/0"), UsageError);
  CHECK_THROWS_AS(f.parse("2*"), UsageError);
  CHECK_THROWS_AS(f.parse("z^"), UsageError);

  PrimeField p(13, 3);
  CHECK(p.parse("z").value == 3);
  CHECK(p.parse("1/2").value == 7);
  CHECK(p.render(p.parse("-1")) == "12");
  CHECK_THROWS_AS(p.parse("1/13"), UsageError);
}

TEST_CASE("parse inverts render") {
  std::mt19937_64 rng(3);
  for (int r : {1, 2, 3, 4, 5, 6, 7}) {
    CyclotomicField f(r);
    for (int trial = 0; trial < 100; ++trial) {
      auto x = random_scalar(f, rng);
      x = f.div(x, f.from_int(1 + trial % 7));
      REQUIRE(f.equals(f.parse(f.render(x)), x));
    }
  }
  PrimeField p(13, 4);
  for (std::uint64_t v = 0; v < 13; ++v) CHECK(p.parse(p.render(Residue{v})).value == v);
}
