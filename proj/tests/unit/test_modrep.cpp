#include <doctest.h>

#include "../oracles.hpp"
#include "yoklab/labels.hpp"
#include "yoklab/modrep.hpp"

using namespace yoklab;

namespace {

using Q = CyclotomicField;

template <Field F>
YAlgebra<F> zero_q(const F& f, int n) {
  return YAlgebra<F>(f, n, f.zero());
}

}  // namespace

TEST_CASE("run decompositions") {
  auto check = [](const ColorVector& c, std::vector<int> colors, std::vector<int> lengths, std::vector<int> bounds) {
    const auto d = runs(c);
    REQUIRE(d.runs.size() == colors.size());
    for (std::size_t k = 0; k < colors.size(); ++k) {
      CHECK(d.runs[k].color == colors[k]);
      CHECK(d.runs[k].length == lengths[k]);
    }
    CHECK(d.boundaries == bounds);
  };
  check({1, 1, 1}, {1}, {3}, {0, 3});
  check({1, 2, 1}, {1, 2, 1}, {1, 1, 1}, {0, 1, 2, 3});
  check({1, 1, 2, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, 3, 4});
}

TEST_CASE("label counts") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 5; ++n) {
      CHECK(count_labels(r, n) == oracle::label_count(r, n));
      CHECK(enumerate_labels(r, n).size() == count_labels(r, n));
    }
  for (int r = 1; r <= 5; ++r) CHECK(count_labels(r, 1) == static_cast<std::uint64_t>(r));
  for (int n = 1; n <= 6; ++n) CHECK(count_labels(1, n) == (1u << (n - 1)));
  CHECK(count_labels(2, 2) == 6);
  CHECK(count_labels(3, 3) == 48);
}

TEST_CASE("labels validate their compositions") {
  CHECK_THROWS_AS(validate_label({{1, 2}, {Composition({2})}}, 2), UsageError);
  CHECK_THROWS_AS(validate_label({{1, 1}, {Composition({1})}}, 2), UsageError);
  CHECK_THROWS_AS(validate_label({{1, 3}, {Composition({1}), Composition({1})}}, 2), UsageError);
  CHECK_NOTHROW(validate_label({{1, 1, 2}, {Composition({1, 1}), Composition({1})}}, 2));
}

TEST_CASE("representation of a label") {
  Q f(2);
  const auto whole = rep_of_label(f, {{1, 1}, {Composition({2})}});
  CHECK(f.is_zero(whole.g_values[0]));
  CHECK(f.equals(whole.t_values[0], f.zeta()));
  const auto split = rep_of_label(f, {{2, 2}, {Composition({1, 1})}});
  CHECK(f.equals(split.g_values[0], f.from_int(-1)));
  CHECK(f.equals(split.t_values[1], f.one()));
  // g_1 -> -1 with c_1 != c_2 breaks the quadratic relation
  OneDimRep<CyclotomicNumber> bad{{f.zeta(), f.one()}, {f.from_int(-1)}};
  CHECK_FALSE(check_one_dim(f, bad, f.zero()));
  bad.g_values[0] = f.zero();
  CHECK(check_one_dim(f, bad, f.zero()));
}

TEST_CASE("every label gives a distinct representation and brute force finds no others") {
  for (auto [r, n] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    Q f(r);
    const auto labels = enumerate_labels(r, n);
    std::vector<OneDimRep<CyclotomicNumber>> reps;
    for (const auto& l : labels) {
      reps.push_back(rep_of_label(f, l));
      CHECK(check_one_dim(f, reps.back(), f.zero()));
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(same_rep(f, reps[a], reps[b]));
    const auto brute = enumerate_one_dim_bruteforce(f, n);
    CHECK(brute.size() == labels.size());
    for (const auto& rep : brute) {
      bool found = false;
      for (const auto& mine : reps) found = found || same_rep(f, rep, mine);
      CHECK(found);
    }
  }
}

TEST_CASE("representations are algebra maps on basis products") {
  Q f(2);
  const auto y = zero_q(f, 3);
  for (const auto& l : enumerate_labels(2, 3)) {
    const auto rep = rep_of_label(f, l);
    for (Index a = 0; a < y.dimension(); a += 5)
      for (Index b = 0; b < y.dimension(); b += 3) {
        const SparseVector<CyclotomicNumber> x{{a, f.one()}}, z{{b, f.one()}};
        CHECK(f.equals(evaluate_rep(y, rep, y.mul_vec(x, z)), f.mul(evaluate_rep(y, rep, x), evaluate_rep(y, rep, z))));
      }
  }
}

TEST_CASE("commutator ideal dimensions") {
  for (auto [r, n, expect] : {std::tuple{1, 2, 0}, {2, 2, 2}, {1, 3, 2}, {3, 2, 6}}) {
    CAPTURE(r);
    CAPTURE(n);
    Q f(r);
    const auto y = zero_q(f, n);
    const auto ideal = commutator_ideal(y);
    CHECK(ideal.dimension() == static_cast<std::size_t>(expect));
    CHECK(ideal.dimension() == oracle::two_sided_ideal_dim(y, commutator_seeds(y)));
    CHECK(y.dimension() - ideal.dimension() == count_labels(r, n));
  }
}

TEST_CASE("nilpotency identities and omitted commutators") {
  for (auto [r, n] : {std::pair{1, 3}, {2, 3}, {3, 3}}) {
    Q f(r);
    const auto y = zero_q(f, n);
    CHECK(verify_nilpotency_identities(y).all_zero());
    CHECK(omitted_commutators_vanish(y));
  }
  Q f(2);
  CHECK_THROWS_AS(commutator_ideal(YAlgebra<Q>(f, 2, f.one())), UsageError);
}

TEST_CASE("semisimplicity certificate") {
  auto run = [](const auto& f, int n) {
    const auto y = zero_q(f, n);
    const auto ideal = commutator_ideal(y);
    const auto cert = semisimplicity_certificate(y, ideal, enumerate_labels(f.order(), n));
    CHECK(cert.ok());
    CHECK(cert.quotient_dimension == cert.label_count);
    const auto rad = radical_report(y, ideal);
    CHECK(rad.nilpotency_index.has_value());
    CHECK(rad.power_dims.back() == 0);
  };
  run(Q(2), 2);
  run(Q(1), 3);
  run(Q(3), 2);
  run(PrimeField(7, 3), 2);
  run(PrimeField(13, 2), 3);
}
