#include <doctest.h>

#include "yoklab/labels.hpp"
#include "yoklab/modrep.hpp"
#include "yoklab/nil_analysis.hpp"
#include "yoklab/random.hpp"
#include "yoklab/structure.hpp"

using namespace yoklab;

namespace {

using Q = CyclotomicField;

template <class V>
bool same_matrix(const Q& f, const DenseMatrix<V>& a, const DenseMatrix<V>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (!f.equals(a.at(i, j), b.at(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("serial and parallel paths agree") {
  Q f(2);
  const YAlgebra<Q> y(f, 3, f.zero());
  CHECK(same_matrix(f, gram_matrix(y, TraceForm::CoefficientSum, Exec::Serial),
                    gram_matrix(y, TraceForm::CoefficientSum, Exec::Parallel)));
  const auto g = gram_matrix(y, TraceForm::IdentityCoefficient);
  CHECK(matrix_rank(f, g, Exec::Serial) == matrix_rank(f, g, Exec::Parallel));

  const auto serial = commutator_ideal(y, Exec::Serial);
  const auto parallel = commutator_ideal(y, Exec::Parallel);
  CHECK(serial.same_span(parallel));
  CHECK(radical_report(y, serial, Exec::Serial).power_dims == radical_report(y, parallel, Exec::Parallel).power_dims);

  const auto labels = enumerate_labels(2, 3);
  const auto cs = cell_reports(YCells<Q>{y}, predicted_cells(y.index(), labels), Exec::Serial);
  const auto cp = cell_reports(YCells<Q>{y}, predicted_cells(y.index(), labels), Exec::Parallel);
  REQUIRE(cs.size() == cp.size());
  for (std::size_t k = 0; k < cs.size(); ++k) CHECK(f.equals(cs[k].beta, cp[k].beta));

  CHECK(nakayama_exhaustive(YAlgebra<Q>(f, 2, f.zero()), TraceForm::CoefficientSum, Exec::Parallel).ok);

  const NilAlgebra<Q> a(f, 3);
  CHECK(nil_radical(a, Exec::Serial).same_span(nil_radical(a, Exec::Parallel)));
  CHECK(same_matrix(f, nil_gram_matrix(a, TraceForm::IdentityCoefficient, Exec::Serial),
                    nil_gram_matrix(a, TraceForm::IdentityCoefficient, Exec::Parallel)));
}

TEST_CASE("closure from random seeds is independent of the execution path") {
  Q f(3);
  const YAlgebra<Q> y(f, 2, f.zero());
  RandomElements<Q> gen(f, y.dimension(), 12);
  for (int k = 0; k < 5; ++k) {
    const std::vector<SparseVector<CyclotomicNumber>> seeds{gen.vector(2)};
    CHECK(two_sided_ideal(y, seeds, Exec::Serial).same_span(two_sided_ideal(y, seeds, Exec::Parallel)));
    CHECK(right_ideal(y, seeds, Exec::Serial).same_span(right_ideal(y, seeds, Exec::Parallel)));
  }
}
