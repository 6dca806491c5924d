#include <complex>
#include <stdexcept>

#include "curvop/curvature.hpp"
#include "curvop/forms.hpp"
#include "curvop/positivity.hpp"
#include "curvop/tensor_io.hpp"
#include "doctest.h"

using namespace curvop;
using cx = std::complex<double>;

namespace {

// n = 1, r = 1 with c_{1 1 1 1} = 2: the smallest nontrivial tensor.
CurvatureTensor line_tensor(double value = 2.0) {
  CurvatureTensor c(1, 1);
  c.at(1, 1, 1, 1) = value;
  return c;
}

// n = 2, r = 1 Hermitian tensor with an off-diagonal phase.
CurvatureTensor surface_tensor() {
  CurvatureTensor c(2, 1);
  c.at(1, 1, 1, 1) = 1.0;
  c.at(2, 2, 1, 1) = 5.0;
  c.at(1, 2, 1, 1) = cx(2.0, 1.0);
  c.at(2, 1, 1, 1) = cx(2.0, -1.0);
  return c;
}

}  // namespace

TEST_CASE("tensor storage, bounds, and Hermitian validation") {
  CurvatureTensor c(2, 2);
  c.at(1, 2, 1, 2) = cx(0.0, 1.0);
  CHECK(c.at(1, 2, 1, 2) == cx(0.0, 1.0));
  CHECK(c.max_abs() == 1.0);
  CHECK_THROWS_AS(c.at(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.at(1, 3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.at(1, 1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(CurvatureTensor(0, 1), std::invalid_argument);

  // conj(c_{1 2 1 2}) must equal c_{2 1 2 1}; it is zero here.
  const auto defect = c.symmetry_defect();
  CHECK(defect.value == doctest::Approx(1.0));
  CHECK_THROWS_AS(validated(c), std::invalid_argument);

  const CurvatureTensor fixed = symmetrized(c);
  CHECK(fixed.at(1, 2, 1, 2) == cx(0.0, 0.5));
  CHECK(fixed.at(2, 1, 2, 1) == cx(0.0, -0.5));
  CHECK(fixed.symmetry_defect().value == 0.0);
  CHECK_NOTHROW(validated(fixed));

  // validate() routes through the same two paths.
  CHECK_THROWS_AS(validate(c, 1e-12, false), std::invalid_argument);
  CHECK_NOTHROW(validate(c, 1e-12, true));
}

TEST_CASE("a pure imaginary pair in symmetric position is rejected") {
  // c_{1 2 1 1} = i forces c_{2 1 1 1} = -i; writing +i in both must fail.
  CurvatureTensor c(2, 1);
  c.at(1, 2, 1, 1) = cx(0.0, 1.0);
  c.at(2, 1, 1, 1) = cx(0.0, 1.0);
  CHECK_THROWS_WITH_AS(validated(c),
                       doctest::Contains("j=1, k=2, lambda=1, mu=1"),
                       std::invalid_argument);
}

TEST_CASE("dual tensor: negated fiber transpose, involutive") {
  CurvatureTensor c(2, 2);
  c.at(1, 2, 1, 2) = cx(3.0, 4.0);
  const CurvatureTensor d = dual_tensor(c);
  CHECK(d.at(1, 2, 2, 1) == cx(-3.0, -4.0));
  CHECK(d.at(1, 2, 1, 2) == cx(0.0));
  const CurvatureTensor dd = dual_tensor(d);
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      for (int lambda = 1; lambda <= 2; ++lambda)
        for (int mu = 1; mu <= 2; ++mu)
          CHECK(dd.at(j, k, lambda, mu) == c.at(j, k, lambda, mu));
}

TEST_CASE("operator on the line: frozen values for c = 2") {
  const CurvatureTensor c = line_tensor();
  CHECK(operator_matrix(c, 1, 1).mat(0, 0) == cx(2.0));
  CHECK(operator_matrix(c, 1, 0).mat(0, 0) == cx(0.0));
  CHECK(operator_matrix(c, 0, 1).mat(0, 0) == cx(0.0));
  CHECK(operator_matrix(c, 0, 0).mat(0, 0) == cx(-2.0));

  BundleForm u(1, 1, 1, 1);
  u.coeff(MultiIndex(1, {1}), MultiIndex(1, {1}), 1) = cx(3.0, 1.0);
  const BundleForm au = apply_operator(c, u);
  CHECK(au.coeff(MultiIndex(1, {1}), MultiIndex(1, {1}), 1) == cx(6.0, 2.0));
}

TEST_CASE("operator at (1, 0) on a surface: frozen matrix") {
  // Diagonal part -(trace minus own row), exchange part moves the slot index
  // through the coefficient: rows/columns ordered ({1}), ({2}).
  const CurvatureTensor c = surface_tensor();
  const OperatorMatrix om = operator_matrix(c, 1, 0);
  REQUIRE(om.dim() == 2);
  CHECK(om.mat(0, 0) == cx(-5.0));
  CHECK(om.mat(1, 1) == cx(-1.0));
  CHECK(om.mat(0, 1) == cx(2.0, 1.0));
  CHECK(om.mat(1, 0) == cx(2.0, -1.0));
}

TEST_CASE("operator vanishes identically at (n, 0) and (0, n)") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r) {
      const CurvatureTensor c =
          random_tensor(n, r, 77u, RandomTensorMode::hermitian);
      CHECK(operator_matrix(c, n, 0).mat.cwiseAbs().maxCoeff() == 0.0);
      CHECK(operator_matrix(c, 0, n).mat.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("operator matrix is Hermitian and linear in the form") {
  const CurvatureTensor c =
      random_tensor(2, 2, 13u, RandomTensorMode::hermitian);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      const Eigen::MatrixXcd m = operator_matrix(c, p, q).mat;
      CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
    }
  const BundleForm u = random_form(2, 2, 1, 1, 61u);
  const BundleForm v = random_form(2, 2, 1, 1, 62u);
  BundleForm uv = u;
  uv *= cx(2.0, -1.0);
  uv += v;
  BundleForm expect = apply_operator(c, u);
  expect *= cx(2.0, -1.0);
  expect += apply_operator(c, v);
  const BundleForm got = apply_operator(c, uv);
  double worst = 0.0;
  for (std::size_t s = 0; s < got.slot_count(); ++s)
    worst = std::max(worst, std::abs(got[s] - expect[s]));
  CHECK(worst <= 1e-13);

  CHECK_THROWS_AS(apply_operator(c, BundleForm(3, 2, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("quadratic form: frozen value on the projective-space tensor") {
  const CurvatureTensor c = fubini_study_tensor(2);
  BundleForm u(2, 2, 2, 1);
  u.coeff(MultiIndex(2, {1, 2}), MultiIndex(2, {1}), 1) = 1.0;
  CHECK(quadratic_form(c, u) == doctest::Approx(2.0).epsilon(1e-12));
  const cx raw = quadratic_form_value(c, u);
  CHECK(std::abs(raw.imag()) <= 1e-14);
}

TEST_CASE("quadratic form agrees with the operator pairing") {
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 2; ++r) {
      const CurvatureTensor c =
          random_tensor(n, r, 99u, RandomTensorMode::hermitian);
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
          const BundleForm u = random_form(n, r, p, q, 98u);
          const cx paired = inner_product(apply_operator(c, u), u);
          CHECK(std::abs(quadratic_form_value(c, u) - paired) <=
                1e-12 * (1.0 + std::abs(paired)));
        }
    }
}

TEST_CASE("coefficient block: frozen projective-space form and the (n, 1) identity") {
  const Eigen::MatrixXcd block = nakano_matrix(fubini_study_tensor(2));
  REQUIRE(block.rows() == 4);
  Eigen::MatrixXcd expected(4, 4);
  expected << 2, 0, 0, 0,
              0, 1, 1, 0,
              0, 1, 1, 0,
              0, 0, 0, 2;
  CHECK((block - expected).cwiseAbs().maxCoeff() == 0.0);

  const CurvatureTensor c =
      random_tensor(2, 3, 55u, RandomTensorMode::hermitian);
  const Eigen::MatrixXcd via_operator = operator_matrix(c, 2, 1).mat;
  CHECK((nakano_matrix(c) - via_operator).cwiseAbs().maxCoeff() <= 1e-14);
}
