#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "curvop/forms.hpp"
#include "curvop/multiindex.hpp"

namespace curvop {

// Pointwise curvature coefficients c_{j k lambda mu} of a Hermitian metric on
// a rank-r bundle over an n-dimensional base, written against coordinates
// that are orthonormal at the point. Hermitian symmetry means
// conj(c_{j k lambda mu}) = c_{k j mu lambda}. Indices are 1-based.
class CurvatureTensor {
 public:
  CurvatureTensor(int n, int r);

  int ambient() const { return n_; }
  int rank() const { return r_; }

  std::complex<double>& at(int j, int k, int lambda, int mu);
  const std::complex<double>& at(int j, int k, int lambda, int mu) const;

  double max_abs() const;

  struct SymmetryDefect {
    double value = 0.0;
    int j = 1, k = 1, lambda = 1, mu = 1;
  };
  // Worst |conj(c_{j k lambda mu}) - c_{k j mu lambda}| and where it occurs.
  SymmetryDefect symmetry_defect() const;

 private:
  std::size_t index(int j, int k, int lambda, int mu) const;
  int n_ = 0, r_ = 0;
  std::vector<std::complex<double>> c_;
};

// Returns c unchanged if the Hermitian-symmetry defect is within
// tol * (1 + max_abs); otherwise throws naming the worst quadruple.
CurvatureTensor validated(const CurvatureTensor& c, double tol = 1e-12);

// Hermitian part: (c_{j k lambda mu} + conj(c_{k j mu lambda})) / 2.
CurvatureTensor symmetrized(const CurvatureTensor& c);

// validated(c) or validated(symmetrized(c)) depending on the flag.
CurvatureTensor validate(const CurvatureTensor& c, double tol,
                         bool symmetrize);

// Curvature coefficients of the dual metric on E*:
// c*_{j k lambda mu} = -c_{j k mu lambda}. Involution.
CurvatureTensor dual_tensor(const CurvatureTensor& c);

// The commutator operator [i Theta, Lambda] on (p, q)-forms, assembled from
// its closed form: a diagonal part
//   (sum_{j in J} + sum_{j in K} - sum_j) c_{j j lambda mu} on slot (J, K)
// plus single-index exchanges inside K and inside J with contraction signs.
// For forms on the dual fiber pass dual_tensor(c); the formula is fiber-blind.
BundleForm apply_operator(const CurvatureTensor& c, const BundleForm& u);

// Value <[i Theta, Lambda] u, u> computed by direct transcription of the
// closed quadratic form (three sums over slot pairs), never by calling
// apply_operator. The result of an exactly Hermitian tensor is real up to
// roundoff; callers needing the roundoff imaginary part use the _value form.
std::complex<double> quadratic_form_value(const CurvatureTensor& c,
                                          const BundleForm& u);
double quadratic_form(const CurvatureTensor& c, const BundleForm& u);

struct OperatorMatrix {
  int n = 0, r = 0, p = 0, q = 0;
  Eigen::MatrixXcd mat;
  Eigen::Index dim() const { return mat.rows(); }
};

// Matrix of apply_operator on the canonical slot basis: column a holds the
// coefficients of the operator applied to basis form a.
OperatorMatrix operator_matrix(const CurvatureTensor& c, int p, int q);

// The (n r) x (n r) coefficient block: with slots flattened as
// a = (j - 1) r + lambda, entry (row (k, mu), col (j, lambda)) = c_{j k
// lambda mu}, so that x^H N x is the curvature pairing on decomposable
// tensors. Equal (entrywise) to operator_matrix(c, n, 1) under the slot
// identification (N, {k}, lambda) <-> (k, lambda).
Eigen::MatrixXcd nakano_matrix(const CurvatureTensor& c);

}  // namespace curvop
