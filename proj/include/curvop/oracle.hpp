#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "curvop/curvature.hpp"
#include "curvop/forms.hpp"

// Brute-force reference path. Forms are stored as fully antisymmetric
// coefficient tensors over ALL ordered index tuples (not just increasing
// ones) and every wedge is an explicit shuffle summation. All permutation
// signs here come from local inversion counting; nothing is shared with the
// contraction-sign conventions of the closed-form modules, so agreement
// between the two paths is evidence, not tautology. Scales like n^(p+q):
// meant for n <= 4.
namespace curvop::oracle {

// Antisymmetric (p, q)-tensor with r fiber components: component
// (a_1..a_p; b_1..b_q; lambda) for arbitrary tuples a, b in {1..n}.
class DenseForm {
 public:
  DenseForm(int n, int r, int p, int q, Fiber fiber = Fiber::primal);

  int ambient() const { return n_; }
  int rank() const { return r_; }
  int hol_degree() const { return p_; }
  int antihol_degree() const { return q_; }
  Fiber fiber() const { return fiber_; }

  std::complex<double>& at(const std::vector<int>& hol,
                           const std::vector<int>& antihol, int lambda);
  const std::complex<double>& at(const std::vector<int>& hol,
                                 const std::vector<int>& antihol,
                                 int lambda) const;

  std::size_t component_count() const { return data_.size(); }
  std::vector<std::complex<double>>& data() { return data_; }
  const std::vector<std::complex<double>>& data() const { return data_; }

  double max_abs_diff(const DenseForm& other) const;

 private:
  friend DenseForm wedge_left(const DenseForm&, const DenseForm&);
  friend DenseForm wedge_pairing(const DenseForm&, const DenseForm&);
  std::size_t tuple_offset(const std::vector<int>& hol,
                           const std::vector<int>& antihol) const;
  int n_ = 0, r_ = 0, p_ = 0, q_ = 0;
  Fiber fiber_ = Fiber::primal;
  std::vector<std::complex<double>> data_;
};

// Canonical slot form -> antisymmetric tensor (signs by inversion count of
// each tuple) and back (read off the increasing tuples).
DenseForm embed(const BundleForm& u);
BundleForm extract(const DenseForm& f);

// Wedge of a scalar (r == 1) form onto each fiber component of b. Carries
// the graded interleaving sign (-1)^(q_a * p_b).
DenseForm wedge_left(const DenseForm& a, const DenseForm& b);

// Wedge of an E-valued and an E*-valued form (either order) contracting the
// fiber pairing: sum_lambda a_lambda ^ b_lambda, a scalar-valued result.
DenseForm wedge_pairing(const DenseForm& a, const DenseForm& b);

// The Kaehler form i * sum_j dz_j ^ dzbar_j as a dense (1, 1)-tensor.
DenseForm kaehler_form(int n);

// i^(n^2) dz_1..n ^ dzbar_1..n as a dense (n, n)-tensor; equals the metric
// volume element.
DenseForm volume_element(int n);

// A linear map between canonical slot bases of two bidegrees.
struct DegreeMap {
  int n = 0, r = 0;
  int from_p = 0, from_q = 0, to_p = 0, to_q = 0;
  Eigen::MatrixXcd mat;
};

// Matrix of u -> omega ^ u from (p, q) to (p+1, q+1), built by embedding
// each basis slot and wedging. Zero-dimensional when the target overflows.
DegreeMap lefschetz_matrix(int n, int r, int p, int q);

// Adjoint of the wedge with omega: the conjugate transpose of
// lefschetz_matrix(n, r, p-1, q-1), mapping (p, q) to (p-1, q-1).
DegreeMap lambda_matrix(int n, int r, int p, int q);

// Matrix of u -> i Theta ^ u from (p, q) to (p+1, q+1) where
// i Theta = i * sum c_{j k lambda mu} dz_j ^ dzbar_k (x) (e_lambda -> e_mu).
// For forms on the dual fiber pass dual_tensor(c).
DegreeMap theta_wedge_matrix(const CurvatureTensor& c, int p, int q);

// [i Theta, Lambda] assembled literally as the difference of compositions
//   theta_wedge(p-1, q-1) . lambda(p, q)  -  lambda(p+1, q+1) . theta_wedge(p, q)
// with out-of-range degrees contributing zero blocks.
OperatorMatrix commutator_matrix(const CurvatureTensor& c, int p, int q);

}  // namespace curvop::oracle
