#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "curvop/multiindex.hpp"

namespace curvop {

// Which bundle the fiber slot of a form refers to: E itself or its dual E*.
// The coefficient calculus is identical for both; the flag keeps maps that
// change the fiber (the conjugate-linear star) honest at the type level.
enum class Fiber { primal, dual };

enum class Factor { holomorphic, antiholomorphic };

const char* fiber_name(Fiber f);

// Bundle-valued (p, q)-form at a point, stored densely over the canonical
// slot basis dz_J ^ dzbar_K (x) e_lambda with J, K increasing multi-indices.
// Slot order is lexicographic in (J, K) with the fiber index fastest, i.e.
// slot = (rank(J) * C(n,q) + rank(K)) * r + (lambda - 1). The basis is
// orthonormal for the inner product below; all indices are 1-based.
class BundleForm {
 public:
  BundleForm(int n, int r, int p, int q, Fiber fiber = Fiber::primal);

  int ambient() const { return n_; }
  int rank() const { return r_; }
  int hol_degree() const { return p_; }
  int antihol_degree() const { return q_; }
  Fiber fiber() const { return fiber_; }

  std::size_t slot_count() const { return data_.size(); }
  std::size_t slot(const MultiIndex& J, const MultiIndex& K, int lambda) const;

  struct SlotLabel {
    MultiIndex J;
    MultiIndex K;
    int lambda;
  };
  SlotLabel decode(std::size_t slot) const;

  std::complex<double>& coeff(const MultiIndex& J, const MultiIndex& K,
                              int lambda);
  const std::complex<double>& coeff(const MultiIndex& J, const MultiIndex& K,
                                    int lambda) const;
  std::complex<double>& operator[](std::size_t s) { return data_[s]; }
  const std::complex<double>& operator[](std::size_t s) const {
    return data_[s];
  }
  const std::vector<std::complex<double>>& data() const { return data_; }

  BundleForm& operator+=(const BundleForm& other);
  BundleForm& operator-=(const BundleForm& other);
  BundleForm& operator*=(std::complex<double> scalar);

 private:
  int n_ = 0, r_ = 0, p_ = 0, q_ = 0;
  Fiber fiber_ = Fiber::primal;
  std::vector<std::complex<double>> data_;
};

// Form with a single unit coefficient in the given slot.
BundleForm basis_form(int n, int r, int p, int q, std::size_t slot,
                      Fiber fiber = Fiber::primal);

bool same_shape(const BundleForm& u, const BundleForm& v);

// Hermitian inner product of same-shape forms; conjugate-linear in v.
std::complex<double> inner_product(const BundleForm& u, const BundleForm& v);
double norm(const BundleForm& u);

// Interior product against the s-th coordinate slot. Contracting the
// antiholomorphic factor crosses the p holomorphic factors first and so
// carries an extra (-1)^p. Contracting a degree that is already zero gives
// the zero form rather than an error.
BundleForm interior_product(int s, Factor which, const BundleForm& u);

// Wedge with the Kaehler form: u -> omega ^ u where
// omega = i * sum_j dz_j ^ dzbar_j. Raises bidegree by (1, 1); if that
// overflows n the result is the zero form.
BundleForm lefschetz(const BundleForm& u);

// Adjoint of lefschetz, assembled from the closed contraction formula
//   i * (-1)^p * sum_s u_{J,K,lambda} (contract s out of J and K),
// not by transposing a matrix. Lowers bidegree by (1, 1).
BundleForm lambda_closed_form(const BundleForm& u);

// Conjugate-linear bundle-valued Hodge star determined by
//   alpha ^ star(beta) = <alpha, beta> dV,   dV = prod_j (i dz_j ^ dzbar_j).
// Sends (p, q) on fiber F to (n-p, n-q) on the dual fiber with coefficients
//   conj(u_{J,K,lambda}) * i^(n^2) * (-1)^(q(n-p))
//       * complement_sign(J) * complement_sign(K).
BundleForm hodge_star(const BundleForm& u);

// Inverse of hodge_star restricted to original bidegree (p, q): the input u
// must have bidegree (n-p, n-q). Uses star_dual . star = (-1)^(p+q).
BundleForm star_inverse(const BundleForm& u, int p, int q);

// Linear degree-reversing duality map: sends dz_J ^ dzbar_K (x) e_lambda to
// duality_sign(J) * duality_sign(K) * dz_{K^C} ^ dzbar_{J^C} (x) e_lambda,
// a (n-q, n-p)-form on the same fiber. Isometric.
BundleForm tilde_map(const BundleForm& u);

// i^k for k mod 4; the volume-normalization constant is i^(n^2).
std::complex<double> i_power(long k);

// (-1)^k with a safe reduction for negative k.
int parity_sign(long k);

}  // namespace curvop
