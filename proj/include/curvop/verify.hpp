#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "curvop/forms.hpp"

namespace curvop::verify {

// Outcome of one property check: worst residual over every case tried, the
// tolerance it was held to, and a short context string (failure witness or
// skip counts). Checks are deterministic per (n, r, trials, seed).
struct PropertyResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;
  double tol = 0.0;
  long cases = 0;
  std::string detail;
};

// Matrix of the conjugate-linear star on the canonical slot basis: column a
// holds the coefficients of hodge_star applied to basis form a, so the
// coefficient vector of star(u) is S * conj(x). Signed permutation, unitary.
Eigen::MatrixXcd star_matrix(int n, int r, int p, int q,
                             Fiber fiber = Fiber::primal);

// Matrices of the wedge-with-omega map (p, q) -> (p+1, q+1) and of its
// adjoint (p, q) -> (p-1, q-1), built through the closed-form forms module,
// not the brute-force path. Out-of-range degrees give zero-size blocks, so
// compositions stay dimensionally consistent at the boundary.
Eigen::MatrixXcd lefschetz_matrix(int n, int r, int p, int q);
Eigen::MatrixXcd lambda_matrix(int n, int r, int p, int q);

// Each check sweeps every bidegree 0 <= p, q <= n at the given (n, r),
// drawing `trials` seeded tensors or forms per cell where randomness is
// involved.

// Closed-form operator matrix equals the brute-force wedge/contraction
// commutator entrywise, relative to 1 + max|c|.
PropertyResult check_commutator_oracle(int n, int r, int trials,
                                       std::uint64_t seed, double tol = 1e-10);

// The direct transcription of the quadratic form agrees with <A u, u>.
PropertyResult check_quadratic_form_match(int n, int r, int trials,
                                          std::uint64_t seed,
                                          double tol = 1e-10);

// The quadratic form of a Hermitian tensor is real up to roundoff.
PropertyResult check_quadratic_form_realness(int n, int r, int trials,
                                             std::uint64_t seed,
                                             double tol = 1e-12);

// spec(A at (n-q, n-p)) equals -spec(A at (p, q)) as multisets.
PropertyResult check_duality_spectrum_negation(int n, int r, int trials,
                                               std::uint64_t seed,
                                               double tol = 1e-9);

// <A u, u> at (p, q) equals -<A tilde(u), tilde(u)> at (n-q, n-p).
PropertyResult check_duality_quadratic_negation(int n, int r, int trials,
                                                std::uint64_t seed,
                                                double tol = 1e-10);

// S conj(A_E) = A_dual S with S the star matrix: the star carries the
// operator to the dual-metric operator at complementary bidegree.
PropertyResult check_star_intertwines_operator(int n, int r, int trials,
                                               std::uint64_t seed,
                                               double tol = 1e-10);

// spec(A at (p, q) on E) equals spec(A at (n-p, n-q) on E*).
PropertyResult check_star_spectrum_match(int n, int r, int trials,
                                         std::uint64_t seed,
                                         double tol = 1e-9);

// <A^{-1} u, u> = <B^{-1} star u, star u> with B the dual-side operator;
// evaluated only on draws whose spectrum clears min_abs_eig.
PropertyResult check_star_inverse_pairing(int n, int r, int trials,
                                          std::uint64_t seed,
                                          double tol = 1e-8,
                                          double min_abs_eig = 1e-6);

// star_dual composed with star is (-1)^(p+q) times the identity.
PropertyResult check_star_involution(int n, int r, double tol = 1e-12);

// operator_matrix(c, n, 1) equals the (n r) coefficient block entrywise.
PropertyResult check_nakano_block_identity(int n, int r, int trials,
                                           std::uint64_t seed,
                                           double tol = 1e-13);

// The five sign classes of the positivity chain agree; a disagreement is
// tolerated (and reported) when the closest eigenvalue sits within 10 * tol
// of the classification boundary, and fails the check otherwise.
PropertyResult check_chain_agreement(int n, int r, int trials,
                                     std::uint64_t seed, double tol = 1e-9);

// The contraction map's matrix is the conjugate transpose of the wedge
// map's, every bidegree.
PropertyResult check_lambda_adjoint(int n, int r, double tol = 1e-12);

// [wedge, contraction] = (p + q - n) * identity on scalar forms.
PropertyResult check_lefschetz_commutator_identity(int n, double tol = 1e-12);

// Gram-built tensors never classify outside {positive, semi_positive}.
PropertyResult check_gram_closure(int n, int r, int trials,
                                  std::uint64_t seed, double tol = 1e-9);

// The projective-space example: block spectrum {0 x n(n-1)/2, 2 x n(n+1)/2},
// dual-class spectrum {1 x (n^2 - 1), n+1 x 1}, classes semi-positive (plain
// positive at n = 1) and dual positive, heuristic decomposable minimum at
// least 1 - griffiths_gap.
PropertyResult check_fubini_study(int n, double tol = 1e-9,
                                  double griffiths_gap = 1e-6);

// Every check above at one cell size, in a fixed order.
std::vector<PropertyResult> run_property_suite(int n, int r, int trials,
                                               std::uint64_t seed);

}  // namespace curvop::verify
