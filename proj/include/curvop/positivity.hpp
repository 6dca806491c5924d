#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "curvop/curvature.hpp"

namespace curvop {

// Sign class of a Hermitian spectrum relative to a scaled tolerance band.
enum class Cone {
  positive,
  semi_positive,
  zero,
  semi_negative,
  negative,
  indefinite
};

const char* cone_name(Cone c);
Cone negate_cone(Cone c);

// Ascending eigenvalues of a Hermitian matrix. The input may be Hermitian
// only up to roundoff: it is symmetrized before solving, but a defect beyond
// herm_tol * max(1, max|entry|) is an input error.
Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& m,
                                   double herm_tol = 1e-12);

// Classification with band tol * scale, scale = max(1, max |eigenvalue|):
// positive when every eigenvalue clears the band upward, negative downward,
// zero when all sit inside, semi_* when the spectrum touches the band from
// one side only, indefinite otherwise. Empty spectra classify as zero.
Cone classify(const Eigen::VectorXd& ascending_spectrum, double tol = 1e-9);

struct PositivityReport {
  std::string name;
  int p = -1, q = -1;  // bidegree of the underlying operator when meaningful
  Fiber fiber = Fiber::primal;
  Eigen::VectorXd spectrum;  // ascending; already negated for dual reports
  Cone cone = Cone::zero;
  double tol = 1e-9;
};

// Cone of the (n r) x (n r) coefficient block; equivalent to the cone of the
// operator on (n, 1)-forms.
PositivityReport nakano_class(const CurvatureTensor& c, double tol = 1e-9);

// Dual-metric positivity: classify the negated spectrum of the coefficient
// block of dual_tensor(c), so `positive` here means the dual metric's block
// is negative definite.
PositivityReport dual_nakano_class(const CurvatureTensor& c, double tol = 1e-9);

// Heuristic minimum of the curvature pairing over unit decomposables
// xi (x) s: alternating smallest-eigenvector iteration with seeded random
// restarts. Deterministic for fixed (restarts, iterations, seed). An upper
// bound for the true minimum; reported as a heuristic everywhere.
struct GriffithsEstimate {
  double value = 0.0;
  Eigen::VectorXcd direction;  // base vector, unit
  Eigen::VectorXcd section;    // fiber vector, unit
  int restarts = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
};
GriffithsEstimate griffiths_min(const CurvatureTensor& c, int restarts = 8,
                                int iterations = 60, std::uint64_t seed = 1);

// Spectra of the commutator operator across all bidegrees together with the
// consistency facts tying them: the degree-reversing duality map negates
// spectra, the star map carries them to the dual metric, and the sign class
// at (n, 1) determines the classes at (0, n-1) on E* and, negated, at
// (n-1, 0) and (1, n) on E*.
struct ChainReport {
  int n = 0, r = 0;
  double tol = 1e-9;

  struct Cell {
    int p = 0, q = 0;
    Eigen::VectorXd spectrum;  // operator on E at (p, q), ascending
    Cone cone = Cone::zero;
    double negation_residual = 0.0;  // vs -spectrum at (n-q, n-p) on E
    double duality_residual = 0.0;   // vs spectrum at (n-p, n-q) on E*
  };
  std::vector<Cell> cells;  // all bidegrees, lexicographic in (p, q)
  double max_negation_residual = 0.0;
  double max_duality_residual = 0.0;

  // Entrywise residual between the (n, 1) operator matrix and the
  // coefficient block; zero up to roundoff by construction.
  double nakano_block_residual = 0.0;

  struct Member {
    PositivityReport report;
    bool negated = false;  // cone expected to be the negation of the block's
  };
  std::vector<Member> members;  // block, (n,1) E, (0,n-1) E*, (n-1,0) E, (1,n) E*

  bool chain_consistent = true;
  // Smallest |eigenvalue| / scale over the members; when classes disagree
  // this says whether the disagreement sits at the tolerance boundary.
  double boundary_gap = 0.0;
  std::vector<std::string> violations;
};
ChainReport duality_chain_report(const CurvatureTensor& c, double tol = 1e-9);

}  // namespace curvop
