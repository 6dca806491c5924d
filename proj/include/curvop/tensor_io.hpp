#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "curvop/curvature.hpp"
#include "curvop/forms.hpp"

namespace curvop {

// Line-oriented tensor file, version 1:
//   curvop-tensor v1
//   n <int>
//   r <int>
//   c <j> <k> <lambda> <mu> <re> <im>
// '#' starts a comment, blank lines are skipped, unlisted entries are zero,
// duplicate (j, k, lambda, mu) records are errors. Values round-trip exactly
// (written with 17 significant digits). After reading, Hermitian symmetry is
// enforced within symmetry_tol (or repaired first when symmetrize is set).
struct TensorReadOptions {
  bool symmetrize = false;
  double symmetry_tol = 1e-12;
};

CurvatureTensor read_tensor(std::istream& in, const TensorReadOptions& opt = {});
CurvatureTensor read_tensor_file(const std::string& path,
                                 const TensorReadOptions& opt = {});
void write_tensor(std::ostream& out, const CurvatureTensor& c);

// Form file, version 1:
//   curvop-form v1
//   n <int>
//   r <int>
//   p <int>
//   q <int>
//   fiber E          (or "fiber E*"; optional, defaults to E)
//   u [1,3] [2] <lambda> <re> <im>
// The bracket lists are the increasing holomorphic / antiholomorphic indices
// ("[]" for degree zero). Duplicate slots are errors.
BundleForm read_form(std::istream& in);
BundleForm read_form_file(const std::string& path);
void write_form(std::ostream& out, const BundleForm& u);

// The rank-n tensor with c_{j k lambda mu} = delta_jk delta_lm + delta_jm
// delta_kl: the curvature coefficients of the Fubini-Study metric on the
// tangent bundle of projective space, in coordinates unitary at the point.
// Block spectrum {0, 2}; dual block spectrum {-1, -(n+1)}.
CurvatureTensor fubini_study_tensor(int n);

enum class RandomTensorMode {
  hermitian,  // iid complex normal entries, then Hermitian-symmetrized
  gram_psd    // coefficient block V V^H for a complex normal V; block psd
};

CurvatureTensor random_tensor(int n, int r, std::uint64_t seed,
                              RandomTensorMode mode);

BundleForm random_form(int n, int r, int p, int q, std::uint64_t seed,
                       Fiber fiber = Fiber::primal);

// Shortest-exact decimal for doubles used by both writers.
std::string format_double(double v);

}  // namespace curvop
