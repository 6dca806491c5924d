#include "curvop/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace curvop {

namespace {

using cx = std::complex<double>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_compatible(const CurvatureTensor& c, const BundleForm& u) {
  require(c.ambient() == u.ambient() && c.rank() == u.rank(),
          "curvature: tensor is (n=" + std::to_string(c.ambient()) +
              ", r=" + std::to_string(c.rank()) + ") but form is (n=" +
              std::to_string(u.ambient()) + ", r=" + std::to_string(u.rank()) +
              ")");
}

// Per-(lambda, mu) diagonal sums: over all j, and over j restricted to a
// multi-index. Both appear in the diagonal part of the operator.
struct DiagonalSums {
  int r;
  std::vector<cx> all;  // sum_j c_{j j lambda mu}
  cx& at(int lambda, int mu) {
    return all[static_cast<std::size_t>((lambda - 1) * r + (mu - 1))];
  }
  const cx& at(int lambda, int mu) const {
    return all[static_cast<std::size_t>((lambda - 1) * r + (mu - 1))];
  }
};

DiagonalSums full_diagonal(const CurvatureTensor& c) {
  DiagonalSums d{c.rank(), std::vector<cx>(
                               static_cast<std::size_t>(c.rank() * c.rank()),
                               cx(0.0, 0.0))};
  for (int lambda = 1; lambda <= c.rank(); ++lambda)
    for (int mu = 1; mu <= c.rank(); ++mu)
      for (int j = 1; j <= c.ambient(); ++j)
        d.at(lambda, mu) += c.at(j, j, lambda, mu);
  return d;
}

DiagonalSums restricted_diagonal(const CurvatureTensor& c,
                                 const MultiIndex& I) {
  DiagonalSums d{c.rank(), std::vector<cx>(
                               static_cast<std::size_t>(c.rank() * c.rank()),
                               cx(0.0, 0.0))};
  for (int lambda = 1; lambda <= c.rank(); ++lambda)
    for (int mu = 1; mu <= c.rank(); ++mu)
      for (int j : I.entries()) d.at(lambda, mu) += c.at(j, j, lambda, mu);
  return d;
}

}  // namespace

CurvatureTensor::CurvatureTensor(int n, int r) : n_(n), r_(r) {
  require(n >= 1, "curvature: base dimension must be at least 1");
  require(r >= 1, "curvature: fiber rank must be at least 1");
  c_.assign(static_cast<std::size_t>(n) * n * r * r, cx(0.0, 0.0));
}

std::size_t CurvatureTensor::index(int j, int k, int lambda, int mu) const {
  require(j >= 1 && j <= n_ && k >= 1 && k <= n_,
          "curvature: base index out of range");
  require(lambda >= 1 && lambda <= r_ && mu >= 1 && mu <= r_,
          "curvature: fiber index out of range");
  return ((static_cast<std::size_t>(j - 1) * n_ + (k - 1)) * r_ +
          (lambda - 1)) *
             static_cast<std::size_t>(r_) +
         static_cast<std::size_t>(mu - 1);
}

cx& CurvatureTensor::at(int j, int k, int lambda, int mu) {
  return c_[index(j, k, lambda, mu)];
}

const cx& CurvatureTensor::at(int j, int k, int lambda, int mu) const {
  return c_[index(j, k, lambda, mu)];
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

CurvatureTensor::SymmetryDefect CurvatureTensor::symmetry_defect() const {
  SymmetryDefect worst;
  for (int j = 1; j <= n_; ++j)
    for (int k = 1; k <= n_; ++k)
      for (int lambda = 1; lambda <= r_; ++lambda)
        for (int mu = 1; mu <= r_; ++mu) {
          const double d =
              std::abs(std::conj(at(j, k, lambda, mu)) - at(k, j, mu, lambda));
          if (d > worst.value) worst = SymmetryDefect{d, j, k, lambda, mu};
        }
  return worst;
}

CurvatureTensor validated(const CurvatureTensor& c, double tol) {
  const auto defect = c.symmetry_defect();
  const double scale = 1.0 + c.max_abs();
  if (defect.value > tol * scale) {
    std::ostringstream os;
    os << "curvature: Hermitian symmetry violated at (j=" << defect.j
       << ", k=" << defect.k << ", lambda=" << defect.lambda
       << ", mu=" << defect.mu << "): |conj(c_jklm) - c_kjml| = "
       << defect.value << " exceeds " << tol * scale;
    throw std::invalid_argument(os.str());
  }
  return c;
}

CurvatureTensor symmetrized(const CurvatureTensor& c) {
  CurvatureTensor out(c.ambient(), c.rank());
  for (int j = 1; j <= c.ambient(); ++j)
    for (int k = 1; k <= c.ambient(); ++k)
      for (int lambda = 1; lambda <= c.rank(); ++lambda)
        for (int mu = 1; mu <= c.rank(); ++mu)
          out.at(j, k, lambda, mu) =
              0.5 * (c.at(j, k, lambda, mu) +
                     std::conj(c.at(k, j, mu, lambda)));
  return out;
}

CurvatureTensor validate(const CurvatureTensor& c, double tol,
                         bool symmetrize) {
  return symmetrize ? validated(symmetrized(c), tol) : validated(c, tol);
}

CurvatureTensor dual_tensor(const CurvatureTensor& c) {
  CurvatureTensor out(c.ambient(), c.rank());
  for (int j = 1; j <= c.ambient(); ++j)
    for (int k = 1; k <= c.ambient(); ++k)
      for (int lambda = 1; lambda <= c.rank(); ++lambda)
        for (int mu = 1; mu <= c.rank(); ++mu)
          out.at(j, k, lambda, mu) = -c.at(j, k, mu, lambda);
  return out;
}

BundleForm apply_operator(const CurvatureTensor& c, const BundleForm& u) {
  require_compatible(c, u);
  const int n = u.ambient();
  const int r = u.rank();
  BundleForm out(n, r, u.hol_degree(), u.antihol_degree(), u.fiber());
  const DiagonalSums whole = full_diagonal(c);
  for (std::size_t i = 0; i < u.slot_count(); ++i) {
    const cx a = u[i];
    if (a == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(i);
    const DiagonalSums inJ = restricted_diagonal(c, lab.J);
    const DiagonalSums inK = restricted_diagonal(c, lab.K);
    for (int mu = 1; mu <= r; ++mu) {
      // Diagonal part on the same slot.
      out.coeff(lab.J, lab.K, mu) +=
          (inJ.at(lab.lambda, mu) + inK.at(lab.lambda, mu) -
           whole.at(lab.lambda, mu)) *
          a;
      // Exchange inside the antiholomorphic index: j leaves K, k enters.
      for (int j : lab.K.entries()) {
        const int ej = contraction_sign(j, lab.K);
        const MultiIndex base = lab.K.without(j);
        for (int k = 1; k <= n; ++k) {
          if (k == j || lab.K.contains(k)) continue;
          const MultiIndex M = base.with(k);
          const double sign = static_cast<double>(ej) *
                              static_cast<double>(contraction_sign(k, M));
          out.coeff(lab.J, M, mu) += c.at(j, k, lab.lambda, mu) * sign * a;
        }
      }
      // Exchange inside the holomorphic index: k leaves J, j enters.
      for (int k : lab.J.entries()) {
        const int ek = contraction_sign(k, lab.J);
        const MultiIndex base = lab.J.without(k);
        for (int j = 1; j <= n; ++j) {
          if (j == k || lab.J.contains(j)) continue;
          const MultiIndex L = base.with(j);
          const double sign = static_cast<double>(ek) *
                              static_cast<double>(contraction_sign(j, L));
          out.coeff(L, lab.K, mu) += c.at(j, k, lab.lambda, mu) * sign * a;
        }
      }
    }
  }
  return out;
}

cx quadratic_form_value(const CurvatureTensor& c, const BundleForm& u) {
  require_compatible(c, u);
  const int n = u.ambient();
  const int r = u.rank();
  const auto Js = enumerate_multi_indices(n, u.hol_degree());
  const auto Ks = enumerate_multi_indices(n, u.antihol_degree());
  const DiagonalSums whole = full_diagonal(c);
  cx total(0.0, 0.0);

  // Diagonal slot pairs.
  for (const auto& J : Js) {
    const DiagonalSums inJ = restricted_diagonal(c, J);
    for (const auto& K : Ks) {
      const DiagonalSums inK = restricted_diagonal(c, K);
      for (int lambda = 1; lambda <= r; ++lambda)
        for (int mu = 1; mu <= r; ++mu)
          total += (inJ.at(lambda, mu) + inK.at(lambda, mu) -
                    whole.at(lambda, mu)) *
                   u.coeff(J, K, lambda) * std::conj(u.coeff(J, K, mu));
    }
  }

  // Antiholomorphic exchange: pairs (K, M) with K \ j = M \ k.
  for (const auto& K : Ks) {
    for (int j : K.entries()) {
      const int ej = contraction_sign(j, K);
      const MultiIndex base = K.without(j);
      for (int k = 1; k <= n; ++k) {
        if (k == j || K.contains(k)) continue;
        const MultiIndex M = base.with(k);
        const double sign = static_cast<double>(ej) *
                            static_cast<double>(contraction_sign(k, M));
        for (const auto& J : Js)
          for (int lambda = 1; lambda <= r; ++lambda)
            for (int mu = 1; mu <= r; ++mu)
              total += c.at(j, k, lambda, mu) * sign * u.coeff(J, K, lambda) *
                       std::conj(u.coeff(J, M, mu));
      }
    }
  }

  // Holomorphic exchange: pairs (L, J) with L \ j = J \ k; the conjugated
  // slot carries J. The coefficient is c_{k j . .}: its first index is the
  // one removed from the conjugated slot. (The antiholomorphic group above
  // has the opposite orientation, first index removed from the unconjugated
  // slot; pairing the operator's exchange terms against u forces the
  // asymmetry, and each group is separately real for a Hermitian tensor, so
  // only a cross-check against the operator can tell the two orders apart.)
  for (const auto& J : Js) {
    for (int k : J.entries()) {
      const int ek = contraction_sign(k, J);
      const MultiIndex base = J.without(k);
      for (int j = 1; j <= n; ++j) {
        if (j == k || J.contains(j)) continue;
        const MultiIndex L = base.with(j);
        const double sign = static_cast<double>(ek) *
                            static_cast<double>(contraction_sign(j, L));
        for (const auto& K : Ks)
          for (int lambda = 1; lambda <= r; ++lambda)
            for (int mu = 1; mu <= r; ++mu)
              total += c.at(k, j, lambda, mu) * sign * u.coeff(L, K, lambda) *
                       std::conj(u.coeff(J, K, mu));
      }
    }
  }
  return total;
}

double quadratic_form(const CurvatureTensor& c, const BundleForm& u) {
  return quadratic_form_value(c, u).real();
}

OperatorMatrix operator_matrix(const CurvatureTensor& c, int p, int q) {
  const int n = c.ambient();
  const int r = c.rank();
  require(p >= 0 && p <= n && q >= 0 && q <= n,
          "operator matrix: bidegree out of range");
  const BundleForm probe(n, r, p, q);
  const Eigen::Index d = static_cast<Eigen::Index>(probe.slot_count());
  OperatorMatrix out{n, r, p, q, Eigen::MatrixXcd::Zero(d, d)};
  for (Eigen::Index col = 0; col < d; ++col) {
    const BundleForm image = apply_operator(
        c, basis_form(n, r, p, q, static_cast<std::size_t>(col)));
    for (Eigen::Index row = 0; row < d; ++row)
      out.mat(row, col) = image[static_cast<std::size_t>(row)];
  }
  return out;
}

Eigen::MatrixXcd nakano_matrix(const CurvatureTensor& c) {
  const int n = c.ambient();
  const int r = c.rank();
  const Eigen::Index d = static_cast<Eigen::Index>(n) * r;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int lambda = 1; lambda <= r; ++lambda)
        for (int mu = 1; mu <= r; ++mu)
          out((k - 1) * r + (mu - 1), (j - 1) * r + (lambda - 1)) =
              c.at(j, k, lambda, mu);
  return out;
}

}  // namespace curvop
