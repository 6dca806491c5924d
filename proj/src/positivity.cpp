#include "curvop/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "curvop/rng.hpp"

namespace curvop {

namespace {

using cx = std::complex<double>;

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::VectorXcd random_unit(Rng& rng, Eigen::Index dim) {
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  const double nrm = v.norm();
  if (nrm == 0.0) {
    v.setZero();
    v(0) = cx(1.0, 0.0);
    return v;
  }
  return v / nrm;
}

// theta(xi (x) s) = xi^H C(s) xi with C(s)(k, j) = sum c_{j k l m} s_l
// conj(s_m); Hermitian for a Hermitian tensor.
Eigen::MatrixXcd base_matrix(const CurvatureTensor& c,
                             const Eigen::VectorXcd& s) {
  const int n = c.ambient();
  const int r = c.rank();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      cx acc(0.0, 0.0);
      for (int lambda = 1; lambda <= r; ++lambda)
        for (int mu = 1; mu <= r; ++mu)
          acc += c.at(j, k, lambda, mu) * s(lambda - 1) * std::conj(s(mu - 1));
      m(k - 1, j - 1) = acc;
    }
  return m;
}

// theta(xi (x) s) = s^H D(xi) s with D(xi)(mu, lambda) = sum c_{j k l m}
// xi_j conj(xi_k).
Eigen::MatrixXcd fiber_matrix(const CurvatureTensor& c,
                              const Eigen::VectorXcd& xi) {
  const int n = c.ambient();
  const int r = c.rank();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  for (int lambda = 1; lambda <= r; ++lambda)
    for (int mu = 1; mu <= r; ++mu) {
      cx acc(0.0, 0.0);
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          acc += c.at(j, k, lambda, mu) * xi(j - 1) * std::conj(xi(k - 1));
      m(mu - 1, lambda - 1) = acc;
    }
  return m;
}

double pairing_value(const CurvatureTensor& c, const Eigen::VectorXcd& xi,
                     const Eigen::VectorXcd& s) {
  cx acc(0.0, 0.0);
  for (int j = 1; j <= c.ambient(); ++j)
    for (int k = 1; k <= c.ambient(); ++k)
      for (int lambda = 1; lambda <= c.rank(); ++lambda)
        for (int mu = 1; mu <= c.rank(); ++mu)
          acc += c.at(j, k, lambda, mu) * xi(j - 1) * s(lambda - 1) *
                 std::conj(xi(k - 1)) * std::conj(s(mu - 1));
  return acc.real();
}

Eigen::VectorXcd smallest_eigenvector(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (m + m.adjoint()));
  return solver.eigenvectors().col(0);
}

double spectrum_scale(const Eigen::VectorXd& spec) {
  double m = 1.0;
  for (Eigen::Index i = 0; i < spec.size(); ++i)
    m = std::max(m, std::abs(spec(i)));
  return m;
}

}  // namespace

const char* cone_name(Cone c) {
  switch (c) {
    case Cone::positive:
      return "positive";
    case Cone::semi_positive:
      return "semi_positive";
    case Cone::zero:
      return "zero";
    case Cone::semi_negative:
      return "semi_negative";
    case Cone::negative:
      return "negative";
    default:
      return "indefinite";
  }
}

Cone negate_cone(Cone c) {
  switch (c) {
    case Cone::positive:
      return Cone::negative;
    case Cone::semi_positive:
      return Cone::semi_negative;
    case Cone::negative:
      return Cone::positive;
    case Cone::semi_negative:
      return Cone::semi_positive;
    default:
      return c;  // zero and indefinite are self-dual
  }
}

Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& m,
                                   double herm_tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("spectrum: matrix must be square");
  if (m.rows() == 0) return Eigen::VectorXd();
  const double defect = max_abs(m - m.adjoint());
  const double scale = std::max(1.0, max_abs(m));
  if (defect > herm_tol * scale) {
    std::ostringstream os;
    os << "spectrum: matrix is not Hermitian: defect " << defect
       << " exceeds " << herm_tol * scale;
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (m + m.adjoint()));
  return solver.eigenvalues();
}

Cone classify(const Eigen::VectorXd& spec, double tol) {
  if (spec.size() == 0) return Cone::zero;
  const double band = tol * spectrum_scale(spec);
  const double lo = spec(0);
  const double hi = spec(spec.size() - 1);
  if (std::abs(lo) <= band && std::abs(hi) <= band) return Cone::zero;
  if (lo > band) return Cone::positive;
  if (hi < -band) return Cone::negative;
  if (lo >= -band) return Cone::semi_positive;
  if (hi <= band) return Cone::semi_negative;
  return Cone::indefinite;
}

PositivityReport nakano_class(const CurvatureTensor& c, double tol) {
  PositivityReport rep;
  rep.name = "nakano";
  rep.p = c.ambient();
  rep.q = 1;
  rep.fiber = Fiber::primal;
  rep.spectrum = hermitian_spectrum(nakano_matrix(c));
  rep.cone = classify(rep.spectrum, tol);
  rep.tol = tol;
  return rep;
}

PositivityReport dual_nakano_class(const CurvatureTensor& c, double tol) {
  PositivityReport rep;
  rep.name = "dual_nakano";
  rep.p = c.ambient();
  rep.q = 1;
  rep.fiber = Fiber::dual;
  Eigen::VectorXd dual_spec = hermitian_spectrum(nakano_matrix(dual_tensor(c)));
  // Negate and re-sort ascending so classify() reads it directly.
  rep.spectrum = (-dual_spec).reverse();
  rep.cone = classify(rep.spectrum, tol);
  rep.tol = tol;
  return rep;
}

GriffithsEstimate griffiths_min(const CurvatureTensor& c, int restarts,
                                int iterations, std::uint64_t seed) {
  if (restarts < 1 || iterations < 1)
    throw std::invalid_argument("griffiths_min: counts must be positive");
  const int n = c.ambient();
  const int r = c.rank();
  GriffithsEstimate best;
  best.restarts = restarts;
  best.iterations = iterations;
  best.seed = seed;
  best.value = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < restarts; ++attempt) {
    Rng rng(Rng::derive(seed, 0x67726966, static_cast<std::uint64_t>(attempt)));
    Eigen::VectorXcd s = random_unit(rng, r);
    Eigen::VectorXcd xi = random_unit(rng, n);
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iterations; ++it) {
      xi = smallest_eigenvector(base_matrix(c, s));
      s = smallest_eigenvector(fiber_matrix(c, xi));
      const double value = pairing_value(c, xi, s);
      if (std::abs(prev - value) <= 1e-14 * (1.0 + std::abs(value))) break;
      prev = value;
    }
    const double value = pairing_value(c, xi, s);
    if (value < best.value) {
      best.value = value;
      best.direction = xi;
      best.section = s;
    }
  }
  return best;
}

ChainReport duality_chain_report(const CurvatureTensor& c, double tol) {
  const int n = c.ambient();
  ChainReport rep;
  rep.n = n;
  rep.r = c.rank();
  rep.tol = tol;

  // Spectra of the operator on E and on E* at every bidegree.
  const CurvatureTensor dual = dual_tensor(c);
  std::vector<std::vector<Eigen::VectorXd>> on_e(
      static_cast<std::size_t>(n + 1)),
      on_dual(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<Eigen::MatrixXcd>> mats_e(
      static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) {
    on_e[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(n + 1));
    on_dual[static_cast<std::size_t>(p)].resize(
        static_cast<std::size_t>(n + 1));
    mats_e[static_cast<std::size_t>(p)].resize(
        static_cast<std::size_t>(n + 1));
    for (int q = 0; q <= n; ++q) {
      mats_e[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          operator_matrix(c, p, q).mat;
      on_e[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          hermitian_spectrum(
              mats_e[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
      on_dual[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          hermitian_spectrum(operator_matrix(dual, p, q).mat);
    }
  }

  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      ChainReport::Cell cell;
      cell.p = p;
      cell.q = q;
      cell.spectrum = on_e[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      cell.cone = classify(cell.spectrum, tol);
      const Eigen::VectorXd& rev =
          on_e[static_cast<std::size_t>(n - q)][static_cast<std::size_t>(n - p)];
      double worst = 0.0;
      for (Eigen::Index i = 0; i < cell.spectrum.size(); ++i)
        worst = std::max(
            worst, std::abs(rev(rev.size() - 1 - i) + cell.spectrum(i)));
      cell.negation_residual = worst;
      const Eigen::VectorXd& star_side =
          on_dual[static_cast<std::size_t>(n - p)][static_cast<std::size_t>(n - q)];
      worst = 0.0;
      for (Eigen::Index i = 0; i < cell.spectrum.size(); ++i)
        worst = std::max(worst, std::abs(star_side(i) - cell.spectrum(i)));
      cell.duality_residual = worst;
      rep.max_negation_residual =
          std::max(rep.max_negation_residual, cell.negation_residual);
      rep.max_duality_residual =
          std::max(rep.max_duality_residual, cell.duality_residual);
      rep.cells.push_back(std::move(cell));
    }

  rep.nakano_block_residual = max_abs(
      mats_e[static_cast<std::size_t>(n)][static_cast<std::size_t>(1)] -
      nakano_matrix(c));

  auto member = [&](const char* name, int p, int q, Fiber fiber,
                    bool negated) {
    ChainReport::Member m;
    m.report.name = name;
    m.report.p = p;
    m.report.q = q;
    m.report.fiber = fiber;
    m.report.spectrum =
        fiber == Fiber::primal
            ? on_e[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]
            : on_dual[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    m.report.cone = classify(m.report.spectrum, tol);
    m.report.tol = tol;
    m.negated = negated;
    return m;
  };

  ChainReport::Member block;
  block.report = nakano_class(c, tol);
  block.negated = false;
  rep.members.push_back(block);
  rep.members.push_back(member("operator (n,1) on E", n, 1, Fiber::primal, false));
  rep.members.push_back(
      member("operator (0,n-1) on E*", 0, n - 1, Fiber::dual, false));
  rep.members.push_back(
      member("operator (n-1,0) on E", n - 1, 0, Fiber::primal, true));
  rep.members.push_back(member("operator (1,n) on E*", 1, n, Fiber::dual, true));

  const Cone reference = rep.members.front().report.cone;
  rep.boundary_gap = std::numeric_limits<double>::infinity();
  for (const auto& m : rep.members) {
    const Eigen::VectorXd& spec = m.report.spectrum;
    double nearest = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < spec.size(); ++i)
      nearest = std::min(nearest, std::abs(spec(i)));
    rep.boundary_gap =
        std::min(rep.boundary_gap, nearest / spectrum_scale(spec));
    const Cone effective =
        m.negated ? negate_cone(m.report.cone) : m.report.cone;
    if (effective != reference) {
      rep.chain_consistent = false;
      std::ostringstream os;
      os << m.report.name << " classifies as " << cone_name(m.report.cone)
         << (m.negated ? " (negated relation)" : "") << " but the block is "
         << cone_name(reference);
      rep.violations.push_back(os.str());
    }
  }
  if (!std::isfinite(rep.boundary_gap)) rep.boundary_gap = 0.0;
  return rep;
}

}  // namespace curvop
