#include "curvop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "curvop/curvature.hpp"
#include "curvop/multiindex.hpp"
#include "curvop/oracle.hpp"
#include "curvop/positivity.hpp"
#include "curvop/rng.hpp"
#include "curvop/tensor_io.hpp"

namespace curvop::verify {

namespace {

using cx = std::complex<double>;

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::Index dim_of(int n, int r, int p, int q) {
  return static_cast<Eigen::Index>(binomial(n, p) * binomial(n, q) *
                                   static_cast<std::uint64_t>(r));
}

std::uint64_t cell_tag(int n, int p, int q) {
  return static_cast<std::uint64_t>(p * (n + 1) + q);
}

CurvatureTensor draw_tensor(int n, int r, std::uint64_t seed,
                            std::uint64_t check_tag, std::uint64_t cell,
                            int trial, RandomTensorMode mode) {
  return random_tensor(
      n, r, Rng::derive(seed, check_tag, cell, static_cast<std::uint64_t>(trial)),
      mode);
}

BundleForm draw_form(int n, int r, int p, int q, std::uint64_t seed,
                     std::uint64_t check_tag, int trial,
                     Fiber fiber = Fiber::primal) {
  return random_form(n, r, p, q,
                     Rng::derive(seed, check_tag, cell_tag(n, p, q),
                                 static_cast<std::uint64_t>(trial)),
                     fiber);
}

Eigen::VectorXcd coefficients(const BundleForm& u) {
  Eigen::VectorXcd x(static_cast<Eigen::Index>(u.slot_count()));
  for (Eigen::Index s = 0; s < x.size(); ++s)
    x(s) = u[static_cast<std::size_t>(s)];
  return x;
}

void note_worst(PropertyResult& res, double resid, const std::string& where) {
  if (resid > res.worst) {
    res.worst = resid;
    if (resid > res.tol) res.detail = where;
  }
  ++res.cases;
}

std::string cell_label(int p, int q) {
  return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")";
}

}  // namespace

Eigen::MatrixXcd star_matrix(int n, int r, int p, int q, Fiber fiber) {
  const Eigen::Index dim = dim_of(n, r, p, q);
  Eigen::MatrixXcd s(dim, dim);  // complementary bidegree has equal dimension
  for (Eigen::Index a = 0; a < dim; ++a) {
    const BundleForm out =
        hodge_star(basis_form(n, r, p, q, static_cast<std::size_t>(a), fiber));
    for (Eigen::Index row = 0; row < dim; ++row)
      s(row, a) = out[static_cast<std::size_t>(row)];
  }
  return s;
}

Eigen::MatrixXcd lefschetz_matrix(int n, int r, int p, int q) {
  const Eigen::Index from = dim_of(n, r, p, q);
  const Eigen::Index to = dim_of(n, r, p + 1, q + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(to, from);
  if (to == 0 || from == 0) return m;
  for (Eigen::Index a = 0; a < from; ++a) {
    const BundleForm out =
        lefschetz(basis_form(n, r, p, q, static_cast<std::size_t>(a)));
    for (Eigen::Index row = 0; row < to; ++row)
      m(row, a) = out[static_cast<std::size_t>(row)];
  }
  return m;
}

Eigen::MatrixXcd lambda_matrix(int n, int r, int p, int q) {
  const Eigen::Index from = dim_of(n, r, p, q);
  const Eigen::Index to = dim_of(n, r, p - 1, q - 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(to, from);
  if (to == 0 || from == 0) return m;
  for (Eigen::Index a = 0; a < from; ++a) {
    const BundleForm out =
        lambda_closed_form(basis_form(n, r, p, q, static_cast<std::size_t>(a)));
    for (Eigen::Index row = 0; row < to; ++row)
      m(row, a) = out[static_cast<std::size_t>(row)];
  }
  return m;
}

PropertyResult check_commutator_oracle(int n, int r, int trials,
                                       std::uint64_t seed, double tol) {
  PropertyResult res{"commutator-oracle-equivalence", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 1, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const Eigen::MatrixXcd a = operator_matrix(c, p, q).mat;
        const Eigen::MatrixXcd m = oracle::commutator_matrix(c, p, q).mat;
        const double resid = max_abs(a - m) / (1.0 + c.max_abs());
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_quadratic_form_match(int n, int r, int trials,
                                          std::uint64_t seed, double tol) {
  PropertyResult res{"quadratic-form-cross-check", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 2, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const BundleForm u = draw_form(n, r, p, q, seed, 3, t);
        const cx direct = quadratic_form_value(c, u);
        const cx paired = inner_product(apply_operator(c, u), u);
        const double resid =
            std::abs(direct - paired) / std::max(1.0, std::abs(paired));
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_quadratic_form_realness(int n, int r, int trials,
                                             std::uint64_t seed, double tol) {
  PropertyResult res{"quadratic-form-realness", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 4, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const BundleForm u = draw_form(n, r, p, q, seed, 5, t);
        const double resid = std::abs(quadratic_form_value(c, u).imag());
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_duality_spectrum_negation(int n, int r, int trials,
                                               std::uint64_t seed, double tol) {
  PropertyResult res{"duality-spectrum-negation", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 6, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const Eigen::VectorXd spec = hermitian_spectrum(operator_matrix(c, p, q).mat);
        const Eigen::VectorXd mirror =
            hermitian_spectrum(operator_matrix(c, n - q, n - p).mat);
        double resid = 0.0;
        const Eigen::Index d = spec.size();
        for (Eigen::Index i = 0; i < d; ++i)
          resid = std::max(resid, std::abs(mirror(i) + spec(d - 1 - i)));
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_duality_quadratic_negation(int n, int r, int trials,
                                                std::uint64_t seed, double tol) {
  PropertyResult res{"duality-quadratic-negation", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 7, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const BundleForm u = draw_form(n, r, p, q, seed, 8, t);
        const BundleForm v = tilde_map(u);
        const cx lhs = inner_product(apply_operator(c, u), u);
        const cx rhs = inner_product(apply_operator(c, v), v);
        const double resid = std::abs(lhs + rhs) / std::max(1.0, std::abs(lhs));
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_star_intertwines_operator(int n, int r, int trials,
                                               std::uint64_t seed, double tol) {
  PropertyResult res{"star-operator-intertwine", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Eigen::MatrixXcd s = star_matrix(n, r, p, q);
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 9, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const Eigen::MatrixXcd a = operator_matrix(c, p, q).mat;
        const Eigen::MatrixXcd b =
            operator_matrix(dual_tensor(c), n - p, n - q).mat;
        const double resid = max_abs(s * a.conjugate() - b * s);
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
    }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_star_spectrum_match(int n, int r, int trials,
                                         std::uint64_t seed, double tol) {
  PropertyResult res{"star-spectrum-match", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 10, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const Eigen::VectorXd spec =
            hermitian_spectrum(operator_matrix(c, p, q).mat);
        const Eigen::VectorXd dual_spec = hermitian_spectrum(
            operator_matrix(dual_tensor(c), n - p, n - q).mat);
        const double resid = (spec - dual_spec).cwiseAbs().maxCoeff();
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_star_inverse_pairing(int n, int r, int trials,
                                          std::uint64_t seed, double tol,
                                          double min_abs_eig) {
  PropertyResult res{"star-inverse-pairing", true, 0.0, tol, 0, ""};
  long skipped = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Eigen::MatrixXcd s = star_matrix(n, r, p, q);
      for (int t = 0; t < trials; ++t) {
        const CurvatureTensor c = draw_tensor(n, r, seed, 11, cell_tag(n, p, q),
                                              t, RandomTensorMode::hermitian);
        const Eigen::MatrixXcd a = operator_matrix(c, p, q).mat;
        if (hermitian_spectrum(a).cwiseAbs().minCoeff() <= min_abs_eig) {
          ++skipped;
          continue;
        }
        const Eigen::MatrixXcd b =
            operator_matrix(dual_tensor(c), n - p, n - q).mat;
        const Eigen::VectorXcd x =
            coefficients(draw_form(n, r, p, q, seed, 12, t));
        const Eigen::VectorXcd y = s * x.conjugate();
        const cx lhs = x.dot(a.colPivHouseholderQr().solve(x));
        const cx rhs = y.dot(b.colPivHouseholderQr().solve(y));
        const double resid = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
        note_worst(res, resid, cell_label(p, q) + " trial " + std::to_string(t));
      }
    }
  if (skipped > 0)
    res.detail +=
        (res.detail.empty() ? "" : "; ") + std::to_string(skipped) +
        " draw(s) skipped for near-singular spectrum";
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_star_involution(int n, int r, double tol) {
  PropertyResult res{"star-involution", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Eigen::MatrixXcd s_primal = star_matrix(n, r, p, q, Fiber::primal);
      const Eigen::MatrixXcd s_dual =
          star_matrix(n, r, n - p, n - q, Fiber::dual);
      const Eigen::MatrixXcd round_trip = s_dual * s_primal.conjugate();
      const Eigen::Index d = round_trip.rows();
      const cx sign(parity_sign(p + q), 0.0);
      const double resid =
          max_abs(round_trip - sign * Eigen::MatrixXcd::Identity(d, d));
      note_worst(res, resid, cell_label(p, q));
    }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_nakano_block_identity(int n, int r, int trials,
                                           std::uint64_t seed, double tol) {
  PropertyResult res{"nakano-block-identity", true, 0.0, tol, 0, ""};
  for (int t = 0; t < trials; ++t) {
    const CurvatureTensor c =
        draw_tensor(n, r, seed, 13, 0, t, RandomTensorMode::hermitian);
    const double resid =
        max_abs(operator_matrix(c, n, 1).mat - nakano_matrix(c));
    note_worst(res, resid, "trial " + std::to_string(t));
  }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_chain_agreement(int n, int r, int trials,
                                     std::uint64_t seed, double tol) {
  // A class disagreement is only a failure when the smallest eigenvalue
  // margin among the chain members decisively clears the tolerance band.
  PropertyResult res{"positivity-chain-agreement", true, 0.0, 10.0 * tol, 0, ""};
  long soft = 0;
  for (int t = 0; t < trials; ++t) {
    const RandomTensorMode mode = (t % 2 == 0) ? RandomTensorMode::hermitian
                                               : RandomTensorMode::gram_psd;
    const CurvatureTensor c = draw_tensor(n, r, seed, 14, 0, t, mode);
    const ChainReport rep = duality_chain_report(c, tol);
    ++res.cases;
    if (rep.chain_consistent) continue;
    if (rep.boundary_gap <= 10.0 * tol) {
      ++soft;
      res.worst = std::max(res.worst, rep.boundary_gap);
      continue;
    }
    res.pass = false;
    res.worst = std::max(res.worst, rep.boundary_gap);
    if (res.detail.empty() && !rep.violations.empty())
      res.detail = "trial " + std::to_string(t) + ": " + rep.violations.front();
  }
  if (soft > 0)
    res.detail += (res.detail.empty() ? "" : "; ") + std::to_string(soft) +
                  " boundary-band disagreement(s) tolerated";
  return res;
}

PropertyResult check_lambda_adjoint(int n, int r, double tol) {
  PropertyResult res{"lambda-lefschetz-adjoint", true, 0.0, tol, 0, ""};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Eigen::MatrixXcd lam = lambda_matrix(n, r, p, q);
      const Eigen::MatrixXcd lef_adjoint =
          lefschetz_matrix(n, r, p - 1, q - 1).adjoint();
      const double resid = max_abs(lam - lef_adjoint);
      note_worst(res, resid, cell_label(p, q));
    }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_lefschetz_commutator_identity(int n, double tol) {
  PropertyResult res{"lefschetz-commutator-identity", true, 0.0, tol, 0, ""};
  const int r = 1;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Eigen::Index d = dim_of(n, r, p, q);
      // Zero-size factors at the boundary degrees collapse to zero blocks.
      const Eigen::MatrixXcd down_up =
          lefschetz_matrix(n, r, p - 1, q - 1) * lambda_matrix(n, r, p, q);
      const Eigen::MatrixXcd up_down =
          lambda_matrix(n, r, p + 1, q + 1) * lefschetz_matrix(n, r, p, q);
      const cx weight(p + q - n, 0.0);
      const double resid = max_abs(down_up - up_down -
                                   weight * Eigen::MatrixXcd::Identity(d, d));
      note_worst(res, resid, cell_label(p, q));
    }
  res.pass = res.worst <= tol;
  return res;
}

PropertyResult check_gram_closure(int n, int r, int trials, std::uint64_t seed,
                                  double tol) {
  PropertyResult res{"gram-tensor-closure", true, 0.0, tol, 0, ""};
  for (int t = 0; t < trials; ++t) {
    const CurvatureTensor c =
        draw_tensor(n, r, seed, 15, 0, t, RandomTensorMode::gram_psd);
    const PositivityReport rep = nakano_class(c, tol);
    const double scale = std::max(1.0, rep.spectrum.cwiseAbs().maxCoeff());
    const double resid = std::max(0.0, -rep.spectrum(0) / scale);
    note_worst(res, resid, "trial " + std::to_string(t));
    if (rep.cone != Cone::positive && rep.cone != Cone::semi_positive) {
      res.pass = false;
      if (res.detail.empty())
        res.detail = "trial " + std::to_string(t) + " classified " +
                     cone_name(rep.cone);
    }
  }
  if (res.worst > tol) res.pass = false;
  return res;
}

PropertyResult check_fubini_study(int n, double tol, double griffiths_gap) {
  PropertyResult res{"fubini-study-example", true, 0.0, tol, 0, ""};
  const CurvatureTensor c = fubini_study_tensor(n);
  std::ostringstream why;

  const PositivityReport nak = nakano_class(c, tol);
  const Eigen::Index zeros = static_cast<Eigen::Index>(n) * (n - 1) / 2;
  Eigen::VectorXd expected(nak.spectrum.size());
  expected.head(zeros).setZero();
  expected.tail(expected.size() - zeros).setConstant(2.0);
  double resid = (nak.spectrum - expected).cwiseAbs().maxCoeff();
  note_worst(res, resid, "block spectrum");
  const Cone expected_cone = (n == 1) ? Cone::positive : Cone::semi_positive;
  if (nak.cone != expected_cone) {
    res.pass = false;
    why << "block classified " << cone_name(nak.cone) << "; ";
  }

  const PositivityReport dual = dual_nakano_class(c, tol);
  Eigen::VectorXd dual_expected(dual.spectrum.size());
  dual_expected.head(dual_expected.size() - 1).setConstant(1.0);
  dual_expected(dual_expected.size() - 1) = n + 1.0;
  resid = (dual.spectrum - dual_expected).cwiseAbs().maxCoeff();
  note_worst(res, resid, "dual-class spectrum");
  if (dual.cone != Cone::positive) {
    res.pass = false;
    why << "dual class " << cone_name(dual.cone) << "; ";
  }

  const GriffithsEstimate g = griffiths_min(c);
  ++res.cases;
  if (g.value < 1.0 - griffiths_gap) {
    res.pass = false;
    why << "griffiths heuristic " << g.value << " below " << 1.0 - griffiths_gap
        << "; ";
  }

  if (res.worst > tol) res.pass = false;
  res.detail = why.str();
  if (res.detail.empty())
    res.detail = "griffiths heuristic min " + std::to_string(g.value);
  return res;
}

std::vector<PropertyResult> run_property_suite(int n, int r, int trials,
                                               std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(check_commutator_oracle(n, r, trials, seed));
  out.push_back(check_quadratic_form_match(n, r, trials, seed));
  out.push_back(check_quadratic_form_realness(n, r, trials, seed));
  out.push_back(check_duality_spectrum_negation(n, r, trials, seed));
  out.push_back(check_duality_quadratic_negation(n, r, trials, seed));
  out.push_back(check_star_intertwines_operator(n, r, trials, seed));
  out.push_back(check_star_spectrum_match(n, r, trials, seed));
  out.push_back(check_star_inverse_pairing(n, r, trials, seed));
  out.push_back(check_star_involution(n, r));
  out.push_back(check_nakano_block_identity(n, r, trials, seed));
  out.push_back(check_chain_agreement(n, r, trials, seed));
  out.push_back(check_lambda_adjoint(n, r));
  out.push_back(check_lefschetz_commutator_identity(n));
  out.push_back(check_gram_closure(n, r, trials, seed));
  out.push_back(check_fubini_study(n));
  return out;
}

}  // namespace curvop::verify
