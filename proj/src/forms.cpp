#include "curvop/forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvop {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

using cx = std::complex<double>;

}  // namespace

const char* fiber_name(Fiber f) {
  return f == Fiber::primal ? "E" : "E*";
}

BundleForm::BundleForm(int n, int r, int p, int q, Fiber fiber)
    : n_(n), r_(r), p_(p), q_(q), fiber_(fiber) {
  require(n >= 1, "form: ambient dimension must be at least 1");
  require(r >= 1, "form: fiber rank must be at least 1");
  require(p >= 0 && p <= n && q >= 0 && q <= n,
          "form: bidegree (" + std::to_string(p) + "," + std::to_string(q) +
              ") outside 0.." + std::to_string(n));
  data_.assign(static_cast<std::size_t>(binomial(n, p) * binomial(n, q)) *
                   static_cast<std::size_t>(r),
               cx(0.0, 0.0));
}

std::size_t BundleForm::slot(const MultiIndex& J, const MultiIndex& K,
                             int lambda) const {
  require(J.ambient() == n_ && K.ambient() == n_,
          "form: slot index has wrong ambient dimension");
  require(J.degree() == p_ && K.degree() == q_,
          "form: slot index has wrong degree");
  require(lambda >= 1 && lambda <= r_, "form: fiber index out of range");
  const std::size_t nk = static_cast<std::size_t>(binomial(n_, q_));
  return (multi_index_rank(J) * nk + multi_index_rank(K)) *
             static_cast<std::size_t>(r_) +
         static_cast<std::size_t>(lambda - 1);
}

BundleForm::SlotLabel BundleForm::decode(std::size_t s) const {
  require(s < data_.size(), "form: slot out of range");
  const std::size_t r = static_cast<std::size_t>(r_);
  const std::size_t nk = static_cast<std::size_t>(binomial(n_, q_));
  const int lambda = static_cast<int>(s % r) + 1;
  const std::size_t t = s / r;
  return SlotLabel{multi_index_unrank(n_, p_, t / nk),
                   multi_index_unrank(n_, q_, t % nk), lambda};
}

cx& BundleForm::coeff(const MultiIndex& J, const MultiIndex& K, int lambda) {
  return data_[slot(J, K, lambda)];
}

const cx& BundleForm::coeff(const MultiIndex& J, const MultiIndex& K,
                            int lambda) const {
  return data_[slot(J, K, lambda)];
}

BundleForm& BundleForm::operator+=(const BundleForm& other) {
  require(same_shape(*this, other), "form: shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

BundleForm& BundleForm::operator-=(const BundleForm& other) {
  require(same_shape(*this, other), "form: shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

BundleForm& BundleForm::operator*=(cx scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

BundleForm basis_form(int n, int r, int p, int q, std::size_t slot,
                      Fiber fiber) {
  BundleForm u(n, r, p, q, fiber);
  require(slot < u.slot_count(), "basis form: slot out of range");
  u[slot] = cx(1.0, 0.0);
  return u;
}

bool same_shape(const BundleForm& u, const BundleForm& v) {
  return u.ambient() == v.ambient() && u.rank() == v.rank() &&
         u.hol_degree() == v.hol_degree() &&
         u.antihol_degree() == v.antihol_degree() && u.fiber() == v.fiber();
}

cx inner_product(const BundleForm& u, const BundleForm& v) {
  require(same_shape(u, v), "inner product: forms must share shape and fiber");
  cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.slot_count(); ++i)
    acc += u[i] * std::conj(v[i]);
  return acc;
}

double norm(const BundleForm& u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.slot_count(); ++i) acc += std::norm(u[i]);
  return std::sqrt(acc);
}

BundleForm interior_product(int s, Factor which, const BundleForm& u) {
  const int n = u.ambient();
  require(s >= 1 && s <= n, "interior product: coordinate out of range");
  const int p = u.hol_degree();
  const int q = u.antihol_degree();
  const bool hol = which == Factor::holomorphic;
  const int tp = hol ? p - 1 : p;
  const int tq = hol ? q : q - 1;
  BundleForm out(n, u.rank(), std::max(tp, 0), std::max(tq, 0), u.fiber());
  if (tp < 0 || tq < 0) return out;  // contracting an absent factor: zero
  const double cross = hol ? 1.0 : static_cast<double>(parity_sign(p));
  for (std::size_t i = 0; i < u.slot_count(); ++i) {
    const cx a = u[i];
    if (a == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(i);
    const MultiIndex& I = hol ? lab.J : lab.K;
    const int sign = contraction_sign(s, I);
    if (sign == 0) continue;
    const MultiIndex reduced = I.without(s);
    const MultiIndex& J2 = hol ? reduced : lab.J;
    const MultiIndex& K2 = hol ? lab.K : reduced;
    out.coeff(J2, K2, lab.lambda) += cross * static_cast<double>(sign) * a;
  }
  return out;
}

BundleForm lefschetz(const BundleForm& u) {
  const int n = u.ambient();
  const int p = u.hol_degree();
  const int q = u.antihol_degree();
  BundleForm out(n, u.rank(), std::min(p + 1, n), std::min(q + 1, n),
                 u.fiber());
  if (p + 1 > n || q + 1 > n) return out;
  // i dz_j ^ dzbar_j ^ dz_J ^ dzbar_K: moving dzbar_j across the p
  // holomorphic factors gives (-1)^p, then each factor sorts into place with
  // its contraction sign.
  const cx outer = cx(0.0, 1.0) * static_cast<double>(parity_sign(p));
  for (std::size_t i = 0; i < u.slot_count(); ++i) {
    const cx a = u[i];
    if (a == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(i);
    for (int j = 1; j <= n; ++j) {
      if (lab.J.contains(j) || lab.K.contains(j)) continue;
      const MultiIndex J2 = lab.J.with(j);
      const MultiIndex K2 = lab.K.with(j);
      const int sign = contraction_sign(j, J2) * contraction_sign(j, K2);
      out.coeff(J2, K2, lab.lambda) += outer * static_cast<double>(sign) * a;
    }
  }
  return out;
}

BundleForm lambda_closed_form(const BundleForm& u) {
  const int n = u.ambient();
  const int p = u.hol_degree();
  const int q = u.antihol_degree();
  BundleForm out(n, u.rank(), std::max(p - 1, 0), std::max(q - 1, 0),
                 u.fiber());
  if (p == 0 || q == 0) return out;
  const cx outer = cx(0.0, 1.0) * static_cast<double>(parity_sign(p));
  for (std::size_t i = 0; i < u.slot_count(); ++i) {
    const cx a = u[i];
    if (a == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(i);
    for (int s : lab.J.entries()) {
      if (!lab.K.contains(s)) continue;
      const int sign = contraction_sign(s, lab.J) * contraction_sign(s, lab.K);
      out.coeff(lab.J.without(s), lab.K.without(s), lab.lambda) +=
          outer * static_cast<double>(sign) * a;
    }
  }
  return out;
}

BundleForm hodge_star(const BundleForm& u) {
  const int n = u.ambient();
  const int p = u.hol_degree();
  const int q = u.antihol_degree();
  const Fiber flipped = u.fiber() == Fiber::primal ? Fiber::dual : Fiber::primal;
  BundleForm out(n, u.rank(), n - p, n - q, flipped);
  const cx vol = i_power(static_cast<long>(n) * n);
  const double deg = static_cast<double>(
      parity_sign(static_cast<long>(q) * (n - p)));
  for (std::size_t i = 0; i < u.slot_count(); ++i) {
    const cx a = u[i];
    if (a == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(i);
    const cx constant = vol * deg *
                        static_cast<double>(complement_sign(lab.J)) *
                        static_cast<double>(complement_sign(lab.K));
    out.coeff(complement(lab.J), complement(lab.K), lab.lambda) +=
        std::conj(a) * constant;
  }
  return out;
}

BundleForm star_inverse(const BundleForm& u, int p, int q) {
  const int n = u.ambient();
  require(u.hol_degree() == n - p && u.antihol_degree() == n - q,
          "star inverse: input bidegree must be (n-p, n-q)");
  BundleForm out = hodge_star(u);
  out *= cx(static_cast<double>(parity_sign(static_cast<long>(p) + q)), 0.0);
  return out;
}

BundleForm tilde_map(const BundleForm& u) {
  const int n = u.ambient();
  const int p = u.hol_degree();
  const int q = u.antihol_degree();
  BundleForm out(n, u.rank(), n - q, n - p, u.fiber());
  for (std::size_t i = 0; i < u.slot_count(); ++i) {
    const cx a = u[i];
    if (a == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(i);
    const double sign = static_cast<double>(duality_sign(lab.J)) *
                        static_cast<double>(duality_sign(lab.K));
    out.coeff(complement(lab.K), complement(lab.J), lab.lambda) += sign * a;
  }
  return out;
}

cx i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return cx(1.0, 0.0);
    case 1:
      return cx(0.0, 1.0);
    case 2:
      return cx(-1.0, 0.0);
    default:
      return cx(0.0, -1.0);
  }
}

int parity_sign(long k) { return (((k % 2) + 2) % 2 == 0) ? 1 : -1; }

}  // namespace curvop
