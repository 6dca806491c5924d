#include "curvop/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace curvop::oracle {

namespace {

using cx = std::complex<double>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::size_t int_pow(int base, int exp) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) v *= static_cast<std::size_t>(base);
  return v;
}

// Parity sign of an index tuple: 0 on repeated entries, otherwise the sign
// of the permutation sorting it. Local inversion count; deliberately not the
// contraction-sign calculus of the closed-form path.
int tuple_sign(const std::vector<int>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) ++inv;
    }
  return (inv % 2 == 0) ? 1 : -1;
}

void decode_tuple(std::size_t idx, int n, int len, std::vector<int>& out) {
  out.resize(static_cast<std::size_t>(len));
  for (int pos = len - 1; pos >= 0; --pos) {
    out[static_cast<std::size_t>(pos)] =
        static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
    idx /= static_cast<std::size_t>(n);
  }
}

std::size_t encode_tuple(const std::vector<int>& t, int n) {
  std::size_t idx = 0;
  for (int v : t) idx = idx * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(v - 1);
  return idx;
}

// All increasing position subsets of {0..total-1} of the given size, each
// with the parity of its shuffle permutation (subset then remainder).
struct Shuffle {
  std::vector<int> take;
  int sign;
};

std::vector<Shuffle> shuffles(int total, int take) {
  std::vector<Shuffle> out;
  if (take < 0 || take > total) return out;
  std::vector<int> cur(static_cast<std::size_t>(take));
  for (int i = 0; i < take; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    int displaced = 0;
    for (int i = 0; i < take; ++i) displaced += cur[static_cast<std::size_t>(i)] - i;
    out.push_back(Shuffle{cur, (displaced % 2 == 0) ? 1 : -1});
    int i = take - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == total - (take - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < take; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t dim_of(int n, int r, int p, int q) {
  return static_cast<std::size_t>(binomial(n, p)) *
         static_cast<std::size_t>(binomial(n, q)) * static_cast<std::size_t>(r);
}

// One scalar wedge between strided fiber slices:
//   out[T; U] += sum over hol shuffles S and antihol shuffles W of
//     sign(S) sign(W) (-1)^(qa*pb) a[T_S; U_W] b[T_rest; U_rest].
// Strides select a single fiber component inside interleaved storage.
void wedge_component(int n, int pa, int qa, int pb, int qb, const cx* a,
                     std::size_t stride_a, const cx* b, std::size_t stride_b,
                     cx* out, std::size_t stride_out) {
  const int p = pa + pb;
  const int q = qa + qb;
  const double interleave = ((static_cast<long>(qa) * pb) % 2 == 0) ? 1.0 : -1.0;
  const auto hol_shuffles = shuffles(p, pa);
  const auto antihol_shuffles = shuffles(q, qa);
  const std::size_t hol_total = int_pow(n, p);
  const std::size_t antihol_total = int_pow(n, q);
  const std::size_t aq = int_pow(n, qa);
  const std::size_t bq = int_pow(n, qb);
  std::vector<int> holT, antiT;
  std::vector<int> sub_a, sub_b;
  for (std::size_t hi = 0; hi < hol_total; ++hi) {
    decode_tuple(hi, n, p, holT);
    for (std::size_t ui = 0; ui < antihol_total; ++ui) {
      decode_tuple(ui, n, q, antiT);
      cx acc(0.0, 0.0);
      for (const auto& hs : hol_shuffles) {
        sub_a.clear();
        sub_b.clear();
        int next = 0;
        for (int pos = 0; pos < p; ++pos) {
          if (next < pa && hs.take[static_cast<std::size_t>(next)] == pos) {
            sub_a.push_back(holT[static_cast<std::size_t>(pos)]);
            ++next;
          } else {
            sub_b.push_back(holT[static_cast<std::size_t>(pos)]);
          }
        }
        const std::size_t ha = encode_tuple(sub_a, n);
        const std::size_t hb = encode_tuple(sub_b, n);
        for (const auto& ws : antihol_shuffles) {
          sub_a.clear();
          sub_b.clear();
          int wnext = 0;
          for (int pos = 0; pos < q; ++pos) {
            if (wnext < qa && ws.take[static_cast<std::size_t>(wnext)] == pos) {
              sub_a.push_back(antiT[static_cast<std::size_t>(pos)]);
              ++wnext;
            } else {
              sub_b.push_back(antiT[static_cast<std::size_t>(pos)]);
            }
          }
          const std::size_t ua = encode_tuple(sub_a, n);
          const std::size_t ub = encode_tuple(sub_b, n);
          const double sgn = static_cast<double>(hs.sign * ws.sign);
          acc += sgn * a[(ha * aq + ua) * stride_a] *
                 b[(hb * bq + ub) * stride_b];
        }
      }
      out[(hi * antihol_total + ui) * stride_out] += interleave * acc;
    }
  }
}

}  // namespace

DenseForm::DenseForm(int n, int r, int p, int q, Fiber fiber)
    : n_(n), r_(r), p_(p), q_(q), fiber_(fiber) {
  require(n >= 1 && r >= 1, "dense form: bad dimensions");
  require(p >= 0 && q >= 0, "dense form: negative degree");
  data_.assign(int_pow(n, p) * int_pow(n, q) * static_cast<std::size_t>(r),
               cx(0.0, 0.0));
}

std::size_t DenseForm::tuple_offset(const std::vector<int>& hol,
                                    const std::vector<int>& antihol) const {
  require(static_cast<int>(hol.size()) == p_ &&
              static_cast<int>(antihol.size()) == q_,
          "dense form: tuple length mismatch");
  for (int v : hol) require(v >= 1 && v <= n_, "dense form: index range");
  for (int v : antihol) require(v >= 1 && v <= n_, "dense form: index range");
  return encode_tuple(hol, n_) * int_pow(n_, q_) + encode_tuple(antihol, n_);
}

cx& DenseForm::at(const std::vector<int>& hol, const std::vector<int>& antihol,
                  int lambda) {
  require(lambda >= 1 && lambda <= r_, "dense form: fiber range");
  return data_[tuple_offset(hol, antihol) * static_cast<std::size_t>(r_) +
               static_cast<std::size_t>(lambda - 1)];
}

const cx& DenseForm::at(const std::vector<int>& hol,
                        const std::vector<int>& antihol, int lambda) const {
  return const_cast<DenseForm*>(this)->at(hol, antihol, lambda);
}

double DenseForm::max_abs_diff(const DenseForm& other) const {
  require(data_.size() == other.data_.size() && n_ == other.n_ &&
              r_ == other.r_ && p_ == other.p_ && q_ == other.q_,
          "dense form: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

DenseForm embed(const BundleForm& u) {
  const int n = u.ambient();
  const int p = u.hol_degree();
  const int q = u.antihol_degree();
  DenseForm f(n, u.rank(), p, q, u.fiber());
  const std::size_t hol_total = int_pow(n, p);
  const std::size_t antihol_total = int_pow(n, q);
  std::vector<int> holT, antiT, sorted;
  for (std::size_t hi = 0; hi < hol_total; ++hi) {
    decode_tuple(hi, n, p, holT);
    const int hs = tuple_sign(holT);
    if (hs == 0) continue;
    sorted = holT;
    std::sort(sorted.begin(), sorted.end());
    const MultiIndex J(n, sorted);
    for (std::size_t ui = 0; ui < antihol_total; ++ui) {
      decode_tuple(ui, n, q, antiT);
      const int as = tuple_sign(antiT);
      if (as == 0) continue;
      sorted = antiT;
      std::sort(sorted.begin(), sorted.end());
      const MultiIndex K(n, sorted);
      const double sgn = static_cast<double>(hs * as);
      for (int lambda = 1; lambda <= u.rank(); ++lambda)
        f.at(holT, antiT, lambda) = sgn * u.coeff(J, K, lambda);
    }
  }
  return f;
}

BundleForm extract(const DenseForm& f) {
  BundleForm u(f.ambient(), f.rank(), f.hol_degree(), f.antihol_degree(),
               f.fiber());
  for (std::size_t s = 0; s < u.slot_count(); ++s) {
    const auto lab = u.decode(s);
    u[s] = f.at(lab.J.entries(), lab.K.entries(), lab.lambda);
  }
  return u;
}

DenseForm wedge_left(const DenseForm& a, const DenseForm& b) {
  require(a.rank() == 1, "wedge_left: left factor must be scalar valued");
  require(a.ambient() == b.ambient(), "wedge_left: ambient mismatch");
  DenseForm out(b.ambient(), b.rank(), a.hol_degree() + b.hol_degree(),
                a.antihol_degree() + b.antihol_degree(), b.fiber());
  const std::size_t rb = static_cast<std::size_t>(b.rank());
  for (int lambda = 1; lambda <= b.rank(); ++lambda) {
    wedge_component(b.ambient(), a.hol_degree(), a.antihol_degree(),
                    b.hol_degree(), b.antihol_degree(), a.data().data(), 1,
                    b.data().data() + (lambda - 1), rb,
                    out.data().data() + (lambda - 1), rb);
  }
  return out;
}

DenseForm wedge_pairing(const DenseForm& a, const DenseForm& b) {
  require(a.ambient() == b.ambient() && a.rank() == b.rank(),
          "wedge_pairing: shape mismatch");
  require(a.fiber() != b.fiber(),
          "wedge_pairing: needs one E-valued and one E*-valued form");
  DenseForm out(a.ambient(), 1, a.hol_degree() + b.hol_degree(),
                a.antihol_degree() + b.antihol_degree());
  const std::size_t r = static_cast<std::size_t>(a.rank());
  for (int lambda = 1; lambda <= a.rank(); ++lambda) {
    wedge_component(a.ambient(), a.hol_degree(), a.antihol_degree(),
                    b.hol_degree(), b.antihol_degree(),
                    a.data().data() + (lambda - 1), r,
                    b.data().data() + (lambda - 1), r, out.data().data(), 1);
  }
  return out;
}

DenseForm kaehler_form(int n) {
  DenseForm omega(n, 1, 1, 1);
  for (int j = 1; j <= n; ++j) omega.at({j}, {j}, 1) = cx(0.0, 1.0);
  return omega;
}

DenseForm volume_element(int n) {
  DenseForm vol(n, 1, n, n);
  const cx unit = i_power(static_cast<long>(n) * n);
  const std::size_t total = int_pow(n, n);
  std::vector<int> holT, antiT;
  for (std::size_t hi = 0; hi < total; ++hi) {
    decode_tuple(hi, n, n, holT);
    const int hs = tuple_sign(holT);
    if (hs == 0) continue;
    for (std::size_t ui = 0; ui < total; ++ui) {
      decode_tuple(ui, n, n, antiT);
      const int as = tuple_sign(antiT);
      if (as == 0) continue;
      vol.at(holT, antiT, 1) = static_cast<double>(hs * as) * unit;
    }
  }
  return vol;
}

DegreeMap lefschetz_matrix(int n, int r, int p, int q) {
  DegreeMap map{n, r, p, q, p + 1, q + 1, Eigen::MatrixXcd()};
  const std::size_t rows = dim_of(n, r, p + 1, q + 1);
  const std::size_t cols = dim_of(n, r, p, q);
  map.mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                   static_cast<Eigen::Index>(cols));
  if (rows == 0 || cols == 0) return map;
  const DenseForm omega = kaehler_form(n);
  for (std::size_t col = 0; col < cols; ++col) {
    const DenseForm image =
        wedge_left(omega, embed(basis_form(n, r, p, q, col)));
    const BundleForm coeffs = extract(image);
    for (std::size_t row = 0; row < rows; ++row)
      map.mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          coeffs[row];
  }
  return map;
}

DegreeMap lambda_matrix(int n, int r, int p, int q) {
  DegreeMap map{n, r, p, q, p - 1, q - 1, Eigen::MatrixXcd()};
  if (p < 1 || q < 1) {
    map.mat = Eigen::MatrixXcd::Zero(0, static_cast<Eigen::Index>(dim_of(n, r, p, q)));
    return map;
  }
  map.mat = lefschetz_matrix(n, r, p - 1, q - 1).mat.adjoint();
  return map;
}

DegreeMap theta_wedge_matrix(const CurvatureTensor& c, int p, int q) {
  const int n = c.ambient();
  const int r = c.rank();
  DegreeMap map{n, r, p, q, p + 1, q + 1, Eigen::MatrixXcd()};
  const std::size_t rows = dim_of(n, r, p + 1, q + 1);
  const std::size_t cols = dim_of(n, r, p, q);
  map.mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                   static_cast<Eigen::Index>(cols));
  if (rows == 0 || cols == 0) return map;
  // dz_j ^ dzbar_k as dense (1,1) factors, built once.
  std::vector<DenseForm> factors;
  factors.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      DenseForm f(n, 1, 1, 1);
      f.at({j}, {k}, 1) = cx(1.0, 0.0);
      factors.push_back(std::move(f));
    }
  for (std::size_t col = 0; col < cols; ++col) {
    const DenseForm u = embed(basis_form(n, r, p, q, col));
    DenseForm image(n, r, p + 1, q + 1, u.fiber());
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const DenseForm w = wedge_left(
            factors[static_cast<std::size_t>((j - 1) * n + (k - 1))], u);
        // image_mu += i * c_{j k lambda mu} * w_lambda, componentwise.
        for (int lambda = 1; lambda <= r; ++lambda)
          for (int mu = 1; mu <= r; ++mu) {
            const cx scale = cx(0.0, 1.0) * c.at(j, k, lambda, mu);
            if (scale == cx(0.0, 0.0)) continue;
            const std::size_t stride = static_cast<std::size_t>(r);
            const std::size_t count = w.component_count() / stride;
            const cx* src = w.data().data() + (lambda - 1);
            cx* dst = image.data().data() + (mu - 1);
            for (std::size_t t = 0; t < count; ++t)
              dst[t * stride] += scale * src[t * stride];
          }
      }
    const BundleForm coeffs = extract(image);
    for (std::size_t row = 0; row < rows; ++row)
      map.mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          coeffs[row];
  }
  return map;
}

OperatorMatrix commutator_matrix(const CurvatureTensor& c, int p, int q) {
  const int n = c.ambient();
  const int r = c.rank();
  require(p >= 0 && p <= n && q >= 0 && q <= n,
          "commutator matrix: bidegree out of range");
  const Eigen::Index d = static_cast<Eigen::Index>(dim_of(n, r, p, q));
  OperatorMatrix out{n, r, p, q, Eigen::MatrixXcd::Zero(d, d)};
  if (p >= 1 && q >= 1)
    out.mat += theta_wedge_matrix(c, p - 1, q - 1).mat *
               lambda_matrix(n, r, p, q).mat;
  if (p + 1 <= n && q + 1 <= n)
    out.mat -= lambda_matrix(n, r, p + 1, q + 1).mat *
               theta_wedge_matrix(c, p, q).mat;
  return out;
}

}  // namespace curvop::oracle
