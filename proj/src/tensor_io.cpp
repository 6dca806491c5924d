#include "curvop/tensor_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "curvop/rng.hpp"

namespace curvop {

namespace {

using cx = std::complex<double>;

constexpr int kMaxAmbient = 16;
constexpr int kMaxRank = 16;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

// Strips comments, splits on whitespace; empty result means skip the line.
std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line, std::string("expected integer for ") + what + ", got '" + tok +
                   "'");
  }
}

double parse_double(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line, std::string("expected number for ") + what + ", got '" + tok +
                   "'");
  }
}

// "[1,3]" or "[]" -> increasing index list.
std::vector<int> parse_index_list(const std::string& tok, int line) {
  if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
    fail(line, "expected bracketed index list, got '" + tok + "'");
  const std::string body = tok.substr(1, tok.size() - 2);
  std::vector<int> out;
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string piece;
  while (std::getline(is, piece, ','))
    out.push_back(parse_int(piece, line, "index list entry"));
  return out;
}

struct HeaderField {
  std::optional<int> value;
  int line = 0;
};

void set_once(HeaderField& field, int value, int line, const char* name) {
  if (field.value) fail(line, std::string("duplicate '") + name + "' line");
  field.value = value;
  field.line = line;
}

int require_field(const HeaderField& field, int line, const char* name) {
  if (!field.value)
    fail(line, std::string("'") + name + "' must appear before this record");
  return *field.value;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CurvatureTensor read_tensor(std::istream& in, const TensorReadOptions& opt) {
  std::string raw;
  int line = 0;
  bool saw_header = false;
  HeaderField nf, rf;
  std::optional<CurvatureTensor> tensor;
  std::map<std::tuple<int, int, int, int>, int> seen;  // value: defining line
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "curvop-tensor")
        fail(line, "expected header 'curvop-tensor v1'");
      if (tokens[1] != "v1")
        fail(line, "unsupported tensor file version '" + tokens[1] + "'");
      saw_header = true;
      continue;
    }
    if (tokens[0] == "n" || tokens[0] == "r") {
      if (tokens.size() != 2)
        fail(line, "'" + tokens[0] + "' takes exactly one integer");
      const int v = parse_int(tokens[1], line, tokens[0].c_str());
      const int cap = tokens[0] == "n" ? kMaxAmbient : kMaxRank;
      if (v < 1 || v > cap)
        fail(line, "'" + tokens[0] + "' must be in 1.." + std::to_string(cap));
      set_once(tokens[0] == "n" ? nf : rf, v, line, tokens[0].c_str());
      continue;
    }
    if (tokens[0] == "c") {
      const int n = require_field(nf, line, "n");
      const int r = require_field(rf, line, "r");
      if (!tensor) tensor.emplace(n, r);
      if (tokens.size() != 7)
        fail(line, "'c' takes j k lambda mu re im");
      const int j = parse_int(tokens[1], line, "j");
      const int k = parse_int(tokens[2], line, "k");
      const int lambda = parse_int(tokens[3], line, "lambda");
      const int mu = parse_int(tokens[4], line, "mu");
      if (j < 1 || j > n || k < 1 || k > n)
        fail(line, "base index out of 1.." + std::to_string(n));
      if (lambda < 1 || lambda > r || mu < 1 || mu > r)
        fail(line, "fiber index out of 1.." + std::to_string(r));
      const auto key = std::make_tuple(j, k, lambda, mu);
      if (auto it = seen.find(key); it != seen.end())
        fail(line, "duplicate entry (j=" + std::to_string(j) + ", k=" +
                       std::to_string(k) + ", lambda=" + std::to_string(lambda) +
                       ", mu=" + std::to_string(mu) + "), first on line " +
                       std::to_string(it->second));
      seen.emplace(key, line);
      tensor->at(j, k, lambda, mu) =
          cx(parse_double(tokens[5], line, "re"),
             parse_double(tokens[6], line, "im"));
      continue;
    }
    fail(line, "unknown record '" + tokens[0] + "'");
  }
  if (!saw_header)
    throw std::invalid_argument("tensor file is empty (missing header)");
  if (!nf.value) throw std::invalid_argument("missing 'n' line");
  if (!rf.value) throw std::invalid_argument("missing 'r' line");
  if (!tensor) tensor.emplace(*nf.value, *rf.value);
  return validate(*tensor, opt.symmetry_tol, opt.symmetrize);
}

CurvatureTensor read_tensor_file(const std::string& path,
                                 const TensorReadOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tensor file: " + path);
  try {
    return read_tensor(in, opt);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_tensor(std::ostream& out, const CurvatureTensor& c) {
  out << "curvop-tensor v1\n";
  out << "n " << c.ambient() << "\n";
  out << "r " << c.rank() << "\n";
  for (int j = 1; j <= c.ambient(); ++j)
    for (int k = 1; k <= c.ambient(); ++k)
      for (int lambda = 1; lambda <= c.rank(); ++lambda)
        for (int mu = 1; mu <= c.rank(); ++mu) {
          const cx v = c.at(j, k, lambda, mu);
          if (v == cx(0.0, 0.0)) continue;
          out << "c " << j << " " << k << " " << lambda << " " << mu << " "
              << format_double(v.real()) << " " << format_double(v.imag())
              << "\n";
        }
}

BundleForm read_form(std::istream& in) {
  std::string raw;
  int line = 0;
  bool saw_header = false;
  HeaderField nf, rf, pf, qf;
  std::optional<Fiber> fiber;
  std::optional<BundleForm> form;
  std::map<std::size_t, int> seen;
  auto materialize = [&](int line_no) -> BundleForm& {
    if (!form) {
      const int n = require_field(nf, line_no, "n");
      const int r = require_field(rf, line_no, "r");
      const int p = require_field(pf, line_no, "p");
      const int q = require_field(qf, line_no, "q");
      if (p < 0 || p > n || q < 0 || q > n)
        fail(line_no, "bidegree (p,q) must lie in 0..n");
      form.emplace(n, r, p, q, fiber.value_or(Fiber::primal));
    }
    return *form;
  };
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "curvop-form")
        fail(line, "expected header 'curvop-form v1'");
      if (tokens[1] != "v1")
        fail(line, "unsupported form file version '" + tokens[1] + "'");
      saw_header = true;
      continue;
    }
    if (tokens[0] == "n" || tokens[0] == "r" || tokens[0] == "p" ||
        tokens[0] == "q") {
      if (form) fail(line, "header lines must precede 'u' records");
      if (tokens.size() != 2)
        fail(line, "'" + tokens[0] + "' takes exactly one integer");
      const int v = parse_int(tokens[1], line, tokens[0].c_str());
      HeaderField& field = tokens[0] == "n"   ? nf
                           : tokens[0] == "r" ? rf
                           : tokens[0] == "p" ? pf
                                              : qf;
      if ((tokens[0] == "n" || tokens[0] == "r") && v < 1)
        fail(line, "'" + tokens[0] + "' must be positive");
      if (tokens[0] == "n" && v > kMaxAmbient)
        fail(line, "'n' must be in 1.." + std::to_string(kMaxAmbient));
      if (tokens[0] == "r" && v > kMaxRank)
        fail(line, "'r' must be in 1.." + std::to_string(kMaxRank));
      if ((tokens[0] == "p" || tokens[0] == "q") && v < 0)
        fail(line, "'" + tokens[0] + "' must be nonnegative");
      set_once(field, v, line, tokens[0].c_str());
      continue;
    }
    if (tokens[0] == "fiber") {
      if (form) fail(line, "header lines must precede 'u' records");
      if (fiber) fail(line, "duplicate 'fiber' line");
      if (tokens.size() != 2 || (tokens[1] != "E" && tokens[1] != "E*"))
        fail(line, "'fiber' takes E or E*");
      fiber = tokens[1] == "E" ? Fiber::primal : Fiber::dual;
      continue;
    }
    if (tokens[0] == "u") {
      BundleForm& u = materialize(line);
      if (tokens.size() != 6) fail(line, "'u' takes [J] [K] lambda re im");
      const auto j_list = parse_index_list(tokens[1], line);
      const auto k_list = parse_index_list(tokens[2], line);
      const int lambda = parse_int(tokens[3], line, "lambda");
      if (static_cast<int>(j_list.size()) != u.hol_degree())
        fail(line, "J has " + std::to_string(j_list.size()) +
                       " entries, expected p=" +
                       std::to_string(u.hol_degree()));
      if (static_cast<int>(k_list.size()) != u.antihol_degree())
        fail(line, "K has " + std::to_string(k_list.size()) +
                       " entries, expected q=" +
                       std::to_string(u.antihol_degree()));
      if (lambda < 1 || lambda > u.rank())
        fail(line, "lambda out of 1.." + std::to_string(u.rank()));
      std::size_t slot = 0;
      try {
        slot = u.slot(MultiIndex(u.ambient(), j_list),
                      MultiIndex(u.ambient(), k_list), lambda);
      } catch (const std::invalid_argument& e) {
        fail(line, e.what());
      }
      if (auto it = seen.find(slot); it != seen.end())
        fail(line, "duplicate slot, first on line " + std::to_string(it->second));
      seen.emplace(slot, line);
      u[slot] = cx(parse_double(tokens[4], line, "re"),
                   parse_double(tokens[5], line, "im"));
      continue;
    }
    fail(line, "unknown record '" + tokens[0] + "'");
  }
  if (!saw_header)
    throw std::invalid_argument("form file is empty (missing header)");
  if (!nf.value) throw std::invalid_argument("missing 'n' line");
  if (!rf.value) throw std::invalid_argument("missing 'r' line");
  if (!pf.value) throw std::invalid_argument("missing 'p' line");
  if (!qf.value) throw std::invalid_argument("missing 'q' line");
  return materialize(line);
}

BundleForm read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open form file: " + path);
  try {
    return read_form(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_form(std::ostream& out, const BundleForm& u) {
  out << "curvop-form v1\n";
  out << "n " << u.ambient() << "\n";
  out << "r " << u.rank() << "\n";
  out << "p " << u.hol_degree() << "\n";
  out << "q " << u.antihol_degree() << "\n";
  out << "fiber " << fiber_name(u.fiber()) << "\n";
  for (std::size_t s = 0; s < u.slot_count(); ++s) {
    const cx v = u[s];
    if (v == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(s);
    auto list = [](const MultiIndex& I) {
      std::string out = "[";
      for (int i = 1; i <= I.degree(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(I.entry(i));
      }
      return out + "]";
    };
    out << "u " << list(lab.J) << " " << list(lab.K) << " " << lab.lambda
        << " " << format_double(v.real()) << " " << format_double(v.imag())
        << "\n";
  }
}

CurvatureTensor fubini_study_tensor(int n) {
  if (n < 1) throw std::invalid_argument("fubini-study tensor: n must be >= 1");
  CurvatureTensor c(n, n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int lambda = 1; lambda <= n; ++lambda)
        for (int mu = 1; mu <= n; ++mu) {
          double v = 0.0;
          if (j == k && lambda == mu) v += 1.0;
          if (j == mu && k == lambda) v += 1.0;
          if (v != 0.0) c.at(j, k, lambda, mu) = cx(v, 0.0);
        }
  return c;
}

CurvatureTensor random_tensor(int n, int r, std::uint64_t seed,
                              RandomTensorMode mode) {
  CurvatureTensor c(n, r);
  Rng rng(Rng::derive(seed, 0x74656e73,
                      static_cast<std::uint64_t>(n) * 64 +
                          static_cast<std::uint64_t>(r),
                      static_cast<std::uint64_t>(mode)));
  if (mode == RandomTensorMode::hermitian) {
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int lambda = 1; lambda <= r; ++lambda)
          for (int mu = 1; mu <= r; ++mu)
            c.at(j, k, lambda, mu) = rng.complex_normal();
    return symmetrized(c);
  }
  // gram_psd: coefficient block G = V V^H with V complex normal, read back
  // through the block layout so the block of the result is exactly G^T (also
  // psd) and Hermitian symmetry is exact.
  const int d = n * r;
  Eigen::MatrixXcd v(d, d);
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) v(row, col) = rng.complex_normal();
  const Eigen::MatrixXcd g = v * v.adjoint();
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int lambda = 1; lambda <= r; ++lambda)
        for (int mu = 1; mu <= r; ++mu)
          c.at(j, k, lambda, mu) =
              g((j - 1) * r + (lambda - 1), (k - 1) * r + (mu - 1));
  return c;
}

BundleForm random_form(int n, int r, int p, int q, std::uint64_t seed,
                       Fiber fiber) {
  BundleForm u(n, r, p, q, fiber);
  Rng rng(Rng::derive(seed, 0x666f726d,
                      static_cast<std::uint64_t>(n) * 4096 +
                          static_cast<std::uint64_t>(r) * 256 +
                          static_cast<std::uint64_t>(p) * 16 +
                          static_cast<std::uint64_t>(q),
                      fiber == Fiber::primal ? 0 : 1));
  for (std::size_t s = 0; s < u.slot_count(); ++s)
    u[s] = rng.complex_normal();
  return u;
}

}  // namespace curvop
