#include "curvop/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "curvop/curvature.hpp"
#include "curvop/forms.hpp"
#include "curvop/positivity.hpp"
#include "curvop/tensor_io.hpp"
#include "curvop/verify.hpp"
#include "json.hpp"

namespace curvop {

namespace {

using cx = std::complex<double>;
using nlohmann::json;

std::string num(double v) {
  char b[64];
  std::snprintf(b, sizeof(b), "%.10g", v);
  return b;
}

std::string sci(double v) {
  char b[64];
  std::snprintf(b, sizeof(b), "%.3g", v);
  return b;
}

std::string cx_text(cx v) {
  char b[96];
  std::snprintf(b, sizeof(b), "(%.10g%+.10gi)", v.real(), v.imag());
  return b;
}

std::string spectrum_text(const Eigen::VectorXd& s) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += num(s(i));
  }
  return out + "]";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json cx_json(cx v) { return json::array({v.real(), v.imag()}); }

json cvec_json(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(cx_json(v(i)));
  return a;
}

json report_json(const PositivityReport& rep) {
  return json{{"name", rep.name},
              {"bidegree", json::array({rep.p, rep.q})},
              {"fiber", fiber_name(rep.fiber)},
              {"spectrum", vec_json(rep.spectrum)},
              {"class", cone_name(rep.cone)},
              {"tol", rep.tol}};
}

std::string member_label(const ChainReport::Member& m) {
  if (m.report.name == "nakano") return "coefficient block";
  return "operator (" + std::to_string(m.report.p) + "," +
         std::to_string(m.report.q) + ") on " + fiber_name(m.report.fiber);
}

// The top-degree rows of the cone table double as solvability statements:
// nonnegativity of the operator at (n,q), q >= 1, or at (p,n) is equivalent
// to the corresponding global L2-estimate condition, so those rows carry an
// inferred verdict rather than silence. Inference, not computation.
bool l2_row_applies(int n, int p, int q) {
  return (p == n && q >= 1) || q == n;
}

std::string l2_note(int n, int p, int q, Cone cone) {
  if (!l2_row_applies(n, p, q)) return "";
  const bool nonneg = cone == Cone::positive || cone == Cone::semi_positive ||
                      cone == Cone::zero;
  const std::string label =
      "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return "L2-estimate condition " + label +
         (nonneg ? ": inferred to hold" : ": inferred to fail");
}

struct Classification {
  PositivityReport nakano;
  PositivityReport dual_nakano;
  GriffithsEstimate griffiths;
  ChainReport chain;
};

Classification classify_tensor(const CurvatureTensor& c, double tol,
                               int restarts, int iterations,
                               std::uint64_t seed) {
  Classification out;
  out.nakano = nakano_class(c, tol);
  out.dual_nakano = dual_nakano_class(c, tol);
  out.griffiths = griffiths_min(c, restarts, iterations, seed);
  out.chain = duality_chain_report(c, tol);
  return out;
}

void print_classification_text(std::ostream& out, const std::string& origin,
                               const CurvatureTensor& c, double tol,
                               const Classification& cl) {
  const int n = c.ambient();
  out << "classification: n=" << n << " r=" << c.rank() << " tol=" << sci(tol)
      << " input=" << origin << "\n";
  out << "  nakano:      class=" << cone_name(cl.nakano.cone)
      << "  spectrum=" << spectrum_text(cl.nakano.spectrum) << "\n";
  out << "  dual nakano: class=" << cone_name(cl.dual_nakano.cone)
      << "  spectrum=" << spectrum_text(cl.dual_nakano.spectrum) << "\n";
  out << "  griffiths (heuristic upper bound): min=" << num(cl.griffiths.value)
      << " restarts=" << cl.griffiths.restarts
      << " iterations=" << cl.griffiths.iterations
      << " seed=" << cl.griffiths.seed << "\n";
  out << "positivity chain: "
      << (cl.chain.chain_consistent ? "consistent" : "INCONSISTENT")
      << "  boundary-margin=" << sci(cl.chain.boundary_gap)
      << "  residuals: negation=" << sci(cl.chain.max_negation_residual)
      << " duality=" << sci(cl.chain.max_duality_residual)
      << " block=" << sci(cl.chain.nakano_block_residual) << "\n";
  for (const auto& m : cl.chain.members) {
    out << "  " << pad(member_label(m), 24)
        << " class=" << cone_name(m.report.cone);
    if (m.negated)
      out << "  (expected opposite of block: "
          << cone_name(negate_cone(m.report.cone)) << ")";
    out << "\n";
  }
  for (const auto& v : cl.chain.violations) out << "  violation: " << v << "\n";
  out << "operator cones by bidegree (fiber E):\n";
  out << "  " << pad("(p,q)", 8) << pad("dim", 5) << pad("class", 15)
      << pad("min-eig", 15) << pad("max-eig", 15) << "note\n";
  for (const auto& cell : cl.chain.cells) {
    const Eigen::Index d = cell.spectrum.size();
    out << "  "
        << pad("(" + std::to_string(cell.p) + "," + std::to_string(cell.q) +
                   ")",
               8)
        << pad(std::to_string(d), 5) << pad(cone_name(cell.cone), 15)
        << pad(d > 0 ? num(cell.spectrum(0)) : "-", 15)
        << pad(d > 0 ? num(cell.spectrum(d - 1)) : "-", 15)
        << l2_note(n, cell.p, cell.q, cell.cone) << "\n";
  }
}

json classification_json(const std::string& origin, const CurvatureTensor& c,
                         double tol, const Classification& cl) {
  const int n = c.ambient();
  json members = json::array();
  for (const auto& m : cl.chain.members) {
    json jm = report_json(m.report);
    jm["negated"] = m.negated;
    members.push_back(jm);
  }
  json cells = json::array();
  for (const auto& cell : cl.chain.cells) {
    json jc{{"bidegree", json::array({cell.p, cell.q})},
            {"spectrum", vec_json(cell.spectrum)},
            {"class", cone_name(cell.cone)},
            {"residuals",
             {{"negation", cell.negation_residual},
              {"duality", cell.duality_residual}}}};
    if (l2_row_applies(n, cell.p, cell.q))
      jc["l2_estimate_inferred"] = cell.cone == Cone::positive ||
                                   cell.cone == Cone::semi_positive ||
                                   cell.cone == Cone::zero;
    else
      jc["l2_estimate_inferred"] = nullptr;
    cells.push_back(jc);
  }
  return json{
      {"input", origin},
      {"n", n},
      {"r", c.rank()},
      {"tol", tol},
      {"nakano", report_json(cl.nakano)},
      {"dual_nakano", report_json(cl.dual_nakano)},
      {"griffiths",
       {{"value", cl.griffiths.value},
        {"heuristic", true},
        {"restarts", cl.griffiths.restarts},
        {"iterations", cl.griffiths.iterations},
        {"seed", cl.griffiths.seed},
        {"direction", cvec_json(cl.griffiths.direction)},
        {"section", cvec_json(cl.griffiths.section)}}},
      {"chain",
       {{"consistent", cl.chain.chain_consistent},
        {"boundary_gap", cl.chain.boundary_gap},
        {"residuals",
         {{"negation", cl.chain.max_negation_residual},
          {"duality", cl.chain.max_duality_residual},
          {"block", cl.chain.nakano_block_residual}}},
        {"members", members},
        {"violations", cl.chain.violations}}},
      {"cells", cells}};
}

json form_entries_json(const BundleForm& u) {
  json entries = json::array();
  for (std::size_t s = 0; s < u.slot_count(); ++s) {
    if (u[s] == cx(0.0, 0.0)) continue;
    const auto lab = u.decode(s);
    entries.push_back(json{{"hol", lab.J.entries()},
                           {"antihol", lab.K.entries()},
                           {"lambda", lab.lambda},
                           {"value", cx_json(u[s])}});
  }
  return entries;
}

void write_form_output(const BundleForm& v, const std::string& output,
                       const std::string& format, const std::string& command,
                       const std::string& input, const BundleForm& u,
                       std::ostream& out) {
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw std::invalid_argument("cannot write form file: " + output);
    write_form(f, v);
  }
  if (format == "json") {
    json j{{"command", command},
           {"input", input},
           {"n", v.ambient()},
           {"r", v.rank()},
           {"input_bidegree", json::array({u.hol_degree(), u.antihol_degree()})},
           {"input_fiber", fiber_name(u.fiber())},
           {"bidegree", json::array({v.hol_degree(), v.antihol_degree()})},
           {"fiber", fiber_name(v.fiber())},
           {"entries", form_entries_json(v)},
           {"output_file", output.empty() ? json(nullptr) : json(output)}};
    out << j.dump(2) << "\n";
  } else if (output.empty()) {
    write_form(out, v);
  } else {
    out << command << ": wrote (" << v.hol_degree() << ","
        << v.antihol_degree() << ")-form on " << fiber_name(v.fiber())
        << " to " << output << "\n";
  }
}

int run_verify(std::ostream& out, const std::string& format, int n, int r,
               int trials, std::uint64_t seed, double tol_oracle,
               double tol_quadratic, double tol_realness, double tol_spectrum,
               double tol_sign, double tol_block, double tol_inverse,
               double tol_class) {
  std::vector<verify::PropertyResult> results;
  results.push_back(verify::check_commutator_oracle(n, r, trials, seed, tol_oracle));
  results.push_back(
      verify::check_quadratic_form_match(n, r, trials, seed, tol_quadratic));
  results.push_back(
      verify::check_quadratic_form_realness(n, r, trials, seed, tol_realness));
  results.push_back(verify::check_duality_spectrum_negation(n, r, trials, seed,
                                                            tol_spectrum));
  results.push_back(verify::check_duality_quadratic_negation(n, r, trials, seed,
                                                             tol_quadratic));
  results.push_back(verify::check_star_intertwines_operator(n, r, trials, seed,
                                                            tol_oracle));
  results.push_back(
      verify::check_star_spectrum_match(n, r, trials, seed, tol_spectrum));
  results.push_back(
      verify::check_star_inverse_pairing(n, r, trials, seed, tol_inverse));
  results.push_back(verify::check_star_involution(n, r, tol_sign));
  results.push_back(
      verify::check_nakano_block_identity(n, r, trials, seed, tol_block));
  results.push_back(
      verify::check_chain_agreement(n, r, trials, seed, tol_class));
  results.push_back(verify::check_lambda_adjoint(n, r, tol_sign));
  results.push_back(verify::check_lefschetz_commutator_identity(n, tol_sign));
  results.push_back(verify::check_gram_closure(n, r, trials, seed, tol_class));
  results.push_back(verify::check_fubini_study(n, tol_spectrum));

  long failures = 0;
  for (const auto& res : results)
    if (!res.pass) ++failures;

  if (format == "json") {
    json props = json::array();
    for (const auto& res : results)
      props.push_back(json{{"name", res.name},
                           {"pass", res.pass},
                           {"worst", res.worst},
                           {"tol", res.tol},
                           {"cases", res.cases},
                           {"detail", res.detail}});
    json j{{"command", "verify"}, {"n", n},       {"r", r},
           {"trials", trials},    {"seed", seed}, {"properties", props},
           {"all_pass", failures == 0}};
    out << j.dump(2) << "\n";
  } else {
    out << "verify: n=" << n << " r=" << r << " trials=" << trials
        << " seed=" << seed << "\n";
    std::size_t width = 0;
    for (const auto& res : results) width = std::max(width, res.name.size());
    for (const auto& res : results) {
      out << (res.pass ? "[PASS] " : "[FAIL] ") << pad(res.name, width + 2)
          << "worst=" << pad(sci(res.worst), 10) << " tol=" << pad(sci(res.tol), 8)
          << " cases=" << res.cases;
      if (!res.detail.empty()) out << "  (" << res.detail << ")";
      out << "\n";
    }
    out << "properties: " << (results.size() - static_cast<std::size_t>(failures))
        << " passed, " << failures << " failed\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Pointwise curvature-operator calculus for Hermitian holomorphic "
      "vector bundles",
      "curvop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "curvop 1.0.0");

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // matrix
  std::string m_input;
  int m_p = 0, m_q = 0;
  bool m_symmetrize = false;
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "Assemble the curvature-operator matrix at one bidegree");
  matrix_cmd->add_option("--input", m_input, "Tensor file")
      ->required()
      ->check(CLI::ExistingFile);
  matrix_cmd->add_option("--p", m_p, "Holomorphic degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  matrix_cmd->add_option("--q", m_q, "Antiholomorphic degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  matrix_cmd->add_flag("--symmetrize", m_symmetrize,
                       "Take the Hermitian part before validating");

  // classify
  std::string c_input;
  double c_tol = 1e-9;
  bool c_symmetrize = false;
  int c_restarts = 8, c_iterations = 60;
  std::uint64_t c_seed = 1;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Positivity classes, heuristic decomposable minimum, and "
                  "the full cone chain");
  classify_cmd->add_option("--input", c_input, "Tensor file")
      ->required()
      ->check(CLI::ExistingFile);
  classify_cmd->add_option("--tol", c_tol, "Classification tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify_cmd->add_flag("--symmetrize", c_symmetrize,
                         "Take the Hermitian part before validating");
  classify_cmd->add_option("--restarts", c_restarts, "Heuristic restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify_cmd
      ->add_option("--iterations", c_iterations, "Heuristic iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify_cmd->add_option("--seed", c_seed, "Heuristic seed")
      ->capture_default_str();

  // star / tilde
  std::string s_input, s_output;
  auto* star_cmd = app.add_subcommand(
      "star", "Apply the conjugate-linear duality star to a form file");
  star_cmd->add_option("--input-form", s_input, "Form file")
      ->required()
      ->check(CLI::ExistingFile);
  star_cmd->add_option("--output", s_output,
                       "Write the resulting form file here instead of stdout");

  std::string t_input, t_output;
  auto* tilde_cmd = app.add_subcommand(
      "tilde", "Apply the linear degree-reversing duality map to a form file");
  tilde_cmd->add_option("--input-form", t_input, "Form file")
      ->required()
      ->check(CLI::ExistingFile);
  tilde_cmd->add_option("--output", t_output,
                        "Write the resulting form file here instead of stdout");

  // dual
  std::string d_input, d_output;
  bool d_symmetrize = false;
  auto* dual_cmd =
      app.add_subcommand("dual", "Emit the dual-metric curvature tensor");
  dual_cmd->add_option("--input", d_input, "Tensor file")
      ->required()
      ->check(CLI::ExistingFile);
  dual_cmd->add_option("--output", d_output,
                       "Write the tensor file here instead of stdout");
  dual_cmd->add_flag("--symmetrize", d_symmetrize,
                     "Take the Hermitian part before validating");

  // example fubini-study
  int e_n = 0;
  std::string e_emit;
  double e_tol = 1e-9;
  auto* example_cmd = app.add_subcommand("example", "Built-in example tensors");
  example_cmd->require_subcommand(1);
  auto* fs_cmd = example_cmd->add_subcommand(
      "fubini-study",
      "Projective-space tangent-bundle curvature at a point; classifies, and "
      "optionally emits the tensor file");
  fs_cmd->add_option("--n", e_n, "Dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  fs_cmd->add_option("--emit", e_emit,
                     "Also write the tensor file here ('-' writes the file to "
                     "stdout instead of the report)");
  fs_cmd->add_option("--tol", e_tol, "Classification tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // verify
  int v_n = 0, v_r = 0, v_trials = 20;
  std::uint64_t v_seed = 1;
  double v_tol_oracle = 1e-10, v_tol_quadratic = 1e-10, v_tol_realness = 1e-12,
         v_tol_spectrum = 1e-9, v_tol_sign = 1e-12, v_tol_block = 1e-13,
         v_tol_inverse = 1e-8, v_tol_class = 1e-9;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the full property suite at one cell size");
  verify_cmd->add_option("--n", v_n, "Dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r", v_r, "Fiber rank")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", v_trials, "Random draws per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", v_seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--tol-oracle", v_tol_oracle,
                         "Entrywise tolerance for oracle/intertwine checks")
      ->capture_default_str();
  verify_cmd->add_option("--tol-quadratic", v_tol_quadratic,
                         "Relative tolerance for quadratic-form checks")
      ->capture_default_str();
  verify_cmd->add_option("--tol-realness", v_tol_realness,
                         "Imaginary-part bound for the quadratic form")
      ->capture_default_str();
  verify_cmd->add_option("--tol-spectrum", v_tol_spectrum,
                         "Eigenvalue comparison tolerance")
      ->capture_default_str();
  verify_cmd->add_option("--tol-sign", v_tol_sign,
                         "Tolerance for exact sign-level identities")
      ->capture_default_str();
  verify_cmd->add_option("--tol-block", v_tol_block,
                         "Tolerance for the coefficient-block identity")
      ->capture_default_str();
  verify_cmd->add_option("--tol-inverse", v_tol_inverse,
                         "Relative tolerance for the inverse pairing")
      ->capture_default_str();
  verify_cmd->add_option("--tol-class", v_tol_class,
                         "Classification tolerance for cone checks")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("curvop");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "curvop 1.0.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*matrix_cmd) {
      const CurvatureTensor c =
          read_tensor_file(m_input, {m_symmetrize, 1e-12});
      if (m_p > c.ambient() || m_q > c.ambient())
        throw std::invalid_argument("bidegree (" + std::to_string(m_p) + "," +
                                    std::to_string(m_q) +
                                    ") out of range for n=" +
                                    std::to_string(c.ambient()));
      const OperatorMatrix om = operator_matrix(c, m_p, m_q);
      const Eigen::VectorXd spec = hermitian_spectrum(om.mat);
      if (format == "json") {
        json rows = json::array();
        for (Eigen::Index i = 0; i < om.mat.rows(); ++i) {
          json row = json::array();
          for (Eigen::Index j = 0; j < om.mat.cols(); ++j)
            row.push_back(cx_json(om.mat(i, j)));
          rows.push_back(row);
        }
        json j{{"command", "matrix"},
               {"input", m_input},
               {"n", c.ambient()},
               {"r", c.rank()},
               {"bidegree", json::array({m_p, m_q})},
               {"dim", om.dim()},
               {"matrix", rows},
               {"spectrum", vec_json(spec)},
               {"class", cone_name(classify(spec))},
               {"tol", 1e-9}};
        out << j.dump(2) << "\n";
      } else {
        out << "operator matrix: n=" << c.ambient() << " r=" << c.rank()
            << " bidegree=(" << m_p << "," << m_q << ") dim=" << om.dim()
            << "\n";
        for (Eigen::Index i = 0; i < om.mat.rows(); ++i) {
          out << " ";
          for (Eigen::Index j = 0; j < om.mat.cols(); ++j)
            out << " " << cx_text(om.mat(i, j));
          out << "\n";
        }
        out << "spectrum: " << spectrum_text(spec) << "\n";
        out << "class: " << cone_name(classify(spec)) << "\n";
      }
      return 0;
    }

    if (*classify_cmd) {
      const CurvatureTensor c =
          read_tensor_file(c_input, {c_symmetrize, 1e-12});
      const Classification cl =
          classify_tensor(c, c_tol, c_restarts, c_iterations, c_seed);
      if (format == "json") {
        json j = classification_json(c_input, c, c_tol, cl);
        j["command"] = "classify";
        out << j.dump(2) << "\n";
      } else {
        print_classification_text(out, c_input, c, c_tol, cl);
      }
      return 0;
    }

    if (*star_cmd) {
      const BundleForm u = read_form_file(s_input);
      write_form_output(hodge_star(u), s_output, format, "star", s_input, u,
                        out);
      return 0;
    }

    if (*tilde_cmd) {
      const BundleForm u = read_form_file(t_input);
      write_form_output(tilde_map(u), t_output, format, "tilde", t_input, u,
                        out);
      return 0;
    }

    if (*dual_cmd) {
      const CurvatureTensor c =
          read_tensor_file(d_input, {d_symmetrize, 1e-12});
      const CurvatureTensor d = dual_tensor(c);
      if (!d_output.empty()) {
        std::ofstream f(d_output);
        if (!f)
          throw std::invalid_argument("cannot write tensor file: " + d_output);
        write_tensor(f, d);
      }
      if (format == "json") {
        json entries = json::array();
        for (int j = 1; j <= d.ambient(); ++j)
          for (int k = 1; k <= d.ambient(); ++k)
            for (int lambda = 1; lambda <= d.rank(); ++lambda)
              for (int mu = 1; mu <= d.rank(); ++mu) {
                const cx v = d.at(j, k, lambda, mu);
                if (v == cx(0.0, 0.0)) continue;
                entries.push_back(json{{"j", j},
                                       {"k", k},
                                       {"lambda", lambda},
                                       {"mu", mu},
                                       {"value", cx_json(v)}});
              }
        json j{{"command", "dual"},
               {"input", d_input},
               {"n", d.ambient()},
               {"r", d.rank()},
               {"entries", entries},
               {"output_file", d_output.empty() ? json(nullptr)
                                                : json(d_output)}};
        out << j.dump(2) << "\n";
      } else if (d_output.empty()) {
        write_tensor(out, d);
      } else {
        out << "dual: wrote tensor to " << d_output << "\n";
      }
      return 0;
    }

    if (*fs_cmd) {
      const CurvatureTensor c = fubini_study_tensor(e_n);
      if (e_emit == "-") {
        write_tensor(out, c);
        return 0;
      }
      if (!e_emit.empty()) {
        std::ofstream f(e_emit);
        if (!f)
          throw std::invalid_argument("cannot write tensor file: " + e_emit);
        write_tensor(f, c);
      }
      const Classification cl = classify_tensor(c, e_tol, 8, 60, 1);
      if (format == "json") {
        json j = classification_json("fubini-study n=" + std::to_string(e_n),
                                     c, e_tol, cl);
        j["command"] = "example-fubini-study";
        j["emitted"] = e_emit.empty() ? json(nullptr) : json(e_emit);
        out << j.dump(2) << "\n";
      } else {
        print_classification_text(
            out, "fubini-study n=" + std::to_string(e_n), c, e_tol, cl);
        if (!e_emit.empty()) out << "emitted tensor file: " << e_emit << "\n";
      }
      return 0;
    }

    if (*verify_cmd)
      return run_verify(out, format, v_n, v_r, v_trials, v_seed, v_tol_oracle,
                        v_tol_quadratic, v_tol_realness, v_tol_spectrum,
                        v_tol_sign, v_tol_block, v_tol_inverse, v_tol_class);

    err << "error: no subcommand selected\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace curvop
