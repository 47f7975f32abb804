#include "mspace/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace mspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using json = nlohmann::json;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string fmt_pair(Complex v) {
  return "[" + fmt17(v.real()) + ", " + fmt17(v.imag()) + "]";
}

Complex parse_pair(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    fail(ErrorCode::Validation, field + ": expected [re, im]");
  }
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    xs.push_back(i == n - 1 ? hi : lo + i * step);
  }
  return xs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Validation, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Tolerances::Tolerances() {
  values_ = {
      {"grid_unimodularity", 1e-10},
      {"schwarz_reflection", 1e-10},
      {"modulus_bound", 1e-12},
      {"characteristic_at_i", 1e-13},
      {"characteristic_unimodular", 1e-10},
      {"phase_identity", 1e-10},
      {"phase_fd", 1e-6},
      {"spectrum_tau_residual", 1e-10},
      {"spectrum_eigen_equation", 1e-8},
      {"spectrum_spacing", 1e-9},
      {"gram_offdiag", 1e-9},
      {"parseval", 1e-9},
      {"reconstruction", 1e-9},
      {"ratio_residual", 1e-9},
      {"exponent_neutrality", 1e-12},
      {"termwise_identity", 1e-12},
      {"coverage_residual", 1e-9},
      {"coverage_separation", 1e-6},
      {"norm_symmetry", 1e-12},
      {"quadrature_relative", 1e-2},
      {"exact", 0.0},
  };
}

double Tolerances::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) {
    fail(ErrorCode::Validation, "unknown tolerance name: " + name);
  }
  return it->second;
}

void Tolerances::set(const std::string& name, double value) {
  auto it = values_.find(name);
  if (it == values_.end()) {
    fail(ErrorCode::Validation, "unknown tolerance name: " + name);
  }
  it->second = value;
}

InnerFunctionSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::Validation, "spec: expected an object");
  if (!j.contains("gamma")) fail(ErrorCode::Validation, "gamma: missing");
  if (!j.contains("sigma") || !j["sigma"].is_number()) {
    fail(ErrorCode::Validation, "sigma: missing or not a number");
  }
  if (!j.contains("zeros") || !j["zeros"].is_array()) {
    fail(ErrorCode::Validation, "zeros: missing or not an array");
  }
  const Complex gamma = parse_pair(j["gamma"], "gamma");
  const double sigma = j["sigma"].get<double>();
  std::vector<Complex> zeros;
  zeros.reserve(j["zeros"].size());
  for (std::size_t i = 0; i < j["zeros"].size(); ++i) {
    zeros.push_back(
        parse_pair(j["zeros"][i], "zeros[" + std::to_string(i) + "]"));
  }
  bool tail = false;
  if (j.contains("tail_im_sum_diverges")) {
    if (!j["tail_im_sum_diverges"].is_boolean()) {
      fail(ErrorCode::Validation, "tail_im_sum_diverges: expected a boolean");
    }
    tail = j["tail_im_sum_diverges"].get<bool>();
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      fail(ErrorCode::Validation, "label: expected a string");
    }
    label = j["label"].get<std::string>();
  }
  return InnerFunctionSpec(gamma, sigma, std::move(zeros), tail,
                           std::move(label));
}

InnerFunctionSpec load_spec(const std::string& path) {
  return parse_spec_text(read_file(path));
}

std::string spec_to_json(const InnerFunctionSpec& spec) {
  std::string out = "{\"gamma\": " + fmt_pair(spec.gamma()) +
                    ", \"sigma\": " + fmt17(spec.sigma()) + ", \"zeros\": [";
  for (std::size_t i = 0; i < spec.zeros().size(); ++i) {
    if (i) out += ", ";
    out += fmt_pair(spec.zeros()[i]);
  }
  out += "], \"tail_im_sum_diverges\": ";
  out += spec.tail_im_sum_diverges() ? "true" : "false";
  out += ", \"label\": \"" + json_escape(spec.label()) + "\"}";
  return out;
}

DeBrangesSpec parse_debranges_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  DeBrangesSpec e;
  if (!j.contains("gamma_e")) fail(ErrorCode::Validation, "gamma_e: missing");
  e.gamma_e = parse_pair(j["gamma_e"], "gamma_e");
  if (!j.contains("sigma_e") || !j["sigma_e"].is_number()) {
    fail(ErrorCode::Validation, "sigma_e: missing or not a number");
  }
  e.sigma_e = j["sigma_e"].get<double>();
  if (e.sigma_e < 0.0) fail(ErrorCode::Validation, "sigma_e: must be >= 0");
  if (!j.contains("zeros_conj") || !j["zeros_conj"].is_array()) {
    fail(ErrorCode::Validation, "zeros_conj: missing or not an array");
  }
  for (std::size_t i = 0; i < j["zeros_conj"].size(); ++i) {
    e.zeros_conj.push_back(parse_pair(
        j["zeros_conj"][i], "zeros_conj[" + std::to_string(i) + "]"));
  }
  if (j.contains("convergence_exponents")) {
    e.convergence_exponents = j["convergence_exponents"].get<bool>();
  }
  return e;
}

std::vector<Sample> load_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Validation, "cannot open samples file: " + path);
  std::vector<Sample> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x = 0.0, re = 0.0, im = 0.0;
    if (!(row >> x)) {
      if (lineno == 1) continue;  // header row
      fail(ErrorCode::Parse,
           "samples: unparsable row " + std::to_string(lineno));
    }
    if (!(row >> re >> im)) {
      fail(ErrorCode::Parse,
           "samples: row " + std::to_string(lineno) +
               " needs columns lambda, re, im");
    }
    samples.push_back(Sample{x, Complex{re, im}});
  }
  if (samples.empty()) fail(ErrorCode::Validation, "samples: file is empty");
  return samples;
}

// ---------------------------------------------------------------------------
// Invariant suite
// ---------------------------------------------------------------------------

namespace {

class CheckRecorder {
 public:
  explicit CheckRecorder(const Tolerances& tol) : tol_(tol) {}

  void residual(const std::string& name, double measured,
                const std::string& tolerance_name) {
    const double t = tol_.get(tolerance_name);
    items_.push_back(CheckItem{name, measured <= t, measured, t,
                               tolerance_name});
  }

  void boolean(const std::string& name, bool ok) {
    items_.push_back(CheckItem{name, ok, ok ? 0.0 : 1.0, 0.0, "exact"});
  }

  std::vector<CheckItem> take() { return std::move(items_); }

 private:
  const Tolerances& tol_;
  std::vector<CheckItem> items_;
};

// A random point in the open upper half-plane, kept away from the zeros and
// poles of the spec.
Complex random_upper(std::mt19937_64& rng, const InnerFunctionSpec& f,
                     double xmax, double ymax) {
  std::uniform_real_distribution<double> ux(-xmax, xmax);
  std::uniform_real_distribution<double> uy(1e-3, ymax);
  for (int tries = 0; tries < 100; ++tries) {
    const Complex z{ux(rng), uy(rng)};
    bool clear = true;
    for (const Complex& zn : f.zeros()) {
      if (std::abs(z - zn) < 0.05) clear = false;
    }
    if (clear) return z;
  }
  return Complex{0.0, 1.0};
}

}  // namespace

std::vector<CheckItem> run_check_suite(const SpecPtr& spec,
                                       const Tolerances& tol) {
  if (!spec) fail(ErrorCode::Validation, "run_check_suite: null spec");
  const InnerFunctionSpec& f = *spec;
  CheckRecorder rec(tol);
  std::mt19937_64 rng(0x6d7370616365ull);

  // |F(x)| = 1 on the axis; also the essential-spectrum sanity check (every
  // real point is regular for meromorphic specs).
  {
    double worst = 0.0;
    for (double x : linspace(-50.0, 50.0, 2001)) {
      worst = std::max(worst, std::abs(std::abs(f.eval(x)) - 1.0));
    }
    rec.residual("unimodularity_grid", worst, "grid_unimodularity");
  }

  // F(z) conj(F(conj z)) = 1 off the poles.
  {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Complex z = random_upper(rng, f, 30.0, 3.0);
      worst = std::max(
          worst, std::abs(f.eval(z) * std::conj(f.eval(std::conj(z))) - 1.0));
    }
    rec.residual("schwarz_reflection", worst, "schwarz_reflection");
  }

  {
    double worst = -1.0;
    for (int k = 0; k < 1000; ++k) {
      const Complex z = random_upper(rng, f, 40.0, 5.0);
      worst = std::max(worst, std::abs(f.eval(z)) - 1.0);
    }
    rec.residual("modulus_bound", worst, "modulus_bound");
  }

  rec.residual("characteristic_at_i",
               std::abs(f.characteristic(Complex{0.0, 1.0})),
               "characteristic_at_i");

  {
    double worst = 0.0;
    for (double x : linspace(-40.0, 40.0, 801)) {
      worst = std::max(worst, std::abs(std::abs(f.characteristic(x)) - 1.0));
    }
    rec.residual("characteristic_unimodular", worst,
                 "characteristic_unimodular");
  }

  PhaseFunction phase(spec, -50.0, 50.0);

  // tau' = 2 pi ||k_x||^2, the module's central identity.
  {
    double worst = 0.0;
    for (double x : linspace(-50.0, 50.0, 2001)) {
      const double lhs = phase.derivative(x);
      const double rhs = kTwoPi * kernel_norm_sq(f, x);
      worst = std::max(worst, std::abs(lhs - rhs) / lhs);
    }
    rec.residual("phase_identity", worst, "phase_identity");
  }

  {
    const double h = 1e-5;
    double worst = 0.0;
    for (double x : linspace(-10.0, 10.0, 101)) {
      const double fd = (phase.value(x + h) - phase.value(x - h)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - phase.derivative(x)));
    }
    rec.residual("phase_fd", worst, "phase_fd");
  }

  const double wlo = -20.0;
  const double whi = 20.0;
  const std::vector<double> betas = {0.5, 2.0, 4.0};

  {
    double worst_tau = 0.0;
    double worst_eig = 0.0;
    double worst_gap = 0.0;
    for (double beta : betas) {
      const SpectrumReport rep = phase.spectrum(beta, wlo, whi);
      const Complex eib = std::polar(1.0, beta);
      for (std::size_t k = 0; k < rep.eigenvalues.size(); ++k) {
        const double lambda = rep.eigenvalues[k];
        const double target = beta + kTwoPi * rep.n_indices[k];
        worst_tau = std::max(worst_tau, std::abs(phase.value(lambda) - target));
        worst_eig = std::max(worst_eig, std::abs(f.eval(lambda) - eib));
        if (k > 0) {
          const double dt =
              phase.value(lambda) - phase.value(rep.eigenvalues[k - 1]);
          worst_gap = std::max(worst_gap, std::abs(dt - kTwoPi));
        }
      }
    }
    rec.residual("spectrum_tau_residual", worst_tau, "spectrum_tau_residual");
    rec.residual("spectrum_eigen_equation", worst_eig,
                 "spectrum_eigen_equation");
    rec.residual("spectrum_spacing", worst_gap, "spectrum_spacing");
  }

  {
    bool ok = true;
    const std::vector<std::pair<double, double>> pairs = {
        {0.5, 2.0}, {2.0, 4.0}, {0.5, 4.0}};
    for (const auto& [b1, b2] : pairs) {
      ok = ok && phase.alternation_check(b1, b2, wlo, whi);
    }
    rec.boolean("krein_alternation", ok);
  }

  {
    bool ok = true;
    std::uniform_real_distribution<double> ux(-15.0, 15.0);
    for (int k = 0; k < 20 && ok; ++k) {
      try {
        phase.coverage_check(ux(rng), tol.get("coverage_residual"),
                             tol.get("coverage_separation"));
      } catch (const Error&) {
        ok = false;
      }
    }
    rec.boolean("coverage", ok);
  }

  const SamplingSequence seq = build_sequence(spec, betas.front(), wlo, whi);

  {
    double worst = 0.0;
    const std::size_t n = std::min<std::size_t>(seq.lambdas.size(), 200);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        worst = std::max(
            worst, std::abs(kernel_eval(f, seq.lambdas[i], seq.lambdas[j])));
      }
    }
    rec.residual("gram_offdiag", worst, "gram_offdiag");
  }

  // Span element on the first (up to) two sampling nodes.
  std::vector<KernelTerm> span_terms;
  span_terms.push_back(
      KernelTerm{TermKind::Kernel, Complex{seq.lambdas.front(), 0.0},
                 Complex{1.0, 0.0}});
  if (seq.lambdas.size() > 1) {
    span_terms.push_back(
        KernelTerm{TermKind::Kernel, Complex{seq.lambdas[1], 0.0},
                   Complex{0.0, 2.0}});
  }
  const SpaceElement span_f(spec, span_terms);

  rec.residual("parseval", parseval_residual(span_f, seq), "parseval");

  {
    std::vector<Sample> samples;
    samples.reserve(seq.lambdas.size());
    for (double lambda : seq.lambdas) {
      samples.push_back(Sample{lambda, evaluate(span_f, lambda)});
    }
    double worst = 0.0;
    for (double x : linspace(-18.0, 18.0, 101)) {
      const Complex direct = evaluate(span_f, x);
      const Complex recon = reconstruct(seq, samples, x);
      worst = std::max(worst, std::abs(direct - recon));
    }
    rec.residual("reconstruction", worst, "reconstruction");
  }

  const DeBrangesSpec e = build_e(f, false);

  {
    double worst = 0.0;
    for (double x : linspace(-50.0, 50.0, 2001)) {
      worst = std::max(worst, ratio_residual(e, f, x));
    }
    rec.residual("ratio_residual", worst, "ratio_residual");
  }

  {
    bool ok = true;
    for (int k = 0; k < 500; ++k) {
      const Complex z = random_upper(rng, f, 30.0, 5.0);
      if (!(std::abs(eval_e(e, z)) > std::abs(eval_e(e, std::conj(z))))) {
        ok = false;
      }
    }
    rec.boolean("debranges_inequality", ok);
  }

  {
    const DeBrangesSpec e_on = build_e(f, true);
    double worst = 0.0;
    for (double x : linspace(-10.0, 10.0, 101)) {
      const Complex r_off = eval_e_star(e, x) / eval_e(e, x);
      const Complex r_on = eval_e_star(e_on, x) / eval_e(e_on, x);
      worst = std::max(worst, std::abs(r_off - r_on));
    }
    rec.residual("exponent_neutrality", worst, "exponent_neutrality");
  }

  {
    double worst = 0.0;
    for (const Complex& zn : f.zeros()) {
      const Complex an = to_disk(zn);
      const double lhs =
          (1.0 - std::norm(an)) / std::norm(Complex{1.0, 0.0} - an);
      worst = std::max(worst, std::abs(lhs - zn.imag()));
    }
    rec.residual("termwise_identity", worst, "termwise_identity");
  }

  {
    const DensityReport report = dense_defined_report(f);
    const AngularDerivativeIndicator ind =
        angular_derivative_indicator(f, Complex{1.0, 0.0});
    bool ok = ind.flagged_infinite == (f.sigma() > 0.0);
    if (f.sigma() > 0.0) {
      ok = ok && report.verdict == DensityVerdict::DenselyDefined;
    } else if (f.tail_im_sum_diverges()) {
      ok = ok &&
           report.verdict == DensityVerdict::DeclaredDenselyDefinedByTail;
    } else {
      ok = ok && report.verdict == DensityVerdict::NotDenselyDefined;
    }
    rec.boolean("density_consistency", ok);
  }

  {
    bool ok = true;
    std::uniform_real_distribution<double> ux(-25.0, 25.0);
    for (int k = 0; k < 20; ++k) {
      const double s = eigenvalue_admissibility_sum(f, ux(rng));
      if (!std::isfinite(s) || s < 0.0) ok = false;
    }
    rec.boolean("admissibility_finite", ok);
  }

  {
    const DeficiencyPair pair = deficiency_vectors(spec);
    const double ratio = norm(pair.psi_plus) / norm(pair.psi_minus);
    rec.residual("deficiency_norms", std::abs(ratio - 1.0), "norm_symmetry");
  }

  {
    const SpaceElement k0 =
        SpaceElement::kernel(spec, Complex{seq.lambdas.front(), 0.0});
    const double exact = inner_product(k0, k0).real();
    const WeightedInnerProduct quad =
        l2_weight_inner_product(e, k0, k0, -200.0, 200.0, 20000);
    rec.residual("quadrature_cross_check",
                 std::abs(quad.value.real() - exact) / exact,
                 "quadrature_relative");
  }

  return rec.take();
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

namespace {

void emit_info(const InnerFunctionSpec& f, const RunConfig& config,
               std::ostream& out) {
  const DensityReport density = dense_defined_report(f);
  PhaseFunction phase(std::make_shared<const InnerFunctionSpec>(f),
                      config.window_lo, config.window_hi);
  out << "{\"label\": \"" << json_escape(f.label()) << "\"";
  out << ", \"gamma\": " << fmt_pair(f.gamma());
  out << ", \"sigma\": " << fmt17(f.sigma());
  out << ", \"zeros\": [";
  for (std::size_t i = 0; i < f.zeros().size(); ++i) {
    if (i) out << ", ";
    out << fmt_pair(f.zeros()[i]);
  }
  out << "], \"tail_im_sum_diverges\": "
      << (f.tail_im_sum_diverges() ? "true" : "false");
  out << ", \"f_at_i\": " << fmt_pair(f.value_at_i());
  out << ", \"phase_anchor\": " << fmt17(phase.anchor());
  out << ", \"window\": [" << fmt17(config.window_lo) << ", "
      << fmt17(config.window_hi) << "]";
  out << ", \"tau_range\": [" << fmt17(phase.value(config.window_lo)) << ", "
      << fmt17(phase.value(config.window_hi)) << "]";
  out << ", \"density\": {\"sigma\": " << fmt17(density.sigma)
      << ", \"partial_im_sum\": " << fmt17(density.partial_im_sum)
      << ", \"tail_flag\": " << (density.tail_flag ? "true" : "false")
      << ", \"verdict\": \"" << to_string(density.verdict) << "\"}";
  out << "}\n";
}

void emit_eval(const InnerFunctionSpec& f, const RunConfig& config,
               std::ostream& out) {
  out << "x,re_F,im_F,abs_F\n";
  for (double x : linspace(config.window_lo, config.window_hi,
                           config.grid_points)) {
    const Complex v = f.eval(x);
    out << fmt17(x) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ','
        << fmt17(std::abs(v)) << '\n';
  }
}

void emit_kernel(const InnerFunctionSpec& f, const RunConfig& config,
                 std::ostream& out) {
  if (config.kernel_node.imag() < 0.0) {
    fail(ErrorCode::Validation,
         "node: must lie in the closed upper half-plane");
  }
  out << "x,re_k,im_k\n";
  for (double x : linspace(config.window_lo, config.window_hi,
                           config.grid_points)) {
    const Complex v = kernel_eval(f, config.kernel_node, x);
    out << fmt17(x) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag())
        << '\n';
  }
}

void emit_phase(const SpecPtr& spec, const RunConfig& config,
                std::ostream& out) {
  PhaseFunction phase(spec, config.window_lo, config.window_hi);
  out << "x,tau,tau_prime,kernel_norm_sq\n";
  for (double x : linspace(config.window_lo, config.window_hi,
                           config.grid_points)) {
    out << fmt17(x) << ',' << fmt17(phase.value(x)) << ','
        << fmt17(phase.derivative(x)) << ',' << fmt17(kernel_norm_sq(*spec, x))
        << '\n';
  }
}

void emit_spectrum(const SpecPtr& spec, const RunConfig& config, double beta,
                   std::ostream& out) {
  PhaseFunction phase(spec, config.window_lo, config.window_hi);
  const SpectrumReport rep =
      phase.spectrum(beta, config.window_lo, config.window_hi);
  out << "{\"beta\": " << fmt17(beta)
      << ", \"alpha\": " << fmt17(alpha_of_beta(*spec, beta)) << ", \"window\": ["
      << fmt17(config.window_lo) << ", " << fmt17(config.window_hi)
      << "], \"count\": " << rep.eigenvalues.size() << ", \"eigenvalues\": [";
  for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
    if (i) out << ", ";
    out << fmt17(rep.eigenvalues[i]);
  }
  out << "], \"n_indices\": [";
  for (std::size_t i = 0; i < rep.n_indices.size(); ++i) {
    if (i) out << ", ";
    out << rep.n_indices[i];
  }
  out << "]}\n";
}

void emit_sample(const SpecPtr& spec, const RunConfig& config, double beta,
                 std::ostream& out) {
  const SamplingSequence seq =
      build_sequence(spec, beta, config.window_lo, config.window_hi);
  out << "n,lambda,norm_sq\n";
  for (std::size_t i = 0; i < seq.lambdas.size(); ++i) {
    out << seq.n_indices[i] << ',' << fmt17(seq.lambdas[i]) << ','
        << fmt17(seq.norms_sq[i]) << '\n';
  }
}

void emit_reconstruct(const SpecPtr& spec, const RunConfig& config,
                      double resolved_beta, std::ostream& out,
                      std::ostream& diag) {
  if (config.samples_path.empty()) {
    fail(ErrorCode::Validation, "reconstruct: --samples is required");
  }
  const std::vector<Sample> samples = load_samples_csv(config.samples_path);

  double lo = config.window_lo;
  double hi = config.window_hi;
  if (!config.window_given) {
    auto [mn, mx] = std::minmax_element(
        samples.begin(), samples.end(),
        [](const Sample& a, const Sample& b) { return a.position < b.position; });
    lo = mn->position - 1e-6;
    hi = mx->position + 1e-6;
  }

  double beta = resolved_beta;
  if (!config.beta_given && !config.alpha_given) {
    PhaseFunction phase(spec, lo, hi);
    beta = mod_two_pi(phase.value(samples.front().position));
  }

  const SamplingSequence seq = build_sequence(spec, beta, lo, hi);

  // Reference values. With --omega the reconstruction is cross-checked
  // against the classical sinc series in the Paley-Wiener picture: the
  // samples are transported by E(x) = e^{-i omega x}, interpolated with
  // sinc, and mapped back. Without it the reference is the span element the
  // samples determine, evaluated through the model-space algebra.
  std::vector<KernelTerm> terms;
  terms.reserve(samples.size());
  for (std::size_t n = 0; n < std::min(samples.size(), seq.lambdas.size());
       ++n) {
    terms.push_back(KernelTerm{TermKind::Kernel,
                               Complex{seq.lambdas[n], 0.0},
                               samples[n].value / seq.norms_sq[n]});
  }
  const SpaceElement span_f(spec, terms);

  std::vector<Sample> e_samples;
  if (config.omega_given) {
    e_samples = samples;
    for (Sample& s : e_samples) {
      s.value *= std::exp(Complex{0.0, -config.omega * s.position});
    }
  }

  const double grid_lo = config.window_given ? config.window_lo : lo;
  const double grid_hi = config.window_given ? config.window_hi : hi;
  double max_err = 0.0;
  out << "x,re_f,im_f,re_recon,im_recon,abs_err\n";
  for (double x : linspace(grid_lo, grid_hi, config.grid_points)) {
    const Complex recon = reconstruct(seq, samples, x);
    const Complex ref =
        config.omega_given
            ? shannon_reference(config.omega, e_samples, x) *
                  std::exp(Complex{0.0, config.omega * x})
            : evaluate(span_f, x);
    const double err = std::abs(ref - recon);
    max_err = std::max(max_err, err);
    out << fmt17(x) << ',' << fmt17(ref.real()) << ',' << fmt17(ref.imag())
        << ',' << fmt17(recon.real()) << ',' << fmt17(recon.imag()) << ','
        << fmt17(err) << '\n';
  }
  diag << "max_abs_err=" << fmt17(max_err) << "\n";
}

void emit_build_e(const SpecPtr& spec, const RunConfig& config,
                  std::ostream& out, std::ostream& diag) {
  const DeBrangesSpec e = build_e(*spec, config.convergence_exponents);
  double worst = 0.0;
  for (double x : linspace(-50.0, 50.0, 2001)) {
    worst = std::max(worst, ratio_residual(e, *spec, x));
  }
  out << "{\"gamma_e\": " << fmt_pair(e.gamma_e)
      << ", \"sigma_e\": " << fmt17(e.sigma_e) << ", \"zeros_conj\": [";
  for (std::size_t i = 0; i < e.zeros_conj.size(); ++i) {
    if (i) out << ", ";
    out << fmt_pair(e.zeros_conj[i]);
  }
  out << "], \"convergence_exponents\": "
      << (e.convergence_exponents ? "true" : "false");
  out << ", \"ratio_residual\": {\"window\": [-50, 50], \"grid_points\": 2001, "
         "\"max\": "
      << fmt17(worst) << "}}\n";
  diag << "max_ratio_residual=" << fmt17(worst) << "\n";
}

int emit_check(const SpecPtr& spec, const RunConfig& config,
               std::ostream& out) {
  const std::vector<CheckItem> items =
      run_check_suite(spec, config.tolerances);
  bool all_pass = true;
  for (const CheckItem& item : items) all_pass = all_pass && item.pass;
  out << "{\"label\": \"" << json_escape(spec->label())
      << "\", \"all_pass\": " << (all_pass ? "true" : "false")
      << ", \"results\": [";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const CheckItem& item = items[i];
    if (i) out << ", ";
    out << "{\"name\": \"" << item.name << "\", \"pass\": "
        << (item.pass ? "true" : "false")
        << ", \"measured\": " << fmt17(item.measured)
        << ", \"tolerance\": " << fmt17(item.tolerance)
        << ", \"tolerance_name\": \"" << item.tolerance_name << "\"}";
  }
  out << "]}\n";
  return all_pass ? 0 : 2;
}

}  // namespace

int run(const RunConfig& config, std::ostream& artifact, std::ostream& diag) {
  if (config.grid_points < 2) {
    fail(ErrorCode::Validation, "grid: need at least 2 points");
  }
  if (!(config.window_lo < config.window_hi)) {
    fail(ErrorCode::Validation, "window: need lo < hi");
  }
  auto spec =
      std::make_shared<const InnerFunctionSpec>(load_spec(config.spec_path));

  double beta = mod_two_pi(config.beta);
  if (config.alpha_given) {
    beta = beta_of_alpha(*spec, mod_two_pi(config.alpha));
  }

  std::ofstream file;
  std::ostream* out = &artifact;
  if (!config.output_path.empty()) {
    file.open(config.output_path, std::ios::binary);
    if (!file) {
      fail(ErrorCode::Validation,
           "cannot open output file: " + config.output_path);
    }
    out = &file;
  }

  switch (config.command) {
    case Command::Info:
      emit_info(*spec, config, *out);
      return 0;
    case Command::Eval:
      emit_eval(*spec, config, *out);
      return 0;
    case Command::Kernel:
      emit_kernel(*spec, config, *out);
      return 0;
    case Command::Phase:
      emit_phase(spec, config, *out);
      return 0;
    case Command::Spectrum:
      emit_spectrum(spec, config, beta, *out);
      return 0;
    case Command::Sample:
      emit_sample(spec, config, beta, *out);
      return 0;
    case Command::Reconstruct:
      emit_reconstruct(spec, config, beta, *out, diag);
      return 0;
    case Command::BuildE:
      emit_build_e(spec, config, *out, diag);
      return 0;
    case Command::Check:
      return emit_check(spec, config, *out);
  }
  fail(ErrorCode::Internal, "unknown command");
}

}  // namespace mspace
