#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mspace/debranges.hpp"
#include "mspace/density.hpp"
#include "mspace/sampling.hpp"

namespace mspace {

/// Named tolerance registry with spec-pinned defaults. Every assertion the
/// `check` command makes reports which named tolerance it used; values are
/// overridable via --tol NAME=VALUE.
class Tolerances {
 public:
  Tolerances();
  double get(const std::string& name) const;
  void set(const std::string& name, double value);
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

/// Deterministic float formatting: up to 17 significant digits, '.' decimal
/// separator, lowercase 'e' exponent. Identical inputs always produce
/// byte-identical text.
std::string fmt17(double v);

InnerFunctionSpec load_spec(const std::string& path);
InnerFunctionSpec parse_spec_text(const std::string& text);
std::string spec_to_json(const InnerFunctionSpec& spec);

DeBrangesSpec parse_debranges_text(const std::string& text);

std::vector<Sample> load_samples_csv(const std::string& path);

enum class Command {
  Info,
  Eval,
  Kernel,
  Phase,
  Spectrum,
  Sample,
  Reconstruct,
  BuildE,
  Check,
};

struct RunConfig {
  std::string spec_path;
  Command command = Command::Info;
  double window_lo = -10.0;
  double window_hi = 10.0;
  bool window_given = false;
  double beta = 0.0;
  bool beta_given = false;
  bool alpha_given = false;
  double alpha = 0.0;
  int grid_points = 201;
  std::string output_path;   // empty: artifact goes to the primary stream
  std::string samples_path;  // reconstruct input
  bool omega_given = false;
  double omega = 0.0;        // Shannon reference bandwidth
  Complex kernel_node{0.0, 0.0};
  bool convergence_exponents = false;
  Tolerances tolerances;
};

struct CheckItem {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string tolerance_name;
};

/// Full invariant suite for one spec; deterministic (fixed RNG seed).
std::vector<CheckItem> run_check_suite(const SpecPtr& spec,
                                       const Tolerances& tol);

/// Execute one command. The artifact is written to config.output_path when
/// set, otherwise to `artifact`; human-oriented summaries go to `diag`.
/// Returns 0 on success, 1 on validation failure, 2 when the check suite
/// reports any failed invariant.
int run(const RunConfig& config, std::ostream& artifact, std::ostream& diag);

}  // namespace mspace
