#include <clocale>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mspace/io.hpp"

namespace {

struct CliState {
  mspace::RunConfig config;
  std::vector<double> window;
  std::vector<double> node;
  double beta = 0.0;
  double alpha = 0.0;
  std::vector<std::string> tol_overrides;
};

void add_common_options(CLI::App* cmd, CliState& state) {
  cmd->add_option("--spec", state.config.spec_path, "inner function spec JSON")
      ->required();
  cmd->add_option("--window", state.window, "evaluation window LO HI")
      ->expected(2);
  cmd->add_option("--beta", state.beta,
                  "extension parameter beta (normalized into [0, 2pi))");
  cmd->add_option("--alpha", state.alpha,
                  "extension parameter alpha (converted to beta)");
  cmd->add_option("--grid", state.config.grid_points, "grid point count");
  cmd->add_option("--out", state.config.output_path, "output file path");
  cmd->add_option("--samples", state.config.samples_path,
                  "samples CSV (columns lambda, re, im)");
  cmd->add_option("--omega", state.config.omega,
                  "Shannon reference bandwidth");
  cmd->add_option("--node", state.node,
                  "kernel node RE [IM] for the kernel command")
      ->expected(1, 2);
  cmd->add_flag("--exponents", state.config.convergence_exponents,
                "include convergence-exponent factors in build-e");
  cmd->add_option("--tol", state.tol_overrides,
                  "tolerance override NAME=VALUE (repeatable)");
}

void finalize(CLI::App* cmd, CliState& state) {
  if (state.window.size() == 2) {
    state.config.window_lo = state.window[0];
    state.config.window_hi = state.window[1];
    state.config.window_given = true;
  }
  if (cmd->count("--beta") > 0) {
    state.config.beta = state.beta;
    state.config.beta_given = true;
  }
  if (cmd->count("--alpha") > 0) {
    state.config.alpha = state.alpha;
    state.config.alpha_given = true;
  }
  if (cmd->count("--omega") > 0) state.config.omega_given = true;
  if (state.node.size() >= 1) {
    state.config.kernel_node =
        mspace::Complex{state.node[0], state.node.size() > 1 ? state.node[1] : 0.0};
  }
  for (const std::string& item : state.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      mspace::fail(mspace::ErrorCode::Validation,
                   "--tol expects NAME=VALUE, got: " + item);
    }
    const std::string name = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      mspace::fail(mspace::ErrorCode::Validation,
                   "--tol " + name + ": unparsable value");
    }
    state.config.tolerances.set(name, value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{
      "mspace: model-space kernels, extension spectra, orthogonal sampling "
      "and de Branges functions for meromorphic inner functions"};
  app.require_subcommand(1);

  CliState state;
  const std::vector<std::pair<std::string, mspace::Command>> commands = {
      {"info", mspace::Command::Info},
      {"eval", mspace::Command::Eval},
      {"kernel", mspace::Command::Kernel},
      {"phase", mspace::Command::Phase},
      {"spectrum", mspace::Command::Spectrum},
      {"sample", mspace::Command::Sample},
      {"reconstruct", mspace::Command::Reconstruct},
      {"build-e", mspace::Command::BuildE},
      {"check", mspace::Command::Check},
  };
  for (const auto& [name, command] : commands) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common_options(cmd, state);
    cmd->callback([&state, cmd, command = command] {
      state.config.command = command;
      finalize(cmd, state);
    });
  }

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 1;
    }
    return mspace::run(state.config, std::cout, std::cerr);
  } catch (const mspace::Error& e) {
    std::cerr << "{\"error\": {\"code\": \"" << mspace::to_string(e.code())
              << "\", \"message\": \"" << e.what() << "\"}}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": {\"code\": \"INTERNAL\", \"message\": \""
              << e.what() << "\"}}\n";
    return 1;
  }
}
