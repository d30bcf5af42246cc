#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ptmm/run.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  bool svg = false;
};

void add_common_options(CLI::App* command, CliOptions& options) {
  command->add_option("--config", options.config_path,
                      "JSON config file (defaults apply when omitted)");
  command->add_option("--out", options.out_dir,
                      "output directory (overrides the config)");
  command->add_flag("--svg", options.svg, "also emit SVG plots");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon transport in one-dimensional photonic crystals"};
  app.require_subcommand(1);

  CliOptions options;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "frequency sweep of T, R and the classical reference");
  CLI::App* profile = app.add_subcommand(
      "profile", "probability density and current across the stack");
  CLI::App* bandgap = app.add_subcommand(
      "bandgap", "band gap intervals and tunneling decay lengths");
  CLI::App* validate = app.add_subcommand(
      "validate", "cross-engine and conservation checks, nonzero exit on failure");
  for (CLI::App* command : {spectrum, profile, bandgap, validate}) {
    add_common_options(command, options);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? ptmm::kExitOk : ptmm::kExitUsage;
  }

  std::string config_text = "{}";
  if (!options.config_path.empty()) {
    std::ifstream stream(options.config_path, std::ios::binary);
    if (!stream) {
      std::cerr << "error: cannot read config file '" << options.config_path
                << "'\n";
      return ptmm::kExitUsage;
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    config_text = buffer.str();
  }

  ptmm::RunConfig config;
  try {
    config = ptmm::parse_config(config_text);
  } catch (const ptmm::ConfigError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return ptmm::kExitUsage;
  }
  if (!options.out_dir.empty()) {
    config.output.directory = options.out_dir;
  }
  if (options.svg) {
    config.output.emit_svg = true;
  }

  ptmm::Command command = ptmm::Command::Validate;
  if (spectrum->parsed()) {
    command = ptmm::Command::Spectrum;
  } else if (profile->parsed()) {
    command = ptmm::Command::Profile;
  } else if (bandgap->parsed()) {
    command = ptmm::Command::Bandgap;
  }

  try {
    return ptmm::run(config, command, std::cout);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return ptmm::kExitUsage;
  }
}
