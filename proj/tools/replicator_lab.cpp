// replicator-lab: command-line front end.
//
//   replicator-lab <command> --config <path> [--out <dir>]
//
// REPLICATOR_LAB_THREADS caps the worker count (0 or unset = all cores).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "replab/commands.hpp"
#include "replab/config.hpp"
#include "replab/errors.hpp"

namespace {

int threads_from_env() {
  const char* raw = std::getenv("REPLICATOR_LAB_THREADS");
  if (!raw || !*raw) return 0;
  try {
    std::size_t used = 0;
    const int n = std::stoi(raw, &used);
    if (used == std::string(raw).size() && n >= 0) return n;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring REPLICATOR_LAB_THREADS='" << raw << "'\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential replicator dynamics with adjustment costs", "replicator-lab"};
  std::string command;
  std::string config_path;
  std::string out_dir;
  app.add_option("command", command, "step | simulate | equilibria | classify | basins | "
                                     "staircase | policy | sweep")
      ->required();
  app.add_option("--config", config_path, "key = value run configuration")->required();
  app.add_option("--out", out_dir, "output directory (overrides out_dir in the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << replab::usage();
    return replab::kExitValidation;
  }

  replab::RunConfig config;
  try {
    config = replab::load_config(config_path);
  } catch (const replab::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return replab::kExitIo;
  } catch (const replab::Error& e) {
    std::cerr << "error: " << config_path << ": " << e.what() << '\n';
    return replab::kExitValidation;
  }

  replab::DispatchOptions opts;
  opts.threads = threads_from_env();
  if (!out_dir.empty()) {
    opts.out_dir = out_dir;
  } else if (config.out_dir) {
    opts.out_dir = *config.out_dir;
  }
  return replab::dispatch(command, config, opts, std::cout, std::cerr);
}
