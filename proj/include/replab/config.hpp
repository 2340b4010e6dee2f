#pragma once

// Flat `key = value` run configuration. `#` starts a comment; blank lines
// are ignored. Every key may appear at most once.
//
//   model     pi_gg pi_gb pi_bg pi_bb c_g c_b beta
//   1D model  pi_g pi_b (with c_g c_b beta)
//   solver    resolution eps max_iter scan_resolution
//   state     eta1 eta2 s0 n_steps map (classic | adjusted)
//   policy    tau tax_mode (both | bb_only) pi_hat_b
//   sweep     sweep_key sweep_from sweep_to sweep_steps
//   output    out_dir

#include <optional>
#include <string>
#include <string_view>

#include "replab/basins.hpp"
#include "replab/model.hpp"
#include "replab/policy.hpp"

namespace replab {

struct RunConfig {
  std::optional<double> pi_gg, pi_gb, pi_bg, pi_bb;
  std::optional<double> pi_g, pi_b;
  std::optional<double> c_g, c_b, beta;

  int resolution = 400;
  double eps = 1e-6;
  int max_iter = 5000;
  int scan_resolution = 256;

  double eta1 = 0.5;
  double eta2 = 0.5;
  double s0 = 0.5;
  int n_steps = 50;
  MapKind map = MapKind::Adjusted;

  double tau = 0.0;
  TaxMode tax_mode = TaxMode::BothStates;
  std::optional<double> pi_hat_b;

  std::optional<std::string> sweep_key;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 11;

  std::optional<std::string> out_dir;

  bool has_model() const;
  bool has_model_1d() const;

  /// Throws ValidationError naming the first missing key.
  ModelParams model() const;
  Params1D model_1d() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ParseError (with line number) for malformed lines, unknown or
/// duplicate keys and non-numeric values; ValidationError for values that
/// violate a constraint.
RunConfig parse_config(std::string_view text);

/// Text that parse_config maps back to an equal config.
std::string render_config(const RunConfig& config);

/// Reads and parses a file. IoError if it cannot be read.
RunConfig load_config(const std::string& path);

/// Sets one of the model keys by name (used by sweeps).
void set_model_key(RunConfig& config, std::string_view key, double value);

}  // namespace replab
