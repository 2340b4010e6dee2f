#include "replab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "replab/errors.hpp"

namespace replab {

namespace {

constexpr std::string_view kModelKeys[] = {"pi_gg", "pi_gb", "pi_bg", "pi_bb", "c_g",
                                           "c_b",   "beta",  "pi_g",  "pi_b"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_real(std::string_view key, std::string_view text, std::size_t line) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(line, std::string(key) + ": expected a finite number, got '" +
                               std::string(text) + "'");
  }
  return value;
}

int to_int(std::string_view key, std::string_view text, std::size_t line) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string(key) + ": expected an integer, got '" + std::string(text) +
                               "'");
  }
  return value;
}

void require(bool ok, std::string_view key, std::string_view rule) {
  if (!ok) throw ValidationError(std::string(key) + " must be " + std::string(rule));
}

std::optional<double>* model_field(RunConfig& c, std::string_view key) {
  std::optional<double>* slots[] = {&c.pi_gg, &c.pi_gb, &c.pi_bg, &c.pi_bb, &c.c_g,
                                    &c.c_b,   &c.beta,  &c.pi_g,  &c.pi_b};
  for (std::size_t k = 0; k < std::size(kModelKeys); ++k) {
    if (kModelKeys[k] == key) return slots[k];
  }
  return nullptr;
}

void check_model_value(std::string_view key, double v) {
  if (key == "beta") {
    require(v > 0.0, key, "> 0");
  } else if (key == "c_g" || key == "c_b") {
    require(v >= 0.0, key, ">= 0");
  } else {
    require(v > 0.0, key, "> 0");
  }
}

void set_value(RunConfig& c, std::string_view key, std::string_view value, std::size_t line) {
  if (std::optional<double>* slot = model_field(c, key)) {
    const double v = to_real(key, value, line);
    check_model_value(key, v);
    *slot = v;
  } else if (key == "resolution") {
    c.resolution = to_int(key, value, line);
    require(c.resolution >= 16, key, ">= 16");
  } else if (key == "eps") {
    c.eps = to_real(key, value, line);
    require(c.eps > 0.0 && c.eps < 0.5, key, "in (0, 0.5)");
  } else if (key == "max_iter") {
    c.max_iter = to_int(key, value, line);
    require(c.max_iter >= 1, key, ">= 1");
  } else if (key == "scan_resolution") {
    c.scan_resolution = to_int(key, value, line);
    require(c.scan_resolution >= 64, key, ">= 64");
  } else if (key == "eta1" || key == "eta2" || key == "s0") {
    const double v = to_real(key, value, line);
    require(v >= 0.0 && v <= 1.0, key, "in [0, 1]");
    (key == "eta1" ? c.eta1 : key == "eta2" ? c.eta2 : c.s0) = v;
  } else if (key == "n_steps") {
    c.n_steps = to_int(key, value, line);
    require(c.n_steps >= 0, key, ">= 0");
  } else if (key == "map") {
    if (value == "classic") {
      c.map = MapKind::Classic;
    } else if (value == "adjusted") {
      c.map = MapKind::Adjusted;
    } else {
      throw ParseError(line, "map: expected 'classic' or 'adjusted'");
    }
  } else if (key == "tau") {
    c.tau = to_real(key, value, line);
    require(c.tau >= 0.0, key, ">= 0");
  } else if (key == "tax_mode") {
    if (value == "both") {
      c.tax_mode = TaxMode::BothStates;
    } else if (value == "bb_only") {
      c.tax_mode = TaxMode::BBOnly;
    } else {
      throw ParseError(line, "tax_mode: expected 'both' or 'bb_only'");
    }
  } else if (key == "pi_hat_b") {
    c.pi_hat_b = to_real(key, value, line);
    require(*c.pi_hat_b > 0.0, key, "> 0");
  } else if (key == "sweep_key") {
    if (std::find(std::begin(kModelKeys), std::end(kModelKeys), value) == std::end(kModelKeys)) {
      throw ParseError(line, "sweep_key: '" + std::string(value) + "' is not a model key");
    }
    c.sweep_key = std::string(value);
  } else if (key == "sweep_from") {
    c.sweep_from = to_real(key, value, line);
  } else if (key == "sweep_to") {
    c.sweep_to = to_real(key, value, line);
  } else if (key == "sweep_steps") {
    c.sweep_steps = to_int(key, value, line);
    require(c.sweep_steps >= 1, key, ">= 1");
  } else if (key == "out_dir") {
    if (value.empty()) throw ParseError(line, "out_dir: empty path");
    c.out_dir = std::string(value);
  } else {
    throw ParseError(line, "unknown key '" + std::string(key) + "'");
  }
}

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

bool RunConfig::has_model() const {
  return pi_gg && pi_gb && pi_bg && pi_bb && c_g && c_b && beta;
}

bool RunConfig::has_model_1d() const { return pi_g && pi_b && c_g && c_b && beta; }

namespace {

double need(const std::optional<double>& v, const char* key) {
  if (!v) throw ValidationError(std::string("missing key ") + key);
  return *v;
}

}  // namespace

ModelParams RunConfig::model() const {
  return ModelParams::create(
      {need(pi_gg, "pi_gg"), need(pi_gb, "pi_gb"), need(pi_bg, "pi_bg"), need(pi_bb, "pi_bb")},
      {need(c_g, "c_g"), need(c_b, "c_b")}, need(beta, "beta"));
}

Params1D RunConfig::model_1d() const {
  return Params1D::create(need(pi_g, "pi_g"), need(pi_b, "pi_b"),
                          {need(c_g, "c_g"), need(c_b, "c_b")}, need(beta, "beta"));
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (value.empty()) throw ParseError(line_no, std::string(key) + ": missing value");
    if (!seen.emplace(key).second) {
      throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    }
    set_value(config, key, value, line_no);
  }
  return config;
}

std::string render_config(const RunConfig& c) {
  std::ostringstream out;
  auto put = [&](std::string_view key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  const std::optional<double>* model[] = {&c.pi_gg, &c.pi_gb, &c.pi_bg, &c.pi_bb, &c.c_g,
                                          &c.c_b,   &c.beta,  &c.pi_g,  &c.pi_b};
  for (std::size_t k = 0; k < std::size(kModelKeys); ++k) {
    if (*model[k]) put(kModelKeys[k], real(**model[k]));
  }
  put("resolution", std::to_string(c.resolution));
  put("eps", real(c.eps));
  put("max_iter", std::to_string(c.max_iter));
  put("scan_resolution", std::to_string(c.scan_resolution));
  put("eta1", real(c.eta1));
  put("eta2", real(c.eta2));
  put("s0", real(c.s0));
  put("n_steps", std::to_string(c.n_steps));
  put("map", std::string(to_string(c.map)));
  put("tau", real(c.tau));
  put("tax_mode", c.tax_mode == TaxMode::BothStates ? "both" : "bb_only");
  if (c.pi_hat_b) put("pi_hat_b", real(*c.pi_hat_b));
  if (c.sweep_key) put("sweep_key", *c.sweep_key);
  put("sweep_from", real(c.sweep_from));
  put("sweep_to", real(c.sweep_to));
  put("sweep_steps", std::to_string(c.sweep_steps));
  if (c.out_dir) put("out_dir", *c.out_dir);
  return out.str();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config '" + path + "'");
  return parse_config(buf.str());
}

void set_model_key(RunConfig& config, std::string_view key, double value) {
  std::optional<double>* slot = model_field(config, key);
  if (!slot) throw ValidationError("'" + std::string(key) + "' is not a model key");
  check_model_value(key, value);
  *slot = value;
}

}  // namespace replab
