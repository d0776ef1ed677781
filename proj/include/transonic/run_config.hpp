#pragma once

#include <string>

#include "transonic/radial.hpp"

namespace transonic {

// One experiment as read from a config file. Defaults are the standard
// annulus case; config files and command-line flags override field by field.
struct RunConfig {
  double gamma = 3.0;
  double c_star_sq = 1.0;
  double m0 = 1.0;
  double a = 5.0;
  double R = 6.0;
  double v_a = 0.83666002653407555;  // sqrt(0.7)
  double v_0 = 1.3416407864998738;   // sqrt(1.8)
  RunMode mode = RunMode::Transonic;
  std::size_t sweep_n = 2001;
  double tol_root = 1e-12;
  double tol_quad = 1e-11;  // absolute; relative tolerance is 10x
  std::string output_dir = ".";
};

struct ConfigParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a config from text. Two interchangeable formats, sniffed from the
/// first non-space character: JSON (leading '{') or flat "key = value" lines
/// with '#' comments. Unknown keys and malformed values raise
/// ConfigParseError.
RunConfig parse_run_config_text(const std::string& text);

/// Read and parse a config file; ConfigParseError if unreadable or invalid.
RunConfig parse_run_config_file(const std::string& path);

/// Build the validated model configuration (derives k0, k_a and applies the
/// tolerance overrides). Propagates RegimeError / PersistenceError /
/// std::domain_error for inadmissible data.
ModelConfig to_model_config(const RunConfig& run);

}  // namespace transonic
