#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ptmm/stack.hpp"

namespace ptmm {

// 2*pi*171 THz; the ratio fields below are expressed in units of this.
inline constexpr double kDefaultOmega0RadPerS =
    2.0 * std::numbers::pi * 171.0e12;

// Defaults reproduce the reference structure: n_a = 2.68, n_b = 1.68,
// a = 200 nm, b = 300 nm, 10 periods, normal incidence, omega0 = 2*pi*171 THz.
struct StackConfig {
  std::string type = "periodic";  // "periodic" or "mirror"
  double n_a = 2.68;
  double n_b = 1.68;
  double a_nm = 200.0;
  double b_nm = 300.0;
  int periods = 10;
};

struct IncidenceConfig {
  double theta_rad = 0.0;
  double omega0_rad_per_s = kDefaultOmega0RadPerS;
};

struct SweepConfig {
  double omega_ratio_min = 0.1;
  double omega_ratio_max = 3.5;
  int samples = 2001;
};

struct ProfileConfig {
  double omega_ratio = 1.0;
  int samples = 2000;
};

struct OutputConfig {
  std::string directory = ".";
  bool emit_svg = false;
};

struct RunConfig {
  StackConfig stack;
  IncidenceConfig incidence;
  SweepConfig sweep;
  ProfileConfig profile;
  OutputConfig output;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};


// Parses a UTF-8 JSON object; absent fields keep their defaults. Throws
// ConfigError naming the offending field on validation failures and with the
// parser's position context on malformed JSON.
RunConfig parse_config(std::string_view json_text);

Stack build_stack(const StackConfig& config);

}  // namespace ptmm
