#include "ptmm/config.hpp"

#include <numbers>
#include <string>

#include "json.hpp"

namespace ptmm {

namespace {

using nlohmann::json;

double get_number(const json& node, const char* section, const char* key,
                  double fallback) {
  if (!node.contains(key)) {
    return fallback;
  }
  const json& value = node.at(key);
  if (!value.is_number()) {
    throw ConfigError(std::string("config validation error: ") + section +
                      "." + key + " must be a number");
  }
  return value.get<double>();
}

int get_int(const json& node, const char* section, const char* key,
            int fallback) {
  if (!node.contains(key)) {
    return fallback;
  }
  const json& value = node.at(key);
  if (!value.is_number_integer()) {
    throw ConfigError(std::string("config validation error: ") + section +
                      "." + key + " must be an integer");
  }
  return value.get<int>();
}

std::string get_string(const json& node, const char* section, const char* key,
                       const std::string& fallback) {
  if (!node.contains(key)) {
    return fallback;
  }
  const json& value = node.at(key);
  if (!value.is_string()) {
    throw ConfigError(std::string("config validation error: ") + section +
                      "." + key + " must be a string");
  }
  return value.get<std::string>();
}

bool get_bool(const json& node, const char* section, const char* key,
              bool fallback) {
  if (!node.contains(key)) {
    return fallback;
  }
  const json& value = node.at(key);
  if (!value.is_boolean()) {
    throw ConfigError(std::string("config validation error: ") + section +
                      "." + key + " must be a boolean");
  }
  return value.get<bool>();
}

json get_section(const json& root, const char* key) {
  if (!root.contains(key)) {
    return json::object();
  }
  const json& value = root.at(key);
  if (!value.is_object()) {
    throw ConfigError(std::string("config validation error: ") + key +
                      " must be an object");
  }
  return value;
}

void require(bool condition, const std::string& field,
             const std::string& what) {
  if (!condition) {
    throw ConfigError("config validation error: " + field + " " + what);
  }
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& error) {
    throw ConfigError(std::string("config parse error: ") + error.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config parse error: top level must be a JSON object");
  }

  RunConfig config;

  const json stack = get_section(root, "stack");
  config.stack.type = get_string(stack, "stack", "type", config.stack.type);
  config.stack.n_a = get_number(stack, "stack", "n_a", config.stack.n_a);
  config.stack.n_b = get_number(stack, "stack", "n_b", config.stack.n_b);
  config.stack.a_nm = get_number(stack, "stack", "a_nm", config.stack.a_nm);
  config.stack.b_nm = get_number(stack, "stack", "b_nm", config.stack.b_nm);
  config.stack.periods = get_int(stack, "stack", "periods",
                                 config.stack.periods);

  const json incidence = get_section(root, "incidence");
  config.incidence.theta_rad =
      get_number(incidence, "incidence", "theta_rad",
                 config.incidence.theta_rad);
  config.incidence.omega0_rad_per_s =
      get_number(incidence, "incidence", "omega0_rad_per_s",
                 config.incidence.omega0_rad_per_s);

  const json sweep = get_section(root, "sweep");
  config.sweep.omega_ratio_min = get_number(sweep, "sweep", "omega_ratio_min",
                                            config.sweep.omega_ratio_min);
  config.sweep.omega_ratio_max = get_number(sweep, "sweep", "omega_ratio_max",
                                            config.sweep.omega_ratio_max);
  config.sweep.samples = get_int(sweep, "sweep", "samples",
                                 config.sweep.samples);

  const json profile = get_section(root, "profile");
  config.profile.omega_ratio = get_number(profile, "profile", "omega_ratio",
                                          config.profile.omega_ratio);
  config.profile.samples = get_int(profile, "profile", "samples",
                                   config.profile.samples);

  const json output = get_section(root, "output");
  config.output.directory = get_string(output, "output", "directory",
                                       config.output.directory);
  config.output.emit_svg = get_bool(output, "output", "emit_svg",
                                    config.output.emit_svg);

  require(config.stack.type == "periodic" || config.stack.type == "mirror",
          "stack.type", "must be \"periodic\" or \"mirror\"");
  require(config.stack.n_a >= 1.0, "stack.n_a", "must be >= 1");
  require(config.stack.n_b >= 1.0, "stack.n_b", "must be >= 1");
  require(config.stack.a_nm > 0.0, "stack.a_nm", "must be > 0");
  require(config.stack.b_nm > 0.0, "stack.b_nm", "must be > 0");
  require(config.stack.periods >= 0, "stack.periods", "must be >= 0");
  require(config.incidence.theta_rad >= 0.0 &&
              config.incidence.theta_rad < std::numbers::pi / 2,
          "incidence.theta_rad", "must lie in [0, pi/2)");
  require(config.incidence.omega0_rad_per_s > 0.0,
          "incidence.omega0_rad_per_s", "must be > 0");
  require(config.sweep.omega_ratio_min > 0.0, "sweep.omega_ratio_min",
          "must be > 0");
  require(config.sweep.omega_ratio_max > config.sweep.omega_ratio_min,
          "sweep.omega_ratio_max", "must exceed omega_ratio_min");
  require(config.sweep.samples >= 2, "sweep.samples", "must be >= 2");
  require(config.profile.omega_ratio > 0.0, "profile.omega_ratio",
          "must be > 0");
  require(config.profile.samples >= 2, "profile.samples", "must be >= 2");
  require(!config.output.directory.empty(), "output.directory",
          "must not be empty");
  return config;
}

Stack build_stack(const StackConfig& config) {
  const auto periods = static_cast<std::size_t>(config.periods);
  if (config.type == "mirror") {
    return make_mirror_stack(config.n_a, config.n_b, config.a_nm, config.b_nm,
                             periods);
  }
  return make_periodic_stack(config.n_a, config.n_b, config.a_nm, config.b_nm,
                             periods);
}

}  // namespace ptmm
