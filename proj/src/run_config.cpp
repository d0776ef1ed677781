#include "transonic/run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace transonic {

namespace {

RunMode parse_mode(const std::string& value) {
  if (value == "transonic") return RunMode::Transonic;
  if (value == "subsonic-only") return RunMode::SubsonicOnly;
  throw ConfigParseError("mode must be 'transonic' or 'subsonic-only', got '" + value + "'");
}

double parse_number(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigParseError("key '" + key + "': cannot parse number from '" + value + "'");
  }
  if (used != value.size())
    throw ConfigParseError("key '" + key + "': trailing junk in '" + value + "'");
  if (!std::isfinite(parsed))
    throw ConfigParseError("key '" + key + "': value must be finite");
  return parsed;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  const double parsed = parse_number(key, value);
  if (parsed < 2.0 || parsed != std::floor(parsed))
    throw ConfigParseError("key '" + key + "': expected an integer >= 2");
  return static_cast<std::size_t>(parsed);
}

void apply_key(RunConfig& run, const std::string& key, const std::string& value) {
  if (key == "gamma") run.gamma = parse_number(key, value);
  else if (key == "c_star_sq") run.c_star_sq = parse_number(key, value);
  else if (key == "m0") run.m0 = parse_number(key, value);
  else if (key == "a") run.a = parse_number(key, value);
  else if (key == "R") run.R = parse_number(key, value);
  else if (key == "v_a") run.v_a = parse_number(key, value);
  else if (key == "v_0") run.v_0 = parse_number(key, value);
  else if (key == "mode") run.mode = parse_mode(value);
  else if (key == "sweep_n") run.sweep_n = parse_count(key, value);
  else if (key == "tol_root") run.tol_root = parse_number(key, value);
  else if (key == "tol_quad") run.tol_quad = parse_number(key, value);
  else if (key == "output_dir") run.output_dir = value;
  else throw ConfigParseError("unknown config key '" + key + "'");
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

RunConfig parse_key_value(const std::string& text) {
  RunConfig run;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 'key = value'";
      throw ConfigParseError(msg.str());
    }
    apply_key(run, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return run;
}

RunConfig parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigParseError(std::string("invalid JSON config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigParseError("JSON config must be an object");
  RunConfig run;
  for (const auto& [key, value] : doc.items()) {
    std::string as_text;
    if (value.is_string()) as_text = value.get<std::string>();
    else if (value.is_number()) {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << value.get<double>();
      as_text = tmp.str();
    } else {
      throw ConfigParseError("key '" + key + "': expected a number or string");
    }
    apply_key(run, key, as_text);
  }
  return run;
}

}  // namespace

RunConfig parse_run_config_text(const std::string& text) {
  for (const char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_json(text) : parse_key_value(text);
  }
  return RunConfig{};  // empty file: all defaults
}

RunConfig parse_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config_text(buffer.str());
}

ModelConfig to_model_config(const RunConfig& run) {
  ModelConfig config =
      run.mode == RunMode::SubsonicOnly
          ? make_subsonic_only_config(run.gamma, run.c_star_sq, run.m0, run.a, run.R, run.v_a)
          : make_config(run.gamma, run.c_star_sq, run.m0, run.a, run.R, run.v_a, run.v_0);
  if (!(run.tol_root > 0.0) || !(run.tol_quad > 0.0))
    throw ConfigParseError("tolerances must be positive");
  config.numerics.root_tol = run.tol_root;
  config.numerics.quad.abs_tol = run.tol_quad;
  config.numerics.quad.rel_tol = 10.0 * run.tol_quad;
  return config;
}

}  // namespace transonic
