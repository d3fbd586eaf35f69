// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace prefarena {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

long long parse_int(const std::string& value, const std::string& key,
                    const std::string& where) {
  char* end = nullptr;
  const long long parsed = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError(where + ": expected an integer for '" + key + "', got '" +
                      value + "'");
  return parsed;
}

double parse_real(const std::string& value, const std::string& key,
                  const std::string& where) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError(where + ": expected a number for '" + key + "', got '" +
                      value + "'");
  return parsed;
}

std::vector<int> parse_int_list(const std::string& value,
                                const std::string& key,
                                const std::string& where) {
  std::vector<int> out;
  for (const std::string& part : split_list(value))
    out.push_back(static_cast<int>(parse_int(part, key, where)));
  if (out.empty())
    throw ConfigError(where + ": '" + key + "' needs at least one value");
  return out;
}

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value, const std::string& where) {
  if (key == "n_items") {
    cfg.n_items = static_cast<int>(parse_int(value, key, where));
  } else if (key == "n_seeds") {
    cfg.n_seeds = static_cast<int>(parse_int(value, key, where));
  } else if (key == "base_seed") {
    cfg.base_seed = static_cast<std::uint64_t>(parse_int(value, key, where));
  } else if (key == "budget") {
    cfg.budget = static_cast<int>(parse_int(value, key, where));
  } else if (key == "sweep_budgets") {
    cfg.sweep_budgets = parse_int_list(value, key, where);
  } else if (key == "copeland_budgets") {
    cfg.copeland_budgets = parse_int_list(value, key, where);
  } else if (key == "methods") {
    std::vector<MethodKind> methods;
    for (const std::string& part : split_list(value)) {
      try {
        methods.push_back(parse_method_name(part));
      } catch (const ConfigError&) {
        throw ConfigError(where + ": unknown method '" + part + "'");
      }
    }
    if (methods.empty())
      throw ConfigError(where + ": 'methods' needs at least one name");
    cfg.methods = std::move(methods);
  } else if (key == "elo_base") {
    if (value == "natural") {
      cfg.oracle.elo_base = EloBase::kNatural;
    } else if (value == "ten") {
      cfg.oracle.elo_base = EloBase::kTen;
    } else {
      throw ConfigError(where + ": elo_base must be 'natural' or 'ten', got '" +
                        value + "'");
    }
  } else if (key == "elo_scale") {
    cfg.oracle.elo_scale = parse_real(value, key, where);
  } else if (key == "tie_coefficient") {
    cfg.oracle.tie_coefficient = parse_real(value, key, where);
  } else if (key == "tie_sigma") {
    cfg.oracle.tie_sigma = parse_real(value, key, where);
  } else if (key == "k_fixed") {
    cfg.elo.k_fixed = parse_real(value, key, where);
  } else if (key == "ig_k0") {
    cfg.elo.k0 = parse_real(value, key, where);
  } else if (key == "ig_k_min") {
    cfg.elo.k_min = parse_real(value, key, where);
  } else if (key == "bt_epochs") {
    cfg.bt.epochs = static_cast<int>(parse_int(value, key, where));
  } else if (key == "bt_learning_rate") {
    cfg.bt.learning_rate = parse_real(value, key, where);
  } else if (key == "ig_epsilon") {
    cfg.ig_epsilon = parse_real(value, key, where);
  } else if (key == "swiss_r_max") {
    cfg.swiss_r_max = static_cast<int>(parse_int(value, key, where));
  } else if (key == "infogain_r_max") {
    cfg.infogain_r_max = static_cast<int>(parse_int(value, key, where));
  } else if (key == "curve_delta_max") {
    cfg.curve_delta_max = parse_real(value, key, where);
  } else if (key == "curve_delta_step") {
    cfg.curve_delta_step = parse_real(value, key, where);
  } else {
    throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config(const std::filesystem::path& path,
                              std::span<const std::string> overrides) {
  ExperimentConfig cfg = default_experiment_config();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const std::string where = path.filename().string() + ":" +
                                std::to_string(line_no);
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError(where + ": expected 'key = value'");
      apply_config_entry(cfg, trim(line.substr(0, eq)),
                         trim(line.substr(eq + 1)), where);
    }
  }
  int idx = 0;
  for (const std::string& override_str : overrides) {
    ++idx;
    const std::string where = "override " + std::to_string(idx);
    const auto eq = override_str.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected key=value, got '" + override_str +
                        "'");
    apply_config_entry(cfg, trim(override_str.substr(0, eq)),
                       trim(override_str.substr(eq + 1)), where);
  }
  cfg.validate();
  return cfg;
}

}  // namespace prefarena
