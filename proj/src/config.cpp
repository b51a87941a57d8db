// Copyright 2026 The qgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgo/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qgo/units.hpp"

namespace qgo {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& value) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + key + " is not a number: " + value);
  }
  if (used != value.size()) {
    throw std::invalid_argument("config: trailing characters in " + key + ": " + value);
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  const int i = static_cast<int>(std::llround(v));
  if (v != static_cast<double>(i)) {
    throw std::invalid_argument("config: " + key + " must be an integer");
  }
  return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::invalid_argument("config: " + key + " must be true or false");
}

/// Consumes keys out of a parsed document so leftovers can be rejected.
class KeyReader {
 public:
  explicit KeyReader(IniDocument doc) : doc_(std::move(doc)) {
    doc_.erase("result");
  }

  std::optional<std::string> take(const std::string& section,
                                  const std::string& key) {
    auto sec = doc_.find(section);
    if (sec == doc_.end()) return std::nullopt;
    auto item = sec->second.find(key);
    if (item == sec->second.end()) return std::nullopt;
    std::string value = item->second;
    sec->second.erase(item);
    return value;
  }

  void require_empty() const {
    for (const auto& [section, keys] : doc_) {
      if (keys.empty()) continue;
      throw std::invalid_argument("config: unknown key [" + section + "] " +
                                  keys.begin()->first);
    }
  }

 private:
  IniDocument doc_;
};

}  // namespace

IniDocument parse_ini(const std::string& text) {
  IniDocument doc;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']' || stripped.size() < 3) {
        throw std::invalid_argument("config: malformed section header on line " +
                                    std::to_string(lineno));
      }
      section = trim(stripped.substr(1, stripped.size() - 2));
      doc[section];
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key = value on line " +
                                  std::to_string(lineno));
    }
    if (section.empty()) {
      throw std::invalid_argument("config: key outside any section on line " +
                                  std::to_string(lineno));
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config: empty key or value on line " +
                                  std::to_string(lineno));
    }
    if (!doc[section].emplace(key, value).second) {
      throw std::invalid_argument("config: duplicate key " + key + " on line " +
                                  std::to_string(lineno));
    }
  }
  return doc;
}

RunConfig parse_run_config(const std::string& text) {
  const IniDocument doc = parse_ini(text);
  for (const auto& [section, keys] : doc) {
    if (section != "model" && section != "grid" && section != "stateset" &&
        section != "optimizer" && section != "guess" && section != "output" &&
        section != "run" && section != "result") {
      throw std::invalid_argument("config: unknown section [" + section + "]");
    }
  }
  KeyReader reader(doc);
  RunConfig cfg;

  const auto preset = reader.take("model", "preset");
  if (!preset) throw std::invalid_argument("config: [model] preset is required");
  cfg.preset = *preset;
  const bool rydberg = cfg.preset == "rydberg-table1";
  const bool transmon = cfg.preset == "transmon-table2";
  if (!rydberg && !transmon) {
    throw std::invalid_argument("config: unknown preset " + cfg.preset);
  }

  if (auto v = reader.take("model", "target")) cfg.target = *v;
  if (auto v = reader.take("model", "cphase_angle_rad")) {
    cfg.cphase_angle_rad = parse_double("cphase_angle_rad", *v);
  }

  auto model_double = [&](const char* key, double& field, bool allowed) {
    if (auto v = reader.take("model", key)) {
      if (!allowed) {
        throw std::invalid_argument(std::string("config: key ") + key +
                                    " does not belong to preset " + cfg.preset);
      }
      field = parse_double(key, *v);
    }
  };
  model_double("delta1_mhz", cfg.rydberg.delta1_mhz, rydberg);
  model_double("delta2_mhz", cfg.rydberg.delta2_mhz, rydberg);
  model_double("e1_ghz", cfg.rydberg.e1_ghz, rydberg);
  model_double("u_mhz", cfg.rydberg.u_mhz, rydberg);
  model_double("tau_ns", cfg.rydberg.tau_ns, rydberg);
  model_double("omega1_ghz", cfg.transmon.omega1_ghz, transmon);
  model_double("omega2_ghz", cfg.transmon.omega2_ghz, transmon);
  model_double("omega_d_ghz", cfg.transmon.omega_d_ghz, transmon);
  model_double("anharmonicity1_mhz", cfg.transmon.anharmonicity1_mhz, transmon);
  model_double("anharmonicity2_mhz", cfg.transmon.anharmonicity2_mhz, transmon);
  model_double("j_mhz", cfg.transmon.j_mhz, transmon);
  model_double("t1_1_us", cfg.transmon.t1_1_us, transmon);
  model_double("t1_2_us", cfg.transmon.t1_2_us, transmon);
  model_double("t2star_1_us", cfg.transmon.t2star_1_us, transmon);
  model_double("t2star_2_us", cfg.transmon.t2star_2_us, transmon);
  model_double("dissipation_scale", cfg.transmon.dissipation_scale, transmon);
  if (auto v = reader.take("model", "levels")) {
    if (!transmon) {
      throw std::invalid_argument("config: key levels does not belong to preset " +
                                  cfg.preset);
    }
    cfg.transmon.levels = parse_int("levels", *v);
  }

  if (auto v = reader.take("grid", "t_ns")) cfg.t_ns = parse_double("t_ns", *v);
  if (auto v = reader.take("grid", "nt")) cfg.nt = parse_int("nt", *v);
  if (auto v = reader.take("grid", "substeps")) {
    cfg.substeps = parse_int("substeps", *v);
  }

  if (auto v = reader.take("stateset", "kind")) cfg.set_kind = *v;
  if (auto v = reader.take("stateset", "dominant_ratio")) {
    cfg.dominant_ratio = parse_double("dominant_ratio", *v);
  }

  if (auto v = reader.take("optimizer", "lambda_a")) {
    cfg.lambda_a = parse_double("lambda_a", *v);
  }
  if (auto v = reader.take("optimizer", "shape_ramp_ns")) {
    cfg.shape_ramp_ns = parse_double("shape_ramp_ns", *v);
  }
  if (auto v = reader.take("optimizer", "max_iterations")) {
    cfg.max_iterations = parse_int("max_iterations", *v);
  }
  if (auto v = reader.take("optimizer", "j_t_threshold")) {
    cfg.j_t_threshold = parse_double("j_t_threshold", *v);
  }
  if (auto v = reader.take("optimizer", "min_decrease")) {
    cfg.min_decrease = parse_double("min_decrease", *v);
  }
  if (auto v = reader.take("optimizer", "fidelity_interval")) {
    cfg.fidelity_interval = parse_int("fidelity_interval", *v);
  }

  if (auto v = reader.take("guess", "shape")) cfg.guess_shape = *v;
  if (auto v = reader.take("guess", "amplitude_mhz")) {
    cfg.guess_amplitude_mhz = parse_double("amplitude_mhz", *v);
  }
  if (auto v = reader.take("guess", "width_ns")) {
    cfg.guess_width_ns = parse_double("width_ns", *v);
  }

  if (auto v = reader.take("output", "directory")) cfg.output_dir = *v;
  if (auto v = reader.take("output", "write_populations")) {
    cfg.write_populations = parse_bool("write_populations", *v);
  }

  if (auto v = reader.take("run", "seed")) {
    cfg.seed = static_cast<std::uint64_t>(
        std::stoull(*v));
  }
  reader.require_empty();

  // Preset defaults for everything left unset.
  if (cfg.target.empty()) cfg.target = rydberg ? "cphase" : "sqrt-iswap";
  if (cfg.target != "cphase" && cfg.target != "sqrt-iswap") {
    throw std::invalid_argument("config: unknown target " + cfg.target);
  }
  if (cfg.t_ns == 0.0) cfg.t_ns = rydberg ? cfg.rydberg.t_ns : cfg.transmon.t_ns;
  if (!(cfg.t_ns > 0.0)) throw std::invalid_argument("config: t_ns must be positive");
  cfg.rydberg.t_ns = cfg.t_ns;
  cfg.transmon.t_ns = cfg.t_ns;
  if (cfg.nt < 1) throw std::invalid_argument("config: nt must be >= 1");
  if (cfg.set_kind.empty()) cfg.set_kind = rydberg ? "diagonal-2" : "minimal-3";
  parse_set_kind(cfg.set_kind);
  if (cfg.dominant_ratio == 0.0) {
    if (cfg.set_kind == "diagonal-2") cfg.dominant_ratio = 10.0;
    if (cfg.set_kind == "minimal-3") cfg.dominant_ratio = 20.0;
  }
  if (cfg.lambda_a == 0.0) cfg.lambda_a = 1.0;
  if (!(cfg.lambda_a > 0.0)) {
    throw std::invalid_argument("config: lambda_a must be positive");
  }
  if (cfg.shape_ramp_ns == 0.0) cfg.shape_ramp_ns = rydberg ? 5.0 : 20.0;
  if (cfg.guess_shape.empty()) cfg.guess_shape = rydberg ? "gaussian" : "flattop";
  parse_guess_shape(cfg.guess_shape);
  if (cfg.guess_amplitude_mhz < 0.0) {
    cfg.guess_amplitude_mhz = rydberg ? 300.0 : 35.0;
  }
  if (cfg.guess_width_ns == 0.0) {
    if (cfg.guess_shape == "gaussian") {
      cfg.guess_width_ns = cfg.t_ns / 8.0;
    } else {
      cfg.guess_width_ns = rydberg ? 5.0 : 20.0;
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

std::string resolved_config_text(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[model]\n";
  out << "preset = " << cfg.preset << "\n";
  out << "target = " << cfg.target << "\n";
  if (cfg.target == "cphase") {
    out << "cphase_angle_rad = " << fmt(cfg.cphase_angle_rad) << "\n";
  }
  if (cfg.preset == "rydberg-table1") {
    out << "delta1_mhz = " << fmt(cfg.rydberg.delta1_mhz) << "\n";
    out << "delta2_mhz = " << fmt(cfg.rydberg.delta2_mhz) << "\n";
    out << "e1_ghz = " << fmt(cfg.rydberg.e1_ghz) << "\n";
    out << "u_mhz = " << fmt(cfg.rydberg.u_mhz) << "\n";
    out << "tau_ns = " << fmt(cfg.rydberg.tau_ns) << "\n";
  } else {
    out << "omega1_ghz = " << fmt(cfg.transmon.omega1_ghz) << "\n";
    out << "omega2_ghz = " << fmt(cfg.transmon.omega2_ghz) << "\n";
    out << "omega_d_ghz = " << fmt(cfg.transmon.omega_d_ghz) << "\n";
    out << "anharmonicity1_mhz = " << fmt(cfg.transmon.anharmonicity1_mhz) << "\n";
    out << "anharmonicity2_mhz = " << fmt(cfg.transmon.anharmonicity2_mhz) << "\n";
    out << "j_mhz = " << fmt(cfg.transmon.j_mhz) << "\n";
    out << "t1_1_us = " << fmt(cfg.transmon.t1_1_us) << "\n";
    out << "t1_2_us = " << fmt(cfg.transmon.t1_2_us) << "\n";
    out << "t2star_1_us = " << fmt(cfg.transmon.t2star_1_us) << "\n";
    out << "t2star_2_us = " << fmt(cfg.transmon.t2star_2_us) << "\n";
    out << "levels = " << cfg.transmon.levels << "\n";
    out << "dissipation_scale = " << fmt(cfg.transmon.dissipation_scale) << "\n";
  }
  out << "\n[grid]\n";
  out << "t_ns = " << fmt(cfg.t_ns) << "\n";
  out << "nt = " << cfg.nt << "\n";
  out << "substeps = " << cfg.substeps << "\n";
  out << "\n[stateset]\n";
  out << "kind = " << cfg.set_kind << "\n";
  if (cfg.dominant_ratio > 0.0) {
    out << "dominant_ratio = " << fmt(cfg.dominant_ratio) << "\n";
  }
  out << "\n[optimizer]\n";
  out << "lambda_a = " << fmt(cfg.lambda_a) << "\n";
  out << "shape_ramp_ns = " << fmt(cfg.shape_ramp_ns) << "\n";
  out << "max_iterations = " << cfg.max_iterations << "\n";
  out << "j_t_threshold = " << fmt(cfg.j_t_threshold) << "\n";
  out << "min_decrease = " << fmt(cfg.min_decrease) << "\n";
  out << "fidelity_interval = " << cfg.fidelity_interval << "\n";
  out << "\n[guess]\n";
  out << "shape = " << cfg.guess_shape << "\n";
  out << "amplitude_mhz = " << fmt(cfg.guess_amplitude_mhz) << "\n";
  out << "width_ns = " << fmt(cfg.guess_width_ns) << "\n";
  out << "\n[output]\n";
  out << "directory = " << cfg.output_dir << "\n";
  out << "write_populations = " << (cfg.write_populations ? "true" : "false")
      << "\n";
  out << "\n[run]\n";
  out << "seed = " << cfg.seed << "\n";
  return out.str();
}

AssembledRun assemble_run(const RunConfig& config) {
  AssembledRun run;
  run.config = config;
  const bool rydberg = config.preset == "rydberg-table1";
  run.bundle = rydberg ? build_rydberg(config.rydberg)
                       : build_transmon(config.transmon);

  OptimizationProblem& p = run.problem;
  p.model = run.bundle.model;
  p.embedding = run.bundle.embedding;
  p.grid = TimeGrid{config.t_ns, config.nt};
  if (config.substeps > 0) {
    p.substeps = config.substeps;
  } else {
    p.substeps = std::max(
        1, static_cast<int>(std::ceil(p.grid.dt() / run.bundle.max_substep_ns)));
  }
  run.config.substeps = p.substeps;
  p.set = build_state_set(parse_set_kind(config.set_kind),
                          p.embedding.logical_dim(), config.dominant_ratio);
  p.logical_target = config.target == "cphase"
                         ? cphase_target(config.cphase_angle_rad)
                         : sqrt_iswap_target();
  p.lambda_a = config.lambda_a;
  p.shape = flattop_shape(p.grid, config.shape_ramp_ns);
  p.stop = {config.max_iterations, config.j_t_threshold, config.min_decrease};
  p.fidelity_interval = config.fidelity_interval;

  const RVec envelope =
      guess_envelope(parse_guess_shape(config.guess_shape),
                     mhz(config.guess_amplitude_mhz), p.grid, config.guess_width_ns);
  p.guess = ControlArray::Zero(
      p.grid.nt, static_cast<Eigen::Index>(p.model.couplings.size()));
  for (const DrivePair& drive : run.bundle.drives) {
    p.guess.col(drive.re_channel) = envelope;
  }
  return run;
}

}  // namespace qgo
