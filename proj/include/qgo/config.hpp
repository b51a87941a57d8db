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

#ifndef QGO_CONFIG_HPP
#define QGO_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

#include "qgo/krotov.hpp"
#include "qgo/models.hpp"

namespace qgo {

/// Sections and keys of one parsed INI document.  Line comments start
/// with '#'.  Duplicate sections merge; duplicate keys are errors.
using IniDocument = std::map<std::string, std::map<std::string, std::string>>;

IniDocument parse_ini(const std::string& text);

/// A fully resolved run description.  Every field has its final value
/// after load_run_config applies the preset defaults, so serializing it
/// reproduces the run without the original file.
struct RunConfig {
  // [model]
  std::string preset;  // "rydberg-table1" or "transmon-table2"
  std::string target;  // "cphase" or "sqrt-iswap"
  double cphase_angle_rad = M_PI;
  RydbergParams rydberg;
  TransmonParams transmon;
  // [grid]
  double t_ns = 0.0;
  int nt = 2000;
  int substeps = 0;  // 0 = derive from the model's max substep
  // [stateset]
  std::string set_kind;
  double dominant_ratio = 0.0;  // 0 = family default
  // [optimizer]
  double lambda_a = 0.0;
  double shape_ramp_ns = 0.0;
  int max_iterations = 100;
  double j_t_threshold = 0.0;
  double min_decrease = 0.0;
  int fidelity_interval = 1;
  // [guess]
  std::string guess_shape;
  double guess_amplitude_mhz = -1.0;
  double guess_width_ns = 0.0;
  // [output]
  std::string output_dir = "out";
  bool write_populations = false;
  // [run]
  std::uint64_t seed = 0;
};

/// Parses and resolves a config document.  Unknown sections or keys and
/// keys of the wrong model family are errors; a [result] section is
/// accepted and ignored so run summaries load as configs.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// The resolved config as a config-file document, defaults included.
std::string resolved_config_text(const RunConfig& config);

/// Model, problem and channel grouping assembled from a resolved config.
struct AssembledRun {
  RunConfig config;
  ModelBundle bundle;
  OptimizationProblem problem;
};

AssembledRun assemble_run(const RunConfig& config);

}  // namespace qgo

#endif  // QGO_CONFIG_HPP
