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

#ifndef QGO_IO_HPP
#define QGO_IO_HPP

#include <string>
#include <vector>

#include "qgo/config.hpp"
#include "qgo/krotov.hpp"
#include "qgo/models.hpp"

namespace qgo {

void ensure_directory(const std::string& dir);
void write_text_file(const std::string& path, const std::string& text);

/// Pulse files are comma-delimited text: header row
/// `time_ns,<label>_re_mhz,<label>_im_mhz,...` naming each drive, then
/// one row per interval at its midpoint time, amplitudes in MHz.
void write_pulse_file(const std::string& path, const ControlArray& pulse,
                      const std::vector<DrivePair>& drives,
                      const TimeGrid& grid);

/// Reads a pulse file back into control channels in angular frequency
/// units.  The header must name exactly the given drives and the time
/// column must match the grid midpoints.
ControlArray read_pulse_file(const std::string& path,
                             const std::vector<DrivePair>& drives,
                             const TimeGrid& grid);

/// Comma-delimited convergence history with header `iteration,j_t,
/// j_total,gate_error,n_propagations_cumulative,wall_time_seconds`.
/// Iterations without a fidelity evaluation carry nan gate_error.
void write_convergence_log(const std::string& path,
                           const std::vector<IterationRecord>& trace);

/// The resolved config followed by a [result] section.  The text parses
/// back as a run config, so a summary alone reproduces its run.
std::string summary_text(const RunConfig& config,
                         const OptimizationResult& result);

/// Per-edge logical populations: header `time_ns,pop_00,pop_01,pop_10,
/// pop_11,pop_outside`.  `populations` holds nt + 1 rows of the five
/// population columns; each row sums to the propagated trace.
void write_population_csv(const std::string& path, const TimeGrid& grid,
                          const Eigen::MatrixXd& populations);

}  // namespace qgo

#endif  // QGO_IO_HPP
