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

#include "qgo/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qgo/units.hpp"

namespace qgo {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

double parse_field(const std::string& path, int row, const std::string& text) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(path + ": row " + std::to_string(row) +
                                " holds a non-numeric field: " + text);
  }
  if (used != text.size()) {
    throw std::invalid_argument(path + ": row " + std::to_string(row) +
                                " holds trailing characters: " + text);
  }
  return v;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

void ensure_directory(const std::string& dir) {
  std::filesystem::create_directories(dir);
}

void write_text_file(const std::string& path, const std::string& text) {
  auto out = open_for_write(path);
  out << text;
}

void write_pulse_file(const std::string& path, const ControlArray& pulse,
                      const std::vector<DrivePair>& drives,
                      const TimeGrid& grid) {
  if (pulse.rows() != grid.nt) {
    throw std::invalid_argument("pulse rows do not match the grid");
  }
  auto out = open_for_write(path);
  out << "time_ns";
  for (const DrivePair& drive : drives) {
    out << "," << drive.label << "_re_mhz," << drive.label << "_im_mhz";
  }
  out << "\n";
  for (int k = 0; k < grid.nt; ++k) {
    out << fmt(grid.midpoint(k));
    for (const DrivePair& drive : drives) {
      out << "," << fmt(to_mhz(pulse(k, drive.re_channel)));
      out << "," << fmt(to_mhz(pulse(k, drive.im_channel)));
    }
    out << "\n";
  }
}

ControlArray read_pulse_file(const std::string& path,
                             const std::vector<DrivePair>& drives,
                             const TimeGrid& grid) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pulse file " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(path + ": empty pulse file");
  }
  std::vector<std::string> header = split_csv(line);
  const size_t expected_cols = 1 + 2 * drives.size();
  if (header.size() != expected_cols || header[0] != "time_ns") {
    throw std::invalid_argument(path + ": unexpected pulse header");
  }
  int n_channels = 0;
  for (size_t i = 0; i < drives.size(); ++i) {
    if (header[1 + 2 * i] != drives[i].label + "_re_mhz" ||
        header[2 + 2 * i] != drives[i].label + "_im_mhz") {
      throw std::invalid_argument(path + ": control names do not match: " +
                                  header[1 + 2 * i]);
    }
    n_channels = std::max(
        n_channels, std::max(drives[i].re_channel, drives[i].im_channel) + 1);
  }

  ControlArray pulse = ControlArray::Zero(grid.nt, n_channels);
  const double time_tol = 1e-9 * std::max(1.0, grid.t_total);
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row >= grid.nt) {
      throw std::invalid_argument(path + ": more rows than grid intervals");
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != expected_cols) {
      throw std::invalid_argument(path + ": row " + std::to_string(row + 1) +
                                  " has " + std::to_string(fields.size()) +
                                  " fields, expected " +
                                  std::to_string(expected_cols));
    }
    const double t = parse_field(path, row + 1, fields[0]);
    if (std::abs(t - grid.midpoint(row)) > time_tol) {
      throw std::invalid_argument(path + ": time column does not match the grid at row " +
                                  std::to_string(row + 1));
    }
    for (size_t i = 0; i < drives.size(); ++i) {
      pulse(row, drives[i].re_channel) =
          mhz(parse_field(path, row + 1, fields[1 + 2 * i]));
      pulse(row, drives[i].im_channel) =
          mhz(parse_field(path, row + 1, fields[2 + 2 * i]));
    }
    ++row;
  }
  if (row != grid.nt) {
    throw std::invalid_argument(path + ": pulse has " + std::to_string(row) +
                                " rows, grid needs " + std::to_string(grid.nt));
  }
  return pulse;
}

void write_convergence_log(const std::string& path,
                           const std::vector<IterationRecord>& trace) {
  auto out = open_for_write(path);
  out << "iteration,j_t,j_total,gate_error,n_propagations_cumulative,"
         "wall_time_seconds\n";
  for (const IterationRecord& row : trace) {
    out << row.iteration << "," << fmt(row.j_t) << "," << fmt(row.j_total)
        << "," << fmt(row.gate_error) << "," << row.n_propagations << ","
        << fmt(row.wall_time_seconds) << "\n";
  }
}

std::string summary_text(const RunConfig& config,
                         const OptimizationResult& result) {
  if (result.trace.empty()) {
    throw std::invalid_argument("summary requires a non-empty trace");
  }
  const IterationRecord& last = result.trace.back();
  std::ostringstream out;
  out << resolved_config_text(config);
  out << "\n[result]\n";
  out << "status = " << status_name(result.status) << "\n";
  out << "iterations = " << last.iteration << "\n";
  out << "final_j_t = " << fmt(last.j_t) << "\n";
  out << "final_j_total = " << fmt(last.j_total) << "\n";
  out << "final_gate_error = " << fmt(last.gate_error) << "\n";
  out << "n_propagations = " << last.n_propagations << "\n";
  out << "wall_time_seconds = " << fmt(last.wall_time_seconds) << "\n";
  if (!result.message.empty()) out << "message = " << result.message << "\n";
  return out.str();
}

void write_population_csv(const std::string& path, const TimeGrid& grid,
                          const Eigen::MatrixXd& populations) {
  if (populations.rows() != grid.nt + 1 || populations.cols() != 5) {
    throw std::invalid_argument("population table must be (nt + 1) x 5");
  }
  auto out = open_for_write(path);
  out << "time_ns,pop_00,pop_01,pop_10,pop_11,pop_outside\n";
  for (int k = 0; k <= grid.nt; ++k) {
    out << fmt(grid.edge(k));
    for (int c = 0; c < 5; ++c) out << "," << fmt(populations(k, c));
    out << "\n";
  }
}

}  // namespace qgo
