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

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "qgo/config.hpp"
#include "qgo/functionals.hpp"
#include "qgo/io.hpp"
#include "qgo/krotov.hpp"
#include "qgo/verify.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string pulse_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int samples = 200;
  bool quiet = false;
};

qgo::AssembledRun load_and_assemble(const CommonFlags& flags) {
  qgo::RunConfig cfg = qgo::load_run_config(flags.config_path);
  if (!flags.out_dir.empty()) cfg.output_dir = flags.out_dir;
  if (flags.seed_given) cfg.seed = flags.seed;
  return qgo::assemble_run(cfg);
}

int cmd_optimize(const CommonFlags& flags) {
  qgo::AssembledRun run = load_and_assemble(flags);
  const std::string dir = run.config.output_dir;
  qgo::ensure_directory(dir);
  qgo::write_pulse_file(dir + "/pulse_guess.csv", run.problem.guess,
                        run.bundle.drives, run.problem.grid);

  qgo::KrotovOptimizer optimizer(run.problem);
  auto progress = [&](const qgo::IterationRecord& row) {
    if (flags.quiet) return;
    std::printf("iter %4d  j_t %.8e  j_total %.8e  gate_error %.8e  props %lld  %.1fs\n",
                row.iteration, row.j_t, row.j_total, row.gate_error,
                row.n_propagations, row.wall_time_seconds);
    std::fflush(stdout);
  };
  qgo::OptimizationResult result = optimizer.optimize(progress);

  qgo::write_convergence_log(dir + "/convergence.csv", result.trace);
  qgo::write_pulse_file(dir + "/pulse_final.csv", result.final_pulse,
                        run.bundle.drives, run.problem.grid);
  qgo::write_text_file(dir + "/summary.cfg",
                       qgo::summary_text(run.config, result));
  if (!flags.quiet) {
    std::printf("status: %s\n", qgo::status_name(result.status).c_str());
    if (!result.message.empty()) std::printf("%s\n", result.message.c_str());
    std::printf("outputs written to %s\n", dir.c_str());
  }
  return result.status == qgo::OptimizationStatus::kMonotonicityFault ? 2 : 0;
}

int cmd_evaluate(const CommonFlags& flags) {
  qgo::AssembledRun run = load_and_assemble(flags);
  const qgo::OptimizationProblem& p = run.problem;
  const qgo::ControlArray pulse =
      qgo::read_pulse_file(flags.pulse_path, run.bundle.drives, p.grid);

  qgo::KrotovOptimizer optimizer(p);
  const qgo::Mat map =
      qgo::dynamical_map(optimizer.stepper(), p.grid, pulse, p.embedding);
  const double favg = qgo::f_avg(map, p.logical_target);
  const double j_t = optimizer.evaluate_j_t(pulse);
  std::printf("f_avg = %.12f\n", favg);
  std::printf("gate_error = %.12e\n", 1.0 - favg);
  std::printf("j_t = %.12e\n", j_t);

  if (run.config.write_populations) {
    qgo::ensure_directory(run.config.output_dir);
    const int d = p.embedding.logical_dim();
    const char* names[] = {"00", "01", "10", "11"};
    for (int b = 0; b < d; ++b) {
      qgo::Mat rho0 = qgo::Mat::Zero(d, d);
      rho0(b, b) = 1.0;
      const std::vector<qgo::Mat> traj = qgo::propagate_forward(
          optimizer.stepper(), p.grid, pulse, p.embedding.embed(rho0));
      Eigen::MatrixXd table(p.grid.nt + 1, 5);
      for (int k = 0; k <= p.grid.nt; ++k) {
        const qgo::Mat logical = p.embedding.extract(traj[k]);
        double in_logical = 0.0;
        for (int c = 0; c < d; ++c) {
          table(k, c) = logical(c, c).real();
          in_logical += table(k, c);
        }
        table(k, 4) = traj[k].trace().real() - in_logical;
      }
      const std::string path =
          run.config.output_dir + "/populations_" + names[b] + ".csv";
      qgo::write_population_csv(path, p.grid, table);
      if (!flags.quiet) std::printf("wrote %s\n", path.c_str());
    }
  }
  return 0;
}

int cmd_verify(const CommonFlags& flags) {
  qgo::BatteryOptions options;
  options.seed = flags.seed;
  options.samples_per_dim = flags.samples;
  const qgo::BatteryReport report = qgo::run_verification_battery(options);
  for (const qgo::BatteryRow& row : report.rows) {
    std::printf("%-32s  %s  checked=%d%s%s\n", row.property.c_str(),
                row.pass ? "PASS" : "FAIL", row.checked,
                row.detail.empty() ? "" : "  ", row.detail.c_str());
  }
  if (report.vacuous) std::printf("warning: zero samples, vacuous pass\n");
  std::printf("%s\n", report.all_pass ? "all properties hold" : "FAILURES present");
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative gate optimization with reduced state sets"};
  app.require_subcommand(1);
  CommonFlags flags;

  CLI::App* optimize = app.add_subcommand("optimize", "Run a Krotov optimization");
  optimize->add_option("--config", flags.config_path, "Run configuration file")
      ->required();
  optimize->add_option("--out", flags.out_dir, "Output directory override");
  auto* opt_seed = optimize->add_option("--seed", flags.seed, "Seed override");
  optimize->add_flag("--quiet", flags.quiet, "Suppress progress output");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Evaluate a pulse against a config");
  evaluate->add_option("--config", flags.config_path, "Run configuration file")
      ->required();
  evaluate->add_option("--pulse", flags.pulse_path, "Pulse file to evaluate")
      ->required();
  evaluate->add_option("--out", flags.out_dir, "Output directory override");
  evaluate->add_flag("--quiet", flags.quiet, "Suppress non-result output");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the channel-equivalence battery");
  verify->add_option("--seed", flags.seed, "Battery seed");
  verify->add_option("--samples", flags.samples, "Random channels per dimension");

  CLI11_PARSE(app, argc, argv);
  flags.seed_given = opt_seed->count() > 0;

  try {
    if (optimize->parsed()) return cmd_optimize(flags);
    if (evaluate->parsed()) return cmd_evaluate(flags);
    return cmd_verify(flags);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
}
