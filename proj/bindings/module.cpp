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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "qgo/config.hpp"
#include "qgo/functionals.hpp"
#include "qgo/krotov.hpp"
#include "qgo/lindblad.hpp"
#include "qgo/models.hpp"
#include "qgo/state_sets.hpp"
#include "qgo/units.hpp"
#include "qgo/verify.hpp"

namespace py = pybind11;

namespace {

std::vector<qgo::Mat> set_states(const qgo::StateSet& set) {
  std::vector<qgo::Mat> out;
  for (const qgo::DensityMatrix& rho : set.states) out.push_back(rho.mat());
  return out;
}

qgo::IntervalStepper make_stepper(const qgo::LindbladModel& model,
                                  const qgo::TimeGrid& grid, int substeps) {
  if (substeps < 1) {
    throw std::invalid_argument("propagate: substeps must be >= 1");
  }
  return qgo::IntervalStepper(model, grid.dt(), substeps);
}

Eigen::MatrixXd trace_matrix(const std::vector<qgo::IterationRecord>& trace) {
  Eigen::MatrixXd rows(trace.size(), 6);
  for (size_t k = 0; k < trace.size(); ++k) {
    rows(k, 0) = trace[k].iteration;
    rows(k, 1) = trace[k].j_t;
    rows(k, 2) = trace[k].j_total;
    rows(k, 3) = trace[k].gate_error;
    rows(k, 4) = static_cast<double>(trace[k].n_propagations);
    rows(k, 5) = trace[k].wall_time_seconds;
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Gate optimization for dissipative quantum systems: Lindblad "
      "propagation, reduced state families, Krotov pulse updates and "
      "channel verification.";

  // Units: control amplitudes and energies are angular frequency in rad/ns.
  m.def("mhz", &qgo::mhz, py::arg("f"),
        "Angular frequency in rad/ns for a linear frequency in MHz.");
  m.def("ghz", &qgo::ghz, py::arg("f"),
        "Angular frequency in rad/ns for a linear frequency in GHz.");
  m.def("to_mhz", &qgo::to_mhz, py::arg("w"),
        "Linear frequency in MHz for an angular frequency in rad/ns.");
  m.def("rate_from_us", &qgo::rate_from_us, py::arg("t_us"),
        "Decay rate in 1/ns for a lifetime in microseconds.");

  // State families.
  py::class_<qgo::StateSet>(m, "StateSet")
      .def_property_readonly(
          "kind", [](const qgo::StateSet& s) { return set_kind_name(s.kind); })
      .def_readonly("dim", &qgo::StateSet::dim)
      .def_readonly("weights", &qgo::StateSet::weights)
      .def_property_readonly("states", &set_states)
      .def("__len__",
           [](const qgo::StateSet& s) { return s.states.size(); })
      .def("__repr__", [](const qgo::StateSet& s) {
        return "StateSet(kind='" + set_kind_name(s.kind) +
               "', dim=" + std::to_string(s.dim) +
               ", states=" + std::to_string(s.states.size()) + ")";
      });

  m.def(
      "build_state_set",
      [](const std::string& kind, int d, double dominant_ratio) {
        return qgo::build_state_set(qgo::parse_set_kind(kind), d,
                                    dominant_ratio);
      },
      py::arg("kind"), py::arg("d"), py::arg("dominant_ratio") = 0.0,
      "State family by name: diagonal-2, minimal-3, extended, mub-2d or "
      "full-basis.");
  m.def("set_kind_names", [] {
    std::vector<std::string> names;
    for (qgo::SetKind kind : qgo::all_set_kinds()) {
      names.push_back(set_kind_name(kind));
    }
    return names;
  });
  m.def("totally_rotated_state", &qgo::totally_rotated_state, py::arg("d"));
  m.def("maximally_mixed_state", &qgo::maximally_mixed_state, py::arg("d"));
  m.def("ordered_spectrum_state", &qgo::ordered_spectrum_state, py::arg("d"));

  // Gate targets.
  m.def("cphase_target", &qgo::cphase_target, py::arg("chi"),
        "Diagonal controlled-phase gate with entangling phase chi.");
  m.def("sqrt_iswap_target", &qgo::sqrt_iswap_target);

  // Models.
  py::class_<qgo::RydbergParams>(m, "RydbergParams")
      .def(py::init<>())
      .def_readwrite("delta1_mhz", &qgo::RydbergParams::delta1_mhz)
      .def_readwrite("delta2_mhz", &qgo::RydbergParams::delta2_mhz)
      .def_readwrite("e1_ghz", &qgo::RydbergParams::e1_ghz)
      .def_readwrite("u_mhz", &qgo::RydbergParams::u_mhz)
      .def_readwrite("tau_ns", &qgo::RydbergParams::tau_ns)
      .def_readwrite("t_ns", &qgo::RydbergParams::t_ns);

  py::class_<qgo::TransmonParams>(m, "TransmonParams")
      .def(py::init<>())
      .def_readwrite("omega1_ghz", &qgo::TransmonParams::omega1_ghz)
      .def_readwrite("omega2_ghz", &qgo::TransmonParams::omega2_ghz)
      .def_readwrite("omega_d_ghz", &qgo::TransmonParams::omega_d_ghz)
      .def_readwrite("anharmonicity1_mhz",
                     &qgo::TransmonParams::anharmonicity1_mhz)
      .def_readwrite("anharmonicity2_mhz",
                     &qgo::TransmonParams::anharmonicity2_mhz)
      .def_readwrite("j_mhz", &qgo::TransmonParams::j_mhz)
      .def_readwrite("t1_1_us", &qgo::TransmonParams::t1_1_us)
      .def_readwrite("t1_2_us", &qgo::TransmonParams::t1_2_us)
      .def_readwrite("t2star_1_us", &qgo::TransmonParams::t2star_1_us)
      .def_readwrite("t2star_2_us", &qgo::TransmonParams::t2star_2_us)
      .def_readwrite("levels", &qgo::TransmonParams::levels)
      .def_readwrite("t_ns", &qgo::TransmonParams::t_ns)
      .def_readwrite("dissipation_scale",
                     &qgo::TransmonParams::dissipation_scale);

  py::class_<qgo::CollapseOp>(m, "CollapseOp")
      .def_readonly("op", &qgo::CollapseOp::op)
      .def_readonly("rate", &qgo::CollapseOp::rate)
      .def_readonly("label", &qgo::CollapseOp::label);

  py::class_<qgo::LindbladModel>(m, "LindbladModel")
      .def_readonly("dim", &qgo::LindbladModel::dim)
      .def_readonly("h0", &qgo::LindbladModel::h0)
      .def_readonly("couplings", &qgo::LindbladModel::couplings)
      .def_readonly("control_names", &qgo::LindbladModel::control_names)
      .def_readonly("collapse", &qgo::LindbladModel::collapse);

  py::class_<qgo::SubspaceEmbedding>(m, "SubspaceEmbedding")
      .def(py::init<std::vector<int>, int>(), py::arg("levels"),
           py::arg("full_dim"))
      .def_property_readonly("levels", &qgo::SubspaceEmbedding::levels)
      .def_property_readonly("logical_dim",
                             &qgo::SubspaceEmbedding::logical_dim)
      .def_property_readonly("full_dim", &qgo::SubspaceEmbedding::full_dim)
      .def("embed", &qgo::SubspaceEmbedding::embed, py::arg("rho"))
      .def("extract", &qgo::SubspaceEmbedding::extract, py::arg("rho"));

  py::class_<qgo::ModelBundle>(m, "ModelBundle")
      .def_readonly("model", &qgo::ModelBundle::model)
      .def_readonly("embedding", &qgo::ModelBundle::embedding)
      .def_readonly("max_substep_ns", &qgo::ModelBundle::max_substep_ns)
      .def_property_readonly("drive_labels", [](const qgo::ModelBundle& b) {
        std::vector<std::string> labels;
        for (const qgo::DrivePair& d : b.drives) labels.push_back(d.label);
        return labels;
      });

  m.def("build_rydberg", &qgo::build_rydberg,
        py::arg("params") = qgo::RydbergParams{},
        "Two interacting atoms with a two-photon ladder to the interacting "
        "level; controls are the red and blue drive quadratures.");
  m.def("build_transmon", &qgo::build_transmon,
        py::arg("params") = qgo::TransmonParams{},
        "Two coupled anharmonic transmons under one shared microwave drive "
        "in the rotating frame.");

  // Propagation.  Controls are an nt x n_channels real matrix sampled at
  // interval midpoints; rho0 lives in the model's full space.
  m.def(
      "propagate",
      [](const qgo::LindbladModel& model, double t_total, int nt,
         int substeps, const qgo::ControlArray& controls,
         const qgo::Mat& rho0) {
        const qgo::TimeGrid grid{t_total, nt};
        return qgo::propagate(make_stepper(model, grid, substeps), grid,
                              controls, rho0);
      },
      py::arg("model"), py::arg("t_total"), py::arg("nt"), py::arg("substeps"),
      py::arg("controls"), py::arg("rho0"),
      "Final density matrix after the full duration.");
  m.def(
      "propagate_edges",
      [](const qgo::LindbladModel& model, double t_total, int nt,
         int substeps, const qgo::ControlArray& controls,
         const qgo::Mat& rho0) {
        const qgo::TimeGrid grid{t_total, nt};
        return qgo::propagate_forward(make_stepper(model, grid, substeps),
                                      grid, controls, rho0);
      },
      py::arg("model"), py::arg("t_total"), py::arg("nt"), py::arg("substeps"),
      py::arg("controls"), py::arg("rho0"),
      "Density matrices at all nt + 1 grid edges.");
  m.def(
      "dynamical_map",
      [](const qgo::LindbladModel& model, double t_total, int nt,
         int substeps, const qgo::ControlArray& controls,
         const qgo::SubspaceEmbedding& embedding) {
        const qgo::TimeGrid grid{t_total, nt};
        return qgo::dynamical_map(make_stepper(model, grid, substeps), grid,
                                  controls, embedding);
      },
      py::arg("model"), py::arg("t_total"), py::arg("nt"), py::arg("substeps"),
      py::arg("controls"), py::arg("embedding"),
      "Logical-subspace time evolution as a d^2 x d^2 column-stacking "
      "matrix.");

  // Figures of merit.
  m.def(
      "eval_j_t",
      [](const qgo::StateSet& set, const std::vector<qgo::Mat>& finals,
         const qgo::Mat& target) { return qgo::eval_j_t(set, finals, target); },
      py::arg("set"), py::arg("finals"), py::arg("target"),
      "Weighted gate-tracking functional over the family's final states.");
  m.def("eval_j_dist", &qgo::eval_j_dist, py::arg("set"), py::arg("finals"),
        py::arg("target"),
        "Sum of squared Hilbert-Schmidt distances to the rotated states.");
  m.def("f_avg", &qgo::f_avg, py::arg("map"), py::arg("target"),
        "Average gate fidelity of a dynamical map against a unitary.");
  m.def(
      "f_avg_monte_carlo",
      [](const qgo::Mat& map, const qgo::Mat& target, int n_samples,
         std::uint64_t seed) {
        const qgo::MonteCarloEstimate est =
            qgo::f_avg_monte_carlo(map, target, n_samples, seed);
        return py::make_tuple(est.mean, est.std_err);
      },
      py::arg("map"), py::arg("target"), py::arg("n_samples") = 10000,
      py::arg("seed") = 0,
      "Haar-sampled estimate of the average gate fidelity: (mean, std_err).");

  // Channel verification.
  m.def(
      "haar_unitary",
      [](int d, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return qgo::haar_unitary(d, rng);
      },
      py::arg("d"), py::arg("seed") = 0);
  m.def(
      "random_kraus_channel",
      [](int d, int n_kraus, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return qgo::random_kraus_channel(d, n_kraus, rng).superop;
      },
      py::arg("d"), py::arg("n_kraus"), py::arg("seed") = 0,
      "Superoperator of a random CPTP channel with n_kraus Kraus terms.");
  m.def(
      "channel_is_unitary",
      [](const qgo::Mat& superop) {
        return qgo::channel_is_unitary(qgo::make_channel(superop));
      },
      py::arg("superop"),
      "Choi-spectrum unitarity decision; errors on non-CPTP input.");
  m.def(
      "choi_matrix",
      [](const qgo::Mat& superop) {
        return qgo::choi_matrix(qgo::make_channel(superop));
      },
      py::arg("superop"));
  m.def(
      "is_unital",
      [](const qgo::Mat& superop) {
        return qgo::is_unital(qgo::make_channel(superop));
      },
      py::arg("superop"));
  m.def(
      "run_verification_battery",
      [](int samples_per_dim, std::uint64_t seed, std::vector<int> dims) {
        qgo::BatteryOptions options;
        options.samples_per_dim = samples_per_dim;
        options.seed = seed;
        options.dims = std::move(dims);
        const qgo::BatteryReport report = qgo::run_verification_battery(options);
        py::list rows;
        for (const qgo::BatteryRow& row : report.rows) {
          py::dict r;
          r["property"] = row.property;
          r["checked"] = row.checked;
          r["pass"] = row.pass;
          r["detail"] = row.detail;
          rows.append(r);
        }
        py::dict out;
        out["rows"] = rows;
        out["all_pass"] = report.all_pass;
        out["vacuous"] = report.vacuous;
        return out;
      },
      py::arg("samples_per_dim") = 200, py::arg("seed") = 0,
      py::arg("dims") = std::vector<int>{2, 3, 4},
      "Consistency battery of the unitarity tests against the Choi oracle.");

  // Optimization from a config document.
  py::class_<qgo::OptimizationResult>(m, "OptimizationResult")
      .def_property_readonly("status",
                             [](const qgo::OptimizationResult& r) {
                               return qgo::status_name(r.status);
                             })
      .def_readonly("final_pulse", &qgo::OptimizationResult::final_pulse)
      .def_readonly("fault_iteration",
                    &qgo::OptimizationResult::fault_iteration)
      .def_readonly("message", &qgo::OptimizationResult::message)
      .def_property_readonly(
          "trace",
          [](const qgo::OptimizationResult& r) { return trace_matrix(r.trace); },
          "Rows of (iteration, j_t, j_total, gate_error, n_propagations, "
          "wall_time_seconds); gate_error is nan where not evaluated.")
      .def_property_readonly("gate_error",
                             [](const qgo::OptimizationResult& r) {
                               return r.trace.back().gate_error;
                             })
      .def_property_readonly("j_t", [](const qgo::OptimizationResult& r) {
        return r.trace.back().j_t;
      });

  m.def(
      "optimize",
      [](const std::string& config_text) {
        const qgo::RunConfig config = qgo::parse_run_config(config_text);
        const qgo::AssembledRun run = qgo::assemble_run(config);
        qgo::KrotovOptimizer optimizer(run.problem);
        return optimizer.optimize();
      },
      py::arg("config_text"),
      "Runs the pulse optimization described by a config document and "
      "returns its result; writes no files.");
  m.def(
      "resolve_config",
      [](const std::string& config_text) {
        return qgo::resolved_config_text(qgo::parse_run_config(config_text));
      },
      py::arg("config_text"),
      "The fully resolved config document with every default filled in.");
}
