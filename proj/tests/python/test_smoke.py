# Copyright 2026 The qgo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import qgo

SMALL_RUN = """
[model]
preset = rydberg-table1
target = cphase

[grid]
t_ns = 75
nt = 100

[stateset]
kind = diagonal-2

[optimizer]
lambda_a = 1.0
max_iterations = 3
fidelity_interval = 0
"""


def test_units_round_trip():
    assert qgo.to_mhz(qgo.mhz(600.0)) == pytest.approx(600.0, rel=1e-14)
    assert qgo.ghz(1.0) == pytest.approx(2 * math.pi)
    assert qgo.rate_from_us(25.0) == pytest.approx(1.0 / 25000.0)


def test_state_families():
    assert qgo.set_kind_names() == [
        "diagonal-2",
        "minimal-3",
        "extended",
        "mub-2d",
        "full-basis",
    ]
    s = qgo.build_state_set("minimal-3", 4)
    assert len(s) == 3
    assert s.weights[0] / s.weights[1] == pytest.approx(20.0)
    for rho in s.states:
        assert np.trace(rho) == pytest.approx(1.0)
        assert np.allclose(rho, rho.conj().T)
    full = qgo.build_state_set("full-basis", 4)
    assert len(full) == 16


def test_rydberg_propagation_preserves_trace():
    bundle = qgo.build_rydberg()
    assert bundle.model.dim == 16
    assert bundle.embedding.levels == [0, 1, 4, 5]
    rho0 = bundle.embedding.embed(qgo.totally_rotated_state(4))
    nt = 50
    controls = np.zeros((nt, len(bundle.model.couplings)))
    substeps = int(np.ceil((75.0 / nt) / bundle.max_substep_ns))
    final = qgo.propagate(bundle.model, 75.0, nt, substeps, controls, rho0)
    assert np.trace(final).real == pytest.approx(1.0, abs=1e-8)
    edges = qgo.propagate_edges(bundle.model, 75.0, nt, substeps, controls, rho0)
    assert len(edges) == nt + 1


def test_fidelity_of_exact_gate():
    target = qgo.sqrt_iswap_target()
    u_map = np.kron(target.conj(), target)
    assert qgo.f_avg(u_map, target) == pytest.approx(1.0, abs=1e-12)
    mean, err = qgo.f_avg_monte_carlo(u_map, target, n_samples=2000, seed=7)
    assert abs(mean - 1.0) <= max(4 * err, 1e-9)


def test_unitarity_decision():
    u = qgo.haar_unitary(3, seed=11)
    assert qgo.channel_is_unitary(np.kron(u.conj(), u))
    noisy = qgo.random_kraus_channel(3, 3, seed=12)
    assert not qgo.channel_is_unitary(noisy)
    assert qgo.choi_matrix(np.kron(u.conj(), u)).shape == (9, 9)


def test_battery_smoke():
    report = qgo.run_verification_battery(samples_per_dim=5, seed=3, dims=[2, 3])
    assert report["all_pass"]
    assert not report["vacuous"]
    assert all(row["pass"] for row in report["rows"])


def test_optimize_from_config():
    result = qgo.optimize(SMALL_RUN)
    assert result.status in ("max_iter", "converged")
    trace = result.trace
    assert trace.shape[1] == 6
    assert trace.shape[0] == 4
    j_t = trace[:, 1]
    assert j_t[-1] < j_t[0]
    assert np.all(np.diff(trace[:, 2][1:]) <= 1e-10)
    assert result.final_pulse.shape == (100, 4)
    assert math.isfinite(result.gate_error)


def test_resolve_config_round_trips():
    text = qgo.resolve_config(SMALL_RUN)
    assert "preset = rydberg-table1" in text
    assert "nt = 100" in text
    again = qgo.resolve_config(text)
    assert again == text
