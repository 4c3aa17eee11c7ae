import math

import numpy as np
import pytest

from qgd.compiler import (CNOT, CZ, SWAP, compile_cnot, controlled_phase,
                          named_gate)
from qgd.errors import UnknownGate, ZeroCoupling
from qgd.hamiltonian import RotFrameParams
from qgd.pulses import Entangle, simulate_schedule
from qgd.qmat import distance

PI = math.pi


class TestNamedGate:
    def test_cnot_matrix(self):
        assert np.array_equal(named_gate("CNOT"),
                              np.array([[1, 0, 0, 0], [0, 1, 0, 0],
                                        [0, 0, 0, 1], [0, 0, 1, 0]]))

    def test_swap_matrix(self):
        assert np.array_equal(named_gate("SWAP"),
                              np.array([[1, 0, 0, 0], [0, 0, 1, 0],
                                        [0, 1, 0, 0], [0, 0, 0, 1]]))

    def test_c_pi_is_cz(self):
        assert distance(named_gate("Ctheta(3.141592653589793)"), CZ) < 1e-12
        assert distance(controlled_phase(PI), CZ) < 1e-12

    def test_composites(self):
        assert np.array_equal(named_gate("SWAP_CNOT"), SWAP @ CNOT)
        assert np.array_equal(named_gate("CNOT_SWAP"), CNOT @ SWAP)

    def test_unknown_rejected(self):
        with pytest.raises(UnknownGate):
            named_gate("TOFFOLI")


class TestCompileBranches:
    def test_ising_single_shot(self):
        g = 0.9
        res = compile_cnot(RotFrameParams(0.0, g, 0.0))
        assert res.branch == "ising_single_shot"
        assert math.isclose(res.schedule.total_entangling_time, PI / (4 * g))
        assert res.verification.pass_exact
        assert res.target_name == "CNOT"

    def test_two_shot_refocus(self):
        g = 1.0
        res = compile_cnot(RotFrameParams(g, 0.3 * g, 0.0))
        assert res.branch == "two_shot_refocus"
        assert math.isclose(res.delta_t, PI / (8 * g))
        assert res.verification.pass_exact

    def test_two_shot_jzz_independent(self):
        g = 1.0
        outs = []
        for jzz in (0.0, 0.3, -1.0):
            res = compile_cnot(RotFrameParams(g, jzz, 0.0), prefer="cnot")
            outs.append(simulate_schedule(res.schedule,
                                          RotFrameParams(g, jzz, 0.0)))
        assert distance(outs[0], outs[1]) < 1e-10
        assert distance(outs[0], outs[2]) < 1e-10

    def test_general_jprime(self):
        g = 1.0
        res = compile_cnot(RotFrameParams(g, 0.0, g))
        assert res.branch == "general_jprime"
        assert math.isclose(res.delta_t, PI / (8 * math.sqrt(2) * g))
        assert math.isclose(res.params.phi, PI / 4)
        assert res.verification.pass_exact
        # The general branch uses exactly two entangling intervals of dt.
        durations = [op.duration for op in res.schedule.ops
                     if isinstance(op, Entangle)]
        assert durations == [res.delta_t, res.delta_t]

    def test_auto_prefers_swapcnot_for_pure_xy(self):
        res = compile_cnot(RotFrameParams(1.0, 0.0, 0.0))
        assert res.branch == "xy_single_shot_swapcnot"
        assert res.target_name == "SWAP_CNOT"
        assert res.verification.pass_exact
        assert math.isclose(res.schedule.total_entangling_time, PI / 4)

    def test_prefer_cnot_overrides_auto(self):
        res = compile_cnot(RotFrameParams(1.0, 0.0, 0.0), prefer="cnot")
        assert res.branch == "two_shot_refocus"

    def test_prefer_swapcnot_falls_back_when_unavailable(self):
        # Single-shot SWAP*CNOT needs J_zz = J' = 0; otherwise the CNOT
        # constructions are used.
        res = compile_cnot(RotFrameParams(1.0, 0.5, 0.0),
                           prefer="swap_cnot")
        assert res.branch == "two_shot_refocus"

    def test_refocus_qubit_choice(self):
        for q in (1, 2):
            res = compile_cnot(RotFrameParams(1.0, 0.4, 0.2),
                               refocus_qubit=q)
            assert res.verification.pass_exact

    def test_zero_coupling_rejected(self):
        with pytest.raises(ZeroCoupling):
            compile_cnot(RotFrameParams(0.0, 0.0, 0.0))

    def test_random_triples_all_branches(self, rng):
        for _ in range(300):
            j, jzz, jp = rng.normal(size=3)
            # Hit the special branches too.
            if rng.uniform() < 0.2:
                jp = 0.0
            if rng.uniform() < 0.1:
                j, jp = 0.0, 0.0
                jzz = jzz if jzz != 0 else 1.0
            res = compile_cnot(RotFrameParams(j, jzz, jp))
            p = res.params
            u = simulate_schedule(res.schedule, p)
            assert distance(u, named_gate(res.target_name)) < 1e-9

    def test_scaling_covariance(self, rng):
        j, jzz, jp = 0.7, -0.4, 0.2
        lam = 3.5
        res1 = compile_cnot(RotFrameParams(j, jzz, jp))
        res2 = compile_cnot(RotFrameParams(lam * j, lam * jzz, lam * jp))
        ops1, ops2 = res1.schedule.ops, res2.schedule.ops
        assert len(ops1) == len(ops2)
        for a, b in zip(ops1, ops2):
            if isinstance(a, Entangle):
                assert math.isclose(b.duration, a.duration / lam)
            else:
                assert a == b

    def test_result_json(self):
        import json
        d = compile_cnot(RotFrameParams(1.0, 0.2, 0.1)).to_dict()
        json.dumps(d)
        assert d["verification"]["passed"]
        assert d["branch"] == "general_jprime"
