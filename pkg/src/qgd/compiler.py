"""CNOT pulse compilation for weakly coupled qubits.

Given effective couplings (J, J_zz, J'), selects one of three verified
constructions:

  * ising_single_shot    -- pure sigma_z sigma_z coupling; one entangling
                            interval of duration pi/(4|J_zz|).
  * two_shot_refocus     -- J' = 0, J != 0; two intervals of pi/(8|J|)
                            split by a refocusing pi pulse (any J_zz).
  * xy_single_shot_swapcnot -- J' = J_zz = 0; one interval of pi/(4|J|)
                            producing SWAP*CNOT (circuit-equivalent to
                            CNOT with no overhead).
  * general_jprime       -- J' != 0 (or forced); z-rotation by
                            phi = arg(J + iJ') folds the antisymmetric
                            term away; two intervals of
                            dt = pi / (8 sqrt(J^2 + J'^2)).

Every emitted schedule is re-simulated and verified before it is
returned.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from . import pulses, qmat
from .entangler import EntanglerCoords, canonical_entangler
from .errors import UnknownGate, ZeroCoupling
from .hamiltonian import RotFrameParams, rot_frame_matrix
from .pulses import (Entangle, GlobalPhase, PulseSchedule, Rotate,
                     VerificationReport, hadamard_ops, verify_schedule)

__all__ = ["CompileResult", "compile_cnot", "named_gate"]

_PI = math.pi

CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=complex)
CZ = np.diag([1, 1, 1, -1]).astype(complex)


def controlled_phase(theta: float) -> np.ndarray:
    """C-theta = diag(1, 1, 1, e^{i theta})."""
    return np.diag([1, 1, 1, np.exp(1j * theta)]).astype(complex)


_CTHETA_RE = re.compile(r"^C(?:theta)?\(([-+0-9.eE]+)\)$")


def named_gate(name: str, theta: float | None = None) -> np.ndarray:
    """Look up a gate by name: I, CNOT, CZ, SWAP, SWAP_CNOT, CNOT_SWAP,
    or a controlled phase as 'Ctheta(angle)' / explicit theta argument."""
    key = name.strip()
    table = {
        "I": np.eye(4, dtype=complex),
        "CNOT": CNOT,
        "CZ": CZ,
        "SWAP": SWAP,
        "SWAP_CNOT": SWAP @ CNOT,
        "CNOT_SWAP": CNOT @ SWAP,
    }
    if key.upper() in table:
        return table[key.upper()].copy()
    if key.upper() == "CTHETA" and theta is not None:
        return controlled_phase(theta)
    m = _CTHETA_RE.match(key)
    if m:
        return controlled_phase(float(m.group(1)))
    raise UnknownGate(f"unknown gate {name!r}")


@dataclass(frozen=True)
class CompileResult:
    """A verified pulse schedule for the requested gate."""

    schedule: PulseSchedule
    branch: str
    target_name: str
    delta_t: float
    params: RotFrameParams
    verification: VerificationReport

    def to_dict(self) -> dict:
        return {
            "branch": self.branch,
            "target": self.target_name,
            "delta_t": self.delta_t,
            "params": self.params.to_dict(),
            "schedule": self.schedule.to_json(),
            "verification": self.verification.to_dict(),
        }


def _ising_schedule(p: RotFrameParams) -> tuple[PulseSchedule, float]:
    # CNOT = e^{-+ i pi/4} H_2 Rz(-+pi/2)_1 Rz(-+pi/2)_2 A(0,0,+-pi/4) H_2,
    # upper signs for J_zz > 0 so the entangling duration stays positive.
    sign = 1.0 if p.j_zz > 0 else -1.0
    dt = _PI / (4 * abs(p.j_zz))
    ops = (
        *hadamard_ops(2),
        Entangle(dt),
        Rotate("z", -sign * _PI / 2, 2),
        Rotate("z", -sign * _PI / 2, 1, simultaneous=True),
        *hadamard_ops(2),
        GlobalPhase(-sign * _PI / 4),
    )
    return PulseSchedule(ops=ops), dt


def _two_shot_schedule(p: RotFrameParams,
                       refocus_qubit: int) -> tuple[PulseSchedule, float]:
    # Two intervals of pi/(8|J|) split by Rx(pi); the refocusing pulse
    # makes the accumulated J_zz area cancel, landing on A(+-pi/4, 0, 0),
    # then the standard wrap turns that into an exact CNOT.
    sign = 1.0 if p.j > 0 else -1.0
    dt = _PI / (8 * abs(p.j))
    q = refocus_qubit
    ops = (
        Rotate("y", _PI / 2, 1),
        Entangle(dt),
        Rotate("x", _PI, q),
        Entangle(dt),
        Rotate("x", -_PI, q),
        Rotate("x", -sign * _PI / 2, 2),
        Rotate("x", -sign * _PI / 2, 1, simultaneous=True),
        Rotate("y", -_PI / 2, 1),
        GlobalPhase(-sign * _PI / 4),
    )
    return PulseSchedule(ops=ops), dt


def _xy_swapcnot_schedule(p: RotFrameParams) -> tuple[PulseSchedule, float]:
    # Single shot to A(+-pi/4, +-pi/4, 0), wrapped into SWAP*CNOT.
    sign = 1.0 if p.j > 0 else -1.0
    dt = _PI / (4 * abs(p.j))
    # The interval must land exactly on the canonical entangler.
    interval = qmat.expm_hermitian(rot_frame_matrix(p), dt)
    target_a = canonical_entangler(
        EntanglerCoords(sign * _PI / 4, sign * _PI / 4, 0.0))
    assert qmat.distance(interval, target_a) < 1e-10, \
        "single-shot interval missed the target entangler"
    ops = (
        Rotate("y", -_PI / 2, 2),
        Entangle(dt),
        Rotate("x", -_PI / 2, 2),
        Rotate("y", _PI / 2, 1),
        Rotate("y", sign * _PI / 2, 2, simultaneous=True),
        Rotate("x", sign * _PI / 2, 1),
        Rotate("x", _PI / 2, 2, simultaneous=True),
        GlobalPhase(sign * _PI / 2),
    )
    return PulseSchedule(ops=ops), dt


def _general_schedule(p: RotFrameParams,
                      refocus_qubit: int) -> tuple[PulseSchedule, float]:
    # Conjugation by Rz(phi)_2 with phi = arg(J + iJ') removes the
    # antisymmetric term; two intervals of dt = pi/(8 sqrt(J^2 + J'^2)).
    if p.j == 0 and p.j_prime == 0:
        raise ZeroCoupling(
            "general branch excludes the pure Ising case: (J, J') = (0, 0)")
    phi = p.phi
    dt = _PI / (8 * math.hypot(p.j, p.j_prime))
    if refocus_qubit == 1:
        # The refocusing pulse commutes with the Rz conjugation, so the
        # inner Rz pair cancels and the closing Rx(-pi)_1 merges with the
        # wrap's Rx(-pi/2)_1 into Rx(pi/2)_1 (phase absorbed).
        ops = (
            Rotate("y", _PI / 2, 1),
            Rotate("z", phi, 2),
            Entangle(dt),
            Rotate("x", _PI, 1),
            Entangle(dt),
            Rotate("x", _PI / 2, 1),
            Rotate("z", -phi, 2),
            Rotate("y", -_PI / 2, 1),
            Rotate("x", -_PI / 2, 2, simultaneous=True),
            GlobalPhase(3 * _PI / 4),
        )
    else:
        # Refocusing on qubit 2 does not commute with Rz(phi)_2; keep the
        # full conjugation around each entangling interval.
        ops = (
            Rotate("y", _PI / 2, 1),
            Rotate("z", phi, 2),
            Entangle(dt),
            Rotate("z", -phi, 2),
            Rotate("x", _PI, 2),
            Rotate("z", phi, 2),
            Entangle(dt),
            Rotate("z", -phi, 2),
            Rotate("x", -_PI, 2),
            Rotate("x", -_PI / 2, 1),
            Rotate("x", -_PI / 2, 2, simultaneous=True),
            Rotate("y", -_PI / 2, 1),
            GlobalPhase(-_PI / 4),
        )
    return PulseSchedule(ops=ops), dt


def compile_cnot(p: RotFrameParams, prefer: str = "auto",
                 refocus_qubit: int = 1, tol: float = 1e-9) -> CompileResult:
    """Emit a verified CNOT (or SWAP*CNOT) schedule for the couplings p.

    prefer selects between the canonical CNOT and the single-shot
    SWAP*CNOT (available only when J_zz = J' = 0 and J != 0); auto picks
    SWAP*CNOT exactly in that regime.
    """
    if prefer not in ("auto", "cnot", "swap_cnot"):
        raise ValueError(f"bad prefer {prefer!r}")
    if p.j == 0 and p.j_zz == 0 and p.j_prime == 0:
        raise ZeroCoupling("all of J, J_zz, J' are zero")
    if refocus_qubit not in (1, 2):
        raise ValueError("refocus_qubit must be 1 or 2")

    xy_single_shot_ok = (p.j_prime == 0 and p.j_zz == 0 and p.j != 0)
    want_swapcnot = (prefer == "swap_cnot" or
                     (prefer == "auto" and xy_single_shot_ok))

    if want_swapcnot and xy_single_shot_ok:
        schedule, dt = _xy_swapcnot_schedule(p)
        branch, target_name = "xy_single_shot_swapcnot", "SWAP_CNOT"
    elif p.j_prime == 0 and p.j == 0:
        schedule, dt = _ising_schedule(p)
        branch, target_name = "ising_single_shot", "CNOT"
    elif p.j_prime == 0:
        schedule, dt = _two_shot_schedule(p, refocus_qubit)
        branch, target_name = "two_shot_refocus", "CNOT"
    else:
        schedule, dt = _general_schedule(p, refocus_qubit)
        branch, target_name = "general_jprime", "CNOT"

    report = verify_schedule(schedule, p, named_gate(target_name),
                             mode="exact", tol=tol, target_name=target_name)
    if not report.passed:
        raise AssertionError(
            f"compiled {branch} schedule failed verification "
            f"(exact distance {report.exact_distance:.3e})")
    return CompileResult(schedule=schedule, branch=branch,
                         target_name=target_name, delta_t=dt,
                         params=p, verification=report)
