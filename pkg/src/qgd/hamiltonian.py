"""Lab-frame and rotating-frame Hamiltonians for a pair of weakly
coupled qubits, and the reduction of the 9-component coupling tensor to
the 3 effective rotating-frame parameters (J, J_zz, J').

Basis ordering |00>, |01>, |10>, |11> with qubit 1 the left tensor
factor; |0> is the lower eigenstate of -(eps/2) sigma^z.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import qmat
from .errors import StepTooCoarse
from .qmat import I2, SX, SY, SZ, kron

__all__ = [
    "CouplingTensor", "QubitParams", "RotFrameParams",
    "reduce_coupling", "rot_frame_matrix", "lab_frame_generator",
    "rwa_infidelity",
]

_AXES = ("x", "y", "z")
_TENSOR_KEYS = [f"J{a}{b}" for a in _AXES for b in _AXES]


@dataclass(frozen=True)
class CouplingTensor:
    """3x3 real tensor J_{mu nu}, mu/nu in {x,y,z}, angular-frequency units."""

    j: np.ndarray

    def __post_init__(self):
        j = np.asarray(self.j, dtype=float)
        if j.shape != (3, 3):
            raise ValueError("coupling tensor must be 3x3")
        if not np.all(np.isfinite(j)):
            raise ValueError("coupling tensor entries must be finite")
        object.__setattr__(self, "j", j)

    @classmethod
    def from_dict(cls, d: dict) -> "CouplingTensor":
        missing = [k for k in _TENSOR_KEYS if k not in d]
        if missing:
            raise ValueError(f"coupling JSON missing keys: {missing}")
        j = np.array([[float(d[f"J{a}{b}"]) for b in _AXES] for a in _AXES])
        return cls(j=j)

    def to_dict(self, unit: str = "angular frequency") -> dict:
        out = {f"J{a}{b}": float(self.j[i, k])
               for i, a in enumerate(_AXES) for k, b in enumerate(_AXES)}
        out["unit"] = unit
        return out


@dataclass(frozen=True)
class QubitParams:
    """Level splittings, drive amplitudes and drive phases for both qubits."""

    eps1: float
    eps2: float
    omega1: float = 0.0
    omega2: float = 0.0
    phi1: float = 0.0
    phi2: float = 0.0

    def __post_init__(self):
        if self.eps1 <= 0 or self.eps2 <= 0:
            raise ValueError("level splittings must be positive")
        if self.omega1 < 0 or self.omega2 < 0:
            raise ValueError("drive amplitudes must be >= 0")


@dataclass(frozen=True)
class RotFrameParams:
    """Effective rotating-frame couplings (J, J_zz, J').

    discarded_weight is the sum of squares of the tensor combinations the
    rotating-wave average drops; it is diagnostic only.
    """

    j: float
    j_zz: float
    j_prime: float
    discarded_weight: float = 0.0

    @property
    def gamma(self) -> complex:
        return 2 * (self.j + 1j * self.j_prime)

    @property
    def gamma_abs(self) -> float:
        return abs(self.gamma)

    @property
    def phi(self) -> float:
        """arg(J + i J'), in (-pi, pi]."""
        return cmath.phase(complex(self.j, self.j_prime))

    @classmethod
    def from_dict(cls, d: dict) -> "RotFrameParams":
        return cls(j=float(d["J"]), j_zz=float(d["Jzz"]),
                   j_prime=float(d.get("Jprime", d.get("J'", 0.0))))

    def to_dict(self) -> dict:
        return {"J": self.j, "Jzz": self.j_zz, "Jprime": self.j_prime}


def reduce_coupling(ct: CouplingTensor) -> RotFrameParams:
    """Rotating-wave reduction of the full tensor to (J, J_zz, J').

    J = (Jxx + Jyy)/2, J' = (Jxy - Jyx)/2, J_zz passes through; every
    other combination time-averages to zero in the rotating frame and is
    reported via discarded_weight.
    """
    j = ct.j
    jj = (j[0, 0] + j[1, 1]) / 2
    jp = (j[0, 1] - j[1, 0]) / 2
    dropped = ((j[0, 0] - j[1, 1]) / 2) ** 2 + ((j[0, 1] + j[1, 0]) / 2) ** 2
    dropped += j[0, 2] ** 2 + j[1, 2] ** 2 + j[2, 0] ** 2 + j[2, 1] ** 2
    return RotFrameParams(j=jj, j_zz=j[2, 2], j_prime=jp,
                          discarded_weight=float(dropped))


def rot_frame_matrix(p: RotFrameParams) -> np.ndarray:
    """The effective two-qubit coupling Hamiltonian in the computational
    basis: diag (J_zz, -J_zz, -J_zz, J_zz) with gamma = 2(J + iJ') on the
    inner off-diagonal block."""
    g = p.gamma
    return np.array([
        [p.j_zz, 0, 0, 0],
        [0, -p.j_zz, g, 0],
        [0, np.conj(g), -p.j_zz, 0],
        [0, 0, 0, p.j_zz],
    ], dtype=complex)


def rot_frame_operator(p: RotFrameParams) -> np.ndarray:
    """Same Hamiltonian built from the operator form
    J (XX + YY) + J_zz ZZ + J' (XY - YX); used as a cross-check."""
    return (p.j * (kron(SX, SX) + kron(SY, SY))
            + p.j_zz * kron(SZ, SZ)
            + p.j_prime * (kron(SX, SY) - kron(SY, SX)))


def lab_frame_generator(ct: CouplingTensor, qp: QubitParams,
                        drive_on: bool = True) -> Callable[[float], np.ndarray]:
    """Time-dependent lab-frame generator H(t).

    H(t) = sum_i [-(eps_i/2) Z_i + Omega_i cos(eps_i t + phi_i) X_i]
           + sum_{mu nu} J_{mu nu} sigma_1^mu sigma_2^nu.
    With drive_on false the Omega terms are dropped.
    """
    paulis = (SX, SY, SZ)
    coupling = sum(ct.j[m, n] * kron(paulis[m], paulis[n])
                   for m in range(3) for n in range(3))
    drift = (-(qp.eps1 / 2) * kron(SZ, I2) - (qp.eps2 / 2) * kron(I2, SZ))
    x1 = kron(SX, I2)
    x2 = kron(I2, SX)

    def h(t: float) -> np.ndarray:
        out = drift + coupling
        if drive_on:
            out = (out
                   + qp.omega1 * math.cos(qp.eps1 * t + qp.phi1) * x1
                   + qp.omega2 * math.cos(qp.eps2 * t + qp.phi2) * x2)
        return out

    return h


def rwa_infidelity(ct: CouplingTensor, eps: float, t_final: float,
                   step: float | None = None,
                   conv_tol: float = 1e-8) -> float:
    """Phase-insensitive distance between the exact rotating-frame
    propagator and the rotating-wave-approximated one.

    Integrates the lab frame with tuned, undriven qubits over [0, T],
    transforms via U_rot = e^{+i H0 T} U_lab with
    H0 = -(eps/2)(Z1 + Z2), and compares against e^{-i Heff T} where Heff
    is the reduced rotating-frame Hamiltonian.

    Raises StepTooCoarse if halving the integration step moves the result
    by more than conv_tol.
    """
    if eps <= 0 or t_final <= 0:
        raise ValueError("eps and T must be positive")
    qp = QubitParams(eps1=eps, eps2=eps)
    gen = lab_frame_generator(ct, qp, drive_on=False)
    ph = qmat.sample_generator(gen, t_final, step=step)
    u_lab = qmat.propagate(ph)
    fine = qmat.sample_generator(gen, t_final,
                                 step=ph.total_duration / (2 * len(ph.segments)))
    u_lab_fine = qmat.propagate(fine)
    if qmat.distance(u_lab, u_lab_fine) > conv_tol:
        raise StepTooCoarse(
            "lab-frame integration did not converge; decrease the step")

    h0 = -(eps / 2) * (kron(SZ, I2) + kron(I2, SZ))
    u_rot = qmat.expm_hermitian(h0, -t_final) @ u_lab_fine
    heff = rot_frame_matrix(reduce_coupling(ct))
    u_rwa = qmat.expm_hermitian(heff, t_final)
    return qmat.distance(u_rot, u_rwa, up_to_global_phase=True)
