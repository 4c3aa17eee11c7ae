"""Entangler-space trajectories and rotating-wave validity.

Traces the refocused two-shot path through the entangler 3-torus (a
straight line in the x = y plane, reflected by the pi pulse onto the x
axis) and scans the rotating-wave infidelity against coupling strength.
"""
import math

import numpy as np

from qgd import (CouplingTensor, Entangle, PulseSchedule, Rotate,
                 RotFrameParams, rwa_infidelity, trajectory)

PI = math.pi

# Two-shot CNOT path: J = 1, arbitrary J_zz, pi pulse between intervals.
p = RotFrameParams(j=1.0, j_zz=0.6, j_prime=0.0)
dt = PI / (8 * p.j)
sched = PulseSchedule((Entangle(dt), Rotate("x", PI, 1), Entangle(dt)))
traj = trajectory(p, sched, samples_per_interval=4)

print("Two-shot trajectory r(t) = (x, y, z):")
for t, r in zip(traj.times, traj.raw):
    print(f"  t = {t:.4f}   r = ({r[0]:+.4f}, {r[1]:+.4f}, {r[2]:+.4f})")
print(f"endpoint is (pi/4, 0, 0): {np.allclose(traj.raw[-1], [PI/4, 0, 0])}")

# RWA infidelity vs g/eps at fixed g*T, for a generic coupling tensor.
base = np.array([[1.0, 0.4, 0.3],
                 [0.2, 0.8, -0.5],
                 [0.6, -0.3, 0.9]])
print("\nRWA infidelity at fixed g*T = pi/8:")
for ratio in (1e-1, 1e-2, 1e-3):
    ct = CouplingTensor(base * ratio)
    inf = rwa_infidelity(ct, eps=1.0, t_final=PI / (8 * ratio))
    print(f"  g/eps = {ratio:.0e}   infidelity = {inf:.3e}")
