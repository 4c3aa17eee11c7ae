"""Local-equivalence classes of two-qubit gates.

Computes Makhlin invariants for the standard gates, shows that CZ and
CNOT share a class while SWAP does not, and KAK-decomposes a Haar-random
unitary to recover its entangler coordinates.
"""
import math

import numpy as np

from qgd import (canonical_entangler, kak_decompose, locally_equivalent,
                 makhlin_invariants, named_gate, distance)
from qgd.entangler import EntanglerCoords

print("Makhlin invariants (G1, G2):")
for name in ("I", "CNOT", "CZ", "SWAP", "SWAP_CNOT"):
    inv = makhlin_invariants(named_gate(name))
    print(f"  {name:10s} G1 = {inv.g1:+.3f}   G2 = {inv.g2:+.3f}")

print("\nCZ ~ CNOT?", locally_equivalent(named_gate("CZ"), named_gate("CNOT")))
print("CNOT ~ SWAP?", locally_equivalent(named_gate("CNOT"), named_gate("SWAP")))

# The entangler at (pi/4, pi/4, pi/4) is in the SWAP class.
a = canonical_entangler(EntanglerCoords(*[math.pi / 4] * 3))
print("A(pi/4, pi/4, pi/4) ~ SWAP?", locally_equivalent(a, named_gate("SWAP")))

# KAK-decompose a random U(4) element and rebuild it.
rng = np.random.default_rng(0)
z = (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))) / math.sqrt(2)
q, r = np.linalg.qr(z)
u = q * (np.diag(r) / np.abs(np.diag(r)))

f = kak_decompose(u)
print("\nKAK of a Haar-random unitary:")
print(f"  coords (x, y, z) = {np.round(f.coords.as_array(), 6)}")
print(f"  global phase     = {f.phase:+.6f}")
print(f"  reconstruction error = {distance(f.reconstruct(), u):.2e}")
