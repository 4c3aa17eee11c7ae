"""Command-line front end.

Subcommands: invariants, kak, compile, simulate, trajectory, rwa-scan.
Matrices travel as JSON 4x4 arrays of [re, im] pairs; coupling tensors as
{"Jxx": ..., ..., "Jzz": ..., "unit": "..."}; schedules as lists of op
objects in application order. QGD_TOL overrides the default tolerance.

Exit codes: 1 parse failure, 2 non-unitary input, 3 zero coupling,
4 nonzero J', 5 unsupported schedule op, 6 integrator non-convergence,
7 unknown gate name.
"""
from __future__ import annotations

import json
import math
import sys

import click
import numpy as np

from . import compiler, entangler, equivalence, hamiltonian, pulses, qmat
from .errors import (NonzeroJPrime, NotUnitary, StepTooCoarse, UnknownGate,
                     UnsupportedOp, ZeroCoupling)

_ERROR_CODES = [
    (NotUnitary, 2),
    (ZeroCoupling, 3),
    (NonzeroJPrime, 4),
    (UnsupportedOp, 5),
    (StepTooCoarse, 6),
    (UnknownGate, 7),
]


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    for etype, code in _ERROR_CODES:
        if isinstance(exc, etype):
            sys.exit(code)
    sys.exit(1)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot parse {path}: {exc}", err=True)
        sys.exit(1)


def _matrix_from_json(data) -> np.ndarray:
    try:
        m = np.array([[complex(re, im) for re, im in row] for row in data])
        if m.shape != (4, 4):
            raise ValueError(f"expected 4x4, got {m.shape}")
    except (TypeError, ValueError) as exc:
        click.echo(f"error: bad matrix JSON: {exc}", err=True)
        sys.exit(1)
    return m


def _resolve_unitary(gate: str | None, input_path: str | None) -> np.ndarray:
    if (gate is None) == (input_path is None):
        click.echo("error: give exactly one of --gate or --input", err=True)
        sys.exit(1)
    if gate is not None:
        try:
            return compiler.named_gate(gate)
        except UnknownGate as exc:
            _fail(exc)
    return _matrix_from_json(_load_json(input_path))


def _resolve_params(data: dict) -> hamiltonian.RotFrameParams:
    """Accept either a full coupling tensor or reduced parameters."""
    if "Jxx" in data:
        return hamiltonian.reduce_coupling(
            hamiltonian.CouplingTensor.from_dict(data))
    try:
        return hamiltonian.RotFrameParams.from_dict(data)
    except KeyError as exc:
        click.echo(f"error: coupling JSON missing key {exc}", err=True)
        sys.exit(1)


@click.group()
@click.option("--tol", type=float, envvar="QGD_TOL", default=1e-9,
              show_default=True, help="Verification tolerance.")
@click.option("--step", type=float, default=None,
              help="Integrator step override.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Random seed for any stochastic tie-breaking.")
@click.pass_context
def main(ctx, tol, step, seed):
    """Two-qubit gate synthesis toolkit for weakly coupled qubits."""
    if tol <= 0 or (step is not None and step <= 0):
        click.echo("error: tolerance and step must be positive", err=True)
        sys.exit(1)
    ctx.obj = {"tol": tol, "step": step, "seed": seed}


@main.command()
@click.option("--gate", default=None, help="Named gate (e.g. CNOT).")
@click.option("--input", "input_path", default=None,
              help="JSON matrix file.")
def invariants(gate, input_path):
    """Print the Makhlin invariants of a two-qubit unitary."""
    u = _resolve_unitary(gate, input_path)
    try:
        inv = equivalence.makhlin_invariants(u)
    except NotUnitary as exc:
        _fail(exc)
    click.echo(json.dumps(inv.to_dict()))


@main.command()
@click.option("--gate", default=None, help="Named gate (e.g. CNOT).")
@click.option("--input", "input_path", default=None,
              help="JSON matrix file.")
def kak(gate, input_path):
    """KAK-decompose a two-qubit unitary."""
    u = _resolve_unitary(gate, input_path)
    try:
        factors = equivalence.kak_decompose(u)
    except NotUnitary as exc:
        _fail(exc)
    click.echo(json.dumps(factors.to_dict()))


@main.command("compile")
@click.option("--input", "input_path", required=True,
              help="Coupling JSON (tensor or reduced parameters).")
@click.option("--prefer", type=click.Choice(["auto", "cnot", "swap_cnot"]),
              default="auto", show_default=True)
@click.pass_context
def compile_cmd(ctx, input_path, prefer):
    """Compile a verified CNOT (or SWAP*CNOT) pulse schedule."""
    p = _resolve_params(_load_json(input_path))
    try:
        result = compiler.compile_cnot(p, prefer=prefer, tol=ctx.obj["tol"])
    except ZeroCoupling as exc:
        _fail(exc)
    click.echo(json.dumps(result.to_dict()))


@main.command()
@click.option("--input", "input_path", required=True,
              help="Schedule JSON (op list, or a compile result).")
@click.option("--coupling", "coupling_path", default=None,
              help="Coupling JSON (not needed for compile-result input).")
@click.option("--target", default="CNOT", show_default=True,
              help="Named target gate.")
@click.option("--mode", type=click.Choice(
    ["exact", "exact_up_to_phase", "local_class"]),
    default="exact", show_default=True)
@click.pass_context
def simulate(ctx, input_path, coupling_path, target, mode):
    """Simulate a schedule and verify it against a target gate."""
    data = _load_json(input_path)
    if isinstance(data, dict) and "schedule" in data:
        schedule_json = data["schedule"]
        params = hamiltonian.RotFrameParams.from_dict(data["params"])
        target = data.get("target", target)
    else:
        schedule_json = data
        if coupling_path is None:
            click.echo("error: --coupling required for a bare schedule",
                       err=True)
            sys.exit(1)
        params = _resolve_params(_load_json(coupling_path))
    try:
        schedule = pulses.PulseSchedule.from_json(schedule_json)
        report = pulses.verify_schedule(
            schedule, params, compiler.named_gate(target),
            mode=mode, tol=ctx.obj["tol"], target_name=target)
    except (UnsupportedOp, UnknownGate, NotUnitary) as exc:
        _fail(exc)
    click.echo(json.dumps(report.to_dict()))


@main.command()
@click.option("--coupling", "coupling_path", required=True,
              help="Coupling JSON; J' must vanish.")
@click.option("--schedule", "schedule_path", required=True,
              help="Schedule JSON (entangling intervals and pi pulses).")
@click.option("--samples", type=int, default=32, show_default=True,
              help="Samples per entangling interval.")
def trajectory(coupling_path, schedule_path, samples):
    """Emit the entangler-space trajectory of a schedule as CSV."""
    params = _resolve_params(_load_json(coupling_path))
    try:
        schedule = pulses.PulseSchedule.from_json(_load_json(schedule_path))
        traj = entangler.trajectory(params, schedule,
                                    samples_per_interval=samples)
    except (NonzeroJPrime, UnsupportedOp) as exc:
        _fail(exc)
    click.echo(traj.to_csv(), nl=False)


@main.command("rwa-scan")
@click.option("--ratios", default="1e-1,1e-2,1e-3", show_default=True,
              help="Comma-separated g/eps values.")
@click.option("--gt", "gt_product", type=float, default=math.pi / 8,
              show_default=True, help="Fixed dimensionless horizon g*T.")
@click.option("--coupling", "coupling_path", default=None,
              help="Unit-scale coupling tensor JSON; scaled by g per point. "
                   "Default is a generic tensor with all 9 entries set.")
@click.pass_context
def rwa_scan(ctx, ratios, gt_product, coupling_path):
    """CSV of rotating-wave infidelity vs coupling/splitting ratio."""
    if coupling_path is not None:
        base = hamiltonian.CouplingTensor.from_dict(
            _load_json(coupling_path)).j
    else:
        base = np.array([[1.0, 0.4, 0.3],
                         [0.2, 0.8, -0.5],
                         [0.6, -0.3, 0.9]])
    scale = np.max(np.abs(base))
    eps = 1.0
    click.echo("ratio,infidelity")
    for ratio_str in ratios.split(","):
        ratio = float(ratio_str)
        g = ratio * eps
        ct = hamiltonian.CouplingTensor(base * (g / scale))
        t_final = gt_product / g
        try:
            inf = hamiltonian.rwa_infidelity(ct, eps, t_final,
                                             step=ctx.obj["step"])
        except StepTooCoarse as exc:
            _fail(exc)
        click.echo(f"{ratio:.6g},{inf:.12g}")


if __name__ == "__main__":
    main()
