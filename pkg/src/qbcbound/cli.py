"""Command-line front end.

Subcommands
-----------
qinfo          entropic summary of a state JSON file
esq            squashed-entanglement value/estimate for a state and partition
bounds-finite  rate-region constraints for a finite-dimensional channel
bounds-bosonic closed-form pure-loss broadcast bounds at one (eta_b, eta_c)
sweep          bounds-bosonic over a grid of eta_b values
selftest       quick invariant checks across all modules

All output is deterministic given --seed: floats are rendered with 12
significant digits, divergent bounds as the string "inf", and JSON keys are
sorted.  Exit code 2 signals a validation failure, with the violated
invariant named on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .bosonic import BosonicBroadcastSpec, optimal_eta_star, theorem3_report
from .errors import QbcError
from .measures import BlockSpec, cmi_dual_measure, cmi_total, entropy, qcmi
from .partitions import Partition, c_of, parse_partition
from .rates import InputSearchConfig, evaluate_bounds, two_receiver_report
from .sampling import random_channel, random_state
from .squash import Measure, SquashConfig, esq_exact_pure, esq_upper_variational
from .states import (
    apply_channel,
    channel_from_json,
    make_ghz,
    partial_trace,
    purify,
    state_from_json,
    tensor,
    trace_distance,
)

SWEEP_COLUMNS = (
    "eta_b",
    "eta_c",
    "bound_b_cut",
    "bound_c_cut",
    "bound_bc_cut",
    "tripartite_bound",
    "tripartite_bound_as_printed",
    "eta_star",
)


def _fmt(x):
    """Render a value deterministically: 12 significant digits, "inf"
    sentinel for divergent bounds, recursion into containers."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        if math.isnan(x):
            raise QbcError("NaN is never emitted")
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: _fmt(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return _fmt(float(x))


def _fmt_cell(x) -> str:
    v = _fmt(x)
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_rows(rows: list[dict], columns, fmt: str, output: str | None):
    if fmt == "json":
        doc = {"version": __version__, "rows": [_fmt(r) for r in rows]}
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", output)
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt_cell(r[c]) for c in columns])
    _emit(buf.getvalue(), output)


def _read_text(path: str) -> str:
    with open(path) as fh:
        return fh.read()


# ---------------------------------------------------------------------------
# subcommands


def _cmd_qinfo(args) -> int:
    state = state_from_json(_read_text(args.state))
    doc = {
        "labels": list(state.labels),
        "dims": list(state.dims),
        "pure": state.is_pure(),
        "entropy_total": entropy(state, set(state.labels)),
        "entropy_by_label": {lab: entropy(state, {lab}) for lab in state.labels},
    }
    if args.partition:
        partition = parse_partition(args.partition)
        spec = BlockSpec(tuple(frozenset(b) for b in partition.blocks))
        doc["partition"] = str(partition)
        doc["cmi_total"] = cmi_total(state, spec)
        doc["cmi_dual"] = cmi_dual_measure(state, spec)
    _emit(json.dumps(_fmt(doc), sort_keys=True, indent=2) + "\n", args.output)
    return 0


def _esq_one(state, partition, measure, cfg):
    if state.is_pure():
        return esq_exact_pure(state, partition, measure), True
    res = esq_upper_variational(state, partition, measure, cfg)
    return res.value_bits, res.converged


def _cmd_esq(args) -> int:
    state = state_from_json(_read_text(args.state))
    partition = parse_partition(args.partition)
    cfg = SquashConfig(restarts=args.restarts, seed=args.seed)
    measures = {
        "esq": [Measure.E_SQ],
        "esq-tilde": [Measure.E_SQ_TILDE],
        "both": [Measure.E_SQ, Measure.E_SQ_TILDE],
        "min": [Measure.E_SQ, Measure.E_SQ_TILDE],
    }[args.measure]
    values = {}
    for m in measures:
        v, conv = _esq_one(state, partition, m, cfg)
        values[m.value] = {"value_bits": v, "converged": conv}
    doc = {
        "version": __version__,
        "partition": str(partition),
        "measure": args.measure,
        "exact": state.is_pure(),
        "seed": args.seed,
        "restarts": args.restarts,
        "results": values,
    }
    if args.measure == "min":
        doc["min_bits"] = min(v["value_bits"] for v in values.values())
    _emit(json.dumps(_fmt(doc), sort_keys=True, indent=2) + "\n", args.output)
    return 0


def _cmd_bounds_finite(args) -> int:
    channel = channel_from_json(_read_text(args.channel))
    cfg = InputSearchConfig(restarts=args.restarts, seed=args.seed)
    squash_cfg = SquashConfig(restarts=3, max_iters=400, seed=args.seed)
    if args.partition:
        partitions = [parse_partition(p) for p in args.partition]
        constraints = evaluate_bounds(channel, partitions, cfg, squash_cfg)
        doc = {
            "version": __version__,
            "seed": args.seed,
            "constraints": [
                {
                    "partition": str(rc.partition),
                    "weights": {",".join(m): w for m, w in rc.weights().items()},
                    "bound_bits": rc.bound_bits,
                    "measure_used": rc.measure_used,
                    "metadata": rc.metadata,
                }
                for rc in constraints
            ],
        }
    elif len(channel.output_labels) == 2:
        report = two_receiver_report(channel, cfg, squash_cfg)
        doc = {"version": __version__, "seed": args.seed, "report": report}
    else:
        constraints = evaluate_bounds(channel, None, cfg, squash_cfg)
        doc = {
            "version": __version__,
            "seed": args.seed,
            "constraints": [
                {
                    "partition": str(rc.partition),
                    "weights": {",".join(m): w for m, w in rc.weights().items()},
                    "bound_bits": rc.bound_bits,
                    "measure_used": rc.measure_used,
                    "metadata": rc.metadata,
                }
                for rc in constraints
            ],
        }
    _emit(json.dumps(_fmt(doc), sort_keys=True, indent=2) + "\n", args.output)
    return 0


def _bosonic_row(eta_b: float, eta_c: float) -> dict:
    rep = theorem3_report(eta_b, eta_c)
    return {
        "eta_b": eta_b,
        "eta_c": eta_c,
        "bound_b_cut": rep.bound_b_cut,
        "bound_c_cut": rep.bound_c_cut,
        "bound_bc_cut": rep.bound_bc_cut,
        "tripartite_bound": rep.tripartite_bound,
        "tripartite_bound_as_printed": rep.tripartite_bound_as_printed,
        "eta_star": rep.eta_star,
    }


def _cmd_bounds_bosonic(args) -> int:
    rows = [_bosonic_row(args.eta_b, args.eta_c)]
    if args.ns is not None:
        rep = theorem3_report(args.eta_b, args.eta_c, mean_photon=args.ns)
        if args.format == "json" and rep.finite_ns is not None:
            rows[0] = dict(rows[0])
            rows[0]["finite_ns"] = rep.finite_ns
    _emit_rows(rows, SWEEP_COLUMNS, args.format, args.output)
    return 0


def _cmd_sweep(args) -> int:
    steps = args.sweep_steps
    if steps < 1:
        raise QbcError("--sweep-steps must be at least 1")
    rows = []
    for i in range(steps):
        eta_b = args.eta_b * (i + 1) / steps
        rows.append(_bosonic_row(eta_b, args.eta_c))
    rows.sort(key=lambda r: (r["eta_b"], r["eta_c"]))
    _emit_rows(rows, SWEEP_COLUMNS, args.format, args.output)
    return 0


def _selftest_checks(seed: int):
    rng = np.random.default_rng(seed)
    # product-state marginal
    a = random_state(rng, ("A",), (2,))
    b = random_state(rng, ("B",), (3,))
    yield (
        "partial_trace recovers product factor",
        np.max(np.abs(partial_trace(tensor([a, b]), {"A"}).matrix - a.matrix)) < 1e-12,
    )
    # purification round trip
    rho = random_state(rng, ("A", "B"), (2, 2))
    yield (
        "purify round trip",
        trace_distance(partial_trace(purify(rho, "E"), {"A", "B"}), rho) < 1e-9,
    )
    # GHZ pure-state value
    ghz = make_ghz(("A", "B", "C"), 2)
    yield (
        "tripartite GHZ value 1.5 bits",
        abs(esq_exact_pure(ghz, Partition((("A",), ("B",), ("C",)))) - 1.5) < 1e-9,
    )
    # cross-block subset collection
    yield (
        "cross-block subsets of A|B,C",
        c_of(Partition((("A",), ("B", "C"))))
        == [("A", "B"), ("A", "C"), ("A", "B", "C")],
    )
    # QCMI duality on a random pure 4-party state
    psi = purify(random_state(rng, ("A", "B", "E"), (2, 2, 2)), "D")
    yield (
        "pure-state conditioning duality",
        abs(qcmi(psi, {"A"}, {"B"}, {"E"}) - qcmi(psi, {"A"}, {"B"}, {"D"})) < 1e-9,
    )
    # channel application preserves trace
    ch = random_channel(rng, 2, ("B", "C"), (2, 2))
    st = random_state(rng, ("R", "A"), (2, 2))
    out = apply_channel(ch, st, "A")
    yield ("channel application preserves trace", abs(np.trace(out.matrix).real - 1) < 1e-9)
    # bosonic stationarity root for symmetric transmissivities
    spec = BosonicBroadcastSpec((0.25, 0.25))
    yield ("symmetric loss squashing root 4/7", abs(optimal_eta_star(spec) - 4 / 7) < 1e-9)


def _cmd_selftest(args) -> int:
    failures = 0
    for name, ok in _selftest_checks(args.seed):
        line = f"{'ok' if ok else 'FAIL'}  {name}"
        print(line)
        if not ok:
            failures += 1
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qbcbound",
        description="Squashed-entanglement rate bounds for quantum broadcast channels.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=True):
        sp.add_argument("--output", default=None, help="write output here (default stdout)")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")

    sp = sub.add_parser("qinfo", help="entropic summary of a state")
    sp.add_argument("state", help="state JSON file")
    sp.add_argument("--partition", default=None, help='block syntax, e.g. "R|B,C"')
    common(sp, seed=False)
    sp.set_defaults(fn=_cmd_qinfo)

    sp = sub.add_parser("esq", help="squashed-entanglement value or upper bound")
    sp.add_argument("state", help="state JSON file")
    sp.add_argument("--partition", required=True, help='block syntax, e.g. "A|B|C"')
    sp.add_argument(
        "--measure",
        choices=("esq", "esq-tilde", "both", "min"),
        default="esq",
        help="which measure(s) to evaluate (default esq)",
    )
    sp.add_argument("--restarts", type=int, default=20, help="optimizer restarts (default 20)")
    common(sp)
    sp.set_defaults(fn=_cmd_esq)

    sp = sub.add_parser("bounds-finite", help="rate constraints for a channel")
    sp.add_argument("channel", help="channel JSON file")
    sp.add_argument(
        "--partition",
        action="append",
        default=None,
        help="restrict to this partition (repeatable); default: all nontrivial",
    )
    sp.add_argument("--restarts", type=int, default=5, help="input-search restarts (default 5)")
    common(sp)
    sp.set_defaults(fn=_cmd_bounds_finite)

    sp = sub.add_parser("bounds-bosonic", help="closed-form pure-loss bounds")
    sp.add_argument("--eta-b", type=float, required=True)
    sp.add_argument("--eta-c", type=float, default=0.0)
    sp.add_argument("--ns", type=float, default=None, help="mean photon number (optional)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    common(sp, seed=False)
    sp.set_defaults(fn=_cmd_bounds_bosonic)

    sp = sub.add_parser("sweep", help="bounds-bosonic over a grid of eta_b values")
    sp.add_argument("--eta-b", type=float, required=True, help="largest eta_b in the sweep")
    sp.add_argument("--eta-c", type=float, default=0.0, help="fixed eta_c")
    sp.add_argument("--sweep-steps", type=int, default=10)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    common(sp, seed=False)
    sp.set_defaults(fn=_cmd_sweep)

    sp = sub.add_parser("selftest", help="run quick invariant checks")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_selftest)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (QbcError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
