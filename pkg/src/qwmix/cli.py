"""Command-line front end.

Subcommands: analyze, mix-check, srg-classify, rule-out, eps-search.
Output is deterministic JSON (fixed key order, floats printed to 12
significant digits); ``--pretty`` switches to a human-readable table.
Exit codes: 0 success, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Optional, Sequence

import numpy as np

from . import __version__
from .bipartite import OBSTRUCTION_CASES, rule_out_mixing
from .cycles_eps import eps_search
from .errors import InvalidArgumentError, NumericFailureError
from .graphs import Graph, SrgParams, bipartition, is_regular, parse_graph_spec, srg_params
from .kernels import BACKEND
from .spectral import char_poly_exact, eigendecompose, integral_spectrum, spectrum_pairs
from .srg import srg_eigenvalues, srg_mixing_verdict
from .walk import (
    GRID_FLOOR,
    MIX_TOL,
    flatness,
    mixing_scan,
    parse_time,
    parse_time_grid,
    transition,
)


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return None
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        for line in _pretty_lines(report):
            print(line)
    else:
        print(json.dumps(_round_floats(report), indent=2))


def _pretty_lines(obj: Any, prefix: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{prefix}{k}:")
                lines.extend(_pretty_lines(v, prefix + "  "))
            else:
                lines.append(f"{prefix}{k}: {_round_floats(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.extend(_pretty_lines(v, prefix + "  "))
                lines.append(prefix + "  -")
            else:
                lines.append(f"{prefix}- {_round_floats(v)}")
    else:
        lines.append(f"{prefix}{_round_floats(obj)}")
    return lines


def _graph_block(g: Graph) -> dict:
    k = is_regular(g)
    params = srg_params(g)
    return {
        "label": g.label,
        "n": g.n,
        "regular": k is not None,
        "valency": k,
        "bipartite": bipartition(g) is not None,
        "srg_params": list(params.as_tuple()) if params else None,
    }


def _obstruction_block(obs) -> list[dict]:
    return [
        {"code": o.code, "detail": o.detail, "case": OBSTRUCTION_CASES[o.code]}
        for o in obs
    ]


def cmd_analyze(args) -> dict:
    g = parse_graph_spec(args.graphspec)
    dec = eigendecompose(g)
    grid = parse_time_grid(args.grid) if args.grid else None
    report = mixing_scan(
        g,
        grid,
        mix_tol=args.mix_tol,
        floor=args.floor,
        max_denominator=args.max_denominator,
    )
    return {
        "command": "analyze",
        "version": __version__,
        "graph": _graph_block(g),
        "char_poly": [int(c) for c in char_poly_exact(g).coeffs],
        "integral_spectrum": integral_spectrum(g),
        "spectrum": [
            {"value": value, "multiplicity": mult} for value, mult in spectrum_pairs(dec)
        ],
        "obstructions": _obstruction_block(report.reasons or rule_out_mixing(g)),
        "verdict": {
            "kind": report.verdict,
            "times": list(report.times),
            "time_exprs": list(report.time_exprs),
            "best_flatness": report.best_flatness,
            "best_time": report.best_time,
            "evaluated": report.evaluated,
            "grid_floor_exceeded": report.grid_floor_exceeded,
        },
    }


def cmd_mix_check(args) -> dict:
    g = parse_graph_spec(args.graphspec)
    t = parse_time(args.time)
    f = flatness(transition(eigendecompose(g), t))
    return {
        "command": "mix-check",
        "version": __version__,
        "graph": _graph_block(g),
        "time": t,
        "time_expr": args.time,
        "tol": args.tol,
        "flatness": f,
        "uniform": bool(f <= args.tol),
    }


def cmd_srg_classify(args) -> dict:
    params = SrgParams(args.n, args.k, args.lam, args.mu)
    if not params.feasible():
        raise InvalidArgumentError(f"infeasible parameter tuple {params.as_tuple()}")
    k, theta, tau = srg_eigenvalues(params)
    verdict = srg_mixing_verdict(params)
    return {
        "command": "srg-classify",
        "version": __version__,
        "params": {"n": params.n, "k": params.k, "lambda": params.lam, "mu": params.mu},
        "eigenvalues": {"k": k, "theta": theta, "tau": tau},
        "family": verdict.family,
        "theta": verdict.theta,
        "on_complement": verdict.on_complement,
        "verdict": verdict.kind,
        "times": list(verdict.times(3)),
        "case": verdict.case,
        "note": verdict.note,
    }


def cmd_rule_out(args) -> dict:
    g = parse_graph_spec(args.graphspec)
    return {
        "command": "rule-out",
        "version": __version__,
        "graph": _graph_block(g),
        "obstructions": _obstruction_block(rule_out_mixing(g)),
    }


def cmd_eps_search(args) -> dict:
    result = eps_search(args.p, args.alpha_max)
    return {
        "command": "eps-search",
        "version": __version__,
        "p": result.p,
        "alpha_max": result.alpha_max,
        "best_alpha": result.best_alpha,
        "best_target_distance": result.best_target_distance,
        "best_flatness": result.best_flatness,
        "trace": [
            {
                "bound": e.bound,
                "best_alpha": e.best_alpha,
                "best_distance": e.best_distance,
                "best_flatness": e.best_flatness,
            }
            for e in result.trace
        ],
        "kernel_backend": BACKEND,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwmix",
        description=(
            "Decide, verify and search for (eps-)uniform mixing of "
            "continuous-time quantum walks on small graphs. Graph specs: "
            "cycle:<n>, complete:<n>, hamming:<d>,<q>, paley:<q>, "
            "product:<spec>|<spec>, complement:<spec>, file:<path>. Times: "
            "'<a>*pi/<b>', 'pi/<b>' or a decimal; grids 'start:stop:step'. "
            "QWMIX_SIZE_CAP overrides the 256-vertex cap."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="structure, exact spectrum, obstructions, scan")
    p_an.add_argument("graphspec")
    p_an.add_argument("--grid", default=None, help="time grid start:stop:step (default 0:2*pi*n:0.001)")
    p_an.add_argument("--mix-tol", type=float, default=MIX_TOL)
    p_an.add_argument("--floor", type=float, default=GRID_FLOOR)
    p_an.add_argument("--max-denominator", type=int, default=72)
    p_an.add_argument("--pretty", action="store_true")
    p_an.set_defaults(func=cmd_analyze)

    p_mc = sub.add_parser("mix-check", help="flatness of U(t) at one time")
    p_mc.add_argument("graphspec")
    p_mc.add_argument("time")
    p_mc.add_argument("--tol", type=float, default=MIX_TOL)
    p_mc.add_argument("--pretty", action="store_true")
    p_mc.set_defaults(func=cmd_mix_check)

    p_sc = sub.add_parser("srg-classify", help="family and mixing verdict for SRG parameters")
    p_sc.add_argument("n", type=int)
    p_sc.add_argument("k", type=int)
    p_sc.add_argument("lam", type=int, metavar="lambda")
    p_sc.add_argument("mu", type=int)
    p_sc.add_argument("--pretty", action="store_true")
    p_sc.set_defaults(func=cmd_srg_classify)

    p_ro = sub.add_parser("rule-out", help="applicable non-mixing obstructions")
    p_ro.add_argument("graphspec")
    p_ro.add_argument("--pretty", action="store_true")
    p_ro.set_defaults(func=cmd_rule_out)

    p_es = sub.add_parser("eps-search", help="exhaustive alpha search on a prime cycle")
    p_es.add_argument("p", type=int)
    p_es.add_argument("--alpha-max", type=int, required=True)
    p_es.add_argument("--json", action="store_true", help="JSON output (the default)")
    p_es.add_argument("--pretty", action="store_true")
    p_es.set_defaults(func=cmd_eps_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericFailureError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    _emit(report, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
