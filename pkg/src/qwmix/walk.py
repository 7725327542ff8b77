"""Transition matrices U(t) = e^(itA), flatness, uniform-mixing decisions,
complex Hadamard / root-of-unity structure checks, and time-grid scans.

Flatness is the entrywise max of | |U_jk|^2 - 1/n |; a graph mixes
uniformly at t exactly when it vanishes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .errors import InvalidArgumentError
from .graphs import Graph, complement, is_regular
from .spectral import SpectralDecomposition, eigendecompose

MIX_TOL = 1e-9
GRID_FLOOR = 1e-2
DEFAULT_GRID_STEP = 1e-3
MAX_DENOMINATOR = 72


@dataclass(frozen=True)
class TransitionMatrix:
    """U(t) for one time t; unitary, symmetric, conj(U(t)) = U(-t)."""

    t: float
    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def transition(dec: SpectralDecomposition, t: float) -> TransitionMatrix:
    """U(t) = sum_k e^(i theta_k t) E_k."""
    phases = np.exp(1j * dec.thetas * float(t))
    u = np.einsum("k,kij->ij", phases, dec.idempotents)
    return TransitionMatrix(t=float(t), matrix=u)


def _as_matrix(u) -> np.ndarray:
    return u.matrix if isinstance(u, TransitionMatrix) else np.asarray(u)


def flatness(u) -> float:
    """max over entries of | |U_jk|^2 - 1/n |; zero iff flat."""
    m = _as_matrix(u)
    n = m.shape[0]
    return float(np.max(np.abs(m.real**2 + m.imag**2 - 1.0 / n)))


def is_uniform_mixing_at(g: Graph, t: float, tol: float = MIX_TOL) -> bool:
    """True iff flatness of U(t) is at most tol."""
    if tol <= 0:
        raise InvalidArgumentError(f"tol must be positive, got {tol}")
    return flatness(transition(eigendecompose(g), t)) <= tol


def is_complex_hadamard(m, tol: float = 1e-9) -> bool:
    """True iff M M* = nI within tol*n and every |M_jk| is within tol of 1."""
    m = _as_matrix(m).astype(np.complex128)
    n = m.shape[0]
    gram_dev = np.max(np.abs(m @ m.conj().T - n * np.eye(n)))
    moduli = np.abs(m)
    return bool(gram_dev <= tol * n and np.all(np.abs(moduli - 1.0) <= tol))


def butson_order(m, tol: float = 1e-9, max_order: int = MAX_DENOMINATOR) -> Optional[int]:
    """Smallest order q <= max_order with all entries q-th roots of unity.

    Entries are normalized to unit modulus first, so tiny modulus noise does
    not disturb the phase test.  None if no order works.
    """
    if max_order < 1:
        raise InvalidArgumentError(f"max_order must be >= 1, got {max_order}")
    m = _as_matrix(m).astype(np.complex128)
    mod = np.abs(m)
    if np.any(mod == 0):
        return None
    phases = np.angle(m / mod)
    for q in range(1, max_order + 1):
        scaled = phases * q / (2.0 * np.pi)
        angular = (2.0 * np.pi / q) * np.abs(scaled - np.round(scaled))
        chord = 2.0 * np.sin(angular / 2.0)
        if np.max(chord) <= tol:
            return q
    return None


def complement_time_check(g: Graph, j: int) -> float:
    """Residual of U_complement(t) = e^(-it) U(t) at t = j * 2*pi/n.

    The identity holds for every regular graph at integer multiples of
    2*pi/n; callers treat <= 1e-8 as a pass.
    """
    if is_regular(g) is None:
        raise InvalidArgumentError("complement_time_check needs a regular graph")
    t = 2.0 * np.pi * j / g.n
    u = transition(eigendecompose(g), t).matrix
    u_comp = transition(eigendecompose(complement(g)), t).matrix
    return float(np.max(np.abs(u_comp - np.exp(-1j * t) * u)))


# -- time expressions ---------------------------------------------------------

_PI_RE = re.compile(r"^\s*(?:(?P<a>-?\d+)\s*\*\s*)?pi(?:\s*/\s*(?P<b>\d+))?\s*$")


def parse_time(expr: str) -> float:
    """Parse '<a>*pi/<b>', 'pi/<b>', 'pi', '<a>*pi' or a decimal literal."""
    m = _PI_RE.match(expr)
    if m:
        a = int(m.group("a")) if m.group("a") else 1
        b = int(m.group("b")) if m.group("b") else 1
        if b == 0:
            raise InvalidArgumentError(f"zero denominator in time expression {expr!r}")
        return a * np.pi / b
    try:
        return float(expr)
    except ValueError as exc:
        raise InvalidArgumentError(f"bad time expression {expr!r}") from exc


def parse_time_grid(expr: str) -> np.ndarray:
    """Parse 'start:stop:step' where each bound uses the parse_time syntax."""
    parts = expr.split(":")
    if len(parts) != 3:
        raise InvalidArgumentError(f"grid must be 'start:stop:step', got {expr!r}")
    start, stop, step = (parse_time(p) for p in parts)
    if step <= 0 or stop <= start:
        raise InvalidArgumentError(f"empty or backwards grid {expr!r}")
    return np.arange(start, stop, step)


def candidate_times(n: int, max_denominator: int = MAX_DENOMINATOR) -> list[tuple[Fraction, str]]:
    """Closed-form candidate times a*pi/b, 1 <= b <= max_denominator, 0 <= a < 2bn.

    Returned deduplicated and ascending as (a/b fraction, 'a*pi/b') pairs;
    the corresponding times are fraction * pi.
    """
    seen: set[Fraction] = set()
    for b in range(1, max_denominator + 1):
        for a in range(0, 2 * b * n):
            seen.add(Fraction(a, b))
    ordered = sorted(seen)
    return [(fr, f"{fr.numerator}*pi/{fr.denominator}") for fr in ordered]


# -- scans --------------------------------------------------------------------


@dataclass(frozen=True)
class MixingReport:
    """Outcome of a flatness scan over candidate and grid times."""

    label: str
    verdict: str  # MIXES_AT | RULED_OUT | UNKNOWN
    times: tuple[float, ...] = ()
    time_exprs: tuple[str, ...] = ()
    reasons: tuple = ()
    best_flatness: float = float("inf")
    best_time: float = float("nan")
    samples: tuple[tuple[float, float], ...] = ()
    evaluated: int = 0
    grid_floor_exceeded: bool = False


def flatness_on_times(dec: SpectralDecomposition, times: np.ndarray) -> np.ndarray:
    """Vectorized flatness profile over a time array (kernel-backed)."""
    n = dec.n
    idem_rows = np.ascontiguousarray(dec.idempotents.reshape(dec.thetas.shape[0], n * n))
    return kernels.flatness_profile(
        np.ascontiguousarray(dec.thetas),
        idem_rows,
        np.ascontiguousarray(times, dtype=np.float64),
        n,
    )


def default_grid(n: int, step: float = DEFAULT_GRID_STEP) -> np.ndarray:
    return np.arange(0.0, 2.0 * np.pi * n, step)


def mixing_scan(
    g: Graph,
    grid: Optional[np.ndarray] = None,
    *,
    mix_tol: float = MIX_TOL,
    floor: float = GRID_FLOOR,
    max_denominator: int = MAX_DENOMINATOR,
    max_reported_times: int = 8,
) -> MixingReport:
    """Scan flatness over a time grid plus the closed-form candidate times.

    Verdicts: MIXES_AT if any time is flat within mix_tol; otherwise
    RULED_OUT when a structural obstruction applies; otherwise UNKNOWN with
    the best time found.  Ties in the minimum go to the smaller time.
    """
    if grid is None:
        grid = default_grid(g.n)
    grid = np.asarray(grid, dtype=np.float64)
    if grid.size == 0:
        raise InvalidArgumentError("time grid is empty")
    candidates = candidate_times(g.n, max_denominator)
    cand_times = np.array([float(fr) * np.pi for fr, _ in candidates])
    dec = eigendecompose(g)

    all_times = np.concatenate([cand_times, grid])
    order = np.argsort(all_times, kind="stable")
    all_times = all_times[order]
    profile = flatness_on_times(dec, all_times)

    best_idx = int(np.argmin(profile))
    best_flatness = float(profile[best_idx])
    best_time = float(all_times[best_idx])

    # report hits through the candidate list so they keep exact expressions
    cand_profile = profile[np.argsort(order, kind="stable")][: cand_times.shape[0]]
    hits = [
        (float(fr) * np.pi, expr)
        for (fr, expr), f in zip(candidates, cand_profile)
        if f <= mix_tol
    ]
    grid_hit_count = int(np.count_nonzero(profile <= mix_tol))

    sample_idx = np.argsort(profile, kind="stable")[:5]
    samples = tuple(
        (float(all_times[i]), float(profile[i])) for i in sorted(sample_idx.tolist())
    )

    if hits or grid_hit_count:
        times = tuple(t for t, _ in hits[:max_reported_times])
        exprs = tuple(e for _, e in hits[:max_reported_times])
        if not hits:  # flat only on the raw grid; report the best grid time
            times, exprs = (best_time,), (repr(best_time),)
        return MixingReport(
            label=g.label,
            verdict="MIXES_AT",
            times=times,
            time_exprs=exprs,
            best_flatness=best_flatness,
            best_time=best_time,
            samples=samples,
            evaluated=int(all_times.shape[0]),
            grid_floor_exceeded=False,
        )

    from .bipartite import rule_out_mixing  # deferred: bipartite imports walk

    reasons = tuple(rule_out_mixing(g))
    verdict = "RULED_OUT" if reasons else "UNKNOWN"
    return MixingReport(
        label=g.label,
        verdict=verdict,
        reasons=reasons,
        best_flatness=best_flatness,
        best_time=best_time,
        samples=samples,
        evaluated=int(all_times.shape[0]),
        grid_floor_exceeded=bool(best_flatness > floor),
    )
