"""Approximate uniform mixing on prime cycles.

The scaled walk e^(-2it) sqrt(p) U(t) on C_p approaches the dual
Fourier-type matrix F-hat_p = sqrt(p) sum_r w^(r^2) E_r along times
t = 2*pi*alpha/p; the search over integer alpha is exhaustive, with a
convergence trace sampled at powers of ten.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from ._util import is_prime
from .errors import InvalidArgumentError

_SEARCH_CHUNK = 1 << 17


def _require_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")


def cycle_eigenvalues(p: int) -> np.ndarray:
    """Nontrivial eigenvalues 2cos(2*pi*r/p), r = 1..(p-1)/2."""
    _require_odd_prime(p)
    d = (p - 1) // 2
    return 2.0 * np.cos(2.0 * np.pi * np.arange(1, d + 1) / p)


def cycle_idempotents(p: int) -> np.ndarray:
    """Projector stack (d+1, p, p) for C_p built from circulant frequencies.

    E_0 = J/p (trace 1); E_r[j,k] = (2/p) cos(2*pi*r*(j-k)/p) merges the
    +-r frequency pair into one real projector of trace 2.
    """
    _require_odd_prime(p)
    d = (p - 1) // 2
    diffs = np.subtract.outer(np.arange(p), np.arange(p))
    stack = np.empty((d + 1, p, p), dtype=np.float64)
    stack[0] = 1.0 / p
    for r in range(1, d + 1):
        stack[r] = (2.0 / p) * np.cos(2.0 * np.pi * r * diffs / p)
    return stack


def fourier_type(p: int) -> np.ndarray:
    """Matrix with entries w^((j-k)^2), w = e^(2*pi*i/p)."""
    _require_odd_prime(p)
    diffs = np.subtract.outer(np.arange(p), np.arange(p))
    return np.exp(2j * np.pi * ((diffs * diffs) % p) / p)


@dataclass(frozen=True)
class DualFourier:
    """The dual target F-hat_p = sqrt(p) sum_r w^(r^2) E_r (complex Hadamard)."""

    p: int
    matrix: np.ndarray


def dual_fourier(p: int) -> DualFourier:
    _require_odd_prime(p)
    d = (p - 1) // 2
    stack = cycle_idempotents(p)
    weights = np.exp(2j * np.pi * (np.arange(d + 1) ** 2 % p) / p)
    matrix = np.sqrt(p) * np.einsum("r,rjk->jk", weights, stack)
    return DualFourier(p=p, matrix=matrix)


def circle_distance(a: float, b: float) -> float:
    """Distance between a and b as points of R/Z."""
    frac = (a - b) % 1.0
    return min(frac, 1.0 - frac)


def exponent_targets(p: int, alpha: int) -> list[tuple[float, float]]:
    """(achieved, target) exponent pairs in R/Z at t = 2*pi*alpha/p.

    achieved_r = alpha (theta_r - 2)/p mod 1 and target_r = r^2/p mod 1;
    matching all of them makes the scaled walk meet the dual target.
    """
    thetas = cycle_eigenvalues(p)
    d = (p - 1) // 2
    out = []
    for r in range(1, d + 1):
        achieved = (alpha * (thetas[r - 1] - 2.0) / p) % 1.0
        target = (r * r / p) % 1.0
        out.append((float(achieved), float(target)))
    return out


def last_coordinate_identity(p: int) -> bool:
    """Exact check that matching the first d-1 exponents pins the last one.

    Requires 24 | p^2 - 1 and, in R/Z, -(1/p) sum_{r<d} r^2 = d^2/p; both
    are verified with exact integer arithmetic.
    """
    _require_odd_prime(p)
    if p <= 3:
        raise InvalidArgumentError(f"identity applies for primes > 3, got {p}")
    if (p * p - 1) % 24 != 0:
        return False
    d = (p - 1) // 2
    partial = sum(r * r for r in range(1, d))
    return (-Fraction(partial, p)) % 1 == Fraction(d * d, p) % 1


@dataclass(frozen=True)
class TraceEntry:
    bound: int
    best_alpha: int
    best_distance: float
    best_flatness: float


@dataclass(frozen=True)
class EpsSearchResult:
    """Outcome of the exhaustive alpha search on C_p."""

    p: int
    alpha_max: int
    best_alpha: int
    best_target_distance: float
    best_flatness: float
    trace: tuple[TraceEntry, ...]


def eps_search(p: int, alpha_max: int) -> EpsSearchResult:
    """Minimize the max-norm distance of e^(-2it) sqrt(p) U(t) to the dual
    target over t = 2*pi*alpha/p, alpha = 1..alpha_max.

    Ties go to the smaller alpha.  The trace records the best-so-far at
    bounds 10, 100, 1000, ... and at alpha_max itself.
    """
    _require_odd_prime(p)
    if p < 5:
        raise InvalidArgumentError(f"the restricted-time search targets p >= 5, got {p}")
    if alpha_max < 1:
        raise InvalidArgumentError(f"alpha_max must be >= 1, got {alpha_max}")
    d = (p - 1) // 2
    thetas = np.ascontiguousarray(cycle_eigenvalues(p))
    targets = np.ascontiguousarray(
        np.exp(2j * np.pi * (np.arange(1, d + 1) ** 2 % p) / p), dtype=np.complex128
    )
    erow = np.ascontiguousarray(cycle_idempotents(p)[1:, 0, :])

    checkpoints = []
    bound = 10
    while bound < alpha_max:
        checkpoints.append(bound)
        bound *= 10
    checkpoints.append(alpha_max)

    best_alpha = -1
    best_distance = np.inf
    best_flatness = np.inf
    trace: list[TraceEntry] = []
    prev_end = 0
    for cp in checkpoints:
        lo = prev_end + 1
        while lo <= cp:
            hi = min(lo + _SEARCH_CHUNK - 1, cp)
            alphas = np.arange(lo, hi + 1, dtype=np.int64)
            dist, flat = kernels.cycle_eps_profile(thetas, targets, erow, alphas, p)
            idx = int(np.argmin(dist))
            if dist[idx] < best_distance:
                best_distance = float(dist[idx])
                best_alpha = int(alphas[idx])
                best_flatness = float(flat[idx])
            lo = hi + 1
        trace.append(TraceEntry(cp, best_alpha, best_distance, best_flatness))
        prev_end = cp
    return EpsSearchResult(
        p=p,
        alpha_max=alpha_max,
        best_alpha=best_alpha,
        best_target_distance=best_distance,
        best_flatness=best_flatness,
        trace=tuple(trace),
    )
