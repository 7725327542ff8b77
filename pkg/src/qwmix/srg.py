"""Strongly-regular parameter classification and mixing verdicts.

A primitive strongly regular graph admits uniform mixing only if its
parameters (or the complement's) land in one of five one-parameter
families; families I and II then mix exactly when theta is even, at times
t = pi(m + 1/2)/theta, and (9,4,1,2) mixes at 2*pi/9 and 4*pi/9.

Note on parity: solving the three characterizing equations exactly shows
that family II needs theta EVEN, same as family I (the family-II tuple
(16,10,6,6) is flat at t = pi/4: its graphs and the Clebsch graph complement
each other and both mix).  Statements that give family II odd parity trace
to a sign slip in the k-equation, which this module does not reproduce.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional

import numpy as np

from .errors import InfeasibleParamsError, InvalidArgumentError, NoMixingError
from .graphs import Graph, SrgParams

FAMILIES = ("I", "II", "III", "IV", "V")


def family_params(family: str, theta: int) -> SrgParams:
    """The (n, k, lam, mu) tuple of a family at integer theta >= 1."""
    t = theta
    if family == "I":
        return SrgParams(4 * t * t, 2 * t * t - t, t * t - t, t * t - t)
    if family == "II":
        return SrgParams(4 * t * t, 2 * t * t + t, t * t + t, t * t + t)
    if family == "III":
        return SrgParams(4 * t * t - 1, 2 * t * t, t * t, t * t)
    if family == "IV":
        return SrgParams(4 * t * t + 4 * t + 1, 2 * t * t + 2 * t, t * t + t - 1, t * t + t)
    if family == "V":
        return SrgParams(4 * t * t + 4 * t + 2, 2 * t * t + t, t * t - 1, t * t)
    raise InvalidArgumentError(f"unknown family {family!r}")


@dataclass(frozen=True)
class ParameterFamily:
    """A family match: which family, its theta, and whether it matched the
    complement parameters rather than the tuple itself."""

    family: str  # "I".."V"
    theta: int
    on_complement: bool


@dataclass(frozen=True)
class HadamardCoefficients:
    """Unit-modulus coefficients (x, y, c) and a time t for the flat form
    c*sqrt(n)*U(t) = I + x*A + y*(J - I - A)."""

    x: complex
    y: complex
    c: complex
    t: float


def complement_params(p: SrgParams) -> SrgParams:
    return SrgParams(p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lam)


def srg_eigenvalues(p: SrgParams) -> tuple[float, float, float]:
    """(k, theta, tau) with theta >= tau from the parameter quadratic."""
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    if disc < 0:
        raise InfeasibleParamsError(f"negative discriminant for {p.as_tuple()}")
    root = np.sqrt(float(disc))
    theta = ((p.lam - p.mu) + root) / 2.0
    tau = ((p.lam - p.mu) - root) / 2.0
    return float(p.k), float(theta), float(tau)


def classify_family(p: SrgParams) -> Optional[ParameterFamily]:
    """Match p, or its complement parameters, against the five families.

    theta is searched over 1 <= theta <= ceil(sqrt(n)) (n >= 4 theta^2 - 1
    in every family).  Direct matches win over complement matches, and
    families are tried in order I..V.
    """
    bound = isqrt(p.n) + 1
    for on_complement, candidate in ((False, p), (True, complement_params(p))):
        for family in FAMILIES:
            for theta in range(1, bound + 1):
                if family_params(family, theta) == candidate:
                    return ParameterFamily(family, theta, on_complement)
    return None


def characterizing_residual(p: SrgParams, co: HadamardCoefficients) -> float:
    """Max modulus of the three flatness equations' residuals at (x, y, c, t)."""
    k, theta, tau = srg_eigenvalues(p)
    rn = np.sqrt(float(p.n))
    x, y, c, t = co.x, co.y, co.c, co.t
    res_k = c * np.exp(1j * k * t) * rn - (1 + x * k + y * (p.n - k - 1))
    res_theta = c * np.exp(1j * theta * t) * rn - (1 + x * theta + y * (-theta - 1))
    res_tau = c * np.exp(1j * tau * t) * rn - (1 + x * tau + y * (-tau - 1))
    return float(max(abs(res_k), abs(res_theta), abs(res_tau)))


def family_i_ii_times(fam: ParameterFamily) -> Iterator[float]:
    """Generator of mixing times pi(m + 1/2)/theta for families I and II.

    Exists only for even theta (see the module docstring); odd theta raises
    NoMixingError because the k-equation then has the wrong sign.
    """
    if fam.family not in ("I", "II"):
        raise InvalidArgumentError(f"family {fam.family} has no closed-form times")
    if fam.theta % 2 != 0:
        raise NoMixingError(
            f"family {fam.family} with odd theta={fam.theta} has no flat times"
        )
    return (np.pi * (m + 0.5) / fam.theta for m in itertools.count())


def rshcd_check(g: Graph) -> Optional[tuple[str, int]]:
    """Regular symmetric Hadamard with constant diagonal, as J-2A or J-2A-2I.

    Exact integer verification: entries +-1, symmetric, constant diagonal,
    H H^T = nI, constant row sum.  Returns (kind, row_sum) for the first
    form that passes, else None.
    """
    n = g.n
    j = np.ones((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for kind, h in (("J-2A", j - 2 * g.adj), ("J-2A-2I", j - 2 * g.adj - 2 * eye)):
        if not np.all((h == 1) | (h == -1)):
            continue
        if not np.array_equal(h, h.T):
            continue
        diag = np.diag(h)
        if not np.all(diag == diag[0]):
            continue
        if not np.array_equal(h @ h.T, n * eye):
            continue
        row_sums = h.sum(axis=1)
        if not np.all(row_sums == row_sums[0]):
            continue
        return kind, int(row_sums[0])
    return None


PALEY9 = SrgParams(9, 4, 1, 2)
PALEY9_BASE_TIMES = (2.0 * np.pi / 9.0, 4.0 * np.pi / 9.0)


@dataclass(frozen=True)
class SrgVerdict:
    """Parameter-level uniform-mixing verdict."""

    kind: str  # MIXES | NO_MIXING | NOT_COVERED
    params: SrgParams
    family: Optional[str] = None
    theta: Optional[int] = None
    on_complement: bool = False
    case: str = ""
    note: str = ""

    def times(self, count: int = 3) -> tuple[float, ...]:
        """First mixing times for a MIXES verdict (empty otherwise)."""
        if self.kind != "MIXES":
            return ()
        if self.params == PALEY9:
            out = sorted(
                base + 2.0 * np.pi * r
                for base in PALEY9_BASE_TIMES
                for r in range((count + 1) // 2 + 1)
            )
            return tuple(out[:count])
        gen = family_i_ii_times(ParameterFamily(self.family, self.theta, self.on_complement))
        return tuple(itertools.islice(gen, count))


def _is_conference_like(p: SrgParams) -> bool:
    return (
        2 * p.k == p.n - 1 and 4 * p.lam == p.n - 5 and 4 * p.mu == p.n - 1
    )


def srg_mixing_verdict(p: SrgParams) -> SrgVerdict:
    """Decide uniform mixing from the parameter tuple alone.

    MIXES: families I/II with even theta (times pi(m+1/2)/theta) and
    (9,4,1,2) (times 2*pi/9, 4*pi/9 mod 2*pi).  NO_MIXING: families I/II
    with odd theta, III, IV with theta >= 2, V.  NOT_COVERED: no family
    matches, so the flat form I + xA + yA-bar is never a complex Hadamard;
    conference-like tuples on non-square n are flagged in the note.
    """
    if not p.feasible():
        raise InvalidArgumentError(f"infeasible parameter tuple {p.as_tuple()}")
    if not p.primitive():
        raise InvalidArgumentError(f"imprimitive parameter tuple {p.as_tuple()}")
    fam = classify_family(p)
    if fam is None:
        note = ""
        if _is_conference_like(p):
            note = (
                "conference-like parameters with non-integer theta: no flat time "
                "exists (eigenvalue phases would be transcendental), but that is "
                "not decided by this finite check"
            )
        return SrgVerdict(kind="NOT_COVERED", params=p, case="no family match", note=note)
    common = dict(
        params=p, family=fam.family, theta=fam.theta, on_complement=fam.on_complement
    )
    if fam.family in ("I", "II"):
        label = "J-2A Hadamard type" if fam.family == "I" else "J-2A-2I Hadamard type"
        if fam.theta % 2 == 0:
            return SrgVerdict(kind="MIXES", case=f"family {fam.family} ({label}), theta even", **common)
        return SrgVerdict(
            kind="NO_MIXING", case=f"family {fam.family} ({label}), theta odd", **common
        )
    if fam.family == "III":
        return SrgVerdict(kind="NO_MIXING", case="family III (symplectic type)", **common)
    if fam.family == "IV":
        if fam.theta == 1 and not fam.on_complement:
            return SrgVerdict(kind="MIXES", case="conference graph, theta = 1", **common)
        return SrgVerdict(kind="NO_MIXING", case="conference graph, theta >= 2", **common)
    return SrgVerdict(kind="NO_MIXING", case="family V (conference matrix type)", **common)
