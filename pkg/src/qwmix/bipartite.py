"""Bipartite structure and the combined non-mixing obstruction engine.

For a bipartite graph, U(t) keeps same-part entries real and cross-part
entries purely imaginary; a flat U(t) forces entries +-1/sqrt(n) or
+-i/sqrt(n), so n must be divisible by four, regular bipartite graphs need
n to be a sum of two squares, and the entries are algebraic, which forces
an integral spectrum on regular graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

import numpy as np

from ._util import is_prime
from .errors import InvalidArgumentError, StructureViolationError
from .graphs import Graph, bipartition, is_connected, is_regular, srg_params
from .spectral import eigendecompose, integral_spectrum
from .srg import srg_mixing_verdict
from .walk import TransitionMatrix, flatness, transition

NOT_DIV_4 = "NOT_DIV_4"
NOT_SUM_TWO_SQUARES = "NOT_SUM_TWO_SQUARES"
NONINTEGRAL_SPECTRUM_BIPARTITE_REGULAR = "NONINTEGRAL_SPECTRUM_BIPARTITE_REGULAR"
PRIME_CYCLE_GE_5 = "PRIME_CYCLE_GE_5"
EVEN_CYCLE_GT_4 = "EVEN_CYCLE_GT_4"
SRG_THEOREM_CASE = "SRG_THEOREM_CASE"

# short case tags for machine reports
OBSTRUCTION_CASES = {
    NOT_DIV_4: "bipartite order must be divisible by four",
    NOT_SUM_TWO_SQUARES: "regular bipartite order must be a sum of two squares",
    NONINTEGRAL_SPECTRUM_BIPARTITE_REGULAR: "regular bipartite flat entries force an integral spectrum",
    PRIME_CYCLE_GE_5: "no prime cycle of length >= 5 mixes",
    EVEN_CYCLE_GT_4: "no even cycle longer than four mixes",
    SRG_THEOREM_CASE: "strongly regular parameter classification",
}


@dataclass(frozen=True)
class Obstruction:
    code: str
    detail: str


def block_structure_residual(g: Graph, t: float) -> float:
    """How far U(t) is from the bipartite block form.

    Max of |Im U_jk| over same-part pairs and |Re U_jk| over cross-part
    pairs; at most ~1e-9 for every bipartite graph.
    """
    parts = bipartition(g)
    if parts is None:
        raise InvalidArgumentError("block_structure_residual needs a bipartite graph")
    u = transition(eigendecompose(g), t).matrix
    mask0 = np.zeros(g.n, dtype=bool)
    mask0[list(parts[0])] = True
    same = np.equal.outer(mask0, mask0)
    return float(max(np.max(np.abs(u.imag[same])), np.max(np.abs(u.real[~same]))))


def divisible_by_four(n: int) -> bool:
    if n <= 2:
        raise InvalidArgumentError(f"divisible_by_four applies for n > 2, got {n}")
    return n % 4 == 0


def sum_of_two_squares(n: int) -> Optional[tuple[int, int]]:
    """Integers a >= b >= 0 with a^2 + b^2 = n, or None."""
    if n < 1:
        return None
    for b in range(isqrt(n // 2) + 1):
        rest = n - b * b
        a = isqrt(rest)
        if a * a == rest:
            return (a, b)
    return None


def dephase_to_real_hadamard(u: TransitionMatrix, parts) -> np.ndarray:
    """Turn a flat bipartite U into a real +-1 Hadamard matrix, exactly.

    With D diagonal (1 on the first part, i on the second),
    H = sqrt(n) * D U D has entries within 1e-6 of +-1; H is rounded and
    verified to satisfy H H^T = nI over the integers.
    """
    if flatness(u) > 1e-9:
        raise StructureViolationError("dephase_to_real_hadamard needs a flat U(t)")
    n = u.n
    d = np.ones(n, dtype=np.complex128)
    d[list(parts[1])] = 1j
    h = np.sqrt(n) * (d[:, None] * u.matrix * d[None, :])
    signs = np.where(h.real >= 0, 1, -1).astype(np.int64)
    if np.max(np.abs(h - signs)) > 1e-6:
        raise StructureViolationError("entries of sqrt(n) D U D are not close to +-1")
    if not np.array_equal(signs @ signs.T, n * np.eye(n, dtype=np.int64)):
        raise StructureViolationError("rounded matrix is not a real Hadamard matrix")
    return signs


def _is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_regular(g) == 2 and is_connected(g)


def rule_out_mixing(g: Graph) -> list[Obstruction]:
    """Every applicable non-mixing obstruction (empty means none known).

    The integral-spectrum obstruction is only sound when flat entries are
    known to be algebraic, which the bipartite block form supplies for
    regular bipartite graphs; it is never applied to general graphs.
    """
    out: list[Obstruction] = []
    parts = bipartition(g)
    k = is_regular(g)
    if parts is not None and g.n > 2:
        if g.n % 4 != 0:
            out.append(Obstruction(NOT_DIV_4, f"n = {g.n} is not divisible by 4"))
        if k is not None:
            if sum_of_two_squares(g.n) is None:
                out.append(
                    Obstruction(NOT_SUM_TWO_SQUARES, f"n = {g.n} is not a sum of two squares")
                )
            if not integral_spectrum(g):
                out.append(
                    Obstruction(
                        NONINTEGRAL_SPECTRUM_BIPARTITE_REGULAR,
                        "regular bipartite with an irrational eigenvalue",
                    )
                )
    if _is_cycle_graph(g):
        if is_prime(g.n) and g.n >= 5:
            out.append(Obstruction(PRIME_CYCLE_GE_5, f"cycle of prime length {g.n} >= 5"))
        if g.n % 2 == 0 and g.n >= 6:
            out.append(Obstruction(EVEN_CYCLE_GT_4, f"even cycle of length {g.n} > 4"))
    params = srg_params(g)
    if params is not None and params.primitive():
        verdict = srg_mixing_verdict(params)
        if verdict.kind == "NO_MIXING":
            out.append(
                Obstruction(
                    SRG_THEOREM_CASE,
                    f"strongly regular {params.as_tuple()}: {verdict.case}",
                )
            )
    return out
