"""Spectral machinery: exact characteristic polynomials, integral-spectrum
decision, float eigendecomposition with merged eigenspaces, and the
rationality facts for cycle eigenvalues 2cos(2*pi/n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._util import is_prime
from .errors import InvalidArgumentError, NumericFailureError
from .graphs import Graph, is_regular

# 2cos(2*pi/n) is rational exactly for these n (Niven's theorem applied to
# cos; n = 2 gives -2 and is included even though some statements omit it).
RATIONAL_COSINE_ORDERS = frozenset({1, 2, 3, 4, 6})


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidArgumentError("polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "x" if mag == 1 else f"{mag}x"
            else:
                body = f"x^{power}" if mag == 1 else f"{mag}x^{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues with multiplicities and projector idempotents.

    thetas is strictly decreasing; idempotents[k] projects onto the
    eigenspace of thetas[k]; sum(mults) == n.
    """

    thetas: np.ndarray
    mults: np.ndarray
    idempotents: np.ndarray

    @property
    def n(self) -> int:
        return int(self.mults.sum())


def char_poly_exact(g: Graph) -> IntPolynomial:
    """Exact det(xI - A) over arbitrary-precision integers.

    Uses the trace recursion M_1 = I, M_{k+1} = A M_k + c_k I with
    c_k = -tr(A M_k)/k; every division is exact.  O(n^4) big-int work,
    fine at desk scale.
    """
    n = g.n
    a = g.adj.astype(object)
    eye = np.eye(n, dtype=object)
    m = eye.copy()
    coeffs_desc = [1]
    for k in range(1, n + 1):
        am = a @ m
        trace = int(np.trace(am))
        ck, rem = divmod(-trace, k)
        if rem:
            raise NumericFailureError("trace recursion produced a non-integer coefficient")
        coeffs_desc.append(ck)
        m = am + ck * eye
    if np.any(m != 0):
        # m is now A M_n + c_n I, which the Cayley-Hamilton identity forces to 0.
        raise NumericFailureError("characteristic polynomial recursion failed to terminate")
    return IntPolynomial(tuple(int(c) for c in reversed(coeffs_desc)))


def _synthetic_division(coeffs: list[int], root: int) -> Optional[list[int]]:
    """Divide by (x - root); quotient coefficients if the remainder is 0."""
    quotient = [0] * (len(coeffs) - 1)
    carry = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        quotient[i] = carry
        carry = coeffs[i] + root * carry
    return quotient if carry == 0 else None


def integral_spectrum(g: Graph) -> bool:
    """True iff det(xI - A) splits into integer linear factors.

    Zero roots are stripped first; the remaining integer roots are found by
    exact synthetic division among divisors of the constant term bounded by
    the maximum degree (which bounds the spectral radius).
    """
    coeffs = list(char_poly_exact(g).coeffs)
    while coeffs[0] == 0:
        coeffs.pop(0)
    bound = int(g.degrees().max())
    for root in range(-bound, bound + 1):
        if root == 0:
            continue
        while len(coeffs) > 1 and coeffs[0] % root == 0:
            quotient = _synthetic_division(coeffs, root)
            if quotient is None:
                break
            coeffs = quotient
    return len(coeffs) == 1


def default_group_tol(g: Graph) -> float:
    amax = int(g.adj.max())
    return 1e-9 * max(1.0, float(amax * g.n))


def eigendecompose(g: Graph, group_tol: Optional[float] = None) -> SpectralDecomposition:
    """Symmetric eigendecomposition with nearby eigenvalues merged.

    Eigenvalues within group_tol of their neighbor collapse into one theta;
    the idempotent is the orthogonal projector onto the merged eigenspace.
    Returned thetas are strictly decreasing.
    """
    if group_tol is None:
        group_tol = default_group_tol(g)
    if group_tol <= 0:
        raise InvalidArgumentError(f"group_tol must be positive, got {group_tol}")
    try:
        w, v = np.linalg.eigh(g.adj.astype(np.float64))
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(f"eigensolver failed: {exc}") from exc
    # ascending from eigh; split where the gap exceeds the tolerance
    breaks = np.nonzero(np.diff(w) > group_tol)[0] + 1
    blocks = np.split(np.arange(g.n), breaks)
    thetas, mults, idems = [], [], []
    for block in blocks:
        vb = v[:, block]
        e = vb @ vb.T
        thetas.append(float(w[block].mean()))
        mults.append(len(block))
        idems.append((e + e.T) / 2.0)
    order = slice(None, None, -1)  # descending
    return SpectralDecomposition(
        thetas=np.array(thetas[order], dtype=np.float64),
        mults=np.array(mults[order], dtype=np.int64),
        idempotents=np.ascontiguousarray(np.array(idems)[order]),
    )


def spectrum_pairs(dec: SpectralDecomposition) -> list[tuple[float, int]]:
    """(eigenvalue, multiplicity) pairs, eigenvalues decreasing."""
    return [(float(t), int(m)) for t, m in zip(dec.thetas, dec.mults)]


def largest_eigenvalue_is_valency(g: Graph, dec: SpectralDecomposition, tol: float = 1e-9) -> bool:
    k = is_regular(g)
    return k is not None and abs(dec.thetas[0] - k) <= tol


def rational_cosine(n: int) -> bool:
    """True iff 2cos(2*pi/n) is rational."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return n in RATIONAL_COSINE_ORDERS


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_shift_x(p: list[int]) -> list[int]:
    return [0] + p


def cosine_minimal_poly(p: int) -> IntPolynomial:
    """Minimal polynomial of 2cos(2*pi/p) over Q for an odd prime p.

    Derived exactly from z^p = 1 under x = z + 1/z: with V_0 = 2, V_1 = x,
    V_{k+1} = x V_k - V_{k-1} (so V_k(2cos a) = 2cos(ka)), the minimal
    polynomial is 1 + V_1 + ... + V_d with d = (p-1)/2.  Monic, degree d.
    """
    if not is_prime(p) or p == 2:
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")
    d = (p - 1) // 2
    v_prev, v_cur = [2], [0, 1]
    acc = _poly_add([1], v_cur)
    for _ in range(2, d + 1):
        v_next = _poly_add(_poly_shift_x(v_cur), [-c for c in v_prev])
        acc = _poly_add(acc, v_next)
        v_prev, v_cur = v_cur, v_next
    return IntPolynomial(tuple(acc))
