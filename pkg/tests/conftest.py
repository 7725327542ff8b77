"""Shared test fixtures and independent oracles."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from qwmix import from_adjacency
from qwmix.graphs import Graph, cartesian_product, complement, complete, cycle, hamming, paley


def brute_force_char_poly(adj: np.ndarray) -> tuple[int, ...]:
    """det(xI - A) by Leibniz expansion over all permutations (n <= 8).

    Entries of xI - A are degree <= 1 integer polynomials; returns ascending
    coefficients.  Independent of the production trace-recursion path.
    """
    n = adj.shape[0]

    def poly_mul(p, q):
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return out

    total = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = [1]
        for i in range(n):
            entry = [-int(adj[i, perm[i]])]
            if perm[i] == i:
                entry.append(1)  # x on the diagonal
            term = poly_mul(term, entry)
        for k, c in enumerate(term):
            total[k] += sign * c
    return tuple(total)


def complete_bipartite(m: int, k: int) -> Graph:
    n = m + k
    a = np.zeros((n, n), dtype=np.int64)
    a[:m, m:] = 1
    a[m:, :m] = 1
    return from_adjacency(a, f"K_{m},{k}")


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def path_graph(n: int) -> Graph:
    a = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n - 1)
    a[idx, idx + 1] = 1
    a[idx + 1, idx] = 1
    return from_adjacency(a, f"P_{n}")


def clebsch() -> Graph:
    """The (16,5,0,2) strongly regular graph: Z_2^4 with differences of
    weight 1 or 4."""
    verts = list(itertools.product((0, 1), repeat=4))
    a = np.zeros((16, 16), dtype=np.int64)
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            w = sum(x ^ y for x, y in zip(u, v))
            if w in (1, 4):
                a[i, j] = 1
    return from_adjacency(a, "clebsch")


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    upper = rng.random((n, n)) < p
    a = np.triu(upper, 1).astype(np.int64)
    return from_adjacency(a + a.T, f"random:{n}")


def random_circulant(rng: np.random.Generator, n: int) -> Graph:
    """Random circulant graph: regular by construction."""
    shifts = [s for s in range(1, n // 2 + 1) if rng.random() < 0.5]
    if not shifts:
        shifts = [1]
    a = np.zeros((n, n), dtype=np.int64)
    for s in shifts:
        for j in range(n):
            a[j, (j + s) % n] = 1
            a[(j + s) % n, j] = 1
    return from_adjacency(a, f"circulant:{n}:{shifts}")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def small_corpus() -> list[Graph]:
    """Deterministic constructible graphs with n <= 8."""
    return [
        complete(1),
        complete(2),
        complete(4),
        cycle(3),
        cycle(4),
        cycle(5),
        cycle(6),
        cycle(7),
        cycle(8),
        paley(5),
        hamming(3, 2),
        hamming(1, 5),
        cartesian_product(complete(2), complete(3)),
        complement(cycle(6)),
        star(4),
        path_graph(6),
        complete_bipartite(3, 3),
    ]


def bipartite_corpus() -> list[Graph]:
    return [
        cycle(4),
        cycle(6),
        cycle(8),
        cycle(10),
        hamming(3, 2),
        hamming(4, 2),
        complete_bipartite(3, 3),
        complete_bipartite(2, 5),
        star(5),
        path_graph(7),
    ]
