"""Graph families and structural predicates.

Graphs are labeled simple graphs stored as dense symmetric 0/1 adjacency
matrices.  Everything here is exact integer arithmetic; constructors
validate their output and reject graphs beyond the configured size cap
(``QWMIX_SIZE_CAP`` environment variable, default 256 vertices).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._util import is_prime
from .errors import InvalidArgumentError, SizeLimitError

DEFAULT_SIZE_CAP = 256


def size_cap() -> int:
    """Current vertex cap for constructors."""
    raw = os.environ.get("QWMIX_SIZE_CAP")
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InvalidArgumentError(f"QWMIX_SIZE_CAP is not an integer: {raw!r}") from exc
    if cap < 1:
        raise InvalidArgumentError(f"QWMIX_SIZE_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True, eq=False)
class Graph:
    """Labeled simple graph with a dense symmetric 0/1 adjacency matrix."""

    n: int
    adj: np.ndarray
    label: str

    def __post_init__(self) -> None:
        validate_graph(self)
        self.adj.setflags(write=False)

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)


def validate_graph(g: Graph) -> None:
    """Check the Graph invariants; raise InvalidArgumentError on violation."""
    a = g.adj
    if g.n < 1:
        raise InvalidArgumentError(f"graph needs at least one vertex, got n={g.n}")
    if g.n > size_cap():
        raise SizeLimitError(f"{g.n} vertices exceeds the size cap {size_cap()}")
    if a.shape != (g.n, g.n):
        raise InvalidArgumentError(f"adjacency shape {a.shape} does not match n={g.n}")
    if a.dtype.kind not in "iu":
        raise InvalidArgumentError(f"adjacency must be an integer array, got dtype {a.dtype}")
    if not np.array_equal(a, a.T):
        raise InvalidArgumentError("adjacency matrix is not symmetric")
    if np.any(np.diag(a) != 0):
        raise InvalidArgumentError("adjacency diagonal must be zero (no loops)")
    if not np.all((a == 0) | (a == 1)):
        raise InvalidArgumentError("adjacency entries must be 0 or 1")


def _make(adj: np.ndarray, label: str) -> Graph:
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    return Graph(n=adj.shape[0], adj=adj, label=label)


def from_adjacency(adj, label: str = "custom") -> Graph:
    """Wrap an explicit adjacency matrix (validated) in a Graph."""
    return _make(np.asarray(adj), label)


def cycle(n: int) -> Graph:
    """Cycle C_n: j ~ k iff j - k = +-1 (mod n).  Requires n >= 3."""
    if n < 3:
        raise InvalidArgumentError(f"cycle needs n >= 3, got {n}")
    a = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n)
    a[idx, (idx + 1) % n] = 1
    a[(idx + 1) % n, idx] = 1
    return _make(a, f"cycle:{n}")


def complete(n: int) -> Graph:
    """Complete graph K_n (adjacency J - I).  Requires n >= 1."""
    if n < 1:
        raise InvalidArgumentError(f"complete graph needs n >= 1, got {n}")
    a = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
    return _make(a, f"complete:{n}")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: adjacency A_g (x) I + I (x) A_h, g-index major."""
    a = np.kron(g.adj, np.eye(h.n, dtype=np.int64)) + np.kron(
        np.eye(g.n, dtype=np.int64), h.adj
    )
    return _make(a, f"product:{g.label}|{h.label}")


def hamming(d: int, q: int) -> Graph:
    """Hamming graph H(d, q): the d-fold Cartesian power of K_q."""
    if d < 1:
        raise InvalidArgumentError(f"hamming needs d >= 1, got {d}")
    if q < 2:
        raise InvalidArgumentError(f"hamming needs q >= 2, got {q}")
    if q**d > size_cap():
        raise SizeLimitError(f"hamming({d},{q}) has {q ** d} vertices, cap is {size_cap()}")
    g = complete(q)
    for _ in range(d - 1):
        g = cartesian_product(g, complete(q))
    return _make(g.adj, f"hamming:{d},{q}")


def paley(q: int) -> Graph:
    """Paley graph: vertices Z_q, j ~ k iff j - k is a nonzero quadratic residue.

    Supported orders are primes q = 1 (mod 4) plus q = 9, which is realized
    as K_3 x K_3 (isomorphic to the Paley graph over GF(9)).
    """
    if q == 9:
        g = cartesian_product(complete(3), complete(3))
        return _make(g.adj, "paley:9")
    if not (is_prime(q) and q % 4 == 1):
        raise InvalidArgumentError(
            f"paley order must be a prime = 1 (mod 4) or 9, got {q}"
        )
    if q > size_cap():
        raise SizeLimitError(f"paley({q}) exceeds the size cap {size_cap()}")
    residues = {(x * x) % q for x in range(1, q)}
    a = np.zeros((q, q), dtype=np.int64)
    for j in range(q):
        for k in range(q):
            if j != k and (j - k) % q in residues:
                a[j, k] = 1
    return _make(a, f"paley:{q}")


def complement(g: Graph) -> Graph:
    """Complement graph: adjacency J - I - A."""
    a = np.ones((g.n, g.n), dtype=np.int64) - np.eye(g.n, dtype=np.int64) - g.adj
    return _make(a, f"complement:{g.label}")


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-color the graph if bipartite; return the color classes, else None.

    Each connected component is 2-colored by BFS; isolated vertices join the
    first class.
    """
    color = np.full(g.n, -1, dtype=np.int64)
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in np.nonzero(g.adj[v])[0]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(int(w))
                elif color[w] == color[v]:
                    return None
    part0 = frozenset(int(v) for v in np.nonzero(color == 0)[0])
    part1 = frozenset(int(v) for v in np.nonzero(color == 1)[0])
    return part0, part1


def is_regular(g: Graph) -> Optional[int]:
    """Common valency k if every vertex has degree k, else None."""
    deg = g.degrees()
    k = int(deg[0])
    return k if np.all(deg == k) else None


def is_connected(g: Graph) -> bool:
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    queue = [0]
    while queue:
        v = queue.pop()
        for w in np.nonzero(g.adj[v])[0]:
            if not seen[w]:
                seen[w] = True
                queue.append(int(w))
    return bool(seen.all())


@dataclass(frozen=True)
class SrgParams:
    """Strongly-regular parameter tuple (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        """Counting identity k(k - lam - 1) = (n - k - 1) mu."""
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu

    def primitive(self) -> bool:
        return 0 < self.mu < self.k

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


def srg_params(g: Graph) -> Optional[SrgParams]:
    """Exact strongly-regular parameters, or None.

    Returns (n, k, lam, mu) iff g is regular, connected, non-complete and
    A^2 = kI + lam*A + mu*(J - I - A) holds exactly over the integers.
    """
    k = is_regular(g)
    if k is None or k == g.n - 1 or not is_connected(g):
        return None
    a = g.adj
    a2 = a @ a
    off = ~np.eye(g.n, dtype=bool)
    edges = (a == 1) & off
    nonedges = (a == 0) & off
    if not nonedges.any():
        return None
    lam = int(a2[edges][0]) if edges.any() else 0
    mu = int(a2[nonedges][0])
    expected = (
        k * np.eye(g.n, dtype=np.int64)
        + lam * a
        + mu * (np.ones((g.n, g.n), dtype=np.int64) - np.eye(g.n, dtype=np.int64) - a)
    )
    if not np.array_equal(a2, expected):
        return None
    return SrgParams(g.n, k, lam, mu)


def parse_graph_spec(spec: str) -> Graph:
    """Parse a CLI graph spec string.

    Grammar: ``cycle:<n>``, ``complete:<n>``, ``hamming:<d>,<q>``,
    ``paley:<q>``, ``product:<spec>|<spec>``, ``complement:<spec>``,
    ``file:<path>`` (ASCII adjacency rows of 0/1).
    """
    spec = spec.strip()
    head, sep, rest = spec.partition(":")
    if not sep:
        raise InvalidArgumentError(f"malformed graph spec {spec!r} (missing ':')")
    if head == "cycle":
        return cycle(_parse_int(rest, spec))
    if head == "complete":
        return complete(_parse_int(rest, spec))
    if head == "hamming":
        parts = rest.split(",")
        if len(parts) != 2:
            raise InvalidArgumentError(f"hamming spec needs '<d>,<q>', got {spec!r}")
        return hamming(_parse_int(parts[0], spec), _parse_int(parts[1], spec))
    if head == "paley":
        return paley(_parse_int(rest, spec))
    if head == "complement":
        return complement(parse_graph_spec(rest))
    if head == "product":
        return _parse_product(rest, spec)
    if head == "file":
        return _read_adjacency_file(rest)
    raise InvalidArgumentError(f"unknown graph spec {spec!r}")


def _parse_int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise InvalidArgumentError(f"bad integer {text!r} in graph spec {spec!r}") from exc


def _parse_product(rest: str, spec: str) -> Graph:
    # '|' may also appear inside the factors; try each split point until
    # both sides parse.
    positions = [i for i, ch in enumerate(rest) if ch == "|"]
    if not positions:
        raise InvalidArgumentError(f"product spec needs '<spec>|<spec>', got {spec!r}")
    last_error: Exception | None = None
    for pos in positions:
        left, right = rest[:pos], rest[pos + 1 :]
        try:
            return cartesian_product(parse_graph_spec(left), parse_graph_spec(right))
        except InvalidArgumentError as exc:
            last_error = exc
    raise InvalidArgumentError(f"could not split product spec {spec!r}: {last_error}")


def _read_adjacency_file(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read graph file {path!r}: {exc}") from exc
    rows = []
    for ln in lines:
        tokens = ln.split() if " " in ln or "\t" in ln else list(ln)
        try:
            rows.append([int(tok) for tok in tokens])
        except ValueError as exc:
            raise InvalidArgumentError(f"non-integer entry in graph file {path!r}") from exc
    if not rows or any(len(r) != len(rows) for r in rows):
        raise InvalidArgumentError(f"graph file {path!r} is not a square 0/1 matrix")
    return _make(np.array(rows, dtype=np.int64), f"file:{path}")
