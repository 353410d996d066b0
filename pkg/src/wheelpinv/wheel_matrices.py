"""Incidence, oriented incidence, signless Laplacian and Laplacian of W_n.

Labeling (0-indexed): vertex 0 is the hub, vertices 1..n-1 run around the
rim.  Edges 0..n-2 are the spokes ``hub -> i+1``; edges n-1..2n-3 are the
rim edges ``i+1 -> i+2`` in cyclic order, the last one closing ``n-1 -> 1``.
In the oriented matrix the tail of an edge carries +1 and the head -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from wheelpinv.dense import DenseMatrix


class WheelSizeError(ValueError):
    pass


@dataclass(frozen=True)
class WheelSpec:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise TypeError(f"n must be an int, got {type(self.n).__name__}")
        if self.n < 4:
            raise WheelSizeError(f"wheel graphs need n >= 4 vertices, got n = {self.n}")

    @property
    def rim(self) -> int:
        return self.n - 1

    @property
    def num_edges(self) -> int:
        return 2 * self.n - 2

    def edges(self) -> list[tuple[int, int]]:
        """Directed edges ``(tail, head)`` in label order."""
        r = self.rim
        spokes = [(0, i + 1) for i in range(r)]
        rim = [(i + 1, (i + 1) % r + 1) for i in range(r)]
        return spokes + rim

    def degrees(self) -> list[int]:
        return [self.rim] + [3] * self.rim


def _spec(n_or_spec) -> WheelSpec:
    return n_or_spec if isinstance(n_or_spec, WheelSpec) else WheelSpec(n_or_spec)


def _incidence(spec: WheelSpec, head_sign: int) -> DenseMatrix:
    rows = [[0] * spec.num_edges for _ in range(spec.n)]
    for e, (tail, head) in enumerate(spec.edges()):
        rows[tail][e] = 1
        rows[head][e] = head_sign
    return DenseMatrix(rows)


def build_incidence(spec) -> DenseMatrix:
    """n x (2n-2) 0/1 vertex-edge incidence matrix M."""
    return _incidence(_spec(spec), 1)


def build_oriented_incidence(spec) -> DenseMatrix:
    """n x (2n-2) oriented incidence matrix N (tail +1, head -1)."""
    return _incidence(_spec(spec), -1)


def adjacency(spec) -> DenseMatrix:
    spec = _spec(spec)
    rows = [[0] * spec.n for _ in range(spec.n)]
    for u, v in spec.edges():
        rows[u][v] = rows[v][u] = 1
    return DenseMatrix(rows)


def degree_matrix(spec) -> DenseMatrix:
    spec = _spec(spec)
    deg = spec.degrees()
    return DenseMatrix([[Fraction(deg[i]) if i == j else 0 for j in range(spec.n)] for i in range(spec.n)])


def build_signless_laplacian(spec) -> DenseMatrix:
    """Q = D + A."""
    return degree_matrix(spec) + adjacency(spec)


def build_laplacian(spec) -> DenseMatrix:
    """L = D - A."""
    return degree_matrix(spec) - adjacency(spec)


BUILDERS = {
    "incidence": build_incidence,
    "oriented": build_oriented_incidence,
    "signless_laplacian": build_signless_laplacian,
    "laplacian": build_laplacian,
}


def build(kind: str, n) -> DenseMatrix:
    try:
        return BUILDERS[kind](n)
    except KeyError:
        raise ValueError(f"unknown matrix kind {kind!r}") from None
