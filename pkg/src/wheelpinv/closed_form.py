"""Closed-form Moore-Penrose inverses of the four wheel-graph matrices.

Two independent routes produce the circulant blocks X and Y:

* ``block``: invert ``C C^T + I`` as a circulant and form X, Y from the
  block identities;
* ``entrywise``: evaluate the generator entries ``b_j`` and ``d_j``
  directly in Q(sqrt(5)) with no inversion at all (needs n >= 5).

The full matrix is assembled from X and Y only when it is first accessed,
so generator-only work stays linear in the number of entries.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from wheelpinv.circulant import Circulant, circ_inverse_with_route, circ_mul
from wheelpinv.dense import DenseMatrix, to_json_obj
from wheelpinv.exact_field import QuadExt, extract_rational
from wheelpinv.wheel_matrices import WheelSizeError, WheelSpec

KINDS = ("incidence", "oriented", "signless_laplacian", "laplacian")
ROUTES = ("block", "entrywise", "auto")


@dataclass(frozen=True)
class PinvBundle:
    kind: str
    n: int
    route: str
    x_gen: Circulant
    y_gen: Optional[Circulant] = None
    # route used for (C C^T + I)^-1 on the block path: "searle" or "gauss"
    circulant_route: Optional[str] = None
    matrix_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def matrix(self) -> DenseMatrix:
        if "m" not in self.matrix_cache:
            self.matrix_cache["m"] = _ASSEMBLERS[self.kind](self.n, self.x_gen, self.y_gen)
        return self.matrix_cache["m"]

    @property
    def shape(self) -> tuple[int, int]:
        if self.kind in ("incidence", "oriented"):
            return 2 * self.n - 2, self.n
        return self.n, self.n

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "route": self.route,
            "matrix": to_json_obj(self.matrix),
            "x_generator": circulant_to_json_obj(self.x_gen),
            "y_generator": None if self.y_gen is None else circulant_to_json_obj(self.y_gen),
        }


def circulant_to_json_obj(c: Circulant) -> dict:
    return {"order": c.order, "generator": [str(Fraction(g)) for g in c.generator]}


def circulant_from_json_obj(obj: dict) -> Circulant:
    gen = tuple(Fraction(g) for g in obj["generator"])
    return Circulant(obj["order"], gen)


def rim_circulant(kind: str, n: int) -> Circulant:
    """The rim-edge block C of M (kinds incidence/signless) or N (oriented/laplacian)."""
    k = n - 1
    if kind in ("incidence", "signless_laplacian"):
        return Circulant.tridiagonal(1, 0, 1, k)
    return Circulant.tridiagonal(1, 0, -1, k)


def _check_n(n: int, minimum: int = 4, hint: str = "") -> WheelSpec:
    spec = WheelSpec(n)
    if n < minimum:
        raise WheelSizeError(f"n = {n} is below {minimum}{hint}")
    return spec


# block route


@functools.lru_cache(maxsize=64)
def incidence_blocks(n: int) -> tuple[Circulant, Circulant, str]:
    """X = 2 (C C^T + I)^-1 [(n-1) I - J] and Y = J + C^T X for M."""
    _check_n(n)
    k = n - 1
    c = rim_circulant("incidence", n)
    gram = circ_mul(c, c.T) + Circulant.identity(k)
    gram_inv, how = circ_inverse_with_route(gram)
    x = circ_mul(gram_inv, Circulant.identity(k) * (n - 1) - Circulant.ones(k)) * 2
    y = Circulant.ones(k) + circ_mul(c.T, x)
    return x, y, how


@functools.lru_cache(maxsize=64)
def oriented_blocks(n: int) -> tuple[Circulant, Circulant, str]:
    """X = (C C^T + I)^-1 (J - n I) and Y = -C^T X for N."""
    _check_n(n)
    k = n - 1
    c = rim_circulant("oriented", n)
    gram = circ_mul(c, c.T) + Circulant.identity(k)
    gram_inv, how = circ_inverse_with_route(gram)
    x = circ_mul(gram_inv, Circulant.ones(k) - Circulant.identity(k) * n)
    y = -circ_mul(c.T, x)
    return x, y, how


# entrywise route

_SQRT5 = QuadExt(0, 1, 5)
_INV_SQRT5 = QuadExt(0, Fraction(1, 5), 5)
_INV_5_PLUS_SQRT5 = (5 + _SQRT5).inverse()


def incidence_generators_entrywise(n: int) -> tuple[Circulant, Circulant]:
    """Generators of X and Y for M evaluated entry by entry.

    ``b_j = -2/5 + 2^(n-j) (n-1)/sqrt5 [u^j/D1 - v^j/D2]`` with
    ``u, v = -3 +- sqrt5`` and ``D1, D2 = 2^(n-1) - u^(n-1), 2^(n-1) - v^(n-1)``;
    ``d_0`` and ``d_j`` (j >= 1) use their own closed forms.
    """
    _check_n(n, 5, "; the entrywise route needs n >= 5, use mp_incidence for n = 4")
    k = n - 1
    u = _SQRT5 - 3
    v = -_SQRT5 - 3
    u_pows = _powers(u, k)
    v_pows = _powers(v, k)
    inv_d1 = (2 ** k - u_pows[k]).inverse()
    inv_d2 = (2 ** k - v_pows[k]).inverse()

    b = []
    for j in range(k):
        val = (u_pows[j] * inv_d1 - v_pows[j] * inv_d2) * _INV_SQRT5 * (2 ** (n - j) * (n - 1))
        b.append(extract_rational(val + Fraction(-2, 5)))

    h = 2 ** (n - 2)
    d = [extract_rational(
        ((u_pows[n - 2] + h) * inv_d1 - (v_pows[n - 2] + h) * inv_d2) * _INV_SQRT5 * (4 * (n - 1))
        + Fraction(1, 5))]
    for j in range(1, k):
        val = (u_pows[j - 1] * 2 * inv_d1 - v_pows[j] * inv_d2) * _INV_5_PLUS_SQRT5 * (2 ** (n + 1 - j) * (n - 1))
        d.append(extract_rational(val + Fraction(1, 5)))
    return Circulant(k, tuple(b)), Circulant(k, tuple(d))


def oriented_generators_entrywise(n: int) -> tuple[Circulant, Circulant]:
    """Generators of X and Y for N evaluated entry by entry.

    ``b_j = 1 + n 2^(n-1-j)/sqrt5 [p^j/E1 - m^j/E2]`` with ``p, m = 3 +- sqrt5``
    and ``E1, E2 = 2^(n-1) - p^(n-1), 2^(n-1) - m^(n-1)``.
    """
    _check_n(n, 5, "; the entrywise route needs n >= 5, use mp_oriented for n = 4")
    k = n - 1
    p = _SQRT5 + 3
    m = 3 - _SQRT5
    p_pows = _powers(p, k)
    m_pows = _powers(m, k)
    inv_e1 = (2 ** k - p_pows[k]).inverse()
    inv_e2 = (2 ** k - m_pows[k]).inverse()

    b = []
    for j in range(k):
        val = (p_pows[j] * inv_e1 - m_pows[j] * inv_e2) * _INV_SQRT5 * (n * 2 ** (n - 1 - j))
        b.append(extract_rational(val + 1))

    h = 2 ** (n - 2)
    d = [extract_rational(
        ((p_pows[n - 2] - h) * inv_e1 - (m_pows[n - 2] - h) * inv_e2) * _INV_SQRT5 * (2 * n))]
    for j in range(1, k):
        val = (p_pows[j] * inv_e1 + m_pows[j - 1] * 2 * inv_e2) * _INV_5_PLUS_SQRT5 * (-n * 2 ** (n - j))
        d.append(extract_rational(val))
    return Circulant(k, tuple(b)), Circulant(k, tuple(d))


def _powers(z: QuadExt, top: int) -> list[QuadExt]:
    out = [QuadExt(1, 0, z.d)]
    for _ in range(top):
        out.append(out[-1] * z)
    return out


# assembly


def _col(k: int, value) -> DenseMatrix:
    return DenseMatrix._wrap(((Fraction(value),),) * k, k, 1)


def _row(k: int, value) -> DenseMatrix:
    return DenseMatrix._wrap(((Fraction(value),) * k,), 1, k)


def _scalar(value) -> DenseMatrix:
    return DenseMatrix._wrap(((Fraction(value),),), 1, 1)


def _assemble_incidence(n, x, y):
    k = n - 1
    h = DenseMatrix.block([[_col(k, 2), x.realize()], [_col(k, -1), y.realize()]])
    return h.scale(Fraction(1, 2 * (n - 1)))


def _assemble_signless(n, x, _y):
    k = n - 1
    inner = (Circulant.ones(k) + x * 2).realize()
    h = DenseMatrix.block([[_scalar(5), _row(k, -1)], [_col(k, -1), inner]])
    return h.scale(Fraction(1, 4 * (n - 1)))


def _assemble_oriented(n, x, y):
    k = n - 1
    h = DenseMatrix.block([[_col(k, 1), x.realize()], [_col(k, 0), y.realize()]])
    return h.scale(Fraction(1, n))


def _assemble_laplacian(n, x, _y):
    k = n - 1
    inner = (-Circulant.ones(k) - x * n).realize()
    h = DenseMatrix.block([[_scalar(n - 1), _row(k, -1)], [_col(k, -1), inner]])
    return h.scale(Fraction(1, n * n))


_ASSEMBLERS = {
    "incidence": _assemble_incidence,
    "signless_laplacian": _assemble_signless,
    "oriented": _assemble_oriented,
    "laplacian": _assemble_laplacian,
}


# public constructors


def mp_incidence(n: int) -> PinvBundle:
    x, y, how = incidence_blocks(n)
    return PinvBundle("incidence", n, "block", x, y, how)


def mp_incidence_entrywise(n: int) -> PinvBundle:
    x, y = incidence_generators_entrywise(n)
    return PinvBundle("incidence", n, "entrywise", x, y)


def mp_signless_laplacian(n: int) -> PinvBundle:
    x, _, how = incidence_blocks(n)
    return PinvBundle("signless_laplacian", n, "block", x, None, how)


def mp_signless_laplacian_entrywise(n: int) -> PinvBundle:
    x, _ = incidence_generators_entrywise(n)
    return PinvBundle("signless_laplacian", n, "entrywise", x, None)


def mp_oriented(n: int) -> PinvBundle:
    x, y, how = oriented_blocks(n)
    return PinvBundle("oriented", n, "block", x, y, how)


def mp_oriented_entrywise(n: int) -> PinvBundle:
    x, y = oriented_generators_entrywise(n)
    return PinvBundle("oriented", n, "entrywise", x, y)


def mp_laplacian(n: int) -> PinvBundle:
    x, _, how = oriented_blocks(n)
    return PinvBundle("laplacian", n, "block", x, None, how)


def mp_laplacian_entrywise(n: int) -> PinvBundle:
    x, _ = oriented_generators_entrywise(n)
    return PinvBundle("laplacian", n, "entrywise", x, None)


_ROUTE_TABLE = {
    ("incidence", "block"): mp_incidence,
    ("incidence", "entrywise"): mp_incidence_entrywise,
    ("signless_laplacian", "block"): mp_signless_laplacian,
    ("signless_laplacian", "entrywise"): mp_signless_laplacian_entrywise,
    ("oriented", "block"): mp_oriented,
    ("oriented", "entrywise"): mp_oriented_entrywise,
    ("laplacian", "block"): mp_laplacian,
    ("laplacian", "entrywise"): mp_laplacian_entrywise,
}


def resolve_route(n: int, route: str = "auto") -> str:
    """``auto`` picks the entrywise route when it exists (n >= 5), else block."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    if route == "auto":
        return "entrywise" if n >= 5 else "block"
    return route


def pseudoinverse(kind: str, n: int, route: str = "auto") -> PinvBundle:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return _ROUTE_TABLE[kind, resolve_route(n, route)](n)
