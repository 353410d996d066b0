"""Circulant matrices stored by their generator (first row).

Row ``i`` of ``circ(c_0, ..., c_{k-1})`` is the generator shifted ``i``
places to the right, so entry ``(i, j)`` is ``c[(j - i) % k]``.  Generators
may hold Fractions or :class:`~wheelpinv.exact_field.QuadExt` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from wheelpinv.dense import DenseMatrix
from wheelpinv.exact_field import QuadExt, extract_rational, squarefree_decompose


class SearleHypothesisError(ValueError):
    """A hypothesis of the closed-form tridiagonal-circulant inverse is violated."""

    def __init__(self, hypothesis: str, message: str):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {message}")


class SingularMatrixError(ZeroDivisionError):
    pass


class NotCirculantError(AssertionError):
    pass


@dataclass(frozen=True)
class Circulant:
    order: int
    generator: tuple

    def __post_init__(self):
        gen = tuple(self.generator)
        object.__setattr__(self, "generator", gen)
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if len(gen) != self.order:
            raise ValueError(f"generator length {len(gen)} does not match order {self.order}")

    @classmethod
    def of(cls, *generator) -> "Circulant":
        """``Circulant.of(3, 1, 0, 1)`` with entries promoted to Fractions."""
        gen = tuple(g if isinstance(g, QuadExt) else Fraction(g) for g in generator)
        return cls(len(gen), gen)

    @classmethod
    def identity(cls, k: int) -> "Circulant":
        return cls(k, (Fraction(1),) + (Fraction(0),) * (k - 1))

    @classmethod
    def ones(cls, k: int) -> "Circulant":
        return cls(k, (Fraction(1),) * k)

    @classmethod
    def zeros(cls, k: int) -> "Circulant":
        return cls(k, (Fraction(0),) * k)

    @classmethod
    def tridiagonal(cls, a, b, c, k: int) -> "Circulant":
        """``circ(a, b, 0, ..., 0, c)``; for k < 3 the wrapped entries merge."""
        gen = [Fraction(0)] * k
        gen[0] += a
        gen[1 % k] += b
        gen[(k - 1) % k] += c
        return cls(k, tuple(gen))

    def __getitem__(self, j: int):
        return self.generator[j % self.order]

    def __add__(self, other: "Circulant") -> "Circulant":
        _check_order(self, other)
        return Circulant(self.order, tuple(a + b for a, b in zip(self.generator, other.generator)))

    def __sub__(self, other: "Circulant") -> "Circulant":
        _check_order(self, other)
        return Circulant(self.order, tuple(a - b for a, b in zip(self.generator, other.generator)))

    def __neg__(self) -> "Circulant":
        return Circulant(self.order, tuple(-a for a in self.generator))

    def __mul__(self, c) -> "Circulant":
        if isinstance(c, Circulant):
            return NotImplemented
        return Circulant(self.order, tuple(a * c for a in self.generator))

    __rmul__ = __mul__

    def __matmul__(self, other: "Circulant") -> "Circulant":
        return circ_mul(self, other)

    @property
    def T(self) -> "Circulant":
        return circ_transpose(self)

    def is_symmetric(self) -> bool:
        g, k = self.generator, self.order
        return all(g[j] == g[(k - j) % k] for j in range(k))

    def row_sum(self):
        return circ_row_sum(self)

    def realize(self) -> DenseMatrix:
        return circ_realize(self)

    def rationalize(self) -> "Circulant":
        """Replace QuadExt entries by their rational values (raises on any surd)."""
        return Circulant(self.order, tuple(extract_rational(g) for g in self.generator))


def _check_order(x: Circulant, y: Circulant):
    if x.order != y.order:
        raise ValueError(f"order mismatch: {x.order} vs {y.order}")


def circ_realize(c: Circulant) -> DenseMatrix:
    g, k = c.generator, c.order
    return DenseMatrix._wrap(
        tuple(tuple(Fraction(g[(j - i) % k]) for j in range(k)) for i in range(k)), k, k)


def circ_mul(x: Circulant, y: Circulant) -> Circulant:
    """Product of two circulants by cyclic convolution of the generators."""
    _check_order(x, y)
    k = x.order
    out = [0] * k
    for i, a in enumerate(x.generator):
        if not a:
            continue
        for j, b in enumerate(y.generator):
            if b:
                out[(i + j) % k] += a * b
    return Circulant(k, tuple(v if isinstance(v, QuadExt) else Fraction(v) for v in out))


def circ_transpose(x: Circulant) -> Circulant:
    g = x.generator
    return Circulant(x.order, (g[0],) + tuple(reversed(g[1:])))


def circ_row_sum(x: Circulant):
    total = Fraction(0)
    for g in x.generator:
        total = g + total
    return total


@dataclass(frozen=True)
class TridiagCircSpec:
    """``circ(a, b, 0, ..., 0, c)`` of order ``order``."""

    a: Fraction
    b: Fraction
    c: Fraction
    order: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_circulant(cls, x: Circulant) -> "TridiagCircSpec | None":
        """Recognise ``x`` as tridiagonal-circulant (order > 3), else None."""
        k = x.order
        if k <= 3:
            return None
        g = x.generator
        if any(isinstance(v, QuadExt) for v in g):
            return None
        if any(g[j] for j in range(2, k - 1)):
            return None
        return cls(g[0], g[1], g[k - 1], k)

    @property
    def discriminant(self) -> Fraction:
        return self.a * self.a - 4 * self.b * self.c

    def realize(self) -> Circulant:
        return Circulant.tridiagonal(self.a, self.b, self.c, self.order)

    def hypotheses(self) -> dict[str, bool]:
        a, b, c, k = self.a, self.b, self.c, self.order
        return {
            "order > 3": k > 3,
            "b != 0": b != 0,
            "c != 0": c != 0,
            "a^2 > 4bc": a * a > 4 * b * c,
            "a+b+c != 0": a + b + c != 0,
            "not (order even and a = b+c)": not (k % 2 == 0 and a == b + c),
            "a^2-4bc not a perfect square": self.surd() is not None,
        }

    def surd(self) -> tuple[Fraction, int] | None:
        """Write sqrt(a^2-4bc) as ``coef * sqrt(s)`` with s square-free.

        Returns None when the discriminant is not positive or is the square
        of a rational.
        """
        disc = self.discriminant
        if disc <= 0:
            return None
        p, q = disc.numerator, disc.denominator
        s, t = squarefree_decompose(p * q)
        if s == 1:
            return None
        return Fraction(t, q), s


def circ_inverse_searle(spec: TridiagCircSpec) -> Circulant:
    """Closed-form inverse of ``circ(a, b, 0, ..., 0, c)``.

    With ``z1, z2 = (-a +- sqrt(a^2 - 4bc)) / (2c)`` the inverse generator is

        a_j = z1*z2 / (b*(z1 - z2)) * (z1**j / (1 - z1**k) - z2**j / (1 - z2**k))

    evaluated exactly in Q(sqrt(s)).  Every entry must come out rational.
    """
    for name, ok in spec.hypotheses().items():
        if not ok:
            raise SearleHypothesisError(name, f"not satisfied by {spec}")
    coef, s = spec.surd()
    a, b, c, k = spec.a, spec.b, spec.c, spec.order
    root = QuadExt(0, coef, s)
    z1 = (root - a) / (2 * c)
    z2 = (-root - a) / (2 * c)
    pref = z1 * z2 / ((z1 - z2) * b)
    w1 = pref / (1 - z1 ** k)
    w2 = pref / (1 - z2 ** k)
    gen = []
    p1 = QuadExt(1, 0, s)
    p2 = QuadExt(1, 0, s)
    for _ in range(k):
        gen.append(extract_rational(p1 * w1 - p2 * w2))
        p1 = p1 * z1
        p2 = p2 * z2
    return Circulant(k, tuple(gen))


def _gauss_jordan_inverse(m: DenseMatrix) -> DenseMatrix:
    k = m.rows
    if m.cols != k:
        raise ValueError("only square matrices can be inverted")
    aug = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(m)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [v * inv_p for v in aug[col]]
        prow = aug[col]
        for r in range(k):
            f = aug[r][col]
            if r != col and f:
                aug[r] = [v - f * w for v, w in zip(aug[r], prow)]
    return DenseMatrix(row[k:] for row in aug)


def circ_inverse_gauss(x: Circulant) -> Circulant:
    """Inverse by exact Gauss-Jordan elimination on the realised matrix.

    The result is read back from row 0; every other row is checked to be
    the corresponding shift, so a non-circulant inverse cannot slip through.
    """
    inv = _gauss_jordan_inverse(circ_realize(x.rationalize()))
    k = x.order
    gen = inv.row(0)
    for i in range(1, k):
        row = inv.row(i)
        if any(row[j] != gen[(j - i) % k] for j in range(k)):
            raise NotCirculantError(f"row {i} of the inverse is not a shift of row 0")
    return Circulant(k, gen)


def circ_inverse(x: Circulant) -> Circulant:
    return circ_inverse_with_route(x)[0]


def circ_inverse_with_route(x: Circulant) -> tuple[Circulant, str]:
    """Invert ``x``, using the closed form when it applies.

    Returns the inverse and the route taken: ``"searle"`` or ``"gauss"``.
    """
    spec = TridiagCircSpec.from_circulant(x)
    if spec is not None and all(spec.hypotheses().values()):
        return circ_inverse_searle(spec), "searle"
    return circ_inverse_gauss(x), "gauss"
