"""Row-major exact rational matrices and their text serializations."""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

from wheelpinv.exact_field import format_rational, parse_rational


class DenseMatrix:
    """Immutable ``rows x cols`` matrix of Fractions.

    Products are computed on an integer image (entries times the common
    denominator) and skip zero entries, which makes the very sparse wheel
    matrices cheap to multiply.
    """

    __slots__ = ("rows", "cols", "_data", "_int_form")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(Fraction(v) for v in row) for row in data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data
        self._int_form = None

    @classmethod
    def _wrap(cls, data: tuple, rows: int, cols: int) -> "DenseMatrix":
        self = object.__new__(cls)
        self.rows = rows
        self.cols = cols
        self._data = data
        self._int_form = None
        return self

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "DenseMatrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, k: int) -> "DenseMatrix":
        one, z = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else z for j in range(k)) for i in range(k)), k, k)

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> "DenseMatrix":
        cols = rows if cols is None else cols
        one = Fraction(1)
        return cls._wrap(tuple((one,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "DenseMatrix":
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        vals = [Fraction(v) for v in entries]
        return cls._wrap(tuple(tuple(vals[i * cols:(i + 1) * cols]) for i in range(rows)), rows, cols)

    @classmethod
    def block(cls, grid: Sequence[Sequence["DenseMatrix"]]) -> "DenseMatrix":
        """Assemble a block matrix from a grid of conformal blocks."""
        out = []
        for brow in grid:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("blocks in one block-row must share a height")
            for r in range(height):
                out.append(sum((b._data[r] for b in brow), ()))
        width = len(out[0]) if out else 0
        if any(len(r) != width for r in out):
            raise ValueError("block-rows have different widths")
        return cls._wrap(tuple(out), len(out), width)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat entries."""
        return tuple(itertools.chain.from_iterable(self._data))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, slice) or isinstance(j, slice):
            rows = self._data[i] if isinstance(i, slice) else (self._data[i],)
            if isinstance(j, slice):
                rows = tuple(r[j] for r in rows)
            else:
                rows = tuple((r[j],) for r in rows)
            cols = len(rows[0]) if rows else 0
            return DenseMatrix._wrap(rows, len(rows), cols)
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    # algebra

    @property
    def T(self) -> "DenseMatrix":
        data = tuple(zip(*self._data)) if self.rows else ((),) * self.cols
        return DenseMatrix._wrap(data, self.cols, self.rows)

    def transpose(self) -> "DenseMatrix":
        return self.T

    def _check_same_shape(self, other: "DenseMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same_shape(other)
        return DenseMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows, self.cols)

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same_shape(other)
        return DenseMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows, self.cols)

    def __neg__(self) -> "DenseMatrix":
        return DenseMatrix._wrap(tuple(tuple(-a for a in r) for r in self._data), self.rows, self.cols)

    def scale(self, c) -> "DenseMatrix":
        c = Fraction(c)
        return DenseMatrix._wrap(tuple(tuple(c * a for a in r) for r in self._data), self.rows, self.cols)

    def __mul__(self, c):
        if isinstance(c, DenseMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def map(self, fn) -> "DenseMatrix":
        return DenseMatrix(((fn(a) for a in r) for r in self._data), self.cols)

    def _integer_image(self):
        # (common denominator, sparse rows of integer numerators)
        if self._int_form is None:
            den = 1
            for r in self._data:
                for a in r:
                    q = a.denominator
                    if q != 1 and den % q:
                        den = den * q // math.gcd(den, q)
            sparse = tuple(
                tuple((j, a.numerator * (den // a.denominator)) for j, a in enumerate(r) if a)
                for r in self._data)
            self._int_form = (den, sparse)
        return self._int_form

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        da, left = self._integer_image()
        db, right = other._integer_image()
        den = da * db
        p = other.cols
        out = []
        for lrow in left:
            acc = [0] * p
            for k, a in lrow:
                for j, b in right[k]:
                    acc[j] += a * b
            out.append(tuple(Fraction(v, den) for v in acc))
        return DenseMatrix._wrap(tuple(out), self.rows, p)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def is_zero(self) -> bool:
        return not any(a for r in self._data for a in r)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(r, Fraction(0)) for r in self._data)

    def column_sums(self) -> tuple[Fraction, ...]:
        return self.T.row_sums()

    def common_denominator(self) -> int:
        return self._integer_image()[0]

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"

    def __str__(self):
        return to_text(self)


# serialization


def to_csv(m: DenseMatrix, fmt=format_rational) -> str:
    return "".join(",".join(fmt(a) for a in r) + "\n" for r in m)


def from_csv(text: str) -> DenseMatrix:
    rows = [line.split(",") for line in text.splitlines() if line.strip()]
    return DenseMatrix([parse_rational(x) for x in r] for r in rows)


def to_json_obj(m: DenseMatrix, fmt=format_rational) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [[fmt(a) for a in r] for r in m]}


def from_json_obj(obj: dict) -> DenseMatrix:
    m = DenseMatrix(([parse_rational(x) for x in r] for r in obj["entries"]), obj["cols"])
    if m.rows != obj["rows"]:
        raise ValueError(f"row count {m.rows} does not match declared {obj['rows']}")
    return m


def to_json(m: DenseMatrix) -> str:
    return json.dumps(to_json_obj(m))


def from_json(text: str) -> DenseMatrix:
    return from_json_obj(json.loads(text))


def _latex_num(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def to_latex(m: DenseMatrix, row_splits: Sequence[int] = (), col_splits: Sequence[int] = (),
             factor_denominator: bool = True) -> str:
    """LaTeX ``array`` source; the common denominator is pulled out as a prefactor.

    ``row_splits``/``col_splits`` list the indices after which an ``\\hline``
    or a ``|`` is drawn.
    """
    den = m.common_denominator() if factor_denominator else 1
    spec = ""
    for j in range(m.cols):
        spec += "r"
        if j + 1 in col_splits and j + 1 < m.cols:
            spec += "|"
    lines = []
    for i, r in enumerate(m):
        cells = [_latex_num(a * den) for a in r]
        line = " & ".join(cells)
        if i + 1 < m.rows:
            line += " \\\\"
        lines.append(line)
        if i + 1 in row_splits and i + 1 < m.rows:
            lines.append("\\hline")
    prefix = f"\\frac{{1}}{{{den}}}" if den != 1 else ""
    body = "\n".join(lines)
    return f"{prefix}\\left[\\begin{{array}}{{{spec}}}\n{body}\n\\end{{array}}\\right]\n"


def to_text(m: DenseMatrix, fmt=format_rational) -> str:
    cells = [[fmt(a) for a in r] for r in m]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)
