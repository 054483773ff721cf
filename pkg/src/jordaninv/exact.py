"""Exact scalars and exact sparse linear algebra.

Scalars are Gaussian rationals a + bi with arbitrary precision rational parts.
``Dual`` adds a nilpotent epsilon on top of any scalar so that polynomial maps
evaluated on lifted arguments return their directional derivative exactly.

Matrices are stored sparsely as ``{row: {col: value}}``.  Rank and kernels are
computed by incremental sparse row echelon reduction; when every entry is
real the reduction runs over plain rationals, which is much faster.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

try:
    from gmpy2 import mpq as Rational

    _RATIONAL_TYPES: tuple[type, ...] = (int, type(Rational(0)), Fraction)
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Rational = Fraction
    _RATIONAL_TYPES = (int, Fraction)

__all__ = [
    "Rational",
    "GaussRational",
    "Dual",
    "ExactMatrix",
    "rank",
    "kernel_dim",
    "kernel_basis",
    "random_scalar",
    "random_rational",
    "rational_to_json",
    "rational_from_json",
    "gauss_to_json",
    "gauss_from_json",
    "as_gauss",
    "lift",
    "scalar_inverse",
]


def _is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES)


class GaussRational:
    """Exact element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Rational(re)
        self.im = Rational(im)

    @classmethod
    def _make(cls, re, im) -> "GaussRational":
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if type(other) is GaussRational:
            return GaussRational._make(self.re + other.re, self.im + other.im)
        if _is_rational(other):
            return GaussRational._make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussRational:
            return GaussRational._make(self.re - other.re, self.im - other.im)
        if _is_rational(other):
            return GaussRational._make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if _is_rational(other):
            return GaussRational._make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is GaussRational:
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussRational._make(a * c - b * d, a * d + b * c)
        if _is_rational(other):
            return GaussRational._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def norm(self):
        """Field norm re^2 + im^2 (a rational)."""
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussRational":
        return GaussRational._make(self.re, -self.im)

    def inverse(self) -> "GaussRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("GaussRational division by zero")
        return GaussRational._make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if type(other) is GaussRational:
            return self * other.inverse()
        if _is_rational(other):
            if not other:
                raise ZeroDivisionError("GaussRational division by zero")
            return GaussRational._make(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_rational(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRational._make(Rational(1), Rational(0))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison -----------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussRational:
            return self.re == other.re and self.im == other.im
        if _is_rational(other):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussRational({self.re})"
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re} + {self.im}*i)"


I = GaussRational(0, 1)


def as_gauss(x) -> GaussRational:
    if type(x) is GaussRational:
        return x
    if _is_rational(x):
        return GaussRational._make(Rational(x), Rational(0))
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


class Dual:
    """First-order dual number value + eps*deriv with eps^2 = 0.

    Components may be any exact scalar (int, Rational, GaussRational).
    """

    __slots__ = ("value", "deriv")

    def __init__(self, value, deriv=0):
        self.value = value
        self.deriv = deriv

    def __add__(self, other):
        if type(other) is Dual:
            return Dual(self.value + other.value, self.deriv + other.deriv)
        if _is_scalar(other):
            return Dual(self.value + other, self.deriv)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is Dual:
            return Dual(self.value - other.value, self.deriv - other.deriv)
        if _is_scalar(other):
            return Dual(self.value - other, self.deriv)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return Dual(other - self.value, -self.deriv)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is Dual:
            return Dual(
                self.value * other.value,
                self.value * other.deriv + self.deriv * other.value,
            )
        if _is_scalar(other):
            return Dual(self.value * other, self.deriv * other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return Dual(other * self.value, other * self.deriv)
        return NotImplemented

    def __neg__(self):
        return Dual(-self.value, -self.deriv)

    def __truediv__(self, other):
        if type(other) is Dual:
            if not other.value:
                raise ZeroDivisionError("dual division by a pure-epsilon number")
            inv = scalar_inverse(other.value)
            return Dual(self.value * inv, (self.deriv * other.value - self.value * other.deriv) * inv * inv)
        return Dual(self.value * scalar_inverse(other), self.deriv * scalar_inverse(other))

    def __pow__(self, k: int):
        out = Dual(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.value) or bool(self.deriv)

    def __eq__(self, other):
        if type(other) is Dual:
            return self.value == other.value and self.deriv == other.deriv
        return not self.deriv and self.value == other

    __hash__ = None

    def conj(self):
        c = lambda v: v.conj() if hasattr(v, "conj") else v
        return Dual(c(self.value), c(self.deriv))

    def __repr__(self):
        return f"Dual({self.value!r}, {self.deriv!r})"


def _is_scalar(x) -> bool:
    return type(x) is GaussRational or _is_rational(x)


def scalar_inverse(x):
    """Exact inverse of a nonzero int, Rational or GaussRational."""
    if type(x) is GaussRational:
        return x.inverse()
    if not x:
        raise ZeroDivisionError("division by zero")
    return Rational(1) / x


def lift(point: Sequence, direction: Sequence) -> list[Dual]:
    """Coordinatewise lift point + eps*direction."""
    return [Dual(p, d) for p, d in zip(point, direction)]


# ---------------------------------------------------------------------------
# random test points


def _rng(seed_state) -> random.Random:
    if isinstance(seed_state, random.Random):
        return seed_state
    return random.Random(seed_state)


def random_rational(seed_state, height: int):
    rng = _rng(seed_state)
    return Rational(rng.randint(-height, height), rng.randint(1, height))


def random_scalar(seed_state, height: int) -> GaussRational:
    """Random Gaussian rational with numerators in [-height, height] and
    denominators in [1, height].

    ``seed_state`` is an int seed or a ``random.Random`` whose state is
    advanced.  By Schwartz-Zippel, a nonzero polynomial of total degree
    <= 12 vanishes at a point whose coordinates are drawn independently
    from a pool of (2*height + 1)**2 values with probability at most
    12 / (2*height + 1)**2.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    rng = _rng(seed_state)
    re = Rational(rng.randint(-height, height), rng.randint(1, height))
    im = Rational(rng.randint(-height, height), rng.randint(1, height))
    return GaussRational._make(re, im)


def random_integer(seed_state, height: int):
    """Uniform integer in [-height, height] as an exact Rational.

    Rank certificates use integer points: the same Schwartz-Zippel bound
    (degree / (2*height + 1)) applies, and elimination stays cheap.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    return Rational(_rng(seed_state).randint(-height, height))


# ---------------------------------------------------------------------------
# JSON


def rational_to_json(q) -> str:
    q = Rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_json(s) -> "Rational":
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, int):
        return Rational(s)
    if not isinstance(s, str):
        raise ValueError(f"rational must be a 'p/q' string, got {s!r}")
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        if int(q) <= 0:
            raise ValueError(f"bad denominator in {s!r}")
        return Rational(int(p), int(q))
    return Rational(int(s))


def gauss_to_json(z) -> dict:
    z = as_gauss(z)
    return {"re": rational_to_json(z.re), "im": rational_to_json(z.im)}


def gauss_from_json(obj) -> GaussRational:
    if isinstance(obj, dict):
        return GaussRational._make(
            rational_from_json(obj.get("re", "0")), rational_from_json(obj.get("im", "0"))
        )
    return GaussRational._make(rational_from_json(obj), Rational(0))


# ---------------------------------------------------------------------------
# sparse matrices


class ExactMatrix:
    """Sparse exact matrix; entries default to zero."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict[int, dict[int, object]] | None = None):
        self.rows = rows
        self.cols = cols
        self.data = {}
        for r, row in (data or {}).items():
            clean = {c: v for c, v in row.items() if v}
            if clean:
                self.data[r] = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError("ragged rows")
            data[i] = {j: v for j, v in enumerate(row) if v}
        return cls(len(rows), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {i: {i: Rational(1)} for i in range(n)})

    def __getitem__(self, rc):
        r, c = rc
        return self.data.get(r, {}).get(c, 0)

    def row(self, r: int) -> dict:
        return self.data.get(r, {})

    def iter_rows(self) -> Iterator[dict]:
        for r in range(self.rows):
            yield self.data.get(r, {})

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    def to_dense(self) -> list[list]:
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        data: dict[int, dict] = {}
        for r, row in self.data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        return ExactMatrix(self.cols, self.rows, data)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        data = {r: dict(row) for r, row in self.data.items()}
        for r, row in other.data.items():
            tgt = data.setdefault(r, {})
            for c, v in row.items():
                tgt[c] = tgt.get(c, 0) + v
        return ExactMatrix(self.rows, self.cols, data)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {r: {c: -v for c, v in row.items()} for r, row in self.data.items()})

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, s) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {r: {c: s * v for c, v in row.items()} for r, row in self.data.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        data: dict[int, dict] = {}
        for r, row in self.data.items():
            acc: dict[int, object] = {}
            for k, a in row.items():
                for c, b in other.data.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a * b
            data[r] = acc
        return ExactMatrix(self.rows, other.cols, data)

    def apply(self, vec: Sequence) -> list:
        out = [0] * self.rows
        for r, row in self.data.items():
            acc = 0
            for c, v in row.items():
                acc = acc + v * vec[c]
            out[r] = acc
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.data

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "ExactMatrix":
        """Matrix with row i moved to row_perm[i] and column j to col_perm[j]."""
        data = {}
        for r, row in self.data.items():
            data[row_perm[r]] = {col_perm[c]: v for c, v in row.items()}
        return ExactMatrix(self.rows, self.cols, data)

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        data = dict(self.data)
        for r, row in other.data.items():
            data[self.rows + r] = row
        return ExactMatrix(self.rows + other.rows, self.cols, data)

    def _check_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


def _all_real(rows: Iterable[dict]) -> bool:
    for row in rows:
        for v in row.values():
            if type(v) is GaussRational and v.im:
                return False
    return True


def _to_field(v, real: bool):
    if real:
        return v.re if type(v) is GaussRational else Rational(v)
    return as_gauss(v)


class Echelon:
    """Incremental sparse row echelon form.

    Rows are dicts col -> value.  Each stored pivot row has a unit entry at
    its pivot column, which is the smallest column it touches.  ``add``
    reduces a row against the stored pivots and keeps it if it is new.
    """

    def __init__(self, real: bool = True):
        self.real = real
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Reduce ``row`` (mutated) until its leading column is not a pivot."""
        pivots = self.pivots
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                return row
            f = row[c]
            for j, v in prow.items():
                w = row.get(j)
                if w is None:
                    row[j] = -(f * v)
                else:
                    w = w - f * v
                    if w:
                        row[j] = w
                    else:
                        del row[j]
        return row

    def add(self, row: dict) -> bool:
        row = {c: _to_field(v, self.real) for c, v in row.items() if v}
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c] if self.real else row[c].inverse()
        self.pivots[c] = {j: v * inv for j, v in row.items()}
        return True

    def contains(self, row: dict) -> bool:
        row = {c: _to_field(v, self.real) for c, v in row.items() if v}
        return not self.reduce(row)

    def rref(self) -> dict[int, dict]:
        """Fully reduced pivot rows (each pivot column cleared elsewhere)."""
        out: dict[int, dict] = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for j in sorted(k for k in row if k != c and k in out):
                f = row.get(j)
                if not f:
                    continue
                for k, v in out[j].items():
                    w = row.get(k, 0) - f * v
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
            out[c] = row
        return out


def _echelon(m: ExactMatrix) -> Echelon:
    ech = Echelon(real=_all_real(m.data.values()))
    for r in range(m.rows):
        row = m.data.get(r)
        if row:
            ech.add(row)
            if ech.rank == m.cols:
                break
    return ech


def rank(m: ExactMatrix) -> int:
    """Exact rank over Q(i)."""
    return _echelon(m).rank


def kernel_dim(m: ExactMatrix) -> int:
    return m.cols - rank(m)


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of {v : m v = 0}; one vector per free column, in column order."""
    ech = _echelon(m)
    rref = ech.rref()
    free = [c for c in range(m.cols) if c not in rref]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = Rational(1)
        for p, row in rref.items():
            a = row.get(f)
            if a:
                v[p] = -a
        basis.append(v)
    return basis
