"""Complexified composition algebras R_C, C_C, H_C, O_C.

Elements are coefficient vectors on the basis f_0 = 1, f_1, ..., f_7 with
f_i^2 = -1, f_i f_j = -f_j f_i (i != j > 0), f_3 = f_1 f_2, f_5 = f_1 f_4,
f_6 = f_2 f_4, f_7 = f_3 f_4.  The smaller algebras are the upper-left
restrictions of the octonion table, so R < C < H < O is zero padding.
Coefficients are any exact scalar (Gaussian rationals, duals, ints).
"""

from __future__ import annotations

import enum
from typing import Sequence

from .exact import gauss_from_json, gauss_to_json


class CompAlgebra(enum.Enum):
    R = 1
    C = 2
    H = 4
    O = 8

    @property
    def dim(self) -> int:
        return self.value

    @property
    def tag(self) -> str:
        return self.name

    @classmethod
    def parse(cls, s) -> "CompAlgebra":
        if isinstance(s, CompAlgebra):
            return s
        s = str(s).strip().upper()
        aliases = {"V0": "R", "V1": "C", "V2": "H", "V3": "O"}
        return cls[aliases.get(s, s)]

    @property
    def jordan_name(self) -> str:
        return {1: "V0", 2: "V1", 4: "V2", 8: "V3"}[self.value]

    def __lt__(self, other):
        return self.value < other.value

    def __le__(self, other):
        return self.value <= other.value


ALGEBRAS = (CompAlgebra.R, CompAlgebra.C, CompAlgebra.H, CompAlgebra.O)

# MUL_TABLE[i][j] = (sign, k) meaning f_i f_j = sign * f_k.
# Generated by Cayley-Dickson doubling (a, b)(c, d) = (ac - d'b, da + bc'),
# see tests/test_comp.py for the regeneration check.
MUL_TABLE: tuple[tuple[tuple[int, int], ...], ...] = (
    ((1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)),
    ((1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)),
    ((1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)),
    ((1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)),
)


class CompElem:
    """Element of F_C as an immutable coefficient tuple."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs: Sequence = None):
        algebra = CompAlgebra.parse(algebra)
        if coeffs is None:
            coeffs = (0,) * algebra.dim
        coeffs = tuple(coeffs)
        if len(coeffs) > algebra.dim:
            raise ValueError(f"{len(coeffs)} coefficients for {algebra.tag}")
        if len(coeffs) < algebra.dim:
            coeffs = coeffs + (0,) * (algebra.dim - len(coeffs))
        self.algebra = algebra
        self.coeffs = coeffs

    @classmethod
    def basis(cls, algebra, i: int) -> "CompElem":
        algebra = CompAlgebra.parse(algebra)
        c = [0] * algebra.dim
        c[i] = 1
        return cls(algebra, c)

    @classmethod
    def scalar(cls, algebra, s) -> "CompElem":
        return cls(algebra, (s,))

    def embed(self, algebra) -> "CompElem":
        algebra = CompAlgebra.parse(algebra)
        if algebra.dim < self.algebra.dim:
            if any(self.coeffs[algebra.dim:]):
                raise ValueError(f"element does not lie in {algebra.tag}")
            return CompElem(algebra, self.coeffs[: algebra.dim])
        return CompElem(algebra, self.coeffs)

    def _promote(self, other: "CompElem"):
        if self.algebra is other.algebra:
            return self, other
        alg = max(self.algebra, other.algebra, key=lambda a: a.dim)
        return self.embed(alg), other.embed(alg)

    def __add__(self, other):
        if not isinstance(other, CompElem):
            return NotImplemented
        a, b = self._promote(other)
        return CompElem(a.algebra, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, CompElem):
            return NotImplemented
        a, b = self._promote(other)
        return CompElem(a.algebra, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __neg__(self):
        return CompElem(self.algebra, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CompElem):
            return cmul(self, other)
        return CompElem(self.algebra, [x * other for x in self.coeffs])

    def __rmul__(self, other):
        return CompElem(self.algebra, [other * x for x in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, CompElem):
            return NotImplemented
        a, b = self._promote(other)
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    __hash__ = None

    def __bool__(self):
        return any(self.coeffs)

    def conj(self) -> "CompElem":
        return conj(self)

    def __repr__(self):
        terms = [f"{c}*f{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CompElem({self.algebra.tag}: {' + '.join(terms) or '0'})"

    def to_json(self) -> list:
        return [gauss_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, algebra, obj) -> "CompElem":
        algebra = CompAlgebra.parse(algebra)
        if not isinstance(obj, list) or len(obj) != algebra.dim:
            raise ValueError(f"expected a list of {algebra.dim} scalars for {algebra.tag}")
        return cls(algebra, [gauss_from_json(c) for c in obj])


def cmul(u: CompElem, v: CompElem) -> CompElem:
    """Bilinear product from the multiplication table."""
    u, v = u._promote(v)
    d = u.algebra.dim
    out = [0] * d
    vc = v.coeffs
    for i, a in enumerate(u.coeffs):
        if not a:
            continue
        row = MUL_TABLE[i]
        for j in range(d):
            b = vc[j]
            if not b:
                continue
            s, k = row[j]
            if s > 0:
                out[k] = out[k] + a * b
            else:
                out[k] = out[k] - a * b
    return CompElem(u.algebra, out)


def conj(u: CompElem) -> CompElem:
    c = u.coeffs
    return CompElem(u.algebra, (c[0],) + tuple(-x for x in c[1:]))


def re(u: CompElem):
    """Scalar part (coefficient of f_0)."""
    return u.coeffs[0]


def im(u: CompElem) -> CompElem:
    return CompElem(u.algebra, (0,) + u.coeffs[1:])


def cnorm(u: CompElem):
    """u * conj(u), which is the scalar sum of squared coefficients."""
    acc = 0
    for c in u.coeffs:
        if c:
            acc = acc + c * c
    return acc


def ctrace_form(u: CompElem, v: CompElem):
    """Polarised norm: re(u conj(v)) = sum u_i v_i."""
    u, v = u._promote(v)
    acc = 0
    for a, b in zip(u.coeffs, v.coeffs):
        if a and b:
            acc = acc + a * b
    return acc
