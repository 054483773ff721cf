"""Jordan algebras V = H_3(F_C) of 3x3 Hermitian matrices.

A point is stored as

        ( a   p*  q* )
    x = ( p   b   r  )
        ( q   r*  c  )

with a, b, c scalars and p, q, r in F_C.  Coordinates are ordered
(a, b, c, p_0..p_{d-1}, q_0.., r_0..), so dim V = 3 + 3d in {6, 9, 15, 27}.

``HermMat`` implements everything from the 3x3 matrix product.
``Structure`` compiles the same operations into structure constants on
coordinates; it is built by evaluating ``HermMat`` on basis vectors and is
what the invariant evaluators and Lie-algebra code use in bulk.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .comp import CompAlgebra, CompElem, cnorm, conj, re
from .exact import Rational, as_gauss, gauss_from_json, gauss_to_json, scalar_inverse

HALF = Rational(1, 2)


class SingularElement(ArithmeticError):
    """Raised when inverting an element with det = 0."""


def _check_scalar_part(u: CompElem, where: str):
    if any(u.coeffs[1:]):
        raise AssertionError(f"non-scalar diagonal entry at {where}: {u!r}")
    return u.coeffs[0]


class HermMat:
    __slots__ = ("algebra", "diag", "p", "q", "r")

    def __init__(self, algebra, diag: Sequence = (0, 0, 0), p=None, q=None, r=None):
        algebra = CompAlgebra.parse(algebra)
        self.algebra = algebra
        self.diag = tuple(diag)
        if len(self.diag) != 3:
            raise ValueError("diag needs three scalars")
        self.p = _elem(algebra, p)
        self.q = _elem(algebra, q)
        self.r = _elem(algebra, r)

    # constructors ---------------------------------------------------------
    @classmethod
    def identity(cls, algebra) -> "HermMat":
        return cls(algebra, (1, 1, 1))

    @classmethod
    def idempotent(cls, algebra, i: int) -> "HermMat":
        """e_i for i in 1, 2, 3."""
        d = [0, 0, 0]
        d[i - 1] = 1
        return cls(algebra, d)

    @classmethod
    def diagonal(cls, algebra, a, b, c) -> "HermMat":
        return cls(algebra, (a, b, c))

    @classmethod
    def zero(cls, algebra) -> "HermMat":
        return cls(algebra)

    @classmethod
    def from_coords(cls, algebra, vec: Sequence) -> "HermMat":
        algebra = CompAlgebra.parse(algebra)
        d = algebra.dim
        if len(vec) != 3 + 3 * d:
            raise ValueError(f"expected {3 + 3 * d} coordinates, got {len(vec)}")
        return cls(
            algebra,
            vec[:3],
            CompElem(algebra, vec[3 : 3 + d]),
            CompElem(algebra, vec[3 + d : 3 + 2 * d]),
            CompElem(algebra, vec[3 + 2 * d :]),
        )

    @classmethod
    def from_matrix(cls, algebra, m, check: bool = True) -> "HermMat":
        """Read a 3x3 array of CompElem; assert it is Hermitian."""
        algebra = CompAlgebra.parse(algebra)
        diag = tuple(_check_scalar_part(m[i][i], f"({i + 1},{i + 1})") for i in range(3))
        p, q, r = m[1][0], m[2][0], m[1][2]
        if check:
            for (i, j), u in (((0, 1), p), ((0, 2), q), ((2, 1), r)):
                if m[i][j] != conj(u):
                    raise AssertionError(f"matrix is not Hermitian at ({i + 1},{j + 1})")
        return cls(algebra, diag, p, q, r)

    # structure ------------------------------------------------------------
    @property
    def n(self) -> int:
        return 3 + 3 * self.algebra.dim

    def coords(self) -> list:
        return list(self.diag) + list(self.p.coeffs) + list(self.q.coeffs) + list(self.r.coeffs)

    def to_matrix(self) -> list[list[CompElem]]:
        alg = self.algebra
        a, b, c = (CompElem.scalar(alg, s) for s in self.diag)
        p, q, r = self.p, self.q, self.r
        return [
            [a, conj(p), conj(q)],
            [p, b, r],
            [q, conj(r), c],
        ]

    def embed(self, algebra) -> "HermMat":
        algebra = CompAlgebra.parse(algebra)
        return HermMat(algebra, self.diag, self.p.embed(algebra), self.q.embed(algebra), self.r.embed(algebra))

    # linear structure -----------------------------------------------------
    def _same(self, other: "HermMat"):
        if self.algebra is other.algebra:
            return self, other
        alg = max(self.algebra, other.algebra, key=lambda a: a.dim)
        return self.embed(alg), other.embed(alg)

    def __add__(self, other):
        if not isinstance(other, HermMat):
            return NotImplemented
        x, y = self._same(other)
        return HermMat(x.algebra, [s + t for s, t in zip(x.diag, y.diag)], x.p + y.p, x.q + y.q, x.r + y.r)

    def __sub__(self, other):
        if not isinstance(other, HermMat):
            return NotImplemented
        x, y = self._same(other)
        return HermMat(x.algebra, [s - t for s, t in zip(x.diag, y.diag)], x.p - y.p, x.q - y.q, x.r - y.r)

    def __neg__(self):
        return HermMat(self.algebra, [-s for s in self.diag], -self.p, -self.q, -self.r)

    def __mul__(self, s):
        if isinstance(s, HermMat):
            return NotImplemented
        return HermMat(self.algebra, [t * s for t in self.diag], self.p * s, self.q * s, self.r * s)

    def __rmul__(self, s):
        return HermMat(self.algebra, [s * t for t in self.diag], s * self.p, s * self.q, s * self.r)

    def __eq__(self, other):
        if not isinstance(other, HermMat):
            return NotImplemented
        x, y = self._same(other)
        return all(s == t for s, t in zip(x.coords(), y.coords()))

    __hash__ = None

    def __bool__(self):
        return any(self.coords())

    def __repr__(self):
        return f"HermMat({self.algebra.jordan_name}, diag={self.diag}, p={self.p}, q={self.q}, r={self.r})"

    # JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.tag,
            "diag": [_scalar_json(s) for s in self.diag],
            "p": self.p.to_json(),
            "q": self.q.to_json(),
            "r": self.r.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "HermMat":
        if not isinstance(obj, dict):
            raise ValueError("HermMat JSON must be an object")
        missing = {"algebra", "diag", "p", "q", "r"} - set(obj)
        if missing:
            raise ValueError(f"HermMat JSON missing keys {sorted(missing)}")
        alg = CompAlgebra.parse(obj["algebra"])
        if not isinstance(obj["diag"], list) or len(obj["diag"]) != 3:
            raise ValueError("diag must be a list of three scalars")
        diag = [gauss_from_json(s) for s in obj["diag"]]
        return cls(alg, diag, *(CompElem.from_json(alg, obj[k]) for k in "pqr"))


def _scalar_json(s):
    g = as_gauss(s)
    if not g.im:
        return gauss_to_json(g)["re"]
    return gauss_to_json(g)


def _elem(algebra, u) -> CompElem:
    if u is None:
        return CompElem(algebra)
    if isinstance(u, CompElem):
        if u.algebra.dim > algebra.dim:
            return u.embed(algebra)
        return u.embed(algebra) if u.algebra is not algebra else u
    return CompElem(algebra, u)


def _matmul(x, y):
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = x[i][0] * y[0][j]
            acc = acc + x[i][1] * y[1][j]
            acc = acc + x[i][2] * y[2][j]
            row.append(acc)
        out.append(row)
    return out


def e(algebra) -> HermMat:
    return HermMat.identity(algebra)


def jmul(x: HermMat, y: HermMat) -> HermMat:
    """Jordan product (xy + yx)/2 from the matrix product over F_C."""
    x, y = x._same(y)
    mx, my = x.to_matrix(), y.to_matrix()
    xy, yx = _matmul(mx, my), _matmul(my, mx)
    s = [[(xy[i][j] + yx[i][j]) * HALF for j in range(3)] for i in range(3)]
    return HermMat.from_matrix(x.algebra, s)


def trace(x: HermMat):
    a, b, c = x.diag
    return a + b + c


def inner(x: HermMat, y: HermMat):
    """Trace form <x, y> = tr(x . y); <x, x> is what is written ||x||."""
    return trace(jmul(x, y))


def det(x: HermMat):
    a, b, c = x.diag
    p, q, r = x.p, x.q, x.r
    cubic = a * b * c - (a * cnorm(r) + b * cnorm(q) + c * cnorm(p))
    return cubic + 2 * re((p * conj(q)) * conj(r))


def sharp(x: HermMat) -> HermMat:
    """Adjoint n(x) with x . n(x) = det(x) e (Cayley-Hamilton form)."""
    xx = jmul(x, x)
    t = trace(x)
    sigma = (t * t - trace(xx)) * HALF
    return xx - x * t + e(x.algebra) * sigma


def cross(x: HermMat, y: HermMat) -> HermMat:
    return sharp(x + y) - sharp(x) - sharp(y)


def trilinear_f(x: HermMat, y: HermMat, z: HermMat):
    return inner(cross(x, y), z)


def inverse(x: HermMat) -> HermMat:
    d = det(x)
    if not d:
        raise SingularElement("det(x) = 0")
    return sharp(x) * scalar_inverse(d)


# ---------------------------------------------------------------------------
# Peirce decomposition relative to e1, e2, e3


@dataclass(frozen=True)
class PeirceParts:
    algebra: CompAlgebra
    diag: tuple
    v12: CompElem
    v13: CompElem
    v23: CompElem

    def element(self, which: str) -> HermMat:
        """The Peirce component (u)_ij as an element of V."""
        alg = self.algebra
        if which == "12":
            return HermMat(alg, (0, 0, 0), p=self.v12)
        if which == "13":
            return HermMat(alg, (0, 0, 0), q=self.v13)
        if which == "23":
            return HermMat(alg, (0, 0, 0), r=self.v23)
        raise ValueError(which)


def peirce(x: HermMat) -> PeirceParts:
    return PeirceParts(x.algebra, x.diag, x.p, x.q, x.r)


def assemble(parts: PeirceParts) -> HermMat:
    return HermMat(parts.algebra, parts.diag, parts.v12, parts.v13, parts.v23)


def peirce_det(parts: PeirceParts):
    """x1 x2 x3 - (x1||x23|| + x2||x13|| + x3||x12||)/2 + 2<x12 . x13, x23>."""
    x1, x2, x3 = parts.diag
    x12, x13, x23 = parts.element("12"), parts.element("13"), parts.element("23")
    norms = x1 * inner(x23, x23) + x2 * inner(x13, x13) + x3 * inner(x12, x12)
    return x1 * x2 * x3 - norms * HALF + 2 * inner(jmul(x12, x13), x23)


def peirce_sharp_diag(parts: PeirceParts) -> tuple:
    """Diagonal Peirce components of n(x): n(x)_1 = x2 x3 - ||x23||/2, etc."""
    x1, x2, x3 = parts.diag
    x12, x13, x23 = parts.element("12"), parts.element("13"), parts.element("23")
    return (
        x2 * x3 - inner(x23, x23) * HALF,
        x1 * x3 - inner(x13, x13) * HALF,
        x1 * x2 - inner(x12, x12) * HALF,
    )


# ---------------------------------------------------------------------------
# coordinates and compiled structure constants


def dim_v(algebra) -> int:
    return 3 + 3 * CompAlgebra.parse(algebra).dim


@functools.lru_cache(maxsize=None)
def basis(algebra) -> tuple[HermMat, ...]:
    algebra = CompAlgebra.parse(algebra)
    n = dim_v(algebra)
    out = []
    for i in range(n):
        v = [0] * n
        v[i] = 1
        out.append(HermMat.from_coords(algebra, v))
    return tuple(out)


def _rat(v):
    g = as_gauss(v)
    if g.im:
        raise AssertionError("structure constant is not rational")
    return g.re


class Structure:
    """Structure constants of V on its coordinate basis.

    All evaluators take coordinate lists whose entries may be any exact
    scalar (including ``Dual``) and return the same kind of scalar.
    """

    def __init__(self, algebra):
        algebra = CompAlgebra.parse(algebra)
        self.algebra = algebra
        self.n = n = dim_v(algebra)
        b = basis(algebra)
        # jmul(b_i, b_j) = sum_k J[i][j][k] b_k
        self.jmul_terms: list[tuple[int, int, int, object]] = []
        self.cross_terms: list[tuple[int, int, int, object]] = []
        for i in range(n):
            for j in range(i, n):
                jm = jmul(b[i], b[j]).coords()
                cr = cross(b[i], b[j]).coords()
                for k in range(n):
                    if jm[k]:
                        c = _rat(jm[k])
                        self.jmul_terms.append((i, j, k, c))
                        if i != j:
                            self.jmul_terms.append((j, i, k, c))
                    if cr[k]:
                        c = _rat(cr[k])
                        self.cross_terms.append((i, j, k, c))
                        if i != j:
                            self.cross_terms.append((j, i, k, c))
        gram: dict[tuple[int, int], object] = {}
        for i, j, k, c in self.jmul_terms:
            if k < 3:
                gram[i, j] = gram.get((i, j), 0) + c
        self.gram = gram = {ij: g for ij, g in gram.items() if g}
        if any(i != j for i, j in gram):
            raise AssertionError("Gram matrix of the trace form is expected to be diagonal")
        self.gram_diag = [gram.get((i, i), 0) for i in range(n)]
        # symmetric trilinear form on sorted index triples
        self.ftab: dict[tuple[int, int, int], object] = {}
        by_pair: dict[tuple[int, int], list] = {}
        for i, j, k, c in self.cross_terms:
            by_pair.setdefault((i, j), []).append((k, c))
        for (i, j), terms in by_pair.items():
            if i > j:
                continue
            for k, c in terms:
                val = c * self.gram_diag[k]
                if val:
                    key = tuple(sorted((i, j, k)))
                    prev = self.ftab.get(key)
                    if prev is not None and prev != val:
                        raise AssertionError(f"trilinear form not symmetric at {key}")
                    self.ftab[key] = val
        # f(b_a, b_j, b_k) indexed by the unordered pair (j, k)
        self.f_by_pair: dict[tuple[int, int], list[tuple[int, object]]] = {}
        for (i, j, k), v in self.ftab.items():
            for a, (s, t) in {(i, (j, k)), (j, (i, k)), (k, (i, j))}:
                self.f_by_pair.setdefault((s, t), []).append((a, v))
        for key in self.f_by_pair:
            self.f_by_pair[key].sort(key=lambda av: av[0])

    # evaluators -----------------------------------------------------------
    def jmul(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.n
        for i, j, k, c in self.jmul_terms:
            xi, yj = x[i], y[j]
            if xi and yj:
                out[k] = out[k] + c * (xi * yj)
        return out

    def cross(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.n
        for i, j, k, c in self.cross_terms:
            xi, yj = x[i], y[j]
            if xi and yj:
                out[k] = out[k] + c * (xi * yj)
        return out

    def sharp(self, x: Sequence) -> list:
        return [HALF * v for v in self.cross(x, x)]

    def inner(self, x: Sequence, y: Sequence):
        acc = 0
        for g, a, b in zip(self.gram_diag, x, y):
            if a and b:
                acc = acc + g * (a * b)
        return acc

    def trace(self, x: Sequence):
        return x[0] + x[1] + x[2]

    def f(self, x: Sequence, y: Sequence, z: Sequence):
        return self.inner(self.cross(x, y), z)

    def det(self, x: Sequence):
        return self.f(x, x, x) * Rational(1, 6)

    def identity(self) -> list:
        return [1, 1, 1] + [0] * (self.n - 3)

    def adjoint_matrix(self, t_rows: Sequence[Sequence]) -> list[list]:
        """Adjoint of T with respect to the trace form: G^-1 T^t G."""
        n, g = self.n, self.gram_diag
        return [[t_rows[j][i] * g[j] / g[i] for j in range(n)] for i in range(n)]


@functools.lru_cache(maxsize=None)
def structure(algebra) -> Structure:
    return Structure(CompAlgebra.parse(algebra))
