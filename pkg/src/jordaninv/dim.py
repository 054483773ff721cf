"""Dimensions of spaces of invariants, computed exactly.

The Lie algebra acts on degree-d polynomials on pV through the derivation
sum_k (T x_k) . d/dx_k.  A polynomial is invariant under the connected
group exactly when every basis derivation kills it, so the invariant
dimension is the kernel dimension of the stacked action matrices.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .comp import CompAlgebra
from .exact import Echelon, ExactMatrix, random_integer
from .jordan import structure
from .lie import LinOp, lie_basis

DEFAULT_CAP = 20_000


class SizeOverflow(RuntimeError):
    """Monomial space larger than the configured cap."""


def monomial_count(n_vars: int, degree: int) -> int:
    return math.comb(n_vars + degree - 1, degree)


class MonomialBasis:
    """Degree-d monomials in n variables as sorted variable-index tuples.

    Order is lexicographic on those tuples, which for a fixed degree is
    descending lex order on exponent vectors.
    """

    def __init__(self, n_vars: int, degree: int, cap: int | None = DEFAULT_CAP):
        size = monomial_count(n_vars, degree)
        if cap is not None and size > cap:
            raise SizeOverflow(f"{size} monomials exceed the cap of {cap}")
        self.n_vars = n_vars
        self.degree = degree
        self.monomials = list(itertools.combinations_with_replacement(range(n_vars), degree))
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def exponents(self, i: int) -> tuple[int, ...]:
        e = [0] * self.n_vars
        for v in self.monomials[i]:
            e[v] += 1
        return tuple(e)

    def evaluate(self, coeffs: dict[int, object] | Sequence, point: Sequence):
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        acc = 0
        for i, c in items:
            if not c:
                continue
            term = c
            for v in self.monomials[i]:
                term = term * point[v]
            acc = acc + term
        return acc


# ---------------------------------------------------------------------------
# sparse polynomials, enough to expand the structure evaluators


class Poly:
    """Sparse polynomial: {sorted variable tuple: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls({(i,): 1})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return self
            other = Poly({(): other})
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    def __rmul__(self, other):
        return Poly({m: other * c for m, c in self.terms.items()})

    def coefficient_vector(self, mb: MonomialBasis) -> dict[int, object]:
        out = {}
        for m, c in self.terms.items():
            if len(m) != mb.degree:
                raise ValueError("polynomial is not homogeneous of the basis degree")
            out[mb.index[m]] = c
        return out


def variables(algebra, copies: int) -> list[list[Poly]]:
    n = structure(algebra).n
    return [[Poly.var(k * n + i) for i in range(n)] for k in range(copies)]


def coefficient_vectors(algebra, copies: int, evaluator: Callable, degree: int, cap: int | None = DEFAULT_CAP) -> list[dict]:
    """Expand ``evaluator(st, *copies)`` symbolically and read coefficients.

    Only the outputs of total degree ``degree`` are returned, in order.
    """
    st = structure(algebra)
    mb = MonomialBasis(st.n * copies, degree, cap)
    out = []
    for val in evaluator(st, *variables(algebra, copies)):
        if isinstance(val, Poly) and val.terms and all(len(m) == degree for m in val.terms):
            out.append(val.coefficient_vector(mb))
    return out


# ---------------------------------------------------------------------------
# Lie action on coefficients


def _action_columns(T: LinOp, p: int, mb: MonomialBasis):
    """Yield (column, {row: value}) for the derivation applied to each monomial."""
    n = T.n
    # Tx_k has (i)-component sum_j T[i][j] x_{k,j}; d/dx_{k,i} sees the row i.
    trows = {i: list(row.items()) for i, row in T.matrix.data.items()}
    index = mb.index
    for col, mono in enumerate(mb.monomials):
        image: dict[int, object] = {}
        counts: dict[int, int] = {}
        for v in mono:
            counts[v] = counts.get(v, 0) + 1
        for v, e in counts.items():
            k, i = divmod(v, n)
            row = trows.get(i)
            if not row:
                continue
            rest = list(mono)
            rest.remove(v)
            for j, t in row:
                target = index[tuple(sorted(rest + [k * n + j]))]
                image[target] = image.get(target, 0) + t * e
        yield col, {r: c for r, c in image.items() if c}


def lie_action_matrix(T: LinOp, p: int, degree: int, cap: int | None = DEFAULT_CAP) -> ExactMatrix:
    if p < 1 or degree < 0:
        raise ValueError("need at least one copy and a non-negative degree")
    mb = MonomialBasis(T.n * p, degree, cap)
    data: dict[int, dict] = {}
    for col, image in _action_columns(T, p, mb):
        for r, c in image.items():
            data.setdefault(r, {})[col] = c
    return ExactMatrix(len(mb), len(mb), data)


def transpose_substitution_rows(algebra, p: int, mb: MonomialBasis) -> list[dict]:
    """Rows of (sigma - I) for the outer V1 element x -> x^t on coefficients.

    On H3(C_C) the transpose flips the sign of every f_1 coordinate, so
    sigma scales a monomial by (-1)^(its f_1 degree).
    """
    alg = CompAlgebra.parse(algebra)
    if alg is not CompAlgebra.C:
        return []
    n = structure(alg).n
    flipped = {k * n + c for k in range(p) for c in (4, 6, 8)}
    rows = []
    for i, mono in enumerate(mb.monomials):
        if sum(v in flipped for v in mono) % 2:
            rows.append({i: -2})
    return rows


@dataclass
class DimensionResult:
    algebra: str
    copies: int
    degree: int
    group: str
    monomials: int
    dimension: int
    kernel: Echelon | None = None


def invariant_dimension(
    algebra, copies: int, degree: int, group: str = "G", cap: int | None = DEFAULT_CAP, keep: bool = False
) -> int | DimensionResult:
    """dim of degree-d invariants on copies*V for G or its identity component.

    ``group`` is "G" or "Go"; the two differ only for V1, where G also
    contains the transpose.
    """
    alg = CompAlgebra.parse(algebra)
    if group not in ("G", "Go"):
        raise ValueError("group must be 'G' or 'Go'")
    n = structure(alg).n
    mb = MonomialBasis(n * copies, degree, cap)
    ech = Echelon(real=True)
    if group == "G":
        for row in transpose_substitution_rows(alg, copies, mb):
            ech.add(row)
    for T in lie_basis(alg):
        rows: dict[int, dict] = {}
        for col, image in _action_columns(T, copies, mb):
            for r, c in image.items():
                rows.setdefault(r, {})[col] = c
        for r in sorted(rows):
            ech.add(rows[r])
            if ech.rank == len(mb):
                break
    dim = len(mb) - ech.rank
    if keep:
        return DimensionResult(alg.jordan_name, copies, degree, group, len(mb), dim, ech)
    return dim


# ---------------------------------------------------------------------------
# products of known invariants


def weighted_monomials(degrees: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """Multisets of generator indices whose degrees add up to ``degree``."""
    out: list[tuple[int, ...]] = []

    def rec(start: int, left: int, acc: list[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(degrees)):
            if degrees[i] <= left:
                acc.append(i)
                rec(i, left - degrees[i], acc)
                acc.pop()

    rec(0, degree, [])
    return out


def product_rank(
    evaluator: Callable,
    degrees: Sequence[int],
    algebra,
    copies: int,
    degree: int,
    n_points: int,
    seed: int = 0,
    height: int = 10**4,
) -> int:
    """Exact rank of [prod of invariants at point_r] over degree-d products.

    ``evaluator(st, *coords)`` returns one value per invariant, with the
    polynomial degrees listed in ``degrees``.  Points are random integer
    tuples, so the matrix is rational and the rank is exact over Q(i).
    """
    alg = CompAlgebra.parse(algebra)
    st = structure(alg)
    monos = weighted_monomials(degrees, degree)
    if n_points < len(monos):
        raise ValueError(f"need at least {len(monos)} points, got {n_points}")
    rng = random.Random(seed)
    ech = Echelon(real=True)
    for _ in range(n_points):
        point = [[random_integer(rng, height) for _ in range(st.n)] for _ in range(copies)]
        vals = evaluator(st, *point)
        row = {}
        for c, mono in enumerate(monos):
            term = 1
            for i in mono:
                term = term * vals[i]
            row[c] = term
        ech.add(row)
    return ech.rank


def poincare_coeffs(max_degree: int) -> list[int]:
    """Coefficients of (1 + t^9) / ((1 - t^3)^10 (1 - t^6)) up to t^max_degree."""
    series = [0] * (max_degree + 1)
    for d, c in ((0, 1), (9, 1)):
        if d <= max_degree:
            series[d] += c
    for step in [3] * 10 + [6]:
        for d in range(step, max_degree + 1):
            series[d] += series[d - step]
    return series
