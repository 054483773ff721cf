"""Invariant polynomials on pV.

Generators for two copies (f(x,x,x), f(y,y,y), f(x,x,y), f(y,y,x)), the
eleven generators f1..f11 for three copies, the GL3 relative invariant
f11~, the cubic-form coefficient map chi, the degree-9 polynomial P on
the Mat(3) model of V1, and the alternating 5-form on V1/V2.

Every evaluator works on HermMat arguments or, through the ``*_coords``
variants, on raw coordinate lists whose entries may be ``Dual`` numbers.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .comp import CompAlgebra
from .exact import Dual, Echelon, Rational, random_integer, random_scalar
from .jordan import HermMat, structure
from .models import Mat3, split_iso, to_model

P2_NAMES = ("f(x,x,x)", "f(y,y,y)", "f(x,x,y)", "f(y,y,x)")
P3_NAMES = tuple(f"f{i}" for i in range(1, 12))
CUBIC2_MONOMIALS = ("a^3", "a^2b", "ab^2", "b^3")
CUBIC3_MONOMIALS = ("a^3", "a^2b", "a^2c", "ab^2", "abc", "ac^2", "b^3", "b^2c", "bc^2", "c^3")
CUBIC3_EXPONENTS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))

TWO_THIRDS = Rational(2, 3)
SIXTH = Rational(1, 6)
HALF = Rational(1, 2)


def _unpack(xs: Sequence[HermMat]):
    alg = xs[0].algebra
    if any(x.algebra is not alg for x in xs):
        raise ValueError("all arguments must lie in the same algebra")
    return structure(alg), [x.coords() for x in xs]


# ---------------------------------------------------------------------------
# coordinate-level evaluators


def gens_p2_coords(st, x, y) -> list:
    xx = st.cross(x, x)
    yy = st.cross(y, y)
    return [st.inner(xx, x), st.inner(yy, y), st.inner(xx, y), st.inner(yy, x)]


def gens_p3_coords(st, x, y, z) -> list:
    """f1..f11 from five cross products."""
    xx = st.cross(x, x)
    yy = st.cross(y, y)
    zz = st.cross(z, z)
    ip = st.inner
    return [
        ip(xx, x),
        ip(yy, y),
        ip(zz, z),
        ip(xx, y),
        ip(xx, z),
        ip(yy, x),
        ip(yy, z),
        ip(zz, x),
        ip(zz, y),
        ip(st.cross(x, y), z),
        ip(st.cross(xx, yy), zz),
    ]


def f11_tilde_from(f: Sequence):
    f4, f5, f6, f7, f8, f9, f10, f11 = f[3:11]
    return f11 - (f4 * f9 + f5 * f7 + f6 * f8) * TWO_THIRDS + f10 * f10 * TWO_THIRDS


def f11_tilde_coords(st, x, y, z):
    return f11_tilde_from(gens_p3_coords(st, x, y, z))


# ---------------------------------------------------------------------------
# HermMat-level API


def gens_p2(x: HermMat, y: HermMat) -> list:
    st, (xv, yv) = _unpack([x, y])
    return gens_p2_coords(st, xv, yv)


def gens_p3(x: HermMat, y: HermMat, z: HermMat) -> list:
    st, (xv, yv, zv) = _unpack([x, y, z])
    return gens_p3_coords(st, xv, yv, zv)


def f11_tilde(x: HermMat, y: HermMat, z: HermMat):
    return f11_tilde_from(gens_p3(x, y, z))


def chi_from_gens(f: Sequence) -> list:
    """Coefficients of det(ax + by (+ cz)) from generator values."""
    if len(f) == 4:
        return [f[0] * SIXTH, f[2] * HALF, f[3] * HALF, f[1] * SIXTH]
    f1, f2, f3, f4, f5, f6, f7, f8, f9, f10 = f[:10]
    return [
        f1 * SIXTH,
        f4 * HALF,
        f5 * HALF,
        f6 * HALF,
        f10,
        f8 * HALF,
        f2 * SIXTH,
        f7 * HALF,
        f9 * HALF,
        f3 * SIXTH,
    ]


def chi(xs: Sequence[HermMat]) -> list:
    """Binary (p=2) or ternary (p=3) cubic form det(ax+by(+cz)), as coefficients."""
    if len(xs) == 2:
        return chi_from_gens(gens_p2(*xs))
    if len(xs) == 3:
        return chi_from_gens(gens_p3(*xs))
    raise ValueError("chi needs two or three elements")


def eval_cubic(coeffs: Sequence, point: Sequence):
    """Evaluate a coefficient vector from ``chi`` at (a, b) or (a, b, c)."""
    if len(coeffs) == 4:
        a, b = point
        exps = ((3, 0), (2, 1), (1, 2), (0, 3))
    else:
        a, b, c = point
        exps = CUBIC3_EXPONENTS
    acc = 0
    for k, e in zip(coeffs, exps):
        term = k
        for v, n in zip(point, e):
            for _ in range(n):
                term = term * v
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# Mat(3) model polynomials


def _as_v1(x) -> Mat3:
    if isinstance(x, HermMat):
        return split_iso(x)
    if not isinstance(x, Mat3) or x.ring is not None:
        raise TypeError("expected a scalar Mat3 or a HermMat over C")
    return x


def p_invariant(x, y, z):
    """tr(adj(x) z adj(y) x adj(z) y) with the classical adjugate."""
    x, y, z = _as_v1(x), _as_v1(y), _as_v1(z)
    return (x.adjugate() @ z @ y.adjugate() @ x @ z.adjugate() @ y).trace()


def p_invariant_coords(xs):
    """P on three coordinate vectors of H3(C_C)."""
    x, y, z = (split_iso(HermMat.from_coords("C", v)) for v in xs)
    return p_invariant(x, y, z)


def _as_model(x) -> Mat3:
    if isinstance(x, HermMat):
        if x.algebra not in (CompAlgebra.C, CompAlgebra.H, CompAlgebra.R):
            raise TypeError("alt5 needs the V0, V1 or V2 matrix model")
        return to_model(x)
    return x


def _rtrace_product(ms: Sequence[Mat3]):
    acc = ms[0]
    for m in ms[1:]:
        acc = acc @ m
    return acc.reduced_trace()


def _sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alt5(*xs):
    """Alternating sum of (reduced) traces of 5-fold products.

    The trace is invariant under cyclic shifts, and a 5-cycle is even, so
    the 120 terms collapse to 5 times the 24 orderings starting with x1.
    """
    if len(xs) != 5:
        raise ValueError("alt5 takes five arguments")
    ms = [_as_model(x) for x in xs]
    acc = 0
    for rest in itertools.permutations(range(1, 5)):
        perm = (0,) + rest
        term = _rtrace_product([ms[i] for i in perm])
        acc = acc + term if _sign(perm) > 0 else acc - term
    return acc * 5


def alt5_bruteforce(*xs):
    ms = [_as_model(x) for x in xs]
    acc = 0
    for perm in itertools.permutations(range(5)):
        term = _rtrace_product([ms[i] for i in perm])
        acc = acc + term if _sign(perm) > 0 else acc - term
    return acc


# ---------------------------------------------------------------------------
# Jacobians


def random_tuple(algebra, copies: int, rng, height: int = 10**4) -> list[list]:
    n = structure(algebra).n
    return [[random_scalar(rng, height) for _ in range(n)] for _ in range(copies)]


def generators_for(copies: int):
    if copies == 2:
        return gens_p2_coords
    if copies == 3:
        return gens_p3_coords
    raise ValueError("generator sets exist for two or three copies")


def jacobian(algebra, point: Sequence[Sequence], gens=None) -> list[list]:
    """Rows = generators, columns = coordinates of pV, by dual numbers."""
    st = structure(algebra)
    gens = gens or generators_for(len(point))
    cols = []
    for k, v in enumerate(point):
        for c in range(len(v)):
            lifted = [[Dual(a, 1 if (kk == k and cc == c) else 0) for cc, a in enumerate(w)] for kk, w in enumerate(point)]
            cols.append([val.deriv if isinstance(val, Dual) else 0 for val in gens(st, *lifted)])
    return [list(r) for r in zip(*cols)]


def jacobian_rank(algebra, copies: int, seed: int = 0, height: int = 10**4) -> int:
    """Exact rank of the generator Jacobian at a random integer point."""
    rng = random.Random(seed)
    n = structure(algebra).n
    point = [[random_integer(rng, height) for _ in range(n)] for _ in range(copies)]
    rows = jacobian(algebra, point)
    ech = Echelon(real=True)
    for r in rows:
        ech.add(dict(enumerate(r)))
    return ech.rank
