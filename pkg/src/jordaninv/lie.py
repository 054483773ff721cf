"""Lie algebra of the determinant-preserving group G acting on V.

Lie(G) = L(V_0) + Der(V): multiplication operators by trace-zero elements
together with inner derivations [L(x), L(y)].  Everything is an exact
matrix on the coordinate basis of ``jordan.Structure``.
"""

from __future__ import annotations

import functools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .comp import CompAlgebra
from .exact import Dual, Echelon, ExactMatrix, kernel_dim, random_scalar
from .jordan import HermMat, structure


@dataclass(frozen=True)
class LinOp:
    """Linear operator on the coordinates of V."""

    matrix: ExactMatrix
    label: str = ""

    @property
    def n(self) -> int:
        return self.matrix.rows

    def apply(self, vec: Sequence) -> list:
        return self.matrix.apply(vec)

    def __call__(self, x):
        if isinstance(x, HermMat):
            return HermMat.from_coords(x.algebra, self.apply(x.coords()))
        return self.apply(x)

    def __add__(self, other: "LinOp") -> "LinOp":
        return LinOp(self.matrix + other.matrix, f"({self.label} + {other.label})")

    def __sub__(self, other: "LinOp") -> "LinOp":
        return LinOp(self.matrix - other.matrix, f"({self.label} - {other.label})")

    def scale(self, s) -> "LinOp":
        return LinOp(self.matrix.scale(s), f"{s}*{self.label}")

    def compose(self, other: "LinOp") -> "LinOp":
        return LinOp(self.matrix @ other.matrix, f"{self.label}*{other.label}")

    def commutator(self, other: "LinOp") -> "LinOp":
        m = self.matrix @ other.matrix - other.matrix @ self.matrix
        return LinOp(m, f"[{self.label},{other.label}]")

    def flat(self) -> dict[int, object]:
        n = self.n
        return {r * n + c: v for r, row in self.matrix.data.items() for c, v in row.items()}

    def dense(self) -> list[list]:
        return self.matrix.to_dense()

    def to_json(self) -> dict:
        from .exact import gauss_to_json

        triplets = [
            [r, c, gauss_to_json(v)] for r, row in sorted(self.matrix.data.items()) for c, v in sorted(row.items())
        ]
        return {"label": self.label, "n": self.n, "entries": triplets}


def identity_op(algebra) -> LinOp:
    return LinOp(ExactMatrix.identity(structure(algebra).n), "I")


def lmul_op(a) -> LinOp:
    """Matrix of x -> a . x; ``a`` is a HermMat."""
    st = structure(a.algebra)
    av = a.coords()
    n = st.n
    data: dict[int, dict] = {}
    for col in range(n):
        unit = [0] * n
        unit[col] = 1
        image = st.jmul(av, unit)
        for row, v in enumerate(image):
            if v:
                data.setdefault(row, {})[col] = v
    return LinOp(ExactMatrix(n, n, data), f"L({_short(a)})")


def _short(a: HermMat) -> str:
    coords = a.coords()
    nz = [(i, c) for i, c in enumerate(coords) if c]
    if len(nz) == 1 and nz[0][1] == 1:
        return f"b{nz[0][0]}"
    return "+".join(f"{c}*b{i}" for i, c in nz) or "0"


@dataclass
class LieBasis:
    algebra: CompAlgebra
    ops: list[LinOp] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __len__(self):
        return len(self.ops)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.jordan_name,
            "dim": self.dim,
            "n": structure(self.algebra).n,
            "ops": [op.to_json() for op in self.ops],
        }


def trace_zero_basis(algebra) -> list[HermMat]:
    algebra = CompAlgebra.parse(algebra)
    n = structure(algebra).n
    out = [HermMat(algebra, (1, -1, 0)), HermMat(algebra, (0, 1, -1))]
    for i in range(3, n):
        v = [0] * n
        v[i] = 1
        out.append(HermMat.from_coords(algebra, v))
    return out


@functools.lru_cache(maxsize=None)
def lie_basis(algebra) -> LieBasis:
    """Independent generators of Lie(G): L(trace-zero) then derivations.

    Candidates are L(b) for a trace-zero basis and [L(b_i), L(b_j)] for
    pairs of coordinate basis vectors; each is kept only if it increases
    the exact rank of the stacked operator coordinates.
    """
    algebra = CompAlgebra.parse(algebra)
    n = structure(algebra).n
    ech = Echelon(real=True)
    ops: list[LinOp] = []
    for a in trace_zero_basis(algebra):
        op = lmul_op(a)
        if ech.add(op.flat()):
            ops.append(op)
    from .jordan import basis

    mults = [lmul_op(b) for b in basis(algebra)]
    for i in range(n):
        for j in range(i + 1, n):
            d = mults[i].commutator(mults[j])
            if d.matrix.is_zero():
                continue
            if ech.add(d.flat()):
                ops.append(LinOp(d.matrix, f"[L(b{i}),L(b{j})]"))
    return LieBasis(algebra, ops)


def stacked_rank(ops: Sequence[LinOp]) -> int:
    ech = Echelon(real=True)
    for op in ops:
        ech.add(op.flat())
    return ech.rank


def in_span(basis_: LieBasis, op: LinOp) -> bool:
    ech = Echelon(real=True)
    for b in basis_.ops:
        ech.add(b.flat())
    return ech.contains(op.flat())


def det_annihilator_matrix(algebra) -> ExactMatrix:
    """Linear system for T in End(V) with f(Tx, x, x) = 0 identically.

    Unknown T[a][b] (the b_a-component of T b_b) sits in column a*n + b.
    One row per sorted basis triple i <= j <= k carrying the symmetrised
    condition f(T b_i, b_j, b_k) + f(b_i, T b_j, b_k) + f(b_i, b_j, T b_k).
    """
    st = structure(algebra)
    n = st.n
    fp = st.f_by_pair
    data: dict[int, dict] = {}
    r = 0
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                row: dict[int, object] = {}
                for moved, pair in ((i, (j, k)), (j, (i, k)), (k, (i, j))):
                    for a, v in fp.get(pair, ()):
                        col = a * n + moved
                        row[col] = row.get(col, 0) + v
                data[r] = row
                r += 1
    return ExactMatrix(r, n * n, data)


@functools.lru_cache(maxsize=None)
def det_annihilator_dim(algebra) -> int:
    return kernel_dim(det_annihilator_matrix(CompAlgebra.parse(algebra)))


# ---------------------------------------------------------------------------
# infinitesimal checks


@dataclass
class CheckResult:
    passed: bool
    checked: int = 0
    witness: dict | None = None

    def __bool__(self):
        return self.passed


def random_coords(rng: random.Random, n: int, height: int) -> list:
    return [random_scalar(rng, height) for _ in range(n)]


def _witness(points, seed, extra=None) -> dict:
    from .exact import gauss_to_json

    out = {"seed": seed, "tuple": [[gauss_to_json(c) for c in v] for v in points]}
    if extra:
        out.update(extra)
    return out


def directional_invariance(
    evaluator: Callable[[list[list]], object],
    T: LinOp,
    points: int = 20,
    seed: int = 0,
    copies: int = 1,
    height: int = 1000,
) -> CheckResult:
    """Check that every eps-part of evaluator(x_k + eps T x_k) vanishes.

    ``evaluator`` maps a list of ``copies`` coordinate vectors to a scalar
    or a sequence of scalars; it is evaluated on dual-number coordinates.
    """
    rng = random.Random(seed)
    n = T.n
    for count in range(points):
        xs = [random_coords(rng, n, height) for _ in range(copies)]
        lifted = [[Dual(c, d) for c, d in zip(x, T.apply(x))] for x in xs]
        out = evaluator(lifted)
        values = out if isinstance(out, (list, tuple)) else [out]
        for idx, val in enumerate(values):
            deriv = val.deriv if isinstance(val, Dual) else 0
            if deriv:
                return CheckResult(False, count, _witness(xs, seed, {"op": T.label, "component": idx}))
    return CheckResult(True, points)


def sharp_equivariance_check(T: LinOp, algebra, points: int = 20, seed: int = 0, height: int = 1000) -> CheckResult:
    """Infinitesimal form of n(g x) = (g^-1)' n(x): x cross Tx = -T' n(x)."""
    st = structure(algebra)
    tadj = LinOp(ExactMatrix.from_rows(st.adjoint_matrix(T.dense())), f"{T.label}'")
    rng = random.Random(seed)
    for count in range(points):
        x = random_coords(rng, st.n, height)
        lhs = st.cross(x, T.apply(x))
        rhs = tadj.apply(st.sharp(x))
        if any(a + b for a, b in zip(lhs, rhs)):
            return CheckResult(False, count, _witness([x], seed, {"op": T.label}))
    return CheckResult(True, points)


def dump_basis(algebra) -> str:
    return json.dumps(lie_basis(CompAlgebra.parse(algebra)).to_json())
