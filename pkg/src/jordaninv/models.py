"""Concrete matrix models of V0, V1, V2 and exact group actions on them.

V0: complex symmetric 3x3 matrices, g.X = g X g^t.
V1: all 3x3 complex matrices, (g1, g2).X = g1 X g2^-1, plus X -> X^t.
V2: Hermitian 3x3 matrices over H_C, g.X = g X conj(g)^t.

Group elements are words of elementary matrices I + lambda E_ij, so every
inverse is exact (I - lambda E_ij) and every determinant is 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .comp import CompAlgebra, CompElem, conj
from .exact import I, Rational, gauss_from_json, gauss_to_json, scalar_inverse
from .jordan import HermMat

HALF = Rational(1, 2)


class ModelMismatch(TypeError):
    """Group element and point belong to different models."""


class BadIndex(ValueError):
    pass


class WrongAlgebra(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


MODELS = ("V0", "V1", "V2")


def _zero(ring):
    return 0 if ring is None else CompElem(ring)


def _one(ring):
    return 1 if ring is None else CompElem.scalar(ring, 1)


class Mat3:
    """3x3 matrix over scalars (``ring`` None) or over a composition algebra."""

    __slots__ = ("ring", "rows")

    def __init__(self, rows: Sequence[Sequence], ring=None):
        self.ring = None if ring is None else CompAlgebra.parse(ring)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 needs 3x3 entries")
        if self.ring is None:
            self.rows = tuple(tuple(r) for r in rows)
        else:
            self.rows = tuple(
                tuple(v if isinstance(v, CompElem) else CompElem.scalar(self.ring, v) for v in r) for r in rows
            )

    @classmethod
    def identity(cls, ring=None) -> "Mat3":
        return cls([[_one(ring) if i == j else _zero(ring) for j in range(3)] for i in range(3)], ring)

    @classmethod
    def zeros(cls, ring=None) -> "Mat3":
        return cls([[_zero(ring)] * 3 for _ in range(3)], ring)

    @classmethod
    def unit(cls, i: int, j: int, value=1, ring=None) -> "Mat3":
        """value * E_ij with 1-based indices."""
        rows = [[_zero(ring)] * 3 for _ in range(3)]
        rows[i - 1][j - 1] = value
        return cls(rows, ring)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "Mat3"):
        if not isinstance(other, Mat3):
            return False
        if self.ring is not other.ring:
            raise ModelMismatch("matrices over different rings")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return Mat3([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ring)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return Mat3([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ring)

    def __neg__(self):
        return Mat3([[-a for a in r] for r in self.rows], self.ring)

    def scale(self, s) -> "Mat3":
        return Mat3([[a * s for a in r] for r in self.rows], self.ring)

    def __matmul__(self, other):
        if not self._check(other):
            return NotImplemented
        a, b = self.rows, other.rows
        out = [[_zero(self.ring)] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                acc = _zero(self.ring)
                for k in range(3):
                    acc = acc + a[i][k] * b[k][j]
                out[i][j] = acc
        return Mat3(out, self.ring)

    def transpose(self) -> "Mat3":
        return Mat3([[self.rows[j][i] for j in range(3)] for i in range(3)], self.ring)

    def conj(self) -> "Mat3":
        """Entrywise algebra conjugation (identity on plain scalars)."""
        if self.ring is None:
            return self
        return Mat3([[conj(a) for a in r] for r in self.rows], self.ring)

    def star(self) -> "Mat3":
        return self.conj().transpose()

    def trace(self):
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def reduced_trace(self):
        """Sum of the real parts of the diagonal; equals trace over scalars."""
        if self.ring is None:
            return self.trace()
        return sum((self.rows[i][i].coeffs[0] for i in range(3)), 0)

    def det(self):
        if self.ring is not None:
            raise TypeError("det is only defined for scalar matrices")
        (a, b, c), (d, e, f), (g, h, k) = self.rows
        return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)

    def adjugate(self) -> "Mat3":
        """Classical adjugate (transposed cofactor matrix): X adj(X) = det(X) I."""
        if self.ring is not None:
            raise TypeError("adjugate is only defined for scalar matrices")
        m = self.rows
        cof = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [x for x in range(3) if x != i]
                c = [y for y in range(3) if y != j]
                minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
                cof[i][j] = minor if (i + j) % 2 == 0 else -minor
        return Mat3([[cof[j][i] for j in range(3)] for i in range(3)])

    def inverse(self) -> "Mat3":
        d = self.det()
        if not d:
            raise SingularMatrix("matrix is singular")
        return self.adjugate().scale(scalar_inverse(d))

    def __eq__(self, other):
        if not isinstance(other, Mat3) or self.ring is not other.ring:
            return NotImplemented
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def __repr__(self):
        tag = "" if self.ring is None else f"{self.ring.tag}, "
        return f"Mat3({tag}{[list(r) for r in self.rows]})"

    def to_json(self) -> dict:
        if self.ring is None:
            return {"model": "V1", "rows": [[gauss_to_json(v) for v in r] for r in self.rows]}
        return {"model": "V2", "rows": [[v.to_json() for v in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "Mat3":
        rows = obj["rows"]
        if obj.get("model", "V1") == "V2":
            return cls([[CompElem.from_json("H", v) for v in r] for r in rows], "H")
        return cls([[gauss_from_json(v) for v in r] for r in rows])


# ---------------------------------------------------------------------------
# between HermMat and the matrix models


def _phi(u: CompElem):
    """C_C -> C on the eps+ component: a0 + a1 f1 -> a0 - i a1."""
    a0, a1 = u.coeffs
    return a0 - I * a1


def split_iso(x: HermMat) -> Mat3:
    """Algebra isomorphism H3(C_C) -> Mat(3) sending e_i to E_ii."""
    if x.algebra is not CompAlgebra.C:
        raise WrongAlgebra(f"split_iso needs algebra C, got {x.algebra.tag}")
    return Mat3([[_phi(u) for u in row] for row in x.to_matrix()])


def _unphi(lower, upper) -> CompElem:
    """Recover u from (phi(u), phi(conj u))."""
    return CompElem("C", ((lower + upper) * HALF, I * (lower - upper) * HALF))


def split_iso_inv(a: Mat3) -> HermMat:
    if a.ring is not None:
        raise WrongAlgebra("split_iso_inv needs a scalar matrix")
    m = a.rows
    p = _unphi(m[1][0], m[0][1])
    q = _unphi(m[2][0], m[0][2])
    r = _unphi(m[1][2], m[2][1])
    return HermMat("C", (m[0][0], m[1][1], m[2][2]), p, q, r)


def to_model(x: HermMat) -> Mat3:
    """HermMat over R, C or H as a point of the corresponding matrix model."""
    alg = x.algebra
    if alg is CompAlgebra.C:
        return split_iso(x)
    if alg is CompAlgebra.R:
        return Mat3([[u.coeffs[0] for u in row] for row in x.to_matrix()])
    if alg is CompAlgebra.H:
        return Mat3(x.to_matrix(), "H")
    raise ModelMismatch("V3 has no matrix model here")


def from_model(model: str, m: Mat3) -> HermMat:
    if model == "V1":
        return split_iso_inv(m)
    if model == "V0":
        if m.ring is not None:
            raise ModelMismatch("V0 points are scalar matrices")
        rows = [[CompElem("R", (v,)) for v in r] for r in m.rows]
        return HermMat.from_matrix("R", rows)
    if model == "V2":
        if m.ring is not CompAlgebra.H:
            raise ModelMismatch("V2 points are matrices over H_C")
        return HermMat.from_matrix("H", [list(r) for r in m.rows])
    raise ModelMismatch(f"unknown model {model}")


# ---------------------------------------------------------------------------
# group words


@dataclass(frozen=True)
class Token:
    op: str  # "elem" or "transpose"
    i: int = 0
    j: int = 0
    lam: object = 0
    side: int = 1  # V1 only: 1 acts on the left factor, 2 on the right

    def inverse(self) -> "Token":
        if self.op == "transpose":
            return self
        return Token("elem", self.i, self.j, -self.lam, self.side)

    def to_json(self) -> dict:
        if self.op == "transpose":
            return {"op": "transpose"}
        lam = self.lam.to_json() if isinstance(self.lam, CompElem) else gauss_to_json(self.lam)
        return {"op": "elem", "i": self.i, "j": self.j, "lambda": lam, "side": self.side}


@dataclass(frozen=True)
class GroupElem:
    """Word of tokens; the rightmost token acts first."""

    model: str
    word: tuple[Token, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.model not in MODELS:
            raise ModelMismatch(f"unknown model {self.model}")

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        if other.model != self.model:
            raise ModelMismatch("cannot compose elements of different models")
        return GroupElem(self.model, self.word + other.word)

    def inverse(self) -> "GroupElem":
        return GroupElem(self.model, tuple(t.inverse() for t in reversed(self.word)))

    @property
    def is_inner(self) -> bool:
        return sum(t.op == "transpose" for t in self.word) % 2 == 0

    def to_json(self) -> list:
        return [t.to_json() for t in self.word]

    @classmethod
    def from_json(cls, model: str, tokens: list) -> "GroupElem":
        word = []
        for t in tokens:
            if t["op"] == "transpose":
                word.append(Token("transpose"))
                continue
            lam = t["lambda"]
            lam = CompElem.from_json("H", lam) if isinstance(lam, list) else gauss_from_json(lam)
            word.append(_elem_token(t["i"], t["j"], lam, t.get("side", 1)))
        return cls(model, tuple(word))


def _elem_token(i: int, j: int, lam, side: int = 1) -> Token:
    if i not in (1, 2, 3) or j not in (1, 2, 3) or i == j:
        raise BadIndex(f"elementary matrix needs distinct indices in 1..3, got ({i}, {j})")
    if side not in (1, 2):
        raise BadIndex(f"side must be 1 or 2, got {side}")
    return Token("elem", i, j, lam, side)


def identity_elem(model: str = "V0") -> GroupElem:
    return GroupElem(model)


def elementary(i: int, j: int, lam, model: str = "V0", side: int = 1) -> GroupElem:
    """I + lam E_ij as a one-letter word."""
    if isinstance(lam, CompElem) and model != "V2":
        raise ModelMismatch("algebra-valued lambda only makes sense for V2")
    if model == "V2" and not isinstance(lam, CompElem):
        lam = CompElem.scalar("H", lam)
    return GroupElem(model, (_elem_token(i, j, lam, side),))


def transpose_elem() -> GroupElem:
    return GroupElem("V1", (Token("transpose"),))


def token_matrix(t: Token, ring=None) -> Mat3:
    return Mat3.identity(ring) + Mat3.unit(t.i, t.j, t.lam, ring)


def matrix_of(g: GroupElem) -> Mat3 | tuple[Mat3, Mat3]:
    """Product matrix of an inner word; a pair (g1, g2) for V1."""
    ring = "H" if g.model == "V2" else None
    if g.model == "V1":
        g1, g2 = Mat3.identity(), Mat3.identity()
        for t in g.word:
            if t.op == "transpose":
                raise ValueError("word has an outer component")
            if t.side == 1:
                g1 = g1 @ token_matrix(t)
            else:
                g2 = g2 @ token_matrix(t)
        return g1, g2
    m = Mat3.identity(ring)
    for t in g.word:
        m = m @ token_matrix(t, ring)
    return m


def _act_token(model: str, t: Token, m: Mat3) -> Mat3:
    if t.op == "transpose":
        if model != "V1":
            raise ModelMismatch("transpose is an outer element of V1 only")
        return m.transpose()
    if model == "V0":
        g = token_matrix(t)
        return g @ m @ g.transpose()
    if model == "V2":
        g = token_matrix(t, "H")
        return g @ m @ g.star()
    if t.side == 1:
        return token_matrix(t) @ m
    return m @ token_matrix(t.inverse())


def _check_point(model: str, m: Mat3):
    want = CompAlgebra.H if model == "V2" else None
    if m.ring is not want:
        raise ModelMismatch(f"point does not belong to the {model} model")


def act(g: GroupElem, x):
    """Apply g to a Mat3 of the model or to a HermMat of the matching algebra."""
    if isinstance(x, HermMat):
        if x.algebra.jordan_name != g.model:
            raise ModelMismatch(f"{g.model} element cannot act on {x.algebra.jordan_name}")
        return from_model(g.model, act(g, to_model(x)))
    if not isinstance(x, Mat3):
        raise ModelMismatch(f"cannot act on {type(x).__name__}")
    _check_point(g.model, x)
    for t in reversed(g.word):
        x = _act_token(g.model, t, x)
    return x


def act_tuple(g: GroupElem, xs: Sequence) -> list:
    return [act(g, x) for x in xs]


def random_word(model: str, rng, length: int = 4, height: int = 5, outer: bool = False) -> GroupElem:
    """Random word of elementary letters with small Gaussian-rational lambdas."""
    from .exact import random_scalar

    pairs = [(i, j) for i, j in itertools.product((1, 2, 3), repeat=2) if i != j]
    word = []
    for _ in range(length):
        i, j = rng.choice(pairs)
        if model == "V2":
            lam = CompElem("H", [random_scalar(rng, height) for _ in range(4)])
        else:
            lam = random_scalar(rng, height)
        side = rng.choice((1, 2)) if model == "V1" else 1
        word.append(Token("elem", i, j, lam, side))
    if outer and model == "V1":
        word.insert(rng.randrange(len(word) + 1), Token("transpose"))
    return GroupElem(model, tuple(word))


# ---------------------------------------------------------------------------
# GL3 acting on triples


def _det3(g):
    (a, b, c), (d, e, f), (h, k, m) = g
    return a * (e * m - f * k) - b * (d * m - f * h) + c * (d * k - e * h)


def gl3_mix(g: Sequence[Sequence], xs: Sequence) -> tuple:
    """(x_1, x_2, x_3) -> (sum_j g_ij x_j)_i for HermMat or coordinate lists."""
    if len(g) != 3 or any(len(r) != 3 for r in g) or len(xs) != 3:
        raise ValueError("gl3_mix needs a 3x3 matrix and a triple")
    if not _det3(g):
        raise SingularMatrix("g is not invertible")
    out = []
    for row in g:
        if isinstance(xs[0], HermMat):
            acc = HermMat.zero(xs[0].algebra)
            for c, x in zip(row, xs):
                if c:
                    acc = acc + x * c
        else:
            acc = [0] * len(xs[0])
            for c, x in zip(row, xs):
                if c:
                    acc = [a + v * c for a, v in zip(acc, x)]
        out.append(acc)
    return tuple(out)


def det3(g: Sequence[Sequence]):
    return _det3(g)
