"""Verification suites behind ``jordaninv verify``.

Each suite yields ``Check`` records.  Suites only combine library calls;
all mathematics lives in the other modules.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from . import comp, dim, inv, jordan, lie, models, realize
from .comp import ALGEBRAS, CompAlgebra, CompElem
from .exact import gauss_to_json, random_scalar
from .jordan import HermMat, dim_v


class UnknownSuite(ValueError):
    pass


@dataclass
class Config:
    seed: int = 0
    height: int = 1000
    monomial_cap: int = dim.DEFAULT_CAP
    tolerance: float = realize.TOLERANCE
    points: int = 20
    suites: list[str] = field(default_factory=list)
    algebras: list[str] = field(default_factory=lambda: ["V0", "V1", "V2", "V3"])
    copies: list[int] = field(default_factory=lambda: [2, 3])


@dataclass
class Check:
    name: str
    algebra: str | None
    status: str
    expected: object = None
    actual: object = None
    witness: dict | None = None
    millis: int = 0

    def to_json(self) -> dict:
        return asdict(self)


def _json(v):
    """Exact scalars become strings so reports stay exact and diffable."""
    if isinstance(v, (list, tuple)):
        return [_json(x) for x in v]
    if isinstance(v, dict):
        return {k: _json(x) for k, x in v.items()}
    if isinstance(v, (bool, str, float)) or v is None:
        return v
    if isinstance(v, int):
        return v
    return str(v)


def run(name: str, algebra: str | None, fn: Callable[[], tuple]) -> Check:
    """fn returns (passed, expected, actual[, witness]); passed None means skip."""
    t0 = time.perf_counter()
    try:
        out = fn()
    except dim.SizeOverflow as exc:
        out = (None, None, None, {"reason": str(exc)})
    passed, expected, actual = out[:3]
    witness = out[3] if len(out) > 3 else None
    status = "skip" if passed is None else ("pass" if passed else "fail")
    millis = int((time.perf_counter() - t0) * 1000)
    return Check(name, algebra, status, _json(expected), _json(actual), _json(witness), millis)


def random_herm(alg, rng, height: int) -> HermMat:
    return HermMat.from_coords(alg, [random_scalar(rng, height) for _ in range(dim_v(alg))])


def _herm_witness(seed, i, xs) -> dict:
    return {"seed": seed, "sample": i, "inputs": [x.to_json() for x in xs]}


def _algs(cfg: Config, allowed=ALGEBRAS):
    out = []
    for a in cfg.algebras:
        alg = CompAlgebra.parse(a)
        if alg in allowed:
            out.append(alg)
    return out


def _sampled(cfg: Config, alg, copies: int, pred: Callable[..., bool]):
    rng = random.Random(cfg.seed * 100 + alg.value)
    for i in range(cfg.points):
        xs = [random_herm(alg, rng, cfg.height) for _ in range(copies)]
        if not pred(*xs):
            return False, _herm_witness(cfg.seed, i, xs)
    return True, None


# ---------------------------------------------------------------------------
# suites


def suite_composition(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):
        rng = random.Random(cfg.seed * 31 + alg.value)
        d = alg.dim

        def law(rng=rng, alg=alg, d=d):
            for i in range(cfg.points):
                u = CompElem(alg, [random_scalar(rng, cfg.height) for _ in range(d)])
                v = CompElem(alg, [random_scalar(rng, cfg.height) for _ in range(d)])
                ok = comp.cnorm(u * v) == comp.cnorm(u) * comp.cnorm(v)
                ok = ok and (u * u) * v == u * (u * v) and (u * v) * v == u * (v * v)
                if not ok:
                    return False, True, False, {"seed": cfg.seed, "sample": i, "u": u.to_json(), "v": v.to_json()}
            return True, True, True

        yield run("composition-and-alternativity", alg.jordan_name, law)


def suite_jordan(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):
        e = HermMat.identity(alg)

        def ch(x):
            return jordan.jmul(x, jordan.sharp(x)) == e * jordan.det(x)

        def fxxx(x):
            return jordan.trilinear_f(x, x, x) == jordan.det(x) * 6

        def jid(x, y):
            xx = jordan.jmul(x, x)
            return jordan.jmul(jordan.jmul(x, y), xx) == jordan.jmul(x, jordan.jmul(y, xx))

        for name, copies, pred in (("cayley-hamilton", 1, ch), ("f(x,x,x)=6det", 1, fxxx), ("jordan-identity", 2, jid)):
            yield run(name, alg.jordan_name, lambda p=pred, c=copies, a=alg: _ok(_sampled(cfg, a, c, p)))


def _ok(res):
    ok, wit = res
    return (ok, True, ok, wit)


def suite_peirce(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):

        def sharp_diag(x):
            return tuple(jordan.sharp(x).diag) == jordan.peirce_sharp_diag(jordan.peirce(x))

        def det_parts(x):
            parts = jordan.peirce(x)
            return jordan.peirce_det(parts) == jordan.det(x) and jordan.assemble(parts) == x

        yield run("peirce-sharp-diagonal", alg.jordan_name, lambda a=alg: _ok(_sampled(cfg, a, 1, sharp_diag)))
        yield run("peirce-det", alg.jordan_name, lambda a=alg: _ok(_sampled(cfg, a, 1, det_parts)))


LIE_DIMS = {CompAlgebra.R: 8, CompAlgebra.C: 16, CompAlgebra.H: 35, CompAlgebra.O: 78}


def suite_lie_dim(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):
        want = LIE_DIMS[alg]
        yield run("lie-basis-dim", alg.jordan_name, lambda a=alg, w=want: (lie.lie_basis(a).dim == w, w, lie.lie_basis(a).dim))
        yield run(
            "det-annihilator-dim", alg.jordan_name, lambda a=alg, w=want: (lie.det_annihilator_dim(a) == w, w, lie.det_annihilator_dim(a))
        )


def suite_lie_equivariance(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):

        def members(a=alg):
            for T in lie.lie_basis(a):
                res = lie.sharp_equivariance_check(T, a, points=max(1, cfg.points // 4), seed=cfg.seed, height=cfg.height)
                if not res:
                    return False, True, False, res.witness
            return True, True, True

        def nonmember(a=alg):
            res = lie.sharp_equivariance_check(lie.identity_op(a), a, points=1, seed=cfg.seed, height=cfg.height)
            return not res.passed, "fail", "fail" if not res.passed else "pass", res.witness

        yield run("sharp-equivariance", alg.jordan_name, members)
        yield run("sharp-equivariance-rejects-L(e)", alg.jordan_name, nonmember)


def _invariance(alg, copies: int, evaluator, cfg: Config):
    st = jordan.structure(alg)
    for T in lie.lie_basis(alg):
        res = lie.directional_invariance(
            lambda xs: evaluator(st, *xs), T, points=cfg.points, seed=cfg.seed, copies=copies, height=cfg.height
        )
        if not res:
            return False, 0, "nonzero derivative", res.witness
    return True, 0, 0


def suite_invariance(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):
        for copies in cfg.copies:
            gens = inv.generators_for(copies)
            yield run(f"lie-invariance-p{copies}", alg.jordan_name, lambda a=alg, c=copies, g=gens: _invariance(a, c, g, cfg))


def suite_jacobian(cfg: Config) -> Iterator[Check]:
    for copies in cfg.copies:
        for alg in _algs(cfg):
            want = 4 if copies == 2 else (10 if alg is CompAlgebra.R else 11)

            def ranks(a=alg, c=copies, w=want):
                got = [inv.jacobian_rank(a, c, cfg.seed + s) for s in range(3)]
                return all(r == w for r in got), [w] * 3, got

            yield run(f"jacobian-rank-p{copies}", alg.jordan_name, ranks)


def _finite(model: str, cfg: Config):
    alg = CompAlgebra.parse(model)
    rng = random.Random(cfg.seed * 7 + alg.value)
    for i in range(cfg.points):
        g = models.random_word(model, rng, length=4, height=5)
        xs = [random_herm(alg, rng, 50) for _ in range(3)]
        gx = models.act_tuple(g, xs)
        if inv.gens_p3(*gx) != inv.gens_p3(*xs) or inv.gens_p2(*gx[:2]) != inv.gens_p2(*xs[:2]):
            return False, True, False, {"seed": cfg.seed, "sample": i, "word": g.to_json(), "inputs": [x.to_json() for x in xs]}
    return True, True, True


def suite_finite_action(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg, (CompAlgebra.R, CompAlgebra.C, CompAlgebra.H)):
        yield run("finite-action-invariance", alg.jordan_name, lambda m=alg.jordan_name: _finite(m, cfg))


def _rand_mat3(rng, height):
    return models.Mat3([[random_scalar(rng, height) for _ in range(3)] for _ in range(3)])


def suite_p_invariant(cfg: Config) -> Iterator[Check]:
    if CompAlgebra.C not in _algs(cfg):
        return
    rng = random.Random(cfg.seed)

    def lie_level():
        for T in lie.lie_basis("C"):
            res = lie.directional_invariance(inv.p_invariant_coords, T, points=max(1, cfg.points // 4), seed=cfg.seed, copies=3, height=cfg.height)
            if not res:
                return False, 0, "nonzero derivative", res.witness
        return True, 0, 0

    def inner_words():
        for i in range(cfg.points):
            g = models.random_word("V1", rng, 4)
            xs = [_rand_mat3(rng, 50) for _ in range(3)]
            if inv.p_invariant(*models.act_tuple(g, xs)) != inv.p_invariant(*xs):
                return False, True, False, {"seed": cfg.seed, "sample": i, "word": g.to_json()}
        return True, True, True

    def outer():
        x, y, z = (_rand_mat3(rng, 50) for _ in range(3))
        p = inv.p_invariant(x, y, z)
        pt = inv.p_invariant(x.transpose(), y.transpose(), z.transpose())
        return pt != p and pt == inv.p_invariant(z, y, x), "changes", "changes" if pt != p else "unchanged"

    def difference():
        for i in range(cfg.points):
            z = _rand_mat3(rng, cfg.height)
            a1, a2 = random_scalar(rng, cfg.height), random_scalar(rng, cfg.height)
            y = models.Mat3([[a1, 0, 0], [0, a2, 0], [0, 0, 0]])
            e = models.Mat3.identity()
            lhs = inv.p_invariant(e, y, z) - inv.p_invariant(z, y, e)
            zz = lambda i, j: z[i - 1, j - 1]
            rhs = a1 * a2 * (a1 - a2) * (zz(1, 3) * zz(3, 2) * zz(2, 1) - zz(3, 1) * zz(1, 2) * zz(2, 3))
            if lhs != rhs:
                return False, rhs, lhs, {"seed": cfg.seed, "sample": i}
        return True, "formula", "formula"

    yield run("P-lie-invariance", "V1", lie_level)
    yield run("P-inner-word-invariance", "V1", inner_words)
    yield run("P-outer-noninvariance", "V1", outer)
    yield run("P-difference-formula", "V1", difference)


def suite_alt5(cfg: Config) -> Iterator[Check]:
    rng = random.Random(cfg.seed)
    for alg in _algs(cfg, (CompAlgebra.R, CompAlgebra.C, CompAlgebra.H)):
        xs = [random_herm(alg, rng, 20) for _ in range(5)]
        if alg is CompAlgebra.C:
            xs = [_rand_mat3(rng, 20) for _ in range(5)]
        val = inv.alt5(*xs)

        def alternating(xs=xs, val=val):
            for i in range(5):
                for j in range(i + 1, 5):
                    ys = list(xs)
                    ys[i], ys[j] = ys[j], ys[i]
                    if inv.alt5(*ys) != -val:
                        return False, True, False, {"swap": [i + 1, j + 1]}
            return True, True, True

        if alg is CompAlgebra.R:
            # no claim either way on V0; the value is reported only
            yield run("alt5-value-measured", alg.jordan_name, lambda v=val: (True, None, gauss_to_json(v)))
            continue
        yield run("alt5-alternating", alg.jordan_name, alternating)
        yield run("alt5-bruteforce", alg.jordan_name, lambda xs=xs, v=val: (inv.alt5_bruteforce(*xs) == v, True, inv.alt5_bruteforce(*xs) == v))
        yield run("alt5-nonzero", alg.jordan_name, lambda v=val: (bool(v), "nonzero", "nonzero" if v else "zero"))


def suite_f11_tilde(cfg: Config) -> Iterator[Check]:
    for alg in _algs(cfg):

        def rel(a=alg):
            rng = random.Random(cfg.seed * 13 + a.value)
            for i in range(cfg.points):
                g = [[random_scalar(rng, 20) for _ in range(3)] for _ in range(3)]
                if not models.det3(g):
                    continue
                xs = [random_herm(a, rng, 50) for _ in range(3)]
                if inv.f11_tilde(*models.gl3_mix(g, xs)) != models.det3(g) ** 2 * inv.f11_tilde(*xs):
                    return False, "det(g)^2", "other", _herm_witness(cfg.seed, i, xs)
            return True, "det(g)^2", "det(g)^2"

        yield run("f11-tilde-relative-invariance", alg.jordan_name, rel)


DIM_CASES = (
    ("V0", 1, 3, "G", 1),
    ("V0", 2, 3, "G", 4),
    ("V0", 3, 3, "G", 10),
    ("V1", 3, 3, "Go", 10),
    ("V0", 1, 1, "G", 0),
    ("V0", 2, 2, "G", 0),
    ("V3", 3, 3, "G", 10),
)


def suite_dims(cfg: Config) -> Iterator[Check]:
    for a, p, d, grp, want in DIM_CASES:
        if a not in cfg.algebras:
            continue
        yield run(
            f"invariant-dim-p{p}-d{d}-{grp}",
            a,
            lambda a=a, p=p, d=d, g=grp, w=want: (lambda got: (got == w, w, got))(dim.invariant_dimension(a, p, d, g, cap=cfg.monomial_cap)),
        )
    if "V0" in cfg.algebras:
        yield run(
            "product-rank-deg6-3V0",
            "V0",
            lambda: (lambda got: (got == 56, 56, got))(dim.product_rank(inv.gens_p3_coords, [3] * 10 + [6], "V0", 3, 6, 60, cfg.seed)),
        )


def suite_poincare(cfg: Config) -> Iterator[Check]:
    got = dim.poincare_coeffs(9)
    yield run("poincare-series", None, lambda: ([got[0], got[3], got[6], got[9]] == [1, 10, 56, 231], [1, 10, 56, 231], [got[0], got[3], got[6], got[9]]))


def suite_realize(cfg: Config) -> Iterator[Check]:
    tol = cfg.tolerance

    def grid(kind):
        worst = 0.0
        for lam, mu in realize.example_grid():
            try:
                if kind == "fermat":
                    res = realize.realize_fermat_v0(lam, tol)
                else:
                    res = realize.realize_with_mu_v1(lam, mu, tol)
            except realize.SolverFailure as exc:
                return False, tol, str(exc), {"lambda": lam, "mu": mu}
            worst = max(worst, res.residual)
        return worst <= tol, f"<= {tol}", worst

    def binary():
        worst = 0.0
        for coeffs in itertools.product((-2, -1, 0, 1, 2), repeat=4):
            if not any(coeffs):
                continue
            worst = max(worst, realize.realize_binary_cubic(coeffs, "V0", tol).residual)
        return worst <= tol, f"<= {tol}", worst

    yield run("realize-binary-cubic", None, binary)
    yield run("realize-fermat-v0", "V0", lambda: grid("fermat"))
    yield run("realize-with-mu-v1", "V1", lambda: grid("mu"))


SUITES: dict[str, Callable[[Config], Iterator[Check]]] = {
    "composition": suite_composition,
    "jordan": suite_jordan,
    "peirce": suite_peirce,
    "lie-dim": suite_lie_dim,
    "lie-equivariance": suite_lie_equivariance,
    "invariance": suite_invariance,
    "jacobian": suite_jacobian,
    "finite-action": suite_finite_action,
    "p-invariant": suite_p_invariant,
    "alt5": suite_alt5,
    "f11-tilde": suite_f11_tilde,
    "dims": suite_dims,
    "poincare": suite_poincare,
    "realize": suite_realize,
}


def run_suites(cfg: Config) -> list[Check]:
    names = cfg.suites or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise UnknownSuite(f"unknown suite {n!r}; known: {', '.join(SUITES)}")
    checks: list[Check] = []
    for n in names:
        for c in SUITES[n](cfg):
            c.name = f"{n}/{c.name}"
            checks.append(c)
    return checks


def summarize(checks: list[Check]) -> dict:
    out = {"pass": 0, "fail": 0, "skip": 0}
    for c in checks:
        out[c.status] += 1
    return out
