import json
import random

from jordaninv.comp import CompAlgebra, CompElem
from jordaninv.exact import Dual, ExactMatrix, Rational, random_scalar
from jordaninv.inv import gens_p3_coords
from jordaninv.jordan import HermMat, structure
from jordaninv.lie import (
    LinOp,
    det_annihilator_dim,
    directional_invariance,
    dump_basis,
    identity_op,
    in_span,
    lie_basis,
    lmul_op,
    sharp_equivariance_check,
    stacked_rank,
)

EXPECTED = {CompAlgebra.R: 8, CompAlgebra.C: 16, CompAlgebra.H: 35, CompAlgebra.O: 78}


def test_lmul_unit_is_identity(alg):
    assert lmul_op(HermMat.identity(alg)).matrix == ExactMatrix.identity(structure(alg).n)


def test_lmul_peirce_eigenvalues(alg):
    op = lmul_op(HermMat.idempotent(alg, 1))
    e1 = HermMat.idempotent(alg, 1)
    assert op(e1) == e1
    x12 = HermMat(alg, (0, 0, 0), p=CompElem.basis(alg, 0))
    assert op(x12) == x12 * Rational(1, 2)


def test_lmul_linear(alg, rng):
    from conftest import rand_herm

    a, b = rand_herm(alg, rng), rand_herm(alg, rng)
    assert lmul_op(a + b).matrix == (lmul_op(a) + lmul_op(b)).matrix


def test_lie_dimensions(alg):
    lb = lie_basis(alg)
    assert lb.dim == EXPECTED[alg]
    assert stacked_rank(lb.ops) == lb.dim


def test_annihilator_dimensions(alg):
    assert det_annihilator_dim(alg) == EXPECTED[alg] == lie_basis(alg).dim


def test_closure(alg):
    rng = random.Random(alg.value)
    lb = lie_basis(alg)
    for _ in range(30 if alg.dim < 8 else 8):
        s, t = rng.choice(lb.ops), rng.choice(lb.ops)
        assert in_span(lb, s.commutator(t))


def test_derivations_kill_unit_and_trace(alg, rng):
    st = structure(alg)
    e = st.identity()
    for op in lie_basis(alg):
        if not op.label.startswith("["):
            continue
        assert all(v == 0 for v in op.apply(e))
        x = [random_scalar(rng, 20) for _ in range(st.n)]
        assert st.trace(op.apply(x)) == 0


def test_basis_annihilates_det(alg):
    st = structure(alg)
    for op in lie_basis(alg):
        assert directional_invariance(lambda xs: st.det(xs[0]), op, points=2, seed=1)


def test_trace_is_not_invariant(alg):
    st = structure(alg)
    T = lmul_op(HermMat.idempotent(alg, 1)) - lmul_op(HermMat.identity(alg)).scale(Rational(1, 3))
    res = directional_invariance(lambda xs: st.trace(xs[0]), T, points=5, seed=3)
    assert not res.passed
    assert res.witness["seed"] == 3 and len(res.witness["tuple"]) == 1


def test_f10_invariant_on_v3_sample():
    st = structure("O")
    lb = lie_basis("O")
    for op in lb.ops[::7]:
        assert directional_invariance(lambda xs: st.f(*xs), op, points=2, seed=0, copies=3)


def test_all_generators_invariant_small(alg):
    st = structure(alg)
    ops = lie_basis(alg).ops
    if alg is CompAlgebra.O:
        ops = ops[::13]
    for op in ops:
        assert directional_invariance(lambda xs: gens_p3_coords(st, *xs), op, points=1, seed=2, copies=3)


def test_sharp_equivariance_zero(alg):
    n = structure(alg).n
    assert sharp_equivariance_check(LinOp(ExactMatrix.zeros(n, n)), alg, points=2)


def test_sharp_equivariance_v0():
    for op in lie_basis("R"):
        assert sharp_equivariance_check(op, "R", points=20, seed=5)


def test_sharp_equivariance_rejects_nonmember(alg):
    res = sharp_equivariance_check(identity_op(alg), alg, points=3)
    assert not res.passed and res.witness is not None


def test_sharp_equivariance_dual_oracle(alg, rng):
    """eps-part of n(x + eps Tx) equals -T' n(x), computed without cross()."""
    st = structure(alg)
    for op in lie_basis(alg).ops[:5]:
        x = [random_scalar(rng, 30) for _ in range(st.n)]
        lifted = [Dual(a, b) for a, b in zip(x, op.apply(x))]
        eps = [v.deriv if isinstance(v, Dual) else 0 for v in st.sharp(lifted)]
        adj = st.adjoint_matrix(op.dense())
        nx = st.sharp(x)
        rhs = [-sum(adj[i][j] * nx[j] for j in range(st.n)) for i in range(st.n)]
        assert eps == rhs


def test_adjoint_uses_gram(alg):
    st = structure(alg)
    op = lie_basis(alg).ops[0]
    adj = st.adjoint_matrix(op.dense())
    x = [Rational(k + 1) for k in range(st.n)]
    y = [Rational(2 * k - 3) for k in range(st.n)]
    ty = op.apply(y)
    adjx = [sum(adj[i][j] * x[j] for j in range(st.n)) for i in range(st.n)]
    assert st.inner(x, ty) == st.inner(adjx, y)


def test_dump_json():
    obj = json.loads(dump_basis("V0"))
    assert obj["dim"] == 8 and obj["n"] == 6
    assert all("label" in op and op["entries"] for op in obj["ops"])
