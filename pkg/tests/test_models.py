import random

import pytest
import sympy

from jordaninv.comp import CompAlgebra, CompElem
from jordaninv.exact import Rational, random_scalar
from jordaninv.inv import f11_tilde
from jordaninv.jordan import HermMat, det, jmul, sharp
from jordaninv.models import (
    BadIndex,
    GroupElem,
    Mat3,
    ModelMismatch,
    SingularMatrix,
    WrongAlgebra,
    act,
    act_tuple,
    det3,
    elementary,
    gl3_mix,
    identity_elem,
    matrix_of,
    random_word,
    split_iso,
    split_iso_inv,
    transpose_elem,
)

from conftest import rand_herm, to_sympy

MODEL_ALG = {"V0": "R", "V1": "C", "V2": "H"}


def rand_mat3(rng, h=30):
    return Mat3([[random_scalar(rng, h) for _ in range(3)] for _ in range(3)])


# --- elementary matrices --------------------------------------------------------


def test_elementary_inverse():
    lam = Rational(5, 3)
    g = elementary(2, 1, lam) * elementary(2, 1, -lam)
    assert matrix_of(g) == Mat3.identity()


def test_elementary_det():
    assert matrix_of(elementary(1, 3, Rational(7))).det() == 1


def test_elementary_quaternion_inverse():
    f2 = CompElem.basis("H", 2)
    g = matrix_of(elementary(1, 2, f2, model="V2"))
    ginv = Mat3.identity("H") - Mat3.unit(1, 2, f2, "H")
    assert g @ ginv == Mat3.identity("H") == ginv @ g


@pytest.mark.parametrize("i,j", [(1, 1), (0, 2), (2, 4)])
def test_bad_index(i, j):
    with pytest.raises(BadIndex):
        elementary(i, j, 1)


# --- actions --------------------------------------------------------------------


@pytest.mark.parametrize("model", ["V0", "V1", "V2"])
def test_identity_acts_trivially(model, rng):
    x = rand_herm(MODEL_ALG[model], rng)
    assert act(identity_elem(model), x) == x


def test_v0_elementary_on_unit():
    g = elementary(2, 1, Rational(3))
    m = matrix_of(g)
    out = act(g, Mat3.identity())
    assert out == m @ m.transpose()
    assert out.det() == 1


def test_v1_transpose_involution(rng):
    x = rand_mat3(rng)
    t = transpose_elem()
    assert act(t, x) == x.transpose()
    assert act(t * t, x) == x


@pytest.mark.parametrize("model", ["V0", "V1", "V2"])
def test_action_preserves_det_and_composes(model):
    rng = random.Random(hash(model) % 1000)
    alg = MODEL_ALG[model]
    for _ in range(10):
        g = random_word(model, rng, 4, outer=(model == "V1"))
        h = random_word(model, rng, 3)
        x = rand_herm(alg, rng)
        gx = act(g, x)
        assert det(gx) == det(x)
        assert act(g * h, x) == act(g, act(h, x))
        assert act(g.inverse(), gx) == x


def test_v1_pair_action_matches_matrices(rng):
    g = random_word("V1", rng, 6)
    g1, g2 = matrix_of(g)
    x = rand_mat3(rng)
    assert act(g, x) == g1 @ x @ g2.inverse()


def test_v2_action_formula(rng):
    g = random_word("V2", rng, 3)
    m = matrix_of(g)
    x = rand_herm("H", rng)
    from jordaninv.models import to_model

    assert act(g, to_model(x)) == m @ to_model(x) @ m.star()


def test_model_mismatch(rng):
    with pytest.raises(ModelMismatch):
        act(elementary(1, 2, 1), rand_herm("O", rng))
    with pytest.raises(ModelMismatch):
        act(elementary(1, 2, 1, model="V2"), Mat3.identity())
    with pytest.raises(ModelMismatch):
        act(transpose_elem() * elementary(1, 2, 1), Mat3.identity("H"))


def test_group_word_json_roundtrip(rng):
    for model in ("V0", "V1", "V2"):
        g = random_word(model, rng, 3, outer=(model == "V1"))
        tokens = g.to_json()
        assert all(t["op"] in ("elem", "transpose") for t in tokens)
        assert GroupElem.from_json(model, tokens) == g


# --- split isomorphism -------------------------------------------------------------


def test_split_iso_unit_and_idempotent():
    assert split_iso(HermMat.identity("C")) == Mat3.identity()
    assert split_iso(HermMat.idempotent("C", 1)) == Mat3.unit(1, 1)


def test_split_iso_det_and_product(rng):
    for _ in range(100):
        x, y = rand_herm("C", rng), rand_herm("C", rng)
        a, b = split_iso(x), split_iso(y)
        m = sympy.Matrix(3, 3, lambda i, j: to_sympy(a[i, j]))
        assert sympy.expand(m.det() - to_sympy(det(x))) == 0
        assert split_iso(jmul(x, y)) == (a @ b + b @ a).scale(Rational(1, 2))
        assert split_iso_inv(a) == x


def test_split_iso_surjective(rng):
    a = rand_mat3(rng)
    assert split_iso(split_iso_inv(a)) == a


def test_sharp_is_adjugate(rng):
    x = rand_herm("C", rng)
    assert split_iso(sharp(x)) == split_iso(x).adjugate()


def test_split_iso_wrong_algebra(rng):
    with pytest.raises(WrongAlgebra):
        split_iso(rand_herm("H", rng))


def test_action_transport(rng):
    g = random_word("V1", rng, 4, outer=True)
    x = rand_herm("C", rng)
    assert split_iso(act(g, x)) == act(g, split_iso(x))


# --- GL3 mixing ---------------------------------------------------------------------


def test_gl3_mix_identity(rng):
    xs = [rand_herm("H", rng) for _ in range(3)]
    one = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert list(gl3_mix(one, xs)) == xs


def test_gl3_mix_rows():
    xs = [[1, 0], [0, 1], [2, 2]]
    g = [[1, 2, 3], [0, 1, 0], [1, 0, 1]]
    assert gl3_mix(g, xs) == ([7, 8], [0, 1], [3, 2])


def test_gl3_mix_scalar_degree(rng):
    xs = [rand_herm("R", rng) for _ in range(3)]
    t = random_scalar(rng, 10)
    g = [[t, 0, 0], [0, t, 0], [0, 0, t]]
    assert f11_tilde(*gl3_mix(g, xs)) == t**6 * f11_tilde(*xs)


def test_gl3_mix_det_squared(alg, rng):
    for _ in range(3):
        g = [[random_scalar(rng, 9) for _ in range(3)] for _ in range(3)]
        xs = [rand_herm(alg, rng) for _ in range(3)]
        assert f11_tilde(*gl3_mix(g, xs)) == det3(g) ** 2 * f11_tilde(*xs)


def test_gl3_mix_singular(rng):
    xs = [rand_herm("R", rng) for _ in range(3)]
    with pytest.raises(SingularMatrix):
        gl3_mix([[1, 2, 3], [2, 4, 6], [0, 0, 1]], xs)


def test_act_tuple(rng):
    g = random_word("V0", rng)
    xs = [rand_herm("R", rng) for _ in range(2)]
    assert act_tuple(g, xs) == [act(g, x) for x in xs]


def test_mat3_algebra(rng):
    a, b = rand_mat3(rng), rand_mat3(rng)
    assert (a @ b).det() == a.det() * b.det()
    assert a @ a.adjugate() == Mat3.identity().scale(a.det())
    assert a @ a.inverse() == Mat3.identity()
    assert CompAlgebra.parse("V2") is CompAlgebra.H
