import itertools

import pytest
import sympy

from jordaninv.comp import CompAlgebra
from jordaninv.exact import Rational, random_scalar
from jordaninv.inv import (
    CUBIC3_EXPONENTS,
    alt5,
    alt5_bruteforce,
    chi,
    eval_cubic,
    f11_tilde,
    gens_p2,
    gens_p3,
    jacobian_rank,
    p_invariant,
)
from jordaninv.jordan import HermMat, cross, det, e, trilinear_f
from jordaninv.models import Mat3, act_tuple, det3, gl3_mix, random_word, split_iso

from conftest import rand_herm, to_sympy


def idem(alg, i):
    return HermMat.idempotent(alg, i)


# --- two copies -------------------------------------------------------------------


def test_p2_unit_pair(alg):
    assert gens_p2(e(alg), e(alg)) == [6, 6, 6, 6]


def test_p2_idempotents(alg):
    assert gens_p2(idem(alg, 1), idem(alg, 2)) == [0, 0, 0, 0]


def test_p2_singular_diagonal(alg):
    y = HermMat.diagonal(alg, 1, -1, 0)
    assert gens_p2(e(alg), y)[1] == 6 * det(y) == 0


# --- three copies -------------------------------------------------------------------


def test_p3_definitions(alg, rng):
    x, y, z = (rand_herm(alg, rng, 9) for _ in range(3))
    f = gens_p3(x, y, z)
    want = [
        trilinear_f(x, x, x),
        trilinear_f(y, y, y),
        trilinear_f(z, z, z),
        trilinear_f(x, x, y),
        trilinear_f(x, x, z),
        trilinear_f(y, y, x),
        trilinear_f(y, y, z),
        trilinear_f(z, z, x),
        trilinear_f(z, z, y),
        trilinear_f(x, y, z),
        trilinear_f(cross(x, x), cross(y, y), cross(z, z)),
    ]
    assert f == want


def test_p3_f11_vanishes_on_idempotents(alg, rng):
    assert gens_p3(idem(alg, 1), idem(alg, 2), rand_herm(alg, rng))[10] == 0


def test_p3_units(alg):
    f = gens_p3(e(alg), e(alg), e(alg))
    assert f[9] == 6 and f[10] == 48


def test_p3_invariant_under_v0_word(rng):
    g = random_word("V0", rng, 5)
    xs = [rand_herm("R", rng) for _ in range(3)]
    assert gens_p3(*act_tuple(g, xs)) == gens_p3(*xs)


# --- f11 tilde ---------------------------------------------------------------------------


def test_f11_tilde_on_idempotents(alg, rng):
    z = rand_herm(alg, rng)
    assert f11_tilde(idem(alg, 1), idem(alg, 2), z) == Rational(2, 3) * z.diag[2] ** 2


def test_f11_tilde_homogeneous(alg, rng):
    xs = [rand_herm(alg, rng) for _ in range(3)]
    t = random_scalar(rng, 20)
    assert f11_tilde(*(x * t for x in xs)) == t**6 * f11_tilde(*xs)


def test_f11_tilde_index_transposition_breaks_law(rng):
    """Swapping two f-indices in the combination destroys the det^2 law."""
    from jordaninv.inv import TWO_THIRDS

    xs = [rand_herm("R", rng) for _ in range(3)]
    g = [[random_scalar(rng, 9) for _ in range(3)] for _ in range(3)]

    def wrong(ys):
        f = gens_p3(*ys)
        return f[10] - (f[3] * f[7] + f[4] * f[6] + f[5] * f[8]) * TWO_THIRDS + f[9] ** 2 * TWO_THIRDS

    assert wrong(gl3_mix(g, xs)) != det3(g) ** 2 * wrong(xs)


# --- chi ---------------------------------------------------------------------------------


def test_chi_unit_pair(alg):
    assert chi([e(alg), e(alg)]) == [1, 3, 3, 1]


def test_chi_leading_coefficient(alg, rng):
    x = rand_herm(alg, rng)
    y = HermMat.diagonal(alg, 1, -1, 0)
    assert chi([x, y])[0] == det(x)
    assert chi([x, y, rand_herm(alg, rng)])[0] == det(x)


def test_chi_matches_direct_evaluation(alg, rng):
    xs = [rand_herm(alg, rng, 9) for _ in range(3)]
    coeffs = chi(xs)
    for _ in range(5):
        a, b, c = (random_scalar(rng, 9) for _ in range(3))
        assert eval_cubic(coeffs, (a, b, c)) == det(xs[0] * a + xs[1] * b + xs[2] * c)
    c2 = chi(xs[:2])
    a, b = random_scalar(rng, 9), random_scalar(rng, 9)
    assert eval_cubic(c2, (a, b)) == det(xs[0] * a + xs[1] * b)


def test_chi_abc_coefficient_is_f10(alg, rng):
    xs = [rand_herm(alg, rng) for _ in range(3)]
    assert chi(xs)[4] == trilinear_f(*xs)
    assert chi(xs[:2])[1] == trilinear_f(xs[0], xs[0], xs[1]) / 2


def test_chi_gl3_substitution(rng):
    xs = [rand_herm("H", rng, 9) for _ in range(3)]
    g = [[random_scalar(rng, 5) for _ in range(3)] for _ in range(3)]
    a, b, c = sympy.symbols("a b c")

    def form(coeffs, args):
        return sum(to_sympy(k) * args[0] ** i * args[1] ** j * args[2] ** l for k, (i, j, l) in zip(coeffs, CUBIC3_EXPONENTS))

    gs = [[to_sympy(v) for v in row] for row in g]
    sub = [a * gs[0][j] + b * gs[1][j] + c * gs[2][j] for j in range(3)]
    oracle = sympy.expand(form(chi(xs), sub))
    mine = sympy.expand(form(chi(list(gl3_mix(g, xs))), (a, b, c)))
    assert sympy.expand(oracle - mine) == 0


# --- P on Mat(3) ----------------------------------------------------------------------


def rand_mat3(rng, h=30):
    return Mat3([[random_scalar(rng, h) for _ in range(3)] for _ in range(3)])


def test_p_identity():
    one = Mat3.identity()
    assert p_invariant(one, one, one) == 3


def test_p_difference_formula(rng):
    for _ in range(20):
        z = rand_mat3(rng, 100)
        a1, a2 = random_scalar(rng, 100), random_scalar(rng, 100)
        y = Mat3([[a1, 0, 0], [0, a2, 0], [0, 0, 0]])
        one = Mat3.identity()
        zz = lambda i, j: z[i - 1, j - 1]
        rhs = a1 * a2 * (a1 - a2) * (zz(1, 3) * zz(3, 2) * zz(2, 1) - zz(3, 1) * zz(1, 2) * zz(2, 3))
        assert p_invariant(one, y, z) - p_invariant(z, y, one) == rhs


def test_p_transpose_rule(rng):
    x, y, z = (rand_mat3(rng) for _ in range(3))
    assert p_invariant(x.transpose(), y.transpose(), z.transpose()) == p_invariant(z, y, x)
    assert p_invariant(x, y, z) != p_invariant(z, y, x)


def test_p_inner_invariance(rng):
    for _ in range(5):
        g = random_word("V1", rng, 5)
        xs = [rand_mat3(rng) for _ in range(3)]
        assert p_invariant(*act_tuple(g, xs)) == p_invariant(*xs)


def test_p_accepts_hermmat(rng):
    xs = [rand_herm("C", rng) for _ in range(3)]
    assert p_invariant(*xs) == p_invariant(*(split_iso(x) for x in xs))


# --- alt5 ---------------------------------------------------------------------------------


def test_alt5_repeated_argument(rng):
    x, y, z, w = (rand_mat3(rng) for _ in range(4))
    assert alt5(x, y, x, z, w) == 0


@pytest.mark.parametrize("alg", ["C", "H"])
def test_alt5_matches_bruteforce_and_nonzero(alg, rng):
    xs = [rand_herm(alg, rng, 9) for _ in range(5)]
    v = alt5(*xs)
    assert v != 0
    assert v == alt5_bruteforce(*xs)


def test_alt5_alternating(rng):
    xs = [rand_mat3(rng) for _ in range(5)]
    v = alt5(*xs)
    for i, j in itertools.combinations(range(5), 2):
        ys = list(xs)
        ys[i], ys[j] = ys[j], ys[i]
        assert alt5(*ys) == -v


def test_alt5_multilinear(rng):
    xs = [rand_mat3(rng) for _ in range(5)]
    u = rand_mat3(rng)
    t = random_scalar(rng, 10)
    ys = [xs[0] + u.scale(t)] + xs[1:]
    assert alt5(*ys) == alt5(*xs) + t * alt5(u, *xs[1:])


# --- Jacobians ------------------------------------------------------------------------------


def test_jacobian_ranks(alg):
    assert jacobian_rank(alg, 2, seed=11) == 4
    assert jacobian_rank(alg, 3, seed=11) == (10 if alg is CompAlgebra.R else 11)
