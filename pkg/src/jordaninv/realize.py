"""Machine-precision constructions of tuples with a prescribed cubic form.

Three solvers:

* ``realize_binary_cubic``: a diagonal pair (x, y) with det(ax + by)
  proportional to a given binary cubic;
* ``realize_fermat_v0``: (e, e1 + zeta e2 + zeta^2 e3, z) in V0 with
  det(ax + by + cz) = a^3 + b^3 + c^3 + lam abc;
* ``realize_with_mu_v1``: the same cubic form in the Mat(3) model of V1
  with the additional value f11~ = mu.

Points are complex 3x3 numpy arrays.  Diagonal points have the same matrix
in every algebra, and V0/V1 points use their matrix models, where the
sharp map is the classical adjugate.  Every result is re-checked by an
independent numerical evaluation of det(ax + by + cz), interpolated on a
fixed grid, and of f11~ via adjugates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

ZETA = np.exp(2j * np.pi / 3)
TOLERANCE = 1e-9

BINARY_EXPONENTS = ((3, 0), (2, 1), (1, 2), (0, 3))
TERNARY_EXPONENTS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))


class DegenerateForm(ValueError):
    pass


class SolverFailure(RuntimeError):
    pass


@dataclass
class RealizationResult:
    kind: str
    algebra: str
    elements: list[np.ndarray]
    target: list[complex]
    achieved: list[complex]
    residual: float
    branch: int
    scale: complex = 1.0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.residual <= self.extra.get("tolerance", TOLERANCE)

    def to_json(self) -> dict:
        def cpx(v):
            v = complex(v)
            return [v.real, v.imag]

        return {
            "kind": self.kind,
            "algebra": self.algebra,
            "elements": [[[cpx(v) for v in row] for row in m] for m in self.elements],
            "target": [cpx(v) for v in self.target],
            "achieved": [cpx(v) for v in self.achieved],
            "scale": cpx(self.scale),
            "residual": self.residual,
            "branch": self.branch,
            **{k: (cpx(v) if isinstance(v, complex) else v) for k, v in self.extra.items()},
        }


# ---------------------------------------------------------------------------
# approximate clone of det, sharp, chi and f11~ on 3x3 matrices


def det3(m: np.ndarray) -> complex:
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def adjugate(m: np.ndarray) -> np.ndarray:
    out = np.empty((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != j]
            c = [k for k in range(3) if k != i]
            minor = m[r[0], c[0]] * m[r[1], c[1]] - m[r[0], c[1]] * m[r[1], c[0]]
            out[i, j] = minor if (i + j) % 2 == 0 else -minor
    return out


def _cross(x, y):
    return adjugate(x + y) - adjugate(x) - adjugate(y)


def _f(x, y, z) -> complex:
    return np.trace(_cross(x, y) @ z)


def _grid(k: int):
    """Principal lattice of degree 3: unisolvent for cubic forms."""
    if k == 2:
        return [(i, 3 - i) for i in range(4)]
    return [(i, j, 3 - i - j) for i in range(4) for j in range(4 - i)]


def cubic_coeffs(elements) -> np.ndarray:
    """Coefficients of det(sum a_k x_k) by interpolation on a fixed grid."""
    k = len(elements)
    exps = BINARY_EXPONENTS if k == 2 else TERNARY_EXPONENTS
    pts = _grid(k)
    A = np.array([[np.prod([float(a) ** e for a, e in zip(p, ex)]) for ex in exps] for p in pts])
    v = np.array([det3(sum(a * x for a, x in zip(p, elements))) for p in pts])
    return np.linalg.solve(A, v)


def f11_tilde(x, y, z) -> complex:
    xx, yy, zz = _cross(x, x), _cross(y, y), _cross(z, z)
    f4, f5, f6 = _f(x, x, y), _f(x, x, z), _f(y, y, x)
    f7, f8, f9 = _f(y, y, z), _f(z, z, x), _f(z, z, y)
    f10, f11 = _f(x, y, z), _f(xx, yy, zz)
    return f11 - 2 / 3 * (f4 * f9 + f5 * f7 + f6 * f8) + 2 / 3 * f10**2


def _residual(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex))))


def fermat_target(lam) -> np.ndarray:
    t = np.zeros(10, dtype=complex)
    t[0] = t[6] = t[9] = 1
    t[4] = lam
    return t


# ---------------------------------------------------------------------------
# solvers


def _sorted_roots(poly) -> list[complex]:
    roots = np.roots(poly) if len(poly) > 1 else np.array([])
    return sorted((complex(r) for r in roots), key=lambda r: (-round(r.real, 12), -round(r.imag, 12)))


def realize_binary_cubic(coeffs, algebra: str = "V0", tolerance: float = TOLERANCE) -> RealizationResult:
    """Diagonal (x, y) with chi(x, y) = P / lam.

    P = lam * b^(3-N) * prod_{i<=N} (a - alpha_i b) where lam is the first
    nonzero coefficient; x = e_1 + ... + e_N and y = -sum alpha_i e_i plus
    the remaining idempotents.
    """
    c = np.asarray(coeffs, dtype=complex)
    if c.shape != (4,):
        raise ValueError("binary cubic needs four coefficients (a^3, a^2b, ab^2, b^3)")
    nz = [i for i in range(4) if abs(c[i]) > 0]
    if not nz:
        raise DegenerateForm("the zero form has no realization")
    k = nz[0]
    n_roots = 3 - k
    lam = c[k]
    alphas = _sorted_roots(c[k:] / lam)
    x = np.diag([1.0 + 0j if i < n_roots else 0j for i in range(3)])
    y = np.diag([-alphas[i] if i < n_roots else 1.0 + 0j for i in range(3)])
    target = c / lam
    achieved = cubic_coeffs([x, y])
    return RealizationResult(
        "binary",
        algebra,
        [x, y],
        list(target),
        list(achieved),
        _residual(achieved, target),
        0,
        lam,
        {"tolerance": tolerance, "roots": [[r.real, r.imag] for r in alphas]},
    )


def _fermat_diagonal(lam) -> list[complex]:
    return [-lam / 3, -lam / 3 * ZETA**2, -lam / 3 * ZETA]


def realize_fermat_v0(lam, tolerance: float = TOLERANCE) -> RealizationResult:
    """(e, diag(1, zeta, zeta^2), z) with det(ax+by+cz) = a^3+b^3+c^3+lam abc.

    z is symmetric with off-diagonal entries p = s1 zeta r, q = s2 zeta^2 r
    (positions (2,1), (3,1), (3,2) hold p, q, r) where r solves
    2 s1 s2 r^3 + lam r^2 = 1 + lam^3/27.  Branches are tried in the order
    (s1, s2) = (1,1), (1,-1), (-1,1), (-1,-1), then by root.
    """
    lam = complex(lam)
    x = np.eye(3, dtype=complex)
    y = np.diag([1, ZETA, ZETA**2])
    target = fermat_target(lam)
    best = None
    branch = 0
    for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        for r in _sorted_roots([2 * s1 * s2, lam, 0, -(1 + lam**3 / 27)]):
            z = np.diag(_fermat_diagonal(lam)).astype(complex)
            p, q = s1 * ZETA * r, s2 * ZETA**2 * r
            z[1, 0] = z[0, 1] = p
            z[2, 0] = z[0, 2] = q
            z[2, 1] = z[1, 2] = r
            achieved = cubic_coeffs([x, y, z])
            res = _residual(achieved, target)
            result = RealizationResult("fermat", "V0", [x, y, z], list(target), list(achieved), res, branch, 1.0, {"tolerance": tolerance})
            if res <= tolerance:
                return result
            if best is None or res < best.residual:
                best = result
            branch += 1
    raise SolverFailure(f"no branch within tolerance; best residual {best.residual:.3e}")


def realize_with_mu_v1(lam, mu, tolerance: float = TOLERANCE) -> RealizationResult:
    """Triple in Mat(3) with the Fermat-family cubic form and f11~ = mu.

    x = I, y = diag(1, zeta, zeta^2), z with diagonal -lam/3 (1, zeta^2,
    zeta) and off-diagonal products z12 z21 = zeta^2 nu/8,
    z13 z31 = zeta nu/8, z23 z32 = nu/8 where nu = (mu + 2 lam^2)/3, and
    z12 z23 z31 + z21 z13 z32 = 1 + lam^3/27 - lam nu/8.  The two cyclic
    products u, v are the roots of t^2 - S t + (nu/8)^3.
    """
    lam, mu = complex(lam), complex(mu)
    nu = (mu + 2 * lam**2) / 3
    s = 1 + lam**3 / 27 - lam * nu / 8
    w = nu / 8
    x = np.eye(3, dtype=complex)
    y = np.diag([1, ZETA, ZETA**2])
    target = list(fermat_target(lam)) + [mu]
    best = None
    for branch, u in enumerate(_sorted_roots([1, -s, w**3])):
        z = np.diag(_fermat_diagonal(lam)).astype(complex)
        if abs(u) > 1e-12:
            z[0, 1] = z[1, 2] = 1
            z[2, 0] = u
            z[1, 0] = ZETA**2 * w
            z[2, 1] = w
            z[0, 2] = ZETA * w / u
        else:
            z[1, 0] = z[2, 1] = 1
            z[0, 2] = s
        achieved = list(cubic_coeffs([x, y, z])) + [f11_tilde(x, y, z)]
        res = _residual(achieved, target)
        result = RealizationResult(
            "mu", "V1", [x, y, z], target, achieved, res, branch, 1.0, {"tolerance": tolerance, "nu": complex(nu)}
        )
        if res <= tolerance:
            return result
        if best is None or res < best.residual:
            best = result
    raise SolverFailure(f"no branch within tolerance; best residual {best.residual:.3e}")


def example_grid(values=(-2, -1, 0, 1, 2)):
    return list(itertools.product(values, repeat=2))
