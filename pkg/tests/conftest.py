import random

import pytest
from hypothesis import HealthCheck, settings

from jordaninv.comp import ALGEBRAS
from jordaninv.exact import random_scalar
from jordaninv.jordan import HermMat, dim_v

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def rand_herm(alg, rng, height=50):
    return HermMat.from_coords(alg, [random_scalar(rng, height) for _ in range(dim_v(alg))])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=ALGEBRAS, ids=lambda a: a.jordan_name)
def alg(request):
    return request.param


def to_sympy(v):
    """Exact scalar (int, rational or GaussRational) as a sympy number."""
    import sympy

    from jordaninv.exact import as_gauss

    g = as_gauss(v)
    return sympy.Rational(int(g.re.numerator), int(g.re.denominator)) + sympy.I * sympy.Rational(
        int(g.im.numerator), int(g.im.denominator)
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
