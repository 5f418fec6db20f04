from fractions import Fraction

import pytest
from hypothesis import strategies as st

from milnorfib.germ import parse_germ, parse_polynomial
from milnorfib.poly import Polynomial


def P(text, vars="x,y,z"):
    if isinstance(vars, str):
        vars = vars.split(",")
    return parse_polynomial(text, vars)


def real_germ(vars, *components):
    return parse_germ({"vars": list(vars), "field": "real", "components": list(components)})


def complex_germ(vars, *components):
    return parse_germ({"vars": list(vars), "field": "complex", "components": list(components)})


TRIV = dict(vars=["x", "y", "z", "w"], field="real", components=["x", "y*(x^2+y^2+z^2+w^2)"])
XY_XZ = dict(vars=["x", "y", "z"], field="real", components=["x*y", "x*z"])
TREFOIL = dict(vars=["z1", "z2"], field="complex", components=["z1^3 - z2^2"])
PROJ = dict(vars=["x1", "x2", "x3"], field="real", components=["x1", "x2"])


@pytest.fixture
def triv():
    return parse_germ(TRIV)


@pytest.fixture
def xy_xz():
    return parse_germ(XY_XZ)


@pytest.fixture
def trefoil():
    return parse_germ(TREFOIL)


@pytest.fixture
def proj():
    return parse_germ(PROJ)


def polynomials(vars, max_deg=3, max_terms=5, coeff=5, constant=True):
    """Hypothesis strategy for small exact polynomials in ``vars``."""
    n = len(vars)
    lo = 0 if constant else 1
    # a monomial of degree d is a multiset of d variable indices
    exps = st.lists(st.integers(0, n - 1), min_size=lo, max_size=max_deg).map(
        lambda idx: tuple(idx.count(i) for i in range(n)))
    coeffs = st.builds(Fraction, st.integers(-coeff, coeff), st.integers(1, 3))
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: Polynomial(t, vars))


def sympy_expr(p, syms=None):
    import sympy
    syms = syms or sympy.symbols(list(p.vars))
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sympy.expand(out)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
