import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from milnorfib.ideals import (
    EMPTY_DIMENSION,
    Ideal,
    contains_ideal,
    eliminate,
    groebner,
    ideal_dimension,
    ideal_member,
    ideals_equal,
    intersect,
    normal_form,
    radical_member,
    saturate,
    standard_basis,
)
from milnorfib.poly import DEGREVLEX, LEX, LOCAL, Polynomial

from conftest import P, polynomials, sympy_expr
from oracles import normalized, sympy_reduced_groebner

XYZ = ("x", "y", "z")


def I(*texts, vars="x,y,z"):
    return Ideal([P(t, vars) for t in texts], vars.split(","))


def s_polynomial(f, g, order):
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    return (f.mul_term(tuple(a - b for a, b in zip(lcm, mf)), 1 / cf)
            - g.mul_term(tuple(a - b for a, b in zip(lcm, mg)), 1 / cg))


def assert_buchberger_criterion(G):
    for i, f in enumerate(G.basis):
        for g in G.basis[i + 1:]:
            assert normal_form(s_polynomial(f, g, G.order), G).is_zero()


def test_groebner_examples():
    assert set(groebner(I("x", "y^2+z^2")).basis) == {P("x"), P("y^2+z^2")}
    G = groebner(I("x-y", "y^2", vars="x,y"), LEX)
    assert set(G.basis) == {P("x-y", "x,y"), P("y^2", "x,y")}
    J = I("x*y", "x*z", "x^2-y^2-z^2")
    assert normal_form(P("x^3"), J.gb).is_zero()


def test_normal_form_examples():
    G = groebner(I("x"))
    assert normal_form(P("x^2"), G).is_zero()
    assert normal_form(P("y^2+x"), G) == P("y^2")


def test_membership_examples():
    assert ideal_member(P("x"), I("x", "y"))
    assert not ideal_member(P("x"), I("x^2"))
    assert P("x^3") in I("x*y", "x*z", "x^2-y^2-z^2")


def test_radical_examples():
    assert radical_member(P("x"), I("x^2"))
    assert not radical_member(P("y"), I("x^2"))
    assert radical_member(P("x"), I("x*y", "x*z", "x^2-y^2-z^2"))


def test_eliminate_examples():
    E = eliminate(I("x-t", "y-t", vars="t,x,y"), ["t"])
    assert E.vars == ("x", "y")
    assert ideals_equal(E, I("x-y", vars="x,y"))
    E = eliminate(I("1-t*x", "x*y", vars="t,x,y"), ["t"])
    assert ideals_equal(E, I("y", vars="x,y"))
    J = I("x*y", "x^2-z")
    assert ideals_equal(eliminate(J, []), J)


def test_saturate_examples():
    S = saturate(I("2*x*(x^2-y^2-z^2)"), I("x*y", "x*z"))
    assert ideals_equal(S, I("x^2-y^2-z^2"))
    assert saturate(I("x^2"), I("x")).is_unit()
    J = I("x*y", "z^3")
    assert ideals_equal(saturate(J, I("1")), J)


def test_intersect():
    K = intersect(I("x"), I("y"))
    assert ideals_equal(K, I("x*y"))


def test_dimension_examples():
    assert ideal_dimension(I("x", "y", "z")) == 0
    assert ideal_dimension(I("x*y", "x*z")) == 2
    assert ideal_dimension(I("1")) == EMPTY_DIMENSION
    assert ideal_dimension(Ideal([], XYZ)) == 3


def test_local_standard_basis_examples():
    G = standard_basis(I("3*z1^2", "-2*z2", vars="z1,z2"), LOCAL)
    assert sorted(G.leading_monomials()) == [(0, 1), (2, 0)]
    assert standard_basis(I("1+x", vars="x"), LOCAL).is_unit()
    G = standard_basis(I("x-x^2", vars="x"), LOCAL)
    assert G.leading_monomials() == [(1,)]


def test_against_sympy_groebner():
    cases = [("x*y-z", "y*z-x", "x*z-y"), ("x^2+y^2-1", "x-y*z"), ("x^3-y", "y^2-x*z", "z^2")]
    for gens in cases:
        ours = groebner(I(*gens))
        syms = sympy.symbols("x y z")
        exprs = [sympy.sympify(g.replace("^", "**")) for g in gens]
        ref = sympy_reduced_groebner(exprs, syms)
        mine = normalized([sympy_expr(g, syms) for g in ours.basis], syms)
        assert mine == ref


def test_determinism():
    gens = ("x^2*y-z", "y^3-x*z", "x*y*z-1")
    a = [g.to_text() for g in groebner(I(*gens)).basis]
    b = [g.to_text() for g in groebner(I(*reversed(gens))).basis]
    assert a == b


ideal_gens = st.lists(polynomials(XYZ, max_deg=3, max_terms=3, coeff=3, constant=False),
                      min_size=1, max_size=3)
coeffs = st.lists(polynomials(XYZ, max_deg=2, max_terms=3, coeff=3), min_size=3, max_size=3)
fast = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@fast
@given(ideal_gens)
def test_property_s_polynomials_reduce(gens):
    assert_buchberger_criterion(groebner(Ideal(gens, XYZ)))


@fast
@given(ideal_gens)
def test_property_basis_generates_input(gens):
    J = Ideal(gens, XYZ)
    assert all(ideal_member(g, J) for g in gens)
    assert all(ideal_member(g, Ideal(gens, XYZ)) for g in J.gb.basis)


@fast
@given(ideal_gens, coeffs)
def test_property_membership_soundness(gens, cs):
    combo = sum((c * g for c, g in zip(cs, gens)), Polynomial.zero(XYZ))
    assert ideal_member(combo, Ideal(gens, XYZ))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideal_gens, polynomials(XYZ, max_deg=2, max_terms=2, coeff=3, constant=False))
def test_property_saturation(gens, j):
    J0 = Ideal(gens, XYZ)
    if j.is_zero():
        return
    J = Ideal([j], XYZ)
    S = saturate(J0, J)
    assert contains_ideal(S, J0)
    assert ideals_equal(saturate(S, J), S)


@fast
@given(ideal_gens, ideal_gens)
def test_property_dimension_antitone(gens, extra):
    small, big = Ideal(gens, XYZ), Ideal(gens + extra, XYZ)
    assert ideal_dimension(small) >= ideal_dimension(big)


@fast
@given(ideal_gens)
def test_property_local_basis_contains_generators(gens):
    # every generator has zero weak normal form against the standard basis
    J = Ideal(gens, XYZ)
    G = standard_basis(J, LOCAL)
    assert all(normal_form(g, G).is_zero() for g in gens)
