"""Finite-dimensional local algebras O_0/I and the Milnor number."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

from .germ import MapGerm
from .ideals import GroebnerBasis, Ideal, _divides, _sub_scaled, standard_basis
from .poly import LOCAL, Polynomial
from .tags import Tag


def local_standard_basis(I: Ideal) -> GroebnerBasis:
    return standard_basis(I, LOCAL)


def _staircase(G: GroebnerBasis) -> list[tuple] | Tag:
    n = len(G.vars)
    lms = G.leading_monomials()
    if any(not any(m) for m in lms):
        return []
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            return Tag.INFINITE
        bounds.append(min(pure))
    out = [e for e in product(*(range(b) for b in bounds)) if not any(_divides(m, e) for m in lms)]
    out.sort(key=LOCAL.key, reverse=True)
    return out


def quotient_basis(I: Ideal) -> list[tuple] | Tag:
    """Standard monomials of O_0/I, or Tag.INFINITE when the quotient is infinite-dimensional."""
    return _staircase(local_standard_basis(I))


class InfiniteAlgebraError(ValueError):
    pass


class QuotientAlgebra:
    """O_0/I for an ideal with finite local colength.

    Every monomial of degree above the top of the staircase lies in I·O_0,
    so normal forms are computed modulo I + m^(top+1) and are exact.
    """

    def __init__(self, I: Ideal):
        self.ideal = I
        self.basis_sb = local_standard_basis(I)
        basis = _staircase(self.basis_sb)
        if basis is Tag.INFINITE:
            raise InfiniteAlgebraError("local quotient is infinite-dimensional")
        self.standard_monomials: list[tuple] = basis
        self.index = {m: k for k, m in enumerate(basis)}
        self.top = max((sum(m) for m in basis), default=-1)
        self._elems = [
            (g.leading_monomial(LOCAL), g.leading_term(LOCAL)[1], g.terms) for g in self.basis_sb.basis
        ]

    @property
    def dim(self) -> int:
        return len(self.standard_monomials)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.ideal.vars

    def reduce(self, q: Polynomial) -> Polynomial:
        """Unique representative of q in the span of the standard monomials."""
        top = self.top
        h = {e: c for e, c in q.terms.items() if sum(e) <= top}
        rem = {}
        key = LOCAL.key
        while h:
            m = max(h, key=key)
            c = h[m]
            for lm, lc, terms in self._elems:
                if _divides(lm, m):
                    _sub_scaled(h, terms, tuple(a - b for a, b in zip(m, lm)), c / lc)
                    for e in [e for e in h if sum(e) > top]:
                        del h[e]
                    break
            else:
                rem[m] = c
                del h[m]
        return Polynomial._raw(rem, q.vars)

    def coordinates(self, q: Polynomial) -> list[Fraction]:
        r = self.reduce(q)
        vec = [Fraction(0)] * self.dim
        for e, c in r.terms.items():
            vec[self.index[e]] = c
        return vec

    def basis_polynomial(self, k: int) -> Polynomial:
        return Polynomial.monomial(self.standard_monomials[k], self.vars)

    @cached_property
    def mult_tables(self) -> list[list[list[Fraction]]]:
        return [multiplication_matrix(self, x) for x in Polynomial.gens(self.vars)]


def multiplication_matrix(A: QuotientAlgebra, q: Polynomial) -> list[list[Fraction]]:
    """Matrix of b -> q*b; column j holds the coordinates of q times basis element j."""
    cols = [A.coordinates(q * A.basis_polynomial(j)) for j in range(A.dim)]
    return [[cols[j][i] for j in range(A.dim)] for i in range(A.dim)]


@dataclass(frozen=True)
class MilnorResult:
    mu: int | Tag
    basis_witness: tuple[tuple, ...] | None

    @property
    def finite(self) -> bool:
        return self.mu is not Tag.INFINITE


def jacobian_ideal(f: Polynomial) -> Ideal:
    return Ideal(f.gradient(), f.vars)


def milnor_number_of(f: Polynomial) -> MilnorResult:
    basis = quotient_basis(jacobian_ideal(f))
    if basis is Tag.INFINITE:
        return MilnorResult(Tag.INFINITE, None)
    return MilnorResult(len(basis), tuple(basis))


def milnor_number(g: MapGerm) -> MilnorResult:
    """dim O_0/<∂g/∂x_1, ..., ∂g/∂x_n> for a single-component germ."""
    if g.p != 1:
        raise ValueError(f"the Milnor number needs a single component, got p={g.p}")
    return milnor_number_of(g.components[0])


def matrix_substitute(f: Polynomial, mats: Sequence[list[list[Fraction]]]) -> list[list[Fraction]]:
    """Evaluate f at commuting matrices (used to check the defining relations)."""
    d = len(mats[0]) if mats else 0

    def mm(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d)] for i in range(d)]

    ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    total = [[Fraction(0)] * d for _ in range(d)]
    for e, c in f.terms.items():
        t = ident
        for M, k in zip(mats, e):
            for _ in range(k):
                t = mm(t, M)
        total = [[total[i][j] + c * t[i][j] for j in range(d)] for i in range(d)]
    return total
