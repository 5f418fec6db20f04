"""Local topological degree of a gradient map via the signature of a residue pairing.

For f with an algebraically isolated critical point at 0, let A be the local
algebra of its gradient ideal and h the Hessian determinant.  Any linear
functional phi on A with phi(h) > 0 makes (a, b) -> phi(a*b) nondegenerate,
and the degree of grad f / |grad f| equals the signature of that form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .germ import MapGerm
from .local import QuotientAlgebra, jacobian_ideal, quotient_basis
from .poly import LOCAL, Polynomial, hessian_determinant
from .tags import Tag

Matrix = Sequence[Sequence[Fraction]]


def _hessenberg(M: Matrix) -> list[list[Fraction]]:
    """Upper Hessenberg matrix similar to M (exact Gaussian similarity transforms)."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if A[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            A[piv], A[j + 1] = A[j + 1], A[piv]
            for row in A:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        pivot_row = A[j + 1]
        for r in range(j + 2, n):
            if not A[r][j]:
                continue
            u = A[r][j] / pivot_row[j]
            A[r] = [a - u * b for a, b in zip(A[r], pivot_row)]
            for row in A:
                if row[r]:
                    row[j + 1] += u * row[r]
    return A


def charpoly(M: Matrix) -> list[Fraction]:
    """Coefficients [c_0, ..., c_n] of det(lambda*I - M).

    M is first brought to Hessenberg form; the leading principal minors of
    lambda*I - H then obey a short recurrence, for O(n^3) work overall.
    """
    n = len(M)
    H = _hessenberg(M)
    polys = [[Fraction(1)]]  # polys[k] = charpoly of the leading k x k block
    for k in range(n):
        nxt = [Fraction(0)] + polys[k]
        for t, c in enumerate(polys[k]):
            nxt[t] -= H[k][k] * c
        prod = Fraction(1)
        for i in range(k - 1, -1, -1):
            prod *= H[i + 1][i]
            if not prod:
                break
            coef = H[i][k] * prod
            if coef:
                for t, c in enumerate(polys[i]):
                    nxt[t] -= coef * c
        polys.append(nxt)
    return polys[n]


def _sign_variations(seq: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in seq if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature(M: Matrix) -> int:
    """#positive - #negative eigenvalues of a symmetric rational matrix.

    The characteristic polynomial of a symmetric matrix is real-rooted, so
    Descartes' rule of signs counts positive roots exactly.
    """
    n = len(M)
    for i in range(n):
        if len(M[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(i):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix is not symmetric")
    if n == 0:
        return 0
    c = charpoly(M)
    pos = _sign_variations(c)
    neg = _sign_variations([x if k % 2 == 0 else -x for k, x in enumerate(c)])
    return pos - neg


def rank(M: Matrix) -> int:
    A = [[Fraction(x) for x in row] for row in M]
    r = 0
    cols = len(A[0]) if A else 0
    for j in range(cols):
        piv = next((i for i in range(r, len(A)) if A[i][j]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][j]:
                f = A[i][j] / A[r][j]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


@dataclass(frozen=True)
class DegreeResult:
    degree: int | Tag
    algebra_dim: int | None = None
    functional_monomial: tuple | None = field(default=None, compare=False)

    @property
    def defined(self) -> bool:
        return isinstance(self.degree, int)


class DegenerateGramError(ArithmeticError):
    """The residue pairing came out singular; the Hessian reduced to zero."""


def admissible_monomials(A: QuotientAlgebra, hess: Polynomial) -> list[tuple]:
    """Basis monomials carrying a nonzero coefficient in the reduced Hessian."""
    return sorted(A.reduce(hess).terms, key=LOCAL.key)


def elk_degree(f1: Polynomial, phi_monomial: tuple | None = None) -> DegreeResult:
    """Degree at 0 of grad f1 / |grad f1| (real germs only).

    ``phi_monomial`` picks the basis monomial the functional is dual to;
    by default the smallest one in the local order (highest degree).
    """
    I = jacobian_ideal(f1)
    if quotient_basis(I) is Tag.INFINITE:
        return DegreeResult(Tag.UNDEFINED_ALGEBRAIC)
    A = QuotientAlgebra(I)
    if A.dim == 0:
        return DegreeResult(0, 0)
    h = A.reduce(hessian_determinant(f1))
    if h.is_zero():
        raise DegenerateGramError("Hessian determinant vanishes in the local algebra")
    if phi_monomial is None:
        phi_monomial = min(h.terms, key=LOCAL.key)
    elif phi_monomial not in h.terms:
        raise ValueError(f"monomial {phi_monomial} has zero coefficient in the reduced Hessian")
    k = A.index[phi_monomial]
    scale = 1 / h.terms[phi_monomial]
    basis = [A.basis_polynomial(i) for i in range(A.dim)]
    gram = [[Fraction(0)] * A.dim for _ in range(A.dim)]
    for i in range(A.dim):
        for j in range(i, A.dim):
            v = A.coordinates(basis[i] * basis[j])[k] * scale
            gram[i][j] = gram[j][i] = v
    if rank(gram) != A.dim:
        raise DegenerateGramError("residue pairing is degenerate")
    return DegreeResult(signature(gram), A.dim, phi_monomial)


@dataclass(frozen=True)
class DegreeConsistency:
    degrees: tuple[int | Tag, ...]
    all_defined: bool
    all_equal: bool | Tag       # Tag.UNDECIDED when some degree is undefined
    odd_n: bool
    odd_prediction_holds: bool | Tag | None  # None when n is even


def degree_consistency(f: MapGerm) -> DegreeConsistency:
    """Degrees of grad f_i for every component, and the equalities the theory predicts."""
    if f.field != "real":
        raise ValueError("degree_consistency needs a real germ")
    degs = tuple(elk_degree(c).degree for c in f.components)
    defined = [d for d in degs if isinstance(d, int)]
    all_defined = len(defined) == len(degs)
    if all_defined:
        equal: bool | Tag = len(set(defined)) == 1
    else:
        equal = False if len(set(defined)) > 1 else Tag.UNDECIDED
    odd = f.n % 2 == 1
    prediction = None
    if odd:
        if any(d != 0 for d in defined):
            prediction = False
        else:
            prediction = True if all_defined else Tag.UNDECIDED
    return DegreeConsistency(degs, all_defined, equal, odd, prediction)
