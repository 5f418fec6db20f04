"""Sparse multivariate polynomials over the rationals.

Exponent tuples are positional; variable names only matter for printing and
for checking that two operands live in the same ring.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...], one exponent per variable
Coeff = Fraction


def _degrevlex_key(exp: Monomial) -> tuple:
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MonomialOrder:
    """A monomial order, exposed as a sort key (larger key = larger monomial).

    Kinds:
      ``degrevlex``       graded reverse lexicographic
      ``lex``             pure lexicographic
      ``block``           first ``k`` variables eliminated: degrevlex on the
                          block, ties broken by degrevlex on the rest
      ``local``           negative degree reverse lexicographic; ``1`` is the
                          largest monomial (a local order)
    """

    __slots__ = ("kind", "k", "key")

    def __init__(self, kind: str = "degrevlex", k: int = 0):
        self.kind = kind
        self.k = k
        if kind == "degrevlex":
            self.key = _degrevlex_key
        elif kind == "lex":
            self.key = tuple
        elif kind == "block":
            if k < 1:
                raise ValueError("block order needs k >= 1")
            self.key = lambda e: (_degrevlex_key(e[:k]), _degrevlex_key(e[k:]))
        elif kind == "local":
            self.key = lambda e: (-sum(e), tuple(-x for x in reversed(e)))
        else:
            raise ValueError(f"unknown monomial order {kind!r}")

    @property
    def is_global(self) -> bool:
        return self.kind != "local"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.k) == (other.kind, other.k)

    def __hash__(self):
        return hash((self.kind, self.k))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, k={self.k})" if self.kind == "block" else f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")
LOCAL = MonomialOrder("local")


class RingMismatchError(ValueError):
    pass


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero rationals."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int | Fraction] | None, vars: Sequence[str]):
        vars = tuple(vars)
        n = len(vars)
        clean: dict[Monomial, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {n} variables")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.vars = vars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, vars: tuple) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls._raw({}, tuple(vars))

    @classmethod
    def constant(cls, c, vars: Sequence[str]) -> "Polynomial":
        vars = tuple(vars)
        c = Fraction(c)
        return cls._raw({(0,) * len(vars): c} if c else {}, vars)

    @classmethod
    def monomial(cls, exp: Monomial, vars: Sequence[str], c=1) -> "Polynomial":
        return cls({tuple(exp): c}, vars)

    @classmethod
    def variable(cls, i: int, vars: Sequence[str]) -> "Polynomial":
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[i] = 1
        return cls._raw({tuple(exp): Fraction(1)}, vars)

    @classmethod
    def gens(cls, vars: Sequence[str]) -> list["Polynomial"]:
        return [cls.variable(i, vars) for i in range(len(vars))]

    # -- basic queries ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def support(self) -> set[int]:
        """Indices of variables that actually occur."""
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        c = self.leading_term(order)[1]
        return self._raw({e: v / c for e, v in self.terms.items()}, self.vars)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.vars != other.vars:
            raise RingMismatchError(f"variable lists differ: {self.vars} vs {other.vars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.zero(self.vars)
            return self._raw({e: v * c for e, v in self.terms.items()}, self.vars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return self._raw(out, self.vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and other:
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exp: Monomial, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.zero(self.vars)
        return self._raw(
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
            self.vars,
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(other, self.vars).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution -------------------------------------------

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return self._raw(out, self.vars)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.nvars)]

    def compose(self, subs: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``subs[i]`` for variable ``i``; result lives in the ring of ``subs``."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitute per variable")
        target = subs[0].vars if subs else self.vars
        out = Polynomial.zero(target)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = subs[i] ** k
            return powers[(i, k)]

        for e, c in self.terms.items():
            t = Polynomial.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    # -- ring changes -------------------------------------------------------

    def extend(self, new_vars: Sequence[str]) -> "Polynomial":
        """Same polynomial in a ring with extra trailing variables."""
        pad = (0,) * len(new_vars)
        return self._raw({e + pad: c for e, c in self.terms.items()}, self.vars + tuple(new_vars))

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Reorder variables: new variable ``j`` is old variable ``perm[j]``."""
        vars = tuple(self.vars[i] for i in perm)
        return self._raw({tuple(e[i] for i in perm): c for e, c in self.terms.items()}, vars)

    def drop(self, indices: Iterable[int]) -> "Polynomial":
        """Remove variables that do not occur in the polynomial."""
        idx = set(indices)
        if idx & self.support():
            raise ValueError("cannot drop a variable that occurs")
        keep = [i for i in range(self.nvars) if i not in idx]
        return self._raw(
            {tuple(e[i] for i in keep): c for e, c in self.terms.items()},
            tuple(self.vars[i] for i in keep),
        )

    # -- text ---------------------------------------------------------------

    def to_text(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, (e, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x
            )
            num = f"{a.numerator}" if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            if not mono:
                body = num
            elif a == 1:
                body = mono
            else:
                body = f"{num}*{mono}"
            if k == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, vars={list(self.vars)})"


# -- functional surface -----------------------------------------------------

def add(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return a * b


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range")
    return p.diff(i)


# -- matrices ---------------------------------------------------------------

class PolyMatrix:
    """Rectangular grid of polynomials over one ring."""

    __slots__ = ("rows", "vars")

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        vars = rows[0][0].vars
        if any(p.vars != vars for r in rows for p in r):
            raise RingMismatchError("matrix entries live in different rings")
        self.rows = rows
        self.vars = vars

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __repr__(self):
        return "PolyMatrix([" + ", ".join(
            "[" + ", ".join(p.to_text() for p in r) + "]" for r in self.rows
        ) + "])"

    def stack(self, row: Sequence[Polynomial]) -> "PolyMatrix":
        return PolyMatrix(self.rows + (tuple(row),))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def det(self) -> Polynomial:
        m, n = self.shape
        if m != n:
            raise ValueError("determinant of a non-square matrix")
        return _det(self.rows, self.vars)


def _det(rows, vars) -> Polynomial:
    """Laplace expansion along rows, memoized on the set of used columns."""
    n = len(rows)
    zero = Polynomial.zero(vars)
    # minors[cols] = det of rows[n-len(cols):] restricted to cols
    minors: dict[tuple[int, ...], Polynomial] = {(): Polynomial.constant(1, vars)}
    for size in range(1, n + 1):
        r = n - size
        nxt = {}
        for cols in combinations(range(n), size):
            acc = zero
            for pos, j in enumerate(cols):
                entry = rows[r][j]
                if not entry:
                    continue
                rest = cols[:pos] + cols[pos + 1:]
                term = entry * minors[rest]
                acc = acc - term if pos % 2 else acc + term
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


def jacobian(components: Sequence[Polynomial]) -> PolyMatrix:
    """p x n matrix whose row i is the gradient of component i."""
    if not components:
        raise ValueError("need at least one component")
    return PolyMatrix([f.gradient() for f in components])


def minors(m: PolyMatrix, k: int) -> list[Polynomial]:
    rows, cols = m.shape
    if not 1 <= k <= min(rows, cols):
        raise ValueError(f"minor size {k} out of range for a {rows}x{cols} matrix")
    out = []
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            out.append(_det([[m.rows[i][j] for j in ci] for i in ri], m.vars))
    return out


def hessian_determinant(h: Polynomial) -> Polynomial:
    if h.nvars == 0:
        return Polynomial.constant(1, h.vars)
    grad = h.gradient()
    return PolyMatrix([[g.diff(j) for j in range(h.nvars)] for g in grad]).det()


def sum_of_squares(vars: Sequence[str]) -> Polynomial:
    """r(x) = x_1^2 + ... + x_n^2."""
    n = len(vars)
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = 2
        terms[tuple(e)] = 1
    return Polynomial(terms, vars)
