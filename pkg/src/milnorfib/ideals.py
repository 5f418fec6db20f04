"""Gröbner and standard bases, and the ideal operations built on them.

Global orders use Buchberger's algorithm with the normal selection strategy
and the product/chain criteria.  The local order (negative degrevlex) uses
Mora's tangent cone algorithm with the écart-driven weak normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .poly import DEGREVLEX, LOCAL, MonomialOrder, Polynomial, RingMismatchError

EMPTY_DIMENSION = -1  # dimension of the empty variety (unit ideal)

_FRESH = "_t"


# -- raw helpers on term dicts ----------------------------------------------

def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(h: dict, g: dict, shift: tuple, c: Fraction) -> None:
    """In place: h -= c * x^shift * g."""
    for e, v in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        s = h.get(m, 0) - c * v
        if s:
            h[m] = s
        else:
            h.pop(m, None)


class _Elem:
    __slots__ = ("terms", "lm", "lc", "ecart", "deg")

    def __init__(self, terms: dict, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.deg = max(sum(e) for e in terms)
        self.ecart = self.deg - sum(self.lm)


def _monic(terms: dict, key) -> dict:
    lm = max(terms, key=key)
    c = terms[lm]
    if c == 1:
        return dict(terms)
    return {e: v / c for e, v in terms.items()}


def _spoly(f: _Elem, g: _Elem) -> dict:
    l = _lcm(f.lm, g.lm)
    h: dict = {}
    _sub_scaled(h, f.terms, tuple(a - b for a, b in zip(l, f.lm)), -1 / f.lc)
    _sub_scaled(h, g.terms, tuple(a - b for a, b in zip(l, g.lm)), 1 / g.lc)
    return h


def _reduce_full(f: dict, basis: Sequence[_Elem], key) -> dict:
    """Complete reduction for a global order: no term of the result is divisible by a leading monomial."""
    h = dict(f)
    rem: dict = {}
    while h:
        m = max(h, key=key)
        c = h[m]
        for g in basis:
            if _divides(g.lm, m):
                _sub_scaled(h, g.terms, tuple(a - b for a, b in zip(m, g.lm)), c / g.lc)
                break
        else:
            rem[m] = c
            del h[m]
    return rem


def _reduce_lead(f: dict, basis: Sequence[_Elem], key) -> dict:
    """Top reduction only (enough to decide whether an S-polynomial vanishes)."""
    h = dict(f)
    while h:
        m = max(h, key=key)
        for g in basis:
            if _divides(g.lm, m):
                _sub_scaled(h, g.terms, tuple(a - b for a, b in zip(m, g.lm)), h[m] / g.lc)
                break
        else:
            return h
    return h


def _mora_nf(f: dict, basis: Sequence[_Elem], key) -> dict:
    """Mora's weak normal form: returns h with u*f - h in the ideal for a local unit u."""
    h = dict(f)
    T = list(basis)
    while h:
        hel = _Elem(h, key)
        cands = [g for g in T if _divides(g.lm, hel.lm)]
        if not cands:
            return h
        g = min(cands, key=lambda g: g.ecart)
        if g.ecart > hel.ecart:
            T.append(_Elem(dict(h), key))
        shift = tuple(a - b for a, b in zip(hel.lm, g.lm))
        _sub_scaled(h, g.terms, shift, hel.lc / g.lc)
    return h


def _buchberger(polys: Iterable[dict], key) -> list[_Elem]:
    G: list[_Elem] = []
    pairs: set[tuple[int, int]] = set()

    def add(terms):
        el = _Elem(_monic(terms, key), key)
        G.append(el)
        k = len(G) - 1
        for i in range(k):
            pairs.add((i, k))

    for f in polys:
        if f:
            h = _reduce_full(f, G, key)
            if h:
                add(h)
    while pairs:
        i, j = min(pairs, key=lambda p: (sum(_lcm(G[p[0]].lm, G[p[1]].lm)), key(_lcm(G[p[0]].lm, G[p[1]].lm)), p))
        pairs.discard((i, j))
        a, b = G[i], G[j]
        l = _lcm(a.lm, b.lm)
        if all(x == 0 or y == 0 for x, y in zip(a.lm, b.lm)):
            continue  # coprime leading monomials
        if _chain_skip(i, j, l, G, pairs):
            continue
        h = _reduce_full(_spoly(a, b), G, key)
        if h:
            add(h)
            if not any(h_e for h_e in G[-1].lm):
                return [G[-1]]  # unit ideal
    return _interreduce(G, key)


def _chain_skip(i, j, l, G, pairs) -> bool:
    for k, g in enumerate(G):
        if k in (i, j) or not _divides(g.lm, l):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def _interreduce(G: list[_Elem], key) -> list[_Elem]:
    minimal = []
    for idx, g in enumerate(G):
        if any(
            _divides(h.lm, g.lm) and (h.lm != g.lm or jdx < idx)
            for jdx, h in enumerate(G) if jdx != idx
        ):
            continue
        minimal.append(g)
    out = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = {e: c for e, c in g.terms.items() if e != g.lm}
        red = _reduce_full(tail, others, key)
        red[g.lm] = g.lc
        out.append(_Elem(_monic(red, key), key))
    out.sort(key=lambda g: key(g.lm), reverse=True)
    return out


def _mora_standard_basis(polys: Iterable[dict], key) -> list[_Elem]:
    G: list[_Elem] = []
    pairs: list[tuple[int, int]] = []

    def add(terms):
        G.append(_Elem(_monic(terms, key), key))
        k = len(G) - 1
        pairs.extend((i, k) for i in range(k))

    for f in polys:
        if f:
            h = _mora_nf(f, G, key)
            if h:
                add(h)
    while pairs:
        pairs.sort(key=lambda p: (sum(_lcm(G[p[0]].lm, G[p[1]].lm)), p), reverse=True)
        i, j = pairs.pop()
        h = _mora_nf(_spoly(G[i], G[j]), G, key)
        if h:
            add(h)
        if any(not any(g.lm) for g in G):
            break
    # keep elements whose leading monomial is minimal
    units = [g for g in G if not any(g.lm)]
    if units:
        n = len(G[0].lm)
        return [_Elem({(0,) * n: Fraction(1)}, key)]
    out = []
    for idx, g in enumerate(G):
        if any(
            _divides(h.lm, g.lm) and (h.lm != g.lm or jdx < idx)
            for jdx, h in enumerate(G) if jdx != idx
        ):
            continue
        out.append(g)
    out.sort(key=lambda g: key(g.lm), reverse=True)
    return out


# -- public types -----------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple[Polynomial, ...]
    order: MonomialOrder
    kind: str  # "global-groebner" | "local-standard"
    vars: tuple[str, ...]

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def _elems(self) -> list[_Elem]:
        return [_Elem(g.terms, self.order.key) for g in self.basis]

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


@dataclass(frozen=True, eq=False)
class Ideal:
    generators: tuple[Polynomial, ...]
    vars: tuple[str, ...]
    order: MonomialOrder = field(default=DEGREVLEX)

    def __init__(self, generators: Iterable[Polynomial], vars: Sequence[str] | None = None,
                 order: MonomialOrder = DEGREVLEX):
        gens = tuple(generators)
        if vars is None:
            if not gens:
                raise ValueError("need variable names for an ideal without generators")
            vars = gens[0].vars
        vars = tuple(vars)
        for g in gens:
            if g.vars != vars:
                raise RingMismatchError(f"generator in ring {g.vars}, ideal in {vars}")
        object.__setattr__(self, "generators", tuple(g for g in gens if g))
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "order", order)

    @cached_property
    def gb(self) -> GroebnerBasis:
        return groebner(self, DEGREVLEX if not self.order.is_global else self.order)

    def __add__(self, other: "Ideal | Iterable[Polynomial]") -> "Ideal":
        extra = other.generators if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.generators + extra, self.vars, self.order)

    def __contains__(self, p: Polynomial) -> bool:
        return ideal_member(p, self)

    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def __repr__(self):
        return "Ideal<" + ", ".join(g.to_text() for g in self.generators) + ">"


def unit_ideal(vars: Sequence[str]) -> Ideal:
    return Ideal([Polynomial.constant(1, vars)], vars)


# -- operations -------------------------------------------------------------

def groebner(I: Ideal, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis for a global order."""
    if not order.is_global:
        raise ValueError("groebner() needs a global order; use local_standard_basis for local ones")
    elems = _buchberger((g.terms for g in I.generators), order.key)
    basis = tuple(Polynomial._raw(e.terms, I.vars) for e in elems)
    return GroebnerBasis(basis, order, "global-groebner", I.vars)


def standard_basis(I: Ideal, order: MonomialOrder = LOCAL) -> GroebnerBasis:
    """Standard basis for a local order via Mora's algorithm (minimal, monic)."""
    if order.is_global:
        raise ValueError("standard_basis() is for local orders")
    elems = _mora_standard_basis((g.terms for g in I.generators), order.key)
    basis = tuple(Polynomial._raw(e.terms, I.vars) for e in elems)
    return GroebnerBasis(basis, order, "local-standard", I.vars)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder for global bases, Mora's weak normal form for local ones."""
    if p.vars != G.vars:
        raise RingMismatchError(f"polynomial in {p.vars}, basis in {G.vars}")
    key = G.order.key
    if G.kind == "local-standard":
        return Polynomial._raw(_mora_nf(p.terms, G._elems(), key), p.vars)
    return Polynomial._raw(_reduce_full(p.terms, G._elems(), key), p.vars)


def ideal_member(p: Polynomial, I: Ideal) -> bool:
    return normal_form(p, I.gb).is_zero()


def contains_ideal(I: Ideal, J: Ideal) -> bool:
    """True iff J ⊆ I."""
    G = I.gb
    return all(normal_form(g, G).is_zero() for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return contains_ideal(I, J) and contains_ideal(J, I)


def _fresh_name(vars: Sequence[str]) -> str:
    name = _FRESH
    while name in vars:
        name += "_"
    return name


def radical_member(p: Polynomial, I: Ideal) -> bool:
    """Rabinowitsch: p ∈ √I iff 1 ∈ I + <1 - t·p>."""
    if p.vars != I.vars:
        raise RingMismatchError(f"polynomial in {p.vars}, ideal in {I.vars}")
    t = _fresh_name(I.vars)
    ext = [g.extend([t]) for g in I.generators]
    tv = Polynomial.variable(len(I.vars), I.vars + (t,))
    J = Ideal(ext + [1 - tv * p.extend([t])], I.vars + (t,))
    return J.is_unit()


def eliminate(I: Ideal, drop: Iterable[int | str]) -> Ideal:
    """I ∩ k[remaining variables], returned as an ideal of the smaller ring."""
    idx = sorted({I.vars.index(d) if isinstance(d, str) else d for d in drop})
    if not idx:
        return Ideal(groebner(I).basis, I.vars)
    rest = [i for i in range(len(I.vars)) if i not in idx]
    perm = idx + rest
    order = MonomialOrder("block", len(idx))
    moved = Ideal([g.permute(perm) for g in I.generators], [I.vars[i] for i in perm])
    G = groebner(moved, order)
    k = len(idx)
    keep = [g.drop(range(k)) for g in G.basis if not (g.support() & set(range(k)))]
    remaining = tuple(I.vars[i] for i in rest)
    return Ideal(keep, remaining)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    if I.vars != J.vars:
        raise RingMismatchError("ideals in different rings")
    t = _fresh_name(I.vars)
    ring = I.vars + (t,)
    tv = Polynomial.variable(len(I.vars), ring)
    gens = [tv * g.extend([t]) for g in I.generators] + [(1 - tv) * g.extend([t]) for g in J.generators]
    return eliminate(Ideal(gens, ring), [t])


def saturate_by(I: Ideal, j: Polynomial) -> Ideal:
    """I : j^∞ via I + <1 - t·j> and elimination of t."""
    t = _fresh_name(I.vars)
    ring = I.vars + (t,)
    tv = Polynomial.variable(len(I.vars), ring)
    gens = [g.extend([t]) for g in I.generators] + [1 - tv * j.extend([t])]
    return eliminate(Ideal(gens, ring), [t])


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞, the intersection of I : j^∞ over the generators j of J."""
    if I.vars != J.vars:
        raise RingMismatchError("ideals in different rings")
    if not J.generators:
        raise ValueError("saturating by the zero ideal")
    result = None
    for j in J.generators:
        S = saturate_by(I, j)
        result = S if result is None else intersect(result, S)
    return Ideal(groebner(result).basis, I.vars)


def ideal_dimension(I: Ideal) -> int:
    """Krull dimension of k[x]/I; EMPTY_DIMENSION (-1) for the unit ideal."""
    G = I.gb
    if G.is_unit():
        return EMPTY_DIMENSION
    n = len(I.vars)
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in G.leading_monomials()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = frozenset(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0
