"""From algebraic invariants to the topology of Milnor fibers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .degree import elk_degree
from .germ import MapGerm
from .ideals import EMPTY_DIMENSION, Ideal, ideal_dimension
from .local import jacobian_ideal, milnor_number
from .loci import ConditionVerdict, real_dim_zero_certify
from .poly import Polynomial
from .tags import Tag

# -- realification ----------------------------------------------------------


def realify(g: MapGerm) -> MapGerm:
    """View a complex germ (C^m, 0) -> (C^p, 0) as a real germ (R^2m, 0) -> (R^2p, 0).

    Variable z becomes the pair (z_re, z_im); component f becomes (Re f, Im f).
    """
    if g.field != "complex":
        raise ValueError("realify expects a complex germ")
    names = []
    for v in g.vars:
        names += [f"{v}_re", f"{v}_im"]
    zero = Polynomial.zero(names)
    # z_k = x_k + i*y_k as a (real, imaginary) pair
    subs = []
    for k in range(len(g.vars)):
        subs.append((Polynomial.variable(2 * k, names), Polynomial.variable(2 * k + 1, names)))

    def cmul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    comps = []
    for f in g.components:
        re, im = zero, zero
        for e, c in f.terms.items():
            t = (Polynomial.constant(c, names), zero)
            for k, power in enumerate(e):
                for _ in range(power):
                    t = cmul(t, subs[k])
            re, im = re + t[0], im + t[1]
        comps += [re, im]
    return MapGerm(tuple(names), "real", tuple(comps))


# -- Euler characteristics --------------------------------------------------

FORMULA_COMPLEX = "complex: 1 + (-1)^n * mu"
FORMULA_REAL_EVEN = "real, n even: 1 - deg(grad f1)"
FORMULA_REAL_ODD = "real, n odd: 1"


@dataclass(frozen=True)
class EulerResult:
    value: int | Tag
    formula: str


def euler_complex(g: MapGerm) -> EulerResult:
    """Euler characteristic of the Milnor fiber of a holomorphic function germ."""
    if g.field != "complex" or g.p != 1:
        raise ValueError("euler_complex needs a complex germ with one component")
    mu = milnor_number(g).mu
    if mu is Tag.INFINITE:
        return EulerResult(Tag.UNDEFINED, FORMULA_COMPLEX)
    n = g.n - 1
    return EulerResult(1 + (-1) ** n * mu, FORMULA_COMPLEX)


def euler_real(f: MapGerm) -> EulerResult:
    """Euler characteristic of the real Milnor fiber; the caller vouches for an isolated critical point."""
    if f.field != "real":
        raise ValueError("euler_real needs a real germ")
    if not f.n >= f.p >= 2:
        raise ValueError(f"euler_real needs n >= p >= 2 (got n={f.n}, p={f.p})")
    if f.n % 2:
        return EulerResult(1, FORMULA_REAL_ODD)
    deg = elk_degree(f.components[0]).degree
    if deg is Tag.UNDEFINED_ALGEBRAIC:
        return EulerResult(Tag.UNDEFINED, FORMULA_REAL_EVEN)
    return EulerResult(1 - deg, FORMULA_REAL_EVEN)


def kato_matsumoto_bound(g: MapGerm) -> int:
    """Connectivity the fiber is guaranteed to have: n - s - 1, s = dim of the critical set.

    The dimension is that of the global critical set, which can only
    overestimate the germ's, so the bound stays valid.
    """
    if g.field != "complex" or g.p != 1:
        raise ValueError("kato_matsumoto_bound needs a complex germ with one component")
    f = g.components[0]
    if f.is_zero():
        raise ValueError("germ must be non-constant")
    n = g.n - 1
    s = ideal_dimension(jacobian_ideal(f))
    if s == EMPTY_DIMENSION:
        return n - 1
    return n - s - 1


# -- homotopy descriptors ---------------------------------------------------

class Kind(str, Enum):
    CONTRACTIBLE = "CONTRACTIBLE"
    WEDGE_SPHERES = "WEDGE_SPHERES"
    WEDGE_MIXED = "WEDGE_MIXED"
    NOT_NECESSARILY_BOUQUET = "NOT_NECESSARILY_BOUQUET"
    UNKNOWN = "UNKNOWN"

    def __str__(self):
        return self.value


BETA = "beta"


@dataclass(frozen=True)
class HomotopyDescriptor:
    kind: Kind
    dims: tuple[int, ...] = ()
    count: int | str | None = None
    euler: int | str | Tag = Tag.UNDEFINED

    def __str__(self):
        if self.kind is Kind.WEDGE_SPHERES:
            return f"WEDGE_SPHERES({self.dims[0]}, {self.count})"
        if self.kind is Kind.WEDGE_MIXED:
            return f"WEDGE_MIXED({self.dims[0]}, {self.dims[1]}, {self.count})"
        return self.kind.value


def wedge_euler(dim: int, count: int) -> int:
    """χ of a wedge of ``count`` spheres of dimension ``dim``."""
    return 1 + (-1) ** dim * count


def bouquet_descriptor(f: MapGerm, trivial: bool | None = None, isolated: bool | None = None,
                       mu: int | Tag | None = None, euler: int | Tag | None = None) -> HomotopyDescriptor:
    """Homotopy type of the Milnor fiber, as far as the available facts determine it."""
    if f.field == "complex":
        if f.p != 1:
            return HomotopyDescriptor(Kind.UNKNOWN)
        if mu is None:
            mu = milnor_number(f).mu
        if mu is Tag.INFINITE or isolated is False:
            return HomotopyDescriptor(Kind.UNKNOWN)
        n = f.n - 1
        if mu == 0:
            return HomotopyDescriptor(Kind.CONTRACTIBLE, euler=1)
        return HomotopyDescriptor(Kind.WEDGE_SPHERES, (n,), mu, wedge_euler(n, mu))

    n, p = f.n, f.p
    known_euler = euler if isinstance(euler, int) else None
    if trivial:
        return HomotopyDescriptor(Kind.CONTRACTIBLE, euler=1)
    if (n, p) == (5, 2):
        return HomotopyDescriptor(Kind.NOT_NECESSARILY_BOUQUET, euler=1)
    if isolated and p >= 3 and n == 2 * p + 1:
        # the two Betti numbers agree, so the alternating sum is 1
        return HomotopyDescriptor(Kind.WEDGE_MIXED, (p - 1, p), BETA, 1)
    if isolated and p >= 2 and n == 2 * p:
        d = p - 1
        if known_euler is not None:
            beta = (known_euler - 1) * (-1) ** d
            return HomotopyDescriptor(Kind.WEDGE_SPHERES, (d,), beta, known_euler)
        sign = "+" if d % 2 == 0 else "-"
        return HomotopyDescriptor(Kind.WEDGE_SPHERES, (d,), BETA, f"1 {sign} {BETA}")
    return HomotopyDescriptor(Kind.UNKNOWN, euler=known_euler if known_euler is not None else Tag.UNDEFINED)


# -- triviality -------------------------------------------------------------

class TrivialityStatus(str, Enum):
    ONLY_TRIVIAL = "ONLY_TRIVIAL"
    NONTRIVIAL_EXIST = "NONTRIVIAL_EXIST"
    SPECIAL = "SPECIAL"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TrivialityClass:
    status: TrivialityStatus
    note: str = ""


def classify_dimensions(n: int, p: int, *, resolve_6_3: bool = True) -> TrivialityClass:
    """Whether non-trivial isolated-critical-point germs exist in dimensions (n, p).

    With ``resolve_6_3=False`` the pair (6, 3) is reported as SPECIAL, its
    status before non-trivial examples were constructed.
    """
    if p < 2 or n < p:
        raise ValueError(f"need n >= p >= 2, got (n, p) = ({n}, {p})")
    d = n - p
    if d <= 2:
        if (n, p) in {(2, 2), (4, 3), (4, 2)}:
            return TrivialityClass(TrivialityStatus.NONTRIVIAL_EXIST, "n - p <= 2: one of the exceptional pairs")
        return TrivialityClass(TrivialityStatus.ONLY_TRIVIAL, "n - p <= 2: every example is trivial")
    if d >= 4:
        return TrivialityClass(TrivialityStatus.NONTRIVIAL_EXIST, "n - p >= 4: non-trivial examples exist")
    if (n, p) in {(5, 2), (8, 5)}:
        return TrivialityClass(TrivialityStatus.NONTRIVIAL_EXIST, "n - p = 3: one of the exceptional pairs")
    if (n, p) == (6, 3):
        if resolve_6_3:
            return TrivialityClass(TrivialityStatus.NONTRIVIAL_EXIST,
                                   "n - p = 3: non-trivial polynomial examples were later constructed")
        return TrivialityClass(TrivialityStatus.SPECIAL, "n - p = 3: possibly non-trivial")
    return TrivialityClass(TrivialityStatus.ONLY_TRIVIAL, "n - p = 3: every example is trivial")


class Triviality(str, Enum):
    TRIVIAL = "TRIVIAL"
    NONTRIVIAL = "NONTRIVIAL"
    UNDECIDED = "UNDECIDED"

    def __str__(self):
        return self.value


def triviality_42(f: MapGerm, euler: EulerResult | None = None) -> Triviality:
    """For (R^4, 0) -> (R^2, 0) with an isolated critical point: trivial iff χ(F) = 1."""
    if f.field != "real" or (f.n, f.p) != (4, 2):
        raise ValueError(f"triviality_42 needs a real germ with (n, p) = (4, 2), got ({f.n}, {f.p})")
    euler = euler or euler_real(f)
    if not isinstance(euler.value, int):
        return Triviality.UNDECIDED
    return Triviality.TRIVIAL if euler.value == 1 else Triviality.NONTRIVIAL


# -- connectivity -----------------------------------------------------------

@dataclass(frozen=True)
class ConnectivityReport:
    tube_connected: Tag
    fiber_connected: Tag
    fiber_conn_iff_section: Tag
    link_nonempty: Tag
    fiber_connectivity_degree: int | Tag
    dim_V: int | None = None
    notes: tuple[str, ...] = field(default=())


CROSS_SECTION_NOTE = ("p = 2: the Milnor fiber is path connected exactly when the tube fibration "
                      "over the circle has a global cross-section (not decided here)")


def connectivity_report(f: MapGerm, condition_a: ConditionVerdict, condition_b: ConditionVerdict,
                        I_V: Ideal | None = None) -> ConnectivityReport:
    n, p = f.n, f.p
    na = Tag.NOT_APPLICABLE
    if f.field != "real" or not n > p >= 2:
        return ConnectivityReport(na, na, na, na, na, notes=("needs a real germ with n > p >= 2",))
    if not (condition_a.holds and condition_b.holds):
        miss = Tag.HYPOTHESIS_NOT_MET
        return ConnectivityReport(miss, miss, miss, Tag.UNDECIDED, na,
                                  notes=("conditions (a) and (b) are not both certified",))
    I_V = I_V or Ideal(f.components, f.vars)
    dim_V = ideal_dimension(I_V)
    notes = []
    if dim_V <= n - p:
        notes.append(f"dim_C V = {dim_V} <= n - p = {n - p}, so the link has no cells above dimension n - p - 1")
        tube = Tag.YES
        if p >= 3:
            fiber, iff = Tag.YES, na
        else:
            fiber, iff = Tag.UNDECIDED, Tag.YES
            notes.append(CROSS_SECTION_NOTE)
    else:
        notes.append(f"dim_C V = {dim_V} > n - p = {n - p}: the cell-dimension hypothesis is not established")
        tube = fiber = iff = Tag.HYPOTHESIS_NOT_MET
    if dim_V == EMPTY_DIMENSION or real_dim_zero_certify(I_V):
        link = Tag.NO
    elif dim_V >= 1:
        link = Tag.YES
    else:
        link = Tag.UNDECIDED
    degree = p - 2 if link is Tag.YES else na
    return ConnectivityReport(tube, fiber, iff, link, degree, dim_V, tuple(notes))
