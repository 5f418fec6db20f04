"""Critical loci and sound checks of Milnor's conditions (a) and (b).

Verdicts are three-valued: HOLDS (complex-algebraic certificate),
HOLDS_REAL_CERTIFIED (certificate that a real variety sits inside {0}),
INCONCLUSIVE.  Failure is never claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .germ import MapGerm
from .ideals import Ideal, ideal_dimension, radical_member, saturate
from .poly import Polynomial, jacobian, minors, sum_of_squares


class Status(str, Enum):
    HOLDS = "HOLDS"
    HOLDS_REAL_CERTIFIED = "HOLDS_REAL_CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConditionVerdict:
    status: Status
    evidence: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return self.status is not Status.INCONCLUSIVE


@dataclass(frozen=True)
class LociBundle:
    I_V: Ideal
    I_Sigma: Ideal
    I_SigmaR: Ideal
    I_closure: Ideal


def _require_real(f: MapGerm) -> None:
    if f.field != "real":
        raise ValueError("this check is defined for real germs only")


def critical_ideal(f: MapGerm) -> Ideal:
    """Maximal minors of the Jacobian matrix (rank-deficiency locus)."""
    k = min(f.p, f.n)
    return Ideal(minors(jacobian(f.components), k), f.vars)


def build_loci(f: MapGerm) -> LociBundle:
    _require_real(f)
    if f.p >= f.n:
        raise ValueError(f"the loci need p < n (got n={f.n}, p={f.p})")
    I_V = Ideal(f.components, f.vars)
    I_Sigma = critical_ideal(f)
    r = sum_of_squares(f.vars)
    stacked = jacobian(f.components).stack(r.gradient())
    I_SigmaR = Ideal(minors(stacked, f.p + 1), f.vars)
    if not I_SigmaR.generators:
        I_closure = Ideal([], f.vars)
    else:
        I_closure = saturate(I_SigmaR, I_V)
    return LociBundle(I_V, I_Sigma, I_SigmaR, I_closure)


def _pure_even_vars(g: Polynomial) -> set[int] | None:
    """Variables forced to vanish when g is a same-sign sum of even monomials.

    Every term of such a g is nonnegative (or nonpositive) on R^n, so each
    term vanishes on the real zero set; a pure power term x_i^(2k) forces
    x_i = 0.  Returns None when g has the wrong shape or no pure power term.
    """
    if not g.terms:
        return None
    signs = set()
    out = set()
    for e, c in g.terms.items():
        if any(x % 2 for x in e) or not any(e):
            return None
        signs.add(c > 0)
        nz = [i for i, x in enumerate(e) if x]
        if len(nz) == 1:
            out.add(nz[0])
    return out if len(signs) == 1 and out else None


def real_dim_zero_certify(I: Ideal, trace: list[str] | None = None) -> bool:
    """Sound check that every real zero of I is the origin.

    Alternates two rules until nothing changes: a variable in the radical of
    I + <certified variables> vanishes on the variety; a basis element that is
    a same-sign sum of even monomials forces its pure-power variables to 0.
    """
    n = len(I.vars)
    cert: set[int] = set()
    gens = Polynomial.gens(I.vars)
    while True:
        J = I + [gens[i] for i in sorted(cert)]
        if J.is_unit():
            if trace is not None:
                trace.append("ideal becomes the unit ideal: no real zeros remain")
            return True
        before = len(cert)
        for i in range(n):
            if i not in cert and radical_member(gens[i], J):
                cert.add(i)
                if trace is not None:
                    trace.append(f"{I.vars[i]} lies in the radical")
                J = I + [gens[k] for k in sorted(cert)]
        for g in J.gb.basis:
            vs = _pure_even_vars(g)
            if vs and not vs <= cert:
                if trace is not None:
                    trace.append(f"same-sign even monomials {g.to_text()} = 0 forces "
                                 + ", ".join(I.vars[i] for i in sorted(vs)) + " = 0")
                cert |= vs
        if len(cert) == n:
            return True
        if len(cert) == before:
            return False


def _isolated_evidence(f: MapGerm, I_Sigma: Ideal) -> tuple[bool, list[str], bool]:
    """(isolated?, trace, real certificate used?) for the real critical set."""
    if I_Sigma.is_unit():
        return True, ["critical ideal is the unit ideal: no critical points"], False
    trace: list[str] = []
    if real_dim_zero_certify(I_Sigma, trace):
        return True, ["real critical set is contained in {0}"] + trace, True
    return False, trace, False


def certify_isolated(f: MapGerm) -> bool:
    """Operational test that 0 is an isolated (or absent) real critical point."""
    _require_real(f)
    return _isolated_evidence(f, critical_ideal(f))[0]


def milnor_condition_a(f: MapGerm, loci: LociBundle | None = None) -> ConditionVerdict:
    """Critical set contained in V = f^{-1}(0) near the origin."""
    _require_real(f)
    loci = loci or build_loci(f)
    I_Sigma = loci.I_Sigma
    if I_Sigma.is_unit():
        return ConditionVerdict(Status.HOLDS, ("critical ideal is the unit ideal: no critical points",))
    if all(radical_member(fi, I_Sigma) for fi in f.components):
        return ConditionVerdict(Status.HOLDS, (
            "every component lies in the radical of the critical ideal, so Σ_f ⊆ V over C",))
    trace: list[str] = []
    if real_dim_zero_certify(I_Sigma, trace):
        return ConditionVerdict(Status.HOLDS_REAL_CERTIFIED,
                                ("real critical set is contained in {0} ⊆ V",) + tuple(trace))
    return ConditionVerdict(Status.INCONCLUSIVE,
                            ("no inclusion certificate found for Σ_f ⊆ V",) + tuple(trace))


def milnor_condition_b(f: MapGerm, loci: LociBundle | None = None) -> ConditionVerdict:
    """0 isolated in V ∩ closure(Σ_(f,r) minus V)."""
    _require_real(f)
    loci = loci or build_loci(f)
    T = loci.I_closure + loci.I_V
    if T.is_unit():
        return ConditionVerdict(Status.HOLDS, ("V ∩ closure is empty",))
    dim = ideal_dimension(T)
    if dim <= 0:
        return ConditionVerdict(Status.HOLDS, (f"V ∩ closure is finite (complex dimension {dim})",))
    for g in T.gb.basis:
        if g.constant_term():
            return ConditionVerdict(Status.HOLDS, (
                f"{g.to_text()} lies in the ideal and is nonzero at 0: the origin is off the locus",))
    trace: list[str] = []
    if real_dim_zero_certify(T, trace):
        return ConditionVerdict(Status.HOLDS_REAL_CERTIFIED,
                                ("real points of V ∩ closure are contained in {0}",) + tuple(trace))
    isolated, itrace, real = _isolated_evidence(f, loci.I_Sigma)
    if isolated:
        # an isolated critical point makes V minus 0 transverse to small spheres
        status = Status.HOLDS_REAL_CERTIFIED if real else Status.HOLDS
        return ConditionVerdict(status, (
            "0 is an isolated critical point, so V∖{0} meets small spheres transversally",) + tuple(itrace))
    return ConditionVerdict(Status.INCONCLUSIVE,
                            (f"V ∩ closure has complex dimension {dim}; no real certificate found",)
                            + tuple(trace))


@dataclass(frozen=True)
class ProjectionCheck:
    condition_a: ConditionVerdict
    condition_b: ConditionVerdict

    @property
    def preserved(self) -> bool:
        return self.condition_a.holds and self.condition_b.holds


def projection_preserves_conditions(f: MapGerm) -> ProjectionCheck:
    """Run both checkers on (f_1, ..., f_{p-1})."""
    _require_real(f)
    if f.p < 2:
        raise ValueError("projection needs p >= 2")
    phi = f.projection()
    loci = build_loci(phi)
    return ProjectionCheck(milnor_condition_a(phi, loci), milnor_condition_b(phi, loci))
