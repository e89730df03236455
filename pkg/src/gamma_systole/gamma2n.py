"""The Gamma(2, n) surface: parameters, candidate curves and their lifts.

A surface is fixed by the symmetry order ``n`` (genus ``n - 1``), the half
cuff length ``c`` and the twist ``t`` with ``0 <= t <= c``.  The seam length
``s`` follows from the trirectangle relation

    sinh(s/2) * sinh(c/2) = cos(pi/n).

On the quotient orbifold S^2(2,2,2,n) five closed curves compete for the
systole.  Each is lifted to the surface through three branched covers; the
systole is the smallest lifted length.
"""
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .config import ARGMIN_TIE
from .errors import DomainError, InvalidParams, OutOfDomain
from .hyptrig import (
    acosh_guarded,
    hexagon_opposite,
    quad_two_right,
    right_triangle_hyp,
    trirectangle_partner,
)


class Family(str, enum.Enum):
    CD = "CD"
    DE = "DE"
    CE = "CE"
    CE_PRIME = "CE_PRIME"
    C = "C"


FAMILIES = tuple(Family)


@dataclass(frozen=True)
class SurfaceParams:
    n: int
    c: float
    t: float
    s: float

    @property
    def genus(self):
        return self.n - 1


def seam_length(n, c):
    """Seam length s for cuff half-length c (vectorised over c)."""
    return 2.0 * trirectangle_partner(np.asarray(c, dtype=float) / 2.0, math.pi / n)


def make_params(n, c, t):
    if int(n) != n or n < 3:
        raise InvalidParams(f"n must be an integer >= 3 (genus >= 2), got {n!r}")
    c = float(c)
    t = float(t)
    if not (c > 0 and math.isfinite(c)):
        raise InvalidParams(f"c must be a finite positive length, got {c!r}")
    if not t >= 0:
        raise InvalidParams(f"t must be >= 0, got {t!r}")
    if t > c:
        raise InvalidParams(f"twist t must satisfy t <= c, got t={t!r} > c={c!r}")
    return SurfaceParams(int(n), c, t, seam_length(n, c))


@dataclass(frozen=True)
class CandidateLengths:
    """Lengths of the five candidate curves on S^2(2,2,2,n)."""

    len_CD: float
    len_DE: float
    len_CE: float
    len_CE_prime: float
    len_C: float

    def __getitem__(self, family):
        return getattr(self, _FIELD[Family(family)])

    def as_dict(self):
        return {f.value: self[f] for f in FAMILIES}


_FIELD = {
    Family.CD: "len_CD",
    Family.DE: "len_DE",
    Family.CE: "len_CE",
    Family.CE_PRIME: "len_CE_prime",
    Family.C: "len_C",
}


def _candidates(c, t, s):
    # works elementwise on arrays; order follows FAMILIES
    return (
        right_triangle_hyp(t / 2, s / 2),
        right_triangle_hyp((c - t) / 2, s / 2),
        c / 2,
        quad_two_right(s, t / 2, (c - t) / 2),
        quad_two_right(s, t / 2, c - t / 2),
    )


def candidate_lengths(p):
    return CandidateLengths(*(float(x) for x in _candidates(p.c, p.t, p.s)))


@dataclass(frozen=True)
class LiftChain:
    """Length multipliers through S^2(2,2,n,n), S^2(2,...,2) and the surface."""

    r1: int
    r2: int
    r3: int

    @property
    def product(self):
        return self.r1 * self.r2 * self.r3


def lift_chain(family, n):
    family = Family(family)
    if n < 3:
        raise InvalidParams(f"n must be >= 3, got {n!r}")
    if family is Family.C:
        return LiftChain(1, 1, 2)
    if family is Family.DE:
        return LiftChain(2, n, 2 if n % 2 else 1)
    return LiftChain(2, 1, 2)


def lifted_lengths(n, c, t):
    """Lifted lengths of all five families on arrays of (c, t).

    Returns ``(lifted, systole)`` where ``lifted`` has a leading axis of size 5
    in ``FAMILIES`` order.
    """
    c = np.asarray(c, dtype=float)
    t = np.asarray(t, dtype=float)
    s = seam_length(n, c)
    factors = np.array([lift_chain(f, n).product for f in FAMILIES], dtype=float)
    cands = np.stack(np.broadcast_arrays(*_candidates(c, t, s)))
    lifted = factors.reshape((5,) + (1,) * (cands.ndim - 1)) * cands
    return lifted, lifted.min(axis=0)


@dataclass(frozen=True)
class SystoleReport:
    params: SurfaceParams
    candidates: CandidateLengths
    lifts: dict
    lifted: dict
    systole: float
    argmin: tuple = field(default=())

    def to_dict(self):
        p = self.params
        return {
            "params": {"n": p.n, "genus": p.genus, "c": p.c, "t": p.t, "s": p.s},
            "candidates": self.candidates.as_dict(),
            "lift_chains": {
                f.value: {"r1": ch.r1, "r2": ch.r2, "r3": ch.r3, "product": ch.product}
                for f, ch in self.lifts.items()
            },
            "lifted": {f.value: v for f, v in self.lifted.items()},
            "systole": self.systole,
            "argmin": [f.value for f in self.argmin],
        }


def systole_report(p):
    cand = candidate_lengths(p)
    lifts = {f: lift_chain(f, p.n) for f in FAMILIES}
    lifted = {f: lifts[f].product * cand[f] for f in FAMILIES}
    sys_ = min(lifted.values())
    argmin = tuple(f for f in FAMILIES if lifted[f] - sys_ <= ARGMIN_TIE)
    return SystoleReport(p, cand, lifts, lifted, sys_, argmin)


@dataclass(frozen=True)
class Partials:
    """Derivatives of cosh(length), as functions of (c, t) with s = s(c)."""

    ds_dc: float
    dCD_dt: float
    dDE_dt: float
    dDE_dc: float
    dC_dt: float
    dC_dc: float


def analytic_partials(p):
    c, t, s = p.c, p.t, p.s
    ch, sh = math.cosh, math.sinh
    ds_dc = -ch(c / 2) * sh(s / 2) / (ch(s / 2) * sh(c / 2))
    u, v = t / 2, c - t / 2
    return Partials(
        ds_dc=ds_dc,
        dCD_dt=0.5 * sh(t / 2) * ch(s / 2),
        dDE_dt=-0.5 * ch(s / 2) * sh((c - t) / 2),
        dDE_dc=0.5 * (sh(s / 2) * ds_dc * ch((c - t) / 2) + ch(s / 2) * sh((c - t) / 2)),
        dC_dt=0.5 * (ch(s) + 1) * sh(t - c),
        dC_dc=sh(s) * ds_dc * ch(u) * ch(v) + ch(s) * ch(u) * sh(v) - sh(u) * ch(v),
    )


def dual_params(p):
    """Re-coordinatise the same surface so that the CD and CE curves swap.

    The new cuff half-length is twice the CD length; the new twist is chosen
    so the new CD curve has the old CE length c/2.
    """
    c2 = 2.0 * candidate_lengths(p).len_CD
    s2 = float(seam_length(p.n, c2))
    # cosh(t2/2) - 1 = (cosh(c/2) - cosh(s2/2)) / cosh(s2/2), written without cancellation
    num = 2.0 * math.sinh((p.c + s2) / 4) * math.sinh((p.c - s2) / 4)
    excess = num / math.cosh(s2 / 2)
    if excess < 0:
        raise OutOfDomain(
            f"dual twist undefined: cosh(c/2) < cosh(s''/2) (c={p.c!r}, s''={s2!r})"
        )
    t2 = 4.0 * math.asinh(math.sqrt(excess / 2.0))
    if t2 > c2:
        raise OutOfDomain(f"dual twist {t2!r} exceeds dual cuff half-length {c2!r}")
    return make_params(p.n, c2, t2)


def sigma12_boundary(p):
    """Boundary length of the genus-1, two-holed subsurface cut out by seams."""
    return hexagon_opposite(p.c, p.c, p.s)


def annulus_relations(l, k):
    """Return ``(h, residual)`` for the equilateral annulus configuration.

    ``h`` solves cosh^2 h = (cosh l + cosh k) / (cosh k - 1); the residual
    cosh k - cosh h cosh(k/2) vanishes when the three curves are equal.
    """
    ck = math.cosh(k)
    if not ck > 1.0:
        raise DomainError(f"annulus needs k > 0, got k={k!r}")
    q = (math.cosh(l) + ck) / (ck - 1.0)
    if q < 1.0:
        raise DomainError(f"annulus quotient {q!r} < 1")
    h = acosh_guarded(math.sqrt(q))
    return h, ck - math.cosh(h) * math.cosh(k / 2)
