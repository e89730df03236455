"""Maximal systole of the Gamma(2, n) family.

At the maximum the CE, CD and C curves have equal lifted length, which pins
K = cosh(systole / 2) as the root K > 1 of

    2K^3 - 3K^2 + 1 - L (K + 1)^2 = 0,    L = 4 cos^2(pi / n).

The root is computed in closed form (Cardano, or the trigonometric method
when all three roots are real) and independently by bisection.  A grid
search over (c, t) with zoom refinement serves as a model-free check.
"""
import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, NoValidRoot
from .gamma2n import lifted_lengths, make_params, seam_length


class Method(str, enum.Enum):
    CLOSED_FORM = "closed"
    NUMERIC_ROOT = "numeric"
    BRUTE_FORCE = "brute"


def _check_n(n):
    if int(n) != n or n < 3:
        raise InvalidParams(f"n must be an integer >= 3, got {n!r}")


def shape_param(n):
    _check_n(n)
    return 4.0 * math.cos(math.pi / n) ** 2


def cubic_residual(K, L):
    return 2 * K**3 - 3 * K**2 + 1 - L * (K + 1) ** 2


@dataclass(frozen=True)
class CubicRoots:
    roots: tuple
    selected: float
    discriminant: float


def _depressed(L):
    # monic form K^3 + a K^2 + b K + d, shifted by K = x + (L + 3)/6
    a, b, d = -(L + 3) / 2, -L, (1 - L) / 2
    p = b - a * a / 3
    q = 2 * a**3 / 27 - a * b / 3 + d
    return p, q, -a / 3


def discriminant(L):
    return (L**3 + 18 * L**2 - 27 * L) / 108


def solve_K_closed_form(L):
    if not 0 < L <= 4:
        raise InvalidParams(f"L must lie in (0, 4], got {L!r}")
    p, q, shift = _depressed(L)
    delta = discriminant(L)
    if delta >= 0:
        r = math.sqrt(delta)
        x = float(np.cbrt(-q / 2 + r) + np.cbrt(-q / 2 - r))
        roots = (x + shift,)
    else:
        # casus irreducibilis: p < 0 here
        m = 2 * math.sqrt(-p / 3)
        arg = 3 * q / (p * m)
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3
        roots = tuple(
            sorted(m * math.cos(theta - 2 * math.pi * k / 3) + shift for k in range(3))
        )
    above = [r for r in roots if r > 1]
    if not above:
        raise NoValidRoot(f"no root K > 1 of the systole cubic at L={L!r}: {roots}")
    if len(above) > 1:
        raise NoValidRoot(f"several roots K > 1 at L={L!r}: {roots}")
    return CubicRoots(roots, above[0], delta)


def solve_K_numeric(L, lo=1 + 1e-9, hi=10.0, tol=1e-13):
    """Bisection for the root of the systole cubic in (1, 10)."""
    flo, fhi = cubic_residual(lo, L), cubic_residual(hi, L)
    if flo * fhi > 0:
        raise NoValidRoot(f"no sign change of the cubic on [{lo}, {hi}] at L={L!r}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = cubic_residual(mid, L)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class Optimum:
    n: int
    K: float
    c_star: float
    t_star: float
    systole: float
    method: Method

    @property
    def genus(self):
        return self.n - 1

    def params(self):
        return make_params(self.n, self.c_star, self.t_star)

    def to_dict(self):
        return {
            "n": self.n,
            "genus": self.genus,
            "K": self.K,
            "c": self.c_star,
            "t": self.t_star,
            "systole": self.systole,
            "method": self.method.value,
        }


def optimal_twist(n, c):
    """Twist at which 2 * len_CD equals c: cosh(t/2) = cosh(c/2) / cosh(s/2)."""
    s = float(seam_length(n, c))
    # cosh(t/2) - 1 expressed as a product to keep precision for small t
    excess = 2 * math.sinh((c + s) / 4) * math.sinh((c - s) / 4) / math.cosh(s / 2)
    if excess < 0:
        raise NoValidRoot(f"cosh(c/2) < cosh(s/2) at n={n}, c={c!r}: no equalizing twist")
    return 4 * math.asinh(math.sqrt(excess / 2))


def optimum_from_K(n, K, method):
    c = math.acosh(K)
    return Optimum(n, K, c, optimal_twist(n, c), 2 * c, method)


def optimal_surface(n, method=Method.CLOSED_FORM):
    method = Method(method)
    L = shape_param(n)
    if method is Method.CLOSED_FORM:
        K = solve_K_closed_form(L).selected
    elif method is Method.NUMERIC_ROOT:
        K = solve_K_numeric(L)
    else:
        return brute_force_max(n)
    return optimum_from_K(n, K, method)


def printed_twist(n, K):
    """Twist from the printed cosh(t/2) = (K + 1) / (2 cos(pi/n)).

    Kept as a diagnostic only: it exceeds c for every n.
    """
    return 2 * math.acosh((K + 1) / (2 * math.cos(math.pi / n)))


def printed_K_variants(L):
    """Evaluate the two published closed forms for K as printed.

    Returns a dict of complex values (principal branches); the first uses the
    radicand L(L^2 + 18L + 27)/108, the second the T-form with
    sqrt(T^3 + 18T^2 - 27T) and the second term divided by the bare radicand
    expression rather than its cube root.
    """
    base = L**3 / 216 + L**2 / 8 + 5 * L / 8 - 1 / 8
    r = cmath.sqrt(L * (L * L + 18 * L + 27) / 108)
    first = (base + r) ** (1 / 3) + (base - r) ** (1 / 3) + (L + 3) / 6
    T = L
    A = T**3 + 27 * T**2 + 12 * math.sqrt(3) * cmath.sqrt(T**3 + 18 * T**2 - 27 * T) + 135 * T - 27
    second = A ** (1 / 3) / 6 + (T**2 + 18 * T + 9) / (6 * A) + (T + 3) / 6
    return {"abstract_form": complex(first), "theorem_form": complex(second)}


@dataclass(frozen=True)
class SearchConfig:
    c_min: float = 0.2
    c_max: float = 4.0
    c_points: int = 200
    t_points: int = 200
    rounds: int = 5
    zoom: float = 10.0

    def validate(self):
        if self.c_points < 2 or self.t_points < 2:
            raise InvalidParams("grid needs at least 2 points per axis")
        if not 0 < self.c_min < self.c_max:
            raise InvalidParams(f"need 0 < c_min < c_max, got [{self.c_min}, {self.c_max}]")
        if self.rounds < 0 or self.zoom <= 1:
            raise InvalidParams("rounds must be >= 0 and zoom > 1")


def brute_force_max(n, cfg=None):
    """Maximise the lifted-length lower envelope over (c, t) by grid search.

    The twist is sampled as a fraction u = t / c of the cuff half-length, so
    each round evaluates a rectangular grid in (c, u).  After each round the
    window shrinks by ``cfg.zoom`` around the incumbent.
    """
    _check_n(n)
    cfg = cfg or SearchConfig()
    cfg.validate()
    c_lo, c_hi, u_lo, u_hi = cfg.c_min, cfg.c_max, 0.0, 1.0
    best = (-math.inf, None, None)
    for _ in range(cfg.rounds + 1):
        cs = np.linspace(c_lo, c_hi, cfg.c_points)
        us = np.linspace(u_lo, u_hi, cfg.t_points)
        C, U = np.meshgrid(cs, us, indexing="ij")
        _, sys_ = lifted_lengths(n, C, U * C)
        i, j = np.unravel_index(np.argmax(sys_), sys_.shape)
        if sys_[i, j] >= best[0]:
            best = (float(sys_[i, j]), float(cs[i]), float(us[j]))
        _, c0, u0 = best
        hc = (c_hi - c_lo) / (2 * cfg.zoom)
        hu = (u_hi - u_lo) / (2 * cfg.zoom)
        c_lo, c_hi = max(cfg.c_min, c0 - hc), min(cfg.c_max, c0 + hc)
        u_lo, u_hi = max(0.0, u0 - hu), min(1.0, u0 + hu)
    value, c, u = best
    return Optimum(n, math.cosh(value / 2), c, u * c, value, Method.BRUTE_FORCE)


def genus_table(g_min, g_max):
    if not 2 <= g_min <= g_max:
        raise InvalidParams(f"need 2 <= g_min <= g_max, got ({g_min}, {g_max})")
    return [optimal_surface(g + 1) for g in range(g_min, g_max + 1)]
