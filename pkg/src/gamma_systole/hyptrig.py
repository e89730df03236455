"""Hyperbolic trigonometry kernels.

All functions accept floats or numpy arrays (broadcast elementwise) and
return the same kind.  Lengths are plain nonnegative floats; angles are in
radians.
"""
import numpy as np

from .config import ACOSH_CLAMP
from .errors import DomainError


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def acosh_guarded(x, tol=ACOSH_CLAMP):
    """arccosh that clamps round-off just below 1 and rejects real deficits."""
    x = np.asarray(x, dtype=float)
    bad = ~(x >= 1.0 - tol)  # also catches nan
    if np.any(bad):
        worst = float(np.nanmin(x)) if np.any(~np.isnan(x)) else float("nan")
        raise DomainError(f"arccosh argument {worst!r} below 1 - {tol:g}")
    return _out(np.arccosh(np.maximum(x, 1.0)))


def acosh1p(excess):
    """arccosh(1 + excess) without the cancellation of forming 1 + excess."""
    excess = np.asarray(excess, dtype=float)
    if np.any(~(excess >= -ACOSH_CLAMP)):
        raise DomainError(f"arccosh argument below 1 by {-float(np.nanmin(excess))!r}")
    return _out(2.0 * np.arcsinh(np.sqrt(np.maximum(excess, 0.0) / 2.0)))


def right_triangle_hyp(a, b):
    # cosh c = cosh a cosh b, so cosh c - 1 = 2 sinh^2(a/2) cosh b + 2 sinh^2(b/2)
    return acosh1p(2 * np.sinh(a / 2) ** 2 * np.cosh(b) + 2 * np.sinh(b / 2) ** 2)


def trirectangle_partner(c_half, phi):
    """Side opposite ``c_half`` in a trirectangle with acute angle ``phi``.

    Solves sinh(result) * sinh(c_half) = cos(phi).
    """
    c_half = np.asarray(c_half, dtype=float)
    if np.any(~(c_half > 0)):
        raise DomainError("trirectangle side must be positive (partner diverges at 0)")
    phi = np.asarray(phi, dtype=float)
    if np.any(~((phi > 0) & (phi <= np.pi / 2))):
        raise DomainError(f"angle {phi!r} outside (0, pi/2]")
    return _out(np.arcsinh(np.cos(phi) / np.sinh(c_half)))


def quad_two_right(d, a, b):
    """Distance between the far ends of perpendiculars a, b erected on a
    segment of length d, on the same side."""
    # cosh d cosh a cosh b - sinh a sinh b - 1, rearranged around cosh(a - b)
    excess = 2 * np.sinh(d / 2) ** 2 * np.cosh(a) * np.cosh(b) + 2 * np.sinh((a - b) / 2) ** 2
    return acosh1p(excess)


def hexagon_opposite(a1, a2, m):
    """Side of a right-angled hexagon opposite ``m``.

    ``a1`` and ``a2`` are the two sides adjacent to ``m``.
    """
    x = np.sinh(a1) * np.sinh(a2) * np.cosh(m) - np.cosh(a1) * np.cosh(a2)
    if np.any(~(x >= 1.0 - ACOSH_CLAMP)):
        raise DomainError(
            f"no right-angled hexagon with sides ({a1}, {m}, {a2}): cosh of opposite side = {x}"
        )
    return acosh_guarded(x)
