"""Invariant battery run by ``gamma-systole verify``."""
import math
from dataclasses import dataclass

import numpy as np

from .config import TABLE1, TOLERANCES
from .errors import OutOfDomain
from .gamma2n import (
    FAMILIES,
    Family,
    analytic_partials,
    annulus_relations,
    candidate_lengths,
    dual_params,
    lift_chain,
    make_params,
    sigma12_boundary,
    systole_report,
)
from .maximizer import (
    cubic_residual,
    optimal_surface,
    printed_K_variants,
    printed_twist,
    shape_param,
    solve_K_closed_form,
    solve_K_numeric,
)


@dataclass
class Check:
    name: str
    passed: bool
    measured: float
    tol: float
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.name}: measured {self.measured:.3e} (tol {self.tol:.1e})"
        return out + (f"  {self.detail}" if self.detail else "")


def _c_grid(num=40):
    return np.geomspace(0.05, 10.0, num)


def check_trirectangle(n_max):
    tol = TOLERANCES["trirectangle_identity"]
    worst = 0.0
    for n in range(3, n_max + 1):
        for c in _c_grid():
            p = make_params(n, c, 0.0)
            worst = max(worst, abs(math.sinh(p.s / 2) * math.sinh(p.c / 2) - math.cos(math.pi / n)))
    return Check("trirectangle identity sinh(s/2)sinh(c/2)=cos(pi/n)", worst <= tol, worst, tol)


# expected multiplier rows, odd / even n, per family
_LIFT_ROWS = {
    Family.C: lambda n: (1, 1, 2),
    Family.CD: lambda n: (2, 1, 2),
    Family.CE: lambda n: (2, 1, 2),
    Family.CE_PRIME: lambda n: (2, 1, 2),
    Family.DE: lambda n: (2, n, 2 if n % 2 else 1),
}


def check_lift_table(n_max):
    bad = []
    for n in range(3, n_max + 1):
        for f in FAMILIES:
            ch = lift_chain(f, n)
            row = _LIFT_ROWS[f](n)
            if (ch.r1, ch.r2, ch.r3) != row or ch.product != math.prod(row):
                bad.append(f"{f.value}@n={n}")
    return Check("lift multipliers match the cover table", not bad, float(len(bad)), 0.0, " ".join(bad[:5]))


def check_endpoints(n_max):
    violations = 0
    worst = math.inf
    for n in range(3, n_max + 1):
        for c in _c_grid():
            lo = candidate_lengths(make_params(n, c, 0.0))
            hi = candidate_lengths(make_params(n, c, c))
            gap0 = lo.len_C - 2 * lo.len_CD
            gap1 = 2 * hi.len_CD - hi.len_C
            worst = min(worst, gap0, gap1)
            violations += (gap0 <= 0) + (gap1 <= 0)
    return Check(
        "endpoint orderings 2CD<C at t=0, 2CD>C at t=c",
        violations == 0,
        float(violations),
        0.0,
        f"smallest margin {worst:.3e}",
    )


def fd_partials(p, h=1e-6):
    """Central differences of cosh(length) in t (fixed c) and c (fixed t)."""

    def coshes(c, t):
        q = candidate_lengths(make_params(p.n, c, t))
        return math.cosh(q.len_CD), math.cosh(q.len_DE), math.cosh(q.len_C)

    tp, tm = coshes(p.c, p.t + h), coshes(p.c, p.t - h)
    cp, cm = coshes(p.c + h, p.t), coshes(p.c - h, p.t)
    dt = [(a - b) / (2 * h) for a, b in zip(tp, tm)]
    dc = [(a - b) / (2 * h) for a, b in zip(cp, cm)]
    return {"dCD_dt": dt[0], "dDE_dt": dt[1], "dC_dt": dt[2], "dDE_dc": dc[1], "dC_dc": dc[2]}


def random_interior(rng, count, n_range=(3, 20), c_range=(0.3, 3.0), margin=0.05):
    out = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        c = float(rng.uniform(*c_range))
        t = float(rng.uniform(margin * c, (1 - margin) * c))
        out.append(make_params(n, c, t))
    return out


def max_partial_error(points):
    worst = 0.0
    for p in points:
        an = analytic_partials(p)
        for key, fd in fd_partials(p).items():
            a = getattr(an, key)
            worst = max(worst, abs(a - fd) / abs(a))
    return worst


def check_partials(samples=200, seed=1):
    tol = TOLERANCES["partials_fd_rel"]
    worst = max_partial_error(random_interior(np.random.default_rng(seed), samples))
    return Check("analytic cosh-length partials vs central differences", worst <= tol, worst, tol)


def dual_errors(points):
    """Largest (involution, systole) discrepancy and number of points in range."""
    inv = sys_ = 0.0
    used = 0
    for p in points:
        try:
            q = dual_params(p)
            r = dual_params(q)
        except OutOfDomain:
            continue
        used += 1
        inv = max(inv, abs(r.c - p.c), abs(r.t - p.t))
        sys_ = max(sys_, abs(systole_report(q).systole - systole_report(p).systole))
    return inv, sys_, used


def check_dual(samples=400, seed=2):
    pts = random_interior(np.random.default_rng(seed), samples, margin=0.0)
    inv, sys_, used = dual_errors(pts)
    t_inv, t_sys = TOLERANCES["dual_involution"], TOLERANCES["dual_systole"]
    return [
        Check("dual coordinates are an involution", inv <= t_inv and used > 0, inv, t_inv, f"{used} points in chart"),
        Check("dual coordinates preserve the systole", sys_ <= t_sys and used > 0, sys_, t_sys),
    ]


def check_dual_fixed_point(n_max):
    tol = TOLERANCES["dual_fixed_point"]
    worst = 0.0
    for n in range(3, n_max + 1):
        p = optimal_surface(n).params()
        q = dual_params(p)
        worst = max(worst, abs(q.c - p.c), abs(q.t - p.t))
    return Check("optimum is a fixed point of the dual map", worst <= tol, worst, tol)


def check_roots(n_max):
    t_res, t_agree = TOLERANCES["cubic_residual"], TOLERANCES["closed_vs_numeric"]
    res = agree = 0.0
    for n in range(3, max(n_max, 3) + 1):
        L = shape_param(n)
        K = solve_K_closed_form(L).selected
        res = max(res, abs(cubic_residual(K, L)))
        agree = max(agree, abs(K - solve_K_numeric(L)))
    return [
        Check("cubic residual at selected root", res <= t_res, res, t_res),
        Check("closed-form root matches bisection", agree <= t_agree, agree, t_agree),
    ]


def check_bolza():
    tol = TOLERANCES["bolza"]
    err = abs(solve_K_closed_form(shape_param(3)).selected - (1 + math.sqrt(2)))
    return Check("genus-2 optimum is Bolza, K = 1 + sqrt 2", err <= tol, err, tol)


def equalization_errors(n):
    o = optimal_surface(n)
    rep = systole_report(o.params())
    cand = rep.candidates
    err = max(abs(cand.len_C - o.c_star), abs(2 * cand.len_CD - o.c_star))
    margin = min(rep.lifted[Family.DE], rep.lifted[Family.CE_PRIME]) - rep.systole
    return err, margin


def check_equalization(n_max):
    tol = TOLERANCES["equalization"]
    worst, margin = 0.0, math.inf
    for n in range(3, n_max + 1):
        e, m = equalization_errors(n)
        worst, margin = max(worst, e), min(margin, m)
    return [
        Check("equalization len_C = 2 len_CD = c at optimum", worst <= tol, worst, tol),
        Check("lifted DE and CE' exceed the optimal systole", margin > 0, margin, 0.0, "measured = smallest excess"),
    ]


def annulus_residual(n):
    o = optimal_surface(n)
    l = sigma12_boundary(o.params())
    _, res = annulus_relations(l, o.c_star)
    return res


def check_annulus(n_max):
    tol = TOLERANCES["annulus_residual"]
    worst = max(abs(annulus_residual(n)) for n in range(3, n_max + 1))
    return Check("annulus closure cosh k = cosh h cosh(k/2) at optimum", worst <= tol, worst, tol)


def check_table1():
    tol = TOLERANCES["table1"]
    worst = max(abs(optimal_surface(g + 1).K - K) for g, K in TABLE1.items())
    return Check("published K values for genus 2..6", worst <= tol, worst, tol)


def info_lines():
    o = optimal_surface(3)
    lines = [
        f"[INFO] n=3 twist: printed (K+1)/(2cos(pi/n)) form gives t={printed_twist(3, o.K):.6f}; "
        f"equalizing twist t={o.t_star:.6f} (c={o.c_star:.6f})",
    ]
    for n in (3, 4):
        L = shape_param(n)
        v = printed_K_variants(L)
        parts = ", ".join(f"{k}={z.real:.6f}{z.imag:+.2e}j" for k, z in v.items())
        lines.append(f"[INFO] n={n} printed K variants: {parts}; re-derived K={solve_K_closed_form(L).selected:.6f}")
    return lines


def run_battery(n_max):
    checks = [
        check_trirectangle(n_max),
        check_lift_table(n_max),
        check_endpoints(n_max),
        check_partials(),
        *check_dual(),
        check_dual_fixed_point(n_max),
        *check_roots(n_max),
        check_bolza(),
        *check_equalization(n_max),
        check_annulus(n_max),
        check_table1(),
    ]
    return checks
