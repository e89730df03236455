import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gamma_systole import (
    FAMILIES,
    DomainError,
    Family,
    InvalidParams,
    OutOfDomain,
    analytic_partials,
    annulus_relations,
    candidate_lengths,
    dual_params,
    lift_chain,
    make_params,
    sigma12_boundary,
    systole_report,
)
from gamma_systole.verify import fd_partials

from conftest import bisect_root


@st.composite
def surfaces(draw, c_lo=0.05, c_hi=6.0):
    n = draw(st.integers(3, 40))
    c = draw(st.floats(c_lo, c_hi))
    t = draw(st.floats(0.0, 1.0)) * c
    return make_params(n, c, t)


def test_make_params_seam_from_bisection():
    p = make_params(3, 1.52857, 0.98242)
    half = bisect_root(lambda x: math.sinh(x) * math.sinh(1.52857 / 2) - 0.5, 0.0, 10.0)
    assert p.s == pytest.approx(2 * half, abs=1e-12)
    assert p.s == pytest.approx(1.1284, abs=1e-4)
    assert p.genus == 2


@pytest.mark.parametrize("args", [(3, 1.0, 1.5), (2, 1.0, 0.5), (3, 0.0, 0.0), (3, 1.0, -0.1), (3.5, 1.0, 0.2)])
def test_make_params_rejects(args):
    with pytest.raises(InvalidParams):
        make_params(*args)


def test_trirectangle_identity_grid():
    for n in range(3, 101):
        for c in np.geomspace(0.05, 10, 30):
            p = make_params(n, c, 0.0)
            assert abs(math.sinh(p.s / 2) * math.sinh(c / 2) - math.cos(math.pi / n)) < 1e-12


def test_candidates_at_optimum(bolza):
    q = candidate_lengths(bolza.params())
    assert q.len_C == pytest.approx(1.5286, abs=1e-4)
    assert q.len_C == pytest.approx(bolza.c_star, abs=1e-12)


def test_candidates_endpoints():
    p0 = make_params(5, 1.7, 0.0)
    assert candidate_lengths(p0).len_CD == pytest.approx(p0.s / 2, abs=1e-14)
    p1 = make_params(5, 1.7, 1.7)
    assert candidate_lengths(p1).len_DE == pytest.approx(p1.s / 2, abs=1e-14)


@given(surfaces())
def test_candidate_formulas(p):
    q = candidate_lengths(p)
    c, t, s = p.c, p.t, p.s
    ch, sh = math.cosh, math.sinh
    assert q.len_CE == c / 2
    assert ch(q.len_CD) == pytest.approx(ch(t / 2) * ch(s / 2), rel=1e-12)
    assert ch(q.len_DE) == pytest.approx(ch((c - t) / 2) * ch(s / 2), rel=1e-12)
    cep = ch(s) * ch(t / 2) * ch((c - t) / 2) - sh(t / 2) * sh((c - t) / 2)
    assert ch(q.len_CE_prime) == pytest.approx(cep, rel=1e-12)
    cc = ch(s) * ch(t / 2) * ch(c - t / 2) - sh(t / 2) * sh(c - t / 2)
    assert ch(q.len_C) == pytest.approx(cc, rel=1e-12)
    assert all(q[f] > 0 for f in FAMILIES)


@pytest.mark.parametrize(
    "family, n, product",
    [(Family.CD, 5, 4), (Family.DE, 3, 12), (Family.DE, 4, 8), (Family.C, 7, 2), (Family.CE, 6, 4), (Family.CE_PRIME, 9, 4)],
)
def test_lift_products(family, n, product):
    ch = lift_chain(family, n)
    assert ch.product == product == ch.r1 * ch.r2 * ch.r3


def test_lift_chain_rows():
    assert lift_chain("DE", 7) == lift_chain(Family.DE, 7)
    assert (lift_chain("DE", 8).r2, lift_chain("DE", 8).r3) == (8, 1)
    assert (lift_chain("C", 8).r1, lift_chain("C", 8).r3) == (1, 2)


def test_systole_report_optimum(bolza):
    rep = systole_report(bolza.params())
    assert rep.systole == pytest.approx(3.0571, abs=2e-4)
    assert rep.systole == pytest.approx(2 * math.acosh(1 + math.sqrt(2)), abs=1e-12)
    assert {Family.CE, Family.CD, Family.C} <= set(rep.argmin)
    assert rep.lifted[Family.CE] == pytest.approx(2 * bolza.c_star, abs=1e-15)


def test_systole_report_zero_twist():
    p = make_params(3, 1.52857, 0.0)
    rep = systole_report(p)
    assert rep.argmin == (Family.CD,)
    assert rep.systole == pytest.approx(2 * p.s, abs=1e-12)
    assert rep.systole == pytest.approx(2.2568, abs=1e-4)
    assert rep.systole < 2 * p.c


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13, 40])
def test_fake_cuff_above_cuff_below_threshold(n):
    # holds for c below ~1.92 (n = 3) .. ~2.63 (n = 40), which covers every optimum
    for c in np.linspace(0.05, 1.9, 100):
        for t in np.linspace(0, c, 100):
            rep = systole_report(make_params(n, c, t))
            assert rep.lifted[Family.CE_PRIME] > rep.lifted[Family.CE]


def test_fake_cuff_drops_below_cuff_for_long_cuffs():
    rep = systole_report(make_params(3, 3.0, 1.9))
    assert rep.lifted[Family.CE_PRIME] < rep.lifted[Family.CE]


def test_report_to_dict_fields(bolza):
    d = systole_report(bolza.params()).to_dict()
    assert set(d) == {"params", "candidates", "lift_chains", "lifted", "systole", "argmin"}
    assert d["lift_chains"]["DE"]["product"] == 12


def test_partials_signs_and_fd():
    p = make_params(3, 1.5, 0.7)
    an = analytic_partials(p)
    assert an.ds_dc < 0 and an.dCD_dt > 0 and an.dC_dt < 0 and an.dDE_dt < 0
    for key, fd in fd_partials(p).items():
        assert getattr(an, key) == pytest.approx(fd, rel=1e-6), key


@settings(max_examples=200)
@given(surfaces(c_lo=0.1, c_hi=4.0))
def test_partial_signs_interior(p):
    if not 1e-6 * p.c < p.t < p.c:
        return
    an = analytic_partials(p)
    assert an.ds_dc < 0
    assert an.dCD_dt > 0
    assert an.dC_dt < 0


def test_ds_dc_matches_seam_derivative():
    h = 1e-6
    p = make_params(6, 1.1, 0.3)
    fd = (make_params(6, 1.1 + h, 0.3).s - make_params(6, 1.1 - h, 0.3).s) / (2 * h)
    assert analytic_partials(p).ds_dc == pytest.approx(fd, rel=1e-7)


def test_endpoint_orderings():
    for n in range(3, 21):
        for c in np.geomspace(0.05, 10, 25):
            lo = candidate_lengths(make_params(n, c, 0.0))
            hi = candidate_lengths(make_params(n, c, c))
            p = make_params(n, c, 0.0)
            assert 2 * lo.len_CD == pytest.approx(p.s, abs=1e-12)
            assert math.cosh(lo.len_C) == pytest.approx(math.cosh(p.s) * math.cosh(c), rel=1e-12)
            assert 2 * lo.len_CD < lo.len_C
            ch2, sh2 = math.cosh(c / 2) ** 2, math.sinh(c / 2) ** 2
            assert math.cosh(2 * hi.len_CD) == pytest.approx(math.cosh(p.s) * ch2 + sh2, rel=1e-12)
            assert math.cosh(hi.len_C) == pytest.approx(math.cosh(p.s) * ch2 - sh2, rel=1e-12)
            assert 2 * hi.len_CD > hi.len_C


@pytest.mark.parametrize("n, c", [(3, 0.4), (4, 1.8), (9, 3.0)])
def test_monotone_in_twist(n, c):
    ts = np.linspace(0, c, 200)
    cd = [candidate_lengths(make_params(n, c, t)).len_CD for t in ts]
    cc = [candidate_lengths(make_params(n, c, t)).len_C for t in ts]
    assert np.all(np.diff(cd) > 0)
    assert np.all(np.diff(cc) < 0)


@given(surfaces())
def test_cd_shorter_than_other_side(p):
    if p.t < p.c:
        a = math.cosh(p.t / 2) * math.cosh(p.s / 2)
        b = math.cosh(p.c - p.t / 2) * math.cosh(p.s / 2)
        assert a < b


def test_dual_fixed_point(bolza):
    p = bolza.params()
    q = dual_params(p)
    assert q.c == pytest.approx(p.c, abs=1e-8)
    assert q.t == pytest.approx(p.t, abs=1e-8)


@settings(max_examples=300)
@given(surfaces(c_lo=0.2, c_hi=4.0))
def test_dual_involution_and_swap(p):
    if p.t < 1e-3 * p.c:
        # t enters len_CD quadratically, so recovering t near 0 is ill-conditioned
        return
    try:
        q = dual_params(p)
        r = dual_params(q)
    except OutOfDomain:
        return
    assert r.c == pytest.approx(p.c, abs=1e-8)
    assert r.t == pytest.approx(p.t, abs=1e-8)
    cp, cq = candidate_lengths(p), candidate_lengths(q)
    assert cq.len_CE == pytest.approx(cp.len_CD, abs=1e-10)
    assert cq.len_CD == pytest.approx(cp.len_CE, abs=1e-10)
    assert systole_report(q).systole == pytest.approx(systole_report(p).systole, abs=1e-10)


def test_dual_out_of_chart():
    # a large twist on a short cuff pushes the dual twist past the dual cuff
    with pytest.raises(OutOfDomain):
        dual_params(make_params(8, 2.6305830903446936, 1.4243587300646645))


def test_sigma12_boundary(bolza):
    l = sigma12_boundary(bolza.params())
    assert math.cosh(l) == pytest.approx(2.4143, abs=1e-3)
    assert math.cosh(l) == pytest.approx(bolza.K, abs=1e-9)


@pytest.mark.parametrize("n, c", [(3, 0.1), (3, 1.0), (7, 0.3), (20, 2.5)])
def test_sigma12_closed_form(n, c):
    # with the seam relation substituted: cosh l = 4cos^2(pi/n) (cosh c + 1) - 1
    expected = 4 * math.cos(math.pi / n) ** 2 * (math.cosh(c) + 1) - 1
    assert math.cosh(sigma12_boundary(make_params(n, c, 0.0))) == pytest.approx(expected, rel=1e-12)


def test_sigma12_monotone_in_seam():
    from gamma_systole.hyptrig import hexagon_opposite

    vals = [hexagon_opposite(1.0, 1.0, m) for m in np.linspace(2.0, 4.0, 20)]
    assert np.all(np.diff(vals) > 0)


def test_annulus_relations_at_optimum():
    h, res = annulus_relations(math.acosh(2.41431), math.acosh(2.41421))
    assert math.cosh(h) == pytest.approx(1.8479, abs=1e-3)
    assert abs(res) < 1e-3


def test_annulus_relations_errors():
    with pytest.raises(DomainError):
        annulus_relations(1.0, 0.0)


def test_annulus_residual_off_optimum():
    p = make_params(3, 1.3, 0.0)
    _, res = annulus_relations(sigma12_boundary(p), p.c)
    assert abs(res) > 1e-3
