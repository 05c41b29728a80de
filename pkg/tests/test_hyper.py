"""Hypergeometric side of the ladder identities.

The closed 3F2 forms, the W kernel and its reflection, the rational
pole-sum forms of U, the exact asymptotic integers, the Pochhammer
product identities, and the exponential expansion of U.
"""

import math
from fractions import Fraction as Q

import pytest

from lihex.errors import DivergenceError, DomainError, PoleError, UnknownName
from lihex.hyper import (CHECKS, F5Args, GENFN_IDS, POCHHAMMER_IDS, U, Utilde,
                         WArgs, asymp_battery, asymp_coeff, catalan_binomial,
                         check_recurrence, check_trig_forms, eval_W,
                         expu_check, f5, genfn_hyp, genfn_pf, geo_checks,
                         pochhammer_check, reflection_check, u_rational,
                         utilde_rational)
from lihex.mp.cplx import MpComplex
from lihex.mp.real import MpReal, pi_const
from lihex.series import eval_formula


def _mag(x: MpReal) -> float:
    return float("-inf") if x.is_zero else float(x.man.bit_length() + x.exp)


# ----------------------------------------------------------------------
# the W kernel

def test_w_at_origin_is_half_pi_squared():
    P = 512
    w = eval_W(WArgs(Q(0), Q(0), Q(0), Q(0)), P)
    pi_ = pi_const(P + 16)
    assert _mag(w - pi_.mul(pi_, P + 16).mul(Q(1, 2), P)) < -500


@pytest.mark.parametrize("pt", [
    (Q(1, 10), Q(1, 5), Q(1, 20), Q(-1, 10)),
    (Q(-1, 6), Q(1, 4), Q(1, 3), Q(-2, 5)),
])
def test_w_argument_pair_symmetry(pt):
    P = 256
    a1, a2, a3, a4 = pt
    base = eval_W(WArgs(a1, a2, a3, a4), P)
    assert _mag(base - eval_W(WArgs(a2, a1, a3, a4), P)) < -(P - 16)
    assert _mag(base - eval_W(WArgs(a1, a2, a4, a3), P)) < -(P - 16)


@pytest.mark.parametrize("pt", [
    (Q(1, 10), Q(1, 8), Q(1, 10), Q(1, 8)),
    (Q(-1, 6), Q(1, 4), Q(-1, 6), Q(1, 4)),
    (Q(1, 3), Q(-1, 7), Q(2, 5), Q(1, 9)),
])
def test_reflection_formula(pt):
    rep = reflection_check(WArgs(*pt), 256)
    assert rep.passed, rep


def test_w_divergence_outside_open_box():
    with pytest.raises(DivergenceError):
        eval_W(WArgs(Q(1, 2), Q(0), Q(0), Q(0)), 128)


def test_w_args_validation():
    with pytest.raises(DomainError):
        WArgs(Q(0), Q(0), Q(-1, 2), Q(0))


# ----------------------------------------------------------------------
# the closed-form quotient f5

@pytest.mark.parametrize("args,want", [
    ((Q(1), Q(1, 2), Q(0), Q(-1)), Q(69, 8)),
    ((Q(1, 2), Q(0), Q(1, 2), Q(-1, 2)), Q(0)),
    ((Q(1, 2), Q(1, 3), Q(1, 6), Q(-1, 2)), Q(13, 54)),
    ((Q(1, 3), Q(1, 6), Q(1, 3), Q(-1, 3)), Q(-19, 72)),
])
def test_f5_exact_rationals(args, want):
    assert f5(F5Args(*args)) == want


# ----------------------------------------------------------------------
# generating functions: partial fractions vs 3F2 vs trig forms

def test_genfn_forms_agree_at_one_tenth():
    P = 256
    for name in "BDFG":
        pf = genfn_pf(name, Q(1, 10), P).re
        hyp = genfn_hyp(name, Q(1, 10), P)
        assert _mag(pf - hyp) < -224, name


def test_genfn_registry_and_guards():
    assert {n for n, g in GENFN_IDS.items() if g.has_hyp} == set("ABCDFG")
    with pytest.raises(DomainError):
        genfn_hyp("E", Q(1, 10), 128)
    with pytest.raises(UnknownName):
        genfn_hyp("X", Q(1, 10), 128)
    with pytest.raises(DomainError):
        genfn_hyp("A", Q(1, 2), 128)


def test_f_over_t_tends_to_half_pi():
    P = 128
    t = Q(1, 1 << 16)
    v = genfn_pf("F", t, P).re.mul(1 << 16, P)
    assert _mag(v - pi_const(P).mul(Q(1, 2), P)) < -13


@pytest.mark.parametrize("name,t", [
    ("A", Q(1, 10)), ("B", Q(1, 4)), ("C", Q(1, 10)), ("D", Q(1, 7)),
])
def test_trig_decompositions(name, t):
    assert check_trig_forms(name, t, 256).passed


def test_contiguous_recurrences():
    P = 256
    assert check_recurrence("F", Q(1, 3), P).passed
    assert check_recurrence("H", Q(1, 3), P).passed
    z = MpComplex.from_fractions(Q(1, 5), Q(1, 7), P)
    assert check_recurrence("G", z, P).passed


# ----------------------------------------------------------------------
# U and its lattice values

def test_u_series_matches_rational_at_five():
    P = 256
    d = U(Q(5), P) - MpReal.from_fraction(Q(20, 3), P)
    assert _mag(d) < -(P - 16)


def test_u_lattice_closed_forms():
    assert u_rational(5) == Q(20, 3)
    assert u_rational(10) == Q(20, 3)
    assert u_rational(-5) == Q(1900, 3)
    assert u_rational(15) == u_rational(Q(15))


def test_u_pole_data_at_minus_ten():
    res, cst = u_rational(-10)
    assert (res, cst) == (Q(-25600), Q(20310))
    # the numeric evaluator refuses the pole outright
    with pytest.raises(PoleError):
        U(Q(-10), 128)


def test_u_residue_shows_up_numerically():
    eps = Q(1, 1 << 20)
    v = U(Q(-10) + eps, 160)
    ratio = v.mul(eps, 96).div(Q(-25600), 96)
    assert abs(ratio.to_float() - 1.0) < 1e-3


def test_u_approaches_six():
    v = U(Q(50), 96)
    assert abs(v.to_float() / 6 - 1) < 0.10


def test_utilde_values():
    assert utilde_rational(Q(5, 2)) == 15
    assert utilde_rational(Q(-5, 2)) == (Q(125), Q(-250))
    d = Utilde(Q(5, 2), 192) - MpReal.from_int(15, 192)
    assert _mag(d) < -(192 - 32)
    with pytest.raises(PoleError):
        Utilde(Q(4), 128)


def test_rational_family_guards():
    with pytest.raises(DomainError):
        u_rational(7)
    with pytest.raises(DomainError):
        u_rational(Q(5, 3))
    with pytest.raises(DomainError):
        utilde_rational(Q(7, 2))


# ----------------------------------------------------------------------
# asymptotic integers

ASYMP_SIX = (11, 157, -1749, -433651, -43430405, -4000517955)


def test_first_six_asymptotic_integers():
    assert tuple(a.value for a in asymp_battery(6)) == ASYMP_SIX


def test_asymp_oddness_and_divisibility():
    for m in range(1, 25):
        k = asymp_coeff(m)
        assert k % 2 == 1, m
        assert (k % 3 == 0) == (m % 3 == 0), m


def test_asymp_bounds():
    with pytest.raises(DomainError):
        asymp_coeff(0)
    with pytest.raises(DomainError):
        asymp_coeff(65)


@pytest.mark.slow
def test_asymp_sign_change_spacing_through_64():
    signs = [asymp_coeff(m) > 0 for m in range(1, 65)]
    changes = [m + 1 for m in range(1, 64) if signs[m] != signs[m - 1]]
    assert changes == [3, 11, 18, 25, 33, 40, 47, 55, 62]
    gaps = [b - a for a, b in zip(changes, changes[1:])]
    assert abs(sum(gaps) / len(gaps) - 7.38257) < 0.5


@pytest.mark.slow
def test_k39_structure():
    k = asymp_coeff(39)
    assert k < 0 and k % (3 * 5**8) == 0
    assert len(str(-k // (3 * 5**8))) == 84


# ----------------------------------------------------------------------
# Pochhammer products, the exponential expansion, geometric checks

@pytest.mark.parametrize("which,t", [
    ("poca", Q(3, 10)), ("pocb", Q(1, 4)), ("pocc", Q(2, 5)),
    ("pocd", Q(1, 2)), ("poc4", Q(3, 10)), ("poc6", Q(3, 10)),
])
def test_pochhammer_identities(which, t):
    assert pochhammer_check(which, t, 256).passed


def test_pochhammer_guards():
    assert set(POCHHAMMER_IDS) == {"poca", "pocb", "pocc", "pocd",
                                   "poc4", "poc6"}
    with pytest.raises(UnknownName):
        pochhammer_check("poce", Q(1, 2), 128)
    with pytest.raises(DomainError):
        pochhammer_check("poca", Q(3, 2), 128)


def test_exponential_expansion_through_t5():
    rep = expu_check(512)
    assert rep.passed and rep.log2_residual < -128


def test_geometric_sums_exact():
    reports = geo_checks(256)
    assert all(r.passed for r in reports)
    names = {r.name for r in reports}
    assert len(names) == len(reports) == 3


def test_catalan_binomial_form():
    P = 128
    d = catalan_binomial(P) - eval_formula("catalan", P + 16)
    assert _mag(d) < -(P - 8)


def test_registry_is_the_nine_batteries():
    assert set(CHECKS) == {"W", "inv", "genfn", "recur", "U", "asymp",
                           "poch", "expu", "geo"}
    for r in CHECKS["U"](192):
        assert r.passed, r.name
