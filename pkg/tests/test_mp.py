"""Arithmetic layer: constants against published digits, exact
round-trips, and the basic algebra the rest of the package leans on."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lihex.errors import PoleError, PrecisionError
from lihex.mp import special as sp
from lihex.mp.cplx import MpComplex
from lihex.mp.real import (MpReal, atan, cos, exp, ln, log2_const, pi_const,
                           pow_int, sin)

P = 200

# fifty decimal places each, truncated; the trailing digit is compared
# only through place 45 to stay clear of rounding at the cut
KNOWN = {
    "pi": "3.14159265358979323846264338327950288419716939937510",
    "log2": "0.69314718055994530941723212145817656807550013436025",
    "zeta3": "1.20205690315959428539973816151144999076498629234049",
    "zeta5": "1.03692775514336992633136548645703416805708091950191",
    "beta3": "0.96894614625936938048363484584691860006954026768389",
    "catalan": "0.91596559417721901505460351493238411077414937428167",
}


def _places(s: str, n: int) -> str:
    return s[:s.index(".") + 1 + n]


def test_constants_match_published_digits():
    vals = {
        "pi": pi_const(P),
        "log2": log2_const(P),
        "zeta3": sp.zeta(3, P),
        "zeta5": sp.zeta(5, P),
        "beta3": sp.dirichlet_beta(3, P),
        "catalan": sp.dirichlet_beta(2, P),
    }
    for name, v in vals.items():
        assert _places(v.to_decimal(46), 45) == _places(KNOWN[name], 45), name


def test_pi_hex_expansion():
    fx = pi_const(300).to_fixed(256)
    frac = fx % (1 << 256)
    assert format(frac >> (256 - 64), "016X") == "243F6A8885A308D3"


def test_elementary_identities():
    wp = 256
    one = MpReal.from_int(1, wp)
    # exp(ln 2) = 2, sin^2 + cos^2 = 1 at x = 1/3, atan(1) = pi/4
    d = exp(log2_const(wp), wp) - MpReal.from_int(2, wp)
    assert d.is_zero or d.man.bit_length() + d.exp < -(wp - 16)
    x = MpReal.from_fraction(Fraction(1, 3), wp)
    s, c = sin(x, wp), cos(x, wp)
    d = s.mul(s, wp).add(c.mul(c, wp), wp) - one
    assert d.is_zero or d.man.bit_length() + d.exp < -(wp - 16)
    d = atan(one, wp).mul(4, wp) - pi_const(wp)
    assert d.is_zero or d.man.bit_length() + d.exp < -(wp - 16)


def test_ln_pow_roundtrip():
    wp = 192
    for q in (Fraction(3, 7), Fraction(13, 5), Fraction(1, 1000)):
        x = MpReal.from_fraction(q, wp)
        d = exp(ln(x, wp), wp) - x
        assert d.is_zero or d.man.bit_length() + d.exp < -(wp - 24)


@given(st.fractions(min_value=-100, max_value=100,
                    max_denominator=1 << 30))
def test_from_fraction_to_fraction_dyadic(q):
    # denominators that are powers of two are represented exactly
    q = Fraction(q.numerator, 1 << q.denominator.bit_length())
    v = MpReal.from_fraction(q, 128)
    if q.numerator.bit_length() <= 100:
        assert v.to_fraction() == q


@given(st.integers(min_value=-(1 << 60), max_value=1 << 60),
       st.integers(min_value=-(1 << 60), max_value=1 << 60))
def test_add_mul_match_exact_integers(a, b):
    wp = 160
    va, vb = MpReal.from_int(a, wp), MpReal.from_int(b, wp)
    assert (va + vb).to_fraction() == a + b
    assert va.mul(vb, wp).to_fraction() == a * b


@given(st.fractions(min_value=Fraction(1, 1000), max_value=1000,
                    max_denominator=10**6))
def test_sqrt_squares_back(q):
    wp = 160
    v = MpReal.from_fraction(q, wp)
    r = v.sqrt(wp)
    d = r.mul(r, wp) - v
    assert d.is_zero or (d.man.bit_length() + d.exp
                         <= v.man.bit_length() + v.exp - (wp - 8))


@given(st.fractions(min_value=-8, max_value=8, max_denominator=10**9),
       st.integers(min_value=32, max_value=512))
def test_to_fixed_within_half_ulp(q, wp):
    v = MpReal.from_fraction(q, wp + 64)
    fx = v.to_fixed(wp)
    assert abs(Fraction(fx, 1 << wp) - v.to_fraction()) <= Fraction(1, 1 << (wp + 1))


def test_pow_int_matches_repeated_mul():
    wp = 160
    x = MpReal.from_fraction(Fraction(7, 5), wp)
    acc = MpReal.from_int(1, wp)
    for _ in range(11):
        acc = acc.mul(x, wp)
    d = pow_int(x, 11, wp) - acc
    assert d.is_zero or d.man.bit_length() + d.exp < acc.man.bit_length() + acc.exp - (wp - 16)


def test_zeta_and_beta_guards():
    with pytest.raises(Exception):
        sp.zeta(1, 128)
    with pytest.raises(PoleError):
        sp.gamma(MpReal.from_int(-3, 128), 128)


def test_polylog_small_argument():
    # Li_2(1/2) = pi^2/12 - log^2(2)/2
    wp = 256
    z = MpComplex.from_fractions(Fraction(1, 2), Fraction(0), wp)
    got = sp.polylog(2, z, wp).re
    pi2 = pi_const(wp).mul(pi_const(wp), wp)
    l2 = log2_const(wp)
    want = pi2.mul(Fraction(1, 12), wp) - l2.mul(l2, wp).mul(Fraction(1, 2), wp)
    d = got - want
    assert d.is_zero or d.man.bit_length() + d.exp < -(wp - 24)


def test_bernoulli_exact_values():
    assert sp.bernoulli(2) == Fraction(1, 6)
    assert sp.bernoulli(12) == Fraction(-691, 2730)


def test_precision_bounds_are_enforced():
    with pytest.raises(PrecisionError):
        MpReal.make(1, 12345, 0, 1)
