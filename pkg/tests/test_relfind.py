"""Integer-relation detection and vector verification."""

import math
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from lihex.errors import DomainError, PrecisionError
from lihex.ladders import RELATIONS, _F11_LHS, _F11_LIS, _F11_MONS, _li_part_val
from lihex.mp.real import MpReal, log2_const, pi_const
from lihex.relfind import RelationQuery, RelationResult, _canonical, pslq, verify_vector
from lihex.series import Monomial, SeriesSpec, eval_formula, eval_series

F11_VECTOR = tuple([_F11_LHS] + [-c for c, _ in _F11_LIS]
                   + [-c for c, _ in _F11_MONS])


def _f11_values(wp):
    vals = [Monomial(zeta=11).value(wp)]
    vals += [_li_part_val(arg, 11, "re", wp) for _, arg in _F11_LIS]
    vals += [m.value(wp) for _, m in _F11_MONS]
    return vals


def _catalan_triple(prec):
    g = eval_formula("catalan", prec)
    s21 = eval_series(SeriesSpec(2, 1, (1, -1, 1, 0, -1, 1, -1, 0)), prec)
    s23 = eval_series(SeriesSpec(2, 3, (1, 1, 1, 0, -1, -1, -1, 0)), prec)
    return g, s21, s23


# ----------------------------------------------------------------------
# recovery of known relations

def test_recovers_catalan_series_relation():
    vals = _catalan_triple(512)
    res = pslq(RelationQuery(vals, max_digits=8))
    assert res.status == "found"
    assert res.vector == (1, -3, 2)
    assert res.iterations <= 20
    assert verify_vector(res.vector, vals, 512).passed


@pytest.mark.parametrize("bits", [256, 512])
def test_recovers_equal_pair(bits):
    mem = RELATIONS["r3"].members(bits)
    lam, abar = mem[0].re, mem[1].re
    res = pslq(RelationQuery((lam, abar), max_digits=8))
    assert res.status == "found"
    assert res.vector == (1, -1)


def test_identical_inputs_give_difference_vector():
    res = pslq(RelationQuery((pi_const(512), pi_const(512)), max_digits=4))
    assert res.status == "found"
    assert res.vector == (1, -1)


def test_result_is_deterministic():
    vals = _catalan_triple(512)
    assert pslq(RelationQuery(vals, max_digits=8)) == \
        pslq(RelationQuery(vals, max_digits=8))


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Q(-50), max_value=Q(50)).filter(bool))
def test_recovery_is_scale_invariant(c):
    P = 256
    vals = tuple(v.mul(c, P) for v in _catalan_triple(P))
    res = pslq(RelationQuery(vals, max_digits=8))
    assert res.vector == (1, -3, 2)


# ----------------------------------------------------------------------
# exclusion bounds

def test_algebraically_independent_triple_is_excluded():
    P = 1024
    vals = (MpReal.from_int(1, P), pi_const(P), log2_const(P))
    res = pslq(RelationQuery(vals, max_digits=20))
    assert res.status == "none_within_bound"
    assert res.vector is None and res.log2_residual is None


def test_exclusion_over_thirteen_constants():
    P = 2048
    vals = _f11_values(P)[1:]
    res = pslq(RelationQuery(tuple(vals), max_digits=30))
    assert res.status == "none_within_bound"


@pytest.mark.slow
def test_recovers_fourteen_term_vector():
    P = 2048
    vals = _f11_values(P)
    res = pslq(RelationQuery(tuple(vals), max_digits=23))
    assert res.status == "found"
    assert res.vector == F11_VECTOR
    assert res.log2_residual < -1900


# ----------------------------------------------------------------------
# guards and result shape

def test_precision_guard():
    P = 1024
    vals = (MpReal.from_int(1, P), pi_const(P), log2_const(P))
    with pytest.raises(PrecisionError):
        pslq(RelationQuery(vals, max_digits=100))


def test_zero_input_rejected():
    with pytest.raises(DomainError):
        pslq(RelationQuery((pi_const(256), MpReal.zero(256)), max_digits=4))


def test_query_validation():
    with pytest.raises(DomainError):
        RelationQuery((pi_const(256),), max_digits=4)
    with pytest.raises(DomainError):
        RelationQuery((pi_const(256), log2_const(256)), max_digits=0)
    q = RelationQuery((pi_const(256), log2_const(128)), max_digits=4)
    assert q.prec == 128


def test_result_dict_shape():
    res = pslq(RelationQuery(_catalan_triple(512), max_digits=8))
    d = res.as_dict()
    assert d == {"status": "found", "vector": [1, -3, 2],
                 "log2_residual": res.log2_residual}


# ----------------------------------------------------------------------
# canonical form of returned vectors

@settings(max_examples=200)
@given(st.lists(st.integers(-10**9, 10**9), min_size=1, max_size=10)
       .filter(any))
def test_canonical_form_properties(vec):
    out = _canonical(list(vec))
    g = 0
    for v in out:
        g = math.gcd(g, v)
    assert g == 1
    lead = next(v for v in out if v != 0)
    assert lead > 0
    for a, b in zip(vec, out):
        assert a * out[0] == b * vec[0]


# ----------------------------------------------------------------------
# verify_vector

def test_verify_fourteen_term_vector():
    vals = _f11_values(1024 + 96)
    rep = verify_vector(F11_VECTOR, vals, 1024)
    assert rep.passed and rep.log2_residual < -960

    bad = list(F11_VECTOR)
    bad[0] += 1
    assert not verify_vector(bad, vals, 1024).passed


def test_verify_zero_vector_and_mismatch():
    vals = (pi_const(256), log2_const(256))
    rep = verify_vector((0, 0), vals, 256)
    assert rep.passed and rep.log2_residual == float("-inf")
    with pytest.raises(DomainError):
        verify_vector((1, 2, 3), vals, 256)
