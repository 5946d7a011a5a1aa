import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcarlitz.contfrac import (
    SERIES_IDS,
    JFraction,
    SFraction,
    closed_c,
    closed_sfraction,
    contract,
    jfraction_series,
    moment_series,
    recurrence_for_series,
    sfraction_series,
)
from qcarlitz.orthopoly import moments_from_recurrence
from qcarlitz.ratfunc import FieldQ, PoleError, Series, q

nonzero = st.integers(-4, 4).filter(bool)


@settings(max_examples=60)
@given(st.lists(nonzero, min_size=1, max_size=9), st.integers(1, 8))
def test_contraction_preserves_series(cs, N):
    S = SFraction([FieldQ(c) for c in cs])
    assert jfraction_series(contract(S), N, depth=len(cs)) == sfraction_series(S, N)


@settings(max_examples=40)
@given(st.lists(nonzero, min_size=1, max_size=6), st.lists(nonzero, min_size=0, max_size=5), st.integers(1, 8))
def test_jfraction_generates_recurrence_moments(a, b, N):
    # a toy J-fraction with constant-coefficient levels
    J = JFraction([FieldQ(v) for v in a], [FieldQ(v) for v in b])
    from qcarlitz.orthopoly import Recurrence

    rec = Recurrence(lambda n: J.a_at(n), lambda n: J.b_at(n))
    assert jfraction_series(J, N, depth=max(len(a), len(b) + 1)) == Series(moments_from_recurrence(rec, N), N)


def test_depth_stability():
    J = JFraction.from_recurrence(recurrence_for_series("B"), 12)
    N = 8
    base = jfraction_series(J, N)
    for depth in range(N // 2 + 1, 12):
        assert jfraction_series(J, N, depth=depth) == base
    S = closed_sfraction("B", 14)
    assert sfraction_series(S, N) == sfraction_series(S, N, depth=14)


def test_first_coefficients():
    assert closed_c("B", 1) == 1 / (q + 1)
    assert closed_c("B", 2) == -1 / ((q + 1) * (q**2 + q + 1))
    assert closed_c("B2", 1) == (q - 1) / (q**2 + 1)


@pytest.mark.parametrize("sid", SERIES_IDS)
def test_contraction_gives_recurrence(sid):
    rec = recurrence_for_series(sid)
    J = contract(closed_sfraction(sid, 13))
    for n in range(7):
        assert J.a_at(n) == rec.a(n)
        if n:
            assert J.b_at(n) == rec.b(n)


@pytest.mark.parametrize("sid", SERIES_IDS)
def test_sfraction_matches_moments(sid):
    N = 8
    assert sfraction_series(closed_sfraction(sid, N), N) == moment_series(sid, N)
    J = JFraction.from_recurrence(recurrence_for_series(sid), N)
    assert jfraction_series(J, N) == moment_series(sid, N)


def test_b2_has_poles_at_one():
    with pytest.raises(PoleError):
        for c in closed_sfraction("B2", 6).c:
            c.eval(1)


def test_bad_inputs():
    with pytest.raises(ValueError):
        closed_c("B", 0)
    with pytest.raises(ValueError):
        closed_c("X", 1)
    with pytest.raises(ValueError):
        moment_series("X", 3)
    with pytest.raises(ValueError):
        sfraction_series(SFraction([1]), 0)
