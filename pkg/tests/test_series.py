from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qqengine.series import (
    GenericityError,
    MultiSeries,
    NonFormalSeriesError,
    ParamPoint,
    random_param_point,
    series_add,
    series_invert,
    series_mul,
    series_scale,
)

QA = ("Q", "A")
CAPS = ((0, 3), (0, 2))


def q_series(coeffs, cap=3):
    return MultiSeries(("Q",), ((0, cap),), {(k,): c for k, c in enumerate(coeffs)})


def test_product_examples():
    assert q_series([1, 1], 2) * q_series([1, -1], 2) == q_series([1, 0, -1], 2)
    one_plus_a = MultiSeries(("A",), ((0, 2),), {(0,): 1, (1,): 1})
    assert one_plus_a * MultiSeries.const(("A",), ((0, 2),), 1) == one_plus_a
    geo = q_series([1, 1, 1, 1])
    assert series_mul(geo, geo) == q_series([1, 2, 3, 4])


def test_invert_examples():
    assert series_invert(q_series([1, -1])) == q_series([1, 1, 1, 1])
    assert q_series([1]).invert() == q_series([1])
    assert q_series([2, 1], 1).invert() == q_series([Fraction(1, 2), Fraction(-1, 4)], 1)


def test_invert_needs_unit():
    with pytest.raises(ZeroDivisionError):
        q_series([0, 1]).invert()


def test_exp_and_nonformal():
    e = q_series([0, 1]).exp()
    assert e == q_series([1, 1, Fraction(1, 2), Fraction(1, 6)])
    with pytest.raises(NonFormalSeriesError):
        q_series([1, 1]).exp()


def test_laurent_window_and_drop():
    s = MultiSeries(("A",), ((-2, 2),), {(-1,): 3, (3,): 5})
    assert s.terms == {(-1,): 3}
    assert s.negative_exponents() == [(-1,)]


def test_mismatched_vars_rejected():
    with pytest.raises(ValueError):
        q_series([1]) + MultiSeries(("A",), ((0, 3),), {(0,): 1})


def test_json_round_trip_and_order():
    s = MultiSeries(QA, ((0, 3), (-2, 4)), {(1, 0): Fraction(3, 2), (0, -1): 1})
    d = s.to_dict()
    assert d["caps"] == {"Q": [0, 3], "A": [-2, 4]}
    assert [t["exp"] for t in d["terms"]] == [[0, -1], [1, 0]]
    assert d["terms"][1] == {"exp": [1, 0], "num": "3", "den": "2"}
    assert MultiSeries.from_json(s.to_json()) == s


def test_csv_rows():
    s = MultiSeries(QA, CAPS, {(1, 0): Fraction(-1, 3), (0, 0): 1})
    assert s.csv_rows() == [["Q", "A", "num", "den"], ["0", "0", "1", "1"], ["1", "0", "-1", "3"]]


def test_first_mismatch():
    a = q_series([1, 2, 3])
    b = q_series([1, 2, 4])
    assert a.first_mismatch(b) == ((2,), 3, 4)
    assert a.first_mismatch(a) is None


def test_random_point_examples():
    p = random_param_point(1, 1, 12)
    assert p.q_half != p.t_half
    assert random_param_point(1, 1, 12) == p
    q, t = p.q_half, p.t_half
    for n in range(-12, 13):
        for k in range(-12, 13):
            if (n, k) != (0, 0):
                assert q**n * t**k != 1


def test_random_point_with_framing_is_generic():
    p = random_param_point(4, 3, 10)
    assert p.rank == 3
    assert len(set(p.framing)) == 3


def test_genericity_errors():
    with pytest.raises(GenericityError):
        ParamPoint(2, 4)  # q^{1/2} = 2, t^{1/2} = 4: q t^{-1/2} = 1
    with pytest.raises(GenericityError):
        ParamPoint("2/3", "5/7", (1, 1))
    with pytest.raises(GenericityError):
        ParamPoint(1, 3)


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=7)
series_st = st.lists(coeff, min_size=1, max_size=4).map(lambda cs: q_series(cs))


@settings(max_examples=40, deadline=None)
@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert series_add(a, b) - b == a
    assert series_scale(2, a) == a + a


@settings(max_examples=40, deadline=None)
@given(series_st)
def test_invert_is_inverse(a):
    if a.constant_term() == 0:
        return
    assert a * a.invert() == a.const_like(1)


@settings(max_examples=20, deadline=None)
@given(st.lists(coeff, min_size=1, max_size=4), st.lists(coeff, min_size=1, max_size=4))
def test_exp_is_a_homomorphism(xs, ys):
    a, b = q_series([0] + xs), q_series([0] + ys)
    assert (a + b).exp() == a.exp() * b.exp()
