import pytest

from qqengine.partitions import partitions_up_to, tuples
from qqengine.series import GenericityError, MultiSeries, ParamPoint
from qqengine.vertex import (
    HORIZONTAL,
    VERTICAL,
    NetworkConfig,
    four_point_h,
    four_point_v,
    normalized_zr,
    perturbative_term,
    refined_vertex,
    required_genericity,
    skew_form_gauge,
    zr_fixed_legs,
    zr_from_fixed_legs,
    zr_full,
)


@pytest.fixture
def p():
    return ParamPoint("2/3", "5/7", (1, 11), genericity_bound=40)


def test_vertex_examples(p):
    qh, th = p.q_half, p.t_half
    assert refined_vertex((), (), (), qh, th) == 1
    assert refined_vertex((), (), (1,), qh, th) == th / (1 - p.q)


def test_unrefined_cyclic_symmetry(p):
    qh = p.q_half
    shapes = partitions_up_to(2)
    for lam in shapes:
        for mu in shapes:
            for nu in shapes:
                assert refined_vertex(lam, mu, nu, qh, qh) == refined_vertex(nu, lam, mu, qh, qh)


def test_four_point_trivial_caps(p):
    cfg = NetworkConfig(1, p, 0, 0, 0)
    assert four_point_h((), (), cfg) == MultiSeries.const(("Q", "A"), ((0, 0), (0, 0)), 1)
    assert four_point_v((), (), cfg) == MultiSeries.const(("Q", "A"), ((0, 0), (0, 0)), 1)


def test_four_point_a1_coefficient(p):
    cfg = NetworkConfig(1, p, 0, 1, 0)
    qh, th = p.q_half, p.t_half
    want = refined_vertex((1,), (), (), qh, 1 / th) * refined_vertex((1,), (), (), 1 / th, qh)
    assert four_point_h((), (), cfg).coefficient((0, 1)) == want


@pytest.mark.parametrize("direction", [HORIZONTAL, VERTICAL])
def test_vertex_and_skew_paths_agree(p, direction):
    cfg = NetworkConfig(1, p, 2, 2, 0, direction, max_leg=2)
    fp = four_point_h if direction == HORIZONTAL else four_point_v
    for nu1 in partitions_up_to(2):
        for nu2t in partitions_up_to(2):
            assert fp(nu1, nu2t, cfg, path="vertex") == fp(nu1, nu2t, cfg, path="skew")


def test_skew_gauge_is_trivial_on_empty_legs(p):
    assert skew_form_gauge((), (), p) == 1


def test_raising_a_cap_only_adds_new_orders(p):
    small = four_point_v((1,), (), NetworkConfig(1, p, 2, 1, 0, VERTICAL, max_leg=1))
    big = four_point_v((1,), (), NetworkConfig(1, p, 2, 2, 0, VERTICAL, max_leg=1))
    assert big.restrict(small.caps) == small


def test_fixed_legs_examples(p):
    cfg0 = NetworkConfig(2, ParamPoint("2/3", "5/7", (1, 11), 40), 0, 0, 0)
    assert zr_fixed_legs(((), ()), cfg0) == MultiSeries.const(("A", "B1"), ((0, 0), (0, 0)), 1)
    cfg = NetworkConfig(2, p, 2, 2, 1)
    assert zr_from_fixed_legs(cfg) == zr_full(cfg)
    assert zr_fixed_legs(((), ()), cfg) == perturbative_term(cfg)


@pytest.mark.parametrize("r", [1, 2])
def test_horizontal_equals_vertical(p, r):
    h = zr_full(NetworkConfig(r, p, 2, 2, 2, HORIZONTAL))
    v = zr_full(NetworkConfig(r, p, 2, 2, 2, VERTICAL))
    assert h == v


def test_normalized_constant_term(p):
    for r in (1, 2):
        assert normalized_zr(NetworkConfig(r, p, 2, 2, 1)).constant_term() == 1


def test_r1_is_a_single_four_point(p):
    cfg = NetworkConfig(1, p, 2, 2, 0)
    assert zr_full(cfg) == four_point_h((), (), cfg)


def test_fixed_leg_sum_over_tuples(p):
    cfg = NetworkConfig(2, p, 1, 1, 1)
    total = MultiSeries(cfg.vars, cfg.caps)
    for n in range(2):
        for lams in tuples(2, n):
            total = total + zr_fixed_legs(lams, cfg).rewindow(cfg.vars, cfg.caps, lambda e, n=n: (n,) + e)
    assert total == zr_full(cfg)


def test_config_validation(p):
    with pytest.raises(ValueError):
        NetworkConfig(0, p)
    with pytest.raises(ValueError):
        NetworkConfig(1, p, direction="x")
    low = ParamPoint("2/3", "5/7", (1, 11), genericity_bound=4)
    with pytest.raises(GenericityError):
        NetworkConfig(1, low, 2, 2, 0)
    assert required_genericity(2, 1, 1, 1) == 12
