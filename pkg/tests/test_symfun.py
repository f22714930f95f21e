from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qqengine.partitions import conjugate, enumerate_partitions, partitions_up_to, size
from qqengine.symfun import (
    Alphabet,
    PowerSumSpec,
    alphabet_power_sums,
    framing_p,
    h_eigen,
    h_eigen_at,
    macdonald_norm,
    norm_product_form,
    power_sum_principal,
    power_sums_of_variables,
    skew_schur,
    taut_char,
    vertex_op_coefficient_minus,
    vertex_op_coefficient_plus,
)


def test_taut_char_examples(point):
    q, t = point.q, point.t
    assert taut_char((), q, t) == 0
    assert taut_char((1,), q, t) == 1
    assert taut_char((2,), q, t) == 1 + t
    assert taut_char((1, 1), q, t) == 1 + q


def test_h_eigen_examples(point):
    q, t = point.q, point.t
    assert h_eigen(1, (), point) == 1 / ((1 - q) * (1 - t))
    lam = (2, 1)
    for n in (1, 2, 3):
        chi = taut_char(lam, q**-n, t**-n)
        assert h_eigen(-n, lam, point) == -(-chi + 1 / ((1 - q**-n) * (1 - t**-n)))
    with pytest.raises(ValueError):
        h_eigen(0, lam, point)


def test_h_eigen_transpose_symmetry(point):
    for lam in partitions_up_to(5):
        for n in (-2, 1, 3):
            assert h_eigen_at(n, conjugate(lam), point.t, point.q) == h_eigen(n, lam, point)


def test_principal_power_sums(point):
    qh, q = point.q_half, point.q
    empty = power_sum_principal(Alphabet.Q_RHO_T_NU, (), point, D=4)
    assert [empty.p(n) for n in range(1, 5)] == [qh**n / (1 - q**n) for n in range(1, 5)]
    for nu in partitions_up_to(4):
        x = power_sum_principal(Alphabet.Q_RHO_T_NU, nu, point, D=5)
        for n in range(1, 6):
            assert x.p(n) == -vertex_op_coefficient_plus(n, nu, point)
        y = power_sum_principal(Alphabet.Q_NEG_NUT_T_RHO, nu, point, D=5)
        for n in range(1, 6):
            assert y.p(n) == -vertex_op_coefficient_minus(n, nu, point)
    # at the empty partition the t^-rho q^-nu^t alphabet meets +k_n
    z = power_sum_principal(Alphabet.T_RHO_Q_NEG_NUT, (), point, D=4)
    assert [z.p(n) for n in range(1, 5)] == [vertex_op_coefficient_minus(n, (), point) for n in range(1, 5)]


def test_principal_sum_matches_truncated_alphabet(point):
    # q^{-rho} t^{nu} = {q^{k-1/2} t^{nu_k}} summed far enough to hit the exact value
    nu = (2, 1)
    x = power_sum_principal(Alphabet.Q_RHO_T_NU, nu, point, D=2)
    qh, t = point.q_half, point.t
    approx = sum(qh ** (2 * k - 1) * t ** (nu[k - 1] if k <= len(nu) else 0) for k in range(1, 200))
    assert abs(float(x.p(1) - approx)) < 1e-12


def test_skew_schur_examples():
    spec = PowerSumSpec((Fraction(3), Fraction(5)))
    assert skew_schur((2, 1), (2, 1), spec) == 1
    assert skew_schur((2, 1), (1,), spec) == 9
    assert skew_schur((1,), (2,), spec) == 0


def _schur_by_tableaux(lam, xs):
    """Bialternant formula s_lam = det(x_i^{lam_j + n - j}) / det(x_i^{n - j})."""

    def alt(exps):
        n = len(xs)
        total = Fraction(0)
        for perm in permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = Fraction(sign)
            for i in range(n):
                term *= Fraction(xs[i]) ** exps[perm[i]]
            total += term
        return total

    n = len(xs)
    lam = tuple(lam) + (0,) * (n - len(lam))
    return alt([lam[j] + n - 1 - j for j in range(n)]) / alt([n - 1 - j for j in range(n)])


@settings(max_examples=15, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=3, max_size=3, unique=True))
def test_jacobi_trudi_matches_bialternant(xs):
    spec = power_sums_of_variables(xs, 4)
    for n in range(5):
        for lam in enumerate_partitions(n):
            if len(lam) <= 3:
                assert skew_schur(lam, (), spec) == _schur_by_tableaux(lam, xs)


def test_macdonald_norm_examples(point):
    q, t = point.q, point.t
    assert macdonald_norm((), point) == 1
    assert macdonald_norm((1,), point) == point.sqrt_qt * (1 - 1 / q) * (1 - 1 / t)


def test_framing_p_examples(point):
    qh, th = point.q_half, point.t_half
    q, t = point.q, point.t
    assert framing_p((), qh, th) == 1
    assert framing_p((1,), qh, th) == qh / (1 - q)
    # nu = (2): cells (a, l) = (1, 0), (0, 0)
    assert framing_p((2,), qh, th) == q**2 / ((1 - q * t) * (1 - q))


def test_identity_3_16_corrected_form(seeded_point):
    for lam in partitions_up_to(5):
        assert norm_product_form(lam, seeded_point) * macdonald_norm(lam, seeded_point) == (-1) ** size(lam)


def test_identity_3_16_printed_form_fails(point):
    lam = (1,)
    printed = (-1) ** size(lam) * point.sqrt_qt ** size(lam)
    assert norm_product_form(lam, point) * macdonald_norm(lam, point) != printed


def test_alphabet_is_enum_of_four_kinds():
    assert len(list(Alphabet)) == 4
    x = alphabet_power_sums(Alphabet.Q_RHO_T_NEG_NU, (1,), Fraction(2, 3), Fraction(5, 7), 2)
    assert x.max_degree == 2
