"""Symmetric functions evaluated at exact numeric specializations.

Every alphabet used by the vertex formulas is a principal specialization
``c * X^{k-1/2} * Y^{nu_k}`` (k = 1, 2, ...), which is infinite but has
closed-form power sums.  Skew Schur functions are obtained from the power
sums through Newton's identities and the Jacobi-Trudi determinant.

Low-level helpers take the square roots of their two parameters as
arguments because the vertex formulas call them with swapped or inverted
arguments, for example ``(t^{-1}, q)``.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import arm_leg_pairs, cells, conjugate, contains, norm_sq, size


class Alphabet(Enum):
    """Principal specializations, named by their exponent pattern."""

    Q_RHO_T_NU = "q^-rho t^nu"
    Q_RHO_T_NEG_NU = "q^-rho t^-nu"
    T_RHO_Q_NEG_NUT = "t^-rho q^-nu^t"
    Q_NEG_NUT_T_RHO = "q^-nu^t t^rho"


@dataclass(frozen=True)
class PowerSumSpec:
    """Power sums p_1..p_D of an alphabet."""

    values: tuple

    @property
    def max_degree(self):
        return len(self.values)

    def p(self, n):
        return self.values[n - 1]

    def scaled(self, c):
        c = Fraction(c)
        return PowerSumSpec(tuple(v * c ** (n + 1) for n, v in enumerate(self.values)))

    def h_values(self):
        return h_from_power_sums(self.values)


@lru_cache(maxsize=None)
def h_from_power_sums(values):
    """Complete homogeneous h_0..h_D from p_1..p_D via k h_k = sum_i p_i h_{k-i}."""
    h = [Fraction(1)]
    for k in range(1, len(values) + 1):
        h.append(sum(values[i - 1] * h[k - i] for i in range(1, k + 1)) / k)
    return tuple(h)


def power_sums_of_variables(xs, D):
    """Power sums of a finite list of variables (used as a brute-force oracle)."""
    return PowerSumSpec(tuple(sum(Fraction(x) ** n for x in xs) for n in range(1, D + 1)))


@lru_cache(maxsize=None)
def principal_power_sums(scale, x_half, y, nu, D):
    """p_1..p_D of the alphabet ``scale * X^{k-1/2} * Y^{nu_k}`` with X = x_half^2.

    Only finitely many nu_k are non-zero, so the sum splits into a finite
    correction plus the geometric series of the empty partition.
    """
    X = x_half * x_half
    out = []
    for n in range(1, D + 1):
        Xn = X**n
        if Xn == 1:
            raise ZeroDivisionError("alphabet parameter is a root of unity at this degree")
        total = x_half**n / (1 - Xn)
        for k, part in enumerate(nu, start=1):
            total += x_half ** (n * (2 * k - 1)) * (y ** (n * part) - 1)
        out.append(scale**n * total)
    return PowerSumSpec(tuple(out))


def alphabet_power_sums(kind, nu, qv_half, tv_half, D, scale=Fraction(1)):
    """Power sums of one of the named alphabets with vertex arguments (q, t).

    ``qv_half``/``tv_half`` are square roots of whatever the formula calls
    q and t at that point (possibly inverted or swapped).
    """
    qv, tv = qv_half * qv_half, tv_half * tv_half
    if kind is Alphabet.Q_RHO_T_NU:
        return principal_power_sums(scale, qv_half, tv, tuple(nu), D)
    if kind is Alphabet.Q_RHO_T_NEG_NU:
        return principal_power_sums(scale, qv_half, 1 / tv, tuple(nu), D)
    if kind is Alphabet.T_RHO_Q_NEG_NUT:
        return principal_power_sums(scale, tv_half, 1 / qv, conjugate(tuple(nu)), D)
    if kind is Alphabet.Q_NEG_NUT_T_RHO:
        return principal_power_sums(scale, 1 / tv_half, 1 / qv, conjugate(tuple(nu)), D)
    raise ValueError(kind)


def power_sum_principal(kind, nu, p, scale=Fraction(1), D=6):
    """Power sums at a parameter point (the plain (q, t) orientation)."""
    return alphabet_power_sums(kind, nu, p.q_half, p.t_half, D, scale)


def determinant(matrix):
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        piv = m[col][col]
        det *= piv
        for r in range(col + 1, n):
            f = m[r][col] / piv
            if f:
                row, prow = m[r], m[col]
                for c in range(col, n):
                    row[c] -= f * prow[c]
    return det


def skew_schur(lam, mu, spec):
    """s_{lam/mu} at the alphabet with power sums ``spec`` (Jacobi-Trudi)."""
    lam, mu = tuple(lam), tuple(mu)
    if not contains(mu, lam):
        return Fraction(0)
    n = len(lam)
    if n == 0:
        return Fraction(1)
    mu = mu + (0,) * (n - len(mu))
    degrees = [[lam[i] - mu[j] - i + j for j in range(n)] for i in range(n)]
    h = spec.h_values()
    D = spec.max_degree

    def H(k):
        return h[k] if k >= 0 else Fraction(0)

    if max(map(max, degrees)) <= D:
        return determinant([[H(k) for k in row] for row in degrees])
    # Some entries lie beyond the known power sums; they are harmless only
    # if every permutation through them also meets a negative-degree zero.
    total = Fraction(0)
    for perm in permutations(range(n)):
        ks = [degrees[i][perm[i]] for i in range(n)]
        if min(ks) < 0:
            continue
        if max(ks) > D:
            raise ValueError(f"power sums known to degree {D}, need {max(ks)}")
        term = Fraction(_perm_sign(perm))
        for k in ks:
            term *= h[k]
        total += term
    return total


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def taut_char(lam, qv, tv):
    """Sum over cells of qv^row tv^col (0-based exponents, row on q)."""
    return sum((qv**i * tv**j for i, j in cells(lam)), Fraction(0))


def h_eigen_at(n, lam, qv, tv, chi=taut_char):
    """Eigenvalue h_n(lam; q, t) for explicit values of q and t."""
    if n == 0:
        raise ValueError("h_0 is not defined")
    sign = 1 if n > 0 else -1
    qn, tn = qv**n, tv**n
    return sign * (-chi(lam, qn, tn) + 1 / ((1 - qn) * (1 - tn)))


def h_eigen(n, lam, p):
    """Eigenvalue of H_n on the fixed point O_lam at the point ``p``."""
    return h_eigen_at(n, tuple(lam), p.q, p.t)


def macdonald_norm(lam, p):
    """<O_lam, O_lam> = (qt)^{|lam|/2} prod (1 - q^{-l-1} t^a)(1 - q^l t^{-a-1})."""
    q, t = p.q, p.t
    out = p.sqrt_qt ** size(lam)
    for a, l in arm_leg_pairs(tuple(lam)):
        out *= (1 - q ** (-l - 1) * t**a) * (1 - q**l * t ** (-a - 1))
    return out


def framing_p(nu, qv_half, tv_half):
    """P_{nu^t}(q, t) = q^{|nu|^2/2} prod 1/(1 - q^{l+1} t^a) for the given (q, t)."""
    qv, tv = qv_half * qv_half, tv_half * tv_half
    out = qv_half ** norm_sq(tuple(nu))
    for a, l in arm_leg_pairs(tuple(nu)):
        den = 1 - qv ** (l + 1) * tv**a
        if den == 0:
            raise ZeroDivisionError("non-generic point: vanishing framing denominator")
        out /= den
    return out


def norm_product_form(lam, p):
    """(qt)^{(|lam^t|^2 - |lam|^2)/2} P_{lam^t}(q, 1/t) P_lam(1/t, q).

    This is the product of framing factors that a glued edge leaves behind;
    it equals (-1)^{|lam|} / <O_lam, O_lam>.
    """
    lam = tuple(lam)
    e = norm_sq(conjugate(lam)) - norm_sq(lam)
    return p.sqrt_qt**e * framing_p(lam, p.q_half, 1 / p.t_half) * framing_p(conjugate(lam), 1 / p.t_half, p.q_half)


def vertex_op_coefficient_plus(n, nu, p):
    """(qt)^{n/2}(t^{n/2} - t^{-n/2}) h_n(nu): the H_n weight inside Gamma_+."""
    th = p.t_half
    return p.sqrt_qt**n * (th**n - th ** (-n)) * h_eigen(n, nu, p)


def vertex_op_coefficient_minus(n, nu, p):
    """(qt)^{-n/2}(q^{n/2} - q^{-n/2}) h_{-n}(nu): the H_{-n} weight inside Gamma_-."""
    qh = p.q_half
    return p.sqrt_qt ** (-n) * (qh**n - qh ** (-n)) * h_eigen(-n, nu, p)
