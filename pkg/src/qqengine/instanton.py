"""Localization on the instanton moduli space M_r.

Fixed points of the torus action are r-tuples of partitions.  The tangent
space at a fixed point is a sum of monomials in q, t and the framing
ratios a_j/a_i, given by the usual Nekrasov arm/leg pairing.  From it we
build the chi_y-genus (a series in Q and m) and, for r = 1, the
eigenvalues of the loop-Cartan current psi(u) and their graded trace.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .partitions import cells, conjugate, partitions_up_to, relative_arm, relative_leg, size, tuples
from .series import MultiSeries, ParamPoint

# Recorded in verification reports so runs can be reproduced exactly.
TANGENT_CONVENTION = {
    "cell_index_base": 0,
    "taut_char": "sum over cells q^row t^col",
    "pairing": "N(lam,mu) = sum_{lam} q^{-leg_mu} t^{arm_lam+1} + sum_{mu} q^{leg_lam+1} t^{-arm_mu}",
    "tangent": "T = sum_{i,j} (a_j/a_i) N(lam_i, lam_j)",
    "hbar": "q t",
}


@dataclass(frozen=True, order=True)
class TangentWeight:
    """The monomial q^e_q t^e_t a_j / a_i (framing indices are 0-based)."""

    e_q: int
    e_t: int
    i: int = 0
    j: int = 0

    def value(self, p):
        w = p.q**self.e_q * p.t**self.e_t
        if self.i != self.j:
            w *= p.framing[self.j] / p.framing[self.i]
        return w

    def hbar_dual(self):
        """The weight hbar / w."""
        return TangentWeight(1 - self.e_q, 1 - self.e_t, self.j, self.i)

    @property
    def framing_power(self):
        """Exponent of the ratio a_{k+1}/a_k when r = 2 (the variable R1)."""
        return self.j - self.i

    def to_dict(self):
        return {"q": self.e_q, "t": self.e_t, "i": self.i, "j": self.j}


def nekrasov_pair(lam, mu):
    """Exponent pairs (e_q, e_t) of N(lam, mu); arms and legs are measured relatively."""
    lam, mu = tuple(lam), tuple(mu)
    out = []
    for c in cells(lam):
        out.append((-relative_leg(mu, c), relative_arm(lam, c) + 1))
    for c in cells(mu):
        out.append((relative_leg(lam, c) + 1, -relative_arm(mu, c)))
    return out


def tangent_character(lams):
    """Tangent weights at the fixed point labelled by the tuple ``lams``."""
    lams = tuple(tuple(l) for l in lams)
    out = []
    for i, li in enumerate(lams):
        for j, lj in enumerate(lams):
            out.extend(TangentWeight(eq, et, i, j) for eq, et in nekrasov_pair(li, lj))
    return sorted(out)


def is_symplectic(weights):
    """True iff the multiset of weights is stable under w -> hbar / w."""
    return Counter(weights) == Counter(w.hbar_dual() for w in weights)


def chi_y_ratio_at(lams, p, m):
    """The same product evaluated at a numeric m."""
    out = Fraction(1)
    for w in tangent_character(lams):
        x = w.value(p)
        if x == 1:
            raise ZeroDivisionError(f"tangent weight {w} equals 1 at this point")
        out *= (1 - Fraction(m) / x) / (1 - 1 / x)
    return out


def chi_y_ratio(lams, p, cap_m):
    """prod_w (1 - m/w) / (1 - 1/w) over tangent weights at a numeric point, as a series in m."""
    caps = ((0, cap_m),)
    out = MultiSeries.const(("m",), caps, 1)
    for w in tangent_character(lams):
        x = w.value(p)
        if x == 1:
            raise ZeroDivisionError(f"tangent weight {w} equals 1 at this point")
        factor = MultiSeries(("m",), caps, {(0,): 1, (1,): -1 / x})
        out = out * factor.scale(1 / (1 - 1 / x))
    return out


def framing_vars(r):
    return tuple(f"R{k}" for k in range(1, r))


def chi_y_ratio_formal(lams, p, cap_m, cap_r):
    """Same product with the framing ratios a_{k+1}/a_k kept as formal variables R_k.

    A weight w = x * R with R a monomial in the R_k is expanded in positive
    powers of R: for a positive framing power
    (1 - m/w)/(1 - 1/w) = (m - w)/(1 - w), otherwise the defining form is
    already a power series.
    """
    r = len(lams)
    vars = ("m",) + framing_vars(r)
    caps = ((0, cap_m),) + ((0, cap_r),) * (r - 1)
    zero = (0,) * len(vars)
    one = MultiSeries.const(vars, caps, 1)
    out = one
    for w in tangent_character(lams):
        x = p.q**w.e_q * p.t**w.e_t
        rexp = [0] * (r - 1)
        lo, hi = sorted((w.i, w.j))
        for k in range(lo, hi):
            rexp[k] = 1
        if w.i == w.j:
            if x == 1:
                raise ZeroDivisionError(f"tangent weight {w} equals 1")
            factor = MultiSeries(vars, caps, {zero: 1, (1,) + zero[1:]: -1 / x}).scale(1 / (1 - 1 / x))
        elif w.j > w.i:  # w = x R
            num = MultiSeries(vars, caps, {(1,) + zero[1:]: 1, (0, *rexp): -x})
            den = MultiSeries(vars, caps, {zero: 1, (0, *rexp): -x})
            factor = num * den.invert()
        else:  # w = x / R
            num = MultiSeries(vars, caps, {zero: 1, (1, *rexp): -1 / x})
            den = MultiSeries(vars, caps, {zero: 1, (0, *rexp): -1 / x})
            factor = num * den.invert()
        out = out * factor
    return out


@dataclass(frozen=True)
class GenusConfig:
    r: int
    params: ParamPoint
    cap_q: int = 2
    cap_m: int = 3
    formal_framing: bool = False
    cap_r: int = 2

    def __post_init__(self):
        if self.r < 1 or min(self.cap_q, self.cap_m, self.cap_r) < 0:
            raise ValueError("invalid genus configuration")
        if not self.formal_framing and len(self.params.framing) != self.r:
            raise ValueError(f"need {self.r} framing values, got {len(self.params.framing)}")


def chi_y_genus(cfg):
    """Sum over fixed points with |lams| <= cap_q of Q^{|lams|} times the chi_y ratio."""
    if cfg.formal_framing:
        inner_vars = ("m",) + framing_vars(cfg.r)
        inner_caps = ((0, cfg.cap_m),) + ((0, cfg.cap_r),) * (cfg.r - 1)
    else:
        inner_vars, inner_caps = ("m",), ((0, cfg.cap_m),)
    vars = ("Q",) + inner_vars
    caps = ((0, cfg.cap_q),) + inner_caps
    out = MultiSeries(vars, caps)
    for n in range(cfg.cap_q + 1):
        for lams in tuples(cfg.r, n):
            if cfg.formal_framing:
                ratio = chi_y_ratio_formal(lams, cfg.params, cfg.cap_m, cfg.cap_r)
            else:
                ratio = chi_y_ratio(lams, cfg.params, cfg.cap_m)
            out = out + ratio.rewindow(vars, caps, lambda e, n=n: (n,) + tuple(e))
    return out


def genus_at_m1(series, r):
    """Evaluate the m variable of a genus series at 1, leaving the list of Q-coefficients.

    Each ratio is a polynomial of degree 2 r n in m, so the m-window must
    reach 2 r cap_q for the evaluation to be exact.
    """
    k = series.vars.index("m")
    need = 2 * r * series.caps[0][1]
    if series.caps[k][1] < need:
        raise ValueError(f"m-cap {series.caps[k][1]} is below {need}; m = 1 would be truncated")
    out = {}
    for e, c in series.terms.items():
        if any(x for idx, x in enumerate(e) if idx not in (0, k)):
            continue
        out[e[0]] = out.get(e[0], 0) + c
    return [out.get(n, Fraction(0)) for n in range(series.caps[0][1] + 1)]


def rational_sqrt(u):
    """Exact positive square root of a rational, or ValueError."""
    u = Fraction(u)
    if u <= 0:
        raise ValueError(f"{u} has no positive rational square root")
    a, b = isqrt(u.numerator), isqrt(u.denominator)
    if a * a != u.numerator or b * b != u.denominator:
        raise ValueError(f"{u} is not the square of a rational")
    return Fraction(a, b)


def psi_class(lam):
    """Monomials of (1 - hbar^{-1}) chi_lam as a Counter {(e_q, e_t): multiplicity}, cancelled."""
    out = Counter()
    for i, j in cells(tuple(lam)):
        out[(i, j)] += 1
        out[(i - 1, j - 1)] -= 1
    return Counter({k: v for k, v in out.items() if v})


def psi_eigenvalue(lam, u, p):
    """Eigenvalue of psi(u) on O_lam: S-hat of (1 - hbar^{-1}) u chi_lam.

    Each monomial w contributes w^{1/2}/(1 - w) with the sign of its
    multiplicity as an exponent; w^{1/2} = q^{e_q/2} t^{e_t/2} u^{1/2} with
    the positive root of u.
    """
    su = rational_sqrt(u)
    out = Fraction(1)
    for (eq, et), mult in psi_class(lam).items():
        w = Fraction(u) * p.q**eq * p.t**et
        if w == 1:
            raise ZeroDivisionError(f"monomial q^{eq} t^{et} u equals 1")
        root = su * p.q_half**eq * p.t_half**et
        out *= (root / (1 - w)) ** mult
    return out


def q_character_trace(cap_q, u, p):
    """sum_{|lam| <= cap_q} Q^{|lam|} psi-eigenvalue(lam, u) for r = 1."""
    caps = ((0, cap_q),)
    out = MultiSeries(("Q",), caps)
    for lam in partitions_up_to(cap_q):
        out.add_term((size(lam),), psi_eigenvalue(lam, u, p))
    return out


def tangent_dimension_ok(lams):
    return len(tangent_character(lams)) == 2 * len(lams) * sum(map(size, lams))


def conjugate_tuple(lams):
    return tuple(conjugate(tuple(l)) for l in lams)
