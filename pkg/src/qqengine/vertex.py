"""Refined topological vertex and the adjoint-matter chain of four-point diagrams.

The chain of rank ``r`` glues ``r`` four-point diagrams along vertical
edges ``nu^(1), ..., nu^(r-1)`` weighted by ``B_i^{|nu^(i)|}``; the two
outer vertical edges carry the empty partition.  Inside each four-point
diagram the horizontal edge ``lam`` is weighted by ``Q^{|lam|}`` and the
other internal edge ``mu`` by ``A^{|mu|}``.  Framing factors at glued
edges are omitted (all edges are local conifolds).

Each four-point diagram has two independent implementations per
preferred direction: the raw double sum of refined vertices, and the
reorganized product of four skew Schur functions.  The two are compared
in the test-suite.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    conjugate,
    contains,
    kappa,
    norm_sq,
    partitions_up_to,
    size,
    sub_partitions,
    tuples,
)
from .series import GenericityError, MultiSeries, ParamPoint
from .symfun import Alphabet, alphabet_power_sums, framing_p, principal_power_sums, skew_schur

HORIZONTAL = "h"
VERTICAL = "v"


@lru_cache(maxsize=200_000)
def refined_vertex(lam, mu, nu, qv_half, tv_half):
    """C_{lam mu nu}(q, t) with preferred direction ``nu``.

    ``qv_half`` and ``tv_half`` are square roots of the two arguments of C,
    in the order they appear (callers pass e.g. ``(q^{1/2}, t^{-1/2})``).
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    tq = tv_half / qv_half  # (t/q)^{1/2}
    D = max(size(lam), size(mu), 1)
    x = alphabet_power_sums(Alphabet.Q_RHO_T_NEG_NU, nu, qv_half, tv_half, D)
    y = alphabet_power_sums(Alphabet.T_RHO_Q_NEG_NUT, nu, qv_half, tv_half, D)
    lt = conjugate(lam)
    total = Fraction(0)
    for eta in sub_partitions(lt):
        if not contains(eta, mu):
            continue
        weight = tq ** (size(eta) + size(lam) - size(mu))
        total += weight * skew_schur(lt, eta, x) * skew_schur(mu, eta, y)
    pre = tq ** (norm_sq(mu) + norm_sq(nu)) * qv_half ** kappa(mu) * framing_p(nu, qv_half, tv_half)
    return pre * total


@dataclass(frozen=True)
class NetworkConfig:
    """Truncation and parameters for the rank-``r`` chain.

    ``cap_b`` applies to every vertical variable B_1..B_{r-1}.
    ``max_leg`` is the largest external leg that will be evaluated and
    only enters the genericity requirement.
    """

    r: int
    params: ParamPoint
    cap_q: int = 2
    cap_a: int = 2
    cap_b: int = 2
    direction: str = HORIZONTAL
    max_leg: int = 0
    check_genericity: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank must be at least 1")
        if min(self.cap_q, self.cap_a, self.cap_b, self.max_leg) < 0:
            raise ValueError("caps must be non-negative")
        if self.direction not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"direction must be 'h' or 'v', not {self.direction!r}")
        if self.check_genericity and self.params.genericity_bound < self.required_bound():
            raise GenericityError(
                f"genericity bound {self.params.genericity_bound} is below the "
                f"{self.required_bound()} needed for these caps"
            )

    def required_bound(self):
        return required_genericity(self.r, self.cap_q, self.cap_a, self.cap_b, self.max_leg)

    @property
    def b_vars(self):
        return tuple(f"B{i}" for i in range(1, self.r))

    @property
    def vars(self):
        return ("Q", "A") + self.b_vars

    @property
    def caps(self):
        return ((0, self.cap_q), (0, self.cap_a)) + ((0, self.cap_b),) * (self.r - 1)

    @property
    def leg_vars(self):
        return ("A",) + self.b_vars

    @property
    def leg_caps(self):
        return ((0, self.cap_a),) + ((0, self.cap_b),) * (self.r - 1)


def required_genericity(r, cap_q, cap_a, cap_b, max_leg=0):
    return 4 * (cap_q + cap_a + (r - 1) * cap_b + max_leg)


# four-point diagrams as coefficient tables {(|lam|, |mu|): value}


def _four_point_h_raw(nu1, nu2t, lams, cap_a, qh, th):
    out = {}
    for lam in lams:
        for mu in partitions_up_to(cap_a):
            v = refined_vertex(mu, nu1, lam, qh, 1 / th) * refined_vertex(
                conjugate(mu), nu2t, conjugate(lam), 1 / th, qh
            )
            key = (size(lam), size(mu))
            out[key] = out.get(key, 0) + v
    return out


def skew_form_gauge(nu1, nu2t, p):
    """Monomial relating the skew Schur form of the horizontal diagram to the raw form.

    The reorganized product of skew Schur functions reproduces the raw
    double-vertex sum only after multiplying by
    t^{-|nu1|^2/2} q^{-|nu1^t|^2/2} q^{|nu2t|^2/2} t^{|nu2|^2/2};
    these factors cancel between neighbouring diagrams of a chain.
    """
    qh, th = p.q_half, p.t_half
    return (
        th ** (-norm_sq(nu1)) * qh ** (-norm_sq(conjugate(nu1))) * qh ** norm_sq(nu2t) * th ** norm_sq(conjugate(nu2t))
    )


def _four_point_h_skew(nu1, nu2t, lams, cap_a, p):
    qh, th, q = p.q_half, p.t_half, p.q
    sq = p.sqrt_qt
    nu2 = conjugate(nu2t)
    D = max(cap_a + size(nu1) + size(nu2) + 2, 2)
    gauge = skew_form_gauge(nu1, nu2t, p)
    out = {}
    for lam in lams:
        lt = conjugate(lam)
        pre = sq ** (norm_sq(lt) - norm_sq(lam)) * framing_p(lt, 1 / th, qh) * framing_p(lam, qh, 1 / th)
        # alphabets of the four skew Schur factors; A is tracked by |mu|
        x1 = principal_power_sums(Fraction(1), qh, p.t, lam, D)  # q^-rho t^lam
        x2 = principal_power_sums(sq, 1 / th, 1 / q, lt, D)  # (qt)^{1/2} q^-lam^t t^rho
        x3 = principal_power_sums(Fraction(1), 1 / th, 1 / q, lt, D)  # q^-lam^t t^rho
        x4 = principal_power_sums(1 / sq, qh, th * th, lam, D)  # (qt)^{-1/2} q^-rho t^lam
        for mu in partitions_up_to(cap_a):
            mt = conjugate(mu)
            s = Fraction(0)
            for e1 in sub_partitions(mt):
                if not contains(e1, nu1):
                    continue
                a1 = skew_schur(mt, e1, x1) * skew_schur(nu1, e1, x2)
                if a1 == 0:
                    continue
                for e2 in sub_partitions(mu):
                    if contains(e2, nu2t):
                        s += a1 * skew_schur(mu, e2, x3) * skew_schur(nu2t, e2, x4)
            key = (size(lam), size(mu))
            out[key] = out.get(key, 0) + gauge * pre * s
    return out


def _four_point_v_raw(nu1, nu2t, lams, cap_a, qh, th):
    out = {}
    for lam in lams:
        for mu in partitions_up_to(cap_a):
            v = refined_vertex(lam, mu, nu1, qh, 1 / th) * refined_vertex(
                conjugate(lam), conjugate(mu), nu2t, 1 / th, qh
            )
            key = (size(lam), size(mu))
            out[key] = out.get(key, 0) + v
    return out


def _four_point_v_skew(nu1, nu2t, lams, cap_a, p):
    """Vertical diagram from its product of four skew Schur functions.

    The prefactor uses P_{nu2}(1/t, q); with P_{nu2}(q, 1/t) in its place
    the result no longer matches the raw vertex sum.
    """
    qh, th, q, t = p.q_half, p.t_half, p.q, p.t
    sq = p.sqrt_qt
    nu2 = conjugate(nu2t)
    D = max(2 * max(cap_a, max((size(l) for l in lams), default=0)) + size(nu1) + size(nu2) + 2, 2)
    pre = sq ** (norm_sq(nu2t) - norm_sq(nu1)) * framing_p(nu1, qh, 1 / th) * framing_p(nu2t, 1 / th, qh)
    x1 = principal_power_sums(Fraction(1), qh, t, nu1, D)  # q^-rho t^nu1, carries A^-1
    x2 = principal_power_sums(sq, 1 / th, 1 / q, conjugate(nu1), D)  # (qt)^{1/2} q^-nu1^t t^rho, carries A
    x3 = principal_power_sums(Fraction(1), 1 / th, 1 / q, nu2t, D)  # q^-nu2^t t^rho
    x4 = principal_power_sums(1 / sq, qh, t, nu2, D)  # (qt)^{-1/2} q^-rho t^nu2
    out = {}
    for lam in lams:
        lt = conjugate(lam)
        for mu in partitions_up_to(cap_a):
            mt = conjugate(mu)
            s = Fraction(0)
            for e1 in sub_partitions(lt):
                if not contains(e1, mu):
                    continue
                a1 = skew_schur(lt, e1, x1) * skew_schur(mu, e1, x2)
                if a1 == 0:
                    continue
                for e2 in sub_partitions(lam):
                    if contains(e2, mt):
                        s += a1 * skew_schur(lam, e2, x3) * skew_schur(mt, e2, x4)
            # (QA)^{|lam|} A^{-|lam|+|e1|} A^{|mu|-|e1|} = Q^{|lam|} A^{|mu|}
            key = (size(lam), size(mu))
            out[key] = out.get(key, 0) + pre * s
    return out


def four_point_table(nu1, nu2t, lams, cap_a, p, direction=HORIZONTAL, path="vertex"):
    """Coefficients {(|lam|, |mu|): value} of one four-point diagram.

    ``lams`` lists the horizontal partitions to include; ``path`` chooses
    between the raw refined-vertex sum ("vertex") and the skew Schur
    reorganization ("skew").
    """
    nu1, nu2t, lams = tuple(nu1), tuple(nu2t), tuple(tuple(l) for l in lams)
    if direction == HORIZONTAL:
        if path == "vertex":
            return _four_point_h_raw(nu1, nu2t, lams, cap_a, p.q_half, p.t_half)
        return _four_point_h_skew(nu1, nu2t, lams, cap_a, p)
    if path == "vertex":
        return _four_point_v_raw(nu1, nu2t, lams, cap_a, p.q_half, p.t_half)
    return _four_point_v_skew(nu1, nu2t, lams, cap_a, p)


def _table_to_series(table, cfg):
    return MultiSeries(("Q", "A"), ((0, cfg.cap_q), (0, cfg.cap_a)), table)


def four_point_h(nu1, nu2t, cfg, path="vertex"):
    """Horizontal four-point diagram as a series in Q and A."""
    lams = partitions_up_to(cfg.cap_q)
    return _table_to_series(four_point_table(nu1, nu2t, lams, cfg.cap_a, cfg.params, HORIZONTAL, path), cfg)


def four_point_v(nu1, nu2t, cfg, path="vertex"):
    """Vertical four-point diagram as a series in Q and A."""
    lams = partitions_up_to(cfg.cap_q)
    return _table_to_series(four_point_table(nu1, nu2t, lams, cfg.cap_a, cfg.params, VERTICAL, path), cfg)


def _chain(cfg, pieces, vars, caps, q_slot):
    """Glue four-point pieces along the vertical edges.

    ``pieces(nu_left, nu_right_t, i)`` returns a coefficient table keyed by
    (Q-degree, A-degree) for diagram ``i`` (1-based).
    """
    r = cfg.r
    nvars = len(vars)
    zero = (0,) * nvars
    state = {(): MultiSeries.const(vars, caps, 1)}
    b_offset = nvars - (r - 1)
    inner = partitions_up_to(cfg.cap_b)
    for i in range(1, r + 1):
        nxt = {}
        rights = inner if i < r else [()]
        for nu_left, acc in state.items():
            for nu_right in rights:
                table = pieces(nu_left, conjugate(nu_right), i)
                piece = MultiSeries(vars, caps)
                for (dq, da), v in table.items():
                    e = list(zero)
                    if q_slot is not None:
                        e[q_slot] = dq
                    e[q_slot + 1 if q_slot is not None else 0] = da
                    if i < r:
                        e[b_offset + i - 1] = size(nu_right)
                    piece.add_term(e, v)
                term = acc * piece
                if term.is_zero():
                    continue
                nxt[nu_right] = nxt[nu_right] + term if nu_right in nxt else term
        state = nxt
    return state.get((), MultiSeries(vars, caps))


def zr_full(cfg, path="vertex"):
    """Full truncated partition function Z_r(q, 1/t; Q, A, B)."""
    lams = partitions_up_to(cfg.cap_q)

    def pieces(nl, nrt, i):
        return four_point_table(nl, nrt, lams, cfg.cap_a, cfg.params, cfg.direction, path)

    return _chain(cfg, pieces, cfg.vars, cfg.caps, q_slot=0)


def zr_fixed_legs(lams, cfg, path="vertex"):
    """Contribution of fixed horizontal legs ``lams`` (one per diagram), a series in A and B."""
    lams = tuple(tuple(l) for l in lams)
    if len(lams) != cfg.r:
        raise ValueError(f"expected {cfg.r} horizontal legs, got {len(lams)}")

    def pieces(nl, nrt, i):
        table = four_point_table(nl, nrt, [lams[i - 1]], cfg.cap_a, cfg.params, cfg.direction, path)
        return {(0, da): v for (_, da), v in table.items()}

    return _chain(cfg, pieces, cfg.leg_vars, cfg.leg_caps, q_slot=None)


def perturbative_term(cfg, path="vertex"):
    """The all-empty-legs contribution used as normalization."""
    return zr_fixed_legs(((),) * cfg.r, cfg, path)


def normalized_zr(cfg, path="vertex"):
    """Z_r divided by the perturbative term; constant term 1."""
    full = zr_full(cfg, path)
    pert = perturbative_term(cfg, path)
    embedded = pert.rewindow(cfg.vars, cfg.caps, lambda e: (0,) + tuple(e))
    return full * embedded.invert()


def zr_from_fixed_legs(cfg, path="vertex"):
    """Re-assemble Z_r as sum over fixed legs of Q^{|lams|} times their contribution."""
    out = MultiSeries(cfg.vars, cfg.caps)
    for n in range(cfg.cap_q + 1):
        for lams in tuples(cfg.r, n):
            part = zr_fixed_legs(lams, cfg, path)
            out = out + part.rewindow(cfg.vars, cfg.caps, lambda e, n=n: (n,) + tuple(e))
    return out
