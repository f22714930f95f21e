"""Fock-space vertex operators and the RR^H / RR^V assemblies.

The Fock space F is the ring of symmetric functions in the power-sum basis
p_mu, with alpha_{-n} = multiplication by p_n and alpha_n = n d/dp_n, so
[alpha_n, alpha_{-n}] = n.  Every operator we need is a product of
exponentials exp(sum_n c_n alpha_{+-n} / n) whose coefficients are scalars
times a monomial X^{n g} in the Kahler variables, interleaved with grading
operators X^{|.|}.

Three evaluation paths are provided and cross-checked:

* ``TruncOperator`` matrices on a truncated space (small D, used for the
  skew Schur matrix elements and brute-force traces);
* a pruned state-vector engine that is exact inside a series window;
* closed-form oracles from Heisenberg normal ordering.

The H-slot of the vertex operators Gamma_+- is never represented as a
matrix: it always holds a fixed point, so H_n is replaced by its eigenvalue.
"""

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import conjugate, enumerate_partitions, partitions_up_to, size, tuples, z_factor
from .series import MultiSeries, NonFormalSeriesError, SeriesMismatchError
from .symfun import macdonald_norm, vertex_op_coefficient_minus, vertex_op_coefficient_plus
from .vertex import zr_fixed_legs, zr_full

PLUS = "+"  # uses alpha_n (annihilation)
MINUS = "-"  # uses alpha_{-n} (creation)

CORRECTED = "corrected"
PRINTED = "printed"


# vertex operator descriptions


@dataclass(frozen=True)
class VertexOpSpec:
    """exp(sum_{n=1}^{D} coeffs[n-1] X^{n grading} alpha_{+-n} / n).

    ``sign`` is PLUS for alpha_n and MINUS for alpha_{-n}; ``grading`` is an
    exponent vector over the variables of the surrounding computation
    (empty means purely scalar).
    """

    sign: str
    coeffs: tuple
    grading: tuple = ()

    def __post_init__(self):
        if self.sign not in (PLUS, MINUS):
            raise ValueError(f"sign must be '+' or '-', not {self.sign!r}")

    @property
    def max_degree(self):
        return len(self.coeffs)

    def c(self, n):
        if n > len(self.coeffs):
            raise ValueError(f"coefficient c_{n} requested but only {len(self.coeffs)} are known")
        return self.coeffs[n - 1]

    def inverse(self):
        return VertexOpSpec(self.sign, tuple(-c for c in self.coeffs), self.grading)

    def with_grading(self, grading):
        return VertexOpSpec(self.sign, self.coeffs, tuple(grading))

    def graded(self, nvars):
        g = tuple(self.grading) or (0,) * nvars
        if len(g) != nvars:
            raise ValueError(f"grading {g} does not match {nvars} variables")
        return g

    def series_coefficient(self, n, vars, caps):
        """c_n X^{n grading} as a MultiSeries."""
        g = self.graded(len(vars))
        return MultiSeries.monomial(vars, caps, tuple(n * x for x in g), self.c(n))


@dataclass(frozen=True)
class Grading:
    """The operator X^{|.|} for the monomial X with exponent vector ``exps``."""

    exps: tuple


@dataclass(frozen=True)
class ChainWord:
    """An ordered product of vertex operators and grading operators."""

    items: tuple

    def __add__(self, other):
        return ChainWord(self.items + other.items)

    @property
    def ops(self):
        return [x for x in self.items if isinstance(x, VertexOpSpec)]


def fusion_compose(blocks, gradings):
    """block_1 X_1^{|.|} block_2 X_2^{|.|} ... block_k, with X_i given by ``gradings``."""
    blocks = list(blocks)
    if len(gradings) != max(len(blocks) - 1, 0):
        raise ValueError("need one grading between each pair of consecutive blocks")
    items = []
    for i, b in enumerate(blocks):
        items.extend(b.items if isinstance(b, ChainWord) else b)
        if i < len(gradings):
            items.append(Grading(tuple(gradings[i])))
    return ChainWord(tuple(items))


def gamma_eigen(sign, nu, p, D, z=1, grading=None, nvars=0, inverse=False):
    """Gamma_+(z) or Gamma_-(z) with the H-slot at the fixed point ``nu``.

    z = scalar * X^{grading}.  Gamma_+(z) has c_n = g_n z^n with
    g_n = (qt)^{n/2}(t^{n/2}-t^{-n/2}) h_n(nu); Gamma_-(z) has
    c_n = -k_n z^{-n} with k_n = (qt)^{-n/2}(q^{n/2}-q^{-n/2}) h_{-n}(nu).
    """
    nu = tuple(nu)
    z = Fraction(z)
    g = tuple(grading) if grading is not None else (0,) * nvars
    s = -1 if inverse else 1
    if sign == PLUS:
        coeffs = tuple(s * vertex_op_coefficient_plus(n, nu, p) * z**n for n in range(1, D + 1))
        return VertexOpSpec(PLUS, coeffs, g)
    coeffs = tuple(-s * vertex_op_coefficient_minus(n, nu, p) * z ** (-n) for n in range(1, D + 1))
    return VertexOpSpec(MINUS, coeffs, tuple(-x for x in g))


def d_entry(lam, p):
    """Diagonal entry <O_lam|O_lam>^{-1} of the operator D."""
    return 1 / macdonald_norm(tuple(lam), p)


# truncated Fock space and explicit matrices


@dataclass(frozen=True)
class FockSpace:
    """Span of p_mu with |mu| <= D."""

    D: int

    @property
    def basis(self):
        return partitions_up_to(self.D)

    def dim(self, n=None):
        if n is None:
            return len(self.basis)
        return len(enumerate_partitions(n))


def _merge(mu, nu):
    return tuple(sorted(mu + nu, reverse=True))


def _scale(c, x):
    return x.scale(c) if isinstance(x, MultiSeries) else c * x


@lru_cache(maxsize=None)
def _partitions_between(lo, hi):
    return [nu for n in range(lo, hi + 1) for nu in enumerate_partitions(n)]


def _minus_terms(c, budget, one):
    """[(nu, prod c_{nu_i} / z_nu)] for 1 <= |nu| <= budget; ``c(n)`` gives ring elements."""
    out = []
    for nu in _partitions_between(1, budget):
        coef = one
        for part in nu:
            coef = coef * c(part)
        out.append((nu, _scale(Fraction(1, z_factor(nu)), coef)))
    return out


def _plus_expand(mu, c, one, max_removed=None):
    """Expansion of prod_i (p_{mu_i} + c(mu_i)) as [(kept partition, coefficient)].

    With ``max_removed`` only terms removing at most that much degree are
    produced, and coefficients beyond it are never requested.
    """
    acc = {(): one}
    processed = 0
    for part in sorted(set(mu), reverse=True):
        k = mu.count(part)
        processed += k * part
        nxt = {}
        for kept, coef in acc.items():
            for j in range(k + 1):  # j copies replaced by c(part)
                if max_removed is not None and processed - size(kept) - (k - j) * part > max_removed:
                    break
                term = coef
                for _ in range(j):
                    term = term * c(part)
                term = _scale(math.comb(k, j), term)
                key = kept + (part,) * (k - j)
                nxt[key] = nxt[key] + term if key in nxt else term
        acc = nxt
    return list(acc.items())


class TruncOperator:
    """Linear map on a truncated Fock space, stored as {(row, col): entry}.

    Entries are Fractions or MultiSeries; components of degree above D are
    discarded, so products are exact only on blocks that never leave the
    truncation.
    """

    def __init__(self, space, entries=None, zero=Fraction(0)):
        self.space = space
        self.entries = dict(entries or {})
        self.zero = zero

    def element(self, row, col):
        return self.entries.get((tuple(row), tuple(col)), self.zero)

    def apply(self, vec):
        out = {}
        cols = defaultdict(list)
        for (r, c), v in self.entries.items():
            cols[c].append((r, v))
        for c, x in vec.items():
            for r, v in cols.get(c, ()):
                term = v * x
                out[r] = out[r] + term if r in out else term
        return out

    def __matmul__(self, other):
        entries = {}
        rows_of = defaultdict(list)
        for (r, c), v in self.entries.items():
            rows_of[c].append((r, v))
        for (k, c), w in other.entries.items():
            for r, v in rows_of.get(k, ()):
                term = v * w
                entries[(r, c)] = entries[(r, c)] + term if (r, c) in entries else term
        return TruncOperator(self.space, entries, self.zero)

    def commutator(self, other):
        ab, ba = self @ other, other @ self
        keys = set(ab.entries) | set(ba.entries)
        return TruncOperator(self.space, {k: ab.element(*k) - ba.element(*k) for k in keys}, self.zero)

    def graded_trace(self, weight):
        """sum_mu weight(|mu|) * <p_mu coefficient of self p_mu>."""
        out = None
        for mu in self.space.basis:
            v = self.element(mu, mu)
            term = weight(size(mu)) * v
            out = term if out is None else out + term
        return out


def alpha_matrix(n, space):
    """alpha_n = n d/dp_n for n > 0 and multiplication by p_{|n|} for n < 0."""
    if n == 0 or abs(n) > space.D:
        raise ValueError(f"alpha_{n} is not defined on degrees <= {space.D}")
    entries = {}
    for mu in space.basis:
        if n < 0:
            if size(mu) - n <= space.D:
                entries[(_merge(mu, (-n,)), mu)] = Fraction(1)
        else:
            k = mu.count(n)
            if k:
                rest = list(mu)
                rest.remove(n)
                entries[(tuple(rest), mu)] = Fraction(n * k)
    return TruncOperator(space, entries)


def exp_vertex_op(spec, space, vars=None, caps=None):
    """Matrix of the exponential described by ``spec`` on ``space``.

    With ``vars``/``caps`` the entries are MultiSeries carrying the grading
    of ``spec``; otherwise the spec must be scalar and entries are Fractions.
    """
    if vars is None:
        if any(spec.grading):
            raise ValueError("a graded vertex operator needs vars and caps")
        one = Fraction(1)

        def c(n):
            return spec.c(n)

        zero = Fraction(0)
    else:
        one = MultiSeries.const(vars, caps, 1)

        def c(n):
            return spec.series_coefficient(n, vars, caps)

        zero = MultiSeries(vars, caps)
    entries = {}
    D = space.D
    if spec.sign == MINUS:
        terms = [((), one)] + _minus_terms(c, D, one)
        for mu in space.basis:
            for nu, coef in terms:
                if size(mu) + size(nu) <= D:
                    entries[(_merge(mu, nu), mu)] = coef
    else:
        for mu in space.basis:
            for kept, coef in _plus_expand(mu, c, one):
                entries[(kept, mu)] = coef
    return TruncOperator(space, entries, zero)


def word_operator(word, space, vars=None, caps=None):
    """Matrix of a ChainWord on ``space`` (grading operators become diagonal matrices)."""
    result = None
    for item in word.items:
        if isinstance(item, VertexOpSpec):
            m = exp_vertex_op(item, space, vars, caps)
        else:
            m = TruncOperator(
                space,
                {
                    (mu, mu): MultiSeries.monomial(vars, caps, tuple(size(mu) * x for x in item.exps))
                    for mu in space.basis
                },
                MultiSeries(vars, caps),
            )
        result = m if result is None else result @ m
    return result


# symmetric functions in the power-sum basis (for skew Schur matrix elements)


def _sf_mul(f, g):
    out = defaultdict(Fraction)
    for a, x in f.items():
        for b, y in g.items():
            out[_merge(a, b)] += x * y
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def complete_h_in_power_sums(k):
    """h_k = sum_{|mu| = k} p_mu / z_mu."""
    if k < 0:
        return {}
    return {mu: Fraction(1, z_factor(mu)) for mu in enumerate_partitions(k)}


@lru_cache(maxsize=None)
def schur_in_power_sums(lam):
    """s_lam as {mu: coefficient of p_mu}, from the Jacobi-Trudi determinant."""
    lam = tuple(lam)
    n = len(lam)
    if n == 0:
        return {(): Fraction(1)}
    total = defaultdict(Fraction)
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = {(): Fraction(1)}
        for i in range(n):
            h = complete_h_in_power_sums(lam[i] - i + perm[i])
            if not h:
                term = {}
                break
            term = _sf_mul(term, h)
        for k, v in term.items():
            total[k] += -v if inversions % 2 else v
    return {k: v for k, v in total.items() if v}


def hall_pairing(f, g):
    """<f, g> with <p_mu, p_nu> = z_mu delta_{mu nu}."""
    return sum((v * g[k] * z_factor(k) for k, v in f.items() if k in g), Fraction(0))


def schur_matrix_element(op, mu, lam):
    """<s_mu | op | s_lam> for a scalar TruncOperator."""
    return hall_pairing(schur_in_power_sums(tuple(mu)), op.apply(schur_in_power_sums(tuple(lam))))


# exact pruned engine


def _nonneg(v):
    return all(x >= 0 for x in v)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _smul(k, v):
    return tuple(k * x for x in v)


def _degree_bound(exps, caps):
    """Largest d with d * exps inside the upper caps, or None if exps is zero."""
    bounds = [hi // e for e, (lo, hi) in zip(exps, caps) if e > 0]
    if not bounds:
        return None
    return max(min(bounds), -1)


@dataclass
class _Normalized:
    ops: list  # VertexOpSpec with non-negative (possibly zero) gradings
    gaps: list  # gaps[j] sits between ops[j-1] and ops[j]; len(ops) + 1 entries


def _normalize(word, nvars):
    """Move negative op gradings onto neighbouring grading operators.

    X^{-L} e^{c alpha_n} X^{L} = e^{c X^n alpha_n} and
    X^{L} e^{c alpha_{-n}} X^{-L} = e^{c X^n alpha_{-n}}.
    """
    zero = (0,) * nvars
    ops, gaps = [], [zero]
    for item in word.items:
        if isinstance(item, Grading):
            gaps[-1] = _add(gaps[-1], item.exps)
            continue
        g = item.graded(nvars)
        if _nonneg(g):
            ops.append(item.with_grading(g))
            gaps.append(zero)
            continue
        left, right = (_smul(-1, g), g) if item.sign == PLUS else (g, _smul(-1, g))
        gaps[-1] = _add(gaps[-1], left)
        ops.append(item.with_grading(zero))
        gaps.append(right)
    return _Normalized(ops, gaps)


INF = float("inf")


def _gap_bounds(norm, caps, ends):
    """Upper bounds on the Fock degree at each gap (exact pruning data).

    ``ends`` is ("vev",) or ("trace", end_exps).  Raises
    NonFormalSeriesError when some gap degree is unbounded, which means the
    word does not define a formal series.
    """
    N = len(norm.ops)
    U = [INF] * (N + 1)
    for j in range(1, N):
        b = _degree_bound(norm.gaps[j], caps)
        if b is not None:
            U[j] = b
    if ends[0] == "vev":
        U[0] = U[N] = 0
    else:
        b = _degree_bound(ends[1], caps)
        if b is not None:
            U[0] = U[N] = b
    steps = []
    for j, op in enumerate(norm.ops, start=1):
        b = _degree_bound(op.grading, caps)
        steps.append((j, op.sign, INF if b is None else b))
    for _ in range(2 * N + 4):
        changed = False

        def relax(k, v):
            nonlocal changed
            if v < U[k]:
                U[k] = v
                changed = True

        for j, sign, c in steps:
            if sign == MINUS:  # degree grows leftwards by at most c
                relax(j - 1, U[j] + c)
                relax(j, U[j - 1])
            else:
                relax(j, U[j - 1] + c)
                relax(j - 1, U[j])
        if ends[0] == "trace":
            relax(0, U[N])
            relax(N, U[0])
        if not changed:
            break
    if any(u == INF for u in U):
        bad = [j for j, u in enumerate(U) if u == INF]
        raise NonFormalSeriesError(f"unbounded Fock degree at gaps {bad}: the word is not a formal series")
    return [int(u) for u in U]


def _in_caps(w, caps):
    return all(x <= hi for x, (lo, hi) in zip(w, caps))


def _cap_room(state, g, caps):
    """Largest degree k such that w + k g stays inside the caps for some state weight w."""
    rooms = [(hi - min(w[i] for _, w in state)) // x for i, (x, (_, hi)) in enumerate(zip(g, caps)) if x > 0]
    return min(rooms) if rooms else None


def _apply_op(state, op, bound, caps):
    out = defaultdict(Fraction)
    g = op.grading
    room_caps = _cap_room(state, g, caps) if state else None
    if op.sign == MINUS:
        budget = bound - min((size(mu) for mu, _ in state), default=0)
        if room_caps is not None:
            budget = min(budget, room_caps)
        terms = [((), Fraction(1))] + (_minus_terms(op.c, budget, Fraction(1)) if budget > 0 else [])
        for (mu, w), x in state.items():
            room = bound - size(mu)
            for nu, coef in terms:
                k = size(nu)
                if k > room:
                    break
                w2 = _add(w, _smul(k, g))
                if _in_caps(w2, caps):
                    out[(_merge(mu, nu), w2)] += x * coef
    else:
        for (mu, w), x in state.items():
            d = size(mu)
            for kept, coef in _plus_expand(mu, op.c, Fraction(1), room_caps):
                k = d - size(kept)
                if size(kept) > bound:
                    continue
                w2 = _add(w, _smul(k, g))
                if _in_caps(w2, caps):
                    out[(kept, w2)] += x * coef
    return {k: v for k, v in out.items() if v}


def _apply_grading(state, exps, bound, caps):
    out = {}
    for (mu, w), x in state.items():
        if size(mu) > bound:
            continue
        w2 = _add(w, _smul(size(mu), exps))
        if _in_caps(w2, caps):
            out[(mu, w2)] = x
    return out


def _run(norm, U, state, caps):
    N = len(norm.ops)
    for j in range(N, 0, -1):
        if j < N:
            state = _apply_grading(state, norm.gaps[j], U[j], caps)
        state = _apply_op(state, norm.ops[j - 1], U[j - 1], caps)
        if not state:
            break
    return state


def engine_vev(word, vars, caps):
    """<0| word |0> by exact pruned state propagation."""
    nvars = len(vars)
    norm = _normalize(word, nvars)
    if not all(_nonneg(g) for g in norm.gaps[1:-1]):
        raise NonFormalSeriesError("a grading between operators has negative exponents")
    U = _gap_bounds(norm, caps, ("vev",))
    zero = (0,) * nvars
    state = _run(norm, U, {((), zero): Fraction(1)}, caps)
    out = MultiSeries(vars, caps)
    for (mu, w), x in state.items():
        if mu == ():
            out.add_term(w, x)
    return out


def engine_trace(word, W, vars, caps):
    """tr W^{|.|} word by summing diagonal entries over the p_mu basis."""
    nvars = len(vars)
    norm = _normalize(word, nvars)
    end = _add(_add(tuple(W), norm.gaps[0]), norm.gaps[-1])
    if not all(_nonneg(g) for g in norm.gaps[1:-1]) or not _nonneg(end):
        raise NonFormalSeriesError("a grading in the traced word has negative exponents")
    U = _gap_bounds(norm, caps, ("trace", end))
    out = MultiSeries(vars, caps)
    for mu0 in partitions_up_to(U[0]):
        w0 = _smul(size(mu0), end)
        if not _in_caps(w0, caps):
            continue
        state = _run(norm, U, {(mu0, w0): Fraction(1)}, caps)
        for (mu, w), x in state.items():
            if mu == mu0:
                out.add_term(w, x)
    return out


# closed-form oracles


def _pushed_gradings(word, nvars):
    """Effective per-n gradings after moving every grading operator to the right end.

    alpha_n X^{L} = X^{L} X^{n} alpha_n and alpha_{-n} X^{L} = X^{L} X^{-n} alpha_{-n}.
    Returns ([(spec, effective grading)], total grading at the right end).
    """
    acc = (0,) * nvars
    out = []
    for item in reversed(word.items):
        if isinstance(item, Grading):
            acc = _add(acc, item.exps)
            continue
        g = item.graded(nvars)
        eff = _add(g, acc) if item.sign == PLUS else _add(g, _smul(-1, acc))
        out.append((item, eff))
    out.reverse()
    return out, acc


def _n_range(v, caps):
    """Largest n with n * v inside the (Laurent) window, or None for v = 0."""
    bounds = []
    for x, (lo, hi) in zip(v, caps):
        if x > 0:
            bounds.append(hi // x)
        elif x < 0:
            bounds.append(lo // x if lo < 0 else 0)
    return max(min(bounds), 0) if bounds else None


def _pair_sum(a_spec, a_g, b_spec, b_g, vars, caps, geometric=None):
    """sum_n a_n b_n X^{n (a_g + b_g)} / n, times sum_{k >= 1} X^{k n Wt} if ``geometric`` = Wt.

    Monomials are multiplied exactly before truncation, so a negative
    exponent that is compensated by the geometric factor is not lost.
    """
    v = _add(a_g, b_g)
    out = MultiSeries(vars, caps)
    nmax = _n_range(_add(v, geometric) if geometric is not None else v, caps)
    if nmax is None:
        if any(a_spec.c(n) * b_spec.c(n) for n in range(1, min(a_spec.max_degree, b_spec.max_degree) + 1)):
            raise NonFormalSeriesError("a contraction carries no Kahler grading: the sum over n diverges")
        return out
    for n in range(1, nmax + 1):
        c = a_spec.c(n) * b_spec.c(n) / n
        if not c:
            continue
        base = _smul(n, v)
        if geometric is None:
            out.add_term(base, c)
            continue
        step = _smul(n, geometric)
        k = 1
        while True:
            e = _add(base, _smul(k, step))
            if not _in_caps(e, caps):
                break
            out.add_term(e, c)
            k += 1
    return out


def contraction_oracle(word, vars, caps):
    """<0| word |0> = exp(sum_{i<j, i plus, j minus} sum_n a_{i,n} b_{j,n} / n)."""
    pushed, _ = _pushed_gradings(word, len(vars))
    expo = MultiSeries(vars, caps)
    for i, (si, gi) in enumerate(pushed):
        if si.sign != PLUS:
            continue
        for sj, gj in pushed[i + 1 :]:
            if sj.sign == MINUS:
                expo = expo + _pair_sum(si, gi, sj, gj, vars, caps)
    return expo.exp()


def _geometric(exps, vars, caps, start=1):
    """sum_{k >= start} X^{k exps} inside the window."""
    nmax = _n_range(exps, caps)
    if nmax is None:
        raise NonFormalSeriesError("trace grading is trivial")
    out = MultiSeries(vars, caps)
    for k in range(start, nmax + 1):
        out.add_term(_smul(k, exps), 1)
    return out


def trace_oracle(word, W, vars, caps):
    """tr W^{|.|} word from normal ordering and the free-boson trace formula.

    tr W^L e^{B alpha_-} e^{A alpha_+} = prod_k (1 - W^k)^{-1} exp(sum_n A_n B_n W^n / (n (1 - W^n))).
    """
    pushed, acc = _pushed_gradings(word, len(vars))
    Wt = _add(tuple(W), acc)
    if not _nonneg(Wt) or not any(Wt):
        raise NonFormalSeriesError("effective trace grading must be a non-trivial monomial")
    expo = MultiSeries(vars, caps)
    for i, (si, gi) in enumerate(pushed):
        for j, (sj, gj) in enumerate(pushed):
            if si.sign == PLUS and sj.sign == MINUS:
                if i < j:
                    expo = expo + _pair_sum(si, gi, sj, gj, vars, caps)
                expo = expo + _pair_sum(si, gi, sj, gj, vars, caps, geometric=Wt)
    out = expo.exp()
    for k in range(1, (_n_range(Wt, caps) or 0) + 1):
        out = out * (_geometric(_smul(k, Wt), vars, caps, start=0))
    return out


def graded_trace_oracle(plus, minus, cap_q, order="plus-first"):
    """tr Q^{|.|} of one plus/minus pair of scalar vertex operators, as a series in Q.

    The operators are exp(sum_{n <= D} ...) with exactly the listed
    coefficients.  order="plus-first" is e^{a alpha_+} e^{b alpha_-} and gives
    prod (1-Q^k)^{-1} exp(sum a_n b_n / (n (1 - Q^n)));
    order="minus-first" gives prod (1-Q^k)^{-1} exp(sum a_n b_n Q^n / (n (1 - Q^n))).
    """
    if order not in ("plus-first", "minus-first"):
        raise ValueError(f"unknown order {order!r}")
    vars, caps = ("Q",), ((0, cap_q),)
    out = MultiSeries.const(vars, caps, 1)
    for k in range(1, cap_q + 1):
        out = out * _geometric((k,), vars, caps, start=0)
    expo = MultiSeries(vars, caps)
    start = 0 if order == "plus-first" else 1
    for n in range(1, min(plus.max_degree, minus.max_degree) + 1):
        ab = plus.c(n) * minus.c(n) / n
        if ab:
            expo = expo + _geometric((n,), vars, caps, start=start).scale(ab)
    return out * expo.exp()


def brute_force_trace(word, W, vars, caps, D):
    """tr W^{|.|} word on the truncated space of degree <= D (explicit matrices)."""
    space = FockSpace(D)
    op = word_operator(word, space, vars, caps)

    def weight(d):
        return MultiSeries.monomial(vars, caps, _smul(d, W))

    return op.graded_trace(weight)


def brute_force_vev(word, vars, caps, D):
    space = FockSpace(D)
    op = word_operator(word, space, vars, caps)
    return op.element((), ())


def dual_path_vev(word, vars, caps):
    """Engine and contraction oracle; raises SeriesMismatchError if they differ."""
    a = engine_vev(word, vars, caps)
    b = contraction_oracle(word, vars, caps)
    if a != b:
        raise SeriesMismatchError(f"engine and contraction oracle differ at {a.first_mismatch(b)}")
    return a


def dual_path_trace(word, W, vars, caps):
    a = engine_trace(word, W, vars, caps)
    b = trace_oracle(word, W, vars, caps)
    if a != b:
        raise SeriesMismatchError(f"engine and trace oracle differ at {a.first_mismatch(b)}")
    return a


def assert_power_series(s, var="A"):
    """The no-negative-powers check required of every assembled RR element."""
    k = s.vars.index(var)
    bad = [e for e in s.terms if e[k] < 0]
    if bad:
        raise NonFormalSeriesError(f"negative powers of {var} at {sorted(bad)[:3]}")
    return s


# RR^H


def _unit(nvars, k):
    return tuple(1 if i == k else 0 for i in range(nvars))


@dataclass(frozen=True)
class RRConfig:
    """Rank, truncation and parameter point for the RR assemblies."""

    r: int
    params: object
    cap_q: int = 2
    cap_a: int = 2
    cap_b: int = 2
    variant: str = CORRECTED
    laurent_slack: int = field(default=4, compare=False)

    def __post_init__(self):
        if self.r < 1 or min(self.cap_q, self.cap_a, self.cap_b) < 0:
            raise ValueError("invalid RR configuration")
        if self.variant not in (CORRECTED, PRINTED):
            raise ValueError(f"variant must be {CORRECTED!r} or {PRINTED!r}")

    @property
    def D(self):
        return self.cap_q + self.cap_a + self.r * self.cap_b + 2

    @property
    def b_vars(self):
        return tuple(f"B{i}" for i in range(1, self.r))


def rr_h_block(lam, p, D, nvars, a_index=0, variant=CORRECTED):
    """The four vertex operators of RR^H on factor 0 with the H-slot at ``lam``.

    corrected: Gamma_-(1/sqrt(qt)) Gamma_+(1)^{-1} Gamma_-(-1/A)^{-1} Gamma_+(-1/(A sqrt(qt)))
    printed:   Gamma_-(sqrt(qt))^{-1} Gamma_+(1)^{-1} Gamma_-(-A) Gamma_+(-1/(A sqrt(qt)))
    """
    sq = p.sqrt_qt
    A = _unit(nvars, a_index)
    Ainv = _smul(-1, A)
    zero = (0,) * nvars
    if variant == CORRECTED:
        ops = [
            gamma_eigen(MINUS, lam, p, D, 1 / sq, zero),
            gamma_eigen(PLUS, lam, p, D, 1, zero, inverse=True),
            gamma_eigen(MINUS, lam, p, D, -1, Ainv, inverse=True),
            gamma_eigen(PLUS, lam, p, D, -1 / sq, Ainv),
        ]
    else:
        ops = [
            gamma_eigen(MINUS, lam, p, D, sq, zero, inverse=True),
            gamma_eigen(PLUS, lam, p, D, 1, zero, inverse=True),
            gamma_eigen(MINUS, lam, p, D, -1, A),
            gamma_eigen(PLUS, lam, p, D, -1 / sq, Ainv),
        ]
    return ChainWord(tuple(ops))


def rr_h_word(lams, p, D, variant=CORRECTED):
    """Factor-0 word of <0| RR^(10) B_1^L ... RR^(r0) |0> over variables (A, B_1, ...).

    The grading between blocks i and i+1 is A B_i for the corrected form
    (B_i being the network variable) and B_i for the printed form.
    """
    r = len(lams)
    nvars = r
    blocks = [rr_h_block(lam, p, D, nvars, 0, variant) for lam in lams]
    gradings = []
    for i in range(1, r):
        g = list(_unit(nvars, i))
        if variant == CORRECTED:
            g[0] = 1
        gradings.append(tuple(g))
    return fusion_compose(blocks, gradings)


def _rr_h_vars(cfg):
    vars = ("A",) + cfg.b_vars
    if cfg.variant == CORRECTED:
        caps = ((0, cfg.cap_a),) + ((0, cfg.cap_b),) * (cfg.r - 1)
    else:
        caps = ((-cfg.cap_a - cfg.laurent_slack, cfg.cap_a),) + ((0, cfg.cap_b),) * (cfg.r - 1)
    return vars, caps


def rr_h_diagonal(lams, cfg):
    """D times the factor-0 vacuum element with the H-slots at ``lams``.

    The corrected form is evaluated by both the engine and the contraction
    oracle and is asserted to be a power series in A.  The printed form is
    a series in 1/A and is evaluated on the oracle path in a Laurent window.
    """
    lams = tuple(tuple(l) for l in lams)
    if len(lams) != cfg.r:
        raise ValueError(f"expected {cfg.r} partitions")
    p = cfg.params
    vars, caps = _rr_h_vars(cfg)
    word = rr_h_word(lams, p, cfg.D + cfg.laurent_slack, cfg.variant)
    dfac = Fraction(1)
    for lam in lams:
        dfac *= d_entry(lam, p)
    if cfg.variant == CORRECTED:
        val = dual_path_vev(word, vars, caps)
        return assert_power_series(val.scale(dfac))
    return contraction_oracle(word, vars, caps).scale(dfac)


def rr_h_expected(lams, cfg, ncfg):
    """The network side of the RR^H identity in the variables of rr_h_diagonal.

    corrected: (-1)^{|lams|} Z_r(q, 1/t; A, B)_lams;
    printed:   (-sqrt(qt))^{|lams|} Z_r(q, 1/t; A, A B)_lams.
    """
    z = zr_fixed_legs(lams, ncfg)
    L = sum(size(l) for l in lams)
    vars, caps = _rr_h_vars(cfg)
    if cfg.variant == CORRECTED:
        return z.rewindow(vars, caps, lambda e: e).scale((-1) ** L)
    return z.rewindow(vars, caps, lambda e: (e[0] - sum(e[1:]),) + tuple(e[1:])).scale((-cfg.params.sqrt_qt) ** L)


def rr_h_trace(cfg):
    """sum over fixed points of Q^{|lams|} rr_h_diagonal(lams); equals Z_r(q, 1/t; -Q, A, B)."""
    hvars, hcaps = _rr_h_vars(cfg)
    vars, caps = ("Q",) + hvars, ((0, cfg.cap_q),) + hcaps
    out = MultiSeries(vars, caps)
    for n in range(cfg.cap_q + 1):
        for lams in tuples(cfg.r, n):
            d = rr_h_diagonal(lams, cfg)
            out = out + d.rewindow(vars, caps, lambda e, n=n: (n,) + tuple(e))
    return out


# RR^V


def rr_v_left_block(nu, p, D, nvars, a_index=1, variant=CORRECTED):
    """Operators of RR^V standing to the left of the mixing operator M."""
    sq = p.sqrt_qt
    zero = (0,) * nvars
    if variant == CORRECTED:  # Gamma_-(1) Gamma_+(1/sqrt(qt))^{-1}
        return [gamma_eigen(MINUS, nu, p, D, 1, zero), gamma_eigen(PLUS, nu, p, D, 1 / sq, zero, inverse=True)]
    # Gamma_+(1)^{-1} Gamma_-(1/sqrt(qt))^{-1}
    return [
        gamma_eigen(PLUS, nu, p, D, 1, zero, inverse=True),
        gamma_eigen(MINUS, nu, p, D, 1 / sq, zero, inverse=True),
    ]


def rr_v_right_block(nu, p, D, nvars, a_index=1, variant=CORRECTED):
    """Operators of RR^V standing to the right of the mixing operator M."""
    sq = p.sqrt_qt
    A = _unit(nvars, a_index)
    Ainv = _smul(-1, A)
    if variant == CORRECTED:  # Gamma_-(-1/(A sqrt(qt)))^{-1} Gamma_+(-1/A)
        return [gamma_eigen(MINUS, nu, p, D, -1 / sq, Ainv, inverse=True), gamma_eigen(PLUS, nu, p, D, -1, Ainv)]
    # Gamma_+(-A sqrt(qt)) Gamma_-(-1/A)
    return [gamma_eigen(PLUS, nu, p, D, -sq, A), gamma_eigen(MINUS, nu, p, D, -1, Ainv)]


def rr_v_factor_word(nu_left, nu_right, p, D, nvars, variant=CORRECTED):
    """Word traced over factor i, after inserting fixed points around each M.

    corrected: chain order <0| RR^(0r) ... RR^(01) |0>, so factor i sees the
    left block at nu_i and the right block at nu_{i-1};
    printed: chain order <0| RR^(01) ... RR^(0r) |0>, left block at nu_{i-1},
    right block at nu_i.
    """
    return ChainWord(
        tuple(rr_v_left_block(nu_left, p, D, nvars, 1, variant) + rr_v_right_block(nu_right, p, D, nvars, 1, variant))
    )


def rr_v_trace(cfg):
    """Graded trace built from RR^V, a series in (Q, A, B_1, ...).

    corrected: equals Z_r(q, 1/t; Q, A, B) with trace grading (QA)^L and
    vertical weights (-B_i)^{|nu_i|} <O_nu, O_nu>^{-1};
    printed: trace grading Q^L; raises NonFormalSeriesError because the
    printed word contains a contraction with no Kahler variable.
    """
    p = cfg.params
    r = cfg.r
    vars = ("Q", "A") + cfg.b_vars
    caps = ((0, cfg.cap_q), (0, cfg.cap_a)) + ((0, cfg.cap_b),) * (r - 1)
    nvars = len(vars)
    W = (1, 1) + (0,) * (r - 1) if cfg.variant == CORRECTED else (1, 0) + (0,) * (r - 1)
    D = cfg.D
    out = MultiSeries(vars, caps)
    inner = partitions_up_to(cfg.cap_b)
    traces = {}

    def factor_trace(nl, nr):
        key = (nl, nr)
        if key not in traces:
            word = rr_v_factor_word(nl, nr, p, D, nvars, cfg.variant)
            traces[key] = dual_path_trace(word, W, vars, caps)
        return traces[key]

    for nus in _nu_sequences(r - 1, inner):
        seq = ((),) + nus + ((),)
        weight = Fraction(1)
        exps = [0] * nvars
        for k, nu in enumerate(nus):
            if cfg.variant == CORRECTED:
                weight *= (-1) ** size(nu) * d_entry(nu, p)
            else:
                weight *= d_entry(nu, p)
            exps[2 + k] = size(nu)
        term = MultiSeries.monomial(vars, caps, exps, weight)
        if term.is_zero():
            continue
        for i in range(1, r + 1):
            if cfg.variant == CORRECTED:
                term = term * factor_trace(seq[i], seq[i - 1])
            else:
                term = term * factor_trace(seq[i - 1], seq[i])
            if term.is_zero():
                break
        out = out + term
    return assert_power_series(out)


def _nu_sequences(k, inner):
    if k == 0:
        return [()]
    return [(nu,) + rest for nu in inner for rest in _nu_sequences(k - 1, inner)]


def rr_v_expected(cfg, ncfg):
    """Network side for rr_v_trace.

    corrected: Z_r(q, 1/t; Q, A, B); printed: Z_r(q, 1/t; QA, A, -B sqrt(qt)).
    """
    z = zr_full(ncfg)
    vars = ("Q", "A") + cfg.b_vars
    caps = ((0, cfg.cap_q), (0, cfg.cap_a)) + ((0, cfg.cap_b),) * (cfg.r - 1)
    if cfg.variant == CORRECTED:
        return z.rewindow(vars, caps, lambda e: e)
    sq = cfg.params.sqrt_qt
    return z.rewindow(vars, caps, lambda e: (e[0], e[0] + e[1]) + tuple(e[2:]), lambda e: (-sq) ** sum(e[2:]))


def conjugate_all(lams):
    return tuple(conjugate(l) for l in lams)
