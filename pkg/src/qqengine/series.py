"""Exact scalars, truncated multivariate Laurent series and parameter points.

A :class:`MultiSeries` is a finite map from integer exponent vectors to
``Fraction`` coefficients, together with a per-variable truncation window.
Every arithmetic result is re-truncated to the window, so the ring
operations are exact for all coefficients inside it provided no
intermediate product leaves the window and comes back.  That can only
happen when some window has a negative lower end; callers that need
negative exponents should multiply monomials exactly (see
:func:`monomial_product`) before truncating.
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct


class GenericityError(ValueError):
    """A parameter point hits a multiplicative relation it must avoid."""


class SeriesMismatchError(ValueError):
    """Two series with different variables or windows were combined."""


class NonFormalSeriesError(ArithmeticError):
    """An expression has no expansion as a truncated formal series."""


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact scalars only, got {type(x).__name__}")


class MultiSeries:
    """Truncated multivariate Laurent series with rational coefficients."""

    __slots__ = ("vars", "caps", "terms")

    def __init__(self, vars, caps, terms=None):
        self.vars = tuple(vars)
        self.caps = tuple((int(lo), int(hi)) for lo, hi in caps)
        if len(self.vars) != len(self.caps):
            raise ValueError("one cap window per variable is required")
        self.terms = {}
        if terms:
            for e, c in terms.items():
                self._add_term(tuple(e), as_fraction(c))

    # construction helpers

    @classmethod
    def zero_like(cls, other):
        return cls(other.vars, other.caps)

    @classmethod
    def const(cls, vars, caps, c):
        s = cls(vars, caps)
        s._add_term((0,) * len(s.vars), as_fraction(c))
        return s

    @classmethod
    def monomial(cls, vars, caps, exps, c=1):
        s = cls(vars, caps)
        s._add_term(tuple(exps), as_fraction(c))
        return s

    def like(self, terms=None):
        return MultiSeries(self.vars, self.caps, terms)

    def const_like(self, c):
        return MultiSeries.const(self.vars, self.caps, c)

    def mono_like(self, exps, c=1):
        return MultiSeries.monomial(self.vars, self.caps, exps, c)

    def in_window(self, e):
        return all(lo <= x <= hi for x, (lo, hi) in zip(e, self.caps))

    def _add_term(self, e, c):
        if c == 0 or not self.in_window(e):
            return
        v = self.terms.get(e, 0) + c
        if v == 0:
            self.terms.pop(e, None)
        else:
            self.terms[e] = v

    def add_term(self, exps, c):
        """In-place accumulation of one monomial (dropped if outside the window)."""
        self._add_term(tuple(exps), as_fraction(c))
        return self

    # ring structure

    def _check(self, other):
        if not isinstance(other, MultiSeries):
            return
        if other.vars != self.vars or other.caps != self.caps:
            raise SeriesMismatchError(f"incompatible series: {self.vars}{self.caps} vs {other.vars}{other.caps}")

    def _coerce(self, other):
        if isinstance(other, MultiSeries):
            self._check(other)
            return other
        return self.const_like(as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = self.like(self.terms)
        for e, c in other.terms.items():
            out._add_term(e, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        return self.like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = as_fraction(c)
        if c == 0:
            return self.like()
        return self.like({e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        self._check(other)
        out = self.like()
        caps = self.caps
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(lo <= x <= hi for x, (lo, hi) in zip(e, caps)):
                    v = out.terms.get(e, 0) + c1 * c2
                    if v == 0:
                        out.terms.pop(e, None)
                    else:
                        out.terms[e] = v
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if k < 0:
            return self.invert() ** (-k)
        out = self.const_like(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiSeries):
            return self.vars == other.vars and self.caps == other.caps and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, self.caps, frozenset(self.terms.items())))

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def _nilpotent_powers(self, max_iter):
        """Yield s, s^2, ... until the power vanishes inside the window."""
        p = self
        for _ in range(max_iter):
            if p.is_zero():
                return
            yield p
            p = p * self
        raise NonFormalSeriesError("series is not nilpotent within its truncation window")

    def invert(self, max_iter=10_000):
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        rest = self.scale(1 / c0) - 1
        out = self.const_like(1)
        sign = -1
        for p in rest._nilpotent_powers(max_iter):
            out = out + p.scale(sign)
            sign = -sign
        return out.scale(1 / c0)

    def exp(self, max_iter=10_000):
        if self.constant_term() != 0:
            raise NonFormalSeriesError("exp of a series with non-zero constant term is not rational")
        out = self.const_like(1)
        term = self.const_like(1)
        for k in range(1, max_iter):
            term = (term * self).scale(Fraction(1, k))
            if term.is_zero():
                return out
            out = out + term
        raise NonFormalSeriesError("series is not nilpotent within its truncation window")

    # variable manipulation

    def restrict(self, caps):
        """Same series on a (usually smaller) window."""
        return MultiSeries(self.vars, caps, self.terms)

    def rewindow(self, vars, caps, exponent_map, coefficient_map=None):
        """Monomial substitution into a new variable set.

        ``exponent_map(e)`` returns the new exponent vector of the monomial
        with old exponents ``e``; ``coefficient_map(e)`` (optional) returns
        a scalar factor for it.  Terms landing outside ``caps`` are dropped.
        """
        out = MultiSeries(vars, caps)
        for e, c in self.terms.items():
            f = coefficient_map(e) if coefficient_map else 1
            out._add_term(tuple(exponent_map(e)), c * f)
        return out

    def negative_exponents(self):
        """Exponent vectors with some negative component."""
        return sorted(e for e in self.terms if any(x < 0 for x in e))

    def first_mismatch(self, other):
        """Smallest exponent vector where the two series differ, or None."""
        self._check(other)
        keys = sorted(set(self.terms) | set(other.terms))
        for e in keys:
            a, b = self.coefficient(e), other.coefficient(e)
            if a != b:
                return e, a, b
        return None

    # serialization

    def to_dict(self):
        return {
            "vars": list(self.vars),
            "caps": {v: [lo, hi] for v, (lo, hi) in zip(self.vars, self.caps)},
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in sorted(self.terms.items())
            ],
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d):
        vars = d["vars"]
        caps = [tuple(d["caps"][v]) for v in vars]
        terms = {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in d["terms"]}
        return cls(vars, caps, terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def csv_rows(self):
        """Header plus one row per exponent vector, lexicographically ordered."""
        rows = [list(self.vars) + ["num", "den"]]
        for e, c in sorted(self.terms.items()):
            rows.append([str(x) for x in e] + [str(c.numerator), str(c.denominator)])
        return rows

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{x}" if x != 1 else v for v, x in zip(self.vars, e) if x)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def monomial_product(*monos):
    """Exact product of ``(coefficient, exponents)`` pairs, no truncation."""
    c = Fraction(1)
    e = None
    for coef, exps in monos:
        c *= coef
        e = tuple(exps) if e is None else tuple(a + b for a, b in zip(e, exps))
    return c, e


def series_mul(s1, s2):
    return s1 * s2


def series_add(s1, s2):
    return s1 + s2


def series_scale(c, s):
    return s.scale(c)


def series_invert(s):
    return s.invert()


@dataclass(frozen=True)
class ParamPoint:
    """Generic rational values of q^{1/2}, t^{1/2} and the framings a_1..a_r."""

    q_half: Fraction
    t_half: Fraction
    framing: tuple = ()
    genericity_bound: int = 12
    seed: object = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q_half", as_fraction(self.q_half))
        object.__setattr__(self, "t_half", as_fraction(self.t_half))
        object.__setattr__(self, "framing", tuple(as_fraction(a) for a in self.framing))
        check_genericity(self)

    @property
    def q(self):
        return self.q_half**2

    @property
    def t(self):
        return self.t_half**2

    @property
    def sqrt_qt(self):
        return self.q_half * self.t_half

    @property
    def hbar(self):
        return self.q * self.t

    @property
    def rank(self):
        return len(self.framing)

    def to_dict(self):
        return {
            "q_half": str(self.q_half),
            "t_half": str(self.t_half),
            "framing": [str(a) for a in self.framing],
            "genericity_bound": self.genericity_bound,
            "seed": self.seed,
        }


def check_genericity(p):
    qh, th, G = p.q_half, p.t_half, p.genericity_bound
    if qh == 0 or th == 0 or abs(qh) == 1 or abs(th) == 1:
        raise GenericityError("q^{1/2} and t^{1/2} must avoid 0 and +-1")
    if any(a == 0 for a in p.framing):
        raise GenericityError("framing parameters must be non-zero")
    # Powers are built incrementally to keep the check cheap for large G.
    qpow = {0: Fraction(1)}
    tpow = {0: Fraction(1)}
    for k in range(1, G + 1):
        qpow[k], qpow[-k] = qpow[k - 1] * qh, qpow[-(k - 1)] / qh
        tpow[k], tpow[-k] = tpow[k - 1] * th, tpow[-(k - 1)] / th
    ratios = [a / b for (k, a), (l, b) in iproduct(enumerate(p.framing), repeat=2) if k != l]
    for i in range(-G, G + 1):
        for j in range(-G, G + 1):
            w = qpow[i] * tpow[j]
            if (i, j) != (0, 0) and w == 1:
                raise GenericityError(f"q^{{{i}/2}} t^{{{j}/2}} = 1")
            for r in ratios:
                if r * w == 1:
                    raise GenericityError(f"a_k/a_l q^{{{i}/2}} t^{{{j}/2}} = 1")


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


def random_param_point(seed, r=1, G=12):
    """Deterministic pseudo-random generic point with small rationals.

    Numerators and denominators are drawn from a small range; points that
    fail the genericity check are redrawn, and after a bounded number of
    failures the range is widened.
    """
    if G < 1:
        raise ValueError("genericity bound must be at least 1")
    rng = random.Random(seed)
    width = 9
    attempts = 0
    while True:
        attempts += 1
        if attempts % 50 == 0:
            width *= 2

        def draw():
            num = rng.randint(1, width) * rng.choice((1, 1, 1, -1))
            den = rng.randint(1, width)
            return Fraction(num, den)

        qh, th = draw(), draw()
        framing = tuple(draw() for _ in range(r))
        if qh == th or qh == -th:
            continue
        try:
            return ParamPoint(qh, th, framing, G, seed=seed)
        except GenericityError:
            continue
