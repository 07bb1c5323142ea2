"""Exact coefficient polynomials in a, alpha, beta, gamma, E.

The deformation parameter ``a`` may carry negative exponents (Laurent);
every other indeterminate is polynomial.  ``E`` is a free commuting symbol
standing in for exp(-2*a*beta).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

VARS = ("a", "alpha", "beta", "gamma", "E")
NVARS = len(VARS)
_ZERO_EXP = (0,) * NVARS


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class CoeffPoly:
    """Sparse exact polynomial ``{exponent vector: Fraction}``.

    Instances are treated as immutable.  Equality is structural because zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != NVARS:
                    raise ValueError(f"exponent vector must have length {NVARS}")
                if any(e < 0 for e in exp[1:]):
                    raise ValueError("only the a-exponent may be negative")
                c = _as_fraction(c)
                if c:
                    clean[tuple(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "CoeffPoly":
        # trusted constructor: keys valid, values nonzero Fractions
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "CoeffPoly":
        c = _as_fraction(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "CoeffPoly":
        exp = [0] * NVARS
        exp[VARS.index(name)] = power
        return cls({tuple(exp): 1})

    @classmethod
    def a_power(cls, k: int, c=1) -> "CoeffPoly":
        c = _as_fraction(c)
        return cls._raw({(k, 0, 0, 0, 0): c} if c else {})

    @classmethod
    def coerce(cls, x) -> "CoeffPoly":
        if isinstance(x, CoeffPoly):
            return x
        return cls.const(x)

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return self._terms

    def items(self):
        """Terms in canonical (lexicographic, descending) order."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def a_degree(self) -> int | None:
        """Largest power of a present, or None for zero."""
        if not self._terms:
            return None
        return max(e[0] for e in self._terms)

    def a_valuation(self) -> int | None:
        if not self._terms:
            return None
        return min(e[0] for e in self._terms)

    def degree_in(self, name: str) -> int:
        i = VARS.index(name)
        return max((e[i] for e in self._terms), default=0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, CoeffPoly):
            other = CoeffPoly.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return CoeffPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-CoeffPoly.coerce(other))

    def __rsub__(self, other):
        return CoeffPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, CoeffPoly):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return ZERO
            return CoeffPoly._raw({e: v * c for e, v in self._terms.items()})
        if not self._terms or not other._terms:
            return ZERO
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return CoeffPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of CoeffPoly by zero")
        return CoeffPoly._raw({e: v / c for e, v in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift_a(self, k: int) -> "CoeffPoly":
        """Multiply by a**k (k may be negative)."""
        return CoeffPoly._raw({(e[0] + k,) + e[1:]: c for e, c in self._terms.items()})

    def truncate_a(self, K: int | None) -> "CoeffPoly":
        """Drop every term of a-degree greater than K (None means no truncation)."""
        if K is None:
            return self
        if all(e[0] <= K for e in self._terms):
            return self
        return CoeffPoly._raw({e: c for e, c in self._terms.items() if e[0] <= K})

    def a_coefficient(self, k: int) -> "CoeffPoly":
        """Coefficient of a**k, as a polynomial free of a."""
        return CoeffPoly._raw({(0,) + e[1:]: c for e, c in self._terms.items() if e[0] == k})

    def subs(self, name: str, value) -> "CoeffPoly":
        """Substitute a rational value (or a CoeffPoly) for one indeterminate."""
        i = VARS.index(name)
        value = CoeffPoly.coerce(value)
        out = ZERO
        powers = {}
        for e, c in self._terms.items():
            k = e[i]
            if k < 0:
                if not (value.is_constant() and value.constant_value()):
                    raise ZeroDivisionError(f"cannot substitute into negative power of {name}")
                vk = CoeffPoly.const(value.constant_value() ** k)
            else:
                if k not in powers:
                    powers[k] = value ** k
                vk = powers[k]
            rest = list(e)
            rest[i] = 0
            out = out + CoeffPoly._raw({tuple(rest): c}) * vk
        return out

    def derivative(self, name: str) -> "CoeffPoly":
        i = VARS.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return CoeffPoly._raw(out)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CoeffPoly):
            return self._terms == other._terms
        try:
            return self._terms == CoeffPoly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self):
        return format_coeff(self)

    def __repr__(self):
        return f"CoeffPoly({format_coeff(self)!r})"


def _monomial_text(exp, unicode=False) -> str:
    names = VARS if not unicode else ("a", "α", "β", "γ", "E")
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_coeff(p: CoeffPoly, unicode: bool = False) -> str:
    """Canonical text: terms in descending lexicographic exponent order."""
    items = p.items()
    if not items:
        return "0"
    out = []
    for i, (exp, c) in enumerate(items):
        mono = _monomial_text(exp, unicode)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


ZERO = CoeffPoly._raw({})
ONE = CoeffPoly._raw({_ZERO_EXP: Fraction(1)})
A = CoeffPoly.var("a")
