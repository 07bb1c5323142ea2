"""Noncommutative polynomials in PBW normal form.

An :class:`Algebra` is a finite set of ordered generators together with
reordering rules ``g_j * g_i -> (normal form)`` for every ``j > i``.  Elements
are kept as ``{monomial: CoeffPoly}`` where a monomial is a tuple of
exponents in generator order, so every stored element is normal-ordered by
construction.  Products are computed by multiplying normal monomials one
generator at a time, moving the larger generator to the right.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct

from .coeff import ONE, ZERO, CoeffPoly


class TruncationRequired(ValueError):
    """A rule has an infinite a-series but the algebra has no finite a-order."""


class SeriesRule:
    """A reordering rule whose right-hand side is a power series in a.

    ``expand(K)`` must return the normal-ordered target ``{mono: CoeffPoly}``
    exact through a**K.
    """

    def __init__(self, expand, text: str = ""):
        self._expand = expand
        self.text = text

    def expand(self, K: int) -> dict:
        return self._expand(K)

    def __repr__(self):
        return f"SeriesRule({self.text!r})"


def unit_mono(n: int) -> tuple:
    return (0,) * n


def mono_word(mono: tuple) -> tuple:
    """Generator-index word of a normal monomial (``(1,0,2)`` -> ``(0,2,2)``)."""
    word = []
    for i, e in enumerate(mono):
        word.extend([i] * e)
    return tuple(word)


def mono_degree(mono: tuple) -> int:
    return sum(mono)


def monomials_up_to(n: int, max_degree: int) -> list:
    """All exponent vectors of length n with total degree <= max_degree."""
    out = [m for m in _iproduct(range(max_degree + 1), repeat=n) if sum(m) <= max_degree]
    out.sort(key=lambda m: (sum(m), tuple(-e for e in m)))
    return out


def _add_into(acc: dict, mono, coeff: CoeffPoly) -> None:
    if not coeff:
        return
    prev = acc.get(mono)
    if prev is None:
        acc[mono] = coeff
    else:
        s = prev + coeff
        if s:
            acc[mono] = s
        else:
            del acc[mono]


class Algebra:
    """Generators, reordering rules and the a-truncation order of one algebra.

    ``rules`` maps ``(j, i)`` with ``j > i`` to the normal form of
    ``g_j * g_i``, given either as ``{mono: CoeffPoly}`` or as a
    :class:`SeriesRule`.  Pairs absent from ``rules`` commute.
    ``a_truncation`` is a nonnegative int K (work mod a**(K+1)) or None.
    """

    def __init__(self, name: str, generators, rules: dict, a_truncation: int | None = None):
        self.name = name
        self.generators = tuple(generators)
        self.ngens = len(self.generators)
        self.a_truncation = a_truncation
        self.raw_rules = dict(rules)
        n = self.ngens
        self._rules = {}
        for j in range(n):
            for i in range(j):
                rule = rules.get((j, i))
                if rule is None:
                    swapped = [0] * n
                    swapped[i] += 1
                    swapped[j] += 1
                    rule = {tuple(swapped): ONE}
                elif isinstance(rule, SeriesRule):
                    if a_truncation is None:
                        raise TruncationRequired(
                            f"rule {self.generators[j]}*{self.generators[i]} is an infinite "
                            f"a-series; {name} needs a finite a-truncation order"
                        )
                    rule = rule.expand(a_truncation)
                self._rules[(j, i)] = self._trunc_dict(rule)
        self._gen_cache = {}
        self._mono_cache = {}

    # -- basic elements ---------------------------------------------------
    @property
    def unit_monomial(self) -> tuple:
        return unit_mono(self.ngens)

    def gen_index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r} for algebra {self.name}") from None

    def gen_mono(self, i: int) -> tuple:
        m = [0] * self.ngens
        m[i] = 1
        return tuple(m)

    def one(self) -> "NCElement":
        return NCElement(self, {self.unit_monomial: ONE})

    def zero(self) -> "NCElement":
        return NCElement(self, {})

    def gen(self, name: str) -> "NCElement":
        return NCElement(self, {self.gen_mono(self.gen_index(name)): ONE})

    def monomial(self, mono, coeff=ONE) -> "NCElement":
        return NCElement(self, {tuple(mono): CoeffPoly.coerce(coeff)})

    def rule(self, j: int, i: int) -> dict:
        """Expanded normal form of ``g_j * g_i`` (j > i)."""
        return self._rules[(j, i)]

    # -- truncation -------------------------------------------------------
    def _trunc(self, c: CoeffPoly) -> CoeffPoly:
        return c.truncate_a(self.a_truncation)

    def _trunc_dict(self, d: dict) -> dict:
        out = {}
        for m, c in d.items():
            c = self._trunc(CoeffPoly.coerce(c))
            if c:
                out[tuple(m)] = c
        return out

    # -- products ---------------------------------------------------------
    def mul_mono_gen(self, mono: tuple, g: int) -> dict:
        """Normal form of ``mono * g_g``."""
        key = (mono, g)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        top = -1
        for k in range(self.ngens - 1, -1, -1):
            if mono[k]:
                top = k
                break
        if top <= g:
            m = list(mono)
            m[g] += 1
            out = {tuple(m): ONE}
        else:
            # mono = rest * g_top with g_top > g; rewrite g_top * g_g
            rest = list(mono)
            rest[top] -= 1
            rest = tuple(rest)
            out = {}
            for w, c in self._rules[(top, g)].items():
                for m2, c2 in self.mul_mono_mono(rest, w).items():
                    _add_into(out, m2, self._trunc(c * c2))
        self._gen_cache[key] = out
        return out

    def mul_mono_mono(self, m1: tuple, m2: tuple) -> dict:
        """Normal form of ``m1 * m2`` for normal monomials."""
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        cur = {m1: ONE}
        for g in mono_word(m2):
            nxt = {}
            for m, c in cur.items():
                for m3, c3 in self.mul_mono_gen(m, g).items():
                    _add_into(nxt, m3, self._trunc(c * c3))
            cur = nxt
        self._mono_cache[key] = cur
        return cur

    def mul_terms(self, t1: dict, t2: dict) -> dict:
        out = {}
        for m1, c1 in t1.items():
            for m2, c2 in t2.items():
                c12 = c1 * c2
                for m, c in self.mul_mono_mono(m1, m2).items():
                    _add_into(out, m, self._trunc(c12 * c))
        return out

    def __repr__(self):
        return f"Algebra({self.name!r}, {self.generators}, a_truncation={self.a_truncation})"


class NCElement:
    """A normal-ordered element of an :class:`Algebra`."""

    __slots__ = ("alg", "_terms", "_hash")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        clean = {}
        for m, c in terms.items():
            c = CoeffPoly.coerce(c).truncate_a(alg.a_truncation)
            if c:
                clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, alg, terms):
        obj = cls.__new__(cls)
        obj.alg = alg
        obj._terms = terms
        obj._hash = None
        return obj

    # alias used by the rest of the package
    @property
    def pres(self):
        return self.alg

    @property
    def terms(self) -> list:
        """``[(coeff, mono), ...]`` in canonical order (degree, then mono, descending)."""
        return [(self._terms[m], m) for m in sorted(self._terms, key=lambda m: (sum(m), m), reverse=True)]

    @property
    def term_dict(self) -> dict:
        return self._terms

    def coefficient(self, mono) -> CoeffPoly:
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def a_degree(self) -> int | None:
        degs = [c.a_degree() for c in self._terms.values()]
        return max(degs) if degs else None

    def a_valuation(self) -> int | None:
        vals = [c.a_valuation() for c in self._terms.values()]
        return min(vals) if vals else None

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError(f"elements belong to different algebras ({self.alg.name}, {other.alg.name})")

    def _coerce(self, other):
        if isinstance(other, NCElement):
            self._check(other)
            return other
        return NCElement(self.alg, {self.alg.unit_monomial: CoeffPoly.coerce(other)})

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            _add_into(out, m, c)
        return NCElement._raw(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return NCElement._raw(self.alg, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NCElement":
        c = CoeffPoly.coerce(c)
        return NCElement(self.alg, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCElement):
            self._check(other)
            return NCElement._raw(self.alg, self.alg.mul_terms(self._terms, other._terms))
        if isinstance(other, (CoeffPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CoeffPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def map_coeffs(self, fn) -> "NCElement":
        return NCElement(self.alg, {m: fn(c) for m, c in self._terms.items()})

    def truncate_a(self, K: int | None) -> "NCElement":
        return truncate_a(self, K)

    def __eq__(self, other):
        if isinstance(other, NCElement):
            return self.alg is other.alg and self._terms == other._terms
        if isinstance(other, (int, Fraction, CoeffPoly)):
            return self._terms == self._coerce(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alg.name, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.alg.name}: {format_element(self)}>"


def format_mono(gens, mono, sep="*") -> str:
    parts = []
    for name, e in zip(gens, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return sep.join(parts)


def format_term(coeff: CoeffPoly, mono_text: str, first: bool, unicode: bool = False) -> str:
    from .coeff import format_coeff

    items = coeff.items()
    if len(items) == 1:
        exp, c = items[0]
        sign = "-" if c < 0 else "+"
        mag = CoeffPoly._raw({exp: abs(c)})
        ctext = format_coeff(mag, unicode)
        if not mono_text:
            body = ctext
        elif ctext == "1":
            body = mono_text
        else:
            body = f"{ctext}*{mono_text}"
    else:
        sign = "+"
        ctext = format_coeff(coeff, unicode)
        body = f"({ctext})" + (f"*{mono_text}" if mono_text else "")
    if first:
        return ("-" if sign == "-" else "") + body
    return f" {sign} {body}"


def format_element(e: NCElement, unicode: bool = False) -> str:
    """Canonical text form, e.g. ``x*v - 2*a*v``."""
    gens = e.alg.generators
    if unicode:
        gens = tuple({"mu": "μ"}.get(g, g) for g in gens)
    terms = e.terms
    if not terms:
        return "0"
    return "".join(format_term(c, format_mono(gens, m), i == 0, unicode) for i, (c, m) in enumerate(terms))


def normalize(raw, alg: Algebra) -> NCElement:
    """Normal-order a list of ``(coefficient, generator-index word)`` pairs."""
    out = {}
    for coeff, word in raw:
        coeff = CoeffPoly.coerce(coeff)
        cur = {alg.unit_monomial: ONE}
        for g in word:
            if not 0 <= g < alg.ngens:
                raise IndexError(f"generator index {g} out of range for {alg.name}")
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in alg.mul_mono_gen(m, g).items():
                    _add_into(nxt, m2, alg._trunc(c * c2))
            cur = nxt
        for m, c in cur.items():
            _add_into(out, m, alg._trunc(coeff * c))
    return NCElement._raw(alg, out)


def rewrite_normalize(raw, alg: Algebra, strategy: str = "leftmost", max_steps: int = 10**6):
    """Word-rewriting normal form with an explicit redex strategy.

    Independent of the cached product path; returns ``(element, steps)``.
    ``strategy`` is ``"leftmost"`` or ``"rightmost"`` (choice of the
    out-of-order adjacent pair to rewrite first).
    """
    words = {}
    for coeff, word in raw:
        _add_into(words, tuple(word), CoeffPoly.coerce(coeff))
    done = {}
    steps = 0
    while words:
        word, coeff = words.popitem()
        pos = None
        rng = range(len(word) - 1)
        if strategy == "rightmost":
            rng = reversed(rng)
        for k in rng:
            if word[k] > word[k + 1]:
                pos = k
                break
        if pos is None:
            m = [0] * alg.ngens
            for g in word:
                m[g] += 1
            _add_into(done, tuple(m), coeff)
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewriting did not terminate within the step bound")
        j, i = word[pos], word[pos + 1]
        for w, c in alg.rule(j, i).items():
            new = word[:pos] + mono_word(w) + word[pos + 2:]
            _add_into(words, new, alg._trunc(coeff * c))
    return NCElement._raw(alg, done), steps


def truncate_a(e: NCElement, K: int | None) -> NCElement:
    """Drop every coefficient term of a-degree greater than K."""
    if K is None:
        return e
    return NCElement(e.alg, {m: c.truncate_a(K) for m, c in e.term_dict.items()})


class TensorElement:
    """An element of A (x) A or A (x) A (x) A with each slot normal-ordered."""

    __slots__ = ("alg", "rank", "_terms")

    def __init__(self, alg: Algebra, rank: int, terms: dict):
        if rank not in (2, 3):
            raise ValueError("tensor rank must be 2 or 3")
        self.alg = alg
        self.rank = rank
        clean = {}
        for ms, c in terms.items():
            if len(ms) != rank:
                raise ValueError("monomial tuple length must equal the rank")
            c = CoeffPoly.coerce(c).truncate_a(alg.a_truncation)
            if c:
                clean[tuple(tuple(m) for m in ms)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, alg, rank, terms):
        obj = cls.__new__(cls)
        obj.alg = alg
        obj.rank = rank
        obj._terms = terms
        return obj

    @classmethod
    def pure(cls, *elements: NCElement) -> "TensorElement":
        """Tensor product of plain elements ``e1 (x) e2 [(x) e3]``."""
        alg = elements[0].alg
        out = {}
        for combo in _iproduct(*(list(e.term_dict.items()) for e in elements)):
            c = ONE
            for _, ci in combo:
                c = c * ci
            _add_into(out, tuple(m for m, _ in combo), alg._trunc(c))
        return cls._raw(alg, len(elements), out)

    @property
    def terms(self) -> list:
        keys = sorted(self._terms, key=lambda ms: (tuple(sum(m) for m in ms), ms), reverse=True)
        return [(self._terms[k], k) for k in keys]

    @property
    def term_dict(self) -> dict:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monos) -> CoeffPoly:
        return self._terms.get(tuple(tuple(m) for m in monos), ZERO)

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError("expected a TensorElement")
        if other.rank != self.rank:
            raise ValueError(f"tensor rank mismatch: {self.rank} vs {other.rank}")
        if other.alg is not self.alg:
            raise ValueError("tensor elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(out, k, c)
        return TensorElement._raw(self.alg, self.rank, out)

    def __neg__(self):
        return TensorElement._raw(self.alg, self.rank, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = CoeffPoly.coerce(c)
        return TensorElement(self.alg, self.rank, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        if isinstance(other, (CoeffPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CoeffPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def twist(self) -> "TensorElement":
        """The flip ``a (x) b -> b (x) a`` (rank 2 only)."""
        if self.rank != 2:
            raise ValueError("twist is defined on rank-2 tensors")
        return TensorElement._raw(self.alg, 2, {(m2, m1): c for (m1, m2), c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.alg is other.alg and self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def __str__(self):
        return format_tensor(self)

    def __repr__(self):
        return f"<{self.alg.name}^(x){self.rank}: {format_tensor(self)}>"


def format_tensor(t: TensorElement, unicode: bool = False) -> str:
    gens = t.alg.generators
    if unicode:
        gens = tuple({"mu": "μ"}.get(g, g) for g in gens)
    sep = " ⊗ " if unicode else " (x) "
    terms = t.terms
    if not terms:
        return "0"
    out = []
    for i, (c, ms) in enumerate(terms):
        mono_text = sep.join(format_mono(gens, m) or "1" for m in ms)
        if len(c.items()) > 1:
            mono_text = f"({mono_text})"
        out.append(format_term(c, mono_text, i == 0, unicode))
    return "".join(out)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Slotwise product ``(a (x) b)(c (x) d) = ac (x) bd``, each slot normal-ordered."""
    s._check(t)
    alg = s.alg
    out = {}
    for ms, cs in s._terms.items():
        for mt, ct in t._terms.items():
            c0 = cs * ct
            slot_products = [alg.mul_mono_mono(a, b) for a, b in zip(ms, mt)]
            for combo in _iproduct(*(list(p.items()) for p in slot_products)):
                c = c0
                for _, ci in combo:
                    c = c * ci
                _add_into(out, tuple(m for m, _ in combo), alg._trunc(c))
    return TensorElement._raw(alg, s.rank, out)
