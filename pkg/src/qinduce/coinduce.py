"""Character-coinduced representations of U_q on truncated series in v.

A character (I, P, H) -> (alpha, beta, gamma) of the abelian subalgebra
coinduces a representation on C[[v]] where I, P, H act by multiplication with
fixed series and N by d/dv.  exp(-2a*beta) is the free symbol E throughout;
it is never evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import ONE, ZERO, CoeffPoly, format_coeff
from .ncpoly import NCElement
from .report import Report


class OrderTooSmall(ValueError):
    pass


class VSeries:
    """Power series c0 + c1 v + ... + cN v^N over CoeffPoly (v^(N+1) and up dropped)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        cs = [CoeffPoly.coerce(c) for c in list(coeffs)[: order + 1]]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def const(cls, c, order: int) -> "VSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c=ONE) -> "VSeries":
        return cls([ZERO] * k + [c], order)

    def __getitem__(self, k: int) -> CoeffPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def _order_with(self, other):
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, VSeries):
            other = VSeries.const(other, self.order)
        n = self._order_with(other)
        return VSeries([self[k] + other[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return VSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if not isinstance(other, VSeries):
            other = VSeries.const(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, VSeries):
            c = CoeffPoly.coerce(other)
            return VSeries([x * c for x in self.coeffs], self.order)
        n = self._order_with(other)
        out = [ZERO] * (n + 1)
        for i, x in enumerate(self.coeffs):
            if i > n or x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if i + j > n:
                    break
                out[i + j] = out[i + j] + x * y
        return VSeries(out, n)

    __rmul__ = __mul__

    def map(self, fn) -> "VSeries":
        return VSeries([fn(c) for c in self.coeffs], self.order)

    def derivative(self) -> "VSeries":
        return VSeries([self[k] * k for k in range(1, len(self.coeffs))], self.order)

    def shift_v(self, k: int = 1) -> "VSeries":
        """Multiply by v**k."""
        return VSeries([ZERO] * k + list(self.coeffs), self.order)

    def truncate(self, order: int) -> "VSeries":
        return VSeries(self.coeffs, min(order, self.order))

    def inv1p(self) -> "VSeries":
        """(1 + s)^(-1) for a series s with zero constant term."""
        if self[0]:
            raise ValueError("inv1p needs a series without constant term")
        out = VSeries.const(ONE, self.order)
        power = VSeries.const(ONE, self.order)
        for n in range(1, self.order + 1):
            power = power * self
            out = out + (power if n % 2 == 0 else -power)
        return out

    def log1p(self) -> "VSeries":
        """ln(1 + s) for a series s with zero constant term."""
        if self[0]:
            raise ValueError("log1p needs a series without constant term")
        out = VSeries([], self.order)
        power = VSeries.const(ONE, self.order)
        for n in range(1, self.order + 1):
            power = power * self
            out = out + power * Fraction((-1) ** (n + 1), n)
        return out

    def min_a_power(self) -> int | None:
        vals = [c.a_valuation() for c in self.coeffs if c]
        return min(vals) if vals else None

    def __eq__(self, other):
        if not isinstance(other, VSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self):
        return format_vseries(self)

    def __repr__(self):
        return f"VSeries({format_vseries(self)!r}, order={self.order})"


def format_vseries(s: VSeries, unicode: bool = False) -> str:
    """``c0 + c1*v + c2*v^2 + ...`` with canonical coefficient text."""
    from .ncpoly import format_term

    parts = []
    for k, c in enumerate(s.coeffs):
        if c.is_zero():
            continue
        vt = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
        parts.append(format_term(c, vt, not parts, unicode))
    return "".join(parts) if parts else "0"


# -- characters ---------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """(I, P, H) -> (alpha, beta, gamma); None means the symbol itself."""

    alpha: Fraction | None = None
    beta: Fraction | None = None
    gamma: Fraction | None = None

    @property
    def mode(self) -> str:
        if None in (self.alpha, self.beta, self.gamma):
            return "symbolic"
        return "numeric"

    def value(self, name: str) -> CoeffPoly:
        v = getattr(self, name)
        return CoeffPoly.var(name) if v is None else CoeffPoly.const(v)

    @property
    def E(self) -> CoeffPoly:
        """exp(-2a*beta): symbolic unless beta = 0 exactly."""
        if self.beta is not None and self.beta == 0:
            return ONE
        return CoeffPoly.var("E")

    def specialize(self, c: CoeffPoly) -> CoeffPoly:
        """Substitute the numeric character values into a symbolic coefficient."""
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if v is not None:
                c = c.subs(name, v)
        if self.beta is not None and self.beta == 0:
            c = c.subs("E", 1)
        return c

    def on_monomial(self, mono) -> CoeffPoly:
        """Value on I^p P^q H^r N^s (zero unless s = 0)."""
        p, q, r, s = mono
        if s:
            raise ValueError("the character is defined on the subalgebra generated by I, P, H")
        return self.value("alpha") ** p * self.value("beta") ** q * self.value("gamma") ** r

    def on_element(self, k: NCElement) -> CoeffPoly:
        out = ZERO
        for m, c in k.term_dict.items():
            out = out + c * self.on_monomial(m)
        return out


# -- the coinduced representation -----------------------------------------------------

def _div_a(s: VSeries, allow_laurent_at=()) -> VSeries:
    """Divide every coefficient by a; the quotient must stay polynomial except at listed v-powers."""
    out = []
    for k, c in enumerate(s.coeffs):
        q = c.shift_a(-1)
        if q and q.a_valuation() < 0 and k not in allow_laurent_at:
            raise ArithmeticError(f"1/a prefactor does not cancel at v^{k}: {c}")
        out.append(q)
    return VSeries(out, s.order)


@dataclass
class CoinducedRep:
    character: Character
    order: int
    i_series: VSeries
    p_series: VSeries
    h_series: VSeries

    def multiplier(self, g: str) -> VSeries:
        return {"I": self.i_series, "P": self.p_series, "H": self.h_series}[g]

    def act(self, g: str, phi: VSeries) -> VSeries:
        """g |- phi for a generator name."""
        phi = phi.truncate(self.order)
        if g == "N":
            return phi.derivative()
        return self.multiplier(g) * phi

    def act_element(self, k: NCElement, phi: VSeries) -> VSeries:
        """Extend to U_q elements multiplicatively (words applied right to left)."""
        from .ncpoly import mono_word

        out = VSeries([], self.order)
        gens = k.alg.generators
        for m, c in k.term_dict.items():
            cur = phi
            for gi in reversed(mono_word(m)):
                cur = self.act(gens[gi], cur)
            out = out + cur * c
        return out


def _u_series(chi: Character, order: int) -> VSeries:
    # u = a * alpha * E * v
    return VSeries([ZERO, CoeffPoly.a_power(1) * chi.value("alpha") * chi.E], order)


def build_coinduced(chi: Character, order: int) -> CoinducedRep:
    """Multiplier series of I, P, H through v^order."""
    if order < 2:
        raise OrderTooSmall(f"truncation order must be at least 2, got {order}")
    alpha = chi.value("alpha")
    u = _u_series(chi, order)
    one = VSeries.const(ONE, order)
    i_series = (one + u) * alpha
    # (1/a) ln(1 + u): term n carries a^(n-1)
    p_series = _div_a(u.log1p()) + chi.value("beta")
    # (1/2a) v (1 - E (1+u)^(-1)); the v^1 coefficient (1-E)/(2a) stays Laurent
    inner = (one - u.inv1p() * chi.E).shift_v(1)
    h_series = _div_a(inner, allow_laurent_at=(1,)) * Fraction(1, 2) + chi.value("gamma")
    return CoinducedRep(chi, order, i_series, p_series, h_series)


def exp_m2aP_series(chi: Character, order: int) -> VSeries:
    """exp(-2aP) |- : E (1 + a alpha E v)^(-2)."""
    inv = _u_series(chi, order).inv1p()
    return inv * inv * chi.E


def _relation_rhs(chi: Character, order: int) -> dict:
    """Right-hand sides of [N|-, g|-] assembled from the U_q relations."""
    e2 = exp_m2aP_series(chi, order)
    one = VSeries.const(ONE, order)
    i_series = (one + _u_series(chi, order)) * chi.value("alpha")
    a = CoeffPoly.a_power(1)
    return {
        # [N, I] = a exp(-2aP) I^2
        "I": e2 * i_series * i_series * a,
        # [N, P] = exp(-2aP) I
        "P": e2 * i_series,
        # [N, H] = (1 - exp(-2aP)) / (2a)
        "H": VSeries([c.shift_a(-1) / 2 for c in (one - e2).coeffs], order),
    }


def check_rep_relations(rep: CoinducedRep) -> Report:
    """Commutator identities of the coinduced operators, exact in the coefficients.

    d/dv loses the top coefficient, so commutators with N are compared
    through v^(order-1).
    """
    n = rep.order
    out = Report(f"coinduced representation relations, order {n}")
    rhs = _relation_rhs(rep.character, n)
    for g in ("I", "P", "H"):
        lhs = rep.multiplier(g).derivative().truncate(n - 1)
        want = rhs[g].truncate(n - 1)
        out.add(f"[N|-, {g}|-] multiplier", f"order {n}", lhs == want, lhs, want)
        for k in range(n + 1):
            phi = VSeries.monomial(k, n)
            comm = (rep.act("N", rep.act(g, phi)) - rep.act(g, rep.act("N", phi))).truncate(n - 1)
            expect = (want * phi).truncate(n - 1)
            out.add(f"[N|-, {g}|-] on basis", f"v^{k}", comm == expect, comm, expect)
    for g1, g2 in (("I", "P"), ("I", "H"), ("P", "H")):
        for k in range(n + 1):
            phi = VSeries.monomial(k, n)
            lhs = rep.act(g1, rep.act(g2, phi))
            rhs2 = rep.act(g2, rep.act(g1, phi))
            out.add(f"[{g1}|-, {g2}|-] = 0", f"v^{k}", lhs == rhs2, lhs - rhs2, 0)
    # Laurent coefficients are only expected in the v^1 term of H and in the
    # constant term of the [N, H] right-hand side.
    for name, series, allowed in (("I", rep.i_series, ()), ("P", rep.p_series, ()), ("H", rep.h_series, (1,)),
                                  ("[N,H] rhs", rhs["H"], (0,))):
        for k, c in enumerate(series.coeffs):
            if c and c.a_valuation() < 0 and k not in allowed:
                out.add("no unexpected negative a-power", f"{name} at v^{k}", False, c, "polynomial in a")
    return out


def character_consistency(rep: CoinducedRep) -> Report:
    """Constant terms of g |- 1 are alpha, beta, gamma and 0."""
    out = Report("coinduced representation: character consistency")
    one = VSeries.const(ONE, rep.order)
    chi = rep.character
    for g, want in (("I", chi.value("alpha")), ("P", chi.value("beta")), ("H", chi.value("gamma")), ("N", ZERO)):
        got = rep.act(g, one)[0]
        out.add("(g |- 1) at v = 0", g, got == want, format_coeff(got), format_coeff(want))
    return out


def classical_limit(rep: CoinducedRep) -> dict:
    """Multipliers at E -> 1, a -> 0 (drop every positive a-power)."""
    def lim(s: VSeries) -> VSeries:
        return s.map(lambda c: c.subs("E", 1).a_coefficient(0))

    return {"I": lim(rep.i_series), "P": lim(rep.p_series), "H": lim(rep.h_series)}


def check_classical_limit(rep: CoinducedRep) -> Report:
    """a -> 0 recovers the extended Galilei character representation.

    Classical multipliers: I -> alpha, P -> beta + alpha v, H -> gamma + alpha v^2 / 2.
    """
    out = Report(f"classical limit of the coinduced representation, order {rep.order}")
    chi = rep.character
    n = rep.order
    alpha, beta, gamma = chi.value("alpha"), chi.value("beta"), chi.value("gamma")
    want = {
        "I": VSeries([alpha], n),
        "P": VSeries([beta, alpha], n),
        "H": VSeries([gamma, ZERO, alpha / 2], n),
    }
    got = classical_limit(rep)
    for g in ("I", "P", "H"):
        out.add("a -> 0 multiplier", g, got[g] == want[g], got[g], want[g])
    phi = VSeries([ONE] * (n + 1), n)
    out.add("a -> 0 N|- = d/dv", "1 + v + ... + v^N", rep.act("N", phi) == phi.derivative(),
            rep.act("N", phi), phi.derivative())
    return out


def check_truncation_coherence(chi: Character, order: int, smaller: int) -> Report:
    out = Report(f"truncation coherence {order} -> {smaller}")
    big, small = build_coinduced(chi, order), build_coinduced(chi, smaller)
    for g in ("I", "P", "H"):
        lhs, rhs = big.multiplier(g).truncate(smaller), small.multiplier(g)
        out.add("truncate(build(N)) = build(N')", g, lhs == rhs, lhs, rhs)
    return out


# -- the equivariance condition ---------------------------------------------------------

def character_action(chi: Character):
    """K-action of a one-dimensional character on 1-vectors: k . v = chi(k) v."""

    def act(k: NCElement, vec):
        return [chi.on_element(k) * x for x in vec]

    act.dimension = 1
    return act


def equivariance_check(f, K_gens, action, probes, a_order: int | None = None) -> Report:
    """<f, kh> = k |> <f, h> with the V-valued pairing <phi (x) v, h> = <phi, h> v.

    ``f`` is a list of ``(F_q element, vector)`` pairs, ``action(k, vector)``
    returns the image vector.
    """
    from .duality import pair

    out = Report("equivariance <f, kh> = k |> <f, h>")
    if not f:
        return out
    dims = {len(vec) for _, vec in f}
    if len(dims) != 1:
        raise ValueError("vector parts of f have different dimensions")
    dim = dims.pop()
    adim = getattr(action, "dimension", None)
    if adim is not None and adim != dim:
        raise ValueError(f"dimension mismatch: f has {dim}-vectors, the action is {adim}-dimensional")

    def pair_v(h):
        vec = [ZERO] * dim
        for phi, v in f:
            c = pair(h, phi)
            vec = [x + c * CoeffPoly.coerce(y) for x, y in zip(vec, v)]
        if a_order is not None:
            vec = [x.truncate_a(a_order) for x in vec]
        return vec

    for k in K_gens:
        for h in probes:
            lhs = pair_v(k * h)
            rhs = [CoeffPoly.coerce(x) for x in action(k, pair_v(h))]
            if a_order is not None:
                rhs = [x.truncate_a(a_order) for x in rhs]
            out.add("<f, kh> = k |> <f, h>", f"k={k}, h={h}", lhs == rhs,
                    "[" + ", ".join(map(str, lhs)) + "]", "[" + ", ".join(map(str, rhs)) + "]")
    return out
