"""Hopf algebra presentations and axiom checkers.

Structure maps live on generators only.  The coproduct and counit are
extended multiplicatively and the antipode anti-multiplicatively over the
normal-ordered monomials.
"""

from __future__ import annotations

import json

from .coeff import ONE, ZERO, CoeffPoly, format_coeff
from .ncpoly import (
    Algebra,
    NCElement,
    SeriesRule,
    _add_into,
    TensorElement,
    format_element,
    format_mono,
    mono_word,
    monomials_up_to,
    tensor_mul,
)
from .report import Report


class MissingStructureMap(KeyError):
    pass


class Presentation(Algebra):
    """An :class:`Algebra` carrying coproduct, counit and antipode on generators.

    ``coproduct``/``antipode`` values may be TensorElements/NCElements of any
    algebra with the same generators, or plain term dicts; they are re-homed
    onto this presentation.
    """

    def __init__(self, name, generators, rules, a_truncation=None,
                 coproduct=None, counit=None, antipode=None):
        super().__init__(name, generators, rules, a_truncation)
        self.coproduct_on_gens = {}
        self.counit_on_gens = {}
        self.antipode_on_gens = {}
        for g, val in (coproduct or {}).items():
            terms = val.term_dict if isinstance(val, TensorElement) else val
            self.coproduct_on_gens[g] = TensorElement(self, 2, terms)
        for g, val in (counit or {}).items():
            self.counit_on_gens[g] = CoeffPoly.coerce(val).truncate_a(a_truncation)
        for g, val in (antipode or {}).items():
            terms = val.term_dict if isinstance(val, NCElement) else val
            self.antipode_on_gens[g] = NCElement(self, terms)
        self._delta_cache = {}
        self._eps_cache = {}
        self._s_cache = {}

    def has_structure(self) -> bool:
        return all(
            g in self.coproduct_on_gens and g in self.counit_on_gens and g in self.antipode_on_gens
            for g in self.generators
        )

    def replace(self, name=None, a_truncation="keep", coproduct=None, counit=None, antipode=None):
        """Copy with some structure maps overridden (used for defect injection)."""
        cop = {g: t.term_dict for g, t in self.coproduct_on_gens.items()}
        cop.update({g: (v.term_dict if isinstance(v, TensorElement) else v) for g, v in (coproduct or {}).items()})
        eps = dict(self.counit_on_gens)
        eps.update(counit or {})
        ant = {g: e.term_dict for g, e in self.antipode_on_gens.items()}
        ant.update({g: (v.term_dict if isinstance(v, NCElement) else v) for g, v in (antipode or {}).items()})
        K = self.a_truncation if a_truncation == "keep" else a_truncation
        return Presentation(name or self.name, self.generators, self.raw_rules, K, cop, eps, ant)

    def element(self, other: NCElement) -> NCElement:
        """Re-home an element of a compatible algebra onto this presentation."""
        return NCElement(self, other.term_dict)

    # -- generator lookups ------------------------------------------------
    def _need(self, table, g, what):
        try:
            return table[g]
        except KeyError:
            raise MissingStructureMap(f"{self.name}: no {what} stored for generator {g}") from None

    def coproduct_gen(self, i: int) -> TensorElement:
        return self._need(self.coproduct_on_gens, self.generators[i], "coproduct")

    def counit_gen(self, i: int) -> CoeffPoly:
        return self._need(self.counit_on_gens, self.generators[i], "counit")

    def antipode_gen(self, i: int) -> NCElement:
        return self._need(self.antipode_on_gens, self.generators[i], "antipode")

    # -- monomial extensions (cached) ----------------------------------
    def coproduct_mono(self, mono) -> TensorElement:
        hit = self._delta_cache.get(mono)
        if hit is not None:
            return hit
        word = mono_word(mono)
        if not word:
            out = TensorElement._raw(self, 2, {(self.unit_monomial, self.unit_monomial): ONE})
        else:
            prefix = list(mono)
            prefix[word[-1]] -= 1
            out = tensor_mul(self.coproduct_mono(tuple(prefix)), self.coproduct_gen(word[-1]))
        self._delta_cache[mono] = out
        return out

    def counit_mono(self, mono) -> CoeffPoly:
        hit = self._eps_cache.get(mono)
        if hit is not None:
            return hit
        out = ONE
        for i, e in enumerate(mono):
            if e:
                out = (out * self.counit_gen(i) ** e).truncate_a(self.a_truncation)
        self._eps_cache[mono] = out
        return out

    def antipode_mono(self, mono) -> NCElement:
        hit = self._s_cache.get(mono)
        if hit is not None:
            return hit
        word = mono_word(mono)
        if not word:
            out = self.one()
        else:
            prefix = list(mono)
            prefix[word[-1]] -= 1
            # S(u g) = S(g) S(u)
            out = self.antipode_gen(word[-1]) * self.antipode_mono(tuple(prefix))
        self._s_cache[mono] = out
        return out


# -- structure maps on elements -----------------------------------------------

def coproduct(e: NCElement) -> TensorElement:
    """Multiplicative extension of the generator coproducts."""
    pres = e.alg
    out = TensorElement._raw(pres, 2, {})
    for m, c in e.term_dict.items():
        out = out + pres.coproduct_mono(m).scale(c)
    return out


def counit(e: NCElement) -> CoeffPoly:
    pres = e.alg
    out = ZERO
    for m, c in e.term_dict.items():
        out = out + c * pres.counit_mono(m)
    return out.truncate_a(pres.a_truncation)


def antipode(e: NCElement) -> NCElement:
    """Anti-multiplicative extension ``S(uw) = S(w) S(u)``."""
    pres = e.alg
    out = pres.zero()
    for m, c in e.term_dict.items():
        out = out + pres.antipode_mono(m).scale(c)
    return out


def _slot_map(t: TensorElement, slot: int, fn, rank_out: int) -> TensorElement:
    """Apply an element-valued map to one slot of a tensor."""
    pres = t.alg
    out = {}
    for ms, c in t.term_dict.items():
        image = fn(ms[slot])
        if not isinstance(image, TensorElement):
            raise TypeError("slot map must return a TensorElement")
        for ims, ic in image.term_dict.items():
            _add_into(out, ms[:slot] + ims + ms[slot + 1:], pres._trunc(c * ic))
    return TensorElement._raw(pres, rank_out, out)


def delta_tensor_left(t: TensorElement) -> TensorElement:
    """(Delta (x) id) on a rank-2 tensor."""
    return _slot_map(t, 0, t.alg.coproduct_mono, 3)


def delta_tensor_right(t: TensorElement) -> TensorElement:
    """(id (x) Delta) on a rank-2 tensor."""
    return _slot_map(t, 1, t.alg.coproduct_mono, 3)


def counit_slot(t: TensorElement, slot: int) -> NCElement:
    """Apply the counit to one slot of a rank-2 tensor."""
    pres = t.alg
    out = {}
    for (m1, m2), c in t.term_dict.items():
        eps = pres.counit_mono(m1 if slot == 0 else m2)
        keep = m2 if slot == 0 else m1
        out[keep] = out.get(keep, ZERO) + c * eps
    return NCElement(pres, out)


def multiply(t: TensorElement, left_map=None, right_map=None) -> NCElement:
    """m o (f (x) g) on a rank-2 tensor; maps act on monomials."""
    pres = t.alg
    out = pres.zero()
    for (m1, m2), c in t.term_dict.items():
        a = left_map(m1) if left_map else pres.monomial(m1)
        b = right_map(m2) if right_map else pres.monomial(m2)
        out = out + (a * b).scale(c)
    return out


def _mono_text(pres, m):
    return format_mono(pres.generators, m) or "1"


def check_relations(pres: Presentation) -> Report:
    """Structure maps respect every reordering rule (up to the truncation order)."""
    rep = Report(f"{pres.name}: structure maps respect relations")
    n = pres.ngens
    for j in range(n):
        for i in range(j):
            gj, gi = pres.gen_mono(j), pres.gen_mono(i)
            target = NCElement(pres, pres.rule(j, i))
            label = f"{pres.generators[j]}*{pres.generators[i]}"
            lhs = tensor_mul(pres.coproduct_gen(j), pres.coproduct_gen(i))
            rhs = coproduct(target)
            rep.add("coproduct respects relation", label, lhs == rhs, lhs, rhs)
            lhs = (pres.counit_gen(j) * pres.counit_gen(i)).truncate_a(pres.a_truncation)
            rhs = counit(target)
            rep.add("counit respects relation", label, lhs == rhs, format_coeff(lhs), format_coeff(rhs))
            lhs = pres.antipode_gen(i) * pres.antipode_gen(j)
            rhs = antipode(target)
            rep.add("antipode respects relation", label, lhs == rhs, lhs, rhs)
    return rep


def check_hopf_axioms(pres: Presentation, max_degree: int, monomials=None) -> Report:
    """Coassociativity, both counit laws and both antipode laws on PBW monomials."""
    K = pres.a_truncation
    title = f"{pres.name}: Hopf axioms, degree <= {max_degree}"
    if K is not None:
        title += f", mod a^{K + 1}"
    rep = Report(title)
    if monomials is None:
        monomials = monomials_up_to(pres.ngens, max_degree)
    for m in monomials:
        label = _mono_text(pres, m)
        b = pres.monomial(m)
        d = pres.coproduct_mono(m)
        lhs, rhs = delta_tensor_left(d), delta_tensor_right(d)
        rep.add("coassociativity", label, lhs == rhs, lhs, rhs)
        lhs = counit_slot(d, 0)
        rep.add("counit left (eps(x)id)Delta = id", label, lhs == b, lhs, b)
        lhs = counit_slot(d, 1)
        rep.add("counit right (id(x)eps)Delta = id", label, lhs == b, lhs, b)
        unit_eps = pres.one().scale(pres.counit_mono(m))
        lhs = multiply(d, left_map=pres.antipode_mono)
        rep.add("antipode left m(S(x)id)Delta = eta eps", label, lhs == unit_eps, lhs, unit_eps)
        lhs = multiply(d, right_map=pres.antipode_mono)
        rep.add("antipode right m(id(x)S)Delta = eta eps", label, lhs == unit_eps, lhs, unit_eps)
    return rep


def check_cocommutativity(pres: Presentation, max_degree: int, generators=None) -> Report:
    """Is tau o Delta = Delta on every monomial up to ``max_degree``?

    ``generators`` restricts the sweep to monomials in the named generators.
    """
    rep = Report(f"{pres.name}: cocommutativity, degree <= {max_degree}")
    allowed = None
    if generators is not None:
        allowed = {pres.gen_index(g) for g in generators}
    for m in monomials_up_to(pres.ngens, max_degree):
        if allowed is not None and any(e and i not in allowed for i, e in enumerate(m)):
            continue
        d = pres.coproduct_mono(m)
        tw = d.twist()
        rep.add("tau o Delta = Delta", _mono_text(pres, m), tw == d, tw, d)
    return rep


def check_morphisms(pres: Presentation, pairs) -> Report:
    """Delta, eps multiplicative and S anti-multiplicative on element pairs."""
    rep = Report(f"{pres.name}: structure maps are (anti)morphisms")
    for u, w in pairs:
        label = f"({u})*({w})"
        uw = u * w
        lhs, rhs = coproduct(uw), tensor_mul(coproduct(u), coproduct(w))
        rep.add("Delta(uw) = Delta(u)Delta(w)", label, lhs == rhs, lhs, rhs)
        lhs = counit(uw)
        rhs = (counit(u) * counit(w)).truncate_a(pres.a_truncation)
        rep.add("eps(uw) = eps(u)eps(w)", label, lhs == rhs, lhs, rhs)
        lhs, rhs = antipode(uw), antipode(w) * antipode(u)
        rep.add("S(uw) = S(w)S(u)", label, lhs == rhs, lhs, rhs)
    return rep


def check_antipode_consequences(pres: Presentation, max_degree: int) -> Report:
    """eps o S = eps and Delta o S = (S (x) S) o tau o Delta."""
    rep = Report(f"{pres.name}: antipode consequences, degree <= {max_degree}")
    for m in monomials_up_to(pres.ngens, max_degree):
        label = _mono_text(pres, m)
        s = pres.antipode_mono(m)
        lhs, rhs = counit(s), pres.counit_mono(m)
        rep.add("eps o S = eps", label, lhs == rhs, lhs, rhs)
        lhs = coproduct(s)
        rhs = TensorElement._raw(pres, 2, {})
        for (m1, m2), c in pres.coproduct_mono(m).term_dict.items():
            rhs = rhs + TensorElement.pure(pres.antipode_mono(m2), pres.antipode_mono(m1)).scale(c)
        rep.add("Delta o S = (S(x)S) o tau o Delta", label, lhs == rhs, lhs, rhs)
    return rep


# -- serialization --------------------------------------------------------------

def _terms_text(pres, terms: dict) -> str:
    return format_element(NCElement(pres, terms))


def dump_presentation(pres: Presentation) -> str:
    """Structured-text (JSON) document; series rules are written expanded."""
    doc = {
        "name": pres.name,
        "generators": list(pres.generators),
        "a_truncation": pres.a_truncation,
        "rules": {},
        "coproduct": {},
        "counit": {},
        "antipode": {},
    }
    gens = pres.generators
    for j in range(pres.ngens):
        for i in range(j):
            doc["rules"][f"{gens[j]}*{gens[i]}"] = _terms_text(pres, pres.rule(j, i))
    for g in gens:
        if g in pres.coproduct_on_gens:
            doc["coproduct"][g] = [
                [format_coeff(c), _mono_text(pres, m1), _mono_text(pres, m2)]
                for c, (m1, m2) in pres.coproduct_on_gens[g].terms
            ]
        if g in pres.counit_on_gens:
            doc["counit"][g] = format_coeff(pres.counit_on_gens[g])
        if g in pres.antipode_on_gens:
            doc["antipode"][g] = format_element(pres.antipode_on_gens[g])
    return json.dumps(doc, indent=2, ensure_ascii=False)


def load_presentation(text: str) -> Presentation:
    """Inverse of :func:`dump_presentation`."""
    from .parser import parse_coeff, parse_terms

    doc = json.loads(text)
    gens = tuple(doc["generators"])
    K = doc.get("a_truncation")
    rules = {}
    for key, rhs in doc.get("rules", {}).items():
        gj, gi = key.split("*")
        rules[(gens.index(gj), gens.index(gi))] = parse_terms(rhs, gens)
    coproduct_map = {}
    for g, rows in doc.get("coproduct", {}).items():
        terms = {}
        for ctext, left, right in rows:
            m1 = _parse_mono(left, gens)
            m2 = _parse_mono(right, gens)
            terms[(m1, m2)] = terms.get((m1, m2), ZERO) + parse_coeff(ctext)
        coproduct_map[g] = terms
    counit_map = {g: parse_coeff(t) for g, t in doc.get("counit", {}).items()}
    antipode_map = {g: parse_terms(t, gens) for g, t in doc.get("antipode", {}).items()}
    return Presentation(doc["name"], gens, rules, K, coproduct_map, counit_map, antipode_map)


def _parse_mono(text: str, gens) -> tuple:
    m = [0] * len(gens)
    if text.strip() == "1":
        return tuple(m)
    for part in text.split("*"):
        name, _, e = part.partition("^")
        m[gens.index(name.strip())] += int(e) if e else 1
    return tuple(m)


__all__ = [
    "MissingStructureMap",
    "Presentation",
    "SeriesRule",
    "antipode",
    "check_antipode_consequences",
    "check_cocommutativity",
    "check_hopf_axioms",
    "check_morphisms",
    "check_relations",
    "coproduct",
    "counit",
    "dump_presentation",
    "load_presentation",
]
