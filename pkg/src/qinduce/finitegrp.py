"""Finite groups: induction, invariant integrals, unitarity and co-spaces.

All scalars are exact Gaussian rationals p + q*i.  Group elements are the
indices 0..n-1 of a multiplication table; ``table[g][h]`` is the index of g*h.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _iproduct

from .report import Report


# -- Gaussian rationals ------------------------------------------------------------

class GQ:
    """Exact Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def of(x) -> "GQ":
        if isinstance(x, GQ):
            return x
        if isinstance(x, complex):
            return GQ(Fraction(x.real), Fraction(x.imag))
        return GQ(x)

    def __add__(self, o):
        o = GQ.of(o)
        return GQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GQ.of(o))

    def __rsub__(self, o):
        return GQ.of(o) - self

    def __mul__(self, o):
        o = GQ.of(o)
        return GQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "GQ":
        return GQ(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = GQ.of(o)
        n = o.norm2()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conj()
        return GQ(num.re / n, num.im / n)

    def __rtruediv__(self, o):
        return GQ.of(o) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        try:
            o = GQ.of(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i" if self.im not in (1, -1) else ("i" if self.im == 1 else "-i")
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"{self.re}{sign}{'' if mag == 1 else mag}i"

    __repr__ = __str__


ZERO = GQ(0)
ONE = GQ(1)
I_UNIT = GQ(0, 1)
ROOTS_OF_UNITY = (GQ(1), GQ(-1), GQ(0, 1), GQ(0, -1))


# -- exact matrices ---------------------------------------------------------------

def mat_identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum((A[i][t] * B[t][j] for t in range(k)), ZERO) for j in range(m)] for i in range(n)]


def mat_vec(A, x):
    return [sum((A[i][t] * x[t] for t in range(len(x))), ZERO) for i in range(len(A))]


def mat_transpose(A):
    return [list(row) for row in zip(*A)] if A else []


def trace(A) -> GQ:
    return sum((A[i][i] for i in range(len(A))), ZERO)


def rref(A):
    """Reduced row echelon form; returns (R, pivot columns)."""
    R = [[GQ.of(x) for x in row] for row in A]
    rows = len(R)
    cols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = ONE / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def nullspace(A, ncols: int | None = None):
    """Basis of {x : A x = 0}; each vector has a 1 at one free column, 0 at the others."""
    if not A:
        n = ncols or 0
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    R, pivots = rref(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        x = [ZERO] * n
        x[fcol] = ONE
        for row, pc in enumerate(pivots):
            x[pc] = -R[row][fcol]
        basis.append(x)
    return basis


# -- groups ----------------------------------------------------------------------------

class GroupError(ValueError):
    pass


class FiniteGroup:
    """Finite group from a multiplication table (validated on construction)."""

    def __init__(self, table, name: str = "G", labels=None):
        self.table = [list(row) for row in table]
        self.order = n = len(self.table)
        self.name = name
        if any(len(row) != n for row in self.table):
            raise GroupError("multiplication table must be square")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise GroupError("table entries out of range")
        ids = [e for e in range(n) if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n))]
        if len(ids) != 1:
            raise GroupError("no unique identity element")
        self.identity = ids[0]
        self.inverse = []
        for g in range(n):
            inv = [h for h in range(n) if self.table[g][h] == self.identity]
            if len(inv) != 1 or self.table[inv[0]][g] != self.identity:
                raise GroupError(f"element {g} has no two-sided inverse")
            self.inverse.append(inv[0])
        for a, b, c in _iproduct(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise GroupError(f"associativity fails at ({a}, {b}, {c})")
        self.labels = list(labels) if labels else [str(g) for g in range(n)]
        self.realization = None

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def elements(self):
        return range(self.order)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def closure(self, gens) -> frozenset:
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    def is_subgroup(self, K) -> bool:
        K = set(K)
        return self.identity in K and all(self.mul(a, self.inverse[b]) in K for a in K for b in K)

    def subgroups(self) -> list:
        """All subgroups generated by at most two elements (all of them for the built-ins)."""
        seen = set()
        for g, h in _iproduct(range(self.order), repeat=2):
            seen.add(self.closure([g, h]))
        return sorted(seen, key=lambda s: (len(s), sorted(s)))

    def conjugacy_classes(self) -> list:
        left = set(range(self.order))
        out = []
        while left:
            g = min(left)
            cls = {self.mul(self.mul(x, g), self.inverse[x]) for x in range(self.order)}
            out.append(sorted(cls))
            left -= cls
        return out

    def right_cosets(self, K) -> list:
        """Right cosets Kg, each sorted, ordered by their smallest element."""
        K = sorted(K)
        seen, out = set(), []
        for g in range(self.order):
            if g in seen:
                continue
            coset = sorted({self.mul(k, g) for k in K})
            seen.update(coset)
            out.append(coset)
        return out

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _matrix_key(M):
    return tuple(tuple((x.re, x.im) for x in row) for row in M)


def matrix_group(generators, name: str) -> FiniteGroup:
    """Group generated by Gaussian-integer matrices; keeps the defining representation."""
    gens = [[[GQ.of(x) for x in row] for row in M] for M in generators]
    d = len(gens[0])
    elems = [mat_identity(d)]
    index = {_matrix_key(elems[0]): 0}
    k = 0
    while k < len(elems):
        for g in gens:
            y = mat_mul(elems[k], g)
            key = _matrix_key(y)
            if key not in index:
                index[key] = len(elems)
                elems.append(y)
        k += 1
    table = [[index[_matrix_key(mat_mul(a, b))] for b in elems] for a in elems]
    G = FiniteGroup(table, name)
    G.realization = FiniteRep(G, d, {g: elems[g] for g in range(G.order)}, check=False)
    return G


def cyclic(n: int) -> FiniteGroup:
    if not 1 <= n <= 12:
        raise GroupError("built-in cyclic groups have order 1..12")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], f"Z{n}")


def symmetric3() -> FiniteGroup:
    # faithful 2-dim integer representation: 3-cycle and a transposition
    return matrix_group([[[0, -1], [1, -1]], [[0, 1], [1, 0]]], "S3")


def dihedral4() -> FiniteGroup:
    return matrix_group([[[0, -1], [1, 0]], [[1, 0], [0, -1]]], "D4")


def quaternion() -> FiniteGroup:
    return matrix_group([[[GQ(0, 1), 0], [0, GQ(0, -1)]], [[0, 1], [-1, 0]]], "Q8")


def builtin_group(name: str) -> FiniteGroup:
    name = name.strip()
    if name.upper().startswith("Z") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    table = {"S3": symmetric3, "D4": dihedral4, "Q8": quaternion}
    try:
        return table[name.upper()]()
    except KeyError:
        raise GroupError(f"unknown built-in group {name!r} (use Zn, S3, D4, Q8)") from None


def load_group_file(text: str, name: str = "G") -> FiniteGroup:
    """First line n, then n rows of n 1-based indices (row g, column h is g*h)."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    try:
        n = int(lines[0][0])
        rows = [[int(x) - 1 for x in ln] for ln in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise GroupError(f"malformed group file: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise GroupError(f"group file must contain {n} rows of {n} entries")
    return FiniteGroup(rows, name)


def dump_group_file(G: FiniteGroup) -> str:
    lines = [str(G.order)] + [" ".join(str(x + 1) for x in row) for row in G.table]
    return "\n".join(lines) + "\n"


# -- group algebra -----------------------------------------------------------------

@dataclass
class GroupAlgebraElement:
    """Formal combination sum c_g g in K[G]."""

    group: FiniteGroup
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {g: GQ.of(c) for g, c in self.coeffs.items() if GQ.of(c)}

    @classmethod
    def basis(cls, G, g):
        return cls(G, {g: ONE})

    def __add__(self, o):
        out = dict(self.coeffs)
        for g, c in o.coeffs.items():
            out[g] = out.get(g, ZERO) + c
        return GroupAlgebraElement(self.group, out)

    def scale(self, c):
        return GroupAlgebraElement(self.group, {g: v * c for g, v in self.coeffs.items()})

    def __mul__(self, o):
        out = {}
        for g, c in self.coeffs.items():
            for h, d in o.coeffs.items():
                k = self.group.mul(g, h)
                out[k] = out.get(k, ZERO) + c * d
        return GroupAlgebraElement(self.group, out)

    def antipode(self):
        inv = self.group.inverse
        return GroupAlgebraElement(self.group, {inv[g]: c for g, c in self.coeffs.items()})

    def star(self, involutive=True):
        """Antilinear star g* = g^(-1); ``involutive=False`` injects the defect g* = g."""
        inv = self.group.inverse
        return GroupAlgebraElement(
            self.group, {(inv[g] if involutive else g): c.conj() for g, c in self.coeffs.items()}
        )

    def counit(self) -> GQ:
        return sum(self.coeffs.values(), ZERO)

    def __eq__(self, o):
        return isinstance(o, GroupAlgebraElement) and self.coeffs == o.coeffs


# -- representations ---------------------------------------------------------------

class FiniteRep:
    """Matrix representation ``{element: d x d matrix}`` of a group or subgroup."""

    def __init__(self, group: FiniteGroup, dim: int, matrices: dict, check: bool = True):
        self.group = group
        self.dim = dim
        self.matrices = {g: [[GQ.of(x) for x in row] for row in M] for g, M in matrices.items()}
        if check:
            problem = self.homomorphism_defect()
            if problem:
                raise GroupError(problem)

    @property
    def domain(self):
        return sorted(self.matrices)

    def homomorphism_defect(self) -> str | None:
        G = self.group
        dom = set(self.matrices)
        if G.identity not in dom:
            return "representation undefined on the identity"
        if self.matrices[G.identity] != mat_identity(self.dim):
            return "rho(e) is not the identity"
        for g in dom:
            for h in dom:
                gh = G.mul(g, h)
                if gh not in dom:
                    return "domain is not closed under multiplication"
                if mat_mul(self.matrices[g], self.matrices[h]) != self.matrices[gh]:
                    return f"rho({g}*{h}) != rho({g}) rho({h})"
        return None

    def character(self) -> dict:
        return {g: trace(M) for g, M in self.matrices.items()}

    def __call__(self, g):
        return self.matrices[g]


def trivial_rep(G: FiniteGroup, K=None) -> FiniteRep:
    dom = sorted(K) if K is not None else list(G.elements())
    return FiniteRep(G, 1, {g: [[ONE]] for g in dom})


def one_dim_characters(G: FiniteGroup, K=None) -> list:
    """All homomorphisms K -> {1, -1, i, -i}, as dicts element -> GQ."""
    K = sorted(K) if K is not None else list(G.elements())
    # pick a small generating set
    gens = []
    span = frozenset([G.identity])
    for g in K:
        if g not in span:
            gens.append(g)
            span = G.closure(gens)
    out = []
    for values in _iproduct(ROOTS_OF_UNITY, repeat=len(gens)):
        chi = {G.identity: ONE}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, val in zip(gens, values):
                y = G.mul(x, g)
                v = chi[x] * val
                if y in chi:
                    if chi[y] != v:
                        ok = False
                        break
                else:
                    chi[y] = v
                    frontier.append(y)
        if ok and all(chi[G.mul(a, b)] == chi[a] * chi[b] for a in K for b in K):
            out.append(chi)
    return out


def character_rep(G: FiniteGroup, chi: dict) -> FiniteRep:
    return FiniteRep(G, 1, {g: [[v]] for g, v in chi.items()})


def inner_product(G: FiniteGroup, chi1: dict, chi2: dict, domain=None) -> GQ:
    """(1/|D|) sum chi1(g) conj(chi2(g)) over the domain D (default: all of G)."""
    dom = sorted(domain) if domain is not None else list(G.elements())
    total = sum((chi1[g] * chi2[g].conj() for g in dom), ZERO)
    return total / len(dom)


def irreducible_characters(G: FiniteGroup) -> list:
    """One-dimensional characters plus the defining representation if it is irreducible.

    Complete exactly when the squared dimensions add up to |G| (true for Z4,
    S3, D4 and Q8); raises otherwise.
    """
    chars = one_dim_characters(G)
    if G.realization is not None:
        chi = G.realization.character()
        if inner_product(G, chi, chi) == ONE and G.realization.dim > 1:
            chars.append(chi)
    dims = sum(int(c[G.identity].re) ** 2 for c in chars)
    if dims != G.order:
        raise GroupError(f"character table of {G.name} is not available over Q(i)")
    return chars


# -- induction -----------------------------------------------------------------------

def induce_rep(G: FiniteGroup, K, rho: FiniteRep) -> FiniteRep:
    """rho induced from K to G on V-valued functions with f(kg) = rho(k) f(g).

    Coordinates are the values at canonical right-coset representatives
    r_1 < r_2 < ...; block (i, j) of rho_up(g) is rho(r_i g r_j^-1) when
    r_i g lies in K r_j.
    """
    K = sorted(K)
    if not G.is_subgroup(K):
        raise GroupError("K is not a subgroup of G")
    if set(rho.matrices) != set(K):
        raise GroupError("rho must be defined exactly on K")
    reps = [coset[0] for coset in G.right_cosets(K)]
    coset_of = {}
    for j, coset in enumerate(G.right_cosets(K)):
        for x in coset:
            coset_of[x] = j
    d = rho.dim
    m = len(reps)
    mats = {}
    for g in G.elements():
        M = [[ZERO] * (m * d) for _ in range(m * d)]
        for i, r in enumerate(reps):
            y = G.mul(r, g)
            j = coset_of[y]
            k = G.mul(y, G.inverse[reps[j]])
            block = rho.matrices[k]
            for a in range(d):
                for b in range(d):
                    M[i * d + a][j * d + b] = block[a][b]
        mats[g] = M
    return FiniteRep(G, m * d, mats)


def frobenius_check(G: FiniteGroup, K, chi_rho: dict, irreducibles) -> Report:
    """<Ind chi_rho, chi_sigma>_G = <chi_rho, Res chi_sigma>_K for every sigma."""
    rep = Report(f"Frobenius reciprocity in {G.name}")
    ind = induce_rep(G, K, character_rep(G, chi_rho)).character()
    for n, sigma in enumerate(irreducibles):
        lhs = inner_product(G, ind, sigma)
        rhs = inner_product(G, chi_rho, sigma, domain=K)
        rep.add("<Ind rho, sigma>_G = <rho, Res sigma>_K", f"|K|={len(K)}, sigma #{n}", lhs == rhs, lhs, rhs)
    return rep


def dualize_action(rep: FiniteRep) -> FiniteRep:
    """Contragredient g -> rho(g^-1)^T (pull-back along the antipode)."""
    G = rep.group
    return FiniteRep(G, rep.dim, {g: mat_transpose(rep.matrices[G.inverse[g]]) for g in rep.matrices})


# -- G-spaces -------------------------------------------------------------------------

class GSpace:
    """Right action x <| g, stored as a points x group table."""

    def __init__(self, group: FiniteGroup, table, name: str = "X"):
        self.group = group
        self.table = [list(r) for r in table]
        self.points = len(self.table)
        self.name = name
        G = group
        for x in range(self.points):
            if self.table[x][G.identity] != x:
                raise GroupError(f"x <| e != x at point {x}")
            for g in G.elements():
                for h in G.elements():
                    if self.table[self.table[x][g]][h] != self.table[x][G.mul(g, h)]:
                        raise GroupError("(x <| g) <| h != x <| gh")

    def act(self, x: int, g: int) -> int:
        return self.table[x][g]

    def is_transitive(self) -> bool:
        orbit = {self.table[0][g] for g in self.group.elements()}
        return len(orbit) == self.points

    def act_function(self, g: int, f):
        """(g |> f)(x) = f(x <| g)."""
        return [f[self.act(x, g)] for x in range(self.points)]

    def act_algebra(self, h: GroupAlgebraElement, f):
        out = [ZERO] * self.points
        for g, c in h.coeffs.items():
            out = [o + c * v for o, v in zip(out, self.act_function(g, f))]
        return out


def regular_space(G: FiniteGroup) -> GSpace:
    return GSpace(G, [[G.mul(x, g) for g in G.elements()] for x in G.elements()], f"{G.name} (regular)")


def coset_space(G: FiniteGroup, K) -> GSpace:
    """Right cosets Kx with Kx <| g = Kxg."""
    cosets = G.right_cosets(K)
    where = {}
    for j, c in enumerate(cosets):
        for x in c:
            where[x] = j
    table = [[where[G.mul(c[0], g)] for g in G.elements()] for c in cosets]
    return GSpace(G, table, f"{G.name}/K (|K|={len(K)})")


@dataclass
class IntegralFunctional:
    weights: list

    def __call__(self, f) -> GQ:
        return sum((w * GQ.of(v) for w, v in zip(self.weights, f)), ZERO)


class NotTransitive(GroupError):
    pass


def invariant_functionals(X: GSpace) -> list:
    """Basis of {alpha : alpha_(x <| g) = alpha_x for all x, g}."""
    rows = []
    m = X.points
    for x in range(m):
        for g in X.group.elements():
            y = X.act(x, g)
            if y != x:
                row = [ZERO] * m
                row[y] = ONE
                row[x] = -ONE
                rows.append(row)
    return nullspace(rows, m)


def invariant_integral(X: GSpace, G: FiniteGroup | None = None) -> IntegralFunctional:
    """Normalized invariant integral I(f) = |X|^-1 sum f(x) on a homogeneous space."""
    if not X.is_transitive():
        raise NotTransitive("the action is not transitive; the invariant integral is not unique")
    w = GQ(Fraction(1, X.points))
    return IntegralFunctional([w] * X.points)


def _delta(m, x, c=ONE):
    f = [ZERO] * m
    f[x] = c
    return f


def check_unitarity(X: GSpace, G: FiniteGroup | None = None, involutive_star: bool = True) -> Report:
    """<g* |> f1, f2> = <f1, g |> f2> with <a, b> = I(a* b), and (h |> a)* = S(h)* |> a*."""
    G = X.group
    I = invariant_integral(X)
    m = X.points
    rep = Report(f"unitarity on {X.name}" + ("" if involutive_star else " (star mutated to g* = g)"))

    def form(a, b):
        return I([x.conj() * y for x, y in zip(a, b)])

    for g in G.elements():
        gstar = GroupAlgebraElement.basis(G, g).star(involutive_star)
        gel = GroupAlgebraElement.basis(G, g)
        for x in range(m):
            for y in range(m):
                f1, f2 = _delta(m, x), _delta(m, y)
                lhs = form(X.act_algebra(gstar, f1), f2)
                rhs = form(f1, X.act_algebra(gel, f2))
                rep.add("<g* |> f1, f2> = <f1, g |> f2>", f"g={g}, f1=delta_{x}, f2=delta_{y}", lhs == rhs, lhs, rhs)
    # compatibility of the stars with the action, on a complex test element
    for g in G.elements():
        h = GroupAlgebraElement(G, {g: I_UNIT, G.identity: GQ(2)})
        sh_star = h.antipode().star(involutive_star)
        for x in range(m):
            a = _delta(m, x, GQ(1, 1))
            lhs = [v.conj() for v in X.act_algebra(h, a)]
            rhs = X.act_algebra(sh_star, [v.conj() for v in a])
            rep.add("(h |> a)* = S(h)* |> a*", f"h=i*g{g}+2e, a=(1+i)delta_{x}", lhs == rhs, lhs, rhs)
    return rep


# -- co-space picture of induction ----------------------------------------------------

def _right_regular(G, k):
    """Matrix of phi -> phi <| k, (phi <| k)(y) = phi(k y), on delta coordinates."""
    n = G.order
    M = [[ZERO] * n for _ in range(n)]
    for y in range(n):
        M[y][G.mul(k, y)] = ONE
    return M


def _left_regular(G, g):
    """Matrix of phi -> g |> phi, (g |> phi)(x) = phi(x g)."""
    n = G.order
    M = [[ZERO] * n for _ in range(n)]
    for x in range(n):
        M[x][G.mul(x, g)] = ONE
    return M


def induced_carrier(G: FiniteGroup, K, chi: dict):
    """Basis of {phi in F(G) : phi <| k = chi(k) phi for all k in K}."""
    n = G.order
    rows = []
    for k in sorted(K):
        R = _right_regular(G, k)
        for i in range(n):
            row = list(R[i])
            row[i] = row[i] - chi[k]
            rows.append(row)
    return nullspace(rows, n)


def _coords(basis, free_cols, w):
    return [w[c] for c in free_cols]


def _free_columns(basis):
    cols = []
    for b in basis:
        cols.append(next(i for i, x in enumerate(b) if x == ONE and all(
            other[i] == ZERO for other in basis if other is not b)))
    return cols


def _in_carrier(G, K, chi, phi) -> bool:
    return all(phi[G.mul(k, y)] == chi[k] * phi[y] for k in K for y in G.elements())


def carrier_action(G: FiniteGroup, K, chi: dict):
    """Left regular action restricted to the induced carrier: (basis, {g: matrix})."""
    basis = induced_carrier(G, K, chi)
    cols = _free_columns(basis)
    mats = {}
    for g in G.elements():
        L = _left_regular(G, g)
        images = [mat_vec(L, b) for b in basis]
        mats[g] = mat_transpose([_coords(basis, cols, w) for w in images])
    return basis, mats


def check_prop2(G: FiniteGroup, K, chi: dict) -> Report:
    """The induced module as a submodule of the left regular co-space."""
    K = sorted(K)
    rep = Report(f"induced module inside F({G.name}), |K|={len(K)}")
    basis = induced_carrier(G, K, chi)
    expected_dim = G.order // len(K)
    rep.add("dim carrier = [G:K]", G.name, len(basis) == expected_dim, len(basis), expected_dim)
    for g in G.elements():
        L = _left_regular(G, g)
        ok = all(_in_carrier(G, K, chi, mat_vec(L, b)) for b in basis)
        rep.add("carrier invariant under g |>", f"g={g}", ok, ok, True)
    _, mats = carrier_action(G, K, chi)
    restricted = FiniteRep(G, len(basis), mats)
    ind = induce_rep(G, K, character_rep(G, {k: chi[k] for k in K})).character()
    got = restricted.character()
    for g in G.elements():
        rep.add("character = induce_rep character", f"g={g}", got[g] == ind[g], got[g], ind[g])
    return rep


def check_comodule_induction(G: FiniteGroup, K, chi: dict) -> Report:
    """Induced corepresentation: (id (x) L) F = (beta (x) id) F and the coaction (id (x) Delta) F."""
    K = sorted(K)
    rep = Report(f"induced corepresentation of F({G.name}), |K|={len(K)}")
    basis = induced_carrier(G, K, chi)
    cols = _free_columns(basis)
    n = G.order
    for idx, phi in enumerate(basis):
        # (id (x) L)F as a function on K x G: (k, y) -> phi(k y); (beta (x) id)F: chi(k) phi(y)
        lhs = [[phi[G.mul(k, y)] for y in range(n)] for k in K]
        rhs = [[chi[k] * phi[y] for y in range(n)] for k in K]
        rep.add("(id(x)L)F = (beta(x)id)F", f"basis #{idx}", lhs == rhs, lhs, rhs)
        # (id (x) Delta)F: (x, y) -> phi(x y); every y-slice must lie in the carrier
        ok = all(_in_carrier(G, K, chi, [phi[G.mul(x, y)] for x in range(n)]) for y in range(n))
        rep.add("(id(x)Delta)F lies in V_up (x) C", f"basis #{idx}", ok, ok, True)
    # matrix coefficients c_ji(y) = coordinate j of x -> phi_i(x y)
    coeff = {}
    for y in range(n):
        cols_y = [_coords(basis, cols, [phi[G.mul(x, y)] for x in range(n)]) for phi in basis]
        coeff[y] = mat_transpose(cols_y) if cols_y else []
    for x in range(n):
        for y in range(n):
            lhs, rhs = coeff[G.mul(x, y)], mat_mul(coeff[x], coeff[y])
            rep.add("c(xy) = c(x) c(y)", f"x={x}, y={y}", lhs == rhs, lhs, rhs)
    ind = induce_rep(G, K, character_rep(G, {k: chi[k] for k in K})).character()
    _, mats = carrier_action(G, K, chi)
    for g in G.elements():
        rep.add("dual of coaction = induced action", f"g={g}", coeff[g] == mats[g], coeff[g], mats[g])
        rep.add("coaction character = induced character", f"g={g}", trace(coeff[g]) == ind[g], trace(coeff[g]), ind[g])
    return rep


def classify(G: FiniteGroup, g: int) -> str:
    """Cycle-type label for the built-in S3 (by element order), otherwise the order."""
    o = G.element_order(g)
    if G.name == "S3":
        return {1: "e", 2: "transposition", 3: "3-cycle"}[o]
    return f"order {o}"
