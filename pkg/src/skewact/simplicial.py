"""Finite simplicial sets, the Catalan simplicial set, and low simplices of oplax actions.

Face ``d_i`` deletes vertex ``i``. For a 2-simplex ``(s, t, v; α)`` on ``R, S, T`` this
gives ``d0 = t``, ``d1 = v``, ``d2 = s``. A 3-simplex on ``R, S, T, U`` is stored as
``(α, β, γ, ζ)`` where ``α`` lives on ``RST``, ``β`` on ``RSU``, ``γ`` on ``RTU`` and
``ζ`` on ``STU``; hence ``d0 = ζ``, ``d1 = γ``, ``d2 = β``, ``d3 = α``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from . import catalog as cat
from .duality import Adjunction
from .oplax import OplaxAction, check_action, regular_action
from .pasting import Iso, TwoCell, check_equation, evaluate, one

__all__ = ["FiniteSimplicialSet", "validate", "catalan", "catalan_counts", "cosk_fill",
           "Simplex2", "Simplex3", "check_simplex2", "check_simplex3", "s0_vertex",
           "s0_edge", "s1_edge", "degeneracy3", "faces2", "faces3", "E", "Cc",
           "catalan_nondegenerate", "catalan_degenerate", "SIM2", "check_morphism2"]

SIM2 = ("2SIM1", "2SIM2", "2SIM3")


# generic finite simplicial sets ----------------------------------------------

@dataclass
class FiniteSimplicialSet:
    """Levels ``0..max_dim`` as lists; faces and degeneracies as callables
    ``face(n, i, x)`` (``x`` in level ``n``) and ``degen(n, i, x)``."""
    levels: dict
    face: Callable
    degen: Callable
    cosk: int | None = None
    same: Callable = field(default=lambda a, b: a == b)

    @property
    def max_dim(self) -> int:
        return max(self.levels)

    def index(self, n: int, x) -> int:
        for k, y in enumerate(self.levels[n]):
            if self.same(x, y):
                return k
        raise KeyError(f"not a {n}-simplex: {x!r}")


def validate(X: FiniteSimplicialSet) -> list:
    """All violated simplicial identities as readable strings (empty when valid)."""
    bad = []
    d, s, eq = X.face, X.degen, X.same
    top = X.max_dim

    def member(n, y):
        return any(eq(y, z) for z in X.levels[n])

    for n in range(1, top + 1):
        for x in X.levels[n]:
            for i in range(n + 1):
                if not member(n - 1, d(n, i, x)):
                    bad.append(f"d{i} leaves level {n - 1} at {x!r}")
    for n in range(top):
        for x in X.levels[n]:
            for i in range(n + 1):
                if not member(n + 1, s(n, i, x)):
                    bad.append(f"s{i} leaves level {n + 1} at {x!r}")
    for n in range(2, top + 1):
        for x in X.levels[n]:
            for i, j in combinations(range(n + 1), 2):
                if not eq(d(n - 1, i, d(n, j, x)), d(n - 1, j - 1, d(n, i, x))):
                    bad.append(f"d{i}d{j} != d{j - 1}d{i} at {x!r}")
    for n in range(top):
        for x in X.levels[n]:
            for j in range(n + 1):
                y = s(n, j, x)
                for i in range(n + 2):
                    if i in (j, j + 1):
                        want = x
                    elif i < j:
                        want = s(n - 1, j - 1, d(n, i, x))
                    else:
                        want = s(n - 1, j, d(n, i - 1, x))
                    if not eq(d(n + 1, i, y), want):
                        bad.append(f"d{i}s{j} identity fails at {x!r}")
    for n in range(top - 1):
        for x in X.levels[n]:
            for i, j in product(range(n + 1), repeat=2):
                if i <= j and not eq(s(n + 1, i, s(n, j, x)), s(n + 1, j + 1, s(n, i, x))):
                    bad.append(f"s{i}s{j} != s{j + 1}s{i} at {x!r}")
    return bad


def cosk_fill(X: FiniteSimplicialSet, dim: int) -> list:
    """All ``(dim-1)``-spheres, i.e. tuples of faces ``(x_0, ..., x_dim)`` with
    ``d_i x_j = d_{j-1} x_i`` for ``i < j``; these are the fillers added by coskeleta."""
    below = X.levels[dim - 1]
    out = []
    for xs in product(below, repeat=dim + 1):
        if dim - 1 == 0 or all(X.same(X.face(dim - 1, i, xs[j]), X.face(dim - 1, j - 1, xs[i]))
                               for i, j in combinations(range(dim + 1), 2)):
            out.append(xs)
    return out


# Catalan -------------------------------------------------------------------

E, Cc = "e", "c"
_RANK = {E: 0, Cc: 1}


def _pairs(n):
    return list(combinations(range(n + 1), 2))


def _labeling_ok(n, lab) -> bool:
    x = dict(zip(_pairs(n), lab))
    return all(_RANK[x[(i, k)]] >= max(_RANK[x[(i, j)]], _RANK[x[(j, k)]])
               for i, j, k in combinations(range(n + 1), 3))


def _cat_face(n, i, lab):
    x = dict(zip(_pairs(n), lab))
    keep = [v for v in range(n + 1) if v != i]
    return tuple(x[(keep[a], keep[b])] for a, b in _pairs(n - 1))


def _cat_degen(n, j, lab):
    x = dict(zip(_pairs(n), lab))

    def sig(k):
        return k if k <= j else k - 1

    return tuple(E if sig(a) == sig(b) else x[(sig(a), sig(b))] for a, b in _pairs(n + 1))


def catalan(max_dim: int = 3) -> FiniteSimplicialSet:
    """Edge labelings ``x_ij ∈ {e, c}`` with ``x_ik ≥ x_ij ∨ x_jk`` (``e < c``)."""
    levels = {n: [lab for lab in product((E, Cc), repeat=len(_pairs(n))) if _labeling_ok(n, lab)]
              for n in range(max_dim + 1)}
    return FiniteSimplicialSet(levels, _cat_face, _cat_degen, cosk=2)


def catalan_counts(max_dim: int = 3) -> list:
    X = catalan(max_dim)
    return [len(X.levels[n]) for n in range(max_dim + 1)]


def catalan_degenerate(X: FiniteSimplicialSet, n: int) -> set:
    return {X.degen(n - 1, j, y) for y in X.levels[n - 1] for j in range(n)} if n else set()


def catalan_nondegenerate(X: FiniteSimplicialSet, n: int) -> list:
    deg = catalan_degenerate(X, n)
    return [x for x in X.levels[n] if x not in deg]


# simplices of oplax actions ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class Simplex2:
    """``s`` acts ``R`` on ``S``, ``t`` acts ``S`` on ``T``, ``v`` acts ``R`` on ``T``;
    ``alpha: (1_T⊗s);t ⇒ (t⊗1_R);v``."""
    s: OplaxAction
    t: OplaxAction
    v: OplaxAction
    alpha: TwoCell
    name: str = "α"

    def same(self, other: "Simplex2") -> bool:
        return (self.s.same(other.s) and self.t.same(other.t) and self.v.same(other.v)
                and self.alpha == other.alpha)


@dataclass(frozen=True, eq=False)
class Simplex3:
    alpha: Simplex2
    beta: Simplex2
    gamma: Simplex2
    zeta: Simplex2

    def same(self, other: "Simplex3") -> bool:
        return all(a.same(b) for a, b in zip(self.faces(), other.faces()))

    def faces(self):
        return (self.alpha, self.beta, self.gamma, self.zeta)


def faces2(x: Simplex2):
    return (x.t, x.v, x.s)


def faces3(g: Simplex3):
    return (g.zeta, g.gamma, g.beta, g.alpha)


def _wide(x, word):
    """Over an enveloping base ``S°S`` an action ``S X → S`` enters as ``1_S° ⊗ x``."""
    return one(word[0]) @ x if isinstance(word, tuple) else x


def check_simplex2(x: Simplex2, model: str | None = None):
    s, t, v = x.s, x.t, x.v
    T, S, R = t.A, t.M, s.M
    sa, s2, s0 = (_wide(c, S) for c in (s.a, s.a2, s.a0))
    eqs = [cat.sim2_1(T, S, R, sa, t.a, v.a, x.alpha, t.over.m, t.a2),
           cat.sim2_2(T, S, R, sa, t.a, v.a, x.alpha, s.over.m, s2, v.a2),
           cat.sim2_3(T, S, R, sa, t.a, v.a, x.alpha, s.over.u, s0, v.a0)]
    return [check_equation(e, model=model) for e in eqs]


def check_morphism2(x: Simplex2, y: Simplex2, sigma, tau, nu, model: str | None = None):
    """``σ: s ⇒ s′``, ``τ: t ⇒ t′``, ``ν: v ⇒ v′`` commute with the two 2-cells."""
    T, R = x.t.A, x.s.M
    eq = cat.sim2_4(T, R, _wide(sigma, x.t.M), tau, nu, x.alpha, y.alpha)
    return [check_equation(eq, model=model)]


def tetrahedral(g: Simplex3) -> bool:
    """Boundary match: shared edges of the four faces coincide."""
    a, b, c, z = g.faces()
    return (a.s.same(b.s) and a.v.same(c.s) and a.t.same(z.s)
            and b.t.same(z.v) and b.v.same(c.v) and c.t.same(z.t))


def check_simplex3(g: Simplex3, model: str | None = None):
    a, b, c, z = g.faces()
    if not tetrahedral(g):
        raise ValueError("faces are not in tetrahedral configuration")
    U, T, S, R = z.t.A, z.t.M, a.t.M, a.s.M
    eq = cat.sim3(U, T, S, R, _wide(a.s.a, S), _wide(a.t.a, T), c.t.a, b.t.a, b.v.a,
                  _wide(a.alpha, T), b.alpha, c.alpha, z.alpha)
    return [check_equation(eq, model=model)]


def s0_vertex(adj: Adjunction) -> OplaxAction:
    return regular_action(adj)


def s0_edge(t: OplaxAction) -> Simplex2:
    """``(𝔰0 S, t, t; t²)``."""
    return Simplex2(regular_action(t.over.adj), t, t, t.a2, name=f"s0({t.name})")


def s1_edge(t: OplaxAction) -> Simplex2:
    """``(t, 𝔰0 T, t; ≅)``."""
    reg = regular_action(t.target)
    T, S = t.A, t.M
    iso = evaluate(Iso((one(T) @ t.a) >> reg.a, (reg.a @ one(S)) >> t.a)).named("≅")
    return Simplex2(t, reg, t, iso, name=f"s1({t.name})")


def degeneracy3(x: Simplex2, j: int) -> Simplex3:
    if j == 0:
        return Simplex3(s0_edge(x.s), s0_edge(x.v), x, x)
    if j == 1:
        return Simplex3(s1_edge(x.s), x, x, s0_edge(x.t))
    if j == 2:
        return Simplex3(x, x, s1_edge(x.v), s1_edge(x.t))
    raise ValueError(j)


def check_edge(t: OplaxAction, model: str | None = None):
    return check_action(t, model)
