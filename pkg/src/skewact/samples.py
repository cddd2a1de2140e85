"""Seeded random generators of valid (and deliberately perturbed) small instances.

Arrows ``R°R → S°S`` come from injections ``g_a: [d] → S``: the entry at
``((a,b),(g_a j, g_b j))`` has ``k`` elements and all others are empty. The
comultiplication copies the element index and the counit is forced. 2-simplices use
one copy function ``[k_s]×[k_t] → [k_v]`` at every entry, which keeps OM4 and OM5.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .kernel import Cell2, Gen, Obj
from .opmon import OpmonArrow, OpmonSimplex2, OpmonSimplex3, Vertex, compose_arrows, vertex
from .oplax import OplaxAction
from .pasting import G, TwoCell, atoms as atoms_of, cell_by_rule, diagram, one, unique_cell
from .skewmon import induced

__all__ = ["Functor", "random_vertex", "random_functor", "arrow_from_functor",
           "random_arrow", "delta_functor", "random_opmon_simplex2", "random_induced_action",
           "opmon_tetrahedron", "perturb_cell", "relabel_simplex2"]

_COUNTER = iter(range(10 ** 9))


def random_vertex(rng: random.Random, name: str, max_size: int = 2) -> Vertex:
    n = rng.randint(1, max_size)
    return vertex(Obj(name, n), rng.randrange(n))


@dataclass(frozen=True)
class Functor:
    """``φ_ab`` as a dict ``(a, b) -> {x: y}`` on a common domain, with multiplicity ``k``."""
    maps: dict
    k: int


def random_functor(rng: random.Random, nR: int, nS: int, k_max: int = 2) -> Functor:
    """Injections ``g_a: [d] → S`` and ``φ_ab = g_b g_a⁻¹``; ``d = 1`` gives the arrows
    induced by functions ``R → S``."""
    d = rng.randint(1, nS)
    g = [rng.sample(range(nS), d) for _ in range(nR)]
    maps = {(a, b): {g[a][j]: g[b][j] for j in range(d)} for a in range(nR) for b in range(nR)}
    return Functor(maps, rng.randint(1, k_max))


def delta_functor(f: list, k: int = 1) -> Functor:
    """The arrow ``(a, b) ↦ (f a, f b)`` of a function ``f: R → S``."""
    n = len(f)
    return Functor({(a, b): {f[a]: f[b]} for a in range(n) for b in range(n)}, k)


def _gen(name, R: Vertex, S: Vertex, f: Functor) -> Gen:
    card = {}
    for (a, b), m in f.maps.items():
        for x, y in m.items():
            card[((a, b), (x, y))] = f.k
    return Gen(name, (R.b.Rdual, R.R), (S.b.Rdual, S.R), card)


def _copies(name, atoms):
    return [k for g, _, _, k in atoms if g == name]


def arrow_from_functor(R: Vertex, S: Vertex, f: Functor, name: str | None = None,
                       twist=None) -> OpmonArrow:
    """``twist(xs, copy, candidates) -> index`` overrides the copying comultiplication."""
    gname = name or f"s{next(_COUNTER)}"
    g = _gen(gname, R, S, f)
    C = G(g)
    E, F = R.env, S.env

    def copy_rule(xs, ys, src, tgts):
        k = _copies(gname, src)[0]
        if twist is not None:
            return twist(xs, ys, k, [tuple(_copies(gname, t)) for t in tgts])
        return [tuple(_copies(gname, t)) for t in tgts].index((k, k))

    C2 = cell_by_rule(E.m >> C, (C @ C) >> F.m, copy_rule, name=f"{gname}²")
    C0 = unique_cell(E.u >> C, F.u, name=f"{gname}⁰")
    return OpmonArrow(E, F, C, C2, C0, name=gname)


def random_arrow(rng, R: Vertex, S: Vertex, k_max: int = 2) -> tuple[OpmonArrow, Functor]:
    f = random_functor(rng, R.R.size, S.R.size, k_max)
    return arrow_from_functor(R, S, f), f


def random_opmon_simplex2(rng, R: Vertex, S: Vertex, T: Vertex, k_max: int = 2,
                          uniform: bool = True):
    """A 2-simplex ``ᾱ: s̄;t̄ ⇒ v̄`` with ``v̄`` supported on the composite.

    With ``uniform`` the copy function is the same at every entry, so OM4/OM5 hold;
    otherwise it is drawn independently per entry."""
    s, fs = random_arrow(rng, R, S, k_max)
    t, ft = random_arrow(rng, S, T, k_max)
    comp = compose_arrows(s, t)
    dc = diagram(comp.C)
    kv = rng.randint(1, k_max)
    vname = f"v{next(_COUNTER)}"
    card = {pos: kv for pos in dc.entries}
    vg = Gen(vname, (R.b.Rdual, R.R), (T.b.Rdual, T.R), card)
    v = _arrow_from_gen(R, T, vg)
    table = {(i, j): rng.randrange(kv) for i in range(fs.k) for j in range(ft.k)}

    def rule(xs, ys, src, tgts):
        i, j = _copies(s.name, src)[0], _copies(t.name, src)[0]
        if uniform:
            want = table[(i, j)]
        else:
            want = rng.randrange(kv)
        return [tuple(_copies(vname, tt)) for tt in tgts].index((want,))

    alpha = cell_by_rule(s.C >> t.C, v.C, rule, name="ᾱ")
    return OpmonSimplex2(s, t, v, alpha)


def _arrow_from_gen(R: Vertex, S: Vertex, g: Gen) -> OpmonArrow:
    C = G(g)
    E, F = R.env, S.env

    def copy_rule(xs, ys, src, tgts):
        k = _copies(g.name, src)[0]
        return [tuple(_copies(g.name, t)) for t in tgts].index((k, k))

    C2 = cell_by_rule(E.m >> C, (C @ C) >> F.m, copy_rule, name=f"{g.name}²")
    C0 = unique_cell(E.u >> C, F.u, name=f"{g.name}⁰")
    return OpmonArrow(E, F, C, C2, C0, name=g.name)


def _over(a: OpmonArrow, b: OpmonArrow, A: Vertex, B: Vertex, k: int, f) -> tuple:
    """A fresh arrow ``A→B`` of multiplicity ``k`` on the support of ``a;b`` and the cell
    ``a;b ⇒ it`` sending copies ``(i, j)`` to ``f(i, j)``."""
    name = f"c{next(_COUNTER)}"
    g = Gen(name, (A.b.Rdual, A.R), (B.b.Rdual, B.R),
            {p: k for p in diagram(compose_arrows(a, b).C).entries})
    c = _arrow_from_gen(A, B, g)

    def rule(xs, ys, src, tgts):
        want = f(_copies(a.name, src)[0], _copies(b.name, src)[0])
        return [tuple(_copies(name, t)) for t in tgts].index((want,))

    return c, cell_by_rule(a.C >> b.C, c.C, rule)


def opmon_tetrahedron(rng, V: list, k_max: int = 2) -> OpmonSimplex3:
    """Random arrows ``s, t, u``; ``x`` pairs the copies of ``t`` and ``u`` so that ``ζ`` is
    injective, ``α`` and ``γ`` are random copy functions and ``β`` is forced by OM7."""
    R, S, T, U = V
    s, fs = random_arrow(rng, R, S, k_max)
    t, ft = random_arrow(rng, S, T, k_max)
    u, fu = random_arrow(rng, T, U, k_max)
    kv, kw = rng.randint(1, k_max), rng.randint(1, k_max)
    fa = {(i, j): rng.randrange(kv) for i in range(fs.k) for j in range(ft.k)}
    fg = {(i, j): rng.randrange(kw) for i in range(kv) for j in range(fu.k)}
    v, av = _over(s, t, R, T, kv, lambda i, j: fa[(i, j)])
    x, zx = _over(t, u, S, U, ft.k * fu.k, lambda j, l: j * fu.k + l)
    w, gw = _over(v, u, R, U, kw, lambda i, l: fg[(i, l)])
    bw = _over_cell(s, x, w, lambda i, jl: fg[(fa[(i, jl // fu.k)], jl % fu.k)])
    return OpmonSimplex3(OpmonSimplex2(s, t, v, av), OpmonSimplex2(s, x, w, bw),
                         OpmonSimplex2(v, u, w, gw), OpmonSimplex2(t, u, x, zx))


def _over_cell(a, b, c, f):
    def rule(xs, ys, src, tgts):
        want = f(_copies(a.name, src)[0], _copies(b.name, src)[0])
        return [tuple(_copies(c.name, t)) for t in tgts].index((want,))
    return cell_by_rule(a.C >> b.C, c.C, rule)


def random_induced_action(rng, R: Vertex, S: Vertex, k_max: int = 2) -> OplaxAction:
    """The rigid family over an induced base: ``s(x,p;y) = [x=y∈X′]`` and arbitrary
    multiplicities at the other points for ``x ∈ X′``; ``s²`` copies, ``s⁰`` is forced."""
    nR, p = R.R.size, R.adj.point
    nS = S.R.size
    Xp = [x for x in range(nS) if rng.random() < 0.8] or [0]
    card = {}
    for x in Xp:
        card[((x, p), (x,))] = 1
        for r in range(nR):
            if r != p:
                for y in range(nS):
                    k = rng.randint(0, k_max)
                    if k:
                        card[((x, r), (y,))] = k
    name = f"a{next(_COUNTER)}"
    a = G(Gen(name, (S.R, R.R), (S.R,), card))
    base = induced(R.adj)
    Sx = one(S.R)
    a2 = unique_or_copy((Sx @ base.m) >> a, (a @ one(R.R)) >> a, name)
    a0 = unique_cell((Sx @ R.adj.i) >> a, Sx, name="a⁰")
    return OplaxAction(S.R, base, a, a2, a0, name=name, target=S.adj)


def unique_or_copy(src, dst, name):
    """The forced comultiplication: the unit factor has one element, the other keeps the copy."""
    def rule(xs, ys, s, tgts):
        k = _copies(name, s)[0]
        return [sorted(_copies(name, t)) for t in tgts].index(sorted([0, k]))
    return cell_by_rule(src, dst, rule, name="a²")


def perturb_cell(rng, cell):
    """Re-draw one element's image inside its entry; None when every entry is rigid."""
    v = cell.value
    opts = [(k, v.dst.entries[k[:2]]) for k in v.fn if len(v.dst.entries[k[:2]]) > 1]
    if not opts:
        return None
    k, tgt = rng.choice(opts)
    fn = dict(v.fn)
    fn[k] = rng.choice([t for t in tgt if t != fn[k]])
    return TwoCell(cell.src, cell.dst, Cell2(v.src, v.dst, fn), cell.name)


def _relabelled(R: Vertex, S: Vertex, a: OpmonArrow, perm: list) -> tuple:
    """A copy of ``a`` under a fresh name and the cell ``a ⇒ copy`` permuting copies."""
    g0 = diagram(a.C).boxes[0]
    name = f"{g0.name}'{next(_COUNTER)}"
    b = _arrow_from_gen(R, S, Gen(name, g0.src, g0.dst, dict(g0.card)))

    def rule(xs, ys, src, tgts):
        return [tuple(_copies(name, t)) for t in tgts].index((perm[_copies(g0.name, src)[0]],))

    return b, cell_by_rule(a.C, b.C, rule)


def relabel_simplex2(rng, x: OpmonSimplex2, R: Vertex, S: Vertex, T: Vertex):
    """A copy ``y`` of ``x`` with permuted element labels and the morphism ``(σ, τ, ν): x → y``."""
    def perm(a):
        k = max(diagram(a.C).boxes[0].card.values())
        p = list(range(k))
        rng.shuffle(p)
        return p

    ps, pt, pv = perm(x.s), perm(x.t), perm(x.v)
    s2, sigma = _relabelled(R, S, x.s, ps)
    t2, tau = _relabelled(S, T, x.t, pt)
    v2, nu = _relabelled(R, T, x.v, pv)
    table = {}
    for key, img in x.alpha.value.fn.items():
        src = atoms_of(x.alpha.value.src, key)
        tgt = atoms_of(x.alpha.value.dst, img)
        i, j = _copies(x.s.name, src)[0], _copies(x.t.name, src)[0]
        table[(key[0], key[1], ps[i], pt[j])] = pv[_copies(x.v.name, tgt)[0]]

    def rule(xs, ys, src, tgts):
        want = table[(xs, ys, _copies(s2.name, src)[0], _copies(t2.name, src)[0])]
        return [tuple(_copies(v2.name, t)) for t in tgts].index((want,))

    alpha = cell_by_rule(s2.C >> t2.C, v2.C, rule, name="ᾱ'")
    return OpmonSimplex2(s2, t2, v2, alpha), sigma, tau, nu
