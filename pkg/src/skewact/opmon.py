"""Opmonoidal arrows between enveloping monoidales and their transposes to actions.

An arrow ``s̄: R°R → S°S`` corresponds to the action ``ŝ = (1_S⊗s̄);(e_S⊗1_S)`` of
``R°R`` on ``S``. ``P`` and ``P′`` move 2-cells across this correspondence, ``Q``
precomposes with the opmonoidal left adjoint ``1⊗i∘⊗1`` to land over induced bases,
and ``ψ`` is the module structure of an action over an induced base.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import catalog as cat
from .duality import Adjunction, Biduality, opposite_adjunction
from .oplax import OplaxAction
from .pasting import (Expr1, Id2, Iso, Ten2, TwoCell, G, Verdict, check_equation, diagram,
                      evaluate, one, paste)
from .simplicial import Simplex2, Simplex3, check_simplex2, check_simplex3
from .skewmon import SkewMonoidale, enveloping, induced, ob

__all__ = ["OpmonArrow", "OpmonCell", "OpmonSimplex2", "OpmonSimplex3", "Vertex",
           "check_arrow", "check_opmon_cell", "check_opmon_simplex2", "check_om6",
           "check_om7", "compose_arrows", "identity_arrow", "arrow_to_action",
           "action_to_arrow", "P", "P_inv", "check_transposed", "check_transposed3",
           "q_action", "Q", "Q_morphism", "psi", "module_laws", "check_ir_js",
           "vertex", "transpose_cell", "check_transposed_morphism", "OM_ARROW", "OM_CELL", "A_AXIOMS"]

OM_ARROW = ("OM1", "OM2", "OM3")
OM_CELL = ("OM4", "OM5")
A_AXIOMS = ("A1", "A2", "A3")


@dataclass(frozen=True, eq=False)
class Vertex:
    """A point adjunction together with a biduality on the same object."""
    adj: Adjunction
    b: Biduality

    @property
    def R(self):
        return self.adj.R

    @property
    def env(self) -> SkewMonoidale:
        return enveloping(self.b)

    @property
    def opp(self) -> Adjunction:
        return opposite_adjunction(self.adj, self.b)


def vertex(R, p: int) -> Vertex:
    from .duality import canonical_biduality, point_adjunction
    return Vertex(point_adjunction(R, p), canonical_biduality(R))


@dataclass(frozen=True, eq=False)
class OpmonArrow:
    """``C: M → N`` with ``C²: m;C ⇒ (C⊗C);m'`` and ``C⁰: u;C ⇒ u'``."""
    src: SkewMonoidale
    dst: SkewMonoidale
    C: Expr1
    C2: TwoCell
    C0: TwoCell
    name: str = "C"

    def same(self, other: "OpmonArrow") -> bool:
        return (diagram(self.C).form == diagram(other.C).form
                and self.C2 == other.C2 and self.C0 == other.C0)


@dataclass(frozen=True, eq=False)
class OpmonCell:
    src: OpmonArrow
    dst: OpmonArrow
    xi: TwoCell


@dataclass(frozen=True, eq=False)
class OpmonSimplex2:
    """``ᾱ: s̄;t̄ ⇒ v̄``."""
    s: OpmonArrow
    t: OpmonArrow
    v: OpmonArrow
    alpha: TwoCell

    def as_cell(self) -> OpmonCell:
        return OpmonCell(compose_arrows(self.s, self.t), self.v, self.alpha)

    def same(self, other: "OpmonSimplex2") -> bool:
        return (self.s.same(other.s) and self.t.same(other.t) and self.v.same(other.v)
                and self.alpha == other.alpha)


@dataclass(frozen=True, eq=False)
class OpmonSimplex3:
    alpha: OpmonSimplex2  # s;t ⇒ v
    beta: OpmonSimplex2   # s;x ⇒ w
    gamma: OpmonSimplex2  # v;u ⇒ w
    zeta: OpmonSimplex2   # t;u ⇒ x


def check_arrow(f: OpmonArrow, model: str | None = None):
    M, N = f.src, f.dst
    Mo = ob(M.M)
    eqs = [cat.om1(Mo, M.m, M.alpha, ob(N.M), N.m, N.alpha, f.C, f.C2),
           cat.om2(Mo, M.u, M.lam, N.m, N.lam, f.C, f.C2, f.C0),
           cat.om3(Mo, M.u, M.rho, N.m, N.rho, f.C, f.C2, f.C0)]
    return [check_equation(e, model=model) for e in eqs]


def check_opmon_cell(c: OpmonCell, model: str | None = None):
    M, N = c.src.src, c.src.dst
    eqs = [cat.om4(M.m, N.m, c.xi, c.src.C2, c.dst.C2),
           cat.om5(M.u, c.xi, c.src.C0, c.dst.C0)]
    return [check_equation(e, model=model) for e in eqs]


def check_opmon_simplex2(x: OpmonSimplex2, model: str | None = None):
    return check_opmon_cell(x.as_cell(), model)


def check_om6(x: OpmonSimplex2, y: OpmonSimplex2, sigma: TwoCell, tau: TwoCell, nu: TwoCell,
              model: str | None = None):
    """``σ: s̄ ⇒ s̄′``, ``τ: t̄ ⇒ t̄′``, ``ν: v̄ ⇒ v̄′`` form a morphism ``x → y``."""
    return [check_equation(cat.om6(sigma, tau, nu, x.alpha, y.alpha), model=model)]


def check_om7(g: OpmonSimplex3, model: str | None = None):
    a, b, c, z = g.alpha, g.beta, g.gamma, g.zeta
    ok = (a.s.same(b.s) and a.v.same(c.s) and a.t.same(z.s) and b.t.same(z.v)
          and b.v.same(c.v) and c.t.same(z.t))
    if not ok:
        raise ValueError("faces are not in tetrahedral configuration")
    return [check_equation(cat.om7(a.s.C, c.t.C, a.alpha, b.alpha, c.alpha, z.alpha), model=model)]


def identity_arrow(M: SkewMonoidale) -> OpmonArrow:
    C = ob(M.M)
    C2 = evaluate(paste(M.m)).named("1²")
    C0 = evaluate(paste(M.u)).named("1⁰")
    return OpmonArrow(M, M, C, C2, C0, name="1")


def compose_arrows(f: OpmonArrow, g: OpmonArrow) -> OpmonArrow:
    """``(C;D)² = (C²;D) • ((C⊗C);D²)`` and ``(C;D)⁰ = (C⁰;D) • D⁰``."""
    C, D = f.C, g.C
    c2 = evaluate(paste(f.C2 >> D, (C @ C) >> g.C2)).named(f"({f.name};{g.name})²")
    c0 = evaluate(paste(f.C0 >> D, g.C0)).named(f"({f.name};{g.name})⁰")
    return OpmonArrow(f.src, g.dst, C >> D, c2, c0, name=f"{f.name};{g.name}")


# transposition -----------------------------------------------------------------

def _out(b: Biduality, x):
    """``(1_S ⊗ x) ; (e_S ⊗ 1_S)`` on 1-cells or 2-cells."""
    return (one(b.R) @ x) >> (G(b.e) @ one(b.R))


def arrow_to_action(f: OpmonArrow, bS: Biduality, name: str = None) -> OplaxAction:
    a = _out(bS, f.C)
    a2 = evaluate(_out(bS, f.C2)).named("ŝ²")
    a0 = evaluate(_out(bS, f.C0)).named("ŝ⁰")
    return OplaxAction(bS.R, f.src, a, a2, a0, name=name or f"^{f.name}")


def action_to_arrow(act: OplaxAction, bS: Biduality, name: str = None) -> OpmonArrow:
    over = act.over
    W = ob(over.M)
    n, Sd = G(bS.n), one(bS.Rdual)
    C = (n @ W) >> (Sd @ act.a)
    C2 = evaluate((n @ W @ W) >> (Sd @ act.a2)).named("s̄²")
    C0 = evaluate(n >> (Sd @ act.a0)).named("s̄⁰")
    return OpmonArrow(over, enveloping(bS), C, C2, C0, name=name or f"~{act.name}")


def transpose_cell(xi: TwoCell, b: Biduality) -> TwoCell:
    """``σ̄ ↦ σ̂ = (1⊗σ̄);(e⊗1)`` for cells between parallel arrows into ``S°S``."""
    return evaluate(_out(b, xi)).named("σ̂")


def P(x: OpmonSimplex2, bS: Biduality, bT: Biduality) -> Simplex2:
    """Transpose an opmonoidal 2-simplex to a 2-simplex of actions over enveloping monoidales."""
    s, t, v = x.s, x.t, x.v
    T = one(bT.R)
    mT = t.dst.m
    eT = G(bT.e) @ T
    first = (T @ ((ob(s.dst.M) @ s.C) >> t.C2)) >> eT
    second = (T @ (Ten2(Id2(t.C), x.alpha) >> mT)) >> eT
    alpha = evaluate(paste(first, second)).named("α̂")
    return Simplex2(arrow_to_action(s, bS), arrow_to_action(t, bT), arrow_to_action(v, bT), alpha)


def P_inv(y: Simplex2, bS: Biduality, bT: Biduality) -> OpmonSimplex2:
    """Inverse of ``P``: insert ``n_T`` and ``n_S``, apply ``α̂`` and cancel with ``t̂⁰``."""
    s, t, v = y.s, y.t, y.v
    W = ob(s.over.M)
    nT, nS = G(bT.n), G(bS.n)
    Td, T = one(bT.Rdual), one(bT.R)
    first = (nT @ W) >> ((Td @ T @ nS @ W) >> (Td @ y.alpha))
    second = (nT @ W) >> ((Td @ t.a0 @ W) >> (Td @ v.a))
    alpha = evaluate(paste(first, second)).named("ᾱ")
    return OpmonSimplex2(action_to_arrow(s, bS), action_to_arrow(t, bT), action_to_arrow(v, bT),
                         alpha)


def _renamed(vs, names):
    return [Verdict(n, v.holds, v.detail) for v, n in zip(vs, names)]


def check_transposed(y: Simplex2, model: str | None = None):
    """A1–A3: the simplex axioms with enveloping bases."""
    return _renamed(check_simplex2(y, model), A_AXIOMS)


def check_transposed_morphism(x: Simplex2, y: Simplex2, sigma, tau, nu, model=None):
    from .simplicial import check_morphism2
    return _renamed(check_morphism2(x, y, sigma, tau, nu, model), ["A4"])


def check_transposed3(g: Simplex3, model: str | None = None):
    return _renamed(check_simplex3(g, model), ["A5"])


# precomposition with the opmonoidal left adjoint ------------------------------------

def _lead(V: Vertex) -> Expr1:
    """``1⊗i∘⊗1: S R → S R° R`` without the leading ``S``."""
    return V.opp.i @ one(V.R)


def q_action(act: OplaxAction, V: Vertex, target: Adjunction | None = None) -> OplaxAction:
    """``s = (1⊗i∘⊗1);ŝ`` over the induced base on ``R``."""
    S = one(act.A)
    R = one(V.R)
    lead = V.opp.i
    a = (S @ lead @ R) >> act.a
    a2 = evaluate((S @ lead @ R @ lead @ R) >> act.a2).named("s²")
    # i∘ ⊗ i = n ; (1 ⊗ i*;i), so ε turns (1⊗i);s into (1⊗n);ŝ
    n_eps = G(V.b.n) >> (one(V.b.Rdual) @ V.adj.eps)
    a0 = evaluate(paste((S @ n_eps) >> act.a, act.a0)).named("s⁰")
    return OplaxAction(act.A, induced(V.adj), a, a2, a0, name=f"Q({act.name})",
                       target=target or act.target)


def Q(y: Simplex2, R: Vertex, S: Vertex, T: Vertex) -> Simplex2:
    """Whisker ``α̂`` with ``1⊗j∘⊗1⊗i∘⊗1``."""
    s = q_action(y.s, R, S.adj)
    t = q_action(y.t, S, T.adj)
    v = q_action(y.v, R, T.adj)
    lead = one(T.R) @ S.opp.i @ one(S.R) @ R.opp.i @ one(R.R)
    return Simplex2(s, t, v, evaluate(lead >> y.alpha).named("Q(α̂)"))


def Q_morphism(cell: TwoCell, R: Vertex, A) -> TwoCell:
    """``σ̂ ↦ (1⊗i∘⊗1) ⋆ σ̂`` for a cell between actions of ``R°R`` on ``A``."""
    return evaluate((one(A) @ R.opp.i @ one(R.R)) >> cell).named("Q(σ̂)")


# the module structure ψ --------------------------------------------------------

def _monad(V: Vertex):
    """``𝕋 = i∘;i°`` on ``R`` (to be tensored with identities), its unit and multiplication."""
    o = V.opp
    T1 = o.i >> o.istar
    unit = o.eta
    mult = evaluate(((o.i >> o.eps) >> o.istar)).named("μ𝕋")
    return T1, unit, mult


def psi(act: OplaxAction, V: Vertex) -> TwoCell:
    """``ψ: (1⊗𝕋⊗1);s ⇒ s`` from ``s²`` and ``s⁰``."""
    S, R = one(act.A), one(V.R)
    T1, _, _ = _monad(V)
    src = (S @ T1 @ R) >> act.a
    mid = (S @ V.adj.i @ R) >> ((S @ V.adj.istar @ R) >> act.a)
    x = paste(Iso(src, mid), (S @ V.adj.i @ R) >> act.a2, (act.a0 @ R) >> act.a)
    return evaluate(x).named(f"ψ({act.name})")


def module_laws(act: OplaxAction, V: Vertex, model: str | None = None):
    S, R = one(act.A), one(V.R)
    T1, unit, mult = _monad(V)
    p = psi(act, V)
    T = S @ T1 @ R
    l_unit = paste((S @ unit @ R) >> act.a, p)
    l_assoc = paste(T >> p, p)
    r_assoc = paste((S @ mult @ R) >> act.a, p)
    return [check_equation(cat.Equation("ψ-unit", l_unit, paste(act.a)), model=model),
            check_equation(cat.Equation("ψ-assoc", l_assoc, r_assoc), model=model)]


def check_ir_js(x: Simplex2, R: Vertex, S: Vertex, model: str | None = None):
    """``α`` is a map of modules for the monads of ``1⊗1⊗i∘⊗1 ⊣ 1⊗1⊗i°⊗1`` (IR) and of
    ``1⊗j∘⊗1⊗1 ⊣ 1⊗j°⊗1⊗1`` (JS)."""
    s, t, v = x.s, x.t, x.v
    T, Sx, Rx = one(t.A), one(S.R), one(R.R)
    TR1, _, _ = _monad(R)
    TS1, _, _ = _monad(S)
    ps, pt, pv = psi(s, R), psi(t, S), psi(v, R)
    pre_i = T @ Sx @ TR1 @ Rx
    ir_l = paste((T @ ps) >> t.a, x.alpha)
    ir_r = paste(pre_i >> x.alpha, (t.a @ Rx) >> pv)
    pre_j = T @ TS1 @ Sx @ Rx
    js_l = paste(pre_j >> x.alpha, (pt @ Rx) >> v.a)
    js_r = paste((T @ s.a) >> pt, x.alpha)
    return [check_equation(cat.Equation("IR", ir_l, ir_r), model=model),
            check_equation(cat.Equation("JS", js_l, js_r), model=model)]
