"""Bidualities, point adjunctions, opposite adjunctions, mates and transposition."""
from __future__ import annotations

from dataclasses import dataclass

from . import kernel as K
from .kernel import Obj, Gen, BoundaryError
from .pasting import (Expr1, TwoCell, G, one, unit, paste, evaluate, unique_cell,
                      infer_boundary, diagram, Iso, Expr2)

__all__ = ["Biduality", "Adjunction", "canonical_biduality", "point_adjunction",
           "opposite_adjunction", "mate_lambda_kappa", "transpose", "loop_count",
           "dual_object", "triangle_identities", "snake_identities"]


def dual_object(R: Obj) -> Obj:
    return Obj(R.name + "°", R.size)


@dataclass(frozen=True, eq=False)
class Biduality:
    R: Obj
    Rdual: Obj
    n: Gen  # I -> Rdual R
    e: Gen  # R Rdual -> I


@dataclass(frozen=True, eq=False)
class Adjunction:
    R: Obj
    i: Expr1      # I -> R
    istar: Expr1  # R -> I
    eta: TwoCell  # 1_I => i ; istar
    eps: TwoCell  # istar ; i => 1_R
    point: int | None = None


def canonical_biduality(R: Obj, dual: Obj | None = None) -> Biduality:
    """``n`` and ``e`` are the diagonal matrices; ``dual`` defaults to a fresh ``R°``."""
    D = dual or dual_object(R)
    if D.size != R.size:
        raise BoundaryError("a bidual must have the same size")
    n = Gen(f"n[{R.name}]", (), (D, R), {((), (a, a)): 1 for a in range(R.size)})
    e = Gen(f"e[{R.name}]", (R, D), (), {((a, a), ()): 1 for a in range(R.size)})
    K.pair_snake(n, e)
    return Biduality(R, D, n, e)


def snake_identities(b: Biduality) -> tuple[bool, bool]:
    R, D = b.R, b.Rdual
    z1 = (one(R) @ G(b.n)) >> (G(b.e) @ one(R))
    z2 = (G(b.n) @ one(D)) >> (one(D) @ G(b.e))
    return diagram(z1).form == diagram(one(R)).form, diagram(z2).form == diagram(one(D)).form


def loop_count(b: Biduality) -> int:
    """Cardinality of the closed loop obtained by feeding both outputs of ``n`` into ``e``."""
    src = ()
    boxes = (b.n, b.e)
    d = K.Diagram(src, (), boxes, ((), (1, 0)), ())
    return d.card((), ())


def point_adjunction(R: Obj, p: int) -> Adjunction:
    if not 0 <= p < R.size:
        raise ValueError(f"point {p} out of range for {R.name}")
    i = Gen(f"i[{R.name}]", (), (R,), {((), (p,)): 1})
    istar = Gen(f"i*[{R.name}]", (R,), (), {((p,), ()): 1})
    eta = unique_cell(unit, G(i) >> G(istar), name="η")
    eps = unique_cell(G(istar) >> G(i), one(R), name="ε")
    return Adjunction(R, G(i), G(istar), eta, eps, p)


def triangle_identities(adj: Adjunction) -> tuple[bool, bool]:
    i, s = adj.i, adj.istar
    t1 = evaluate(paste(adj.eta >> i, i >> adj.eps))
    t2 = evaluate(paste(s >> adj.eta, adj.eps >> s))
    id1 = evaluate(paste(i))
    id2 = evaluate(paste(s))
    return (K.equal2(t1.value, id1.value)[0], K.equal2(t2.value, id2.value)[0])


def opposite_adjunction(adj: Adjunction, b: Biduality) -> Adjunction:
    """``i∘ = n ; (1 ⊗ i*)`` and ``i° = (i ⊗ 1) ; e`` on the bidual."""
    if adj.R != b.R:
        raise BoundaryError("adjunction and biduality live on different objects")
    D = b.Rdual
    ic = G(b.n) >> (one(D) @ adj.istar)
    id_ = (adj.i @ one(D)) >> G(b.e)
    eta = evaluate(paste(adj.eta, Iso(adj.i >> adj.istar, ic >> id_))).named("η∘")
    # i° ; i∘ has the shape of (n ⊗ 1) ; (1 ⊗ i* ; i ⊗ 1) ; (1 ⊗ e), i.e. a snake around ε
    outer = (G(b.n) @ one(D)) >> ((one(D) @ (adj.eps @ one(D))) >> (one(D) @ G(b.e)))
    eps = evaluate(paste(Iso(id_ >> ic, infer_boundary(outer)[0]), outer, Iso(
        infer_boundary(outer)[1], one(D)))).named("ε∘")
    return Adjunction(D, ic, id_, eta, eps, adj.point)


def mate_lambda_kappa(direction: str, cell: TwoCell, adj: Adjunction, m: Expr1) -> TwoCell:
    """λ: 1 ⇒ (i ⊗ 1) ; m  and  κ: (i* ⊗ 1) ⇒ m  correspond under i ⊗ 1 ⊣ i* ⊗ 1."""
    R = adj.R
    if direction in ("lambda->kappa", "λ→κ"):
        x = paste((adj.istar @ one(R)) >> cell, (adj.eps @ one(R)) >> m)
        return evaluate(x).named("κ")
    if direction in ("kappa->lambda", "κ→λ"):
        x = paste(adj.eta @ one(R), (adj.i @ one(R)) >> cell)
        return evaluate(x).named("λ")
    raise ValueError(direction)


def transpose(f, b: Biduality, direction: str):
    """Move the dual object across.

    ``out``: ``g: X -> S° Y`` becomes ``(1_S ⊗ g) ; (e ⊗ 1_Y): S X -> Y``.
    ``in``: ``h: S X -> Y`` becomes ``(n ⊗ 1_X) ; (1_S° ⊗ h): X -> S° Y``.
    Works on 1-cell expressions and on 2-cells (by whiskering)."""
    S, D = b.R, b.Rdual
    if isinstance(f, Expr2):
        s, d = infer_boundary(f)
        ws = diagram(s)
        if direction == "out":
            X, Y = ws.src, ws.dst[1:]
            if not ws.dst or ws.dst[0] != D:
                raise BoundaryError("out-transpose needs a target starting with the dual")
            return evaluate((one(S) @ f) >> (G(b.e) @ one(*Y)))
        X, Y = ws.src[1:], ws.dst
        if not ws.src or ws.src[0] != S:
            raise BoundaryError("in-transpose needs a source starting with the object")
        return evaluate((G(b.n) @ one(*X)) >> (one(D) @ f))
    w = diagram(f)
    if direction == "out":
        if not w.dst or w.dst[0] != D:
            raise BoundaryError(f"out-transpose needs a target starting with {D.name}")
        return (one(S) @ f) >> (G(b.e) @ one(*w.dst[1:]))
    if direction == "in":
        if not w.src or w.src[0] != S:
            raise BoundaryError(f"in-transpose needs a source starting with {S.name}")
        return (G(b.n) @ one(*w.src[1:])) >> (one(D) @ f)
    raise ValueError(direction)
