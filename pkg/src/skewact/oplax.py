"""Oplax actions over induced skew monoidales and their cells."""
from __future__ import annotations

from dataclasses import dataclass, replace

from . import catalog as cat
from .duality import Adjunction
from .kernel import Obj
from .pasting import Expr1, Iso, TwoCell, check_equation, diagram, evaluate, one, paste
from .skewmon import AltSkewMonoidale, induced

__all__ = ["OplaxAction", "ActionCell", "check_action", "check_action_cell",
           "regular_action", "underlying_action", "compose_cells", "identity_cell",
           "OLA", "OLA_CELL"]

OLA = ("OLA1", "OLA2", "OLA3")
OLA_CELL = ("OLA4", "OLA5")


@dataclass(frozen=True, eq=False)
class OplaxAction:
    """``a: A ⊗ M → A`` with ``a²: (1⊗m);a ⇒ (a⊗1);a`` and ``a⁰: (1⊗u);a ⇒ 1``."""
    A: Obj
    over: AltSkewMonoidale
    a: Expr1
    a2: TwoCell
    a0: TwoCell
    name: str = "a"
    target: Adjunction | None = None  # the 0-simplex structure on A

    @property
    def M(self):
        return self.over.M

    def same(self, other: "OplaxAction") -> bool:
        return (diagram(self.a).form == diagram(other.a).form
                and self.a2 == other.a2 and self.a0 == other.a0)

    def with_cells(self, **kw) -> "OplaxAction":
        return replace(self, **kw)


@dataclass(frozen=True, eq=False)
class ActionCell:
    src: OplaxAction
    dst: OplaxAction
    phi: TwoCell


def check_action(act: OplaxAction, model: str | None = None):
    b = act.over
    A, M, m, u = act.A, b.M, b.m, b.u
    lam = b.lam
    eqs = [cat.ola1(A, M, m, act.a, b.alpha, act.a2),
           cat.ola2(A, M, m, u, act.a, b.rho, act.a2, act.a0),
           cat.ola3(A, M, m, u, act.a, lam, act.a2, act.a0)]
    return [check_equation(e, model=model) for e in eqs]


def check_action_cell(c: ActionCell, model: str | None = None):
    b = c.src.over
    eqs = [cat.ola4(c.src.A, b.M, b.m, c.phi, c.src.a2, c.dst.a2),
           cat.ola5(c.src.A, b.u, c.phi, c.src.a0, c.dst.a0)]
    return [check_equation(e, model=model) for e in eqs]


def identity_cell(act: OplaxAction) -> ActionCell:
    return ActionCell(act, act, evaluate(paste(act.a)).named("id"))


def compose_cells(c: ActionCell, d: ActionCell) -> ActionCell:
    return ActionCell(c.src, d.dst, evaluate(paste(c.phi, d.phi)).named("φ•ψ"))


def regular_action(adj: Adjunction) -> OplaxAction:
    """``a = i*⊗1`` with identity-shaped ``a²`` and the ε-based unitor."""
    base = induced(adj)
    R = adj.R
    a = adj.istar @ one(R)
    a2 = evaluate(Iso((one(R) @ base.m) >> a, (a @ one(R)) >> a)).named("≅")
    return OplaxAction(R, base, a, a2, base.rho, name=f"reg({R.name},{adj.point})", target=adj)


def underlying_action(sm: AltSkewMonoidale) -> OplaxAction:
    """The product as an action over the induced base: ``a² = (1κ);m • α``."""
    base = induced(sm.adj)
    R = sm.M
    a2 = evaluate(paste((one(R) @ sm.kappa) >> sm.m, sm.alpha)).named("r²")
    return OplaxAction(R, base, sm.m, a2, sm.rho, name=f"r({sm.name})", target=sm.adj)
