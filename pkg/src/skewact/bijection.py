"""Monads of oplax actions and their correspondence with skew monoidales."""
from __future__ import annotations

from dataclasses import dataclass

from .duality import Adjunction
from .kernel import Obj
from .oplax import OplaxAction, check_action, regular_action, underlying_action
from .pasting import (Iso, Ten2, Id2, TwoCell, Verdict, diagram, evaluate,
                      one, paste)
from .simplicial import (E, Cc, Simplex2, Simplex3, catalan, check_simplex2,
                         check_simplex3, degeneracy3, faces2, faces3, s0_edge, s1_edge)
from .skewmon import AltSkewMonoidale

__all__ = ["Monad", "check_monad", "kappa_to_mu0", "mu0_to_kappa", "recovered_associator",
           "monad_to_skew", "skew_to_monad", "roundtrip_skew", "roundtrip_monad",
           "monad_simplices", "monad_map", "monad_from_map", "check_monad_map", "MONAD_AXIOMS"]

MONAD_AXIOMS = ("OLA1", "OLA2", "OLA3", "2SIM1(μ₂)", "2SIM2(μ₂)", "2SIM3(μ₂)",
                "2SIM1(μ₀)", "2SIM2(μ₀)", "2SIM3(μ₀)", "M1", "M2", "M3")


@dataclass(frozen=True, eq=False)
class Monad:
    """``r`` acts on ``R`` over the induced base; ``μ₂: (1⊗r);r ⇒ (r⊗1);r`` and
    ``μ₀: (1⊗(i*⊗1));(i*⊗1) ⇒ (i*⊗1⊗1);r``."""
    adj: Adjunction
    r: OplaxAction
    mu2: TwoCell
    mu0: TwoCell
    name: str = "monad"

    @property
    def R(self) -> Obj:
        return self.adj.R

    def same(self, other: "Monad") -> bool:
        return self.r.same(other.r) and self.mu2 == other.mu2 and self.mu0 == other.mu0


def _relabel(vs, names):
    return [Verdict(n, v.holds, v.detail) for v, n in zip(vs, names)]


def monad_simplices(mo: Monad):
    """The images of the two nondegenerate 2-simplices: ``(μ₀, μ₂)`` as 2-simplices."""
    reg = regular_action(mo.adj)
    return (Simplex2(reg, reg, mo.r, mo.mu0, name="μ₀"),
            Simplex2(mo.r, mo.r, mo.r, mo.mu2, name="μ₂"))


def _m_tetrahedra(mo: Monad):
    mu0, mu2 = monad_simplices(mo)
    s0r, s1r = s0_edge(mo.r), s1_edge(mo.r)
    return (Simplex3(mu2, mu2, mu2, mu2), Simplex3(mu0, s0r, mu2, s0r),
            Simplex3(s1r, mu2, s1r, mu0))


def check_monad(mo: Monad, model: str | None = None):
    out = check_action(mo.r, model)
    mu0, mu2 = monad_simplices(mo)
    out += _relabel(check_simplex2(mu2, model), MONAD_AXIOMS[3:6])
    out += _relabel(check_simplex2(mu0, model), MONAD_AXIOMS[6:9])
    for name, g in zip(("M1", "M2", "M3"), _m_tetrahedra(mo)):
        out += _relabel(check_simplex3(g, model), [name])
    return out


def kappa_to_mu0(kappa: TwoCell, adj: Adjunction) -> TwoCell:
    """``μ₀ = ≅ • (i*⊗1⊗1) ⋆ κ``."""
    R, istar = adj.R, adj.istar
    a = istar @ one(R)
    src = (one(R) @ a) >> a
    mid = (istar @ one(R) @ one(R)) >> a
    return evaluate(paste(Iso(src, mid), (istar @ one(R) @ one(R)) >> kappa)).named("μ₀")


def mu0_to_kappa(mu0: TwoCell, adj: Adjunction, r) -> TwoCell:
    """Insert ``η`` in the middle, apply ``μ₀`` and cancel with ``ε``."""
    R, i, istar = adj.R, adj.i, adj.istar
    x = paste(Ten2(Ten2(Id2(istar), adj.eta), Id2(one(R))),
              (one(R) @ i @ one(R)) >> mu0,
              (adj.eps @ one(R)) >> r)
    return evaluate(x).named("κ")


def recovered_associator(mo: Monad) -> TwoCell:
    kappa = mu0_to_kappa(mo.mu0, mo.adj, mo.r.a)
    return evaluate(paste((one(mo.R) @ kappa) >> mo.r.a, mo.mu2)).named("r²")


def monad_to_skew(mo: Monad) -> AltSkewMonoidale:
    kappa = mu0_to_kappa(mo.mu0, mo.adj, mo.r.a)
    return AltSkewMonoidale(mo.R, mo.adj, mo.r.a, mo.mu2.named("α"), kappa, mo.r.a0.named("ρ"),
                            name=f"skew({mo.name})")


def skew_to_monad(sm: AltSkewMonoidale) -> Monad:
    r = underlying_action(sm)
    return Monad(sm.adj, r, sm.alpha.named("μ₂"), kappa_to_mu0(sm.kappa, sm.adj),
                 name=f"monad({sm.name})")


def roundtrip_skew(sm: AltSkewMonoidale) -> dict:
    back = monad_to_skew(skew_to_monad(sm))
    d = diagram
    return {"m": d(back.m).form == d(sm.m).form, "α": back.alpha == sm.alpha,
            "κ": back.kappa == sm.kappa, "ρ": back.rho == sm.rho}


def roundtrip_monad(mo: Monad) -> dict:
    back = skew_to_monad(monad_to_skew(mo))
    d = diagram
    return {"r": d(back.r.a).form == d(mo.r.a).form, "r²": back.r.a2 == mo.r.a2,
            "r⁰": back.r.a0 == mo.r.a0, "μ₂": back.mu2 == mo.mu2, "μ₀": back.mu0 == mo.mu0}


# monads as maps out of the Catalan simplicial set ------------------------------------

def _edge_image(mo, lab):
    return mo.r if lab == Cc else regular_action(mo.adj)


def _tri_image(mo, lab):
    """Catalan 2-simplex ``(x01, x02, x12)`` to its 2-simplex of oplax actions."""
    x01, x02, x12 = lab
    mu0, mu2 = monad_simplices(mo)
    table = {(E, E, E): lambda: s0_edge(regular_action(mo.adj)),
             (E, Cc, E): lambda: mu0,
             (E, Cc, Cc): lambda: s0_edge(mo.r),
             (Cc, Cc, E): lambda: s1_edge(mo.r),
             (Cc, Cc, Cc): lambda: mu2}
    return table[(x01, x02, x12)]()


def _tet_image(mo, lab):
    # faces in (α, β, γ, ζ) order are the labelings on vertices 012, 013, 023, 123
    X = catalan(3)
    f = [X.face(3, k, lab) for k in (3, 2, 1, 0)]
    return Simplex3(*[_tri_image(mo, y) for y in f])


def monad_map(mo: Monad) -> dict:
    """The simplicial map from Catalan: level ``n`` labelings to their images."""
    X = catalan(3)
    return {0: {(): mo.adj},
            1: {lab: _edge_image(mo, lab[0]) for lab in X.levels[1]},
            2: {lab: _tri_image(mo, lab) for lab in X.levels[2]},
            3: {lab: _tet_image(mo, lab) for lab in X.levels[3]}}


def _same(a, b):
    if isinstance(a, Adjunction):
        return a is b
    return a.same(b)


def check_monad_map(fmap: dict, model: str | None = None) -> dict:
    """Face/degeneracy compatibility of a map out of Catalan, plus the axioms of its images."""
    X = catalan(3)
    faces_ok, degen_ok = True, True
    for n in (1, 2, 3):
        for lab, y in fmap[n].items():
            fs = {1: lambda y: (y.target, y.over.adj), 2: faces2, 3: faces3}[n](y)
            for i, f in enumerate(fs):
                faces_ok &= _same(f, fmap[n - 1][X.face(n, i, lab)])
    for lab, y in fmap[1].items():
        degen_ok &= _same(s0_edge(y), fmap[2][X.degen(1, 0, lab)])
        degen_ok &= _same(s1_edge(y), fmap[2][X.degen(1, 1, lab)])
    for lab, y in fmap[2].items():
        for j in range(3):
            degen_ok &= _same(degeneracy3(y, j), fmap[3][X.degen(2, j, lab)])
    sim2 = all(all(check_simplex2(y, model)) for y in fmap[2].values())
    sim3 = all(all(check_simplex3(g, model)) for g in fmap[3].values())
    edges = all(all(check_action(y, model)) for y in fmap[1].values())
    return {"faces": faces_ok, "degeneracies": degen_ok, "1-simplices": edges,
            "2-simplices": sim2, "3-simplices": sim3}


def monad_from_map(fmap: dict) -> Monad:
    """Read the monad off the images of ``c`` and the two nondegenerate 2-simplices."""
    adj = fmap[0][()]
    r = fmap[1][(Cc,)]
    return Monad(adj, r, fmap[2][(Cc, Cc, Cc)].alpha, fmap[2][(E, Cc, E)].alpha)
