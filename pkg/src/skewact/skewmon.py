"""Right skew monoidales: both presentations, standard examples and the axiom checkers."""
from __future__ import annotations

from dataclasses import dataclass, replace

from . import catalog as cat
from .duality import Adjunction, Biduality, mate_lambda_kappa, point_adjunction
from .kernel import Gen, Obj
from .pasting import (Expr1, IdE, Iso, TwoCell, G, check_equation, diagram, evaluate,
                      one, paste, unique_cell)

__all__ = ["SkewMonoidale", "AltSkewMonoidale", "induced", "enveloping", "from_monoid",
           "xor_monoid", "to_alt", "to_standard", "check_alt", "check_standard",
           "is_monoidale", "ob", "SKM_ALT", "SKM_STD", "all_monoids", "nonthin_examples"]

SKM_ALT = ("SKM1", "SKM2'", "SKM3'", "SKM4", "SKM5'")
SKM_STD = ("SKM1", "SKM2", "SKM3", "SKM4", "SKM5")


def ob(M) -> IdE:
    """Identity on an object or a word of objects."""
    return IdE(tuple(M)) if isinstance(M, tuple) else IdE((M,))


@dataclass(frozen=True, eq=False)
class SkewMonoidale:
    M: object  # Obj or tuple of Obj
    m: Expr1
    u: Expr1
    alpha: TwoCell
    lam: TwoCell
    rho: TwoCell
    name: str = "M"


@dataclass(frozen=True, eq=False)
class AltSkewMonoidale:
    M: Obj
    adj: Adjunction
    m: Expr1
    alpha: TwoCell
    kappa: TwoCell
    rho: TwoCell
    name: str = "M"

    @property
    def u(self):
        return self.adj.i

    @property
    def lam(self) -> TwoCell:
        return mate_lambda_kappa("kappa->lambda", self.kappa, self.adj, self.m)

    def same(self, other: "AltSkewMonoidale") -> bool:
        """Exact equality of all data after normalization."""
        d = diagram
        return (d(self.m).form == d(other.m).form and d(self.u).form == d(other.u).form
                and self.alpha == other.alpha and self.kappa == other.kappa
                and self.rho == other.rho)


def _iso(a, b, name=None) -> TwoCell:
    return evaluate(Iso(a, b)).named(name)


def induced(adj: Adjunction) -> AltSkewMonoidale:
    """Product ``i*⊗1``, unit ``i``, identity-shaped associator and κ, ε-based ρ."""
    R, i, istar = adj.R, adj.i, adj.istar
    m = istar @ one(R)
    alpha = _iso((one(R) @ m) >> m, (m @ one(R)) >> m, "α")
    kappa = evaluate(paste(m)).named("κ")
    rho = evaluate(paste(Iso((one(R) @ i) >> m, istar >> i), adj.eps)).named("ρ")
    return AltSkewMonoidale(R, adj, m, alpha, kappa, rho, name=f"induced({R.name},{adj.point})")


def enveloping(b: Biduality) -> SkewMonoidale:
    """The monoidale on ``R° R`` with product ``1⊗e⊗1`` and unit ``n``."""
    W = (b.Rdual, b.R)
    m = one(b.Rdual) @ G(b.e) @ one(b.R)
    u = G(b.n)
    M = ob(W)
    alpha = _iso((M @ m) >> m, (m @ M) >> m, "α")
    lam = _iso(M, (u @ M) >> m, "λ")
    rho = _iso((M @ u) >> m, M, "ρ")
    return SkewMonoidale(W, m, u, alpha, lam, rho, name=f"{b.Rdual.name}{b.R.name}")


def from_monoid(table, unit: int, name: str = "Mon") -> AltSkewMonoidale:
    """A finite monoid as a monoidale over its unit point; all cells are unique."""
    k = len(table)
    M = Obj(name, k)
    mg = Gen(f"m[{name}]", (M, M), (M,), {((a, b), (table[a][b],)): 1
                                          for a in range(k) for b in range(k)})
    m = G(mg)
    adj = point_adjunction(M, unit)
    u = adj.i
    X = one(M)
    alpha = unique_cell((X @ m) >> m, (m @ X) >> m, name="α")
    lam = unique_cell(X, (u @ X) >> m, name="λ")
    rho = unique_cell((X @ u) >> m, X, name="ρ")
    kappa = mate_lambda_kappa("lambda->kappa", lam, adj, m).named("κ")
    return AltSkewMonoidale(M, adj, m, alpha, kappa, rho, name=name)


def xor_monoid() -> AltSkewMonoidale:
    return from_monoid([[0, 1], [1, 0]], 0, name="Xor")


def all_monoids(max_size: int = 3):
    """Every monoid table of size ``1..max_size`` with unit 0 (not up to isomorphism)."""
    from itertools import product
    out = []
    for k in range(1, max_size + 1):
        free = [(a, b) for a in range(1, k) for b in range(1, k)]
        for vals in product(range(k), repeat=len(free)):
            t = [[0] * k for _ in range(k)]
            for a in range(k):
                t[0][a] = t[a][0] = a
            for (a, b), v in zip(free, vals):
                t[a][b] = v
            if all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(k) for b in range(k) for c in range(k)):
                out.append(t)
    return out


def to_alt(sm: SkewMonoidale, adj: Adjunction) -> AltSkewMonoidale:
    if diagram(sm.u).form != diagram(adj.i).form:
        raise ValueError("the unit is not the left adjoint of the given adjunction")
    kappa = mate_lambda_kappa("lambda->kappa", sm.lam, adj, sm.m).named("κ")
    return AltSkewMonoidale(sm.M, adj, sm.m, sm.alpha, kappa, sm.rho, sm.name)


def to_standard(alt: AltSkewMonoidale) -> SkewMonoidale:
    return SkewMonoidale(alt.M, alt.m, alt.u, alt.alpha, alt.lam.named("λ"), alt.rho, alt.name)


def check_alt(alt: AltSkewMonoidale, model: str | None = None):
    M, m, a = alt.M, alt.m, alt.adj
    eqs = [cat.skm1(M, m, alt.alpha),
           cat.skm2p(M, m, a.i, a.istar, alt.alpha, alt.kappa, alt.rho, a.eta),
           cat.skm3p(M, m, alt.alpha, alt.kappa),
           cat.skm4(M, m, a.i, alt.alpha, alt.rho),
           cat.skm5p(M, a.i, alt.kappa, alt.rho, a.eps)]
    return [check_equation(e, model=model) for e in eqs]


def check_standard(sm: SkewMonoidale, model: str | None = None):
    M = ob(sm.M)
    eqs = [cat.skm1(M, sm.m, sm.alpha),
           cat.skm2(M, sm.m, sm.u, sm.alpha, sm.lam, sm.rho),
           cat.skm3(M, sm.m, sm.u, sm.alpha, sm.lam),
           cat.skm4(M, sm.m, sm.u, sm.alpha, sm.rho),
           cat.skm5(sm.u, sm.lam, sm.rho)]
    return [check_equation(e, model=model) for e in eqs]


def is_monoidale(sm) -> bool:
    return all(c.is_invertible() for c in (sm.alpha, sm.lam, sm.rho))


def with_cells(alt: AltSkewMonoidale, **cells) -> AltSkewMonoidale:
    return replace(alt, **cells)


# (α images on the four elements, κ image) found by exhaustive search on a one-point object
# whose product has two parallel elements
_NONTHIN = (((0, 0, 2, 3), 1), ((0, 1, 3, 2), 0), ((0, 1, 3, 3), 0), ((1, 0, 2, 3), 1))


def nonthin_examples():
    """Skew monoidales on a one-point object with a two-element product; α and κ are not forced."""
    from .pasting import cell_from_maps
    R = Obj("N", 1)
    adj = point_adjunction(R, 0)
    X = one(R)
    out = []
    for k, (f, kk) in enumerate(_NONTHIN):
        m = G(Gen(f"m[N{k}]", (R, R), (R,), {((0, 0), (0,)): 2}))
        alpha = cell_from_maps((X @ m) >> m, (m @ X) >> m, {(0, 0): list(f)}, name="α")
        kappa = cell_from_maps(adj.istar @ X, m, {(0, 0): [kk]}, name="κ")
        rho = unique_cell((X @ adj.i) >> m, X, name="ρ")
        out.append(AltSkewMonoidale(R, adj, m, alpha, kappa, rho, name=f"nonthin{k}"))
    return out
