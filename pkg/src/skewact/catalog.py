"""Every axiom as a pair of 2-cell expressions.

Templates take objects, 1-cells and 2-cells as arguments. Arguments may be expressions
or plain names, so the same template serves concrete checks and the symbolic catalog
shipped in ``data/catalog.json``. Objects may be words (tuples), which is how the
enveloping variants are obtained from the generic ones.

Cell directions follow one fixed table::

    α : (1⊗m);m ⇒ (m⊗1);m          λ : 1 ⇒ (u⊗1);m         ρ : (1⊗u);m ⇒ 1
    κ : i*⊗1 ⇒ m                    a²: (1⊗m);a ⇒ (a⊗1);a   a⁰: (1⊗u);a ⇒ 1
    C²: m;C ⇒ (C⊗C);m'              C⁰: u;C ⇒ u'
    2-simplex: (1_T⊗s);t ⇒ (t⊗1_R);v     opmonoidal 2-simplex: s;t ⇒ v
    η : 1_I ⇒ i;i*                  ε : i*;i ⇒ 1
"""
from __future__ import annotations

from .kernel import Gen
from .pasting import (Equation, Expr1, Expr2, GenE, Hor, Id2, IdE, Ref2, paste, parse2,
                      show2)

__all__ = [
    "sim2_1", "sim2_2", "sim2_3", "sim2_4", "sim3", "skm1", "skm2p", "skm3p", "skm4",
    "skm5p", "skm2", "skm3", "skm5", "ola1", "ola2", "ola3", "ola4", "ola5", "om1", "om2",
    "om3", "om4", "om5", "om6", "om7", "symbolic_catalog", "catalog_json",
]


def _o(x) -> Expr1:
    if isinstance(x, Expr1):
        return x
    if isinstance(x, tuple):
        return IdE(x)
    return IdE((x,))


def _c(x) -> Expr1:
    if isinstance(x, Expr1):
        return x
    if isinstance(x, (str, Gen)):
        return GenE(x)
    raise TypeError(x)


def _k(x) -> Expr2:
    if isinstance(x, Expr2):
        return x
    if isinstance(x, str):
        return Ref2(x)
    raise TypeError(x)


# simplices ---------------------------------------------------------------

def sim2_1(T, S, R, s, t, v, alpha, mS, t2, name="2SIM1"):
    T, S, R = _o(T), _o(S), _o(R)
    s, t, v, mS = _c(s), _c(t), _c(v), _c(mS)
    alpha, t2 = _k(alpha), _k(t2)
    lhs = paste((T @ mS @ R) >> alpha, (t2 @ R) >> v)
    rhs = paste((T @ S @ s) >> t2, (t @ S @ R) >> alpha)
    return Equation(name, lhs, rhs)


def sim2_2(T, S, R, s, t, v, alpha, mR, s2, v2, name="2SIM2"):
    T, S, R = _o(T), _o(S), _o(R)
    s, t, v, mR = _c(s), _c(t), _c(v), _c(mR)
    alpha, s2, v2 = _k(alpha), _k(s2), _k(v2)
    lhs = paste((T @ s2) >> t, (T @ s @ R) >> alpha, (alpha @ R) >> v)
    rhs = paste((T @ S @ mR) >> alpha, (t @ R @ R) >> v2)
    return Equation(name, lhs, rhs)


def sim2_3(T, S, R, s, t, v, alpha, uR, s0, v0, name="2SIM3"):
    T, S = _o(T), _o(S)
    t, uR = _c(t), _c(uR)
    alpha, s0, v0 = _k(alpha), _k(s0), _k(v0)
    lhs = (T @ s0) >> t
    rhs = paste((T @ S @ uR) >> alpha, t >> v0)
    return Equation(name, lhs, rhs)


def sim2_4(T, R, sigma, tau, nu, alpha, alpha_, name="2SIM4"):
    """Naturality of a morphism ``(σ, τ, ν)`` of 2-simplices ``α → α'``."""
    T, R = _o(T), _o(R)
    sigma, tau, nu, alpha, alpha_ = map(_k, (sigma, tau, nu, alpha, alpha_))
    lhs = paste(Hor(T @ sigma, tau), alpha_)
    rhs = paste(alpha, Hor(tau @ R, nu))
    return Equation(name, lhs, rhs)


def sim3(U, T, S, R, s, t, u, x, w, alpha, beta, gamma, zeta, name="3SIM"):
    """Tetrahedron on ``R → S → T → U`` with ``s: S R → S``, ``t: T S → T``,
    ``u: U T → U``, ``v: T R → T``, ``x: U S → U``, ``w: U R → U``;
    ``α`` on (s,t,v), ``β`` on (s,x,w), ``γ`` on (v,u,w), ``ζ`` on (t,u,x)."""
    U, T, S, R = _o(U), _o(T), _o(S), _o(R)
    s, t, u, x, w = map(_c, (s, t, u, x, w))
    alpha, beta, gamma, zeta = map(_k, (alpha, beta, gamma, zeta))
    lhs = paste((U @ alpha) >> u, (U @ t @ R) >> gamma, (zeta @ R) >> w)
    rhs = paste((U @ T @ s) >> zeta, (u @ S @ R) >> beta)
    return Equation(name, lhs, rhs)


# skew monoidales -----------------------------------------------------------

def skm1(M, m, alpha):
    return sim3(M, M, M, M, m, m, m, m, m, alpha, alpha, alpha, alpha, name="SKM1")


def skm2p(M, m, i, istar, alpha, kappa, rho, eta):
    M, m, i, istar = _o(M), _c(m), _c(i), _c(istar)
    alpha, kappa, rho, eta = map(_k, (alpha, kappa, rho, eta))
    lhs = paste((M @ eta @ M) >> m, (M @ i @ M) >> ((M @ kappa) >> m),
                (M @ i @ M) >> alpha, (rho @ M) >> m)
    return Equation("SKM2'", lhs, Id2(m))


def skm3p(M, m, alpha, kappa):
    M, m = _o(M), _c(m)
    alpha, kappa = _k(alpha), _k(kappa)
    return Equation("SKM3'", (kappa @ M) >> m, paste((M @ m) >> kappa, alpha))


def skm4(M, m, u, alpha, rho):
    eq = sim2_3(M, M, M, m, m, m, alpha, u, rho, rho)
    return Equation("SKM4", eq.lhs, eq.rhs)


def skm5p(M, i, kappa, rho, eps):
    M, i = _o(M), _c(i)
    kappa, rho, eps = _k(kappa), _k(rho), _k(eps)
    return Equation("SKM5'", paste((M @ i) >> kappa, rho), eps)


def skm2(M, m, u, alpha, lam, rho):
    M, m, u = _o(M), _c(m), _c(u)
    alpha, lam, rho = _k(alpha), _k(lam), _k(rho)
    return Equation("SKM2", paste((M @ lam) >> m, (M @ u @ M) >> alpha, (rho @ M) >> m), Id2(m))


def skm3(M, m, u, alpha, lam):
    M, m, u = _o(M), _c(m), _c(u)
    alpha, lam = _k(alpha), _k(lam)
    return Equation("SKM3", (lam @ M) >> m, paste(m >> lam, (u @ M @ M) >> alpha))


def skm5(u, lam, rho):
    u = _c(u)
    lam, rho = _k(lam), _k(rho)
    return Equation("SKM5", paste(u >> lam, u >> rho), Id2(u))


# oplax actions -------------------------------------------------------------

def ola1(A, M, m, a, alpha, a2):
    return sim3(A, M, M, M, m, m, a, a, a, alpha, a2, a2, a2, name="OLA1")


def ola2(A, M, m, u, a, rho, a2, a0):
    eq = sim2_3(A, M, M, m, a, a, a2, u, rho, a0)
    return Equation("OLA2", eq.lhs, eq.rhs)


def ola3(A, M, m, u, a, lam, a2, a0):
    A, M, m, u, a = _o(A), _o(M), _c(m), _c(u), _c(a)
    lam, a2, a0 = _k(lam), _k(a2), _k(a0)
    return Equation("OLA3", paste((A @ lam) >> a, (A @ u @ M) >> a2, (a0 @ M) >> a), Id2(a))


def ola4(A, M, m, phi, a2, a2_):
    A, M, m = _o(A), _o(M), _c(m)
    phi, a2, a2_ = _k(phi), _k(a2), _k(a2_)
    return Equation("OLA4", paste((A @ m) >> phi, a2_), paste(a2, Hor(phi @ M, phi)))


def ola5(A, u, phi, a0, a0_):
    A, u = _o(A), _c(u)
    phi, a0, a0_ = _k(phi), _k(a0), _k(a0_)
    return Equation("OLA5", paste((A @ u) >> phi, a0_), a0)


# opmonoidal arrows ------------------------------------------------------------

def om1(M, m, alpha, N, mN, alphaN, Cc, C2):
    M, m, N, mN, Cc = _o(M), _c(m), _o(N), _c(mN), _c(Cc)
    alpha, alphaN, C2 = _k(alpha), _k(alphaN), _k(C2)
    lhs = paste(alpha >> Cc, (m @ M) >> C2, (C2 @ Cc) >> mN)
    rhs = paste((M @ m) >> C2, (Cc @ C2) >> mN, (Cc @ Cc @ Cc) >> alphaN)
    return Equation("OM1", lhs, rhs)


def om2(M, u, lam, mN, lamN, Cc, C2, C0):
    M, u, mN, Cc = _o(M), _c(u), _c(mN), _c(Cc)
    lam, lamN, C2, C0 = map(_k, (lam, lamN, C2, C0))
    lhs = paste(lam >> Cc, (u @ M) >> C2, (C0 @ Cc) >> mN)
    return Equation("OM2", lhs, Cc >> lamN)


def om3(M, u, rho, mN, rhoN, Cc, C2, C0):
    M, u, mN, Cc = _o(M), _c(u), _c(mN), _c(Cc)
    rho, rhoN, C2, C0 = map(_k, (rho, rhoN, C2, C0))
    rhs = paste((M @ u) >> C2, (Cc @ C0) >> mN, Cc >> rhoN)
    return Equation("OM3", rho >> Cc, rhs)


def om4(m, mN, xi, C2, C2_):
    m, mN = _c(m), _c(mN)
    xi, C2, C2_ = _k(xi), _k(C2), _k(C2_)
    return Equation("OM4", paste(m >> xi, C2_), paste(C2, (xi @ xi) >> mN))


def om5(u, xi, C0, C0_):
    u = _c(u)
    xi, C0, C0_ = _k(xi), _k(C0), _k(C0_)
    return Equation("OM5", paste(u >> xi, C0_), C0)


def om6(sigma, tau, nu, alpha, alpha_):
    sigma, tau, nu, alpha, alpha_ = map(_k, (sigma, tau, nu, alpha, alpha_))
    return Equation("OM6", paste(Hor(sigma, tau), alpha_), paste(alpha, nu))


def om7(s, u, alpha, beta, gamma, zeta):
    """``α: s;t ⇒ v``, ``β: s;x ⇒ w``, ``γ: v;u ⇒ w``, ``ζ: t;u ⇒ x``."""
    s, u = _c(s), _c(u)
    alpha, beta, gamma, zeta = map(_k, (alpha, beta, gamma, zeta))
    return Equation("OM7", paste(alpha >> u, gamma), paste(s >> zeta, beta))


# symbolic catalog ------------------------------------------------------------

def _renamed(eq: Equation, name: str) -> Equation:
    return Equation(name, eq.lhs, eq.rhs)


def symbolic_catalog() -> dict:
    """Every axiom over generic names; enveloping words are written ``Rd R`` etc."""
    eqs = [
        sim2_1("T", "S", "R", "s", "t", "v", "alpha", "mS", "t2"),
        sim2_2("T", "S", "R", "s", "t", "v", "alpha", "mR", "s2", "v2"),
        sim2_3("T", "S", "R", "s", "t", "v", "alpha", "uR", "s0", "v0"),
        sim2_4("T", "R", "sigma", "tau", "nu", "alpha", "alpha_"),
        sim3("U", "T", "S", "R", "s", "t", "u", "x", "w", "alpha", "beta", "gamma", "zeta"),
        skm1("M", "m", "alpha"),
        skm2p("M", "m", "i", "istar", "alpha", "kappa", "rho", "eta"),
        skm3p("M", "m", "alpha", "kappa"),
        skm4("M", "m", "i", "alpha", "rho"),
        skm5p("M", "i", "kappa", "rho", "eps"),
        skm2("M", "m", "u", "alpha", "lam", "rho"),
        skm3("M", "m", "u", "alpha", "lam"),
        skm5("u", "lam", "rho"),
        ola1("A", "M", "m", "a", "alpha", "a2"),
        ola2("A", "M", "m", "u", "a", "rho", "a2", "a0"),
        ola3("A", "M", "m", "u", "a", "lam", "a2", "a0"),
        ola4("A", "M", "m", "phi", "a2", "a2_"),
        ola5("A", "u", "phi", "a0", "a0_"),
        om1("M", "m", "alpha", "N", "mN", "alphaN", "C", "C2"),
        om2("M", "u", "lam", "mN", "lamN", "C", "C2", "C0"),
        om3("M", "u", "rho", "mN", "rhoN", "C", "C2", "C0"),
        om4("m", "mN", "xi", "C2", "C2_"),
        om5("u", "xi", "C0", "C0_"),
        om6("sigma", "tau", "nu", "alpha", "alpha_"),
        om7("s", "u", "alpha", "beta", "gamma", "zeta"),
    ]
    env = ("Sd", "S")
    renv = ("Rd", "R")
    tenv = ("Td", "T")
    # an action on S over the enveloping base enters the simplex laws as 1_Sd ⊗ s
    ws, wt = _o("Sd") @ _c("s"), _o("Td") @ _c("t")
    w2, w0 = _o("Sd") @ _k("s2"), _o("Sd") @ _k("s0")
    eqs += [
        _renamed(sim2_1("T", env, renv, ws, "t", "v", "alpha", "eS", "t2"), "A1"),
        _renamed(sim2_2("T", env, renv, ws, "t", "v", "alpha", "eR", w2, "v2"), "A2"),
        _renamed(sim2_3("T", env, renv, ws, "t", "v", "alpha", "nR", w0, "v0"), "A3"),
        _renamed(sim2_4("T", renv, _o("Sd") @ _k("sigma"), "tau", "nu", "alpha", "alpha_"), "A4"),
        _renamed(sim3("U", tenv, env, renv, ws, wt, "u", "x", "w",
                      _o("Td") @ _k("alpha"), "beta", "gamma", "zeta"), "A5"),
        _renamed(sim3("R", "R", "R", "R", "r", "r", "r", "r", "r", "mu2", "mu2", "mu2", "mu2"), "M1"),
        _renamed(sim3("R", "R", "R", "R", "a", "a", "r", "r", "r", "mu0", "r2", "mu2", "r2"), "M2"),
        _renamed(sim3("R", "R", "R", "R", "r", "a", "a", "r", "r", "iso1", "mu2", "iso1", "mu0"), "M3"),
    ]
    return {e.name: e for e in eqs}


def _names2(x, acc):
    if isinstance(x, Ref2):
        acc.add(x.name)
    for f in ("a", "b"):
        y = getattr(x, f, None)
        if isinstance(y, Expr2):
            _names2(y, acc)
    return acc


def catalog_json() -> dict:
    out = {}
    for name, eq in symbolic_catalog().items():
        cells = sorted(_names2(eq.lhs, set()) | _names2(eq.rhs, set()))
        out[name] = {"lhs": show2(eq.lhs), "rhs": show2(eq.rhs), "cells2": cells}
    return out


def parse_entry(entry: dict) -> Equation:
    return Equation(entry.get("name", "?"), parse2(entry["lhs"], entry["cells2"]),
                    parse2(entry["rhs"], entry["cells2"]))
