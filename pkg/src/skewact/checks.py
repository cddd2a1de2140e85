"""Dispatch from a loaded structure file to its axiom checkers."""
from __future__ import annotations

from .bijection import check_monad
from .fileio import Loaded
from .oplax import check_action, check_action_cell
from .opmon import (check_arrow, check_ir_js, check_om6, check_om7, check_opmon_cell,
                    check_opmon_simplex2, check_transposed, check_transposed3,
                    check_transposed_morphism, module_laws)
from .simplicial import check_morphism2, check_simplex2, check_simplex3
from .skewmon import AltSkewMonoidale, check_alt, check_standard

__all__ = ["check_loaded", "enveloping_base"]


def enveloping_base(act) -> bool:
    """Actions of ``S°S`` carry a two-object word as base."""
    return isinstance(act.M, tuple) and len(act.M) == 2


def _simplex2(x, verts):
    if enveloping_base(x.t):
        return check_transposed(x)
    out = check_simplex2(x)
    R, S = verts.get("R"), verts.get("S")
    if R is not None and S is not None:
        for act, V in ((x.s, R), (x.t, S), (x.v, R)):
            out += [type(v)(f"{v.name}({act.name})", v.holds, v.detail)
                    for v in module_laws(act, V)]
        out += check_ir_js(x, R, S)
    return out


def check_loaded(ld: Loaded) -> list:
    """Every verdict applicable to the structure, in a fixed order."""
    v, kind = ld.value, ld.kind
    if kind == "skewmon":
        return check_alt(v) if isinstance(v, AltSkewMonoidale) else check_standard(v)
    if kind == "oplax":
        return check_action(v)
    if kind == "oplax-cell":
        return check_action_cell(v)
    if kind == "monad":
        return check_monad(v)
    if kind == "simplex2":
        return _simplex2(v, ld.vertices)
    if kind == "simplex2-morphism":
        if enveloping_base(v.x.t):
            return check_transposed_morphism(v.x, v.y, v.sigma, v.tau, v.nu)
        return check_morphism2(v.x, v.y, v.sigma, v.tau, v.nu)
    if kind == "simplex3":
        return (check_transposed3(v) if enveloping_base(v.alpha.t) else check_simplex3(v))
    if kind == "opmon":
        return check_arrow(v)
    if kind == "opmon-cell":
        return check_opmon_cell(v)
    if kind == "opmon-simplex2":
        return check_opmon_simplex2(v)
    if kind == "opmon-morphism":
        return check_om6(v.x, v.y, v.sigma, v.tau, v.nu)
    if kind == "opmon-simplex3":
        return check_om7(v)
    raise ValueError(kind)
