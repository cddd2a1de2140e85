"""Committed data files and the script that regenerates them.

Run ``python -m skewact.fixtures`` to rebuild ``skewact/data``. Golden counts come from
the exhaustive Rel scans; each mutation fixture changes exactly one target index in one
2-cell of a valid structure, chosen so that the checker fails and the failing element
passes through the changed entry.
"""
from __future__ import annotations

import copy
import json
import os
import random
from pathlib import Path

__all__ = ["DATA", "data_path", "mutation_files", "regenerate", "mutate", "golden_counts"]

DATA = Path(__file__).resolve().parent / "data"


def data_path(name: str) -> str:
    return str(DATA / name)


def mutation_files() -> list:
    d = DATA / "mutations"
    return sorted(str(p) for p in d.glob("*.json")) if d.is_dir() else []


def _write(path: Path, doc: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1, ensure_ascii=False, sort_keys=False)
        fh.write("\n")


def _lookup(doc: dict, where: tuple) -> str:
    node = doc["structure"]
    for k in where:
        node = node[k]
    return node


def mutate(doc: dict, where: tuple, checker: str):
    """First single-index change to the cell bound at ``where`` that the checker rejects
    with the changed entry on the trace of the failing element."""
    from .checks import check_loaded
    from .fileio import SchemaError, load
    cell = _lookup(doc, where)
    maps = doc["cells2"][cell]["maps"]
    for entry in sorted(maps, key=lambda k: tuple(map(int, k.split("|")))):
        for pos, old in enumerate(maps[entry]):
            for new in range(4):
                if new == old:
                    continue
                bad = copy.deepcopy(doc)
                bad["cells2"][cell]["maps"][entry][pos] = new
                try:
                    ld = load(bad)
                except SchemaError:
                    continue
                tag = f"{cell}@{entry}"
                failed = [v for v in check_loaded(ld) if not v.holds]
                if any(tag in v.detail.get("trace_lhs", []) + v.detail.get("trace_rhs", [])
                       for v in failed):
                    bad["mutation"] = {"checker": checker, "cell": cell, "entry": entry,
                                       "position": pos, "was": old, "now": new,
                                       "fails": [v.name for v in failed]}
                    return bad
    return None


def _sources(seed: int):
    """(file stem, kind, value, dump options, mutated binding, checker label)."""
    from .bijection import monad_simplices, skew_to_monad, _m_tetrahedra
    from .fileio import Morphism2, OpmonMorphism
    from .oplax import OplaxAction, identity_cell
    from .opmon import P, Q, Q_morphism, transpose_cell
    from .samples import (opmon_tetrahedron, random_arrow, random_opmon_simplex2,
                          random_vertex, relabel_simplex2)
    from .skewmon import nonthin_examples, to_standard

    sm = nonthin_examples()[0]
    mo = skew_to_monad(sm)
    act = OplaxAction(sm.M, sm, sm.m, sm.alpha, sm.rho, name="self")  # M acting on itself
    mu0, mu2 = monad_simplices(mo)
    rng = random.Random(seed)
    while True:
        R, S, T = (random_vertex(rng, n) for n in "RST")
        if R.R.size == S.R.size == T.R.size == 2:
            break
    x = random_opmon_simplex2(rng, R, S, T, k_max=2)
    while max(max(g.card.values()) for g in (x.s.C.ref, x.t.C.ref)) < 2:
        x = random_opmon_simplex2(rng, R, S, T, k_max=2)
    x2, sg, ta, nu = relabel_simplex2(rng, x, R, S, T)
    y, y2 = P(x, S.b, T.b), P(x2, S.b, T.b)
    sh, th, nh = (transpose_cell(c, b) for c, b in ((sg, S.b), (ta, T.b), (nu, T.b)))
    q = Q(y, R, S, T)
    qm = Morphism2(q, Q(y2, R, S, T), Q_morphism(sh, R, S.R), Q_morphism(th, S, T.R),
                   Q_morphism(nh, R, T.R))
    U = random_vertex(rng, "U")
    g = opmon_tetrahedron(rng, [R, S, T, U])
    arrow, _ = random_arrow(rng, R, S)
    while max(arrow.C.ref.card.values()) < 2:
        arrow, _ = random_arrow(rng, R, S)
    verts = {"R": R, "S": S, "T": T}
    return [
        ("skewmon_alpha", "skewmon", sm, {}, ("alpha",), "SKM (alternative)"),
        ("skewmon_std_alpha", "skewmon", to_standard(sm), {}, ("alpha",), "SKM (standard)"),
        ("monad_mu2", "monad", mo, {}, ("mu2",), "monad axioms"),
        ("oplax_a2", "oplax", act, {}, ("a2",), "OLA1-3"),
        ("oplax_cell_phi", "oplax-cell", identity_cell(act), {}, ("phi",), "OLA4-5"),
        ("simplex2_alpha", "simplex2", mu2, {}, ("alpha",), "2SIM1-3"),
        ("simplex2_modules", "simplex2", q, {"vertices": verts}, ("s", "a2"),
         "2SIM1-3, ψ laws, IR/JS"),
        ("transposed_alpha", "simplex2", y, {}, ("alpha",), "A1-A3"),
        ("morphism2_sigma", "simplex2-morphism", qm, {}, ("sigma",), "2SIM4"),
        ("transposed_morphism_sigma", "simplex2-morphism", Morphism2(y, y2, sh, th, nh), {},
         ("sigma",), "A4"),
        ("simplex3_mu2", "simplex3", _m_tetrahedra(mo)[0], {}, ("alpha", "alpha"), "3SIM"),
        ("opmon_C2", "opmon", arrow, {}, ("C2",), "OM1-3"),
        ("opmon_cell_xi", "opmon-cell", x.as_cell(), {}, ("xi",), "OM4-5"),
        ("opmon_simplex2_alpha", "opmon-simplex2", x, {}, ("alpha",), "OM4-5 (2-simplex)"),
        ("opmon_morphism_sigma", "opmon-morphism", OpmonMorphism(x, x2, sg, ta, nu), {},
         ("sigma",), "OM6"),
        ("opmon_simplex3_gamma", "opmon-simplex3", g, {}, ("gamma", "alpha"), "OM7"),
    ]


def golden_counts(jobs: int = 1) -> dict:
    """The exhaustive Rel counts, keyed by kind and ``"size,point"``."""
    from .enumeration import SearchSpace, enumerate_structures
    counts = {"derivation": "skewact enumerate --golden (exhaustive Rel scans)",
              "skewmon": {}, "monad": {}, "oplaxaction": {}, "simplex2": {}}
    for n, p in ((1, 0), (2, 0), (2, 1)):
        for kind in ("skewmon", "monad"):
            counts[kind][f"{n},{p}"] = enumerate_structures(SearchSpace(n, p, kind), jobs)["count"]
    for kind in ("oplaxaction", "simplex2"):
        counts[kind]["2,0"] = enumerate_structures(SearchSpace(2, 0, kind), jobs)["count"]
    return counts


def regenerate(seed: int = 7, out: Path = DATA) -> list:
    from .catalog import catalog_json
    from .duality import point_adjunction
    from .fileio import dump
    from .kernel import Obj
    from .skewmon import induced

    written = []
    _write(out / "catalog.json", catalog_json())
    _write(out / "golden_counts.json", golden_counts())
    _write(out / "induced_size2.json",
           dump("skewmon", induced(point_adjunction(Obj("R", 2), 0))))
    mdir = out / "mutations"
    if mdir.is_dir():
        for old in mdir.glob("*.json"):
            old.unlink()
    for stem, kind, value, opts, where, label in _sources(seed):
        doc = dump(kind, value, **opts)
        bad = mutate(doc, where, label)
        if bad is None:
            raise RuntimeError(f"no locating mutation for {stem}")
        _write(mdir / f"{stem}.json", bad)
        written.append(stem)
    return written


if __name__ == "__main__":
    for stem in regenerate():
        print(stem)
    print(os.fspath(DATA))
