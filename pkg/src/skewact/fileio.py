"""Structure files: a hermetic JSON environment plus a structure binding.

Layout::

    {"model": "finmat" | "rel",
     "objects": {name: {"size": n}},
     "cells1": {name: {"src": [obj...], "dst": [obj...], "card": {"x|y": k}, "snake": partner?}},
     "cells2": {name: {"srcCell": expr, "dstCell": expr, "maps": {"x|y": [targets...]}}},
     "structure": {"kind": ..., bindings...}}

``x`` and ``y`` are row-major flat indices into the source and target words. In
``maps`` the i-th element of a source entry goes to the listed position of the
(sorted) target entry. ``snake`` marks ``n: I → D R`` as paired with ``e: R D → I``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import kernel as K
from .bijection import Monad
from .duality import Adjunction, Biduality
from .kernel import Gen, ModelError, Obj
from .opmon import OpmonArrow, OpmonCell, OpmonSimplex2, OpmonSimplex3, Vertex
from .oplax import ActionCell, OplaxAction
from .pasting import (Expr1, GenE, IdE, SeqE, TenE, TwoCell, close1, diagram, parse1)
from .simplicial import Simplex2, Simplex3
from .skewmon import AltSkewMonoidale, SkewMonoidale

__all__ = ["SchemaError", "Loaded", "load", "load_file", "dump", "dump_file", "KINDS",
           "Morphism2", "OpmonMorphism"]

KINDS = ("skewmon", "oplax", "oplax-cell", "opmon", "opmon-cell", "monad", "simplex2",
         "simplex2-morphism", "simplex3", "opmon-simplex2", "opmon-morphism", "opmon-simplex3")


class SchemaError(ValueError):
    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


@dataclass(frozen=True, eq=False)
class Morphism2:
    """``(σ, τ, ν)`` between two 2-simplices."""
    x: Simplex2
    y: Simplex2
    sigma: TwoCell
    tau: TwoCell
    nu: TwoCell


@dataclass(frozen=True, eq=False)
class OpmonMorphism:
    x: OpmonSimplex2
    y: OpmonSimplex2
    sigma: TwoCell
    tau: TwoCell
    nu: TwoCell


@dataclass
class Loaded:
    kind: str
    model: str
    value: object
    vertices: dict  # name -> Vertex, for ψ and IR/JS on simplex2 files
    raw: dict


# reading -------------------------------------------------------------------------

def _need(d, key, path, typ=None):
    if not isinstance(d, dict):
        raise SchemaError(path, "expected an object")
    if key not in d:
        raise SchemaError(f"{path}.{key}", "missing")
    v = d[key]
    if typ is not None and not isinstance(v, typ):
        raise SchemaError(f"{path}.{key}", f"expected {typ.__name__ if isinstance(typ, type) else typ}")
    return v


def _pair(text, path):
    m = re.fullmatch(r"\s*(\d+)\s*\|\s*(\d+)\s*", str(text))
    if not m:
        raise SchemaError(path, "keys must look like 'x|y'")
    return int(m.group(1)), int(m.group(2))


def _flat_range(word, idx, path):
    total = 1
    for o in word:
        total *= o.size
    if not 0 <= idx < total:
        raise SchemaError(path, f"index {idx} out of range (0..{total - 1})")
    return K.unflat_index(word, idx)


class _Reader:
    def __init__(self, doc: dict):
        self.doc = doc
        self.model = doc.get("model", "finmat")
        if self.model not in ("finmat", "rel"):
            raise SchemaError("$.model", "must be 'finmat' or 'rel'")
        self.env: dict = {}
        self._objects()
        self._cells1()
        self._cells2()

    def _objects(self):
        objs = _need(self.doc, "objects", "$", dict)
        for name, spec in objs.items():
            p = f"$.objects.{name}"
            size = _need(spec, "size", p, int)
            if size < 1:
                raise SchemaError(f"{p}.size", "must be positive")
            self.env[name] = Obj(name, size)

    def _word(self, names, path):
        if not isinstance(names, list):
            raise SchemaError(path, "expected a list of object names")
        out = []
        for i, n in enumerate(names):
            if not isinstance(self.env.get(n), Obj):
                raise SchemaError(f"{path}[{i}]", f"unknown object {n!r}")
            out.append(self.env[n])
        return tuple(out)

    def _cells1(self):
        cells = self.doc.get("cells1", {})
        if not isinstance(cells, dict):
            raise SchemaError("$.cells1", "expected an object")
        pending = []
        for name, spec in cells.items():
            p = f"$.cells1.{name}"
            if name in self.env:
                raise SchemaError(p, "name already used")
            src = self._word(_need(spec, "src", p), f"{p}.src")
            dst = self._word(_need(spec, "dst", p), f"{p}.dst")
            card = {}
            for key, k in _need(spec, "card", p, dict).items():
                kp = f"{p}.card.{key}"
                x, y = _pair(key, kp)
                if not isinstance(k, int) or k < 0:
                    raise SchemaError(kp, "cardinality must be a non-negative integer")
                card[(_flat_range(src, x, kp), _flat_range(dst, y, kp))] = k
            self.env[name] = Gen(name, src, dst, card)
            if "snake" in spec:
                pending.append((name, spec["snake"], f"{p}.snake"))
        for n, e, p in pending:
            if not isinstance(self.env.get(e), Gen):
                raise SchemaError(p, f"unknown partner {e!r}")
            try:
                K.pair_snake(self.env[n], self.env[e])
            except K.BoundaryError as err:
                raise SchemaError(p, str(err)) from None

    def expr1(self, text, path) -> Expr1:
        if not isinstance(text, str):
            raise SchemaError(path, "expected a 1-cell expression string")
        try:
            e = close1(parse1(text), self.env)
            diagram(e)
        except (ValueError, K.BoundaryError) as err:
            raise SchemaError(path, str(err)) from None
        return e

    def _cells2(self):
        from .pasting import cell_from_maps, unique_cell
        cells = self.doc.get("cells2", {})
        if not isinstance(cells, dict):
            raise SchemaError("$.cells2", "expected an object")
        self.cells2 = {}
        for name, spec in cells.items():
            p = f"$.cells2.{name}"
            src = self.expr1(_need(spec, "srcCell", p), f"{p}.srcCell")
            dst = self.expr1(_need(spec, "dstCell", p), f"{p}.dstCell")
            ds, dd = diagram(src), diagram(dst)
            if ds.src != dd.src or ds.dst != dd.dst:
                raise SchemaError(p, "srcCell and dstCell are not parallel")
            if self.model == "rel" and "maps" not in spec:
                try:
                    self.cells2[name] = unique_cell(src, dst, name=name, model="rel")
                except ModelError as err:
                    raise SchemaError(p, str(err)) from None
                continue
            maps = {}
            for key, v in _need(spec, "maps", p, dict).items():
                kp = f"{p}.maps.{key}"
                x, y = _pair(key, kp)
                _flat_range(ds.src, x, kp)
                _flat_range(ds.dst, y, kp)
                if not isinstance(v, list) or not all(isinstance(j, int) for j in v):
                    raise SchemaError(kp, "expected a list of target indices")
                xs, ys = K.unflat_index(ds.src, x), K.unflat_index(ds.dst, y)
                have = len(ds.entries.get((xs, ys), ()))
                if len(v) != have:
                    raise SchemaError(kp, f"expected {have} targets, got {len(v)}")
                room = len(dd.entries.get((xs, ys), ()))
                for j in v:
                    if not 0 <= j < room:
                        raise SchemaError(kp, f"target index {j} out of range (entry has {room})")
                maps[(x, y)] = v
            for (xs, ys), ks in ds.entries.items():
                fx, fy = K.flat_index(ds.src, xs), K.flat_index(ds.dst, ys)
                if (fx, fy) not in maps:
                    raise SchemaError(f"{p}.maps", f"missing entry '{fx}|{fy}'")
            c = cell_from_maps(src, dst, maps, name=name)
            if self.model == "rel":
                from .pasting import to_rel
                c = to_rel(c)
            self.cells2[name] = c

    def cell(self, d, key, path) -> TwoCell:
        name = _need(d, key, path, str)
        if name not in self.cells2:
            raise SchemaError(f"{path}.{key}", f"unknown 2-cell {name!r}")
        return self.cells2[name]

    def obj(self, d, key, path):
        v = _need(d, key, path)
        if isinstance(v, list):
            return self._word(v, f"{path}.{key}")
        if not isinstance(self.env.get(v), Obj):
            raise SchemaError(f"{path}.{key}", f"unknown object {v!r}")
        return self.env[v]

    # bindings

    def adj(self, d, path) -> Adjunction:
        return Adjunction(self.obj(d, "R", path), self.expr1(_need(d, "i", path), f"{path}.i"),
                          self.expr1(_need(d, "istar", path), f"{path}.istar"),
                          self.cell(d, "eta", path), self.cell(d, "eps", path), d.get("point"))

    def skew(self, d, path):
        if "kappa" in d:
            return AltSkewMonoidale(self.obj(d, "M", path), self.adj(_need(d, "adj", path), f"{path}.adj"),
                                    self.expr1(_need(d, "m", path), f"{path}.m"),
                                    self.cell(d, "alpha", path), self.cell(d, "kappa", path),
                                    self.cell(d, "rho", path), d.get("name", "M"))
        M = self.obj(d, "M", path)
        return SkewMonoidale(M, self.expr1(_need(d, "m", path), f"{path}.m"),
                             self.expr1(_need(d, "u", path), f"{path}.u"),
                             self.cell(d, "alpha", path), self.cell(d, "lam", path),
                             self.cell(d, "rho", path), d.get("name", "M"))

    def oplax(self, d, path) -> OplaxAction:
        tgt = self.adj(d["target"], f"{path}.target") if "target" in d else None
        return OplaxAction(self.obj(d, "A", path), self.skew(_need(d, "base", path), f"{path}.base"),
                           self.expr1(_need(d, "a", path), f"{path}.a"), self.cell(d, "a2", path),
                           self.cell(d, "a0", path), d.get("name", "a"), tgt)

    def simplex2(self, d, path) -> Simplex2:
        return Simplex2(*(self.oplax(_need(d, k, path), f"{path}.{k}") for k in "stv"),
                        self.cell(d, "alpha", path))

    def opmon(self, d, path) -> OpmonArrow:
        return OpmonArrow(self.skew(_need(d, "src", path), f"{path}.src"),
                          self.skew(_need(d, "dst", path), f"{path}.dst"),
                          self.expr1(_need(d, "C", path), f"{path}.C"), self.cell(d, "C2", path),
                          self.cell(d, "C0", path), d.get("name", "C"))

    def opmon2(self, d, path) -> OpmonSimplex2:
        return OpmonSimplex2(*(self.opmon(_need(d, k, path), f"{path}.{k}") for k in "stv"),
                             self.cell(d, "alpha", path))

    def vertices(self, d, path) -> dict:
        out = {}
        for name, v in d.items():
            p = f"{path}.{name}"
            R = self.obj(v, "R", p)
            D = self.obj(v, "dual", p)
            n, e = (self.env.get(_need(v, k, p, str)) for k in ("n", "e"))
            if not isinstance(n, Gen) or not isinstance(e, Gen):
                raise SchemaError(p, "n and e must name 1-cells")
            out[name] = Vertex(self.adj(_need(v, "adj", p), f"{p}.adj"), Biduality(R, D, n, e))
        return out

    def structure(self):
        st = _need(self.doc, "structure", "$", dict)
        p = "$.structure"
        kind = _need(st, "kind", p, str)
        if kind not in KINDS:
            raise SchemaError(f"{p}.kind", f"unknown kind {kind!r}")
        three = ("alpha", "beta", "gamma", "zeta")
        if kind == "skewmon":
            v = self.skew(st, p)
        elif kind == "oplax":
            v = self.oplax(st, p)
        elif kind == "oplax-cell":
            v = ActionCell(self.oplax(_need(st, "src", p), f"{p}.src"),
                           self.oplax(_need(st, "dst", p), f"{p}.dst"), self.cell(st, "phi", p))
        elif kind == "monad":
            v = Monad(self.adj(_need(st, "adj", p), f"{p}.adj"),
                      self.oplax(_need(st, "r", p), f"{p}.r"), self.cell(st, "mu2", p),
                      self.cell(st, "mu0", p), st.get("name", "monad"))
        elif kind == "simplex2":
            v = self.simplex2(st, p)
        elif kind == "simplex2-morphism":
            v = Morphism2(self.simplex2(_need(st, "x", p), f"{p}.x"),
                          self.simplex2(_need(st, "y", p), f"{p}.y"),
                          *(self.cell(st, k, p) for k in ("sigma", "tau", "nu")))
        elif kind == "simplex3":
            v = Simplex3(*(self.simplex2(_need(st, k, p), f"{p}.{k}") for k in three))
        elif kind == "opmon":
            v = self.opmon(st, p)
        elif kind == "opmon-cell":
            v = OpmonCell(self.opmon(_need(st, "src", p), f"{p}.src"),
                          self.opmon(_need(st, "dst", p), f"{p}.dst"), self.cell(st, "xi", p))
        elif kind == "opmon-simplex2":
            v = self.opmon2(st, p)
        elif kind == "opmon-morphism":
            v = OpmonMorphism(self.opmon2(_need(st, "x", p), f"{p}.x"),
                              self.opmon2(_need(st, "y", p), f"{p}.y"),
                              *(self.cell(st, k, p) for k in ("sigma", "tau", "nu")))
        else:
            v = OpmonSimplex3(*(self.opmon2(_need(st, k, p), f"{p}.{k}") for k in three))
        verts = self.vertices(st["vertices"], f"{p}.vertices") if "vertices" in st else {}
        return kind, v, verts


def load(doc: dict) -> Loaded:
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected a JSON object")
    try:
        r = _Reader(doc)
        kind, v, verts = r.structure()
    except SchemaError:
        raise
    except (ModelError, K.BoundaryError, K.IsoError) as err:
        raise SchemaError("$", str(err)) from None
    return Loaded(kind, r.model, v, verts, doc)


def load_file(path: str) -> Loaded:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as err:
        raise SchemaError("$", f"invalid JSON: {err}") from None
    return load(doc)


# writing -------------------------------------------------------------------------

_SAFE = re.compile(r"[^A-Za-z0-9_°']")


class _Writer:
    def __init__(self, model: str):
        self.model = model
        self.objects, self.cells1, self.cells2 = {}, {}, {}
        self._names: dict = {}
        self._used: set = set()

    def _fresh(self, thing, hint: str) -> str:
        if id(thing) in self._names:
            return self._names[id(thing)][1]
        base = _SAFE.sub("", hint.replace("*", "s").replace("[", "_").replace("]", "")) or "x"
        if not base[0].isalpha():
            base = "c" + base
        if base.startswith("1_") or base in ("iso", "id"):
            base = "c" + base
        name, k = base, 1
        while name in self._used:
            k += 1
            name = f"{base}{k}"
        self._used.add(name)
        self._names[id(thing)] = (thing, name)
        return name

    def obj(self, o: Obj) -> str:
        known = [n for n, v in self.objects.items() if v["_obj"] == o]
        if known:
            return known[0]
        name = self._fresh(o, o.name.replace("°", "d"))
        self.objects[name] = {"size": o.size, "_obj": o}
        return name

    def gen(self, g: Gen) -> str:
        if id(g) in self._names:
            return self._names[id(g)][1]
        name = self._fresh(g, g.name)
        src = [self.obj(o) for o in g.src]
        dst = [self.obj(o) for o in g.dst]
        card = {f"{K.flat_index(g.src, xs)}|{K.flat_index(g.dst, ys)}": k
                for (xs, ys), k in sorted(g.card.items())}
        self.cells1[name] = {"src": src, "dst": dst, "card": card}
        if g.snake == "n":
            self.cells1[name]["snake"] = self.gen(g.partner)
        elif g.snake == "e":
            self.gen(g.partner)
        return name

    def e1(self, e: Expr1, top=True) -> str:
        if isinstance(e, GenE):
            return self.gen(e.ref)
        if isinstance(e, IdE):
            return "1_I" if not e.objs else " ⊗ ".join("1_" + self.obj(o) for o in e.objs)
        if isinstance(e, SeqE):
            s = f"{self.e1(e.a, False)} ; {self.e1(e.b, False)}"
            return s if top else f"({s})"
        if isinstance(e, TenE):
            def part(x):
                t = self.e1(x, True)
                return f"({t})" if isinstance(x, SeqE) else t
            s = f"{part(e.a)} ⊗ {part(e.b)}"
            return s if top else f"({s})"
        raise TypeError(e)

    def cell(self, c: TwoCell, hint: str) -> str:
        if id(c) in self._names:
            return self._names[id(c)][1]
        name = self._fresh(c, hint)
        spec = {"srcCell": self.e1(c.src), "dstCell": self.e1(c.dst)}
        if not c.rel:
            v = c.value
            ds = v.src
            spec["maps"] = {f"{K.flat_index(ds.src, xs)}|{K.flat_index(ds.dst, ys)}": v.entry_map(xs, ys)
                            for (xs, ys) in sorted(ds.entries)}
        self.cells2[name] = spec
        return name

    def word(self, M):
        return [self.obj(o) for o in M] if isinstance(M, tuple) else self.obj(M)

    def adj(self, a: Adjunction) -> dict:
        d = {"R": self.obj(a.R), "i": self.e1(a.i), "istar": self.e1(a.istar),
             "eta": self.cell(a.eta, "eta"), "eps": self.cell(a.eps, "eps")}
        if a.point is not None:
            d["point"] = a.point
        return d

    def skew(self, b) -> dict:
        if isinstance(b, AltSkewMonoidale):
            return {"M": self.word(b.M), "adj": self.adj(b.adj), "m": self.e1(b.m),
                    "alpha": self.cell(b.alpha, "alpha"), "kappa": self.cell(b.kappa, "kappa"),
                    "rho": self.cell(b.rho, "rho"), "name": b.name}
        return {"M": self.word(b.M), "m": self.e1(b.m), "u": self.e1(b.u),
                "alpha": self.cell(b.alpha, "alpha"), "lam": self.cell(b.lam, "lam"),
                "rho": self.cell(b.rho, "rho"), "name": b.name}

    def oplax(self, a: OplaxAction) -> dict:
        d = {"A": self.obj(a.A), "base": self.skew(a.over), "a": self.e1(a.a),
             "a2": self.cell(a.a2, "a2"), "a0": self.cell(a.a0, "a0"), "name": a.name}
        if a.target is not None:
            d["target"] = self.adj(a.target)
        return d

    def simplex2(self, x: Simplex2) -> dict:
        return {"s": self.oplax(x.s), "t": self.oplax(x.t), "v": self.oplax(x.v),
                "alpha": self.cell(x.alpha, "alpha")}

    def opmon(self, f: OpmonArrow) -> dict:
        return {"src": self.skew(f.src), "dst": self.skew(f.dst), "C": self.e1(f.C),
                "C2": self.cell(f.C2, "C2"), "C0": self.cell(f.C0, "C0"), "name": f.name}

    def opmon2(self, x: OpmonSimplex2) -> dict:
        return {"s": self.opmon(x.s), "t": self.opmon(x.t), "v": self.opmon(x.v),
                "alpha": self.cell(x.alpha, "alphabar")}

    def vertices(self, vs: dict) -> dict:
        return {k: {"R": self.obj(V.b.R), "dual": self.obj(V.b.Rdual), "n": self.gen(V.b.n),
                    "e": self.gen(V.b.e), "adj": self.adj(V.adj)} for k, V in vs.items()}


def dump(kind: str, value, model: str = "finmat", vertices: dict | None = None,
         extra: dict | None = None) -> dict:
    if kind not in KINDS:
        raise ValueError(kind)
    w = _Writer(model)
    three = ("alpha", "beta", "gamma", "zeta")
    if kind == "skewmon":
        st = w.skew(value)
    elif kind == "oplax":
        st = w.oplax(value)
    elif kind == "oplax-cell":
        st = {"src": w.oplax(value.src), "dst": w.oplax(value.dst), "phi": w.cell(value.phi, "phi")}
    elif kind == "monad":
        st = {"adj": w.adj(value.adj), "r": w.oplax(value.r), "mu2": w.cell(value.mu2, "mu2"),
              "mu0": w.cell(value.mu0, "mu0"), "name": value.name}
    elif kind == "simplex2":
        st = w.simplex2(value)
    elif kind == "simplex2-morphism":
        st = {"x": w.simplex2(value.x), "y": w.simplex2(value.y), "sigma": w.cell(value.sigma, "sigma"),
              "tau": w.cell(value.tau, "tau"), "nu": w.cell(value.nu, "nu")}
    elif kind == "simplex3":
        st = {k: w.simplex2(f) for k, f in zip(three, value.faces())}
    elif kind == "opmon":
        st = w.opmon(value)
    elif kind == "opmon-cell":
        st = {"src": w.opmon(value.src), "dst": w.opmon(value.dst), "xi": w.cell(value.xi, "xi")}
    elif kind == "opmon-simplex2":
        st = w.opmon2(value)
    elif kind == "opmon-morphism":
        st = {"x": w.opmon2(value.x), "y": w.opmon2(value.y), "sigma": w.cell(value.sigma, "sigma"),
              "tau": w.cell(value.tau, "tau"), "nu": w.cell(value.nu, "nu")}
    else:
        st = {k: w.opmon2(getattr(value, k)) for k in three}
    if vertices:
        st["vertices"] = w.vertices(vertices)
    doc = {"model": model,
           "objects": {k: {"size": v["size"]} for k, v in w.objects.items()},
           "cells1": w.cells1, "cells2": w.cells2,
           "structure": {"kind": kind, **st}}
    if extra:
        doc.update(extra)
    return doc


def dump_file(path: str, kind: str, value, **kw) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dump(kind, value, **kw), fh, indent=1, ensure_ascii=False)
        fh.write("\n")
