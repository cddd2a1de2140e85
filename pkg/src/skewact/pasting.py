"""Expressions for 1-cells and 2-cells, boundary inference, evaluation and equations.

Names inside expressions are looked up in an environment (a plain mapping). A name may
be bound to an ``Obj``, a ``Gen``, a closed 1-cell expression, a ``TwoCell`` or a
2-cell expression. Sugar: ``f >> g`` composes (``f`` first), ``f @ g`` tensors,
``p.then(q)`` composes vertically (``p`` first).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Mapping

from . import kernel as K
from .kernel import BoundaryError, Obj, Gen

__all__ = [
    "Expr1", "GenE", "IdE", "SeqE", "TenE", "Expr2", "Ref2", "Id2", "VComp", "WhiskerL",
    "WhiskerR", "Hor", "Ten2", "Iso", "TwoCell", "Equation", "Verdict",
    "G", "one", "unit", "C", "paste", "close1", "diagram", "infer_boundary", "evaluate",
    "check_equation", "parse1", "parse2", "show1", "show2", "leaf", "cell_from_maps",
    "unique_cell", "to_rel", "cell_by_rule", "atoms", "trace",
]


# 1-cells -------------------------------------------------------------------

class Expr1:
    def __rshift__(self, other):
        if isinstance(other, Expr2):
            return WhiskerL(self, other)
        return SeqE(self, _e1(other))

    def __rrshift__(self, other):
        return SeqE(_e1(other), self)

    def __matmul__(self, other):
        if isinstance(other, Expr2):
            return Ten2(Id2(self), other)
        return TenE(self, _e1(other))

    def __rmatmul__(self, other):
        return TenE(_e1(other), self)

    def __str__(self):
        return show1(self)


@dataclass(frozen=True, eq=False)
class GenE(Expr1):
    ref: Any  # str name or Gen


@dataclass(frozen=True, eq=False)
class IdE(Expr1):
    objs: tuple  # of str names or Obj


@dataclass(frozen=True, eq=False)
class SeqE(Expr1):
    a: Expr1
    b: Expr1


@dataclass(frozen=True, eq=False)
class TenE(Expr1):
    a: Expr1
    b: Expr1


def _e1(x) -> Expr1:
    if isinstance(x, Expr1):
        return x
    if isinstance(x, (str, Gen)):
        return GenE(x)
    raise TypeError(f"not a 1-cell: {x!r}")


def G(ref) -> GenE:
    return GenE(ref)


def one(*objs) -> IdE:
    """Identity 1-cell on the tensor of the named objects; ``one()`` is ``1_I``."""
    return IdE(tuple(objs))


unit = IdE(())


def _objs(ref, env) -> tuple:
    """Resolve an object reference to a word; a name may be bound to a tuple of objects."""
    if isinstance(ref, Obj):
        return (ref,)
    try:
        v = env[ref]
    except KeyError:
        raise BoundaryError(f"unbound object {ref!r}") from None
    if isinstance(v, Obj):
        return (v,)
    if isinstance(v, tuple) and all(isinstance(o, Obj) for o in v):
        return v
    raise BoundaryError(f"{ref!r} is not an object")


def _word(objs, env) -> tuple:
    return tuple(o for r in objs for o in _objs(r, env))


def close1(e: Expr1, env: Mapping) -> Expr1:
    """Substitute every name so the result only mentions ``Gen`` and ``Obj``."""
    if isinstance(e, GenE):
        if isinstance(e.ref, Gen):
            return e
        try:
            v = env[e.ref]
        except KeyError:
            raise BoundaryError(f"unbound 1-cell {e.ref!r}") from None
        if isinstance(v, Gen):
            return GenE(v)
        if isinstance(v, Expr1):
            return close1(v, env)
        raise BoundaryError(f"{e.ref!r} is not a 1-cell")
    if isinstance(e, IdE):
        return IdE(_word(e.objs, env))
    if isinstance(e, SeqE):
        return SeqE(close1(e.a, env), close1(e.b, env))
    if isinstance(e, TenE):
        return TenE(close1(e.a, env), close1(e.b, env))
    raise TypeError(e)


def diagram(e: Expr1, env: Mapping = None) -> K.Diagram:
    env = env or {}
    if isinstance(e, GenE):
        c = close1(e, env)
        return K.d_gen(c.ref)
    if isinstance(e, IdE):
        return K.d_id(_word(e.objs, env))
    if isinstance(e, SeqE):
        a, b = diagram(e.a, env), diagram(e.b, env)
        try:
            return K.d_seq(a, b)
        except BoundaryError as err:
            raise BoundaryError(f"in {show1(e)}: {err}") from None
    if isinstance(e, TenE):
        return K.d_tensor(diagram(e.a, env), diagram(e.b, env))
    raise TypeError(e)


def _name(ref):
    return ref.name if isinstance(ref, (Gen, Obj)) else str(ref)


def show1(e: Expr1, top: bool = True) -> str:
    if isinstance(e, GenE):
        return _name(e.ref)
    if isinstance(e, IdE):
        return "1_I" if not e.objs else " ⊗ ".join("1_" + _name(o) for o in e.objs)
    if isinstance(e, SeqE):
        s = f"{show1(e.a, False)} ; {show1(e.b, False)}"
        return s if top else f"({s})"
    if isinstance(e, TenE):
        def part(x):
            t = show1(x, True)
            return f"({t})" if isinstance(x, SeqE) else t
        s = f"{part(e.a)} ⊗ {part(e.b)}"
        return s if top else f"({s})"
    raise TypeError(e)


# 2-cells -------------------------------------------------------------------

class Expr2:
    def __rshift__(self, other):
        if isinstance(other, Expr2):
            return Hor(self, other)
        return WhiskerR(self, _e1(other))

    def __rrshift__(self, other):
        return WhiskerL(_e1(other), self)

    def __matmul__(self, other):
        if isinstance(other, Expr2):
            return Ten2(self, other)
        return Ten2(self, Id2(_e1(other)))

    def __rmatmul__(self, other):
        return Ten2(Id2(_e1(other)), self)

    def then(self, *others):
        return paste(self, *others)

    def __str__(self):
        return show2(self)


@dataclass(frozen=True, eq=False)
class Ref2(Expr2):
    name: str


@dataclass(frozen=True, eq=False)
class Id2(Expr2):
    e: Expr1


@dataclass(frozen=True, eq=False)
class VComp(Expr2):
    a: Expr2
    b: Expr2


@dataclass(frozen=True, eq=False)
class WhiskerL(Expr2):
    f: Expr1
    a: Expr2


@dataclass(frozen=True, eq=False)
class WhiskerR(Expr2):
    a: Expr2
    f: Expr1


@dataclass(frozen=True, eq=False)
class Hor(Expr2):
    a: Expr2
    b: Expr2


@dataclass(frozen=True, eq=False)
class Ten2(Expr2):
    a: Expr2
    b: Expr2


@dataclass(frozen=True, eq=False)
class Iso(Expr2):
    src: Expr1
    dst: Expr1


class TwoCell(Expr2):
    """An evaluated 2-cell with its boundary expressions; usable as a leaf."""

    __slots__ = ("src", "dst", "value", "name")

    def __init__(self, src: Expr1, dst: Expr1, value, name: str | None = None):
        self.src, self.dst, self.value, self.name = src, dst, value, name

    @property
    def rel(self) -> bool:
        return isinstance(self.value, K.RelCell2)

    def named(self, name):
        return TwoCell(self.src, self.dst, self.value, name)

    def is_invertible(self) -> bool:
        if self.rel:
            return self.value.dst.support() <= self.value.src.support()
        return self.value.is_invertible()

    def __eq__(self, other):
        return isinstance(other, TwoCell) and K.equal2(self.value, other.value)[0]

    __hash__ = object.__hash__

    def __repr__(self):
        return f"TwoCell({self.name or '?'}: {show1(self.src)} => {show1(self.dst)})"


def C(name: str) -> Ref2:
    return Ref2(name)


def paste(*cells) -> Expr2:
    """Vertical composite, first argument first. Consecutive boundaries only need
    equal normal forms, so structural isomorphisms are implicit."""
    cells = [c if isinstance(c, Expr2) else Id2(_e1(c)) for c in cells]
    out = cells[0]
    for c in cells[1:]:
        out = VComp(out, c)
    return out


def leaf(src, dst, value, name=None, env=None) -> TwoCell:
    env = env or {}
    return TwoCell(close1(_e1(src), env), close1(_e1(dst), env), value, name)


def _lookup2(name, env):
    try:
        v = env[name]
    except KeyError:
        raise BoundaryError(f"unbound 2-cell {name!r}") from None
    if not isinstance(v, Expr2):
        raise BoundaryError(f"{name!r} is not a 2-cell")
    return v


def infer_boundary(x: Expr2, env: Mapping = None):
    """Closed source and target 1-cell expressions of a 2-cell expression."""
    env = env or {}
    if isinstance(x, TwoCell):
        return x.src, x.dst
    if isinstance(x, Ref2):
        return infer_boundary(_lookup2(x.name, env), env)
    if isinstance(x, Id2):
        e = close1(x.e, env)
        diagram(e)
        return e, e
    if isinstance(x, Iso):
        s, d = close1(x.src, env), close1(x.dst, env)
        if diagram(s).form != diagram(d).form:
            raise K.IsoError(f"no structural iso {show1(s)} => {show1(d)}")
        return s, d
    if isinstance(x, VComp):
        s1, d1 = infer_boundary(x.a, env)
        s2, d2 = infer_boundary(x.b, env)
        if diagram(d1).form != diagram(s2).form:
            raise BoundaryError(f"vertical mismatch: {show1(d1)} vs {show1(s2)} in {show2(x)}")
        return s1, d2
    if isinstance(x, (WhiskerL, WhiskerR, Hor, Ten2)):
        a, b = _parts(x)
        s1, d1 = infer_boundary(a, env)
        s2, d2 = infer_boundary(b, env)
        mk = TenE if isinstance(x, Ten2) else SeqE
        s, d = mk(s1, s2), mk(d1, d2)
        try:
            diagram(s)
        except BoundaryError as err:
            raise BoundaryError(f"in {show2(x)}: {err}") from None
        return s, d
    raise TypeError(x)


def _parts(x):
    if isinstance(x, WhiskerL):
        return Id2(x.f), x.a
    if isinstance(x, WhiskerR):
        return x.a, Id2(x.f)
    return x.a, x.b


def _has_rel(x, env, seen=None) -> bool:
    if isinstance(x, TwoCell):
        return x.rel
    if isinstance(x, Ref2):
        return _has_rel(_lookup2(x.name, env), env)
    return any(_has_rel(y, env) for y in (getattr(x, "a", None), getattr(x, "b", None))
               if isinstance(y, Expr2))


def evaluate(x: Expr2, env: Mapping = None, model: str | None = None) -> TwoCell:
    """Evaluate in ``finmat`` or ``rel``; by default ``rel`` exactly when some leaf is."""
    env = env or {}
    if model is None:
        model = "rel" if _has_rel(x, env) else "finmat"
    rel = model == "rel"
    memo: dict = {}

    def go(x):
        k = id(x)
        if k in memo:
            return memo[k][1]
        v = _go(x)
        memo[k] = (x, v)
        return v

    def _go(x):
        if isinstance(x, TwoCell):
            if rel and not x.rel:
                return K.RelCell2(x.value.src, x.value.dst, check=False)
            if not rel and x.rel:
                raise K.ModelError(f"{x.name}: a rel cell cannot be evaluated in finmat")
            return x.value
        if isinstance(x, Ref2):
            return go(_lookup2(x.name, env))
        if isinstance(x, Id2):
            return K.identity2(diagram(close1(x.e, env)), rel)
        if isinstance(x, Iso):
            return K.iso2(diagram(close1(x.src, env)), diagram(close1(x.dst, env)), rel)
        if isinstance(x, VComp):
            p, q = go(x.a), go(x.b)
            if p.dst.form != q.src.form:
                raise BoundaryError(f"vertical mismatch in {show2(x)}")
            return K.vcomp2(p, q)
        a, b = _parts(x)
        return K.hcomp2("tensor" if isinstance(x, Ten2) else "seq", go(a), go(b))

    s, d = infer_boundary(x, env)
    v = go(x)
    return TwoCell(s, d, v, x.name if isinstance(x, TwoCell) else None)


def show2(x: Expr2, top: bool = True) -> str:
    if isinstance(x, TwoCell):
        return x.name or "<cell>"
    if isinstance(x, Ref2):
        return x.name
    if isinstance(x, Id2):
        return f"id[{show1(x.e)}]"
    if isinstance(x, Iso):
        return f"iso[{show1(x.src)} => {show1(x.dst)}]"
    if isinstance(x, VComp):
        s = f"{show2(x.a, False)} • {show2(x.b, False)}"
        return s if top else f"({s})"
    if isinstance(x, WhiskerL):
        s = f"{show1(x.f, False)} ; {show2(x.a, False)}"
    elif isinstance(x, WhiskerR):
        s = f"{show2(x.a, False)} ; {show1(x.f, False)}"
    elif isinstance(x, Hor):
        s = f"{show2(x.a, False)} ; {show2(x.b, False)}"
    elif isinstance(x, Ten2):
        s = f"{show2(x.a, False)} ⊗ {show2(x.b, False)}"
    else:
        raise TypeError(x)
    return s if top else f"({s})"


# equations -----------------------------------------------------------------

@dataclass(frozen=True)
class Equation:
    name: str
    lhs: Expr2
    rhs: Expr2


@dataclass
class Verdict:
    name: str
    holds: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self):
        return {"axiom": self.name, "holds": self.holds, **({"detail": self.detail} if self.detail else {})}

    def __bool__(self):
        return self.holds


def trace(x: Expr2, key, env: Mapping = None):
    """Follow one source element through a finmat 2-cell expression.

    Returns the image key and the visited leaves as ``(name, xs, ys, leaf)``."""
    env = env or {}
    memo: dict = {}
    steps: list = []

    def val(y):
        if id(y) not in memo:
            memo[id(y)] = (y, evaluate(y, env).value)
        return memo[id(y)][1]

    def go(y, k):
        if isinstance(y, TwoCell):
            steps.append((y.name, k[0], k[1], y))
            return y.value.fn[k]
        if isinstance(y, Ref2):
            return go(_lookup2(y.name, env), k)
        if isinstance(y, (Id2, Iso)):
            return k
        if isinstance(y, VComp):
            return go(y.b, go(y.a, k))
        a, b = _parts(y)
        pa, pb = val(a), val(b)
        tensor = isinstance(y, Ten2)
        mk = K.d_tensor if tensor else K.d_seq
        split = K.split_tensor if tensor else K.split_seq
        join = K.join_tensor if tensor else K.join_seq
        src, dst = mk(pa.src, pb.src), mk(pa.dst, pb.dst)
        ra, rb = split(pa.src, src.key_to_raw[k])
        ia = go(a, pa.src.raw_to_key[ra])
        ib = go(b, pb.src.raw_to_key[rb])
        return dst.raw_to_key[join(pa.dst.key_to_raw[ia], pb.dst.key_to_raw[ib])]

    return go(x, key), steps


def _trace_steps(x, key, env):
    try:
        _, steps = trace(x, key, env)
    except Exception:  # tracing is best effort; the verdict stands without it
        return []
    out = []
    for name, xs, ys, leaf in steps:
        if name is None:
            continue
        d = leaf.value.src
        out.append(f"{name}@{K.flat_index(d.src, xs)}|{K.flat_index(d.dst, ys)}")
    return out


def check_equation(eq: Equation, env: Mapping = None, model: str | None = None) -> Verdict:
    if model is None:
        model = "rel" if _has_rel(eq.lhs, env) or _has_rel(eq.rhs, env) else "finmat"
    l = evaluate(eq.lhs, env, model)
    r = evaluate(eq.rhs, env, model)
    ok, info = K.equal2(l.value, r.value)
    if ok:
        return Verdict(eq.name, True)
    if info.get("where") == "entry":
        src = l.value.src
        info = dict(info)
        key = (info["x"], info["y"], info["token"])
        info["trace_lhs"] = _trace_steps(eq.lhs, key, env)
        info["trace_rhs"] = _trace_steps(eq.rhs, key, env)
        info["x"] = K.flat_index(src.src, info["x"])
        info["y"] = K.flat_index(src.dst, info["y"])
        info["token"] = repr(info["token"])
        info["lhs"] = repr(info["lhs"])
        info["rhs"] = repr(info["rhs"])
    info["boundary"] = f"{show1(l.src)} => {show1(l.dst)}"
    return Verdict(eq.name, False, info)


def cell_from_maps(src, dst, maps: Mapping, env=None, name=None) -> TwoCell:
    """A finmat 2-cell from per-entry target lists keyed by flattened ``(x, y)``."""
    env = env or {}
    s, d = close1(_e1(src), env), close1(_e1(dst), env)
    ds, dd = diagram(s), diagram(d)
    m = {(K.unflat_index(ds.src, x), K.unflat_index(ds.dst, y)): list(v) for (x, y), v in maps.items()}
    return TwoCell(s, d, K.cell_from_lists(ds, dd, m), name)


def atoms(d: K.Diagram, key) -> list:
    """``(generator name, inputs, outputs, copy)`` for each box of an element key."""
    return [(d.boxes[b].name, ins, outs, k) for b, (ins, outs, k) in zip(d.order, key[2])]


def cell_by_rule(src, dst, rule, env=None, name=None) -> TwoCell:
    """The 2-cell sending each source element to a target element chosen by
    ``rule(xs, ys, src_atoms, [tgt_atoms, ...]) -> index``."""
    env = env or {}
    s, d = close1(_e1(src), env), close1(_e1(dst), env)
    ds, dd = diagram(s), diagram(d)
    fn = {}
    for pos, ks in ds.entries.items():
        tgt = dd.entries.get(pos, ())
        if not tgt:
            raise K.ModelError(f"no target element at {pos}")
        ta = [atoms(dd, k) for k in tgt]
        for k in ks:
            fn[k] = tgt[rule(pos[0], pos[1], atoms(ds, k), ta)]
    return TwoCell(s, d, K.Cell2(ds, dd, fn), name)


def unique_cell(src, dst, env=None, name=None, model="finmat") -> TwoCell:
    env = env or {}
    s, d = close1(_e1(src), env), close1(_e1(dst), env)
    return TwoCell(s, d, K.unique2(diagram(s), diagram(d), model == "rel"), name)


def to_rel(c: TwoCell) -> TwoCell:
    if c.rel:
        return c
    return TwoCell(c.src, c.dst, K.RelCell2(c.value.src, c.value.dst, check=False), c.name)


# parsing ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(=>)|(1_[A-Za-z0-9_°']+)|([A-Za-z_][A-Za-z0-9_°'*^²⁰]*)|(\(x\)|⊗|;|•|\(|\)|\[|\]|\*))")


def _tokens(text: str):
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        tok = m.group(m.lastindex)
        out.append("⊗" if tok in ("(x)", "*") else tok)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text, cells2=()):
        self.toks = _tokens(text)
        self.i = 0
        self.cells2 = set(cells2)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want=None):
        t = self.peek()
        if t is None or (want is not None and t != want):
            raise ValueError(f"expected {want!r}, got {t!r}")
        self.i += 1
        return t

    def done(self):
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.peek()!r}")

    def vert(self):
        parts = [self.seq()]
        while self.peek() == "•":
            self.take()
            parts.append(self.seq())
        if len(parts) == 1:
            return parts[0]
        return paste(*[_lift(p) for p in parts])

    def seq(self):
        x = self.ten()
        while self.peek() == ";":
            self.take()
            x = _combine(x, self.ten(), "seq")
        return x

    def ten(self):
        x = self.atom()
        while self.peek() == "⊗":
            self.take()
            x = _combine(x, self.atom(), "ten")
        return x

    def atom(self):
        t = self.take()
        if t == "(":
            x = self.vert()
            self.take(")")
            return x
        if t in ("iso", "id") and self.peek() == "[":
            self.take("[")
            a = self.seq()
            if t == "id":
                self.take("]")
                return Id2(a)
            self.take("=>")
            b = self.seq()
            self.take("]")
            return Iso(a, b)
        if t.startswith("1_"):
            o = t[2:]
            return IdE(()) if o == "I" else IdE((o,))
        if t in self.cells2:
            return Ref2(t)
        return GenE(t)


def _lift(x):
    return x if isinstance(x, Expr2) else Id2(x)


def _combine(a, b, op):
    if isinstance(a, Expr1) and isinstance(b, Expr1):
        return SeqE(a, b) if op == "seq" else TenE(a, b)
    if op == "ten":
        return Ten2(_lift(a), _lift(b))
    if isinstance(a, Expr1):
        return WhiskerL(a, b)
    if isinstance(b, Expr1):
        return WhiskerR(a, b)
    return Hor(a, b)


def parse1(text: str) -> Expr1:
    p = _Parser(text)
    x = p.seq()
    p.done()
    if not isinstance(x, Expr1):
        raise ValueError("not a 1-cell expression")
    return x


def parse2(text: str, cells2) -> Expr2:
    """Parse a 2-cell expression; ``cells2`` lists the names that denote 2-cells."""
    p = _Parser(text, cells2)
    x = p.vert()
    p.done()
    return _lift(x)
