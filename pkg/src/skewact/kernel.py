"""Finite matrix model of a monoidal bicategory, strictified by string-diagram normal forms.

A 1-cell is a port graph of generator boxes. Its entry at ``(xs, ys)`` is the finite
set of consistent assignments of generator elements to the boxes. Every element gets
a canonical key that depends only on the normal form of the graph. Structural
isomorphisms are therefore identity maps on keys.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterable, Iterator

__all__ = [
    "Obj", "Word", "Gen", "Diagram", "Cell2", "RelCell2",
    "BoundaryError", "IsoError", "ModelError",
    "word_str", "word_size", "flat_index", "unflat_index",
    "d_id", "d_gen", "d_seq", "d_tensor",
    "identity2", "vcomp2", "hcomp2", "iso2", "equal2", "unique2",
]


class BoundaryError(ValueError):
    """Incomposable cells."""


class IsoError(ValueError):
    """A structural isomorphism between cells with different normal forms."""


class ModelError(ValueError):
    """A 2-cell that does not exist or is malformed in the chosen model."""


@dataclass(frozen=True)
class Obj:
    name: str
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"object {self.name} needs positive size")

    def __repr__(self):
        return self.name


Word = tuple  # tuple[Obj, ...]; the empty word is the unit object I


def word_str(w: Word) -> str:
    return "I" if not w else "".join(o.name for o in w)


def word_size(w: Word) -> int:
    return prod(o.size for o in w)


def flat_index(w: Word, xs: tuple) -> int:
    """Row-major index of a multi-index over the tensor of ``w``."""
    i = 0
    for o, x in zip(w, xs):
        i = i * o.size + x
    return i


def unflat_index(w: Word, i: int) -> tuple:
    out = []
    for o in reversed(w):
        i, r = divmod(i, o.size)
        out.append(r)
    return tuple(reversed(out))


def _indices(w: Word) -> Iterator[tuple]:
    return product(*(range(o.size) for o in w))


class Gen:
    """A generator 1-cell: a matrix of finite cardinals between two words.

    ``card`` maps ``(xs, ys)`` to the size of the entry; elements are ``0..k-1``.
    ``snake`` marks the unit ("n") or counit ("e") of a biduality; ``partner`` is
    the other half. Generators compare by identity.
    """

    __slots__ = ("name", "src", "dst", "card", "rows", "snake", "partner", "__weakref__")

    def __init__(self, name: str, src: Word, dst: Word, card: dict, snake: str | None = None):
        self.name = name
        self.src = tuple(src)
        self.dst = tuple(dst)
        clean = {}
        for (xs, ys), k in card.items():
            xs, ys = tuple(xs), tuple(ys)
            if len(xs) != len(self.src) or len(ys) != len(self.dst):
                raise ValueError(f"{name}: entry {xs}|{ys} has wrong arity")
            for o, x in zip(self.src + self.dst, xs + ys):
                if not 0 <= x < o.size:
                    raise ValueError(f"{name}: index {x} out of range for {o.name}")
            if k < 0:
                raise ValueError(f"{name}: negative cardinality")
            if k:
                clean[(xs, ys)] = int(k)
        self.card = clean
        rows: dict = {}
        for (xs, ys), k in sorted(clean.items()):
            rows.setdefault(xs, []).append((ys, k))
        self.rows = {xs: tuple(v) for xs, v in rows.items()}
        self.snake = snake
        self.partner = None

    def entry(self, xs, ys) -> int:
        return self.card.get((tuple(xs), tuple(ys)), 0)

    def is_boolean(self) -> bool:
        return all(k == 1 for k in self.card.values())

    def __repr__(self):
        return f"Gen({self.name}: {word_str(self.src)} -> {word_str(self.dst)})"


def pair_snake(n: Gen, e: Gen) -> None:
    """Declare ``n: I -> D R`` and ``e: R D -> I`` as a biduality so zig-zags yank."""
    if n.src or len(n.dst) != 2 or e.dst or len(e.src) != 2:
        raise BoundaryError("snake pair needs n: I -> D R and e: R D -> I")
    if n.dst[0] != e.src[1] or n.dst[1] != e.src[0]:
        raise BoundaryError("snake pair objects do not match")
    n.snake, e.snake = "n", "e"
    n.partner, e.partner = e, n


class Diagram:
    """Port graph. Slots ``0..nin-1`` are the boundary inputs; box ``b`` owns the
    slots ``base[b] .. base[b]+len(dst)-1``. ``box_in[b][j]`` and ``out_src[j]`` are
    the slots feeding box in-port ``j`` and boundary output ``j``.
    Boxes are listed in a topological order."""

    __slots__ = ("src", "dst", "boxes", "box_in", "out_src", "base", "nslots",
                 "_canon", "_tokens", "__weakref__")

    def __init__(self, src: Word, dst: Word, boxes: tuple, box_in: tuple, out_src: tuple):
        self.src, self.dst = src, dst
        self.boxes, self.box_in, self.out_src = boxes, box_in, out_src
        base, s = [], len(src)
        for g in boxes:
            base.append(s)
            s += len(g.dst)
        self.base = tuple(base)
        self.nslots = s
        self._canon = None
        self._tokens = None

    @property
    def key(self):
        return (self.src, self.dst, self.boxes, self.box_in, self.out_src)

    def owner(self, slot: int):
        """``('i', j)`` for a boundary input, else ``(box, port)``."""
        nin = len(self.src)
        if slot < nin:
            return ("i", slot)
        for b in range(len(self.boxes) - 1, -1, -1):
            if slot >= self.base[b]:
                return (b, slot - self.base[b])
        raise AssertionError(slot)

    # normal form ---------------------------------------------------------

    def _structure(self):
        if self._canon is None:
            self._canon = _normal_form(self)
        return self._canon

    @property
    def form(self):
        """Hashable normal form; two diagrams are structurally isomorphic iff equal."""
        return self._structure()[0]

    @property
    def order(self):
        """Raw indices of the boxes that survive yanking, in canonical order."""
        return self._structure()[1]

    # elements ------------------------------------------------------------

    def _table(self):
        if self._tokens is None:
            self._tokens = _enumerate_tokens(self)
        return self._tokens

    @property
    def raw_to_key(self) -> dict:
        return self._table()[0]

    @property
    def key_to_raw(self) -> dict:
        return self._table()[1]

    @property
    def entries(self) -> dict:
        """``(xs, ys) -> tuple of canonical keys`` (sorted); only nonempty entries."""
        return self._table()[2]

    def keys(self):
        return self._table()[1].keys()

    def card(self, xs, ys) -> int:
        return len(self.entries.get((tuple(xs), tuple(ys)), ()))

    def support(self) -> frozenset:
        return frozenset(self.entries)

    def matrix(self) -> dict:
        """Flattened view: ``(x, y) -> count`` over row-major indices, nonzero only."""
        return {(flat_index(self.src, xs), flat_index(self.dst, ys)): len(v)
                for (xs, ys), v in self.entries.items()}

    def __repr__(self):
        names = ",".join(g.name for g in self.boxes)
        return f"Diagram({word_str(self.src)} -> {word_str(self.dst)}; {names})"


# construction ------------------------------------------------------------

@lru_cache(maxsize=None)
def _intern(src, dst, boxes, box_in, out_src) -> Diagram:
    return Diagram(src, dst, boxes, box_in, out_src)


def d_id(w: Word) -> Diagram:
    w = tuple(w)
    return _intern(w, w, (), (), tuple(range(len(w))))


def d_gen(g: Gen) -> Diagram:
    n = len(g.src)
    return _intern(g.src, g.dst, (g,), (tuple(range(n)),), tuple(range(n, n + len(g.dst))))


def d_seq(a: Diagram, b: Diagram) -> Diagram:
    if a.dst != b.src:
        raise BoundaryError(f"cannot compose {word_str(a.src)}->{word_str(a.dst)} "
                            f"with {word_str(b.src)}->{word_str(b.dst)}")
    shift = a.nslots - len(b.src)

    def m(s):
        return a.out_src[s] if s < len(b.src) else s + shift

    box_in = a.box_in + tuple(tuple(m(s) for s in ins) for ins in b.box_in)
    return _intern(a.src, b.dst, a.boxes + b.boxes, box_in, tuple(m(s) for s in b.out_src))


def d_tensor(a: Diagram, b: Diagram) -> Diagram:
    na, nb = len(a.src), len(b.src)
    nin = na + nb
    abox = a.nslots - na

    def ma(s):
        return s if s < na else s - na + nin

    def mb(s):
        return na + s if s < nb else s - nb + nin + abox

    box_in = (tuple(tuple(ma(s) for s in ins) for ins in a.box_in)
              + tuple(tuple(mb(s) for s in ins) for ins in b.box_in))
    out_src = tuple(ma(s) for s in a.out_src) + tuple(mb(s) for s in b.out_src)
    return _intern(a.src + b.src, a.dst + b.dst, a.boxes + b.boxes, box_in, out_src)


# normal forms -------------------------------------------------------------

def _normal_form(d: Diagram):
    nin = len(d.src)
    # prod[target] = slot, cons[slot] = target; targets are ('o', j) or (box, port)
    prod_of: dict = {}
    cons_of: dict = {}
    for b, ins in enumerate(d.box_in):
        for j, s in enumerate(ins):
            prod_of[(b, j)] = s
            cons_of[s] = (b, j)
    for j, s in enumerate(d.out_src):
        prod_of[("o", j)] = s
        cons_of[s] = ("o", j)
    alive = set(range(len(d.boxes)))

    changed = True
    while changed:
        changed = False
        for nb in sorted(alive):
            g = d.boxes[nb]
            if g.snake != "n":
                continue
            o0, o1 = d.base[nb], d.base[nb] + 1
            c0, c1 = cons_of.get(o0), cons_of.get(o1)
            for eb in (c0[0] if c0 and c0[0] != "o" else None,
                       c1[0] if c1 and c1[0] != "o" else None):
                if eb is None or eb not in alive or d.boxes[eb] is not g.partner:
                    continue
                p1 = c0 == (eb, 1)
                p2 = c1 == (eb, 0)
                if p1 and not p2:
                    s, t = prod_of[(eb, 0)], c1
                elif p2 and not p1:
                    s, t = prod_of[(eb, 1)], c0
                else:
                    continue
                prod_of[t] = s
                cons_of[s] = t
                for key in ((eb, 0), (eb, 1)):
                    prod_of.pop(key, None)
                cons_of.pop(o0, None)
                cons_of.pop(o1, None)
                alive.discard(nb)
                alive.discard(eb)
                changed = True
                break
            if changed:
                break

    owner = d.owner

    def producer(target):
        s = prod_of[target]
        return owner(s)

    def neighbours(b):
        g = d.boxes[b]
        out = []
        for j in range(len(g.src)):
            p = producer((b, j))
            if p[0] != "i":
                out.append(p[0])
        for j in range(len(g.dst)):
            c = cons_of[d.base[b] + j]
            if c[0] != "o":
                out.append(c[0])
        return out

    def bfs(starts):
        seen, order = set(), []
        q = deque()
        for b in starts:
            if b not in seen:
                seen.add(b)
                order.append(b)
                q.append(b)
        while q:
            for nb_ in neighbours(q.popleft()):
                if nb_ not in seen:
                    seen.add(nb_)
                    order.append(nb_)
                    q.append(nb_)
        return order

    starts = []
    for j in range(nin):
        c = cons_of[j]
        if c[0] != "o":
            starts.append(c[0])
    for j in range(len(d.dst)):
        p = producer(("o", j))
        if p[0] != "i":
            starts.append(p[0])
    order = bfs(starts)

    def describe(seq):
        pos = {b: i for i, b in enumerate(seq)}

        def ref(p):
            return p if p[0] == "i" else (pos[p[0]], p[1])

        return tuple((d.boxes[b].name, tuple(ref(producer((b, j))) for j in range(len(d.boxes[b].src))))
                     for b in seq)

    rest = sorted(alive - set(order))
    comps = []
    while rest:
        comp = bfs([rest[0]])
        cs = set(comp)
        rest = [b for b in rest if b not in cs]
        best = None
        for start in sorted(comp):
            seq = bfs([start])
            sig = describe(seq)
            if best is None or sig < best[0]:
                best = (sig, seq)
        comps.append((best[0], min(comp), best[1]))
    comps.sort(key=lambda c: (c[0], c[1]))
    for _, _, seq in comps:
        order.extend(seq)

    pos = {b: i for i, b in enumerate(order)}

    def cref(p):
        return p if p[0] == "i" else (pos[p[0]], p[1])

    form = (d.src, d.dst,
            tuple((d.boxes[b], tuple(cref(producer((b, j))) for j in range(len(d.boxes[b].src))))
                  for b in order),
            tuple(cref(producer(("o", j))) for j in range(len(d.dst))))
    return form, tuple(order)


def _enumerate_tokens(d: Diagram):
    """All raw elements ``(xs, choices)`` with their canonical keys.

    A canonical key is ``(xs, ys, atoms)`` where atoms lists
    ``(in_vals, out_vals, k)`` for each surviving box in canonical order."""
    order = d.order
    boxes, box_in, base = d.boxes, d.box_in, d.base
    nb = len(boxes)
    vals = [0] * d.nslots
    choices: list = [None] * nb
    raw_to_key, key_to_raw, entries = {}, {}, {}
    out_src = d.out_src
    nin = len(d.src)

    def leaf(xs):
        ys = tuple(vals[s] for s in out_src)
        atoms = tuple((tuple(vals[s] for s in box_in[b]), choices[b][0], choices[b][1]) for b in order)
        key = (xs, ys, atoms)
        raw = (xs, tuple(choices))
        raw_to_key[raw] = key
        key_to_raw[key] = raw
        entries.setdefault((xs, ys), []).append(key)

    def rec(b, xs):
        if b == nb:
            leaf(xs)
            return
        g = boxes[b]
        ins = tuple(vals[s] for s in box_in[b])
        bs = base[b]
        for ys_, k in g.rows.get(ins, ()):
            for j, y in enumerate(ys_):
                vals[bs + j] = y
            for kk in range(k):
                choices[b] = (ys_, kk)
                rec(b + 1, xs)

    for xs in _indices(d.src):
        vals[:nin] = xs
        rec(0, xs)
    entries = {k: tuple(sorted(v)) for k, v in entries.items()}
    return raw_to_key, key_to_raw, entries


def split_seq(a: Diagram, raw):
    """Split a raw element of ``a;b`` into raw elements of ``a`` and ``b``."""
    xs, ch = raw
    na = len(a.boxes)
    ra = (xs, ch[:na])
    ys = a.raw_to_key[ra][1]
    return ra, (ys, ch[na:])


def split_tensor(a: Diagram, raw):
    xs, ch = raw
    na, nina = len(a.boxes), len(a.src)
    return (xs[:nina], ch[:na]), (xs[nina:], ch[na:])


def join_seq(ra, rb):
    return (ra[0], ra[1] + rb[1])


def join_tensor(ra, rb):
    return (ra[0] + rb[0], ra[1] + rb[1])


# 2-cells ----------------------------------------------------------------

class Cell2:
    """A 2-cell: for every element key of ``src``, the key of its image in ``dst``."""

    __slots__ = ("src", "dst", "fn")

    def __init__(self, src: Diagram, dst: Diagram, fn: dict, check: bool = True):
        self.src, self.dst, self.fn = src, dst, fn
        if check:
            if src.src != dst.src or src.dst != dst.dst:
                raise BoundaryError("2-cell boundaries must be parallel")
            if set(fn) != set(src.keys()):
                raise ModelError("2-cell map is not total on its source")
            dk = dst.key_to_raw
            for k, v in fn.items():
                if v not in dk or (k[0], k[1]) != (v[0], v[1]):
                    raise ModelError(f"2-cell map sends {k[:2]} outside its entry")

    def is_invertible(self) -> bool:
        vals = list(self.fn.values())
        return len(set(vals)) == len(vals) == len(self.dst.key_to_raw)

    def entry_map(self, xs, ys) -> list:
        """Position list: the i-th source element maps to the returned i-th index."""
        xs, ys = tuple(xs), tuple(ys)
        tgt = self.dst.entries.get((xs, ys), ())
        idx = {k: i for i, k in enumerate(tgt)}
        return [idx[self.fn[k]] for k in self.src.entries.get((xs, ys), ())]


class RelCell2:
    """A 2-cell in the locally posetal quotient: only its boundary."""

    __slots__ = ("src", "dst")

    def __init__(self, src: Diagram, dst: Diagram, check: bool = True):
        if src.src != dst.src or src.dst != dst.dst:
            raise BoundaryError("2-cell boundaries must be parallel")
        if check and not src.support() <= dst.support():
            missing = min(src.support() - dst.support())
            raise ModelError(f"no 2-cell: support not included at {missing}")
        self.src, self.dst = src, dst


def _same_form(a: Diagram, b: Diagram, what: str):
    if a.form != b.form:
        raise BoundaryError(f"{what}: {a!r} and {b!r} have different normal forms")


def identity2(d: Diagram, rel: bool = False):
    if rel:
        return RelCell2(d, d, check=False)
    return Cell2(d, d, {k: k for k in d.keys()}, check=False)


def iso2(a: Diagram, b: Diagram, rel: bool = False):
    if a.form != b.form:
        raise IsoError(f"no structural isomorphism {a!r} => {b!r}")
    if rel:
        return RelCell2(a, b, check=False)
    return Cell2(a, b, {k: k for k in a.keys()}, check=False)


def vcomp2(p, q):
    """``p`` then ``q``."""
    _same_form(p.dst, q.src, "vertical composite")
    if isinstance(p, RelCell2) or isinstance(q, RelCell2):
        if not (isinstance(p, RelCell2) and isinstance(q, RelCell2)):
            raise ModelError("mixed models")
        return RelCell2(p.src, q.dst, check=False)
    qf = q.fn
    return Cell2(p.src, q.dst, {k: qf[v] for k, v in p.fn.items()}, check=False)


def hcomp2(op: str, p, q):
    """Horizontal (``op='seq'``) or tensor (``op='tensor'``) composite of 2-cells."""
    mk = d_seq if op == "seq" else d_tensor
    src, dst = mk(p.src, q.src), mk(p.dst, q.dst)
    if isinstance(p, RelCell2) or isinstance(q, RelCell2):
        if not (isinstance(p, RelCell2) and isinstance(q, RelCell2)):
            raise ModelError("mixed models")
        return RelCell2(src, dst, check=False)
    split = split_seq if op == "seq" else split_tensor
    join = join_seq if op == "seq" else join_tensor
    a, b = p.src, q.src
    akey, bkey = a.raw_to_key, b.raw_to_key
    araw, braw = p.dst.key_to_raw, q.dst.key_to_raw
    dkey = dst.raw_to_key
    pf, qf = p.fn, q.fn
    fn = {}
    for raw, key in src.raw_to_key.items():
        ra, rb = split(a, raw)
        ra2 = araw[pf[akey[ra]]]
        rb2 = braw[qf[bkey[rb]]]
        fn[key] = dkey[join(ra2, rb2)]
    return Cell2(src, dst, fn, check=False)


def equal2(p, q):
    """``(True, None)`` or ``(False, reason)`` where reason names the first difference."""
    if p.src.form != q.src.form:
        return False, {"where": "source boundary"}
    if p.dst.form != q.dst.form:
        return False, {"where": "target boundary"}
    if isinstance(p, RelCell2) and isinstance(q, RelCell2):
        return True, None
    if isinstance(p, RelCell2) or isinstance(q, RelCell2):
        return False, {"where": "model"}
    for k in sorted(p.fn):
        a, b = p.fn[k], q.fn[k]
        if a != b:
            xs, ys = k[0], k[1]
            return False, {"where": "entry", "x": xs, "y": ys, "token": k[2],
                           "lhs": a[2], "rhs": b[2]}
    return True, None


def unique2(src: Diagram, dst: Diagram, rel: bool = False):
    """The unique 2-cell when every nonempty source entry lands in a singleton."""
    if rel:
        return RelCell2(src, dst)
    fn = {}
    for pos, ks in src.entries.items():
        tgt = dst.entries.get(pos, ())
        if len(tgt) != 1:
            raise ModelError(f"no unique 2-cell at {pos}: target has {len(tgt)} elements")
        for k in ks:
            fn[k] = tgt[0]
    return Cell2(src, dst, fn)


def cell_from_lists(src: Diagram, dst: Diagram, maps: dict):
    """Build a 2-cell from per-entry index lists, ``(xs, ys) -> [targets]``."""
    fn = {}
    for pos, ks in src.entries.items():
        m = maps.get(pos)
        if m is None or len(m) != len(ks):
            raise ModelError(f"map at {pos} must list {len(ks)} targets")
        tgt = dst.entries.get(pos, ())
        for k, j in zip(ks, m):
            if not 0 <= j < len(tgt):
                raise ModelError(f"target index {j} out of range at {pos}")
            fn[k] = tgt[j]
    extra = set(maps) - set(src.entries)
    for pos in extra:
        if maps[pos]:
            raise ModelError(f"map given at empty entry {pos}")
    return Cell2(src, dst, fn)


def all_positions(w1: Word, w2: Word) -> Iterable:
    return product(_indices(w1), _indices(w2))
