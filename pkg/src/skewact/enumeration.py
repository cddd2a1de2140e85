"""Exhaustive search over Boolean structures in the locally posetal model.

Two independent routes are provided. ``enumerate_structures`` builds every candidate
through the kernel and asks for the required cells (existence = support inclusion);
``numpy_count`` recomputes the same counts with plain Boolean tensors.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np

from .bijection import Monad, monad_to_skew, skew_to_monad
from .duality import point_adjunction
from .kernel import Gen, ModelError, Obj
from .oplax import OplaxAction
from .pasting import diagram, one, unique_cell
from .simplicial import Simplex2
from .skewmon import AltSkewMonoidale, induced

__all__ = ["SearchSpace", "enumerate_structures", "numpy_count", "compare_counts",
           "KINDS", "CapExceeded", "decode_relation"]

KINDS = ("skewmon", "monad", "oplaxaction", "simplex2")


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpace:
    size: int
    point: int
    kind: str
    cap: int = 2

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if not 0 <= self.point < self.size:
            raise ValueError("point out of range")
        if self.size > self.cap:
            raise CapExceeded(f"size {self.size} exceeds the cap {self.cap}")


def decode_relation(code: int, n: int) -> np.ndarray:
    """Bit ``a*n*n + b*n + c`` of ``code`` is the entry ``((a, b), c)``."""
    bits = [(code >> k) & 1 for k in range(n ** 3)]
    return np.array(bits, dtype=bool).reshape(n, n, n)


def _gen(name, R, rel):
    return Gen(name, (R, R), (R,), {((a, b), (c,)): 1 for a, b, c in zip(*np.nonzero(rel))})


def _exists(src, dst) -> bool:
    try:
        unique_cell(src, dst, model="rel")
        return True
    except ModelError:
        return False


# kernel route -------------------------------------------------------------------

def _skew_ok(R, adj, m) -> bool:
    X = one(R)
    return (_exists((X @ m) >> m, (m @ X) >> m) and _exists(adj.istar @ X, m)
            and _exists((X @ adj.i) >> m, X))


def _monad_ok(R, adj, r) -> bool:
    X = one(R)
    base = adj.istar @ X
    return (_exists((X @ base) >> r, (r @ X) >> r) and _exists((X @ adj.i) >> r, X)
            and _exists((X @ r) >> r, (r @ X) >> r)
            and _exists((X @ base) >> base, (adj.istar @ X @ X) >> r))


def _action_ok(R, adj, a) -> bool:
    X = one(R)
    base = adj.istar @ X
    return _exists((X @ base) >> a, (a @ X) >> a) and _exists((X @ adj.i) >> a, X)


def _scan(args):
    kind, n, p, lo, hi = args
    R = Obj("R", n)
    adj = point_adjunction(R, p)
    test = {"skewmon": _skew_ok, "monad": _monad_ok, "oplaxaction": _action_ok}[kind]
    return [c for c in range(lo, hi) if test(R, adj, _cell(R, decode_relation(c, n)))]


def _cell(R, rel):
    from .pasting import G
    return G(_gen("x", R, rel))


def _codes(kind, n, p, jobs):
    total = 2 ** (n ** 3)
    jobs = max(1, jobs)
    step = -(-total // jobs)
    chunks = [(kind, n, p, lo, min(total, lo + step)) for lo in range(0, total, step)]
    if jobs == 1:
        parts = [_scan(c) for c in chunks]
    else:
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_scan, chunks))
    return [c for part in parts for c in part]


def build_skew(code: int, n: int, p: int, adj=None) -> AltSkewMonoidale:
    R = adj.R if adj else Obj("R", n)
    adj = adj or point_adjunction(R, p)
    m = _cell(R, decode_relation(code, n))
    X = one(R)
    return AltSkewMonoidale(
        R, adj, m,
        unique_cell((X @ m) >> m, (m @ X) >> m, name="α", model="rel"),
        unique_cell(adj.istar @ X, m, name="κ", model="rel"),
        unique_cell((X @ adj.i) >> m, X, name="ρ", model="rel"), name=f"rel#{code}")


def build_action(code: int, n: int, p: int, adj) -> OplaxAction:
    R = adj.R
    a = _cell(R, decode_relation(code, n))
    X = one(R)
    base = induced(adj)
    return OplaxAction(R, base, a,
                       unique_cell((X @ base.m) >> a, (a @ X) >> a, name="a²", model="rel"),
                       unique_cell((X @ adj.i) >> a, X, name="a⁰", model="rel"),
                       name=f"act#{code}", target=adj)


def build_monad(code: int, n: int, p: int, adj=None) -> Monad:
    R = adj.R if adj else Obj("R", n)
    adj = adj or point_adjunction(R, p)
    r = build_action(code, n, p, adj)
    X = one(R)
    base = adj.istar @ X
    mu2 = unique_cell((X @ r.a) >> r.a, (r.a @ X) >> r.a, name="μ₂", model="rel")
    mu0 = unique_cell((X @ base) >> base, (adj.istar @ X @ X) >> r.a, name="μ₀", model="rel")
    return Monad(adj, r.with_cells(name=f"r#{code}"), mu2, mu0, name=f"rel#{code}")


def enumerate_structures(space: SearchSpace, jobs: int = 1) -> dict:
    """Deterministic list of codes (and the built structures for reuse)."""
    n, p = space.size, space.point
    if space.kind == "simplex2":
        acts = _codes("oplaxaction", n, p, jobs)
        R = Obj("R", n)
        adj = point_adjunction(R, p)
        built = [build_action(c, n, p, adj) for c in acts]
        X = one(R)
        found = []
        for (i, s), (j, t), (k, v) in product(enumerate(built), repeat=3):
            if _exists((X @ s.a) >> t.a, (t.a @ X) >> v.a):
                found.append((acts[i], acts[j], acts[k]))
        return {"kind": space.kind, "size": n, "point": p, "count": len(found), "codes": found}
    codes = _codes(space.kind, n, p, jobs)
    return {"kind": space.kind, "size": n, "point": p, "count": len(codes), "codes": codes}


def build_simplex2(codes, n, p, adj) -> Simplex2:
    s, t, v = (build_action(c, n, p, adj) for c in codes)
    X = one(adj.R)
    alpha = unique_cell((X @ s.a) >> t.a, (t.a @ X) >> v.a, name="α", model="rel")
    return Simplex2(s, t, v, alpha)


# independent numpy route ---------------------------------------------------------

def _compose_12(x, y):
    """``(1⊗x);y`` for ``x, y: R R → R`` as a Boolean tensor ``[a, b, c, d]``."""
    return np.einsum("bcx,axd->abcd", x, y) > 0


def _compose_21(x, y):
    return np.einsum("abx,xcd->abcd", x, y) > 0


def numpy_count(kind: str, n: int, p: int) -> int:
    delta = np.eye(n, dtype=bool)
    ipt = np.zeros(n, dtype=bool)
    ipt[p] = True
    kap = np.einsum("a,bc->abc", ipt, delta)  # i*⊗1
    count = 0
    for code in range(2 ** (n ** 3)):
        x = decode_relation(code, n).astype(np.int64)
        xb = x > 0
        assoc = np.all(~_compose_12(x, x) | _compose_21(x, x))
        unit_r = np.all(~xb[:, p, :] | delta)
        if kind == "skewmon":
            ok = assoc and np.all(~kap | xb) and unit_r
        elif kind in ("monad", "oplaxaction"):
            # (1⊗(i*⊗1));x  ⊆  (x⊗1);x
            lhs = np.einsum("b,xcy->xbcy", ipt, x) > 0
            ok = np.all(~lhs | _compose_21(x, x)) and unit_r
            if kind == "monad":
                mu0_l = np.einsum("x,a,by->xaby", ipt, ipt, delta)
                mu0_r = np.einsum("x,aby->xaby", ipt, x) > 0
                ok = ok and assoc and np.all(~mu0_l | mu0_r)
        else:
            raise ValueError(kind)
        count += bool(ok)
    return count


def compare_counts(n: int, p: int, jobs: int = 1) -> dict:
    """Counts of both kinds, plus a check that the two constructions pair them bijectively."""
    sk = enumerate_structures(SearchSpace(n, p, "skewmon"), jobs)
    mo = enumerate_structures(SearchSpace(n, p, "monad"), jobs)
    R = Obj("R", n)
    adj = point_adjunction(R, p)
    monads = {c: build_monad(c, n, p, adj) for c in mo["codes"]}
    forms = {diagram(mm.r.a).support(): c for c, mm in monads.items()}
    image, fixpoints = [], True
    for c in sk["codes"]:
        sm = build_skew(c, n, p, adj)
        mm = skew_to_monad(sm)
        image.append(forms.get(diagram(mm.r.a).support()))
        fixpoints &= monad_to_skew(mm).same(sm)
    injective = len(set(image)) == len(image) and None not in image
    surjective = set(image) == set(mo["codes"])
    back = [monad_to_skew(mm) for mm in monads.values()]
    surj2 = all(_skew_ok(R, adj, b.m) for b in back)
    return {"size": n, "point": p, "skewmon": sk["count"], "monad": mo["count"],
            "numpy_skewmon": numpy_count("skewmon", n, p), "numpy_monad": numpy_count("monad", n, p),
            "injective": injective, "surjective": surjective and surj2, "fixpoints": fixpoints}
