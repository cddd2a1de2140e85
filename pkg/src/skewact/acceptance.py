"""The acceptance suite: nine criteria, each returning a pass flag and a summary."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import kernel as K
from .bijection import (_m_tetrahedra, check_monad, kappa_to_mu0, monad_from_map, monad_map,
                        monad_simplices, monad_to_skew, mu0_to_kappa, recovered_associator,
                        roundtrip_monad, roundtrip_skew, skew_to_monad)
from .duality import (Adjunction, canonical_biduality, mate_lambda_kappa, point_adjunction,
                      snake_identities, triangle_identities)
from .enumeration import (SearchSpace, build_monad, build_skew, compare_counts,
                          enumerate_structures)
from .fixtures import data_path, mutation_files
from .kernel import Gen, Obj
from .oplax import regular_action
from .opmon import (P, P_inv, Q, Q_morphism, Vertex, check_ir_js, check_om6, check_om7,
                    check_opmon_simplex2, check_transposed, check_transposed3,
                    check_transposed_morphism, module_laws, transpose_cell)
from .samples import (opmon_tetrahedron, random_induced_action, random_opmon_simplex2,
                      random_vertex, relabel_simplex2)
from .simplicial import (Cc, E, FiniteSimplicialSet, Simplex3, catalan, catalan_counts,
                         catalan_nondegenerate, check_morphism2, check_simplex2, check_simplex3,
                         degeneracy3, faces2, faces3, s0_edge, s1_edge, validate)
from .skewmon import all_monoids, check_alt, from_monoid, induced, nonthin_examples, xor_monoid

__all__ = ["CRITERIA", "Result", "run_criterion", "run_all", "DEFAULT_SEED", "skew_suite",
           "monad_suite", "image_simplicial_set", "RANDOM_INSTANCES"]

DEFAULT_SEED = 20240901
RANDOM_INSTANCES = 100


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    summary: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.name}"


# deterministic suite -------------------------------------------------------------

@lru_cache(maxsize=None)
def skew_suite():
    """Labelled skew monoidales in the alternative presentation."""
    out = []
    for n in range(1, 5):
        R = Obj("R", n)
        for p in range(n):
            out.append((f"induced({n},{p})", induced(point_adjunction(R, p))))
    for k, t in enumerate(all_monoids(3)):
        out.append((f"monoid#{k}", from_monoid(t, 0, name=f"Mon{k}")))
    out.append(("xor", xor_monoid()))
    out += [(sm.name, sm) for sm in nonthin_examples()]
    for n, p in ((1, 0), (2, 0), (2, 1)):
        adj = point_adjunction(Obj("R", n), p)
        for c in enumerate_structures(SearchSpace(n, p, "skewmon"))["codes"]:
            out.append((f"rel({n},{p})#{c}", build_skew(c, n, p, adj)))
    return tuple(out)


@lru_cache(maxsize=None)
def monad_suite():
    out = [(f"monad[{name}]", skew_to_monad(sm)) for name, sm in skew_suite()]
    for n, p in ((1, 0), (2, 0), (2, 1)):
        adj = point_adjunction(Obj("R", n), p)
        for c in enumerate_structures(SearchSpace(n, p, "monad"))["codes"]:
            out.append((f"relmonad({n},{p})#{c}", build_monad(c, n, p, adj)))
    return tuple(out)


# criteria --------------------------------------------------------------------------

def c1_bijection(seed, jobs):
    bad = []
    for name, sm in skew_suite():
        if not all(roundtrip_skew(sm).values()):
            bad.append(f"skew {name}")
    for name, mo in monad_suite():
        if not all(roundtrip_monad(mo).values()):
            bad.append(f"monad {name}")
    return not bad, {"skew": len(skew_suite()), "monads": len(monad_suite()), "failures": bad}


def c2_twelve(seed, jobs):
    bad = []
    for name, sm in skew_suite():
        if not all(check_monad(skew_to_monad(sm))):
            bad.append(f"skewToMonad {name}")
    for name, mo in monad_suite():
        if not all(check_alt(monad_to_skew(mo))):
            bad.append(f"monadToSkew {name}")
    return not bad, {"structures": len(skew_suite()) + len(monad_suite()), "failures": bad}


def c3_identities(seed, jobs):
    bad = []
    for name, sm in skew_suite():
        mo = skew_to_monad(sm)
        adj, m = sm.adj, sm.m
        if recovered_associator(mo) != mo.r.a2:
            bad.append(f"associator {name}")
        if mu0_to_kappa(kappa_to_mu0(sm.kappa, adj), adj, m) != sm.kappa:
            bad.append(f"κ→μ₀→κ {name}")
        lam = mate_lambda_kappa("kappa->lambda", sm.kappa, adj, m)
        if mate_lambda_kappa("lambda->kappa", lam, adj, m) != sm.kappa:
            bad.append(f"κ→λ→κ {name}")
        if mate_lambda_kappa("kappa->lambda", mate_lambda_kappa("lambda->kappa", lam, adj, m),
                             adj, m) != lam:
            bad.append(f"λ→κ→λ {name}")
    for name, mo in monad_suite():
        k = mu0_to_kappa(mo.mu0, mo.adj, mo.r.a)
        if kappa_to_mu0(k, mo.adj) != mo.mu0:
            bad.append(f"μ₀→κ→μ₀ {name}")
    return not bad, {"structures": len(skew_suite()) + len(monad_suite()), "failures": bad}


def c4_counting(seed, jobs):
    rows = [compare_counts(n, p, jobs) for n, p in ((1, 0), (2, 0), (2, 1))]
    with open(data_path("golden_counts.json"), encoding="utf-8") as fh:
        golden = json.load(fh)
    ok = True
    for r in rows:
        key = f"{r['size']},{r['point']}"
        g = golden["skewmon"].get(key), golden["monad"].get(key)
        ok &= (r["skewmon"] == r["monad"] == r["numpy_skewmon"] == r["numpy_monad"]
               and r["injective"] and r["surjective"] and r["fixpoints"]
               and g == (r["skewmon"], r["monad"]))
    return ok, {"rows": rows}


def c5_catalan(seed, jobs):
    counts = catalan_counts(3)
    X = catalan(3)
    nd = catalan_nondegenerate(X, 2)
    ok = counts == [1, 2, 5, 14] and set(nd) == {(E, Cc, E), (Cc, Cc, Cc)}
    # a monad is recovered from the images of c, (e,c,e) and (c,c,c)
    recovered = sum(monad_from_map(monad_map(mo)).same(mo) for _, mo in monad_suite())
    ok &= recovered == len(monad_suite())
    return ok, {"counts": counts, "nondegenerate": ["".join(x) for x in nd],
                "monads recovered": f"{recovered}/{len(monad_suite())}"}


def image_simplicial_set(mo) -> FiniteSimplicialSet:
    """The image of the Catalan simplicial set inside oplax actions, through level 3."""
    fm = monad_map(mo)
    levels = {n: list(fm[n].values()) for n in range(4)}

    def face(n, i, y):
        if n == 1:
            return (y.target, y.over.adj)[i]
        return (faces2 if n == 2 else faces3)(y)[i]

    def degen(n, j, y):
        if n == 0:
            return regular_action(y)
        if n == 1:
            return (s0_edge, s1_edge)[j](y)
        return degeneracy3(y, j)

    def same(a, b):
        if isinstance(a, Adjunction) or isinstance(b, Adjunction):
            return a is b
        return a.same(b)

    return FiniteSimplicialSet(levels, face, degen, same=same)


def c6_hygiene(seed, jobs):
    bad = []
    if validate(catalan(3)):
        bad.append("catalan")
    for name, mo in monad_suite():
        if validate(image_simplicial_set(mo)):
            bad.append(f"image {name}")
        r = mo.r
        for deg in (s0_edge(r), s1_edge(r), s0_edge(regular_action(mo.adj))):
            if not all(check_simplex2(deg)):
                bad.append(f"degenerate {name}")
        for g in _m_tetrahedra(mo):
            if not all(check_simplex3(g)):
                bad.append(f"M {name}")
    return not bad, {"monads": len(monad_suite()), "failures": bad}


def _random_batch(args):
    seed, lo, hi = args
    tally: dict = {}

    def mark(key, ok):
        a = tally.setdefault(key, [0, 0])
        a[0] += bool(ok)
        a[1] += 1

    for i in range(lo, hi):
        rng = random.Random(f"{seed}:{i}")
        R, S, T = (random_vertex(rng, n) for n in "RST")
        x = random_opmon_simplex2(rng, R, S, T)
        y = P(x, S.b, T.b)
        om = all(check_opmon_simplex2(x))
        mark("premise: OM4/OM5 on the sampled family", om)
        mark("OM4/OM5 ⇒ A1–A3", not om or all(check_transposed(y)))
        back = P_inv(y, S.b, T.b)
        mark("P′∘P = id", back.alpha == x.alpha)
        mark("P∘P′ = id", P(back, S.b, T.b).alpha == y.alpha)
        q = Q(y, R, S, T)
        mark("A ⇒ 2SIM under Q", not all(check_transposed(y)) or all(check_simplex2(q)))
        mark("ψ module laws", all(module_laws(q.s, R)) and all(module_laws(q.t, S))
             and all(module_laws(q.v, R)))
        mark("ψ module laws (induced family)", all(module_laws(random_induced_action(rng, R, S), R)))
        mark("IR/JS", not all(check_simplex2(q)) or all(check_ir_js(q, R, S)))
        # the converse direction on per-entry random cells
        z = random_opmon_simplex2(rng, R, S, T, uniform=False)
        zom = all(check_opmon_simplex2(z))
        mark("OM4/OM5 ⇔ A1–A3 (unconstrained cells)",
             zom == all(check_transposed(P(z, S.b, T.b))))
        mark("info: unconstrained cells satisfying OM4/OM5", zom)
        # morphisms: OM6 ⇒ A4 ⇒ 2SIM4
        x2, sg, ta, nu = relabel_simplex2(rng, x, R, S, T)
        y2 = P(x2, S.b, T.b)
        sh, th, nh = transpose_cell(sg, S.b), transpose_cell(ta, T.b), transpose_cell(nu, T.b)
        a4 = all(check_transposed_morphism(y, y2, sh, th, nh))
        om6 = all(check_om6(x, x2, sg, ta, nu))
        mark("premise: OM6 on relabellings", om6)
        mark("OM6 ⇒ A4", not om6 or a4)
        mark("A4 ⇒ 2SIM4 under Q", not a4 or all(check_morphism2(
            q, Q(y2, R, S, T), Q_morphism(sh, R, S.R), Q_morphism(th, S, T.R), Q_morphism(nh, R, T.R))))
        if i % 4 == 0:
            V = [R, S, T, random_vertex(rng, "U")]
            g = opmon_tetrahedron(rng, V)
            U = V[3]
            faces = [P(g.alpha, S.b, T.b), P(g.beta, S.b, U.b), P(g.gamma, T.b, U.b),
                     P(g.zeta, T.b, U.b)]
            a5 = all(check_transposed3(Simplex3(*faces)))
            om7 = all(check_om7(g))
            mark("premise: OM7 on sampled tetrahedra", om7)
            mark("OM7 ⇒ A5", not om7 or a5)
            qs = Simplex3(Q(faces[0], R, S, T), Q(faces[1], R, S, U), Q(faces[2], R, T, U),
                          Q(faces[3], S, T, U))
            mark("A5 ⇒ 3SIM under Q", not a5 or all(check_simplex3(qs)))
    return tally


def _deterministic_formulas():
    tally: dict = {}

    def mark(key, ok):
        a = tally.setdefault(key, [0, 0])
        a[0] += bool(ok)
        a[1] += 1

    verts = {}

    def vertex_of(adj):
        if id(adj) not in verts:
            verts[id(adj)] = Vertex(adj, canonical_biduality(adj.R))
        return verts[id(adj)]

    for name, mo in monad_suite():
        V = vertex_of(mo.adj)
        for act in (mo.r, regular_action(mo.adj)):
            if mo.r.a2.rel:
                continue
            mark("ψ module laws", all(module_laws(act, V)))
        if mo.r.a2.rel:
            continue
        for x in (*monad_simplices(mo), s0_edge(mo.r), s1_edge(mo.r)):
            mark("IR/JS", all(check_ir_js(x, V, V)))
    return tally


def c7_formulas(seed, jobs, n=RANDOM_INSTANCES):
    chunks = [(seed, lo, min(n, lo + 10)) for lo in range(0, n, 10)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_random_batch, chunks))
    else:
        parts = [_random_batch(c) for c in chunks]
    tally: dict = {}
    for part in parts:
        for k, (a, b) in part.items():
            t = tally.setdefault(k, [0, 0])
            t[0] += a
            t[1] += b
    det = _deterministic_formulas()
    ok = (all(a == b for k, (a, b) in tally.items() if not k.startswith("info:"))
          and all(a == b for a, b in det.values()))
    main = ("P′∘P = id", "P∘P′ = id", "OM4/OM5 ⇒ A1–A3", "A ⇒ 2SIM under Q", "ψ module laws",
            "IR/JS")
    ok &= all(tally[k][1] >= n for k in main)
    return ok, {"random": {k: f"{a}/{b}" for k, (a, b) in sorted(tally.items())},
                "deterministic": {k: f"{a}/{b}" for k, (a, b) in sorted(det.items())}}


def _kernel_gens(n: int):
    """Small generators on an object of size ``n``, one of them with a doubled entry."""
    R = Obj("R", n)
    f = Gen(f"f{n}", (R,), (R,), {((a,), ((a + 1) % n,)): 1 + (a == 0) for a in range(n)})
    g = Gen(f"g{n}", (R,), (R,), {((a,), (b,)): 1 for a in range(n) for b in range(n) if a <= b})
    h = Gen(f"h{n}", (R, R), (R,), {((a, b), (max(a, b),)): 1 for a in range(n) for b in range(n)})
    k = Gen(f"k{n}", (R,), (R, R), {((a,), (a, b)): 1 for a in range(n) for b in range(n) if b <= a})
    return R, f, g, h, k


def _matmul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (x, y), u in p.items():
        for (y2, z), v in q.items():
            if y == y2:
                out[(x, z)] = out.get((x, z), 0) + u * v
    return out


def _copy_swap(d: K.Diagram):
    """Exchange the two copies of every doubled atom; the identity elsewhere."""
    def flip(key):
        xs, ys, at = key
        new = []
        for b, (ins, outs, c) in zip(d.order, at):
            n = d.boxes[b].card.get((ins, outs), 1)
            new.append((ins, outs, (n - 1 - c) if n == 2 else c))
        return (xs, ys, tuple(new))
    return K.Cell2(d, d, {key: flip(key) for key in d.keys()})


def c8_kernel(seed, jobs):
    bad = []
    for n in range(1, 5):
        R, f, g, h, k = _kernel_gens(n)
        F, Gg, H, Kk = (K.d_gen(x) for x in (f, g, h, k))
        I1 = K.d_id((R,))
        seq, ten = K.d_seq, K.d_tensor
        checks = {
            "seq assoc": seq(seq(F, Gg), F).form == seq(F, seq(Gg, F)).form,
            "tensor assoc": ten(ten(F, Gg), F).form == ten(F, ten(Gg, F)).form,
            "seq units": seq(I1, F).form == F.form == seq(F, I1).form,
            "tensor units": ten(K.d_id(()), F).form == F.form == ten(F, K.d_id(())).form,
            "interchange": seq(ten(F, Gg), ten(Gg, F)).form == ten(seq(F, Gg), seq(Gg, F)).form,
            "seq matrix": seq(seq(Kk, H), F).matrix() == _matmul(_matmul(Kk.matrix(), H.matrix()),
                                                                 F.matrix()),
            "split/merge": seq(Kk, H).matrix() == _matmul(Kk.matrix(), H.matrix()),
        }
        sw = _copy_swap(F)
        idF = K.identity2(F)
        checks["vertical units"] = (K.equal2(K.vcomp2(idF, sw), sw)[0]
                                    and K.equal2(K.vcomp2(sw, idF), sw)[0])
        checks["vertical assoc"] = K.equal2(K.vcomp2(K.vcomp2(sw, sw), sw),
                                            K.vcomp2(sw, K.vcomp2(sw, sw)))[0]
        checks["involution"] = K.equal2(K.vcomp2(sw, sw), idF)[0]
        for op in ("seq", "tensor"):
            lhs = K.vcomp2(K.hcomp2(op, sw, idF), K.hcomp2(op, idF, sw))
            rhs = K.hcomp2(op, K.vcomp2(sw, idF), K.vcomp2(idF, sw))
            checks[f"2-cell interchange ({op})"] = K.equal2(lhs, rhs)[0]
            a = K.hcomp2(op, K.hcomp2(op, sw, idF), sw)
            b = K.hcomp2(op, sw, K.hcomp2(op, idF, sw))
            checks[f"horizontal assoc ({op})"] = K.equal2(a, b)[0]
        for p in range(n):
            checks[f"triangles p={p}"] = all(triangle_identities(point_adjunction(R, p)))
        checks["snakes"] = all(snake_identities(canonical_biduality(R)))
        bad += [f"n={n}: {name}" for name, v in checks.items() if not v]
    return not bad, {"sizes": [1, 2, 3, 4], "failures": bad}


def c9_negative(seed, jobs):
    from .checks import check_loaded
    from .fileio import load_file
    rows, ok = [], True
    files = mutation_files()
    for path in files:
        with open(path, encoding="utf-8") as fh:
            meta = json.load(fh)["mutation"]
        loaded = load_file(path)
        verdicts = check_loaded(loaded)
        failed = [v for v in verdicts if not v.holds]
        tag = f"{meta['cell']}@{meta['entry']}"
        located = any(tag in v.detail.get("trace_lhs", []) + v.detail.get("trace_rhs", [])
                      for v in failed)
        good = bool(failed) and located
        ok &= good
        rows.append({"fixture": path.rsplit("/", 1)[-1], "checker": meta["checker"],
                     "failed": [v.name for v in failed], "located": located})
    checkers = {r["checker"] for r in rows}
    return ok and len(rows) > 0, {"fixtures": rows, "checkers": sorted(checkers)}


CRITERIA = {
    1: ("bijection fixpoints", c1_bijection),
    2: ("twelve-axiom validity", c2_twelve),
    3: ("associator and unit identities", c3_identities),
    4: ("counting oracle", c4_counting),
    5: ("Catalan counts", c5_catalan),
    6: ("simplicial hygiene", c6_hygiene),
    7: ("formula properties", c7_formulas),
    8: ("kernel laws", c8_kernel),
    9: ("negative controls", c9_negative),
}


def run_criterion(k: int, seed: int = DEFAULT_SEED, jobs: int = 1) -> Result:
    name, fn = CRITERIA[k]
    t0 = time.perf_counter()
    ok, summary = fn(seed, jobs)
    return Result(k, name, bool(ok), summary, time.perf_counter() - t0)


def run_all(seed: int = DEFAULT_SEED, jobs: int = 1) -> list:
    return [run_criterion(k, seed, jobs) for k in CRITERIA]
