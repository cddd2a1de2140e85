import itertools

import pytest
from hypothesis import given, settings, strategies as st

from skewact import kernel as K
from skewact.kernel import Gen, Obj


def _matmul(p, q):
    out = {}
    for (x, y), u in p.items():
        for (y2, z), v in q.items():
            if y == y2:
                out[(x, z)] = out.get((x, z), 0) + u * v
    return out


def _kron(p, q, nx, ny):
    """Row-major flat indices: the second factor varies fastest."""
    out = {}
    for ((x, y), u), ((x2, y2), v) in itertools.product(p.items(), q.items()):
        out[(x * nx + x2, y * ny + y2)] = u * v
    return out


@st.composite
def gens(draw, n=None, arity=(1, 1)):
    n = n or draw(st.integers(1, 3))
    R = Obj("R", n)
    src, dst = (R,) * arity[0], (R,) * arity[1]
    card = {}
    for xs in itertools.product(range(n), repeat=arity[0]):
        for ys in itertools.product(range(n), repeat=arity[1]):
            k = draw(st.integers(0, 2))
            if k:
                card[(xs, ys)] = k
    return Gen(f"g{draw(st.integers(0, 10**6))}", src, dst, card)


@st.composite
def chains(draw):
    n = draw(st.integers(1, 3))
    return [draw(gens(n)) for _ in range(3)]


@settings(max_examples=40, deadline=None)
@given(chains())
def test_seq_is_matrix_product_and_associative(fs):
    a, b, c = (K.d_gen(f) for f in fs)
    left, right = K.d_seq(K.d_seq(a, b), c), K.d_seq(a, K.d_seq(b, c))
    assert left.form == right.form
    assert left.matrix() == _matmul(_matmul(a.matrix(), b.matrix()), c.matrix())


@settings(max_examples=40, deadline=None)
@given(chains())
def test_tensor_is_kronecker_and_interchange(fs):
    a, b, c = (K.d_gen(f) for f in fs)
    t = K.d_tensor(a, b)
    nx, ny = K.word_size(b.src), K.word_size(b.dst)
    assert t.matrix() == _kron(a.matrix(), b.matrix(), nx, ny)
    assert K.d_tensor(t, c).form == K.d_tensor(a, K.d_tensor(b, c)).form
    lhs = K.d_seq(K.d_tensor(a, b), K.d_tensor(b, c))
    rhs = K.d_tensor(K.d_seq(a, b), K.d_seq(b, c))
    assert lhs.form == rhs.form


@settings(max_examples=30, deadline=None)
@given(gens())
def test_units(f):
    a = K.d_gen(f)
    assert K.d_seq(K.d_id(a.src), a).form == a.form == K.d_seq(a, K.d_id(a.dst)).form
    assert K.d_tensor(K.d_id(()), a).form == a.form


@settings(max_examples=30, deadline=None)
@given(gens(), st.randoms(use_true_random=False))
def test_cells_compose_like_functions(f, rnd):
    a = K.d_gen(f)
    maps = {pos: rnd.sample(range(len(ks)), len(ks)) for pos, ks in a.entries.items()}
    p = K.cell_from_lists(a, a, maps)
    q = K.cell_from_lists(a, a, {pos: rnd.sample(v, len(v)) for pos, v in maps.items()})
    idc = K.identity2(a)
    assert K.equal2(K.vcomp2(idc, p), p)[0] and K.equal2(K.vcomp2(p, idc), p)[0]
    assert K.equal2(K.vcomp2(K.vcomp2(p, q), p), K.vcomp2(p, K.vcomp2(q, p)))[0]
    for op in ("seq", "tensor"):
        lhs = K.vcomp2(K.hcomp2(op, p, q), K.hcomp2(op, q, p))
        rhs = K.hcomp2(op, K.vcomp2(p, q), K.vcomp2(q, p))
        assert K.equal2(lhs, rhs)[0]
    assert p.is_invertible()


def test_flat_index_round_trip():
    w = (Obj("A", 2), Obj("B", 3))
    for i in range(6):
        assert K.flat_index(w, K.unflat_index(w, i)) == i


def test_boundary_errors():
    R, S = Obj("R", 2), Obj("S", 2)
    f = Gen("f", (R,), (R,), {((0,), (1,)): 1})
    g = Gen("g", (S,), (S,), {})
    with pytest.raises(K.BoundaryError):
        K.d_seq(K.d_gen(f), K.d_gen(g))


def test_unique2_needs_singletons():
    R = Obj("R", 1)
    f = Gen("f", (R,), (R,), {((0,), (0,)): 2})
    d = K.d_gen(f)
    with pytest.raises(K.ModelError):
        K.unique2(d, d)
    assert isinstance(K.unique2(d, d, rel=True), K.RelCell2)


def test_rel_cells_need_inclusion():
    R = Obj("R", 2)
    f = K.d_gen(Gen("f", (R,), (R,), {((0,), (0,)): 1}))
    g = K.d_gen(Gen("g", (R,), (R,), {((0,), (0,)): 1, ((1,), (0,)): 1}))
    K.RelCell2(f, g)
    with pytest.raises(K.ModelError):
        K.RelCell2(g, f)
