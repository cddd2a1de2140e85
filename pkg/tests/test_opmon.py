"""Randomized properties of the transposition P, its inverse, and the whiskering Q."""
import random

from hypothesis import given, settings, strategies as st

from skewact.oplax import check_action
from skewact.opmon import (P, P_inv, Q, Q_morphism, action_to_arrow, arrow_to_action,
                           check_arrow, check_ir_js, check_om6, check_om7,
                           check_opmon_simplex2, check_transposed, check_transposed3,
                           check_transposed_morphism, module_laws, transpose_cell)
from skewact.samples import (opmon_tetrahedron, perturb_cell, random_arrow,
                             random_induced_action, random_opmon_simplex2, random_vertex,
                             relabel_simplex2)
from skewact.simplicial import Simplex3, check_morphism2, check_simplex2, check_simplex3

seeds = st.integers(0, 10**9)
SETTINGS = settings(max_examples=12, deadline=None)


def _triple(rng):
    return [random_vertex(rng, n) for n in "RST"]


@SETTINGS
@given(seeds)
def test_arrows_transpose_to_actions(seed):
    rng = random.Random(seed)
    R, S = random_vertex(rng, "R"), random_vertex(rng, "S")
    f, _ = random_arrow(rng, R, S)
    assert all(check_arrow(f))
    act = arrow_to_action(f, S.b)
    assert all(check_action(act))
    back = action_to_arrow(act, S.b)
    assert back.C2 == f.C2 and back.C0 == f.C0


@SETTINGS
@given(seeds)
def test_P_is_invertible_and_carries_axioms(seed):
    rng = random.Random(seed)
    R, S, T = _triple(rng)
    x = random_opmon_simplex2(rng, R, S, T)
    assert all(check_opmon_simplex2(x))
    y = P(x, S.b, T.b)
    assert all(check_transposed(y))
    assert P_inv(y, S.b, T.b).alpha == x.alpha
    assert P(P_inv(y, S.b, T.b), S.b, T.b).alpha == y.alpha


@SETTINGS
@given(seeds)
def test_axioms_correspond_on_unconstrained_cells(seed):
    rng = random.Random(seed)
    R, S, T = _triple(rng)
    z = random_opmon_simplex2(rng, R, S, T, uniform=False)
    assert all(check_opmon_simplex2(z)) == all(check_transposed(P(z, S.b, T.b)))


@SETTINGS
@given(seeds)
def test_Q_gives_simplices_with_module_structure(seed):
    rng = random.Random(seed)
    R, S, T = _triple(rng)
    q = Q(P(random_opmon_simplex2(rng, R, S, T), S.b, T.b), R, S, T)
    assert all(check_simplex2(q))
    for act, V in ((q.s, R), (q.t, S), (q.v, R)):
        assert all(check_action(act))
        assert all(module_laws(act, V))
    assert all(check_ir_js(q, R, S))


@SETTINGS
@given(seeds)
def test_induced_family_modules(seed):
    rng = random.Random(seed)
    R, S = random_vertex(rng, "R"), random_vertex(rng, "S")
    act = random_induced_action(rng, R, S)
    assert all(check_action(act))
    assert all(module_laws(act, R))


@SETTINGS
@given(seeds)
def test_morphisms(seed):
    rng = random.Random(seed)
    R, S, T = _triple(rng)
    x = random_opmon_simplex2(rng, R, S, T)
    y, sg, ta, nu = relabel_simplex2(rng, x, R, S, T)
    assert all(check_om6(x, y, sg, ta, nu))
    X, Y = P(x, S.b, T.b), P(y, S.b, T.b)
    sh, th, nh = transpose_cell(sg, S.b), transpose_cell(ta, T.b), transpose_cell(nu, T.b)
    assert all(check_transposed_morphism(X, Y, sh, th, nh))
    assert all(check_morphism2(Q(X, R, S, T), Q(Y, R, S, T), Q_morphism(sh, R, S.R),
                               Q_morphism(th, S, T.R), Q_morphism(nh, R, T.R)))
    bad = perturb_cell(rng, sg)
    if bad is not None:
        assert all(check_om6(x, y, bad, ta, nu)) == all(
            check_transposed_morphism(X, Y, transpose_cell(bad, S.b), th, nh))


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_tetrahedra(seed):
    rng = random.Random(seed)
    V = [random_vertex(rng, n) for n in "RSTU"]
    R, S, T, U = V
    g = opmon_tetrahedron(rng, V)
    assert all(check_om7(g))
    faces = [P(g.alpha, S.b, T.b), P(g.beta, S.b, U.b), P(g.gamma, T.b, U.b),
             P(g.zeta, T.b, U.b)]
    assert all(check_transposed3(Simplex3(*faces)))
    q = Simplex3(Q(faces[0], R, S, T), Q(faces[1], R, S, U), Q(faces[2], R, T, U),
                 Q(faces[3], S, T, U))
    assert all(check_simplex3(q))
