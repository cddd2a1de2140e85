import pytest
from hypothesis import given, settings, strategies as st

from skewact import kernel as K
from skewact.duality import (canonical_biduality, loop_count, mate_lambda_kappa,
                             opposite_adjunction, point_adjunction, snake_identities, transpose,
                             triangle_identities)
from skewact.kernel import Gen, Obj
from skewact.pasting import (Iso, atoms, cell_by_rule, cell_from_maps, check_equation, diagram,
                             evaluate, G, one, parse1, paste, show1, trace, unique_cell)
from skewact.catalog import Equation
from skewact.skewmon import induced, nonthin_examples


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_snakes_triangles_and_loops(n):
    R = Obj("R", n)
    b = canonical_biduality(R)
    assert snake_identities(b) == (True, True)
    assert loop_count(b) == n
    for p in range(n):
        adj = point_adjunction(R, p)
        assert triangle_identities(adj) == (True, True)
        assert triangle_identities(opposite_adjunction(adj, b)) == (True, True)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_transpose_out_in_is_identity(n, m, data):
    S, X = Obj("S", n), Obj("X", m)
    b = canonical_biduality(S)
    card = {((x,), (d, y)): data.draw(st.integers(0, 2))
            for x in range(m) for d in range(n) for y in range(m)}
    g = G(Gen("g", (X,), (b.Rdual, X), {k: v for k, v in card.items() if v}))
    back = transpose(transpose(g, b, "out"), b, "in")
    assert diagram(back).form == diagram(g).form


def test_parse_show_round_trip():
    R = Obj("R", 2)
    m = Gen("m", (R, R), (R,), {((0, 0), (0,)): 1})
    env = {"R": R, "m": m}
    e = parse1("(1_R ⊗ m) ; m")
    from skewact.pasting import close1
    c = close1(e, env)
    assert diagram(c).form == diagram((one(R) @ G(m)) >> G(m)).form
    assert show1(c) and "m" in show1(c)


def test_mates_are_inverse():
    for sm in nonthin_examples() + [induced(point_adjunction(Obj("R", 3), 1))]:
        lam = mate_lambda_kappa("kappa->lambda", sm.kappa, sm.adj, sm.m)
        assert mate_lambda_kappa("lambda->kappa", lam, sm.adj, sm.m) == sm.kappa


def test_trace_reports_leaves_and_image():
    sm = nonthin_examples()[0]
    X = one(sm.M)
    expr = paste((X @ sm.alpha) >> sm.m)
    val = evaluate(expr).value
    for key in val.src.keys():
        img, steps = trace(expr, key)
        assert img == val.fn[key]
        assert [s[0] for s in steps] == ["α"]


def test_failure_detail_locates_counterexample():
    sm = nonthin_examples()[0]
    X = one(sm.M)
    wrong = cell_by_rule((X @ sm.m) >> sm.m, (sm.m @ X) >> sm.m,
                         lambda xs, ys, s, ts: 0, name="c")
    v = check_equation(Equation("probe", paste(sm.alpha), paste(wrong)))
    assert not v.holds
    assert v.detail["where"] == "entry"
    assert any(t.startswith("α@") for t in v.detail["trace_lhs"])
    assert v.detail["trace_rhs"] == ["c@0|0"]


def test_atoms_and_iso_cells():
    sm = nonthin_examples()[1]
    d = diagram(sm.m)
    key = next(iter(d.keys()))
    assert atoms(d, key)[0][0] == d.boxes[0].name
    X = one(sm.M)
    iso = evaluate(Iso(X @ one(), X))
    assert iso.is_invertible()


def test_unique_cell_rejects_missing_support():
    R = Obj("R", 2)
    f = G(Gen("f", (R,), (R,), {((0,), (0,)): 1}))
    g = G(Gen("g", (R,), (R,), {((1,), (1,)): 1}))
    with pytest.raises(K.ModelError):
        unique_cell(f, g)
    with pytest.raises(K.ModelError):
        cell_from_maps(f, g, {(0, 0): [0]})
