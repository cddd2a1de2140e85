import pytest
from hypothesis import given, settings, strategies as st

from skewact.acceptance import image_simplicial_set
from skewact.bijection import skew_to_monad
from skewact.duality import point_adjunction
from skewact.kernel import Obj
from skewact.oplax import regular_action
from skewact.simplicial import (Cc, E, catalan, catalan_counts, catalan_nondegenerate,
                                check_simplex2, check_simplex3, cosk_fill, degeneracy3,
                                s0_edge, s1_edge, validate)
from skewact.skewmon import induced, nonthin_examples, xor_monoid


def test_catalan_counts_and_identities():
    assert catalan_counts(3) == [1, 2, 5, 14]
    X = catalan(3)
    assert validate(X) == []
    assert set(catalan_nondegenerate(X, 2)) == {(E, Cc, E), (Cc, Cc, Cc)}


def test_catalan_is_two_coskeletal_at_level_three():
    X = catalan(3)
    spheres = cosk_fill(X, 3)
    fillers = [tuple(X.face(3, i, x) for i in range(4)) for x in X.levels[3]]
    assert sorted(spheres) == sorted(fillers)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.data())
def test_catalan_labelings_are_closed(n, data):
    X = catalan(4)
    x = data.draw(st.sampled_from(X.levels[n]))
    for i in range(n + 1 if n else 0):
        assert X.face(n, i, x) in X.levels[n - 1]
    for j in range(n + 1):
        assert X.degen(n, j, x) in X.levels[n + 1] if n < 4 else True


@pytest.mark.parametrize("mo", [skew_to_monad(s) for s in
                                (xor_monoid(), nonthin_examples()[2],
                                 induced(point_adjunction(Obj("R", 2), 0)))],
                         ids=lambda m: m.name)
def test_monad_image_is_simplicial(mo):
    assert validate(image_simplicial_set(mo)) == []
    for x in (s0_edge(mo.r), s1_edge(mo.r), s0_edge(regular_action(mo.adj))):
        assert all(check_simplex2(x))
        for j in range(3):
            assert all(check_simplex3(degeneracy3(x, j)))
