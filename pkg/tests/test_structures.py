import pytest

from skewact.bijection import (MONAD_AXIOMS, check_monad, check_monad_map, monad_from_map,
                               monad_map, monad_to_skew, roundtrip_monad, roundtrip_skew,
                               skew_to_monad)
from skewact.duality import point_adjunction
from skewact.kernel import Obj
from skewact.oplax import (check_action, check_action_cell, identity_cell, regular_action,
                           underlying_action)
from skewact.skewmon import (all_monoids, check_alt, check_standard, from_monoid, induced,
                             is_monoidale, nonthin_examples, to_alt, to_standard, xor_monoid)


def _structures():
    out = [induced(point_adjunction(Obj("R", n), p)) for n in (1, 2, 3) for p in range(n)]
    out += [xor_monoid(), from_monoid([[0, 1, 2], [1, 2, 0], [2, 0, 1]], 0, "Z3")]
    return out + nonthin_examples()


STRUCTS = _structures()


@pytest.mark.parametrize("sm", STRUCTS, ids=lambda s: s.name)
def test_alt_and_standard_presentations(sm):
    assert all(check_alt(sm))
    std = to_standard(sm)
    assert all(check_standard(std))
    assert to_alt(std, sm.adj).same(sm)


@pytest.mark.parametrize("sm", STRUCTS, ids=lambda s: s.name)
def test_skew_monad_round_trips(sm):
    mo = skew_to_monad(sm)
    verdicts = check_monad(mo)
    assert [v.name for v in verdicts] == list(MONAD_AXIOMS)
    assert all(verdicts)
    assert all(roundtrip_skew(sm).values())
    assert all(roundtrip_monad(mo).values())
    assert all(check_alt(monad_to_skew(mo)))


@pytest.mark.parametrize("sm", STRUCTS[:4] + nonthin_examples()[:1], ids=lambda s: s.name)
def test_monads_are_maps_out_of_catalan(sm):
    mo = skew_to_monad(sm)
    fm = monad_map(mo)
    assert all(check_monad_map(fm).values())
    assert monad_from_map(fm).same(mo)


def test_monoid_tables():
    tables = all_monoids(3)
    # with unit 0: one of size 1, two of size 2, and the size-3 tables
    assert sum(len(t) == 1 for t in tables) == 1
    assert sum(len(t) == 2 for t in tables) == 2
    assert all(all(check_alt(from_monoid(t, 0))) for t in tables)


def test_group_monoidales_are_invertible():
    assert is_monoidale(to_standard(xor_monoid()))


def test_actions():
    adj = point_adjunction(Obj("R", 2), 1)
    assert all(check_action(regular_action(adj)))
    for sm in nonthin_examples():
        act = underlying_action(sm)
        assert all(check_action(act))
        assert all(check_action_cell(identity_cell(act)))
