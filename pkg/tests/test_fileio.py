import copy
import json
import random

import pytest

from skewact.bijection import skew_to_monad
from skewact.checks import check_loaded
from skewact.fileio import SchemaError, dump, load
from skewact.fixtures import data_path, mutation_files
from skewact.opmon import P, Q
from skewact.samples import random_opmon_simplex2, random_vertex
from skewact.skewmon import nonthin_examples, xor_monoid


def _cycle(kind, value, **kw):
    doc = json.loads(json.dumps(dump(kind, value, **kw)))
    ld = load(doc)
    return doc, ld


def _samples():
    rng = random.Random(3)
    R, S, T = (random_vertex(rng, n) for n in "RST")
    x = random_opmon_simplex2(rng, R, S, T)
    return [("skewmon", nonthin_examples()[3], {}), ("monad", skew_to_monad(xor_monoid()), {}),
            ("opmon-simplex2", x, {}),
            ("simplex2", Q(P(x, S.b, T.b), R, S, T), {"vertices": {"R": R, "S": S, "T": T}})]


@pytest.mark.parametrize("kind,value,kw", _samples(), ids=lambda v: v if isinstance(v, str) else "")
def test_dump_load_dump_is_stable(kind, value, kw):
    doc, ld = _cycle(kind, value, **kw)
    assert all(check_loaded(ld))
    again = dump(kind, ld.value, vertices=ld.vertices or None)
    assert again == doc


def test_shipped_induced_file_passes():
    from skewact.fileio import load_file
    ld = load_file(data_path("induced_size2.json"))
    vs = check_loaded(ld)
    assert [v.name for v in vs] == ["SKM1", "SKM2'", "SKM3'", "SKM4", "SKM5'"]
    assert all(vs)


def _base():
    return dump("skewmon", nonthin_examples()[0])


@pytest.mark.parametrize("edit,path", [
    (lambda d: d["objects"]["N"].update(size="two"), "$.objects.N.size"),
    (lambda d: d["cells2"]["alpha"]["maps"].update({"0|0": [0, 1]}), "$.cells2.alpha.maps.0|0"),
    (lambda d: d["cells2"]["alpha"]["maps"].update({"0|0": [0, 1, 2, 9]}), "$.cells2.alpha.maps.0|0"),
    (lambda d: d["cells2"]["alpha"]["maps"].pop("0|0"), "$.cells2.alpha.maps"),
    (lambda d: d["structure"].update(kind="bogus"), "$.structure.kind"),
    (lambda d: d["structure"].update(alpha="nope"), "$.structure.alpha"),
    (lambda d: d.pop("structure"), "$"),
])
def test_schema_errors_name_the_key(edit, path):
    doc = copy.deepcopy(_base())
    edit(doc)
    with pytest.raises(SchemaError) as err:
        load(doc)
    assert err.value.path.startswith(path)


def test_every_mutation_fixture_fails_where_it_says():
    files = mutation_files()
    assert len(files) >= 12
    for path in files:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        meta = doc["mutation"]
        failed = [v for v in check_loaded(load(doc)) if not v.holds]
        assert [v.name for v in failed] == meta["fails"], path
        tag = f"{meta['cell']}@{meta['entry']}"
        assert any(tag in v.detail["trace_lhs"] + v.detail["trace_rhs"] for v in failed), path
        # undoing the single change restores validity
        fixed = copy.deepcopy(doc)
        fixed["cells2"][meta["cell"]]["maps"][meta["entry"]][meta["position"]] = meta["was"]
        assert all(check_loaded(load(fixed))), path
