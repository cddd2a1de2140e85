import io
import json
import subprocess
import sys

import pytest

from skewact.cli import run
from skewact.fixtures import data_path, mutation_files

INDUCED = data_path("induced_size2.json")
MU2 = data_path("mutations/monad_mu2.json")


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_catalan_counts():
    code, out = call("catalan", "--max-dim", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == [1, 2, 5, 14]
    code, out = call("catalan", "--max-dim", "3")
    assert "counts: 1 2 5 14" in out


def test_check_induced_file():
    code, out = call("check", INDUCED, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert {r["axiom"] for r in rep["verdicts"]} == {"SKM1", "SKM2'", "SKM3'", "SKM4", "SKM5'"}


def test_roundtrip_on_corrupted_mu2_names_axiom():
    code, out = call("roundtrip", MU2, "--format", "json")
    rep = json.loads(out)
    assert code == 1
    assert "2SIM1(μ₂)" in rep["failing"]
    code, out = call("roundtrip", MU2)
    assert "FAIL  2SIM1(μ₂)" in out and "mu2@" in out


@pytest.mark.parametrize("path", mutation_files(), ids=lambda p: p.rsplit("/", 1)[-1])
def test_mutations_exit_one(path):
    code, out = call("check", path, "--format", "json")
    assert code == 1
    rep = json.loads(out)
    assert rep["failing"]
    assert any("trace_lhs" in r.get("counterexample", {}) for r in rep["verdicts"])


def test_malformed_input_exits_two(tmp_path):
    bad = tmp_path / "bad.json"
    doc = json.load(open(INDUCED, encoding="utf-8"))
    doc["cells2"]["alpha"]["maps"]["0|0"] = [7]
    bad.write_text(json.dumps(doc))
    code, out = call("check", str(bad), "--format", "json")
    assert code == 2
    assert json.loads(out)["path"].startswith("$.cells2.alpha.maps")
    bad.write_text("{not json")
    assert call("check", str(bad))[0] == 2
    assert call("check", str(tmp_path / "missing.json"))[0] == 2
    assert call("enumerate", "--size", "3")[0] == 2


def test_convert_then_check(tmp_path):
    m = tmp_path / "m.json"
    s = tmp_path / "s.json"
    from skewact.fileio import dump_file
    from skewact.skewmon import nonthin_examples
    sources = [INDUCED]
    for k, sm in enumerate(nonthin_examples()):
        sources.append(str(tmp_path / f"nonthin{k}.json"))
        dump_file(sources[-1], "skewmon", sm)
    for src in sources:
        assert call("check", src)[0] == 0
        assert call("convert", "--to", "monad", "-o", str(m), src)[0] == 0
        assert call("check", str(m))[0] == 0
        assert call("convert", "--to", "skewmon", "-o", str(s), str(m))[0] == 0
        assert call("check", str(s))[0] == 0
        assert call("roundtrip", str(s))[0] == 0
    assert call("convert", "--to", "skewmon", INDUCED)[0] == 2


def test_enumerate_matches_golden():
    code, out = call("enumerate", "--size", "2", "--point", "1", "--kind", "monad",
                     "--jobs", "2", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 8
    code, out = call("enumerate", "--golden", "--format", "json")
    assert code == 0 and json.loads(out)["matches_committed"] is True


def test_json_is_byte_identical():
    a = call("check", MU2, "--format", "json")[1]
    b = call("check", MU2, "--format", "json")[1]
    assert a == b
    assert "time" not in json.loads(a)


def test_plots_written(tmp_path):
    code, out = call("check", INDUCED, "--plot", str(tmp_path), "--format", "json")
    figs = json.loads(out)["figures"]
    assert code == 0 and figs and all((tmp_path / f.rsplit("/", 1)[-1]).exists() for f in figs)
    code, out = call("catalan", "--plot", str(tmp_path))
    assert (tmp_path / "catalan.png").exists()


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "skewact", "catalan", "--format", "json"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and json.loads(r.stdout)["counts"] == [1, 2, 5, 14]
