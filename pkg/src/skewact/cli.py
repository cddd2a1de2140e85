"""``skewact`` command line."""
from __future__ import annotations

import argparse
import sys
import time

from .acceptance import DEFAULT_SEED
from .fileio import SchemaError

__all__ = ["main", "build_parser", "run"]

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2


class Abort(Exception):
    def __init__(self, code: int, report: dict):
        super().__init__(report.get("error"))
        self.code, self.report = code, report


def _load(path: str):
    from .fileio import load_file
    try:
        return load_file(path)
    except FileNotFoundError:
        raise Abort(EXIT_MALFORMED, {"error": f"no such file: {path}", "path": "$"}) from None
    except SchemaError as err:
        raise Abort(EXIT_MALFORMED, {"error": str(err), "path": err.path}) from None


def _verdict_report(command, path, loaded, verdicts):
    from .report import verdict_rows
    rows = verdict_rows(verdicts)
    ok = all(r["holds"] for r in rows)
    rep = {"command": command, "file": path, "kind": loaded.kind, "model": loaded.model,
           "verdicts": rows, "status": "pass" if ok else "fail"}
    if not ok:
        rep["failing"] = [r["axiom"] for r in rows if not r["holds"]]
    return rep, (EXIT_OK if ok else EXIT_FAIL)


def cmd_check(args):
    from .checks import check_loaded
    ld = _load(args.file)
    return _verdict_report("check", args.file, ld, check_loaded(ld))


def _convert_value(ld, to: str):
    from .bijection import monad_to_skew, skew_to_monad
    from .skewmon import AltSkewMonoidale
    if to == "monad":
        if ld.kind != "skewmon" or not isinstance(ld.value, AltSkewMonoidale):
            raise Abort(EXIT_MALFORMED, {"error": "convert --to monad needs a skew monoidale "
                                         "with an adjunction (alternative presentation)",
                                         "path": "$.structure.kind"})
        return "monad", skew_to_monad(ld.value)
    if ld.kind != "monad":
        raise Abort(EXIT_MALFORMED, {"error": "convert --to skewmon needs a monad",
                                     "path": "$.structure.kind"})
    return "skewmon", monad_to_skew(ld.value)


def cmd_convert(args):
    from .fileio import dump
    ld = _load(args.file)
    kind, value = _convert_value(ld, args.to)
    doc = dump(kind, value, model=ld.model)
    if args.output:
        import json
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, ensure_ascii=False)
            fh.write("\n")
    rep = {"command": "convert", "file": args.file, "to": kind, "status": "pass"}
    if args.output:
        rep["output"] = args.output
    else:
        rep["document"] = doc
    return rep, EXIT_OK


def cmd_roundtrip(args):
    from .bijection import roundtrip_monad, roundtrip_skew
    from .checks import check_loaded
    from .skewmon import AltSkewMonoidale
    ld = _load(args.file)
    if ld.kind == "monad":
        trip = roundtrip_monad
    elif ld.kind == "skewmon" and isinstance(ld.value, AltSkewMonoidale):
        trip = roundtrip_skew
    else:
        raise Abort(EXIT_MALFORMED, {"error": "roundtrip needs a monad or a skew monoidale "
                                     "with an adjunction", "path": "$.structure.kind"})
    rep, code = _verdict_report("roundtrip", args.file, ld, check_loaded(ld))
    fix = trip(ld.value)
    rep["fixpoint"] = {k: bool(v) for k, v in fix.items()}
    if code == EXIT_OK and not all(fix.values()):
        code = EXIT_FAIL
        rep["status"] = "fail"
        rep["failing"] = [f"roundtrip {k}" for k, v in fix.items() if not v]
    return rep, code


def cmd_enumerate(args):
    from .enumeration import CapExceeded, SearchSpace, enumerate_structures
    if args.golden:
        import json
        from .fixtures import data_path, golden_counts
        table = golden_counts(args.jobs)
        with open(data_path("golden_counts.json"), encoding="utf-8") as fh:
            same = json.load(fh) == table
        return ({"command": "enumerate", "golden": table, "matches_committed": same,
                 "status": "pass" if same else "fail"}, EXIT_OK if same else EXIT_FAIL)
    if args.size is None:
        raise Abort(EXIT_MALFORMED, {"error": "--size is required", "path": "--size"})
    try:
        space = SearchSpace(args.size, args.point, args.kind)
    except CapExceeded as err:
        raise Abort(EXIT_MALFORMED, {"error": str(err), "path": "--size"}) from None
    except ValueError as err:
        raise Abort(EXIT_MALFORMED, {"error": str(err), "path": "--point"
                                     if "point" in str(err) else "--kind"}) from None
    res = enumerate_structures(space, args.jobs)
    rep = {"command": "enumerate", "kind": args.kind, "size": args.size, "point": args.point,
           "count": res["count"], "status": "pass"}
    if args.codes:
        rep["codes"] = [list(c) if isinstance(c, tuple) else c for c in res["codes"]]
    return rep, EXIT_OK


def cmd_catalan(args):
    from .simplicial import catalan, catalan_counts, catalan_nondegenerate
    counts = catalan_counts(args.max_dim)
    X = catalan(args.max_dim)
    nd = {str(n): ["".join(x) for x in catalan_nondegenerate(X, n)] for n in range(args.max_dim + 1)}
    return {"command": "catalan", "max_dim": args.max_dim, "counts": counts,
            "nondegenerate": nd, "status": "pass"}, EXIT_OK


def cmd_selftest(args):
    from .acceptance import CRITERIA, run_criterion
    rows, secs = [], []
    for k in CRITERIA:
        r = run_criterion(k, args.seed, args.jobs)
        rows.append({"number": r.number, "name": r.name, "passed": r.passed,
                     "summary": r.summary})
        secs.append(r.seconds)
    ok = all(r["passed"] for r in rows)
    rep = {"command": "selftest", "seed": args.seed, "criteria": rows,
           "status": "pass" if ok else "fail"}
    return rep, (EXIT_OK if ok else EXIT_FAIL), secs


COMMANDS = {"check": cmd_check, "convert": cmd_convert, "roundtrip": cmd_roundtrip,
            "enumerate": cmd_enumerate, "catalan": cmd_catalan, "selftest": cmd_selftest}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--plot", metavar="DIR", help="also write matplotlib figures to DIR")
    p = argparse.ArgumentParser(prog="skewact",
                                description="Skew monoidales and monads of oplax actions "
                                            "in finite matrix models.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="run every applicable axiom")
    c.add_argument("file")
    c = sub.add_parser("convert", parents=[common], help="skew monoidale <-> monad")
    c.add_argument("--to", choices=("monad", "skewmon"), required=True)
    c.add_argument("-o", "--output")
    c.add_argument("file")
    c = sub.add_parser("roundtrip", parents=[common], help="check, then both round trips")
    c.add_argument("file")
    c = sub.add_parser("enumerate", parents=[common], help="exhaustive Rel scan")
    c.add_argument("--size", type=int)
    c.add_argument("--point", type=int, default=0)
    c.add_argument("--kind", default="skewmon",
                   choices=("skewmon", "monad", "oplaxaction", "simplex2"))
    c.add_argument("--codes", action="store_true", help="list the relation codes found")
    c.add_argument("--golden", action="store_true",
                   help="recompute every committed golden count and compare")
    c = sub.add_parser("catalan", parents=[common], help="the Catalan simplicial set")
    c.add_argument("--max-dim", type=int, default=3)
    sub.add_parser("selftest", parents=[common], help="the acceptance suite")
    return p


def _plots(args, rep, secs):
    from . import report
    out = []
    if rep["command"] in ("check", "roundtrip") and "verdicts" in rep:
        stem = args.file.rsplit("/", 1)[-1].rsplit(".", 1)[0]
        out.append(report.plot_verdicts(rep["verdicts"], args.plot, stem))
    elif rep["command"] == "catalan":
        out.append(report.plot_counts(rep["counts"], args.plot, "catalan", "simplices"))
    elif rep["command"] == "selftest":
        out.append(report.plot_selftest(rep["criteria"], secs, args.plot))
    return out


def run(argv=None, out=None) -> int:
    from .report import render_text, to_json
    out = out or sys.stdout
    p = build_parser()
    args = p.parse_args(argv)
    t0 = time.perf_counter()
    secs = None
    try:
        res = COMMANDS[args.command](args)
        rep, code = res[0], res[1]
        secs = res[2] if len(res) > 2 else None
    except Abort as ab:
        rep, code = {"command": args.command, "status": "malformed", **ab.report}, ab.code
        if ab.code != EXIT_MALFORMED:
            rep["status"] = "fail"
    if args.plot and code != EXIT_MALFORMED:
        rep["figures"] = _plots(args, rep, secs)
    if args.format == "json":
        out.write(to_json(rep))
    else:
        out.write(render_text(rep, time.perf_counter() - t0))
    return code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
