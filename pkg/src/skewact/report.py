"""Rendering of reports: stable JSON, plain text, and optional matplotlib figures."""
from __future__ import annotations

import json
import os

__all__ = ["to_json", "verdict_rows", "render_text", "plot_verdicts", "plot_counts",
           "plot_selftest"]


def to_json(report: dict) -> str:
    """Byte-stable rendering: sorted keys, no timing, trailing newline."""
    return json.dumps(report, sort_keys=True, ensure_ascii=False, indent=1) + "\n"


def verdict_rows(verdicts) -> list:
    rows = []
    for v in verdicts:
        row = {"axiom": v.name, "holds": v.holds}
        if not v.holds and v.detail:
            d = v.detail
            loc = {k: d[k] for k in ("where", "x", "y", "lhs", "rhs", "boundary") if k in d}
            if "trace_lhs" in d:
                loc["trace_lhs"], loc["trace_rhs"] = d["trace_lhs"], d["trace_rhs"]
            row["counterexample"] = loc
        rows.append(row)
    return rows


def _text_value(v) -> str:
    if isinstance(v, dict):
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def render_text(report: dict, seconds: float | None = None) -> str:
    lines = [f"== {report['command']}"]
    for k in sorted(report):
        if k in ("command", "verdicts", "criteria"):
            continue
        lines.append(f"{k}: {_text_value(report[k])}")
    for row in report.get("verdicts", []):
        lines.append(f"{'PASS' if row['holds'] else 'FAIL'}  {row['axiom']}")
        ce = row.get("counterexample")
        if ce:
            where = f"entry {ce['x']}|{ce['y']}" if "x" in ce else ce.get("where", "")
            lines.append(f"      at {where}: lhs {ce.get('lhs', '?')} vs rhs {ce.get('rhs', '?')}")
            for side in ("trace_lhs", "trace_rhs"):
                if ce.get(side):
                    lines.append(f"      {side[6:]} passes {', '.join(ce[side])}")
    for row in report.get("criteria", []):
        lines.append(f"[{'PASS' if row['passed'] else 'FAIL'}] criterion {row['number']}: "
                     f"{row['name']}")
    if seconds is not None:
        lines.append(f"time: {seconds:.2f}s")
    lines.append("--")
    return "\n".join(lines) + "\n"


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_verdicts(rows: list, out_dir: str, stem: str) -> str:
    plt = _pyplot()
    os.makedirs(out_dir, exist_ok=True)
    names = [r["axiom"] for r in rows]
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(names) + 1), 2.6))
    ax.bar(range(len(names)), [1] * len(names),
           color=["#3a7" if r["holds"] else "#c33" for r in rows])
    ax.set_xticks(range(len(names)), names, rotation=60, ha="right", fontsize=8)
    ax.set_yticks([])
    ax.set_title(f"{stem}: {sum(r['holds'] for r in rows)}/{len(rows)} hold")
    fig.tight_layout()
    path = os.path.join(out_dir, f"{stem}_verdicts.png")
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def plot_counts(counts: list, out_dir: str, stem: str, label: str = "count") -> str:
    plt = _pyplot()
    os.makedirs(out_dir, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.plot(range(len(counts)), counts, "o-")
    for n, c in enumerate(counts):
        ax.annotate(str(c), (n, c), textcoords="offset points", xytext=(0, 5), ha="center")
    ax.set_xlabel("level")
    ax.set_ylabel(label)
    ax.set_xticks(range(len(counts)))
    fig.tight_layout()
    path = os.path.join(out_dir, f"{stem}.png")
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def plot_selftest(rows: list, seconds: list, out_dir: str) -> str:
    plt = _pyplot()
    os.makedirs(out_dir, exist_ok=True)
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.barh([f"{r['number']}" for r in rows], seconds,
            color=["#3a7" if r["passed"] else "#c33" for r in rows])
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_ylabel("criterion")
    fig.tight_layout()
    path = os.path.join(out_dir, "selftest.png")
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path
