"""Report serialization: JSON-lines files and summary figures.

A report file is line-delimited JSON: one header object (toolkit
version, corpus path and hash, run flags) followed by one object per
check result with fields structure/check/m/status and, where present,
witness/direction/error.  Result rows carry no timestamps, so two runs
with the same inputs and flags differ at most in the header line.

Row k (1-based) of a report means the k-th result line, i.e. file line
k+1; replay addresses rows by this index.
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Mapping, Optional, Sequence, TextIO

from matplotlib.figure import Figure

from . import __version__
from .conjecture import CheckResult
from .errors import FormatError

STATUSES = ("holds", "fails", "skipped", "error")

_STATUS_COLORS = {
    "holds": "tab:green",
    "fails": "tab:red",
    "skipped": "tab:gray",
    "error": "tab:orange",
}


def make_header(
    *,
    corpus: str,
    corpus_sha256: str,
    potencies: Sequence[int],
    checks: Sequence[str],
    jobs: int,
    generated_at: str,
) -> dict:
    return {
        "osg_report": 1,
        "version": __version__,
        "corpus": corpus,
        "corpus_sha256": corpus_sha256,
        "flags": {"m": list(potencies), "checks": list(checks), "jobs": jobs},
        "generated_at": generated_at,
    }


def result_to_row(r: CheckResult) -> dict:
    row: dict = {
        "structure": r.structure,
        "check": r.check,
        "m": r.m,
        "status": r.status,
    }
    if r.witness is not None:
        row["witness"] = r.witness
    if r.direction is not None:
        row["direction"] = r.direction
    if r.error is not None:
        row["error"] = r.error
    return row


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def write_report(header: Mapping, results: Iterable[CheckResult], out: TextIO) -> int:
    """Write the header line then one line per result; returns the row count."""
    out.write(_dump(dict(header)) + "\n")
    count = 0
    for r in results:
        out.write(_dump(result_to_row(r)) + "\n")
        count += 1
    return count


_ROW_KEYS = {"structure", "check", "m", "status", "witness", "direction", "error"}


def row_to_result(row: Mapping, line: int = 0) -> CheckResult:
    if not isinstance(row, Mapping):
        raise FormatError("result row is not an object", line)
    extra = set(row) - _ROW_KEYS
    if extra:
        raise FormatError(f"unknown result fields {sorted(extra)}", line)
    try:
        structure = row["structure"]
        check = row["check"]
        m = row["m"]
        status = row["status"]
    except KeyError as exc:
        raise FormatError(f"result row missing field {exc.args[0]!r}", line) from exc
    if not isinstance(structure, str) or not isinstance(check, str):
        raise FormatError("structure and check must be strings", line)
    if not isinstance(m, int) or isinstance(m, bool):
        raise FormatError("m must be an integer", line)
    if status not in STATUSES:
        raise FormatError(f"unknown status {status!r}", line)
    witness = row.get("witness")
    if witness is not None and not isinstance(witness, Mapping):
        raise FormatError("witness must be an object", line)
    direction = row.get("direction")
    if direction is not None and not isinstance(direction, str):
        raise FormatError("direction must be a string", line)
    error = row.get("error")
    if error is not None and not isinstance(error, str):
        raise FormatError("error must be a string", line)
    return CheckResult(
        structure, check, m, status,
        dict(witness) if witness is not None else None,
        direction, error,
    )


def read_report(text: str) -> tuple[dict, list[CheckResult]]:
    """Parse a report file back into its header and result rows."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty report", 1)
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad header: {exc.msg}", 1) from exc
    if not isinstance(header, dict) or header.get("osg_report") != 1:
        raise FormatError("first line is not a report header", 1)
    results = []
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        try:
            row = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad result row: {exc.msg}", i) from exc
        results.append(row_to_result(row, i))
    return header, results


def summary_table(results: Sequence[CheckResult], checks: Sequence[str]) -> str:
    """Fixed-width per-check outcome counts, one line per check id."""
    counts = {cid: dict.fromkeys(STATUSES, 0) for cid in checks}
    for r in results:
        if r.check in counts:
            counts[r.check][r.status] += 1
    width = max((len(c) for c in checks), default=5)
    lines = [f"{'check':<{width}}  {'holds':>6} {'fails':>6} {'skipped':>8} {'error':>6}"]
    for cid in checks:
        c = counts[cid]
        lines.append(
            f"{cid:<{width}}  {c['holds']:>6} {c['fails']:>6} "
            f"{c['skipped']:>8} {c['error']:>6}"
        )
    return "\n".join(lines)


def render_figures(results: Sequence[CheckResult], outdir) -> list[str]:
    """Render summary charts for a result set into outdir.

    Produces check_outcomes.png (stacked outcome counts per check) and
    fails_by_potency.png (failure rows per potency); returns the paths.
    """
    outdir = os.fspath(outdir)
    os.makedirs(outdir, exist_ok=True)
    checks: list[str] = []
    counts: dict[str, dict[str, int]] = {}
    for r in results:
        if r.check not in counts:
            checks.append(r.check)
            counts[r.check] = dict.fromkeys(STATUSES, 0)
        counts[r.check][r.status] += 1

    fig = Figure(figsize=(8, max(3.0, 0.3 * len(checks) + 1.5)))
    ax = fig.subplots()
    ys = list(range(len(checks)))
    left = [0] * len(checks)
    for status in STATUSES:
        vals = [counts[c][status] for c in checks]
        ax.barh(ys, vals, left=left, color=_STATUS_COLORS[status], label=status)
        left = [a + b for a, b in zip(left, vals)]
    ax.set_yticks(ys, labels=checks)
    ax.invert_yaxis()
    ax.set_xlabel("runs")
    ax.set_title("check outcomes")
    ax.legend(loc="lower right", fontsize="small")
    fig.tight_layout()
    outcomes_path = os.path.join(outdir, "check_outcomes.png")
    fig.savefig(outcomes_path, dpi=120)

    pots = sorted({r.m for r in results})
    fails = {m: 0 for m in pots}
    for r in results:
        if r.status == "fails":
            fails[r.m] += 1
    fig2 = Figure(figsize=(6, 4))
    ax2 = fig2.subplots()
    ax2.bar([str(m) for m in pots], [fails[m] for m in pots], color="tab:red")
    ax2.set_xlabel("potency m")
    ax2.set_ylabel("fails rows")
    ax2.set_title("failures by potency")
    fig2.tight_layout()
    potency_path = os.path.join(outdir, "fails_by_potency.png")
    fig2.savefig(potency_path, dpi=120)
    return [outcomes_path, potency_path]
