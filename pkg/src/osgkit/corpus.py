"""Reading and writing the .osg corpus text format.

A file holds one or more records:

    %osg 1
    name ch2
    size 2
    mul
    0 0
    0 1
    leq
    0 1
    end

mul is followed by exactly n rows of n space-separated element indices.
leq lists the strict pairs i j (meaning i < j) and must be explicitly
transitively closed; reflexive pairs are implied and never written.
Lines starting with '#' and blank lines are ignored.  write_corpus emits
a canonical serialization: pairs sorted lexicographically, one blank
line between records, so write(parse(text)) == text for canonical text.
"""

from __future__ import annotations

import re
from typing import Iterator, Sequence, TextIO

from .errors import FormatError, OsgkitError
from .structures import OrderedSemigroup, validate_structure

_MAGIC = "%osg 1"
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next_content(self) -> tuple[int, str] | None:
        """Next non-blank, non-comment line as (1-based number, stripped text)."""
        while self.pos < len(self.lines):
            self.pos += 1
            raw = self.lines[self.pos - 1].strip()
            if raw and not raw.startswith("#"):
                return self.pos, raw
        return None

    def require(self, what: str) -> tuple[int, str]:
        got = self.next_content()
        if got is None:
            raise FormatError(f"unexpected end of file, expected {what}", len(self.lines) or 1)
        return got


def _parse_record(src: _Lines, first_line: int, first: str) -> OrderedSemigroup:
    if first != _MAGIC:
        raise FormatError(f"expected {_MAGIC!r}, got {first!r}", first_line)

    ln, text = src.require("'name <ident>'")
    parts = text.split()
    if len(parts) != 2 or parts[0] != "name" or not _NAME_RE.match(parts[1]):
        raise FormatError(f"expected 'name <ident>', got {text!r}", ln)
    name = parts[1]

    ln, text = src.require("'size <n>'")
    parts = text.split()
    if len(parts) != 2 or parts[0] != "size" or not parts[1].isdigit():
        raise FormatError(f"expected 'size <n>', got {text!r}", ln)
    n = int(parts[1])
    if n < 1:
        raise FormatError("size must be at least 1", ln)

    ln, text = src.require("'mul'")
    if text != "mul":
        raise FormatError(f"expected 'mul', got {text!r}", ln)
    table = []
    for _ in range(n):
        ln, text = src.require("a mul row")
        parts = text.split()
        if len(parts) != n:
            raise FormatError(f"mul row has {len(parts)} entries, expected {n}", ln)
        row = []
        for p in parts:
            if not p.isdigit() or not 0 <= int(p) < n:
                raise FormatError(f"mul entry {p!r} outside 0..{n - 1}", ln)
            row.append(int(p))
        table.append(row)

    ln, text = src.require("'leq'")
    if text != "leq":
        raise FormatError(f"expected 'leq', got {text!r}", ln)
    leq = [[i == j for j in range(n)] for i in range(n)]
    while True:
        ln, text = src.require("a leq pair or 'end'")
        if text == "end":
            break
        parts = text.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"expected 'i j' pair or 'end', got {text!r}", ln)
        i, j = int(parts[0]), int(parts[1])
        if not (0 <= i < n and 0 <= j < n):
            raise FormatError(f"leq pair ({i}, {j}) outside 0..{n - 1}", ln)
        if i == j:
            raise FormatError(f"leq lists strict pairs only, got ({i}, {j})", ln)
        leq[i][j] = True

    try:
        return validate_structure(table, leq, name=name)
    except OsgkitError as exc:
        exc.args = (f"record {name!r} (starting line {first_line}): {exc}",)
        raise


def parse_corpus(text: str) -> list[OrderedSemigroup]:
    """Parse every record of a corpus; names must be unique."""
    src = _Lines(text)
    out: list[OrderedSemigroup] = []
    names: set[str] = set()
    while True:
        got = src.next_content()
        if got is None:
            break
        record = _parse_record(src, *got)
        if record.name in names:
            raise FormatError(f"duplicate record name {record.name!r}", got[0])
        names.add(record.name)
        out.append(record)
    if not out:
        raise FormatError("no records found", 1)
    return out


def format_record(s: OrderedSemigroup) -> str:
    lines = [_MAGIC, f"name {s.name}", f"size {s.size}", "mul"]
    for row in s.mul:
        lines.append(" ".join(str(v) for v in row))
    lines.append("leq")
    for i in range(s.size):
        for j in range(s.size):
            if i != j and s.leq[i][j]:
                lines.append(f"{i} {j}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def write_corpus(structures: Sequence[OrderedSemigroup] | Iterator[OrderedSemigroup], out: TextIO) -> int:
    """Write records in canonical form; returns the number written."""
    count = 0
    for s in structures:
        if count:
            out.write("\n")
        out.write(format_record(s))
        count += 1
    return count
