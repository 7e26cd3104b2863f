"""Edge-list file ingest and emit.

Format: one edge per line, two whitespace-separated integer labels.
Lines starting with '#' are comments; blank lines are skipped. Arbitrary
labels are remapped to dense ids 0..n-1 (first-seen order of the sorted
label set) and the original labels ride along on the Graph for output.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass

from .graph import Graph


class EdgeListParseError(ValueError):
    """Malformed edge-list line; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class ParseReport:
    """What the reader kept and what it dropped."""

    edges_kept: int
    duplicates_dropped: int
    self_loops_dropped: int


def read_edge_list(path: str | os.PathLike[str]) -> Graph:
    g, _ = read_edge_list_with_report(path)
    return g


def read_edge_list_with_report(
    path: str | os.PathLike[str],
) -> tuple[Graph, ParseReport]:
    """Parse an edge-list file.

    Duplicate edges (either orientation) and self-loops are dropped, with
    counts reported. A file with no usable edge lines is a domain error;
    a line that is neither a comment nor two integers is a parse error.
    """
    raw_edges: list[tuple[int, int]] = []
    dup = 0
    loops = 0
    seen: set[tuple[int, int]] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise EdgeListParseError(
                    f"expected two integer labels, got {stripped!r}", line_no)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError(
                    f"non-integer label in {stripped!r}", line_no) from None
            if a == b:
                loops += 1
                continue
            key = (a, b) if a < b else (b, a)
            if key in seen:
                dup += 1
                continue
            seen.add(key)
            raw_edges.append(key)

    if not raw_edges:
        raise ValueError(f"no edges found in {os.fspath(path)!r}")

    labels = sorted({x for e in raw_edges for x in e})
    to_id = {lab: i for i, lab in enumerate(labels)}
    g = Graph(len(labels), ((to_id[a], to_id[b]) for a, b in raw_edges),
              labels=labels)
    return g, ParseReport(edges_kept=len(raw_edges), duplicates_dropped=dup,
                          self_loops_dropped=loops)


def write_edge_list(g: Graph, path: str | os.PathLike[str]) -> None:
    """Write the canonical form: original labels, ascending endpoints per
    line, lines sorted numerically, one trailing newline per line."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(edge_list_text(g))


def edge_list_text(g: Graph) -> str:
    lab = g.labels
    rows = []
    for u, v in g.edges():
        a, b = lab[u], lab[v]
        if a > b:
            a, b = b, a
        rows.append((a, b))
    rows.sort()
    buf = io.StringIO()
    for a, b in rows:
        buf.write(f"{a} {b}\n")
    return buf.getvalue()
