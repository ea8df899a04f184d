"""Reader and writer for the UHG v1 plain-text hypergraph format.

Line 1 holds ``k n m``; each of the next ``m`` lines holds the ``k``
space-separated 1-based vertex ids of one edge. Trailing blank lines are
tolerated, nothing else is.
"""

from __future__ import annotations

import os
from pathlib import Path

from .errors import HyperspecError, ParseError
from .hypergraph import Hypergraph, make_hypergraph


def _ints(line: str, lineno: int, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"non-integer token in {what}: {line.strip()!r}", line=lineno) from None


def loads(text: str) -> Hypergraph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", line=1)

    header = _ints(lines[0], 1, "header")
    if len(header) != 3:
        raise ParseError(f"header must be 'k n m', got {len(header)} fields", line=1)
    k, n, m = header
    if k < 2 or n < k or m < 0:
        raise ParseError(f"invalid header values k={k} n={n} m={m}", line=1)
    if len(lines) - 1 != m:
        # point at the first missing or first surplus edge line
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1}",
                         line=min(len(lines) + 1, m + 2))

    edges = []
    for offset, line in enumerate(lines[1:], start=2):
        verts = _ints(line, offset, "edge")
        if len(verts) != k:
            raise ParseError(f"edge has {len(verts)} entries, expected {k}", line=offset)
        edges.append(verts)
    try:
        return make_hypergraph(k, n, edges)
    except HyperspecError as exc:
        lineno = exc.details.get("edge")
        raise ParseError(str(exc), line=None if lineno is None else lineno + 2) from exc


def dumps(G: Hypergraph) -> str:
    out = [f"{G.k} {G.n} {G.m}"]
    out.extend(" ".join(map(str, e)) for e in G.edges)
    return "\n".join(out) + "\n"


def load(path: str | os.PathLike) -> Hypergraph:
    return loads(Path(path).read_text())


def dump(G: Hypergraph, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps(G))
