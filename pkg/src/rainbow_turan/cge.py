"""CGE text format and DOT export.

CGE layout::

    # optional comment lines anywhere
    n m
    u v c        (m lines, 0 <= u < v < n, c a color id or '-')
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .graph import ColoredGraph


class CGEFormatError(ValueError):
    pass


def dumps(g: ColoredGraph, header: Optional[dict] = None) -> str:
    lines = []
    if header is not None:
        lines.append("# " + json.dumps(header, sort_keys=True))
    lines.append(f"{g.n} {g.m}")
    for u, v, c in g.colored_edges():
        lines.append(f"{u} {v} {'-' if c is None else c}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> ColoredGraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise CGEFormatError("missing 'n m' header line")
    lineno, head = rows[0]
    if len(head) != 2:
        raise CGEFormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise CGEFormatError(f"line {lineno}: header must hold two integers") from None
    if n < 0 or m < 0:
        raise CGEFormatError(f"line {lineno}: negative size in header")
    body = rows[1:]
    if len(body) != m:
        raise CGEFormatError(f"header announces {m} edges, found {len(body)}")
    triples = []
    seen = set()
    for lineno, parts in body:
        if len(parts) != 3:
            raise CGEFormatError(f"line {lineno}: expected 'u v c'")
        try:
            u, v = int(parts[0]), int(parts[1])
            c = None if parts[2] == "-" else int(parts[2])
        except ValueError:
            raise CGEFormatError(f"line {lineno}: malformed edge line") from None
        if not 0 <= u < v < n:
            raise CGEFormatError(f"line {lineno}: need 0 <= u < v < n, got {u} {v}")
        if c is not None and c < 0:
            raise CGEFormatError(f"line {lineno}: negative color")
        if (u, v) in seen:
            raise CGEFormatError(f"line {lineno}: repeated edge {u} {v}")
        seen.add((u, v))
        triples.append((u, v, c))
    return ColoredGraph.from_colored_edges(n, triples)


def read_header(text: str) -> Optional[dict]:
    """The JSON object on the first comment line, if there is one."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            try:
                obj = json.loads(line[1:])
            except json.JSONDecodeError:
                return None
            return obj if isinstance(obj, dict) else None
        return None
    return None


def read(path) -> ColoredGraph:
    return loads(Path(path).read_text())


def write(g: ColoredGraph, path, header: Optional[dict] = None) -> None:
    Path(path).write_text(dumps(g, header))


def to_dot(g: ColoredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v, c in g.colored_edges():
        label = "" if c is None else f' [label="{c}"]'
        lines.append(f"  {u} -- {v}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
