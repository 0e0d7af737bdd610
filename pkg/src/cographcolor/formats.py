"""Text formats: edge lists, colorings, cotree JSON, triangulations, DOT.

Edge list::

    n m
    u v        (m lines, 0 <= u < v < n, no repeats)

Coloring: one ``v c`` line per vertex, ``c >= 1``, each vertex exactly once.

Triangulation: the edge list of the chordal supergraph with every added edge
flagged by a trailing ``+``.

Blank lines and lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

import json
import re
from json.decoder import scanstring
from typing import Iterable, Sequence

from .cotree import JOIN, LEAF, UNION, Cotree, CotreeBuilder, CotreeError
from .graph import Coloring, Graph


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line.split()))
    return out


def _ints(no: int, fields: list[str], count: int) -> list[int]:
    if len(fields) != count:
        raise FormatError(f"line {no}: expected {count} integers, got {' '.join(fields)!r}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"line {no}: not an integer in {' '.join(fields)!r}") from None


def parse_edge_list(text: str) -> Graph:
    return _parse_edges(text, allow_flags=False)[0]


def _parse_edges(text: str, allow_flags: bool) -> tuple[Graph, set[tuple[int, int]]]:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty edge list")
    no, head = lines[0]
    n, m = _ints(no, head, 2)
    if n < 0 or m < 0:
        raise FormatError(f"line {no}: negative counts")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    seen = set()
    flagged = set()
    for no, fields in body:
        flag = allow_flags and len(fields) == 3 and fields[2] == "+"
        u, v = _ints(no, fields[:2] if flag else fields, 2)
        if not 0 <= u < v < n:
            raise FormatError(f"line {no}: edge ({u}, {v}) must satisfy 0 <= u < v < {n}")
        if (u, v) in seen:
            raise FormatError(f"line {no}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        if flag:
            flagged.add((u, v))
    return Graph(n, seen), flagged


def write_edge_list(g: Graph, flagged: Iterable[tuple[int, int]] = ()) -> str:
    marks = set(flagged)
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v} +" if (u, v) in marks else f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    assigned: dict[int, int] = {}
    for no, fields in _lines(text):
        v, c = _ints(no, fields, 2)
        if v in assigned:
            raise FormatError(f"line {no}: vertex {v} colored twice")
        if c < 1:
            raise FormatError(f"line {no}: color {c} is not positive")
        assigned[v] = c
    size = len(assigned) if n is None else n
    if sorted(assigned) != list(range(size)):
        raise FormatError(f"coloring must assign every vertex 0..{size - 1} exactly once")
    return tuple(assigned[v] for v in range(size))


def write_coloring(phi: Sequence[int]) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(phi))


def parse_triangulation(text: str) -> tuple[Graph, Graph]:
    """Return ``(base, result)`` from a flagged edge list."""
    result, flagged = _parse_edges(text, allow_flags=True)
    return Graph(result.n, result.edges - flagged), result


def write_triangulation(base: Graph, result: Graph) -> str:
    return write_edge_list(result, result.edges - base.edges)


# -- cotree JSON -------------------------------------------------------------------------

_KIND_NAMES = {LEAF: "leaf", UNION: "union", JOIN: "join"}


def cotree_to_json(t: Cotree) -> str:
    """Nested ``{"kind": ..., "children"|"vertex": ...}`` objects, built without recursion."""
    parts: list[str] = []
    stack: list = [t.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        if t.kind[item] == LEAF:
            parts.append('{"kind":"leaf","vertex":%d}' % t.vertex[item])
            continue
        parts.append('{"kind":"%s","children":[' % _KIND_NAMES[t.kind[item]])
        stack.append("]}")
        kids = t.children[item]
        for idx in range(len(kids) - 1, -1, -1):
            stack.append(kids[idx])
            if idx:
                stack.append(",")
    return "".join(parts)


_WS = re.compile(r"[ \t\n\r]*")
_SCALAR = re.compile(r"-?(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][-+]?\d+)?|true|false|null")
_LITERALS = {"true": True, "false": False, "null": None}


def _loads_deep(text: str):
    """Iterative JSON decoder, used when nesting defeats ``json.loads``."""
    stack: list = []        # open containers as [value, pending key]
    pos = _WS.match(text, 0).end()
    while True:
        ch = text[pos:pos + 1]
        if ch in ("{", "["):
            frame = [{} if ch == "{" else [], None]
            pos = _WS.match(text, pos + 1).end()
            closer = "}" if ch == "{" else "]"
            if text[pos:pos + 1] != closer:
                stack.append(frame)
                if ch == "{":
                    pos = _read_key(text, pos, frame)
                continue
            value = frame[0]
            pos += 1
        elif ch == '"':
            value, pos = scanstring(text, pos + 1)
        else:
            m = _SCALAR.match(text, pos)
            if m is None:
                raise ValueError(f"unexpected character at offset {pos}")
            tok = m.group()
            if tok in _LITERALS:
                value = _LITERALS[tok]
            elif tok.lstrip("-").isdigit():
                value = int(tok)
            else:
                value = float(tok)
            pos = m.end()
        # attach the finished value, closing as many containers as the input does
        while True:
            pos = _WS.match(text, pos).end()
            if not stack:
                if pos != len(text):
                    raise ValueError(f"extra data at offset {pos}")
                return value
            top = stack[-1]
            if isinstance(top[0], dict):
                top[0][top[1]] = value
            else:
                top[0].append(value)
            sep = text[pos:pos + 1]
            if sep == ",":
                pos = _WS.match(text, pos + 1).end()
                if isinstance(top[0], dict):
                    pos = _read_key(text, pos, top)
                break
            if sep != ("}" if isinstance(top[0], dict) else "]"):
                raise ValueError(f"expected ',' or a closing bracket at offset {pos}")
            value = stack.pop()[0]
            pos += 1


def _read_key(text: str, pos: int, frame: list) -> int:
    if text[pos:pos + 1] != '"':
        raise ValueError(f"expected a key at offset {pos}")
    frame[1], pos = scanstring(text, pos + 1)
    pos = _WS.match(text, pos).end()
    if text[pos:pos + 1] != ":":
        raise ValueError(f"expected ':' at offset {pos}")
    return _WS.match(text, pos + 1).end()


def cotree_from_json(text: str) -> Cotree:
    try:
        try:
            doc = json.loads(text)
        except RecursionError:
            doc = _loads_deep(text)
    except ValueError as exc:
        raise FormatError(f"invalid cotree JSON: {exc}") from None
    b = CotreeBuilder()
    result: list[int] = []
    close = object()
    stack: list = [(doc, result)]
    while stack:
        node, sink = stack.pop()
        if node is close:
            kind, kids, parent_sink = sink
            if len(kids) < 2:
                raise FormatError(f"{_KIND_NAMES[kind]} node needs at least 2 children")
            parent_sink.append(b.add(kind, kids))
            continue
        if not isinstance(node, dict) or "kind" not in node:
            raise FormatError(f"cotree node must be an object with a 'kind': {node!r:.60}")
        kind = node["kind"]
        if kind == "leaf":
            v = node.get("vertex")
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise FormatError(f"leaf needs a non-negative integer vertex, got {v!r}")
            sink.append(b.add_leaf(v))
        elif kind in ("union", "join"):
            kids = node.get("children")
            if not isinstance(kids, list):
                raise FormatError(f"{kind} node needs a children list")
            frame = (UNION if kind == "union" else JOIN, [], sink)
            stack.append((close, frame))
            stack.extend((k, frame[1]) for k in reversed(kids))
        else:
            raise FormatError(f"unknown node kind {kind!r}")
    try:
        return b.build()
    except CotreeError as exc:
        raise FormatError(str(exc)) from None


# -- DOT -------------------------------------------------------------------------------

_PALETTE = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
            "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"]


def to_dot(g: Graph, phi: Sequence[int] | None = None,
           bold: Iterable[tuple[int, int]] = ()) -> str:
    """Undirected DOT; vertices filled by color class, ``bold`` edges drawn thick."""
    heavy = set(bold)
    out = ["graph G {", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.n):
        if phi is None:
            out.append(f"  {v};")
        else:
            fill = _PALETTE[(phi[v] - 1) % len(_PALETTE)]
            out.append(f'  {v} [label="{v}\\n{phi[v]}", fillcolor="{fill}"];')
    for u, v in g.sorted_edges():
        out.append(f"  {u} -- {v} [penwidth=3];" if (u, v) in heavy else f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
