"""Text and JSON serialization for hypergraphs and set families.

Hypergraph text format::

    # optional comment lines anywhere
    n r
    v1 v2 ... vr        (one edge per line, strictly increasing vertices)

Set-family text format is the same with a single-integer header ``n`` and
member lines of arbitrary (positive, possibly mixed) lengths.

JSON formats::

    {"n": ..., "r": ..., "edges": [[...], ...]}
    {"n": ..., "members": [[...], ...]}

Members and edges are emitted sorted by mask value, the package's
canonical storage order.  Parsing is strict: bad headers, out-of-range
or repeated vertices, non-increasing lines, wrong edge sizes and
duplicate lines are all reported with their line number.
"""

from __future__ import annotations

import json
from typing import Any

from .hypergraph import Hypergraph, SetFamily, mask_of

__all__ = [
    "ParseError",
    "parse_hypergraph",
    "parse_set_family",
    "serialize_hypergraph",
    "serialize_set_family",
    "hypergraph_to_json",
    "hypergraph_from_json",
    "set_family_to_json",
    "set_family_from_json",
]


class ParseError(ValueError):
    """Malformed input; carries the 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped))
    return out


def _parse_ints(lineno: int, line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {line!r}") from None


def _parse_member_line(lineno: int, line: str, n: int) -> int:
    vs = _parse_ints(lineno, line)
    if not vs:
        raise ParseError(lineno, "empty member line")
    prev = 0
    for v in vs:
        if not 1 <= v <= n:
            raise ParseError(lineno, f"vertex {v} out of range [1, {n}]")
        if v <= prev:
            raise ParseError(lineno, "vertices must be strictly increasing")
        prev = v
    return mask_of(vs)


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "missing header line 'n r'")
    lineno, header = lines[0]
    hdr = _parse_ints(lineno, header)
    if len(hdr) != 2:
        raise ParseError(lineno, f"header must be 'n r', got {header!r}")
    n, r = hdr
    if n < 0 or r < 0:
        raise ParseError(lineno, f"header values must be nonnegative, got n={n} r={r}")
    masks = []
    seen = set()
    for lineno, line in lines[1:]:
        m = _parse_member_line(lineno, line, n)
        if m.bit_count() != r:
            raise ParseError(lineno, f"edge has {m.bit_count()} vertices, expected {r}")
        if m in seen:
            raise ParseError(lineno, "duplicate edge")
        seen.add(m)
        masks.append(m)
    return Hypergraph.from_masks(n, r, masks)


def parse_set_family(text: str) -> SetFamily:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "missing header line 'n'")
    lineno, header = lines[0]
    hdr = _parse_ints(lineno, header)
    if len(hdr) != 1:
        raise ParseError(lineno, f"header must be a single integer 'n', got {header!r}")
    n = hdr[0]
    if n < 0:
        raise ParseError(lineno, f"ground set size must be nonnegative, got {n}")
    masks = []
    seen = set()
    for lineno, line in lines[1:]:
        m = _parse_member_line(lineno, line, n)
        if m in seen:
            raise ParseError(lineno, "duplicate member")
        seen.add(m)
        masks.append(m)
    return SetFamily.from_masks(n, masks)


def serialize_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r}"]
    lines.extend(" ".join(map(str, vs)) for vs in h.vertex_sets())
    return "\n".join(lines) + "\n"


def serialize_set_family(f: SetFamily) -> str:
    lines = [str(f.n)]
    lines.extend(" ".join(map(str, vs)) for vs in f.vertex_sets())
    return "\n".join(lines) + "\n"


def hypergraph_to_json(h: Hypergraph) -> dict[str, Any]:
    return {"n": h.n, "r": h.r, "edges": [list(vs) for vs in h.vertex_sets()]}


def hypergraph_from_json(data: Any) -> Hypergraph:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or not {"n", "r", "edges"} <= set(data):
        raise ValueError("expected an object with keys 'n', 'r', 'edges'")
    return Hypergraph.from_vertex_sets(int(data["n"]), int(data["r"]), data["edges"])


def set_family_to_json(f: SetFamily) -> dict[str, Any]:
    return {"n": f.n, "members": [list(vs) for vs in f.vertex_sets()]}


def set_family_from_json(data: Any) -> SetFamily:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or not {"n", "members"} <= set(data):
        raise ValueError("expected an object with keys 'n', 'members'")
    return SetFamily.from_vertex_sets(int(data["n"]), data["members"])
