"""graph6 encoding, DOT output and the JSON report document."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .graph import Graph, VertexSet

SCHEMA_VERSION = "1.0"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in range(30, -1, -6))
    raise ValueError(f"n={n} too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 line for ``g`` (no header, no newline)."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. A single trailing newline and a ``>>graph6<<``
    header are tolerated; anything else malformed raises :class:`Graph6Error`."""
    line = text[:-1] if text.endswith("\n") else text
    start = 10 if line.startswith(">>graph6<<") else 0
    data = line[start:]
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside printable range 63..126", start + i)
    if not data:
        raise Graph6Error("empty graph6 line", start)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field", start + len(data))
        n, pos = 0, 8
        for ch in data[2:8]:
            n = (n << 6) | (ord(ch) - 63)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size field", start + len(data))
        n, pos = 0, 4
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} adjacency bytes, found {len(body)}", start + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", start + pos + need)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                edges.append((i, j))
            idx += 1
    if need and nbits % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", start + pos + need - 1)
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [parse_graph6(line.strip()) for line in lines if line.strip()]


def to_dot(g: Graph, highlight: tuple[VertexSet, VertexSet] | None = None, name: str = "G") -> str:
    """Deterministic DOT text; ``highlight=(S, T)`` colors S and T differently."""
    S, T = (set(highlight[0]), set(highlight[1])) if highlight else (set(), set())
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if v in S:
            out.append(f'  {v} [label="{v}", role="S", style=filled, fillcolor="lightblue"];')
        elif v in T:
            out.append(f'  {v} [label="{v}", role="T", shape=box, style=filled, fillcolor="salmon"];')
        else:
            out.append(f'  {v} [label="{v}"];')
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def graph_summary(g: Graph) -> dict:
    return {
        "n": g.n,
        "e": g.edge_count,
        "min_degree": g.min_degree,
        "connected": g.is_connected(),
        "graph6": to_graph6(g),
    }


@dataclass
class Report:
    command: dict[str, Any]
    graph_summary: dict[str, Any] | None
    results: dict[str, Any]
    timing: dict[str, float] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "graph_summary": self.graph_summary,
            "results": self.results,
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> Report:
        if "schema_version" not in doc:
            raise ValueError("report is missing schema_version")
        return cls(
            command=doc["command"],
            graph_summary=doc.get("graph_summary"),
            results=doc["results"],
            timing=doc.get("timing", {}),
            schema_version=doc["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def strip_timing(doc: dict) -> dict:
    return {key: value for key, value in doc.items() if key != "timing"}


def load_corpus(name: str = "connected_le7.g6") -> list[Graph]:
    """Graphs bundled with the package (default: every connected graph on 1..7 vertices)."""
    from importlib.resources import files

    return read_graph6_lines(files("kfactor").joinpath("data", name).read_text().splitlines())
