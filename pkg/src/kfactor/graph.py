"""Immutable simple graphs on dense vertex ids ``0..n-1``.

Every other module in the package works on :class:`Graph`. Graphs are never
mutated after construction; combinators and edits return new instances.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

VertexSet = tuple[int, ...]
Edge = tuple[int, int]

DEFAULT_ISO_LIMIT = 32
DEFAULT_RETRIES = 1000


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


class SizeLimitError(GraphError):
    """Raised when an exhaustive routine is called above its size guard."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_count", sum(len(a) for a in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        # cached lazily; frozen dataclass needs object.__setattr__
        try:
            return self.__dict__["_sets"]
        except KeyError:
            sets = tuple(frozenset(a) for a in self.adj)
            object.__setattr__(self, "_sets", sets)
            return sets

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``v`` set iff ``v`` adjacent)."""
        try:
            return self.__dict__["_masks"]
        except KeyError:
            m = tuple(sum(1 << w for w in a) for a in self.adj)
            object.__setattr__(self, "_masks", m)
            return m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def add_edges(self, edges: Iterable[Edge]) -> Graph:
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        drop = {(min(u, v), max(u, v)) for u, v in edges}
        missing = [e for e in drop if not self.has_edge(*e)]
        if missing:
            raise GraphError(f"edges not present: {sorted(missing)}")
        return Graph.from_edges(self.n, [e for e in self.edges() if e not in drop])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def validate(g: Graph) -> None:
    """Check the representation invariants; raise :class:`GraphError` if broken."""
    if len(g.adj) != g.n:
        raise GraphError("adjacency length differs from n")
    total = 0
    for v, nb in enumerate(g.adj):
        if list(nb) != sorted(set(nb)):
            raise GraphError(f"neighbors of {v} not sorted/unique")
        for w in nb:
            if w == v:
                raise GraphError(f"self-loop at {v}")
            if not 0 <= w < g.n:
                raise GraphError(f"neighbor {w} of {v} out of range")
            if v not in g.adj[w]:
                raise GraphError(f"asymmetric adjacency {v}-{w}")
        total += len(nb)
    if total != 2 * g.edge_count:
        raise GraphError("edge_count inconsistent with adjacency")


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def join(g1: Graph, g2: Graph) -> Graph:
    """``g1 ∨ g2``: disjoint union plus every edge between the two sides."""
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, edges)


def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of ``g - removed``, ordered by minimum vertex id."""
    seen = bytearray(g.n)
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError(f"removed vertex {v} out of range")
        seen[v] = 1
    out: list[VertexSet] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def mask_components(masks: Sequence[int], alive: int) -> list[int]:
    """Components of the subgraph induced on bitmask ``alive``, as bitmasks."""
    comps = []
    while alive:
        low = alive & -alive
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & alive & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        alive &= ~comp
    return comps


def random_graph(
    n: int,
    p: float,
    seed: int,
    require_connected: bool = False,
    min_degree: int = 0,
    retries: int = DEFAULT_RETRIES,
) -> Graph:
    """Seeded Erdős–Rényi sample, resampled until the constraints hold.

    Raises :class:`GraphError` when ``retries`` draws all fail.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(retries):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if g.min_degree < min_degree:
            continue
        if require_connected and not g.is_connected():
            continue
        return g
    raise GraphError(
        f"no sample with n={n}, p={p} met connected={require_connected}, "
        f"min_degree>={min_degree} after {retries} draws"
    )


def _stable_colors(g: Graph) -> list:
    # signatures are label-independent, so color classes are comparable across graphs
    colors: list = [(d,) for d in g.degrees()]
    count = len(set(colors))
    while True:
        new = [(colors[v], tuple(sorted(colors[w] for w in g.adj[v]))) for v in range(g.n)]
        new_count = len(set(new))
        colors = new
        if new_count == count:
            break
        count = new_count
    return colors


def is_isomorphic(g1: Graph, g2: Graph, limit: int = DEFAULT_ISO_LIMIT) -> bool:
    """Exact isomorphism test by refinement plus backtracking.

    ``limit`` caps the vertex count; above it :class:`SizeLimitError` is raised.
    """
    if max(g1.n, g2.n) > limit:
        raise SizeLimitError(f"isomorphism test limited to n <= {limit}")
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    c1 = _stable_colors(g1)
    c2 = _stable_colors(g2)
    if sorted(c1) != sorted(c2):
        return False
    n = g1.n
    # order g1's vertices: small classes first, then by connectivity to placed ones
    class_size: dict = {}
    for c in c1:
        class_size[c] = class_size.get(c, 0) + 1
    order: list[int] = []
    placed = set()
    remaining = set(range(n))
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-sum(1 for w in g1.adj[u] if w in placed), class_size[c1[u]], u),
        )
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    by_color: dict = {}
    for v in range(n):
        by_color.setdefault(c2[v], []).append(v)
    s1 = g1._adjsets
    s2 = g2._adjsets
    mapping: dict[int, int] = {}
    used = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color[c1[v]]:
            if w in used:
                continue
            ok = True
            for u, mu in mapping.items():
                if (u in s1[v]) != (mu in s2[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)
