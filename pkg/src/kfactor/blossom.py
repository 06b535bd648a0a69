"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

One augmenting-path search per exposed vertex, with blossoms shrunk in place
through a ``base`` array. A root whose search fails never becomes augmentable
later, so a single pass over the vertices suffices.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .graph import Edge, Graph


def _search(adj: Sequence[Sequence[int]], match: list[int], root: int) -> int:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    members = [[i] for i in range(n)]  # vertices currently shrunk into base i
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[match[b]]

    def mark(v: int, b: int, child: int, blossom: set[int]) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[match[v]])
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom: set[int] = set()
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for b in blossom:
                    for i in members[b]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
                    if b != cur:
                        members[cur].extend(members[b])
                        members[b] = []
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return _augment(match, parent, to)
                nxt = match[to]
                used[nxt] = True
                queue.append(nxt)
    return -1


def _augment(match: list[int], parent: list[int], v: int) -> int:
    end = v
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv
    return end


def maximum_matching(
    adj: Sequence[Sequence[int]], greedy_order: Iterable[int] | None = None
) -> list[int]:
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or ``-1``.

    ``greedy_order`` controls the vertex order of the greedy warm start.
    """
    n = len(adj)
    match = [-1] * n
    for v in greedy_order if greedy_order is not None else range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for root in range(n):
        if match[root] == -1:
            _search(adj, match, root)
    return match


def max_matching_blossom(g: Graph) -> list[Edge]:
    """Maximum cardinality matching of ``g`` as a sorted edge list."""
    mate = maximum_matching(g.adj)
    return sorted((v, w) for v, w in enumerate(mate) if w > v)
