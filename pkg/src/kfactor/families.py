"""Named extremal graphs for the k-factor spectral conditions.

Vertex layout shared by :func:`g1` and :func:`g2`::

    0 .. k-1          clique_S       (the K_k that is joined to everything)
    k .. 2k           independent_T  ((k+1) K_1)
    2k+1 .. n-1       big_clique     (K_{n-2k-1}); 2k+1 is u_{k+1}, 2k+2 is u_{k+2}
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, Graph, GraphError, VertexSet, complete, disjoint_union, join


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    clique_S: VertexSet
    independent_T: VertexSet
    big_clique: VertexSet
    extra_edges: tuple[Edge, ...]
    params: tuple[int, int]


def _base(n: int, k: int) -> tuple[list[Edge], VertexSet, VertexSet, VertexSet]:
    S = tuple(range(k))
    T = tuple(range(k, 2 * k + 1))
    B = tuple(range(2 * k + 1, n))
    edges = list(combinations(S + B, 2))
    edges += [(s, t) for s in S for t in T]
    return edges, S, T, B


def g1(n: int, k: int) -> FamilyInstance:
    """``K_k ∨ ((k+1)K_1 ∪ K_{n-2k-1})`` plus ``k-1`` edges from T into ``u_{k+1}``."""
    if k < 1 or n < 2 * k + 2:
        raise GraphError(f"g1 needs k >= 1 and n >= 2k+2, got n={n}, k={k}")
    edges, S, T, B = _base(n, k)
    u = B[0]
    extra = tuple((T[i], u) for i in range(k - 1))
    g = Graph.from_edges(n, edges + list(extra))
    return FamilyInstance(g, S, T, B, extra, (n, k))


def g2(n: int, k: int) -> FamilyInstance:
    """Like :func:`g1` but with the extra edges split ``k-2`` into ``u_{k+1}``
    and one edge from ``v_1 = T[0]`` into ``u_{k+2}``. Defined for ``k >= 3`` only.
    """
    if k < 3 or n < 2 * k + 3:
        raise GraphError(f"g2 needs k >= 3 and n >= 2k+3, got n={n}, k={k}")
    edges, S, T, B = _base(n, k)
    extra = tuple((T[i], B[0]) for i in range(k - 2)) + ((T[0], B[1]),)
    g = Graph.from_edges(n, edges + list(extra))
    return FamilyInstance(g, S, T, B, extra, (n, k))


def conjecture_extremal(n: int, a: int) -> Graph:
    """``K_{a-1} ∨ (K_{n-a} ∪ K_1)``."""
    if a < 1 or n < a + 1:
        raise GraphError(f"conjecture_extremal needs a >= 1 and n >= a+1, got n={n}, a={a}")
    return join(complete(a - 1), disjoint_union(complete(n - a), complete(1)))


def edge_threshold(n: int, k: int) -> int:
    """``C(n-k-1, 2) + k(k+1) + k - 1``, the edge count of ``g1(n, k)``."""
    m = n - k - 1
    return m * (m - 1) // 2 + k * (k + 1) + k - 1


def order_bound(k: int) -> int:
    """Smallest order covered by the spectral and edge conditions: ``13k^2 - 11k - 1``."""
    return 13 * k * k - 11 * k - 1
