"""Exact toughness and binding number by guarded exhaustive enumeration.

All comparisons are done on integers / :class:`fractions.Fraction`; nothing
here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph import Graph, GraphError, SizeLimitError, VertexSet

DEFAULT_MAX_N = 24


@dataclass
class ParamReport:
    kind: str  # "toughness" | "binding"
    value: Fraction
    witness: VertexSet
    # toughness: c(G-S); binding: N(S)
    detail: int | VertexSet

    def to_dict(self) -> dict:
        detail = self.detail if isinstance(self.detail, int) else list(self.detail)
        return {
            "kind": self.kind,
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "numerator": self.value.numerator,
            "denominator": self.value.denominator,
            "witness": list(self.witness),
            "detail": detail,
        }


@dataclass
class ToughCheck:
    tough: bool
    violating: VertexSet | None = None
    components: int | None = None
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.tough


def count_components(masks, alive: int) -> int:
    count = 0
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & alive & ~comp
            comp |= new
            frontier |= new
        alive &= ~comp
        count += 1
    return count


def _max_components(degs: list[int], n: int, s: int) -> int:
    """Upper bound on c(G - S) over all ``|S| = s``.

    A singleton component needs all its neighbors inside S, so only vertices of
    degree <= s can be isolated; every other component has >= 2 vertices.
    """
    rest = n - s
    single = min(rest, sum(1 for d in degs if d <= s))
    return min(rest, single + (rest - single) // 2)


def _guard(g: Graph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise SizeLimitError(f"{what} enumeration limited to n <= {max_n}, got n={g.n}")


def toughness(g: Graph, max_n: int = DEFAULT_MAX_N) -> ParamReport:
    """``min |S| / c(G-S)`` over ``S`` with ``c(G-S) > 1``.

    Subsets are scanned by increasing size, lexicographically within a size,
    and a whole size class is skipped once its best possible ratio cannot beat
    the current minimum. Ties keep the smaller, then lexicographically first, S.
    """
    if g.is_complete():
        raise GraphError("toughness undefined for complete graphs")
    _guard(g, max_n, "toughness")
    n = g.n
    masks = g.masks
    degs = g.degrees()
    full = (1 << n) - 1
    best: Fraction | None = None
    best_S: VertexSet = ()
    best_c = 0
    for s in range(n - 1):
        cmax = _max_components(degs, n, s)
        if cmax < 2:
            continue
        if best is not None and s * best.denominator >= best.numerator * cmax:
            continue
        for S in combinations(range(n), s):
            c = count_components(masks, full & ~sum(1 << v for v in S))
            if c < 2:
                continue
            val = Fraction(s, c)
            if best is None or val < best:
                best, best_S, best_c = val, S, c
                if s == 0:
                    return ParamReport("toughness", best, best_S, best_c)
    assert best is not None
    return ParamReport("toughness", best, best_S, best_c)


def is_t_tough(g: Graph, t_num: int = 1, t_den: int = 1, max_n: int = DEFAULT_MAX_N) -> ToughCheck:
    """Whether ``|S| >= t c(G-S)`` for every S with ``c(G-S) > 1``, ``t = t_num/t_den``.

    Stops at the first violating S. Complete graphs pass vacuously.
    """
    if t_num < 0 or t_den <= 0:
        raise GraphError("t must be a non-negative rational")
    if g.is_complete():
        return ToughCheck(True, vacuous=True)
    _guard(g, max_n, "toughness")
    n = g.n
    masks = g.masks
    degs = g.degrees()
    full = (1 << n) - 1
    for s in range(n - 1):
        cmax = _max_components(degs, n, s)
        # violation needs s * t_den < t_num * c for some c <= cmax
        if cmax < 2 or s * t_den >= t_num * cmax:
            continue
        for S in combinations(range(n), s):
            c = count_components(masks, full & ~sum(1 << v for v in S))
            if c >= 2 and s * t_den < t_num * c:
                return ToughCheck(False, S, c)
    return ToughCheck(True)


def neighborhood(g: Graph, S) -> VertexSet:
    out: set[int] = set()
    for v in S:
        out.update(g.adj[v])
    return tuple(sorted(out))


def binding_number(g: Graph, max_n: int = DEFAULT_MAX_N) -> ParamReport:
    """``min |N(S)| / |S|`` over nonempty S with ``N(S) != V``.

    Neighborhood masks of all ``2^n`` subsets are built by doubling in numpy.
    Ties keep the larger S, then the lexicographically first.
    """
    _guard(g, max_n, "binding number")
    n = g.n
    if n == 0:
        raise GraphError("binding number needs a nonempty graph")
    dtype = np.uint32 if n <= 32 else np.uint64
    nb = np.zeros(1 << n, dtype=dtype)
    size = np.zeros(1 << n, dtype=np.uint8)
    for i, m in enumerate(g.masks):
        lo, hi = 1 << i, 1 << (i + 1)
        nb[lo:hi] = nb[:lo] | dtype(m)
        size[lo:hi] = size[:lo] + 1
    count = np.bitwise_count(nb)
    ok = count < n
    best: Fraction | None = None
    best_size = 0
    for s in range(1, n + 1):
        sel = ok & (size == s)
        if not sel.any():
            continue
        val = Fraction(int(count[sel].min()), s)
        if best is None or val <= best:
            best, best_size = val, s
    if best is None:
        raise GraphError("no nonempty S has N(S) != V(G); binding number undefined")
    target = best.numerator * best_size // best.denominator
    hits = np.flatnonzero(ok & (size == best_size) & (count == target))
    witness = min(tuple(v for v in range(n) if int(m) >> v & 1) for m in hits)
    return ParamReport("binding", best, witness, neighborhood(g, witness))
