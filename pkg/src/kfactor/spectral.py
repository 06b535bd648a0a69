"""Adjacency spectral radius, the Hong–Nikiforov upper bound and edge shifting."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, components

DEFAULT_TOL = 1e-10
COMPARE_TOL = 1e-9


class ConvergenceError(RuntimeError):
    pass


@dataclass
class SpectralResult:
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int
    converged: bool = True

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "perron": [float(x) for x in self.perron],
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def _connected_radius(a: np.ndarray, tol: float, max_iter: int) -> SpectralResult:
    n = a.shape[0]
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0.0, 0)
    m = a + np.eye(n)
    x = np.ones(n)
    rho = 0.0
    resid = math.inf
    it = 0
    while it < max_iter:
        it += 1
        y = m @ x
        x = y / y.max()
        ax = a @ x
        rho = float(x @ ax / (x @ x))
        resid = float(np.abs(ax - rho * x).max())
        if resid <= tol * rho:
            return SpectralResult(rho, x, resid, it)
        if it % 25 == 0:
            x, rho, resid = _inverse_step(a, x, rho, resid)
            if resid <= tol * rho:
                return SpectralResult(rho, x, resid, it)
    return SpectralResult(rho, x, resid, it, converged=False)


def _inverse_step(a: np.ndarray, x: np.ndarray, rho: float, resid: float):
    """One shifted inverse iteration; kept only if it stays positive and improves."""
    n = a.shape[0]
    r2 = float(np.linalg.norm(a @ x - rho * x) / np.linalg.norm(x))
    sigma = rho + max(r2, 1e-13 * max(rho, 1.0))
    try:
        y = np.linalg.solve(sigma * np.eye(n) - a, x)
    except np.linalg.LinAlgError:
        return x, rho, resid
    if y.max() <= 0:
        y = -y
    if y.min() <= 0:
        return x, rho, resid
    y = y / y.max()
    ay = a @ y
    new_rho = float(y @ ay / (y @ y))
    new_resid = float(np.abs(ay - new_rho * y).max())
    if new_rho < rho or new_resid >= resid:
        return x, rho, resid
    return y, new_rho, new_resid


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> SpectralResult:
    """Largest adjacency eigenvalue by power iteration on ``A + I``.

    The iterate starts at the all-ones vector and is normalized to unit maximum
    entry. Convergence means ``|A x - rho x|_inf <= tol * rho``. Disconnected
    graphs are handled per component; the returned Perron vector is zero off the
    component that attains the maximum.
    """
    if g.n < 1:
        raise GraphError("spectral radius needs at least one vertex")
    if max_iter is None:
        max_iter = max(100 * g.n, 1000)
    a = adjacency_matrix(g)
    comps = components(g)
    if len(comps) == 1:
        return _connected_radius(a, tol, max_iter)
    best: SpectralResult | None = None
    best_comp: tuple[int, ...] = ()
    total_it = 0
    converged = True
    for comp in comps:
        idx = np.array(comp)
        res = _connected_radius(a[np.ix_(idx, idx)], tol, max_iter)
        total_it += res.iterations
        converged &= res.converged
        if best is None or res.rho > best.rho:
            best, best_comp = res, comp
    perron = np.zeros(g.n)
    perron[list(best_comp)] = best.perron
    return SpectralResult(best.rho, perron, best.residual, total_it, converged)


def hong_nikiforov_bound(g: Graph) -> float:
    """``(δ-1)/2 + sqrt(2e - nδ + (δ+1)^2/4)``; an upper bound on the spectral radius."""
    d = g.min_degree
    if g.n == 0 or d < 1:
        raise GraphError("Hong–Nikiforov bound needs minimum degree >= 1")
    return (d - 1) / 2 + math.sqrt(2 * g.edge_count - g.n * d + (d + 1) ** 2 / 4)


def shift_set(g: Graph, u: int, v: int) -> tuple[int, ...]:
    nu = set(g.adj[u]) | {u}
    return tuple(w for w in g.adj[v] if w not in nu)


def edge_shift(g: Graph, u: int, v: int) -> Graph:
    """Move every edge ``v-w`` with ``w`` not adjacent to ``u`` over to ``u-w``."""
    ws = shift_set(g, u, v)
    if not ws:
        raise GraphError(f"nothing to shift from {v} to {u}")
    drop = {(min(v, w), max(v, w)) for w in ws}
    edges = [e for e in g.edges() if e not in drop] + [(u, w) for w in ws]
    return Graph.from_edges(g.n, edges)


@dataclass
class Comparison:
    order: str  # "below" | "equal" | "above"
    gap: float
    rho: float
    rho_threshold: float

    def to_dict(self) -> dict:
        return dict(order=self.order, gap=self.gap, rho=self.rho, rho_threshold=self.rho_threshold)


def compare_to_threshold(g: Graph, extremal: Graph, tol: float = COMPARE_TOL) -> Comparison:
    """Order ``rho(g)`` against ``rho(extremal)`` with an explicit equality band.

    ``equal`` means ``|gap| <= tol * max(1, rho(extremal))``.
    """
    if g.n == 0 or extremal.n == 0:
        raise GraphError("comparison needs nonempty graphs")
    r1 = spectral_radius(g, tol / 4)
    r2 = spectral_radius(extremal, tol / 4)
    for r in (r1, r2):
        if not r.converged:
            raise ConvergenceError(f"power iteration did not converge (residual {r.residual:.3g})")
    gap = r1.rho - r2.rho
    band = tol * max(1.0, r2.rho)
    order = "equal" if abs(gap) <= band else ("above" if gap > 0 else "below")
    return Comparison(order, gap, r1.rho, r2.rho)
