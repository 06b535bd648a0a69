"""Spectral radius, the Hong-Nikiforov bound and the edge-shift operation."""

from kfactor import families
from kfactor.graph import cycle, petersen, random_graph
from kfactor.spectral import (
    compare_to_threshold,
    edge_shift,
    hong_nikiforov_bound,
    shift_set,
    spectral_radius,
)

for name, g in [("C7", cycle(7)), ("Petersen", petersen())]:
    r = spectral_radius(g)
    print(f"{name}: rho={r.rho:.12f} after {r.iterations} iterations, bound {hong_nikiforov_bound(g):.12f}")

g = random_graph(15, 0.4, seed=3, require_connected=True)
x = spectral_radius(g).perron
u = max(range(g.n), key=lambda i: x[i])
v = next(w for w in range(g.n) if w != u and shift_set(g, u, w))
h = edge_shift(g, u, v)
print(f"shifting edges from {v} to {u}: rho {spectral_radius(g).rho:.6f} -> {spectral_radius(h).rho:.6f}")

n = 20
c = compare_to_threshold(families.g2(n, 3).graph, families.g1(n, 3).graph)
print(f"rho(G2({n},3)) vs rho(G1({n},3)): {c.order}, gap {c.gap:.6f}")
