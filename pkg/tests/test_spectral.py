import math
import random

import numpy as np
import pytest
from hypothesis import given, settings

from kfactor.families import g1
from kfactor.graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    path,
    petersen,
    random_graph,
    star,
)
from kfactor.spectral import (
    adjacency_matrix,
    compare_to_threshold,
    edge_shift,
    hong_nikiforov_bound,
    shift_set,
    spectral_radius,
)

from conftest import graphs


def eig_oracle(g: Graph) -> float:
    return float(np.linalg.eigvalsh(adjacency_matrix(g)).max())


@pytest.mark.parametrize(
    "g,expected",
    [
        (complete(7), 6.0),
        (complete(8), 7.0),  # K_{n-k-1} with n=12, k=3
        (complete_bipartite(2, 3), math.sqrt(6)),
        (complete_bipartite(10, 40), 20.0),
        (cycle(4), 2.0),
        (star(4), 2.0),
        (path(2), 1.0),
    ],
)
def test_known_radii(g, expected):
    r = spectral_radius(g)
    assert r.converged
    assert abs(r.rho - expected) <= 1e-9
    assert r.residual <= 1e-10 * r.rho


def test_single_vertex():
    r = spectral_radius(complete(1))
    assert r.rho == 0.0 and r.converged


def test_perron_vector_normalized_and_positive():
    r = spectral_radius(g1(12, 2).graph)
    assert r.perron.max() == pytest.approx(1.0)
    assert (r.perron > 0).all()
    a = adjacency_matrix(g1(12, 2).graph)
    assert np.abs(a @ r.perron - r.rho * r.perron).max() <= 1e-10 * r.rho


def test_disconnected_takes_component_max():
    g = disjoint_union(cycle(5), complete(4))
    r = spectral_radius(g)
    assert abs(r.rho - 3.0) <= 1e-9
    assert (r.perron[:5] == 0).all() and (r.perron[5:] > 0).all()


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        spectral_radius(Graph.from_edges(0, []))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_matches_eigvalsh_and_rayleigh_sandwich(g):
    r = spectral_radius(g)
    assert r.converged
    assert abs(r.rho - eig_oracle(g)) <= 1e-9 * max(1.0, r.rho)
    assert 2 * g.edge_count / g.n - 1e-9 <= r.rho <= g.n - 1 + 1e-9


class TestHongNikiforov:
    def test_equality_cases(self):
        assert hong_nikiforov_bound(cycle(5)) == pytest.approx(2.0)
        assert hong_nikiforov_bound(complete(6)) == pytest.approx(5.0)
        assert hong_nikiforov_bound(star(4)) == pytest.approx(2.0)
        assert spectral_radius(star(4)).rho == pytest.approx(2.0)

    def test_requires_min_degree(self):
        with pytest.raises(GraphError):
            hong_nikiforov_bound(disjoint_union(complete(3), complete(1)))

    def test_petersen_equality(self):
        assert hong_nikiforov_bound(petersen()) == pytest.approx(spectral_radius(petersen()).rho)

    @settings(max_examples=200, deadline=None)
    @given(graphs(min_n=2, max_n=12))
    def test_upper_bound(self, g):
        if g.min_degree < 1:
            return
        assert hong_nikiforov_bound(g) >= spectral_radius(g).rho - 1e-9


class TestEdgeShift:
    def test_path_rewiring(self):
        # a - v - b with u = 3 isolated from v: both edges move to u
        g = Graph.from_edges(4, [(0, 1), (1, 2)])
        h = edge_shift(g, 3, 1)
        assert h.edges() == [(0, 3), (2, 3)]

    def test_empty_shift_set(self):
        with pytest.raises(GraphError):
            edge_shift(complete(4), 0, 1)

    def test_cycle6(self):
        g = cycle(6)
        # regular graph: all Perron entries equal, so x_0 >= x_2 holds
        assert shift_set(g, 0, 2) == (3,)
        h = edge_shift(g, 0, 2)
        assert h.edge_count == g.edge_count
        before, after = eig_oracle(g), eig_oracle(h)
        assert after > before + 1e-6
        assert spectral_radius(h).rho == pytest.approx(after, abs=1e-9)

    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=3, max_n=10, connected=True))
    def test_strict_increase(self, g):
        x = spectral_radius(g).perron
        for u in range(g.n):
            for v in range(g.n):
                if u != v and x[u] >= x[v] and shift_set(g, u, v):
                    h = edge_shift(g, u, v)
                    assert h.edge_count == g.edge_count
                    assert spectral_radius(h).rho > spectral_radius(g).rho + 1e-9
                    return


class TestCompare:
    def test_identical(self):
        c = compare_to_threshold(complete(9), complete(9))
        assert c.order == "equal" and abs(c.gap) < 1e-12

    def test_g1_above_its_big_clique(self):
        n, k = 12, 2
        c = compare_to_threshold(g1(n, k).graph, complete(n - k - 1))
        assert c.order == "above"
        assert c.rho_threshold == pytest.approx(n - k - 2)

    def test_spanning_subgraph_below(self):
        g = random_graph(12, 0.5, 4, require_connected=True)
        h = g.remove_edges([g.edges()[0]])
        assert compare_to_threshold(h, g).order == "below"


def test_monotonicity_under_edge_deletion():
    rng = random.Random(11)
    for i in range(40):
        g = random_graph(rng.randint(4, 14), rng.uniform(0.3, 0.9), i, require_connected=True)
        h = g.remove_edges(rng.sample(g.edges(), rng.randint(1, 3)))
        assert spectral_radius(h).rho < spectral_radius(g).rho - 1e-9
