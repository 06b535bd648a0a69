"""Executable versions of the spectral / edge / toughness / binding k-factor
theorems, plus a seeded counterexample sweep.

A checker never reports a violation unless every hypothesis holds: each
hypothesis is recorded separately (``True``, ``False`` or ``None`` when it was
not evaluated), and the factor decision is always attached as evidence.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import families
from .factoring import FactorVerdict, has_k_factor
from .graph import Graph, GraphError, SizeLimitError, is_isomorphic, random_graph
from .params import DEFAULT_MAX_N, binding_number, is_t_tough
from .spectral import COMPARE_TOL, spectral_radius

THEOREMS = ("T1_2", "T1_3", "T1_4", "T1_5", "C1_7")


@dataclass
class TheoremVerdict:
    theorem: str
    k: int
    n: int
    hypotheses: dict[str, bool | None]
    conclusion_holds: bool
    extremal_hit: bool
    evidence: FactorVerdict
    gap: float | int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return all(v is True for v in self.hypotheses.values())

    @property
    def contradiction(self) -> bool:
        return self.hypotheses_hold and not self.extremal_hit and not self.conclusion_holds

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "k": self.k,
            "n": self.n,
            "hypotheses": dict(self.hypotheses),
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "extremal_hit": self.extremal_hit,
            "contradiction": self.contradiction,
            "gap": self.gap,
            "notes": list(self.notes),
            "evidence": self.evidence.to_dict(),
        }


@lru_cache(maxsize=256)
def _threshold_rho(name: str, n: int, k: int) -> float:
    if name == "g1":
        g = families.g1(n, k).graph
    elif name == "g2":
        g = families.g2(n, k).graph
    else:
        g = families.conjecture_extremal(n, k)
    r = spectral_radius(g, COMPARE_TOL / 4)
    return r.rho


def _order(rho: float, threshold: float, tol: float) -> str:
    gap = rho - threshold
    if abs(gap) <= tol * max(1.0, threshold):
        return "equal"
    return "above" if gap > 0 else "below"


def _common(g: Graph, k: int, min_order: int) -> tuple[dict[str, bool | None], list[str]]:
    hyp: dict[str, bool | None] = {
        "order": g.n >= min_order,
        "min_degree": g.min_degree >= k,
        "connected": g.is_connected(),
        "kn_even": k * g.n % 2 == 0,
    }
    notes = []
    if not hyp["order"]:
        notes.append(f"order bound not met: n={g.n} < {min_order}")
    if not hyp["kn_even"]:
        notes.append("vacuous: kn odd")
    return hyp, notes


def _spectral_gate(
    g: Graph, k: int, name: str, min_n: int, tol: float, hyp: dict, notes: list
) -> tuple[str | None, float | None]:
    if g.n < min_n:
        hyp["spectral"] = False
        notes.append(f"extremal graph undefined at n={g.n}")
        return None, None
    rho = spectral_radius(g, tol / 4).rho
    thr = _threshold_rho(name, g.n, k)
    order = _order(rho, thr, tol)
    hyp["spectral"] = order != "below"
    if order == "below":
        notes.append("threshold not met")
    return order, rho - thr


def _extremal(g: Graph, ext: Graph) -> bool:
    return is_isomorphic(g, ext, limit=max(g.n, 32))


def _evidence(g: Graph, k: int, factor: FactorVerdict | None) -> FactorVerdict:
    return factor if factor is not None else has_k_factor(g, k)


def check_spectral_theorem(
    g: Graph, k: int, tol: float = COMPARE_TOL, factor: FactorVerdict | None = None
) -> TheoremVerdict:
    """rho(G) >= rho(G1_{n,k}), delta >= k, connected, n >= 13k^2-11k-1
    => k-factor unless G is G1_{n,k}."""
    hyp, notes = _common(g, k, families.order_bound(k))
    order, gap = _spectral_gate(g, k, "g1", 2 * k + 2, tol, hyp, notes)
    hit = order == "equal" and _extremal(g, families.g1(g.n, k).graph)
    ev = _evidence(g, k, factor)
    return TheoremVerdict("T1_3", k, g.n, hyp, ev.exists, hit, ev, gap, notes)


def check_edge_theorem(g: Graph, k: int, factor: FactorVerdict | None = None) -> TheoremVerdict:
    """e(G) > C(n-k-1,2)+k(k+1)+k-1 with the same order/degree/connectivity
    hypotheses => k-factor (no exception)."""
    hyp, notes = _common(g, k, families.order_bound(k))
    thr = families.edge_threshold(g.n, k)
    gap = g.edge_count - thr
    hyp["edges"] = gap > 0
    if gap == 0:
        notes.append("edge count equals threshold")
    hit = gap == 0 and g.n >= 2 * k + 2 and _extremal(g, families.g1(g.n, k).graph)
    ev = _evidence(g, k, factor)
    return TheoremVerdict("T1_4", k, g.n, hyp, ev.exists, hit, ev, gap, notes)


def check_tough_theorem(
    g: Graph,
    k: int,
    tol: float = COMPARE_TOL,
    trusted_tough: bool = False,
    max_n: int = DEFAULT_MAX_N,
    factor: FactorVerdict | None = None,
) -> TheoremVerdict:
    """1-tough, rho(G) >= rho(G2_{n,k}), k >= 3 => k-factor unless G is G2_{n,k}.

    Above ``max_n`` toughness cannot be enumerated; pass ``trusted_tough=True``
    to attest 1-toughness, otherwise :class:`SizeLimitError` is raised.
    """
    if k < 3:
        raise GraphError("the toughness condition is stated for k >= 3")
    if g.n > max_n and not trusted_tough:
        raise SizeLimitError(
            f"cannot certify 1-toughness at n={g.n} > {max_n}; pass trusted_tough=True"
        )
    hyp, notes = _common(g, k, families.order_bound(k))
    if trusted_tough:
        hyp["one_tough"] = True
        notes.append("1-toughness attested by caller")
    else:
        hyp["one_tough"] = bool(is_t_tough(g, 1, 1, max_n))
    order, gap = _spectral_gate(g, k, "g2", 2 * k + 3, tol, hyp, notes)
    hit = order == "equal" and _extremal(g, families.g2(g.n, k).graph)
    ev = _evidence(g, k, factor)
    return TheoremVerdict("T1_5", k, g.n, hyp, ev.exists, hit, ev, gap, notes)


def check_binding_corollary(
    g: Graph,
    k: int,
    tol: float = COMPARE_TOL,
    trusted_binding: bool = False,
    max_n: int = DEFAULT_MAX_N,
    factor: FactorVerdict | None = None,
) -> TheoremVerdict:
    """b(G) >= 1, rho(G) >= rho(G1_{n,k}), k >= 2 => k-factor unless G is G1_{n,k}."""
    if k < 2:
        raise GraphError("the binding condition is stated for k >= 2")
    if g.n > max_n and not trusted_binding:
        raise SizeLimitError(
            f"cannot certify binding number at n={g.n} > {max_n}; pass trusted_binding=True"
        )
    hyp, notes = _common(g, k, families.order_bound(k))
    if trusted_binding:
        hyp["one_binding"] = True
        notes.append("binding number >= 1 attested by caller")
    else:
        hyp["one_binding"] = binding_number(g, max_n).value >= 1
    order, gap = _spectral_gate(g, k, "g1", 2 * k + 2, tol, hyp, notes)
    hit = order == "equal" and _extremal(g, families.g1(g.n, k).graph)
    ev = _evidence(g, k, factor)
    return TheoremVerdict("C1_7", k, g.n, hyp, ev.exists, hit, ev, gap, notes)


def check_fan_lin_theorem(
    g: Graph, k: int, tol: float = COMPARE_TOL, factor: FactorVerdict | None = None
) -> TheoremVerdict:
    """n >= 4k-1, kn even, rho(G) > rho(K_{k-1} ∨ (K_{n-k} ∪ K_1)) => k-factor."""
    hyp: dict[str, bool | None] = {"order": g.n >= 4 * k - 1, "kn_even": k * g.n % 2 == 0}
    notes: list[str] = []
    gap = None
    if g.n >= k + 1:
        rho = spectral_radius(g, tol / 4).rho
        thr = _threshold_rho("conj", g.n, k)
        gap = rho - thr
        # strict inequality: the equality band does not count
        hyp["spectral"] = _order(rho, thr, tol) == "above"
    else:
        hyp["spectral"] = False
    ev = _evidence(g, k, factor)
    return TheoremVerdict("T1_2", k, g.n, hyp, ev.exists, False, ev, gap, notes)


def fan_binomial_property(a: int, b: int) -> bool:
    """C(a,2) + C(b,2) < C(a+1,2) + C(b-1,2) for a >= b >= 3."""
    if not a >= b >= 3:
        raise GraphError(f"need a >= b >= 3, got a={a}, b={b}")

    def c2(x: int) -> int:
        return x * (x - 1) // 2

    return c2(a) + c2(b) < c2(a + 1) + c2(b - 1)


# --------------------------------------------------------------------- sweep


@dataclass
class Tally:
    evaluated: int = 0
    hypotheses_met: int = 0
    conclusion_verified: int = 0
    extremal_hits: int = 0
    contradictions: int = 0
    skipped: int = 0

    def add(self, other: Tally) -> None:
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))


@dataclass
class SweepReport:
    k: int
    n: int
    samples: int
    p_range: tuple[float, float]
    seed: int
    tallies: dict[str, Tally]
    thresholds: dict[str, float]
    contradiction_seeds: list[int] = field(default_factory=list)

    @property
    def contradictions(self) -> int:
        return sum(t.contradictions for t in self.tallies.values())

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "samples": self.samples,
            "p_range": list(self.p_range),
            "seed": self.seed,
            "contradictions": self.contradictions,
            "contradiction_seeds": list(self.contradiction_seeds),
            "thresholds": dict(self.thresholds),
            "tallies": {name: vars(t).copy() for name, t in self.tallies.items()},
        }


def _checkers(k: int):
    out = [("T1_2", check_fan_lin_theorem), ("T1_3", check_spectral_theorem),
           ("T1_4", check_edge_theorem)]
    if k >= 3:
        out.append(("T1_5", check_tough_theorem))
    if k >= 2:
        out.append(("C1_7", check_binding_corollary))
    return out


def sample_seed(seed: int, index: int) -> int:
    return seed ^ index


def _sweep_one(args: tuple[int, int, tuple[float, float], int]) -> tuple[dict[str, Tally], int | None]:
    k, n, p_range, s = args
    p = random.Random(s).uniform(*p_range)
    g = random_graph(n, p, s, require_connected=True, min_degree=k)
    factor = has_k_factor(g, k)
    out: dict[str, Tally] = {}
    bad = False
    for name, check in _checkers(k):
        t = Tally()
        try:
            v = check(g, k, factor=factor)
        except SizeLimitError:
            t.skipped = 1
            out[name] = t
            continue
        t.evaluated = 1
        if v.hypotheses_hold:
            t.hypotheses_met = 1
            t.conclusion_verified = int(v.conclusion_holds)
            t.extremal_hits = int(v.extremal_hit)
            t.contradictions = int(v.contradiction)
            bad |= v.contradiction
        out[name] = t
    return out, (s if bad else None)


def sweep(
    k: int,
    n: int,
    samples: int,
    p_range: tuple[float, float] = (0.3, 0.9),
    seed: int = 0,
    workers: int = 1,
) -> SweepReport:
    """Run every applicable checker on seeded random connected graphs with
    minimum degree >= k. Sample ``i`` uses seed ``seed ^ i``; the merged report
    does not depend on ``workers``.
    """
    if k < 1 or k * n % 2:
        raise GraphError(f"sweep needs k >= 1 and kn even, got k={k}, n={n}")
    lo, hi = p_range
    if not 0 <= lo <= hi <= 1:
        raise GraphError(f"bad p range {p_range}")
    jobs = [(k, n, (lo, hi), sample_seed(seed, i)) for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_sweep_one, jobs, chunksize=16))
    else:
        results = [_sweep_one(j) for j in jobs]
    tallies = {name: Tally() for name, _ in _checkers(k)}
    bad_seeds = []
    for res, bad in results:
        for name, t in res.items():
            tallies[name].add(t)
        if bad is not None:
            bad_seeds.append(bad)
    thresholds = {}
    if n >= 2 * k + 2:
        thresholds["rho_g1"] = _threshold_rho("g1", n, k)
    if k >= 3 and n >= 2 * k + 3:
        thresholds["rho_g2"] = _threshold_rho("g2", n, k)
    thresholds["rho_conjecture"] = _threshold_rho("conj", n, k)
    return SweepReport(k, n, samples, (lo, hi), seed, tallies, thresholds, sorted(bad_seeds))
