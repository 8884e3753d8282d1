"""Degree statistics, tail exponent estimation, diameter and linear fits."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from scipy.optimize import minimize_scalar
from scipy.special import zeta

from .graph import Graph, bfs_distances, connected_components

MIN_TAIL = 50


@dataclass(frozen=True)
class DegreeStats:
    histogram: dict[int, int]
    n: int

    @classmethod
    def from_samples(cls, degrees: Iterable[int]) -> DegreeStats:
        hist = Counter(int(d) for d in degrees)
        return cls(dict(sorted(hist.items())), sum(hist.values()))

    @property
    def p_k(self) -> dict[int, float]:
        return {k: c / self.n for k, c in self.histogram.items()}


@dataclass(frozen=True)
class GammaEstimate:
    gamma: float
    stderr: float
    n_tail: int
    k_min: int


@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    r_squared: float


def degree_distribution(g: Graph) -> DegreeStats:
    if g.n_alive == 0:
        raise ValueError("degree distribution of an empty graph")
    return DegreeStats.from_samples(g.degrees())


def estimate_gamma(stats: DegreeStats, k_min: int) -> GammaEstimate:
    """Discrete power-law MLE for the tail k >= k_min.

    Maximises -gamma * sum(ln k) - n_tail * ln zeta(gamma, k_min), with the
    Hurwitz zeta as normaliser. The standard error is (gamma - 1)/sqrt(n_tail).
    """
    if k_min < 1:
        raise ValueError(f"k_min must be >= 1, got {k_min}")
    tail = {k: c for k, c in stats.histogram.items() if k >= k_min}
    n_tail = sum(tail.values())
    if n_tail < MIN_TAIL:
        raise ValueError(f"only {n_tail} degrees >= {k_min}; need {MIN_TAIL}")
    if len(tail) < 2:
        raise ValueError("tail has a single degree value; exponent is undefined")
    sum_log = sum(c * math.log(k) for k, c in tail.items())

    def nll(gamma: float) -> float:
        return gamma * sum_log + n_tail * math.log(zeta(gamma, k_min))

    res = minimize_scalar(nll, bounds=(1.0 + 1e-6, 50.0), method="bounded", options={"xatol": 1e-10})
    gamma = float(res.x)
    return GammaEstimate(gamma, (gamma - 1.0) / math.sqrt(n_tail), n_tail, k_min)


def _largest_component(g: Graph) -> list[int]:
    comps = connected_components(g)
    if not comps:
        raise ValueError("diameter of an empty graph")
    return max(comps, key=len)


def diameter(g: Graph, method: str = "two-sweep") -> int:
    """Diameter of the largest connected component (lowest id wins ties).

    ``exact`` takes the maximum eccentricity over the component; ``two-sweep``
    runs BFS from its lowest id and again from the farthest vertex found,
    which is a lower bound that is exact on trees.
    """
    comp = _largest_component(g)
    if method == "exact":
        return max(max(bfs_distances(g, v).values()) for v in comp)
    if method == "two-sweep":
        dist = bfs_distances(g, comp[0])
        far = max(dist, key=lambda v: (dist[v], -v))
        return max(bfs_distances(g, far).values())
    raise ValueError(f"unknown diameter method {method!r}")


def fit_scaling(points: Sequence[tuple[float, float]]) -> ScalingFit:
    """Ordinary least squares y = slope*x + intercept."""
    if len(points) < 3:
        raise ValueError(f"need >= 3 points, got {len(points)}")
    xs = [float(x) for x, _ in points]
    ys = [float(y) for _, y in points]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if len(set(xs)) < n or sxx == 0:
        raise ValueError("abscissae must be distinct")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_tot = sum((y - my) ** 2 for y in ys)
    ss_res = sum((y - slope * x - intercept) ** 2 for x, y in zip(xs, ys))
    r2 = 1.0 if ss_tot == 0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return ScalingFit(slope, intercept, r2)
