"""Centrality measures, network aggregates, and Freeman-style
centralizations on a one-mode network.

Distances here are geodesic over binary adjacency: line values never enter
the path computations.  Everything is a pure function of an immutable
network; per-source passes accumulate with exactly rounded summation so
results are deterministic no matter how work would be partitioned.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from math import fsum, sqrt
from typing import Iterable, Sequence

from .cohesion import weak_components
from .model import DENSITY_LOOPS, DENSITY_NO_LOOPS, OneModeNetwork, pair_density

CLOSENESS_VARIANTS = ("paper", "component")


@dataclass(frozen=True)
class DegreeDistribution:
    """Rows of (degree, frequency, relative frequency, cumulative relative
    frequency), ascending, with only observed degrees present."""

    rows: list[tuple[int, int, float, float]]


@dataclass(frozen=True)
class VertexMetrics:
    """Per-vertex centralities with their competition ranks."""

    vertex: str
    label: str
    degree: int
    normalized_degree: float
    closeness: float
    betweenness: float
    degree_rank: int
    closeness_rank: int
    betweenness_rank: int
    extra: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class NetworkAggregates:
    """Network-level summary figures.

    Centralizations need at least 3 vertices and are reported as 0.0 below
    that; closeness centralization is evaluated on the largest connected
    subnetwork.
    """

    n: int
    m: int
    density_no_loops: float
    density_loops_allowed: float
    mean_degree: float
    median_degree: float
    sd_degree_population: float
    degree_centralization: float
    betweenness_centralization: float
    closeness_centralization: float
    component_count: int
    isolate_count: int


def degree_distribution(net: OneModeNetwork) -> DegreeDistribution:
    degs = net.degrees()
    n = len(degs)
    rows: list[tuple[int, int, float, float]] = []
    if n:
        freq = Counter(degs)
        running = 0
        for d in sorted(freq):
            running += freq[d]
            rows.append((d, freq[d], freq[d] / n, running / n))
    return DegreeDistribution(rows=rows)


def degree_stats(degrees: Iterable[int]) -> tuple[float, float, float]:
    """Mean, median, and population (divisor-n) standard deviation.

    The median of an even-sized multiset is the average of the two middle
    elements.  Raises on an empty input.
    """
    ds = sorted(degrees)
    n = len(ds)
    if n == 0:
        raise ValueError("degree_stats of an empty multiset")
    mean = fsum(ds) / n
    mid = n // 2
    median = float(ds[mid]) if n % 2 else (ds[mid - 1] + ds[mid]) / 2.0
    sd = sqrt(fsum((d - mean) ** 2 for d in ds) / n)
    return mean, median, sd


def density(net: OneModeNetwork, variant: str = DENSITY_LOOPS) -> float:
    """Realized share of possible lines; see :func:`interlock.model.pair_density`
    for the two denominator conventions."""
    return pair_density(net.n, net.edge_count, variant)


def geodesic_distances(net: OneModeNetwork, source: str) -> dict[str, int | None]:
    """Breadth-first geodesic distances from ``source`` to every vertex.

    Unreachable vertices map to ``None`` rather than a sentinel distance.
    """
    if not net.has_vertex(source):
        raise ValueError(f"unknown vertex: {source!r}")
    dist: dict[str, int | None] = {v: None for v in net.vertices}
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in net.neighbors(u):
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def closeness_centrality(
    net: OneModeNetwork, vertex: str, variant: str = "paper"
) -> float:
    """Reachable-vertex count divided by the sum of geodesic distances.

    The ``component`` variant scales that ratio by the share of the network
    the vertex can reach, r/(n-1), so scores on small components shrink.
    Isolates score 0 under both variants.
    """
    if variant not in CLOSENESS_VARIANTS:
        raise ValueError(f"unknown closeness variant: {variant!r}")
    dist = geodesic_distances(net, vertex)
    reached = [d for v, d in dist.items() if v != vertex and d is not None]
    r = len(reached)
    total = sum(reached)
    if r == 0 or total == 0:
        return 0.0
    score = r / total
    if variant == "component":
        score *= r / (net.n - 1)
    return score


def _bfs_shortest_path_dag(net: OneModeNetwork, source: str):
    """One source pass: visitation stack, predecessor lists, geodesic counts."""
    dist: dict[str, int] = {source: 0}
    sigma: dict[str, float] = {v: 0.0 for v in net.vertices}
    sigma[source] = 1.0
    preds: dict[str, list[str]] = {v: [] for v in net.vertices}
    stack: list[str] = []
    queue = deque([source])
    while queue:
        u = queue.popleft()
        stack.append(u)
        for v in net.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
            if dist[v] == dist[u] + 1:
                sigma[v] += sigma[u]
                preds[v].append(u)
    return stack, preds, sigma


def betweenness_centrality(net: OneModeNetwork) -> dict[str, float]:
    """Normalized betweenness for every vertex.

    A vertex scores the geodesic share sigma_st(v)/sigma_st summed over the
    unordered pairs it separates, scaled into [0, 1] by 2/((n-1)(n-2));
    unreachable pairs contribute nothing.  Computed by per-source
    shortest-path counting with dependency back-propagation, sources taken
    in vertex order.
    """
    n = net.n
    accumulated = {v: 0.0 for v in net.vertices}
    if n >= 3:
        for source in net.vertices:
            stack, preds, sigma = _bfs_shortest_path_dag(net, source)
            delta = {v: 0.0 for v in stack}
            while stack:
                w = stack.pop()
                for u in preds[w]:
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
                if w != source:
                    accumulated[w] += delta[w]
    # every unordered pair was visited from both endpoints, hence the
    # doubled Freeman divisor
    scale = 1.0 / ((n - 1) * (n - 2)) if n >= 3 else 0.0
    return {v: accumulated[v] * scale for v in net.vertices}


def degree_centralization(degrees: Iterable[int]) -> float:
    """Freeman centralization of a degree sequence; 1.0 on a star, 0 when
    all degrees agree.  Needs at least 3 vertices."""
    ds = list(degrees)
    n = len(ds)
    if n < 3:
        raise ValueError(f"degree centralization needs n >= 3, got {n}")
    d_max = max(ds)
    return fsum(d_max - d for d in ds) / ((n - 1) * (n - 2))


def betweenness_centralization(normalized_scores: Iterable[float]) -> float:
    """Freeman centralization of normalized betweenness scores."""
    scores = list(normalized_scores)
    n = len(scores)
    if n < 3:
        raise ValueError(f"betweenness centralization needs n >= 3, got {n}")
    best = max(scores)
    return fsum(best - s for s in scores) / (n - 1)


def closeness_centralization(net: OneModeNetwork) -> float:
    """Freeman closeness centralization of the largest connected subnetwork.

    Uses closeness normalized within that subnetwork, (n'-1)/sum-of-
    distances; returns 0.0 when the subnetwork has fewer than 3 vertices.
    """
    components = weak_components(net)
    if not components:
        return 0.0
    largest = max(components, key=len)
    np = len(largest)
    if np < 3:
        return 0.0
    closeness: list[float] = []
    inside = set(largest)
    for v in largest:
        dist = geodesic_distances(net, v)
        total = sum(d for u, d in dist.items() if u in inside and u != v)
        closeness.append((np - 1) / total)
    best = max(closeness)
    return fsum(best - c for c in closeness) * (2 * np - 3) / ((np - 1) * (np - 2))


def rank_competition(values: Sequence[float], *, descending: bool = True) -> list[int]:
    """Competition ("1224") ranks: ties share the best rank and each rank is
    one more than the count of strictly better values."""
    ranks: list[int] = []
    for v in values:
        if descending:
            better = sum(1 for u in values if u > v)
        else:
            better = sum(1 for u in values if u < v)
        ranks.append(better + 1)
    return ranks


def vertex_metrics(
    net: OneModeNetwork, closeness_variant: str = "paper"
) -> list[VertexMetrics]:
    """Per-vertex centrality table in vertex order, ranks included.

    Normalized degree shares the degree ranking, so a single rank column
    covers both.
    """
    n = net.n
    degrees = net.degrees()
    closeness = [
        closeness_centrality(net, v, closeness_variant) for v in net.vertices
    ]
    betweenness_map = betweenness_centrality(net)
    betweenness = [betweenness_map[v] for v in net.vertices]
    degree_ranks = rank_competition(degrees)
    closeness_ranks = rank_competition(closeness)
    betweenness_ranks = rank_competition(betweenness)
    return [
        VertexMetrics(
            vertex=v,
            label=net.label(v),
            degree=degrees[i],
            normalized_degree=degrees[i] / (n - 1) if n >= 2 else 0.0,
            closeness=closeness[i],
            betweenness=betweenness[i],
            degree_rank=degree_ranks[i],
            closeness_rank=closeness_ranks[i],
            betweenness_rank=betweenness_ranks[i],
        )
        for i, v in enumerate(net.vertices)
    ]


def network_aggregates(net: OneModeNetwork) -> NetworkAggregates:
    """All network-level figures in one pass; zeros on degenerate sizes."""
    n = net.n
    m = net.edge_count
    degrees = net.degrees()
    if n:
        mean, median, sd = degree_stats(degrees)
    else:
        mean = median = sd = 0.0
    if n >= 3:
        deg_central = degree_centralization(degrees)
        betw_central = betweenness_centralization(
            betweenness_centrality(net).values()
        )
    else:
        deg_central = 0.0
        betw_central = 0.0
    return NetworkAggregates(
        n=n,
        m=m,
        density_no_loops=pair_density(n, m, DENSITY_NO_LOOPS),
        density_loops_allowed=pair_density(n, m, DENSITY_LOOPS),
        mean_degree=mean,
        median_degree=median,
        sd_degree_population=sd,
        degree_centralization=deg_central,
        betweenness_centralization=betw_central,
        closeness_centralization=closeness_centralization(net),
        component_count=len(weak_components(net)),
        isolate_count=degrees.count(0),
    )
