"""Valued-network cohesion analysis: line multiplicities, m-slices, and
weak components with per-component summaries."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable

from .model import DENSITY_NO_LOOPS, OneModeNetwork, pair_density


@dataclass(frozen=True)
class LineMultiplicityDistribution:
    """Frequency of each line value from 1 up to the strongest observed.

    Intermediate values with no occurrences keep their zero row, so the
    table always runs 1..max_value.
    """

    rows: list[tuple[int, int, float]]
    max_value: int

    @property
    def total(self) -> int:
        return sum(freq for _, freq, _ in self.rows)


@dataclass(frozen=True)
class ComponentSummary:
    members: list[str]
    size: int
    edge_count: int
    density: float


@dataclass(frozen=True)
class SliceDecomposition:
    """An m-slice and its weak components."""

    m: int
    network: OneModeNetwork
    components: list[ComponentSummary]


def line_multiplicity_distribution(net: OneModeNetwork) -> LineMultiplicityDistribution:
    """Count lines by value; relative frequencies divide by the line total."""
    values = [value for _, _, value in net.edges()]
    total = len(values)
    if total == 0:
        return LineMultiplicityDistribution(rows=[], max_value=0)
    freq = Counter(values)
    max_value = max(freq)
    rows = [(v, freq.get(v, 0), freq.get(v, 0) / total) for v in range(1, max_value + 1)]
    return LineMultiplicityDistribution(rows=rows, max_value=max_value)


def m_slice(net: OneModeNetwork, m: int) -> OneModeNetwork:
    """Subnetwork keeping every vertex but only lines valued at least ``m``."""
    if m < 1:
        raise ValueError(f"slice threshold must be at least 1, got {m}")
    out = OneModeNetwork()
    for v in net.vertices:
        out.add_vertex(v, net.label(v))
    for u, v, value in net.edges():
        if value >= m:
            out.add_edge(u, v, value)
    out.validate()
    return out


def weak_components(net: OneModeNetwork) -> list[list[str]]:
    """Maximal mutually reachable vertex sets, singletons included.

    Components are listed by their first member's position; members are
    listed in vertex order.
    """
    seen: set[str] = set()
    components: list[list[str]] = []
    for start in net.vertices:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        members = [start]
        while queue:
            u = queue.popleft()
            for v in net.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    members.append(v)
                    queue.append(v)
        members.sort(key=net.index)
        components.append(members)
    return components


def component_summary(
    net: OneModeNetwork,
    component: Iterable[str],
    density_variant: str = DENSITY_NO_LOOPS,
) -> ComponentSummary:
    """Size, induced line count, and induced density of a vertex subset."""
    members: list[str] = []
    inside: set[str] = set()
    for v in component:
        if not net.has_vertex(v):
            raise ValueError(f"vertex outside network: {v!r}")
        if v not in inside:
            inside.add(v)
            members.append(v)
    members.sort(key=net.index)
    edge_count = sum(1 for u, v, _ in net.edges() if u in inside and v in inside)
    return ComponentSummary(
        members=members,
        size=len(members),
        edge_count=edge_count,
        density=pair_density(len(members), edge_count, density_variant),
    )


def slice_decomposition(
    net: OneModeNetwork,
    m: int,
    density_variant: str = DENSITY_NO_LOOPS,
) -> SliceDecomposition:
    """Slice at threshold ``m`` and summarize each weak component of the slice."""
    sliced = m_slice(net, m)
    return SliceDecomposition(
        m=m,
        network=sliced,
        components=[
            component_summary(sliced, members, density_variant)
            for members in weak_components(sliced)
        ],
    )
