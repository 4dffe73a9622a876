"""One-mode projections of a two-mode affiliation network.

The two duals: events linked by shared actors (the interlocking view) and
actors linked by shared events (co-membership).  Line values are raw
shared-member counts; zero-valued pairs are never materialized, so events
sharing nobody end up as isolates.
"""

from __future__ import annotations

from itertools import combinations

from .model import OneModeNetwork, TwoModeNetwork


def _project(vertices, labels, groups) -> OneModeNetwork:
    net = OneModeNetwork()
    for v in vertices:
        net.add_vertex(v, labels(v))
    counts: dict[tuple[str, str], int] = {}
    for group in groups:
        for a, b in combinations(sorted(group, key=net.index), 2):
            counts[a, b] = counts.get((a, b), 0) + 1
    for (a, b), value in sorted(
        counts.items(), key=lambda kv: (net.index(kv[0][0]), net.index(kv[0][1]))
    ):
        net.add_edge(a, b, value)
    net.validate()
    return net


def project_events(net: TwoModeNetwork) -> OneModeNetwork:
    """Network of events; a line's value counts the actors two boards share.

    Vertices keep event ingestion order, so downstream reports are
    deterministic.
    """
    return _project(
        net.events,
        net.event_label,
        (net.events_of(actor) for actor in net.actors),
    )


def project_actors(net: TwoModeNetwork) -> OneModeNetwork:
    """Network of actors; a line's value counts the boards both sit on."""
    return _project(
        net.actors,
        lambda a: a,
        (net.members(event) for event in net.events),
    )
