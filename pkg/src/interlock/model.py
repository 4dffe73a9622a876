"""Domain types for affiliation (two-mode) and valued one-mode networks.

A :class:`TwoModeNetwork` records which actors (board members) sit on which
events (journal boards).  Projecting it yields a :class:`OneModeNetwork`, an
undirected graph whose integer line values count shared members.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

DENSITY_NO_LOOPS = "no-loops"
DENSITY_LOOPS = "loops"
DENSITY_VARIANTS = (DENSITY_NO_LOOPS, DENSITY_LOOPS)


def normalize_identifier(raw: str, *, casefold: bool = False) -> str:
    """Canonicalize an identifier token.

    Surrounding whitespace is trimmed and the text is put into Unicode NFC
    form so visually identical spellings compare equal.  With ``casefold``
    the token is additionally case-folded (used for actor-name merging).
    Raises ``ValueError`` if nothing is left after trimming.
    """
    token = unicodedata.normalize("NFC", raw.strip())
    if casefold:
        token = token.casefold()
    if not token:
        raise ValueError("identifier is empty after trimming")
    return token


def pair_density(n: int, m: int, variant: str) -> float:
    """Share of realized lines among ``n`` vertices carrying ``m`` lines.

    ``no-loops`` uses the n(n-1)/2 unordered-pair maximum; ``loops`` uses
    n^2/2, which also counts self-pairs in the denominator.
    """
    if variant == DENSITY_NO_LOOPS:
        return 0.0 if n < 2 else 2.0 * m / (n * (n - 1))
    if variant == DENSITY_LOOPS:
        return 0.0 if n < 1 else 2.0 * m / (n * n)
    raise ValueError(f"unknown density variant: {variant!r}")


@dataclass(frozen=True)
class AffiliationStats:
    """Seat bookkeeping for a two-mode network."""

    seats: int
    actors: int
    events: int
    mean_seats_per_event: float
    mean_participation_rate: float


class TwoModeNetwork:
    """Affiliation structure: events (boards) holding sets of actors.

    Event and actor identifiers live in disjoint namespaces; the same token
    may name both an event and an actor.  Construction is single-writer;
    once built, instances are treated as immutable values and are safe for
    concurrent reads.
    """

    def __init__(self, *, casefold_actors: bool = False) -> None:
        self.casefold_actors = casefold_actors
        self._events: list[str] = []
        self._event_labels: dict[str, str] = {}
        self._members: dict[str, set[str]] = {}
        self._actors: list[str] = []
        self._actor_events: dict[str, set[str]] = {}

    def add_event(self, event: str, label: str | None = None) -> str:
        """Register an event; an empty board is fine.  Returns the stored id."""
        eid = normalize_identifier(event)
        if eid not in self._members:
            self._events.append(eid)
            self._members[eid] = set()
        if label is not None:
            self._event_labels[eid] = label
        return eid

    def add_affiliation(self, event: str, actor: str) -> bool:
        """Record one board seat; re-adding the same pair is a no-op.

        Unknown events and actors are created on first sight, in encounter
        order.  Returns ``True`` when a new seat was recorded.
        """
        eid = self.add_event(event)
        aid = normalize_identifier(actor, casefold=self.casefold_actors)
        if aid not in self._actor_events:
            self._actors.append(aid)
            self._actor_events[aid] = set()
        if eid in self._actor_events[aid]:
            return False
        self._actor_events[aid].add(eid)
        self._members[eid].add(aid)
        return True

    @property
    def events(self) -> tuple[str, ...]:
        return tuple(self._events)

    @property
    def actors(self) -> tuple[str, ...]:
        return tuple(self._actors)

    def has_event(self, event: str) -> bool:
        return event in self._members

    def members(self, event: str) -> frozenset[str]:
        """Board of ``event`` as a frozen set of actor ids."""
        try:
            return frozenset(self._members[event])
        except KeyError:
            raise ValueError(f"unknown event: {event!r}") from None

    def events_of(self, actor: str) -> frozenset[str]:
        """Events on whose boards ``actor`` sits."""
        try:
            return frozenset(self._actor_events[actor])
        except KeyError:
            raise ValueError(f"unknown actor: {actor!r}") from None

    def event_label(self, event: str) -> str:
        if event not in self._members:
            raise ValueError(f"unknown event: {event!r}")
        return self._event_labels.get(event, event)

    def seats(self) -> int:
        """Total board seats (memberships counted once per event/actor pair)."""
        return sum(len(board) for board in self._members.values())

    def validate(self) -> None:
        """Cross-check the event-side and actor-side membership indexes."""
        for eid, board in self._members.items():
            for aid in board:
                if eid not in self._actor_events.get(aid, ()):
                    raise ValueError(f"membership {eid!r}/{aid!r} missing on actor side")
        for aid, evs in self._actor_events.items():
            if not evs:
                raise ValueError(f"actor {aid!r} holds no seat")
            for eid in evs:
                if aid not in self._members.get(eid, ()):
                    raise ValueError(f"membership {eid!r}/{aid!r} missing on event side")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoModeNetwork):
            return NotImplemented
        return (
            self._events == other._events
            and self._actors == other._actors
            and self._members == other._members
            and {e: self.event_label(e) for e in self._events}
            == {e: other.event_label(e) for e in other._events}
        )

    def __repr__(self) -> str:
        return (
            f"TwoModeNetwork(events={len(self._events)}, "
            f"actors={len(self._actors)}, seats={self.seats()})"
        )


def affiliation_stats(net: TwoModeNetwork) -> AffiliationStats:
    """Seat counts and participation averages; zeros on an empty network."""
    seats = net.seats()
    n_actors = len(net.actors)
    n_events = len(net.events)
    return AffiliationStats(
        seats=seats,
        actors=n_actors,
        events=n_events,
        mean_seats_per_event=seats / n_events if n_events else 0.0,
        mean_participation_rate=seats / n_actors if n_actors else 0.0,
    )


class OneModeNetwork:
    """Undirected valued graph; every line value is a positive integer.

    Vertex order is ingestion order and drives every deterministic output
    (reports, exports, component listings).  Self-loops and duplicate pairs
    are rejected.  Instances are treated as immutable after construction.
    """

    def __init__(
        self,
        vertices: Iterable[str] = (),
        labels: Mapping[str, str] | None = None,
    ) -> None:
        self._order: list[str] = []
        self._index: dict[str, int] = {}
        self._labels: dict[str, str] = {}
        self._adj: dict[str, dict[str, int]] = {}
        for v in vertices:
            self.add_vertex(v)
        if labels:
            for v, lab in labels.items():
                self.set_label(v, lab)

    def add_vertex(self, vertex: str, label: str | None = None) -> str:
        vid = normalize_identifier(vertex)
        if vid in self._index:
            raise ValueError(f"duplicate vertex: {vid!r}")
        self._index[vid] = len(self._order)
        self._order.append(vid)
        self._adj[vid] = {}
        if label is not None:
            self._labels[vid] = label
        return vid

    def add_edge(self, u: str, v: str, value: int) -> None:
        """Attach an undirected line of the given positive integer value."""
        for x in (u, v):
            if x not in self._index:
                raise ValueError(f"unknown vertex: {x!r}")
        if u == v:
            raise ValueError(f"self-loop rejected on {u!r}")
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"edge value must be a positive integer, got {value!r}")
        if v in self._adj[u]:
            raise ValueError(f"duplicate edge {u!r} - {v!r}")
        self._adj[u][v] = value
        self._adj[v][u] = value

    def set_label(self, vertex: str, label: str) -> None:
        if vertex not in self._index:
            raise ValueError(f"unknown vertex: {vertex!r}")
        self._labels[vertex] = label

    @property
    def n(self) -> int:
        return len(self._order)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._order)

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._index

    def index(self, vertex: str) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise ValueError(f"unknown vertex: {vertex!r}") from None

    def label(self, vertex: str) -> str:
        if vertex not in self._index:
            raise ValueError(f"unknown vertex: {vertex!r}")
        return self._labels.get(vertex, vertex)

    def degree(self, vertex: str) -> int:
        try:
            return len(self._adj[vertex])
        except KeyError:
            raise ValueError(f"unknown vertex: {vertex!r}") from None

    def degrees(self) -> list[int]:
        """Degree of every vertex, in vertex order."""
        return [len(self._adj[v]) for v in self._order]

    def neighbors(self, vertex: str) -> tuple[str, ...]:
        """Adjacent vertices in vertex order (the deterministic traversal order)."""
        try:
            nbrs = self._adj[vertex]
        except KeyError:
            raise ValueError(f"unknown vertex: {vertex!r}") from None
        return tuple(sorted(nbrs, key=self._index.__getitem__))

    def value(self, u: str, v: str) -> int:
        """Line value between two vertices; 0 when no line exists."""
        for x in (u, v):
            if x not in self._index:
                raise ValueError(f"unknown vertex: {x!r}")
        return self._adj[u].get(v, 0)

    def edges(self) -> Iterator[tuple[str, str, int]]:
        """Yield (u, v, value) once per line, u before v in vertex order."""
        for u in self._order:
            iu = self._index[u]
            for v in sorted(self._adj[u], key=self._index.__getitem__):
                if self._index[v] > iu:
                    yield u, v, self._adj[u][v]

    def validate(self) -> None:
        """Check symmetry, positive values, absence of loops, and the
        handshake identity (degree sum equals twice the line count)."""
        seen_pairs = set()
        for u, nbrs in self._adj.items():
            for v, value in nbrs.items():
                if u == v:
                    raise ValueError(f"self-loop on {u!r}")
                if value < 1:
                    raise ValueError(f"non-positive value on {u!r} - {v!r}")
                if self._adj[v].get(u) != value:
                    raise ValueError(f"asymmetric line {u!r} - {v!r}")
                seen_pairs.add(frozenset((u, v)))
        if sum(self.degrees()) != 2 * len(seen_pairs):
            raise ValueError("handshake identity violated")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OneModeNetwork):
            return NotImplemented
        return (
            self._order == other._order
            and [self.label(v) for v in self._order]
            == [other.label(v) for v in other._order]
            and self._adj == other._adj
        )

    def __repr__(self) -> str:
        return f"OneModeNetwork(n={self.n}, m={self.edge_count})"
