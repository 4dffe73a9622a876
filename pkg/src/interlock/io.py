"""Readers and writers for affiliation and one-mode network files.

Supported inputs: membership CSV (``actor,event`` header, either column
order) and two-mode NET files.  Supported outputs for one-mode networks:
NET, edge-list CSV, and DOT.  All text is UTF-8 with ``\\n`` line ends;
every parse rejection carries the offending line number.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field

from .model import OneModeNetwork, TwoModeNetwork


class FormatError(ValueError):
    """A malformed input line; ``line`` is 1-based."""

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class BipartitenessError(FormatError):
    """An edge joining two events or two actors in a two-mode file."""


@dataclass
class ParseDiagnostics:
    """Non-fatal observations collected while parsing."""

    warnings: list[tuple[int, str]] = field(default_factory=list)
    records_read: int = 0
    duplicates_collapsed: int = 0

    def warn(self, line: int, message: str) -> None:
        self.warnings.append((line, message))


def parse_csv_affiliations(
    text: str, *, casefold_actors: bool = False
) -> tuple[TwoModeNetwork, ParseDiagnostics]:
    """Build a two-mode network from membership CSV.

    The header row must name exactly the columns ``actor`` and ``event``
    (any order decides the mapping).  Each data row records one seat;
    duplicate rows are collapsed with a warning, blank lines are skipped.
    """
    diags = ParseDiagnostics()
    net = TwoModeNetwork(casefold_actors=casefold_actors)
    reader = csv.reader(io.StringIO(text, newline=""))
    header: dict[str, int] | None = None
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if header is None:
            names = [cell.strip().lower() for cell in row]
            if sorted(names) != ["actor", "event"]:
                raise FormatError(
                    line, f"expected header with columns actor,event; got {row!r}"
                )
            header = {name: i for i, name in enumerate(names)}
            continue
        if len(row) != 2:
            raise FormatError(line, f"expected 2 fields, got {len(row)}")
        diags.records_read += 1
        try:
            added = net.add_affiliation(
                row[header["event"]], row[header["actor"]]
            )
        except ValueError as exc:
            raise FormatError(line, str(exc)) from None
        if not added:
            diags.duplicates_collapsed += 1
            diags.warn(line, f"duplicate membership collapsed: {row!r}")
    if header is None:
        raise FormatError(1, "missing header row")
    return net, diags


_VERTEX_LINE = re.compile(r'^\s*(\d+)\s+"([^"]*)"(?:\s+.*)?$')


def _section(token: str) -> str | None:
    if token.startswith("*"):
        return token[1:].lower()
    return None


def _iter_lines(text: str):
    """Yield (line_number, stripped_line), skipping blanks and % comments."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        yield no, line


def _parse_vertex_defs(
    lines: list[tuple[int, str]], n: int
) -> dict[int, str]:
    """Parse ``index "label"`` vertex lines; trailing tokens are ignored."""
    labels: dict[int, str] = {}
    for no, line in lines:
        m = _VERTEX_LINE.match(line)
        if m:
            idx, label = int(m.group(1)), m.group(2)
        else:
            parts = line.split()
            if len(parts) < 2 or not parts[0].isdigit():
                raise FormatError(no, f"malformed vertex line: {line!r}")
            idx, label = int(parts[0]), parts[1]
        if not 1 <= idx <= n:
            raise FormatError(no, f"vertex index {idx} out of range 1..{n}")
        if idx in labels:
            raise FormatError(no, f"vertex {idx} defined twice")
        labels[idx] = label
    return labels


def _split_sections(text: str, expect_counts: int):
    """Return (vertex header ints, vertex lines, edge lines)."""
    stream = list(_iter_lines(text))
    if not stream:
        raise FormatError(1, "empty file; expected *Vertices")
    no, line = stream[0]
    head = line.split()
    if _section(head[0]) != "vertices":
        raise FormatError(no, f"expected *Vertices, got {line!r}")
    counts = head[1:]
    if len(counts) != expect_counts or not all(c.isdigit() for c in counts):
        want = "<n> <nEvents>" if expect_counts == 2 else "<n>"
        raise FormatError(no, f"expected *Vertices {want}, got {line!r}")
    vertex_lines: list[tuple[int, str]] = []
    edge_lines: list[tuple[int, str]] = []
    bucket = vertex_lines
    for no, line in stream[1:]:
        sec = _section(line.split()[0])
        if sec is not None:
            if sec == "edges" and bucket is vertex_lines:
                bucket = edge_lines
                continue
            raise FormatError(no, f"unexpected section {line!r}")
        bucket.append((no, line))
    return [int(c) for c in counts], vertex_lines, edge_lines


def parse_net_two_mode(
    text: str, *, casefold_actors: bool = False
) -> tuple[TwoModeNetwork, ParseDiagnostics]:
    """Read a two-mode NET file.

    ``*Vertices <n> <nEvents>`` declares that vertices 1..nEvents are
    events and the rest actors; ``*Edges`` lines must join one of each
    (anything else raises :class:`BipartitenessError`).  Undefined vertex
    indices get their number as label; actor vertices that end up with no
    affiliation are dropped with a warning.
    """
    diags = ParseDiagnostics()
    (n, n_events), vertex_lines, edge_lines = _split_sections(text, 2)
    if n_events > n:
        raise FormatError(1, f"event count {n_events} exceeds vertex count {n}")
    labels = _parse_vertex_defs(vertex_lines, n)
    names = {i: labels.get(i, str(i)) for i in range(1, n + 1)}

    net = TwoModeNetwork(casefold_actors=casefold_actors)
    seen_events: set[str] = set()
    for i in range(1, n_events + 1):
        if names[i] in seen_events:
            raise FormatError(1, f"duplicate event label {names[i]!r}")
        seen_events.add(names[i])
        net.add_event(names[i], names[i])
    seen_actors: set[str] = set()
    for i in range(n_events + 1, n + 1):
        if names[i] in seen_actors:
            raise FormatError(1, f"duplicate actor label {names[i]!r}")
        seen_actors.add(names[i])

    linked_actors: set[int] = set()
    for no, line in edge_lines:
        parts = line.split()
        if len(parts) not in (2, 3) or not all(
            p.lstrip("-").isdigit() for p in parts[:2]
        ):
            raise FormatError(no, f"malformed edge line: {line!r}")
        i, j = int(parts[0]), int(parts[1])
        for idx in (i, j):
            if not 1 <= idx <= n:
                raise FormatError(no, f"vertex index {idx} out of range 1..{n}")
        i_is_event = i <= n_events
        j_is_event = j <= n_events
        if i_is_event == j_is_event:
            kind = "events" if i_is_event else "actors"
            raise BipartitenessError(no, f"edge {i} {j} joins two {kind}")
        event_idx, actor_idx = (i, j) if i_is_event else (j, i)
        diags.records_read += 1
        try:
            added = net.add_affiliation(names[event_idx], names[actor_idx])
        except ValueError as exc:
            raise FormatError(no, str(exc)) from None
        if not added:
            diags.duplicates_collapsed += 1
            diags.warn(no, f"duplicate affiliation collapsed: {i} {j}")
        linked_actors.add(actor_idx)

    for idx in range(n_events + 1, n + 1):
        if idx not in linked_actors:
            diags.warn(0, f"actor vertex {names[idx]!r} has no affiliation; dropped")
    return net, diags


def parse_net_one_mode(text: str) -> OneModeNetwork:
    """Read a valued one-mode NET file as written by :func:`write_net_one_mode`.

    The quoted vertex name becomes both identifier and label.  Edge lines
    are ``i j value`` with a positive integer value; self-loops and repeated
    pairs are rejected.
    """
    (n,), vertex_lines, edge_lines = _split_sections(text, 1)
    labels = _parse_vertex_defs(vertex_lines, n)
    names = {i: labels.get(i, str(i)) for i in range(1, n + 1)}

    net = OneModeNetwork()
    for i in range(1, n + 1):
        try:
            net.add_vertex(names[i], names[i])
        except ValueError as exc:
            raise FormatError(1, str(exc)) from None
    for no, line in edge_lines:
        parts = line.split()
        if len(parts) != 3 or not all(p.lstrip("-").isdigit() for p in parts):
            raise FormatError(no, f"malformed edge line: {line!r}")
        i, j, value = (int(p) for p in parts)
        for idx in (i, j):
            if not 1 <= idx <= n:
                raise FormatError(no, f"vertex index {idx} out of range 1..{n}")
        try:
            net.add_edge(names[i], names[j], value)
        except ValueError as exc:
            raise FormatError(no, str(exc)) from None
    net.validate()
    return net


def _net_quote(label: str) -> str:
    if '"' in label or "\n" in label:
        raise ValueError(f"label not representable in NET output: {label!r}")
    return f'"{label}"'


def write_net_one_mode(net: OneModeNetwork) -> str:
    """Render a one-mode network as a NET file, byte-stable across runs.

    Vertices appear 1-based in network order with quoted labels; edge
    lines are ``i j value`` with i < j.
    """
    out = [f"*Vertices {net.n}"]
    for pos, v in enumerate(net.vertices, start=1):
        out.append(f"{pos} {_net_quote(net.label(v))}")
    out.append("*Edges")
    for u, v, value in net.edges():
        out.append(f"{net.index(u) + 1} {net.index(v) + 1} {value}")
    return "\n".join(out) + "\n"


def write_edge_list_csv(net: OneModeNetwork) -> str:
    """Edge list with header ``source,target,value``, one row per line,
    ordered by (source position, target position)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target", "value"])
    for u, v, value in net.edges():
        writer.writerow([u, v, value])
    return buf.getvalue()


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(net: OneModeNetwork) -> str:
    """Graphviz rendering of the valued network (undirected)."""
    out = ["graph interlock {"]
    for v in net.vertices:
        label = net.label(v)
        if label != v:
            out.append(f"  {_dot_quote(v)} [label={_dot_quote(label)}];")
        else:
            out.append(f"  {_dot_quote(v)};")
    for u, v, value in net.edges():
        out.append(
            f"  {_dot_quote(u)} -- {_dot_quote(v)} [label={_dot_quote(str(value))}, weight={value}];"
        )
    out.append("}")
    return "\n".join(out) + "\n"


def csv_kind(text: str) -> str:
    """Classify a CSV head as ``affiliations`` or ``degrees`` by its header."""
    reader = csv.reader(io.StringIO(text, newline=""))
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        names = [cell.strip().lower() for cell in row]
        if sorted(names) == ["actor", "event"]:
            return "affiliations"
        if "degree" in names:
            return "degrees"
        raise FormatError(reader.line_num, f"unrecognized header: {row!r}")
    raise FormatError(1, "missing header row")


def parse_degree_list_csv(text: str) -> tuple[list[int], ParseDiagnostics]:
    """Read a per-vertex degree census (any header containing ``degree``)."""
    diags = ParseDiagnostics()
    reader = csv.reader(io.StringIO(text, newline=""))
    col: int | None = None
    width = 0
    degrees: list[int] = []
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if col is None:
            names = [cell.strip().lower() for cell in row]
            if "degree" not in names:
                raise FormatError(line, f"no degree column in header: {row!r}")
            col = names.index("degree")
            width = len(names)
            continue
        if len(row) != width:
            raise FormatError(line, f"expected {width} fields, got {len(row)}")
        cell = row[col].strip()
        if not cell.isdigit():
            raise FormatError(line, f"degree must be a non-negative integer, got {cell!r}")
        degrees.append(int(cell))
        diags.records_read += 1
    if col is None:
        raise FormatError(1, "missing header row")
    return degrees, diags
