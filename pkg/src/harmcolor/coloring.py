"""Decision procedures for harmonious colorings.

A coloring is *rainbow* when no edge contains two vertices of the same color;
an edge violating that is *bad*. Two distinct edges e, f show the *same
pattern* when every vertex of e\\f and f\\e is colored and the color set of
e\\f equals the color set of f\\e. A total coloring is *harmonious* when it is
rainbow and no two edges show the same pattern — equivalently, when all edges
receive pairwise-distinct k-sets of colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping

from .hypergraph import FormatError, Hypergraph


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors 1..t to vertices; may be partial.

    ``assignment`` maps vertex id -> color id; vertices absent from the map are
    uncolored. ``t`` is the palette size, not the number of colors in use.
    """

    t: int
    assignment: Mapping[int, int]

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"palette size must be at least 1, got {self.t}")
        for v, c in self.assignment.items():
            if not 1 <= c <= self.t:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.t}")

    def color(self, v: int) -> int | None:
        return self.assignment.get(v)

    def is_total_on(self, vertices) -> bool:
        return all(v in self.assignment for v in vertices)


@dataclass(frozen=True, order=True)
class BadEdge:
    """A non-rainbow edge, by index."""

    edge: int


@dataclass(frozen=True, order=True)
class SamePattern:
    """An unordered pair of distinct edges (by index, e < f) showing the same
    pattern, with i = |e\\f| = k - |e∩f|."""

    e: int
    f: int
    i: int

    def __post_init__(self):
        if self.e == self.f:
            raise ValueError("a pattern collision needs two distinct edges")
        if self.e > self.f:  # canonicalize the unordered pair
            e, f = self.e, self.f
            object.__setattr__(self, "e", f)
            object.__setattr__(self, "f", e)
        if self.i < 1:
            raise ValueError(f"|e\\f| must be at least 1, got {self.i}")


BadEvent = BadEdge | SamePattern


@dataclass(frozen=True)
class LocalEvents:
    """Bad events seen from one vertex: b1 holds the bad edges containing v,
    b2[i] the same-pattern pairs {e, f} with v in e ∪ f and |e\\f| = i, for
    i = 1..k (i = k is the disjoint-pair class)."""

    b1: tuple[BadEdge, ...]
    b2: Mapping[int, tuple[SamePattern, ...]]


def bad_edges(h: Hypergraph, c: Coloring) -> list[BadEdge]:
    """Edges containing two distinct vertices of equal color, in index order.

    Partial colorings are allowed; an edge with any uncolored vertex is never
    reported bad (missing colors might still avoid the repeat elsewhere — the
    repeat itself is judged only on fully colored edges).
    """
    get = c.assignment.get
    out = []
    for idx, e in enumerate(h.edges):
        colors = [get(v) for v in e]
        if None in colors:
            continue
        if len(set(colors)) < len(colors):
            out.append(BadEdge(idx))
    return out


def _confirm_pair(h: Hypergraph, assignment: Mapping[int, int],
                  a: int, b: int) -> SamePattern | None:
    """Check the pattern definition on one candidate pair of edge indices."""
    ea, eb = set(h.edges[a]), set(h.edges[b])
    da, db = ea - eb, eb - ea
    colors_a = set()
    for v in da:
        col = assignment.get(v)
        if col is None:
            return None
        colors_a.add(col)
    colors_b = set()
    for v in db:
        col = assignment.get(v)
        if col is None:
            return None
        colors_b.add(col)
    if colors_a != colors_b:
        return None
    return SamePattern(min(a, b), max(a, b), len(da))


def pattern_collisions(h: Hypergraph, c: Coloring) -> list[SamePattern]:
    """All unordered pairs of distinct edges showing the same pattern, each
    reported once, sorted by edge indices. Partial colorings allowed.

    Fully colored edges are grouped by the sorted tuple of their *distinct*
    colors: equal pattern sets force equal full-edge color sets (the shared
    vertices contribute identically to both sides), so the groups are a
    complete prefilter and members only need confirming against the
    definition. A multiset key would miss non-rainbow pairs such as e\\f
    colored (1,1,2) against f\\e colored (1,2,2). Edges with uncolored
    vertices can only collide with partners containing every one of their
    uncolored vertices, so those candidates come from the incidence lists.
    """
    assignment = c.assignment
    get = assignment.get
    groups: dict[tuple[int, ...], list[int]] = {}
    uncolored_of: dict[int, tuple[int, ...]] = {}
    for idx, e in enumerate(h.edges):
        missing = tuple(v for v in e if v not in assignment)
        if missing:
            uncolored_of[idx] = missing
        else:
            key = tuple(sorted({assignment[v] for v in e}))
            groups.setdefault(key, []).append(idx)

    found: dict[tuple[int, int], SamePattern] = {}
    for ids in groups.values():
        if len(ids) < 2:
            continue
        for a, b in combinations(ids, 2):
            hit = _confirm_pair(h, assignment, a, b)
            if hit is not None:
                found[(hit.e, hit.f)] = hit

    for idx, missing in uncolored_of.items():
        # every uncolored vertex of this edge must lie in the partner too
        candidates = set(h.incidence[missing[0]])
        for v in missing[1:]:
            candidates &= set(h.incidence[v])
        for other in candidates:
            if other == idx:
                continue
            pair = (min(idx, other), max(idx, other))
            if pair in found:
                continue
            hit = _confirm_pair(h, assignment, idx, other)
            if hit is not None:
                found[pair] = hit

    return [found[pair] for pair in sorted(found)]


def is_harmonious(h: Hypergraph, c: Coloring) -> bool:
    """True iff c is rainbow and no two edges show the same pattern.

    Requires c to be total on the support of h; a partial coloring is rejected
    with ValueError since the question is not yet decided.
    """
    for v in range(h.n):
        if h.degrees[v] > 0 and v not in c.assignment:
            raise ValueError(f"partial coloring: vertex {v} lies in an edge but has no color")
    if bad_edges(h, c):
        return False
    return not pattern_collisions(h, c)


def local_bad_events(h: Hypergraph, c: Coloring, v: int) -> LocalEvents:
    """The bad events visible at vertex v under the current coloring.

    b1 collects the bad edges containing v. b2[i] collects the same-pattern
    pairs {e, f} with v in e ∪ f and |e\\f| = i; any pair containing v can be
    written with its first edge through v, so this matches counting pairs by
    an edge through v ( <= max_degree many) times partners sharing k-i >= 1
    vertices with it ( <= k*max_degree/(k-i) many), and <= max_degree*m
    partners in the disjoint class i = k.
    """
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} outside 0..{h.n - 1}")
    b1 = tuple(b for b in bad_edges(h, c) if v in h.edges[b.edge])
    by_i: dict[int, list[SamePattern]] = {i: [] for i in range(1, h.k + 1)}
    for hit in pattern_collisions(h, c):
        if v in h.edges[hit.e] or v in h.edges[hit.f]:
            by_i[hit.i].append(hit)
    return LocalEvents(b1=b1, b2={i: tuple(hits) for i, hits in by_i.items()})


def colors_used(c: Coloring) -> int:
    """Number of distinct color ids actually assigned."""
    return len(set(c.assignment.values()))


def parse_coloring(text: str) -> tuple[Coloring, int]:
    """Parse the coloring format: header ``c <t> <n>``, then ``v <vertex>
    <color>`` lines. Returns (coloring, n) with n the declared vertex count.
    Comments (#) and blank lines are skipped; errors carry line numbers."""
    header: tuple[int, int] | None = None
    assignment: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] != "c":
                raise FormatError(f"expected header 'c <t> <n>', got {line!r}", lineno)
            try:
                t, n = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise FormatError(f"non-integer field in header {line!r}", lineno) from None
            if t < 1 or n < 0:
                raise FormatError(f"header out of range: t={t}, n={n}", lineno)
            header = (t, n)
            continue
        t, n = header
        if tokens[0] != "v" or len(tokens) != 3:
            raise FormatError(f"expected 'v <vertex> <color>', got {line!r}", lineno)
        try:
            vertex, color = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise FormatError(f"non-integer field in {line!r}", lineno) from None
        if not 0 <= vertex < n:
            raise FormatError(f"vertex {vertex} outside 0..{n - 1}", lineno)
        if not 1 <= color <= t:
            raise FormatError(f"color {color} outside 1..{t}", lineno)
        if vertex in assignment:
            raise FormatError(f"vertex {vertex} colored twice", lineno)
        assignment[vertex] = color
    if header is None:
        raise FormatError("no header line found")
    return Coloring(t=header[0], assignment=assignment), header[1]


def serialize_coloring(c: Coloring, n: int) -> str:
    """Emit the coloring format with vertices ascending, LF line endings."""
    lines = [f"c {c.t} {n}"]
    lines.extend(f"v {v} {c.assignment[v]}" for v in sorted(c.assignment))
    return "\n".join(lines) + "\n"
