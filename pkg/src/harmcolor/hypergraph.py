"""k-uniform hypergraphs: data model, instance files, fixtures, random generation.

Vertices are dense integer ids 0..n-1. Edges are k-element sets stored as
sorted tuples; edge identity is set identity and duplicate edges are rejected.
Isolated vertices are allowed (n may exceed the support of the edges).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class FormatError(ValueError):
    """Malformed instance or coloring text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InfeasibleConfigError(ValueError):
    """Generator parameters violate a necessary feasibility condition."""


class GenerationFailure(RuntimeError):
    """The generator's restart budget ran out before a valid instance appeared."""


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices 0..n-1.

    Invariants, checked on construction:
      * every edge has exactly k distinct members, all in range(n);
      * no two edges are equal as sets;
      * degrees[v] is the number of edges containing v, so sum(degrees) == k*m.
    """

    __slots__ = ("k", "n", "edges", "degrees", "__dict__")

    def __init__(self, k: int, n: int, edges: Iterable[Sequence[int]]):
        if k < 2:
            raise ValueError(f"uniformity k must be at least 2, got {k}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        canon: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        degrees = [0] * n
        for pos, edge in enumerate(edges):
            e = tuple(sorted(edge))
            if len(e) != k or len(set(e)) != k:
                raise ValueError(
                    f"edge {pos} must contain exactly {k} distinct vertices: {tuple(edge)}"
                )
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {pos} has a vertex outside 0..{n - 1}: {tuple(edge)}")
            if e in seen:
                raise ValueError(f"duplicate edge {e} (position {pos})")
            seen.add(e)
            canon.append(e)
            for v in e:
                degrees[v] += 1
        self.k = k
        self.n = n
        self.edges: tuple[tuple[int, ...], ...] = tuple(canon)
        self.degrees: tuple[int, ...] = tuple(degrees)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """incidence[v] lists the indices of the edges containing v, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v].append(idx)
        return tuple(tuple(lst) for lst in inc)

    @property
    def support(self) -> tuple[int, ...]:
        """Vertices of positive degree, ascending."""
        return tuple(v for v in range(self.n) if self.degrees[v] > 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self.edges) == (other.k, other.n, other.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for bounded-degree random instances.

    The handshake condition k*m <= n*max_degree is necessary for existence and
    is checked eagerly; failing it raises InfeasibleConfigError rather than
    burning the restart budget. max_restarts=None means the default 100*m.
    """

    k: int
    n: int
    m: int
    max_degree: int
    seed: int = 0
    max_restarts: int | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.k > self.n:
            raise ValueError(f"k={self.k} exceeds vertex count n={self.n}")
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if self.max_degree < 1:
            raise ValueError(f"max_degree must be positive, got {self.max_degree}")
        if self.max_restarts is not None and self.max_restarts < 0:
            raise ValueError("max_restarts must be nonnegative")
        if self.k * self.m > self.n * self.max_degree:
            raise InfeasibleConfigError(
                f"infeasible: k*m = {self.k * self.m} exceeds "
                f"n*max_degree = {self.n * self.max_degree}"
            )


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the line-oriented instance format.

    Line 1 is ``p hg <k> <n> <m>``; each of the next m lines is
    ``e <v1> ... <vk>`` with 0-based vertex ids. ``#`` begins a comment line,
    blank lines are skipped, LF and CRLF both accepted. Errors carry the
    offending line number.
    """
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 5 or tokens[0] != "p" or tokens[1] != "hg":
                raise FormatError(f"expected header 'p hg <k> <n> <m>', got {line!r}", lineno)
            try:
                k, n, m = (int(tok) for tok in tokens[2:])
            except ValueError:
                raise FormatError(f"non-integer field in header {line!r}", lineno) from None
            if k < 2 or n < 0 or m < 0:
                raise FormatError(f"header out of range: k={k}, n={n}, m={m}", lineno)
            header = (k, n, m)
            continue
        k, n, m = header
        if tokens[0] != "e":
            raise FormatError(f"expected edge line 'e <v1> ... <v{k}>', got {line!r}", lineno)
        if len(edges) >= m:
            raise FormatError(f"more than the declared {m} edges", lineno)
        try:
            verts = tuple(int(tok) for tok in tokens[1:])
        except ValueError:
            raise FormatError(f"non-integer vertex id in {line!r}", lineno) from None
        if len(verts) != k:
            raise FormatError(f"edge has {len(verts)} vertices, expected {k}", lineno)
        if len(set(verts)) != k:
            raise FormatError(f"repeated vertex in edge {verts}", lineno)
        if min(verts) < 0 or max(verts) >= n:
            raise FormatError(f"vertex id outside 0..{n - 1} in edge {verts}", lineno)
        e = tuple(sorted(verts))
        if e in seen:
            raise FormatError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise FormatError("no header line found")
    k, n, m = header
    if len(edges) != m:
        raise FormatError(f"declared {m} edges but found {len(edges)}")
    return Hypergraph(k, n, edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    """Emit the canonical instance text: LF line endings, ascending vertex
    order within each edge, edges in stored order. Round-trips through
    parse_hypergraph exactly."""
    lines = [f"p hg {h.k} {h.n} {h.m}"]
    lines.extend("e " + " ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def max_degree(h: Hypergraph) -> int:
    """Largest number of edges meeting any one vertex; 0 for an edgeless instance."""
    return max(h.degrees, default=0)


def builtin_instance(name: str, size: int, k: int = 2) -> Hypergraph:
    """Named fixture families.

    path(n) and cycle(n) and complete-graph(n) are k=2 families on n vertices;
    matching(q, k) is q pairwise-disjoint k-edges; k-star(d, k) is d k-edges
    pairwise intersecting in one fixed vertex. The graph families reject k != 2.
    """
    if name in ("path", "cycle", "complete-graph") and k != 2:
        raise ValueError(f"{name} is a k=2 family, got k={k}")
    if name == "path":
        if size < 2:
            raise ValueError(f"path needs at least 2 vertices, got {size}")
        return Hypergraph(2, size, [(v, v + 1) for v in range(size - 1)])
    if name == "cycle":
        if size < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {size}")
        edges = [(v, v + 1) for v in range(size - 1)] + [(0, size - 1)]
        return Hypergraph(2, size, edges)
    if name == "complete-graph":
        if size < 2:
            raise ValueError(f"complete graph needs at least 2 vertices, got {size}")
        edges = [(u, v) for u in range(size) for v in range(u + 1, size)]
        return Hypergraph(2, size, edges)
    if name == "matching":
        if size < 1:
            raise ValueError(f"matching needs at least 1 edge, got {size}")
        if k < 2:
            raise ValueError(f"k must be at least 2, got {k}")
        edges = [tuple(range(j * k, (j + 1) * k)) for j in range(size)]
        return Hypergraph(k, size * k, edges)
    if name == "k-star":
        if size < 1:
            raise ValueError(f"k-star needs at least 1 edge, got {size}")
        if k < 2:
            raise ValueError(f"k must be at least 2, got {k}")
        edges = [
            (0,) + tuple(range(1 + j * (k - 1), 1 + (j + 1) * (k - 1)))
            for j in range(size)
        ]
        return Hypergraph(k, 1 + size * (k - 1), edges)
    raise ValueError(f"unknown fixture {name!r}")


def generate_random_bounded_degree(cfg: GeneratorConfig) -> Hypergraph:
    """Random k-uniform instance with m edges and maximum degree <= cfg.max_degree.

    Strategy: repeatedly draw a uniform k-subset of the vertices that still have
    residual degree capacity, rejecting duplicates (a bounded number of draws
    per edge), and restart from scratch on a dead end. Deterministic for a
    fixed seed. Raises GenerationFailure when the restart budget (default
    100*m) is exhausted — a distinct condition from up-front infeasibility,
    which GeneratorConfig itself rejects.
    """
    rng = random.Random(cfg.seed)
    restarts = cfg.max_restarts if cfg.max_restarts is not None else 100 * cfg.m
    attempts = restarts + 1
    for _ in range(max(attempts, 1)):
        capacity = [cfg.max_degree] * cfg.n
        chosen: list[tuple[int, ...]] = []
        taken: set[tuple[int, ...]] = set()
        dead = False
        while len(chosen) < cfg.m:
            eligible = [v for v in range(cfg.n) if capacity[v] > 0]
            if len(eligible) < cfg.k:
                dead = True
                break
            edge: tuple[int, ...] | None = None
            for _draw in range(100):
                cand = tuple(sorted(rng.sample(eligible, cfg.k)))
                if cand not in taken:
                    edge = cand
                    break
            if edge is None:  # only duplicates within the draw budget
                dead = True
                break
            taken.add(edge)
            chosen.append(edge)
            for v in edge:
                capacity[v] -= 1
        if not dead:
            return Hypergraph(cfg.k, cfg.n, chosen)
    raise GenerationFailure(
        f"no valid instance after {attempts} attempts "
        f"(k={cfg.k}, n={cfg.n}, m={cfg.m}, max_degree={cfg.max_degree}, seed={cfg.seed})"
    )
