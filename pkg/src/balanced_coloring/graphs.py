"""Immutable bitset graphs: standard families, operators, and metrics.

Vertices are the dense integers 0..n-1 and every builder documents its
numbering, so constructive colorers can address vertices arithmetically
(parity patterns, residues mod 4). Adjacency rows are Python ints used as
bitsets: the verification and search code is dominated by popcounts over
neighborhoods, and ``int.bit_count`` is the cheapest primitive for that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class FamilyParameterError(ValueError):
    """Parameters outside a graph family's domain."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.

    Instances are immutable; operators return new graphs. Equality is labeled
    equality (same order, same rows), never isomorphism.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"row {v} has bits beyond vertex {self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                rest ^= low
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def closed_row(self, v: int) -> int:
        """Bitset of the closed neighborhood N[v]."""
        return self.adj[v] | (1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v, sorted lexicographically."""
        for u in range(self.n):
            for off in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + off)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# ---------------------------------------------------------------------------
# Family builders
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise FamilyParameterError("order must be non-negative")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise FamilyParameterError("order must be non-negative")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise FamilyParameterError("path needs at least one vertex")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise FamilyParameterError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves 1..leaves."""
    if leaves < 0:
        raise FamilyParameterError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def wheel(n: int) -> Graph:
    """Wheel: hub 0 joined to the cycle on 1..n."""
    if n < 3:
        raise FamilyParameterError("wheel rim needs at least three vertices")
    return join(complete(1), cycle(n))


def complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph with sides 0..m-1 and m..m+n-1."""
    if m < 0 or n < 0:
        raise FamilyParameterError("side sizes must be non-negative")
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    rows = [right] * m + [left] * n
    return Graph(m + n, tuple(rows))


def circulant(n: int, lengths: Iterable[int]) -> Graph:
    """Circulant on 0..n-1: i is adjacent to i +- d mod n for each length d."""
    spec = CirculantSpec(n, tuple(lengths))
    return spec.build()


def gen_petersen(n: int, d: int) -> Graph:
    """Generalized Petersen graph on 2n vertices.

    Vertices 0..n-1 form the outer cycle, vertex n+i is the inner partner of
    i; inner edges join n+i to n+((i+d) mod n), spokes join i to n+i.
    """
    PetersenSpec(n, d)
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + d) % n))
    return Graph.from_edges(2 * n, edges)


def hypercube(dim: int) -> Graph:
    """Hypercube whose vertices are dim-bit labels, edges at Hamming distance 1."""
    if dim < 0:
        raise FamilyParameterError("dimension must be non-negative")
    n = 1 << dim
    rows = []
    for v in range(n):
        row = 0
        for b in range(dim):
            row |= 1 << (v ^ (1 << b))
        rows.append(row)
    return Graph(n, tuple(rows))


def prism(n: int) -> Graph:
    """Prism over the n-cycle: two copies of C_n (0..n-1 and n..2n-1) plus a
    perfect matching i to n+i. Equals cartesian(K2, C_n) under its numbering."""
    if n < 3:
        raise FamilyParameterError("prism needs a cycle of length at least three")
    return cartesian(complete(2), cycle(n))


_FAMILY_ARITY = {
    "empty": 1,
    "complete": 1,
    "path": 1,
    "cycle": 1,
    "star": 1,
    "wheel": 1,
    "complete-bipartite": 2,
    "circulant": 2,
    "gen-petersen": 2,
    "gp": 2,
    "hypercube": 1,
    "prism": 1,
}


def build_family(kind: str, *params) -> Graph:
    """Build a named family member; raises FamilyParameterError on bad input.

    ``circulant`` takes (n, lengths) where lengths is an iterable of ints;
    all other families take plain integers.
    """
    arity = _FAMILY_ARITY.get(kind)
    if arity is None:
        known = ", ".join(sorted(_FAMILY_ARITY))
        raise FamilyParameterError(f"unknown family {kind!r}; known: {known}")
    if len(params) != arity:
        raise FamilyParameterError(f"family {kind!r} takes {arity} parameter(s)")
    try:
        if kind == "empty":
            return empty_graph(int(params[0]))
        if kind == "complete":
            return complete(int(params[0]))
        if kind == "path":
            return path(int(params[0]))
        if kind == "cycle":
            return cycle(int(params[0]))
        if kind == "star":
            return star(int(params[0]))
        if kind == "wheel":
            return wheel(int(params[0]))
        if kind == "complete-bipartite":
            return complete_bipartite(int(params[0]), int(params[1]))
        if kind == "circulant":
            return circulant(int(params[0]), tuple(params[1]))
        if kind in ("gen-petersen", "gp"):
            return gen_petersen(int(params[0]), int(params[1]))
        if kind == "hypercube":
            return hypercube(int(params[0]))
        if kind == "prism":
            return prism(int(params[0]))
    except FamilyParameterError:
        raise
    except (TypeError, ValueError) as exc:
        raise FamilyParameterError(f"bad parameters for {kind!r}: {exc}") from exc
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Parameterized family specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CirculantSpec:
    """Order n and a sorted set of connection lengths in 1..n//2."""

    n: int
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise FamilyParameterError("circulant order must be positive")
        norm = tuple(sorted(set(int(d) for d in self.lengths)))
        object.__setattr__(self, "lengths", norm)
        if not norm:
            raise FamilyParameterError("connection set must be non-empty")
        if norm[0] < 1 or norm[-1] > self.n // 2:
            raise FamilyParameterError(
                f"connection lengths must lie in 1..{self.n // 2}"
            )

    @property
    def degree(self) -> int:
        half = self.n % 2 == 0 and self.n // 2 in self.lengths
        return 2 * len(self.lengths) - (1 if half else 0)

    @property
    def gcd_step(self) -> int:
        """gcd of the connection lengths together with n."""
        return math.gcd(self.n, *self.lengths)

    def residue_counts(self) -> tuple[int, int, int]:
        """Counts (s1, s2, s3) of lengths strictly below n/2 that are
        congruent to 0, 2, and 1 or 3 mod 4 respectively."""
        below = [d for d in self.lengths if 2 * d != self.n]
        s1 = sum(1 for d in below if d % 4 == 0)
        s2 = sum(1 for d in below if d % 4 == 2)
        s3 = sum(1 for d in below if d % 2 == 1)
        return s1, s2, s3

    def complement_spec(self) -> CirculantSpec:
        """Connection set {1..n//2} minus this one (complement graph)."""
        rest = tuple(d for d in range(1, self.n // 2 + 1) if d not in set(self.lengths))
        return CirculantSpec(self.n, rest)

    def build(self) -> Graph:
        rows = [0] * self.n
        for d in self.lengths:
            for i in range(self.n):
                rows[i] |= 1 << ((i + d) % self.n)
                rows[i] |= 1 << ((i - d) % self.n)
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True, slots=True)
class PetersenSpec:
    """Outer cycle length n and inner step d with 1 <= d <= (n-1)//2."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise FamilyParameterError("outer cycle needs at least three vertices")
        if not 1 <= self.d <= (self.n - 1) // 2:
            raise FamilyParameterError(
                f"inner step must lie in 1..{(self.n - 1) // 2}"
            )

    def build(self) -> Graph:
        return gen_petersen(self.n, self.d)


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Block-diagonal union; h's vertices are shifted by g.n."""
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.adj]
    rows += [(row << g.n) | gmask for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (i, j) is encoded as i * h.n + j."""
    rows = []
    for i in range(g.n):
        shifted = [1 << (k * h.n) for k in bits(g.adj[i])]
        for j in range(h.n):
            row = h.adj[j] << (i * h.n)
            for base in shifted:
                row |= base << j
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def strong(g: Graph, h: Graph) -> Graph:
    """Strong product; vertex (i, j) is encoded as i * h.n + j."""
    rows = []
    for i in range(g.n):
        gnbrs = list(bits(g.adj[i]))
        for j in range(h.n):
            row = h.adj[j] << (i * h.n)
            for k in gnbrs:
                row |= (h.adj[j] | (1 << j)) << (k * h.n)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def lexicographic(g: Graph, h: Graph) -> Graph:
    """Lexicographic product; vertex (i, j) is encoded as i * h.n + j."""
    hfull = (1 << h.n) - 1
    rows = []
    for i in range(g.n):
        gnbrs = list(bits(g.adj[i]))
        for j in range(h.n):
            row = h.adj[j] << (i * h.n)
            for k in gnbrs:
                row |= hfull << (k * h.n)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def direct(g: Graph, h: Graph) -> Graph:
    """Direct (tensor) product; vertex (i, j) is encoded as i * h.n + j."""
    rows = []
    for i in range(g.n):
        gnbrs = list(bits(g.adj[i]))
        for j in range(h.n):
            row = 0
            for k in gnbrs:
                row |= h.adj[j] << (k * h.n)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


_PRODUCTS = {
    "cartesian": cartesian,
    "strong": strong,
    "lexicographic": lexicographic,
    "direct": direct,
}


def product(kind: str, g: Graph, h: Graph) -> Graph:
    try:
        op = _PRODUCTS[kind]
    except KeyError:
        raise ValueError(f"unknown product kind {kind!r}") from None
    return op(g, h)


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphMetrics:
    degrees: tuple[int, ...]
    max_degree: int
    diameter: float  # math.inf when disconnected
    is_connected: bool
    is_tree: bool
    components: tuple[tuple[int, ...], ...]


def _bfs_reach(adj: Sequence[int], start: int) -> tuple[int, int]:
    """Return (visited mask, eccentricity of start within its component)."""
    visited = 1 << start
    frontier = visited
    depth = 0
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= ~visited
        if not nxt:
            return visited, depth
        visited |= nxt
        frontier = nxt
        depth += 1


def metrics(g: Graph) -> GraphMetrics:
    """Degrees, max degree, diameter, connectivity, tree test, components.

    The diameter of a disconnected graph is reported as ``math.inf`` so that
    census code never has to branch on exceptions; a graph with at most one
    vertex has diameter 0.
    """
    degs = g.degrees()
    maxdeg = max(degs, default=0)
    components: list[tuple[int, ...]] = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        mask, _ = _bfs_reach(g.adj, v)
        seen |= mask
        components.append(tuple(bits(mask)))
    connected = len(components) <= 1
    if not connected:
        diameter: float = math.inf
    elif g.n <= 1:
        diameter = 0
    else:
        diameter = max(_bfs_reach(g.adj, v)[1] for v in range(g.n))
    is_tree = connected and g.n >= 1 and g.edge_count == g.n - 1
    return GraphMetrics(
        degrees=degs,
        max_degree=maxdeg,
        diameter=diameter,
        is_connected=connected,
        is_tree=is_tree,
        components=tuple(components),
    )


def is_tree(g: Graph) -> bool:
    if g.n < 1 or g.edge_count != g.n - 1:
        return False
    mask, _ = _bfs_reach(g.adj, 0)
    return mask == (1 << g.n) - 1


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, for small-scale censuses."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph(n, tuple(rows))
