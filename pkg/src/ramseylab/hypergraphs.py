"""k-uniform hypergraphs on dense integer vertices with canonical edge order."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Sequence

from .errors import ParseError


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices 0..n-1.

    Edges are k-element subsets stored as strictly ascending tuples and
    iterated in lexicographic order, so equal hypergraphs enumerate their
    edges identically.  Vertex ids are never renumbered: operations that drop
    vertices leave them in place as isolated vertices.  Instances are safe to
    share across concurrent readers once constructed.
    """

    __slots__ = ("k", "n", "_edges", "_edge_set", "_incidence")

    def __init__(self, k: int, n: int, edges: Iterable[Sequence[int]] = ()):
        if k < 1:
            raise ValueError(f"uniformity must be at least 1, got {k}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for edge in edges:
            e = tuple(sorted(edge))
            if len(e) != k or len(set(e)) != k:
                raise ValueError(f"edge {tuple(edge)} is not a set of {k} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} has a vertex outside 0..{n - 1}")
            canon.add(e)
        self.k = k
        self.n = n
        self._edges = tuple(sorted(canon))
        self._edge_set = frozenset(self._edges)
        self._incidence = None

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        """Edges in lexicographic order."""
        return self._edges

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, edge: Sequence[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.k == other.k and self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.k, self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={len(self._edges)})"

    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ascending indexes of the edges through it."""
        if self._incidence is None:
            inc: list[list[int]] = [[] for _ in range(self.n)]
            for i, e in enumerate(self._edges):
                for v in e:
                    inc[v].append(i)
            self._incidence = tuple(tuple(lst) for lst in inc)
        return self._incidence

    def degree(self, v: int) -> int:
        """Number of edges containing vertex v."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        return len(self.incidence()[v])

    def max_degree(self) -> tuple[int, int]:
        """(vertex, degree) of maximum degree; ties go to the smallest vertex id.

        An edgeless hypergraph reports (0, 0).
        """
        if not self._edges:
            return (0, 0)
        inc = self.incidence()
        best_v, best_d = 0, len(inc[0])
        for v in range(1, self.n):
            d = len(inc[v])
            if d > best_d:
                best_v, best_d = v, d
        return (best_v, best_d)

    def support(self) -> tuple[int, ...]:
        """Vertices with degree at least one, ascending."""
        seen = set()
        for e in self._edges:
            seen.update(e)
        return tuple(sorted(seen))

    def link(self, v: int) -> Hypergraph:
        """(k-1)-uniform link of v: the edge remainders of edges through v.

        The vertex range is preserved, so |edges(link)| == degree(v).
        """
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        remainders = [tuple(u for u in e if u != v) for e in self._edges if v in e]
        return Hypergraph(self.k - 1, self.n, remainders)

    def shadow(self) -> Hypergraph:
        """All (k-1)-subsets contained in some edge."""
        if self.k < 2:
            raise ValueError("shadow needs uniformity at least 2")
        sets = set()
        for e in self._edges:
            for f in itertools.combinations(e, self.k - 1):
                sets.add(f)
        return Hypergraph(self.k - 1, self.n, sets)

    def shadow_multiplicity(self) -> dict[tuple[int, ...], int]:
        """Map each (k-1)-shadow set to the number of edges containing it."""
        if self.k < 2:
            raise ValueError("shadow needs uniformity at least 2")
        counts: Counter = Counter()
        for e in self._edges:
            for f in itertools.combinations(e, self.k - 1):
                counts[f] += 1
        return dict(counts)

    def remove_vertices(self, drop: Iterable[int]) -> Hypergraph:
        """Induced subhypergraph on the complement of `drop`.

        Vertex ids and n are preserved; dropped vertices become isolated.
        """
        dropped = set(drop)
        for v in dropped:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        kept = [e for e in self._edges if dropped.isdisjoint(e)]
        return Hypergraph(self.k, self.n, kept)


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    """The complete k-graph on n vertices, with all C(n, k) edges."""
    if k < 2 or k > n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    return Hypergraph(k, n, itertools.combinations(range(n), k))


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the hypergraph file format.

    Line 1 is `k n m`, followed by m lines of k space-separated vertex ids.
    Lines starting with `#` and blank lines are ignored.
    """
    k = n = m = 0
    have_header = False
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not have_header:
            if len(fields) != 3:
                raise ParseError("header must be three integers 'k n m'", lineno)
            try:
                k, n, m = (int(f) for f in fields)
            except ValueError:
                raise ParseError("header must be three integers 'k n m'", lineno) from None
            if k < 1 or n < 0 or m < 0:
                raise ParseError(f"invalid header values k={k} n={n} m={m}", lineno)
            have_header = True
            continue
        if len(edges) == m:
            raise ParseError(f"more edge lines than the declared m={m}", lineno)
        if len(fields) != k:
            raise ParseError(f"expected {k} vertex ids, got {len(fields)}", lineno)
        try:
            verts = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        for v in verts:
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)
        e = tuple(sorted(verts))
        if len(set(e)) != k:
            raise ParseError(f"repeated vertex in edge {' '.join(fields)}", lineno)
        if e in seen:
            raise ParseError(f"duplicate edge {' '.join(map(str, e))}", lineno)
        seen.add(e)
        edges.append(e)
    if not have_header:
        raise ParseError("missing header line 'k n m'", max(last_line, 1))
    if len(edges) != m:
        raise ParseError(f"expected {m} edges, found {len(edges)}", max(last_line, 1))
    return Hypergraph(k, n, edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    """Canonical text form: header, then edges in lexicographic order."""
    lines = [f"{h.k} {h.n} {len(h.edges)}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"
