"""Detection of loose paths and stars, in hypergraphs and in edge colorings.

A loose path of length three is an edge triple (e1, e2, e3) with
|e1 & e2| = |e2 & e3| = 1 and e1 & e3 empty; it spans 3k-2 vertices.  A loose
path of length two is a pair of edges sharing exactly one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping, Sequence

from .errors import ParseError
from .hypergraphs import Hypergraph


@dataclass(frozen=True)
class LoosePathWitness:
    """An ordered edge sequence realizing a loose path, with its link vertices."""

    edges: tuple[tuple[int, ...], ...]
    links: tuple[int, ...]

    def verify(self, host: Hypergraph) -> bool:
        """Re-check the intersection pattern and host membership from scratch."""
        es = self.edges
        if len(es) not in (2, 3) or len(self.links) != len(es) - 1:
            return False
        if any(e not in host for e in es):
            return False
        for i, link in enumerate(self.links):
            shared = set(es[i]) & set(es[i + 1])
            if shared != {link}:
                return False
        if len(es) == 3 and set(es[0]) & set(es[2]):
            return False
        return True


def find_loose_path(h: Hypergraph, length: int) -> LoosePathWitness | None:
    """First loose path of the given length in canonical edge-tuple order.

    Returns None when the hypergraph contains no such path.  Two sound early
    exits keep dense path-free hosts cheap for length 3: fewer than 3k-2
    non-isolated vertices cannot carry the pattern, and in a star the two end
    edges would both contain the center.
    """
    if length not in (2, 3):
        raise ValueError(f"length must be 2 or 3, got {length}")
    if h.k < 2:
        raise ValueError("loose paths need uniformity at least 2")
    edges = h.edges
    if not edges:
        return None
    inc = h.incidence()

    if length == 2:
        for i, e1 in enumerate(edges):
            s1 = set(e1)
            partners = sorted({j for v in e1 for j in inc[v] if j > i})
            for j in partners:
                shared = s1.intersection(edges[j])
                if len(shared) == 1:
                    return LoosePathWitness((e1, edges[j]), (next(iter(shared)),))
        return None

    if len(h.support()) < 3 * h.k - 2:
        return None
    common = set(edges[0])
    for e in edges[1:]:
        common.intersection_update(e)
        if not common:
            break
    if common:
        return None

    for i, e1 in enumerate(edges):
        s1 = set(e1)
        partners = sorted({j for v in e1 for j in inc[v] if j != i})
        for j in partners:
            e2 = edges[j]
            shared12 = s1.intersection(e2)
            if len(shared12) != 1:
                continue
            a = next(iter(shared12))
            s2 = set(e2)
            thirds = sorted({t for v in e2 for t in inc[v] if t != i and t != j})
            for t in thirds:
                e3 = edges[t]
                shared23 = s2.intersection(e3)
                if len(shared23) != 1:
                    continue
                if s1.intersection(e3):
                    continue
                return LoosePathWitness((e1, e2, e3), (a, next(iter(shared23))))
    return None


def is_star(h: Hypergraph) -> int | None:
    """Smallest vertex contained in every edge, or None.

    An edgeless hypergraph is a star with center 0 by convention.
    """
    if not h.edges:
        return 0
    common = set(h.edges[0])
    for e in h.edges[1:]:
        common.intersection_update(e)
        if not common:
            return None
    return min(common)


def is_full_star(h: Hypergraph) -> bool:
    """True when some vertex lies in all C(n-1, k-1) possible edges through it."""
    if not h.edges:
        return False
    center = is_star(h)
    if center is None:
        return False
    return h.degree(center) == comb(h.n - 1, h.k - 1)


class Coloring:
    """A total r-coloring of the edges of the complete k-graph on n vertices."""

    __slots__ = ("k", "n", "r", "_assignment")

    def __init__(self, k: int, n: int, r: int, assignment: Mapping[Sequence[int], int]):
        if k < 2:
            raise ValueError(f"uniformity must be at least 2, got {k}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if r < 1:
            raise ValueError(f"color count must be at least 1, got {r}")
        expected = comb(n, k)
        canon: dict[tuple[int, ...], int] = {}
        for edge, color in assignment.items():
            e = tuple(sorted(edge))
            if len(e) != k or len(set(e)) != k:
                raise ValueError(f"edge {tuple(edge)} is not a set of {k} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} has a vertex outside 0..{n - 1}")
            if not 1 <= color <= r:
                raise ValueError(f"color {color} outside 1..{r}")
            if e in canon:
                raise ValueError(f"edge {e} colored twice")
            canon[e] = color
        if len(canon) != expected:
            raise ValueError(
                f"coloring must cover all {expected} edges of the complete hypergraph, got {len(canon)}"
            )
        self.k = k
        self.n = n
        self.r = r
        self._assignment = canon

    def color_of(self, edge: Sequence[int]) -> int:
        return self._assignment[tuple(sorted(edge))]

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(edge, color) pairs in lexicographic edge order."""
        for e in sorted(self._assignment):
            yield e, self._assignment[e]

    def color_class(self, color: int) -> Hypergraph:
        """The edges of one color, as a hypergraph on the same vertex range."""
        if not 1 <= color <= self.r:
            raise ValueError(f"color {color} outside 1..{self.r}")
        return Hypergraph(self.k, self.n, [e for e, c in self._assignment.items() if c == color])

    def class_sizes(self) -> dict[int, int]:
        sizes = {c: 0 for c in range(1, self.r + 1)}
        for c in self._assignment.values():
            sizes[c] += 1
        return sizes

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return (
            self.k == other.k
            and self.n == other.n
            and self.r == other.r
            and self._assignment == other._assignment
        )

    def __repr__(self) -> str:
        return f"Coloring(k={self.k}, n={self.n}, r={self.r})"


def find_mono_loose_path(coloring: Coloring, length: int) -> tuple[int, LoosePathWitness] | None:
    """First color class (ascending) containing a loose path of the given length."""
    for color in range(1, coloring.r + 1):
        witness = find_loose_path(coloring.color_class(color), length)
        if witness is not None:
            return color, witness
    return None


def parse_coloring(text: str) -> Coloring:
    """Parse the coloring file format.

    Line 1 is `k n m r` with m = C(n, k); then m lines `v1 .. vk c` covering
    every edge of the complete k-graph exactly once.
    """
    k = n = m = r = 0
    have_header = False
    assignment: dict[tuple[int, ...], int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not have_header:
            if len(fields) != 4:
                raise ParseError("header must be four integers 'k n m r'", lineno)
            try:
                k, n, m, r = (int(f) for f in fields)
            except ValueError:
                raise ParseError("header must be four integers 'k n m r'", lineno) from None
            if k < 2 or n < 0 or m < 0 or r < 1:
                raise ParseError(f"invalid header values k={k} n={n} m={m} r={r}", lineno)
            if m != comb(n, k):
                raise ParseError(f"m={m} does not equal C({n},{k})={comb(n, k)}", lineno)
            have_header = True
            continue
        if len(assignment) == m:
            raise ParseError(f"more edge lines than the declared m={m}", lineno)
        if len(fields) != k + 1:
            raise ParseError(f"expected {k} vertex ids and a color, got {len(fields)} fields", lineno)
        try:
            values = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError("vertex ids and colors must be integers", lineno) from None
        verts, color = values[:-1], values[-1]
        for v in verts:
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)
        e = tuple(sorted(verts))
        if len(set(e)) != k:
            raise ParseError(f"repeated vertex in edge {' '.join(fields[:-1])}", lineno)
        if not 1 <= color <= r:
            raise ParseError(f"color {color} outside 1..{r}", lineno)
        if e in assignment:
            raise ParseError(f"edge {' '.join(map(str, e))} colored twice", lineno)
        assignment[e] = color
    if not have_header:
        raise ParseError("missing header line 'k n m r'", max(last_line, 1))
    if len(assignment) != m:
        raise ParseError(f"expected {m} colored edges, found {len(assignment)}", max(last_line, 1))
    return Coloring(k, n, r, assignment)


def serialize_coloring(coloring: Coloring) -> str:
    """Canonical text form: header, then `v1 .. vk c` lines in edge order."""
    lines = [f"{coloring.k} {coloring.n} {comb(coloring.n, coloring.k)} {coloring.r}"]
    lines.extend(" ".join(map(str, e)) + f" {c}" for e, c in coloring.items())
    return "\n".join(lines) + "\n"
