"""Constructive proof machinery: degree peeling, bipartite pruning, balanced
tripartition, and derandomized vertex splitting.

Every threshold comparison uses exact rationals; the guarantees here hinge on
strict inequalities that floating point would occasionally flip.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from .hypergraphs import Hypergraph


class BipartiteGraph:
    """Immutable bipartite graph with disjoint, individually sortable classes."""

    __slots__ = ("left", "right", "edges")

    def __init__(
        self,
        left: Iterable[Hashable],
        right: Iterable[Hashable],
        edges: Iterable[tuple[Hashable, Hashable]] = (),
    ):
        left_set = set(left)
        right_set = set(right)
        if left_set & right_set:
            raise ValueError("vertex classes must be disjoint")
        canon = set()
        for u, v in edges:
            if u not in left_set or v not in right_set:
                raise ValueError(f"edge ({u!r}, {v!r}) must go from the left class to the right class")
            canon.add((u, v))
        self.left = tuple(sorted(left_set))
        self.right = tuple(sorted(right_set))
        self.edges = frozenset(canon)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self.left == other.left and self.right == other.right and self.edges == other.edges

    def __repr__(self) -> str:
        return f"BipartiteGraph(|V1|={len(self.left)}, |V2|={len(self.right)}, m={len(self.edges)})"


@dataclass(frozen=True)
class Tripartition:
    """Three disjoint vertex groups with exact rational weight sums, ascending."""

    parts: tuple[tuple, tuple, tuple]
    sums: tuple[Fraction, Fraction, Fraction]

    @property
    def gap(self) -> Fraction:
        return self.sums[2] - self.sums[0]


@dataclass(frozen=True)
class SplitAssignment:
    """Deterministic bipartition with its proper count and the exact expectation."""

    u1: tuple[int, ...]
    u2: tuple[int, ...]
    proper_count: int
    expectation: Fraction


class StabilityReport(NamedTuple):
    vertex: int
    deficiency: Fraction
    holds: bool


def peel_min_degree(h: Hypergraph) -> Hypergraph:
    """Peel to a nonempty subhypergraph with every degree above |E|/|V|.

    The threshold is fixed from the input (|V| counts all n vertices,
    isolated ones included).  Vertices with current degree <= threshold are
    removed smallest-id first until none remain below it.  A charging
    argument rules out emptying: each edge is charged once, at its first
    removed vertex, for a total of |E|; were every vertex removed, the last
    removal would charge 0 < threshold, forcing the impossible strict bound
    |E| < |E|.  The empty outcome is still checked defensively.
    """
    if len(h) == 0:
        raise ValueError("peel needs at least one edge")
    if h.n == 0:
        raise ValueError("peel needs at least one vertex")
    threshold = Fraction(len(h), h.n)
    edges = set(h.edges)
    degree: Counter = Counter(v for e in edges for v in e)
    alive = set(range(h.n))
    while True:
        victim = None
        for v in sorted(alive):
            if degree[v] <= threshold:
                victim = v
                break
        if victim is None:
            break
        alive.discard(victim)
        for e in [e for e in edges if victim in e]:
            edges.discard(e)
            for u in e:
                degree[u] -= 1
    if not edges:
        raise RuntimeError("degree peel emptied the hypergraph; impossible for inputs with an edge")
    return Hypergraph(h.k, h.n, edges)


def prune_bipartite(b: BipartiteGraph) -> BipartiteGraph:
    """Prune to a nonempty subgraph meeting per-class degree floors.

    Both floors |B|/(2|Vi|) are fixed from the input.  Vertices with current
    degree strictly below their class floor are removed one at a time (left
    class first, smallest first).  Fewer than |B| edges can be lost this way,
    so the result is never empty; checked defensively.
    """
    if not b.edges:
        raise ValueError("pruning needs at least one edge")
    if not b.left or not b.right:
        raise ValueError("both vertex classes must be nonempty")
    floor_left = Fraction(len(b.edges), 2 * len(b.left))
    floor_right = Fraction(len(b.edges), 2 * len(b.right))
    left = set(b.left)
    right = set(b.right)
    edges = set(b.edges)
    degree: Counter = Counter()
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    while True:
        victim = None
        for u in sorted(left):
            if degree[u] < floor_left:
                victim = u
                break
        if victim is None:
            for v in sorted(right):
                if degree[v] < floor_right:
                    victim = v
                    break
        if victim is None:
            break
        left.discard(victim)
        right.discard(victim)
        for e in [e for e in edges if victim in e]:
            edges.discard(e)
            degree[e[0]] -= 1
            degree[e[1]] -= 1
    if not edges:
        raise RuntimeError("bipartite prune emptied the graph; the counting bound rules this out")
    survivors_left = {u for u, _ in edges}
    survivors_right = {v for _, v in edges}
    return BipartiteGraph(survivors_left, survivors_right, edges)


def greedy_tripartition(weights: Mapping[Hashable, Fraction | int | str]) -> Tripartition:
    """Split weighted vertices into three groups with nearly equal sums.

    Vertices are placed heaviest first (ties by vertex id) into the group
    with the current minimum sum (ties to the lowest group index).  The
    returned groups are ordered by ascending sum; the top-to-bottom gap never
    exceeds the largest single weight.
    """
    items = []
    for v, w in weights.items():
        wf = Fraction(w)
        if wf < 0:
            raise ValueError(f"weight of {v!r} is negative: {wf}")
        items.append((v, wf))
    items.sort(key=lambda vw: (-vw[1], vw[0]))
    sums = [Fraction(0)] * 3
    groups: list[list] = [[], [], []]
    for v, w in items:
        target = min(range(3), key=lambda i: sums[i])
        groups[target].append(v)
        sums[target] += w
    order = sorted(range(3), key=lambda i: (sums[i], i))
    return Tripartition(
        parts=tuple(tuple(sorted(groups[i])) for i in order),
        sums=tuple(sums[i] for i in order),
    )


def derandomized_split(
    assignments: Mapping[Sequence[int], int], n: int, k: int
) -> SplitAssignment:
    """Split [0, n) into (U1, U2) so the proper count reaches its expectation.

    Each item maps a (k-1)-set f to an apex vertex v_f outside f; f is proper
    when v_f lands in U1 and all of f lands in U2.  Under independent rounding
    (U1 with probability 1/k) the expected proper count is exactly
    |F| * (1/k) * ((k-1)/k)^(k-1).  The method of conditional expectations
    walks vertices in ascending order, placing each on the side whose exact
    conditional expectation is not smaller (ties to U2), so the final count
    can never drop below the initial expectation.
    """
    if k < 2:
        raise ValueError(f"uniformity must be at least 2, got {k}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    items: list[tuple[tuple[int, ...], int]] = []
    for f, v in assignments.items():
        ft = tuple(sorted(f))
        if len(ft) != k - 1 or len(set(ft)) != k - 1:
            raise ValueError(f"{tuple(f)} is not a set of {k - 1} distinct vertices")
        if any(not 0 <= u < n for u in ft) or not 0 <= v < n:
            raise ValueError(f"assignment ({ft}, {v}) has a vertex outside 0..{n - 1}")
        if v in ft:
            raise ValueError(f"apex {v} lies inside its own set {ft}")
        items.append((ft, v))

    p_u1 = Fraction(1, k)
    p_u2 = Fraction(k - 1, k)
    expectation = len(items) * p_u1 * p_u2 ** (k - 1)

    U1, U2 = 1, 2
    side: list[int | None] = [None] * n

    def conditional_expectation() -> Fraction:
        total = Fraction(0)
        for f, v in items:
            sv = side[v]
            if sv == U2:
                continue
            term = p_u1 if sv is None else Fraction(1)
            dead = False
            for u in f:
                su = side[u]
                if su == U1:
                    dead = True
                    break
                if su is None:
                    term *= p_u2
            if not dead:
                total += term
        return total

    for v in range(n):
        side[v] = U1
        gain_u1 = conditional_expectation()
        side[v] = U2
        gain_u2 = conditional_expectation()
        side[v] = U1 if gain_u1 > gain_u2 else U2

    u1 = tuple(v for v in range(n) if side[v] == U1)
    u2 = tuple(v for v in range(n) if side[v] == U2)
    proper = sum(
        1 for f, v in items if side[v] == U1 and all(side[u] == U2 for u in f)
    )
    return SplitAssignment(u1, u2, proper, expectation)


def stability_deficiency(h: Hypergraph) -> StabilityReport:
    """Deficiency of the dominant star and the (24/25)^k * C(n-1, k-1) test.

    Reports the max-degree vertex v, the edge count missed by its star
    (|H| - deg(v)), and whether that deficiency stays within the exact bound.
    The bound is asserted by theory only for loose-3-path-free hypergraphs
    with k >= 250 and huge n; here the predicate is simply evaluated.
    """
    if h.k < 2:
        raise ValueError(f"uniformity must be at least 2, got {h.k}")
    vertex, degree = h.max_degree()
    deficiency = Fraction(len(h) - degree)
    bound = Fraction(24, 25) ** h.k * comb(max(h.n - 1, 0), h.k - 1)
    return StabilityReport(vertex, deficiency, deficiency <= bound)
