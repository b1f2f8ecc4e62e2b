"""Exact decision of small Ramsey instances, Turan maximization, CNF export.

The backtracking coloring engine and the independent exhaustive oracle must
agree on every instance the oracle can enumerate; both re-verify any witness
through the patterns module before returning it.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from .constructions import pair_cover
from .errors import InstanceTooLargeError
from .hypergraphs import Hypergraph, serialize_hypergraph
from .patterns import Coloring, find_loose_path, find_mono_loose_path, serialize_coloring

PATTERN_LOOSE_PATH_3 = "loose-path-3"
PATTERN_LOOSE_PATH_2 = "loose-path-2"

VERDICT_HOLDS = "holds"
VERDICT_FAILS = "fails"
VERDICT_UNKNOWN = "unknown"

STATUS_EXACT = "exact"
STATUS_LOWER_BOUND = "lower-bound-only"

EXHAUSTIVE_GUARD = 100_000_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    prunes: int
    seconds: float


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a Ramsey decision: holds / fails(witness) / unknown(budget)."""

    verdict: str
    witness: Coloring | None
    stats: SearchStats

    def to_json_obj(self) -> dict:
        # Wall time is deliberately left out so identical runs serialize
        # byte-identically; read it from stats.seconds instead.
        return {
            "verdict": self.verdict,
            "witness": serialize_coloring(self.witness) if self.witness else None,
            "stats": {"nodes": self.stats.nodes, "prunes": self.stats.prunes},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


@dataclass(frozen=True)
class TuranResult:
    """Largest pattern-free edge count found, with the extremal witness."""

    status: str
    max_edges: int
    extremal: Hypergraph
    stats: SearchStats

    def to_json_obj(self) -> dict:
        return {
            "status": self.status,
            "max_edges": self.max_edges,
            "extremal": serialize_hypergraph(self.extremal),
            "stats": {"nodes": self.stats.nodes, "prunes": self.stats.prunes},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _pattern_length(pattern: str) -> int:
    if pattern == PATTERN_LOOSE_PATH_3:
        return 3
    if pattern == PATTERN_LOOSE_PATH_2:
        return 2
    raise ValueError(f"unknown pattern {pattern!r}")


def enumerate_loose_paths(
    n: int, k: int, length: int
) -> list[tuple[tuple[int, ...], ...]]:
    """Every copy of the loose path pattern in the complete k-graph, once each.

    Copies are reversal-deduplicated (first edge below last edge) and listed
    in lexicographic order of their ordered edge tuples.
    """
    if n < 1 or k < 2:
        raise ValueError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    if length not in (2, 3):
        raise ValueError(f"length must be 2 or 3, got {length}")
    edges = list(itertools.combinations(range(n), k))
    index_tuples = _pattern_index_tuples(edges, n, length)
    return [tuple(edges[i] for i in tup) for tup in index_tuples]


def _pattern_index_tuples(
    edges: list[tuple[int, ...]], n: int, length: int
) -> list[tuple[int, ...]]:
    """Ordered index tuples of pattern copies, lex order, reversal-deduped."""
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        for v in e:
            inc[v].append(i)
    out: list[tuple[int, ...]] = []
    if length == 2:
        for i, e1 in enumerate(edges):
            s1 = set(e1)
            for j in sorted({j for v in e1 for j in inc[v] if j > i}):
                if len(s1.intersection(edges[j])) == 1:
                    out.append((i, j))
        return out
    for i, e1 in enumerate(edges):
        s1 = set(e1)
        for j in sorted({j for v in e1 for j in inc[v] if j != i}):
            e2 = edges[j]
            if len(s1.intersection(e2)) != 1:
                continue
            s2 = set(e2)
            for t in sorted({t for v in e2 for t in inc[v] if t > i and t != j}):
                e3 = edges[t]
                if len(s2.intersection(e3)) != 1:
                    continue
                if s1.intersection(e3):
                    continue
                out.append((i, j, t))
    return out


def _groups_by_last(
    edges: list[tuple[int, ...]], n: int, length: int
) -> list[list[tuple[int, ...]]]:
    """For each edge index, the other indexes of every pattern copy it closes.

    Indexing copies by their largest edge index lets the search engines test
    exactly the new copies created by each assignment.
    """
    by_last: list[list[tuple[int, ...]]] = [[] for _ in edges]
    seen: set[tuple[int, ...]] = set()
    for tup in _pattern_index_tuples(edges, n, length):
        key = tuple(sorted(tup))
        if key in seen:
            continue
        seen.add(key)
        by_last[key[-1]].append(key[:-1])
    return by_last


def _run_canonical_dfs(m, r, groups, budget, prefix=()):
    """Backtracking over edges in lex order with color-symmetry breaking.

    An edge may take color c only if colors 1..c-1 already appear earlier
    (so each color class pattern-freeness is tested once per color orbit).
    Returns (result, colors, nodes, prunes) where result is a verdict string
    and colors is the first completed assignment when the verdict is fails.
    """
    colors = [0] * m
    used = [0] * (m + 1)
    trial = [0] * m
    for i, c in enumerate(prefix):
        colors[i] = c
        used[i + 1] = c if c > used[i] else used[i]
    base = len(prefix)
    if base == m:
        return VERDICT_FAILS, list(colors), 0, 0
    d = base
    nodes = prunes = 0
    while True:
        limit = used[d] + 1
        if limit > r:
            limit = r
        c = trial[d] + 1
        if c > limit:
            trial[d] = 0
            d -= 1
            if d < base:
                return VERDICT_HOLDS, None, nodes, prunes
            colors[d] = 0
            continue
        trial[d] = c
        nodes += 1
        if budget and nodes > budget:
            return VERDICT_UNKNOWN, None, nodes, prunes
        conflict = False
        for others in groups[d]:
            for j in others:
                if colors[j] != c:
                    break
            else:
                conflict = True
                break
        if conflict:
            prunes += 1
            continue
        colors[d] = c
        used[d + 1] = c if c > used[d] else used[d]
        d += 1
        if d == m:
            return VERDICT_FAILS, list(colors), nodes, prunes


def _canonical_prefixes(m, r, groups, depth):
    """All conflict-free canonical colorings of the first `depth` edges."""
    prefixes: list[tuple[int, ...]] = []
    colors = [0] * depth

    def rec(d, used):
        if d == depth:
            prefixes.append(tuple(colors))
            return
        for c in range(1, min(r, used + 1) + 1):
            ok = True
            for others in groups[d]:
                if all(j < d and colors[j] == c for j in others):
                    ok = False
                    break
            if not ok:
                continue
            colors[d] = c
            rec(d + 1, max(used, c))
            colors[d] = 0

    rec(0, 0)
    return prefixes


def decide_ramsey(k: int, r: int, n: int, budget: int = 0, threads: int = 1) -> SearchOutcome:
    """Decide whether every r-coloring of K^(k)_n has a monochromatic loose 3-path.

    Backtracks over edges in lexicographic order with color-symmetry breaking
    and incremental path checks (only the copies closed by each new edge).
    `budget` caps the number of attempted assignments (0 = unlimited);
    exhausting it yields the verdict "unknown".  With threads > 1 and no
    budget, the tree is partitioned by canonical color prefixes and subtree
    results are merged in prefix order, so verdict and witness match the
    single-threaded run.
    """
    if k < 2 or r < 1 or n < k:
        raise ValueError(f"need k >= 2, r >= 1, n >= k; got k={k}, r={r}, n={n}")
    if budget < 0 or threads < 1:
        raise ValueError(f"budget and threads must be nonnegative/positive")
    start = time.perf_counter()
    edges = list(itertools.combinations(range(n), k))
    m = len(edges)
    groups = _groups_by_last(edges, n, 3)

    if threads > 1 and budget == 0:
        depth = 1
        prefixes = _canonical_prefixes(m, r, groups, depth)
        while depth < min(m, 10) and len(prefixes) < 2 * threads:
            depth += 1
            prefixes = _canonical_prefixes(m, r, groups, depth)
        nodes = prunes = 0
        outcome = None
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_run_canonical_dfs, m, r, groups, 0, prefix)
                for prefix in prefixes
            ]
            for future in futures:
                result, colors, sub_nodes, sub_prunes = future.result()
                nodes += sub_nodes
                prunes += sub_prunes
                if result == VERDICT_FAILS and outcome is None:
                    outcome = colors
        verdict = VERDICT_FAILS if outcome is not None else VERDICT_HOLDS
        colors = outcome
    else:
        verdict, colors, nodes, prunes = _run_canonical_dfs(m, r, groups, budget)

    witness = None
    if verdict == VERDICT_FAILS:
        witness = Coloring(k, n, r, {e: c for e, c in zip(edges, colors)})
        if find_mono_loose_path(witness, 3) is not None:
            raise RuntimeError("search produced an invalid witness coloring")
    stats = SearchStats(nodes, prunes, time.perf_counter() - start)
    return SearchOutcome(verdict, witness, stats)


def _color_columns(base: int, count: int, m: int, r: int) -> np.ndarray:
    """Colorings base..base+count-1 as an (m, count) array of 0-based colors.

    Enumeration order is lexicographic with the first edge most significant,
    matching ascending mixed-radix integers.
    """
    idx = np.arange(base, base + count, dtype=np.int64)
    cols = np.empty((m, count), dtype=np.uint8)
    for j in range(m):
        power = r ** (m - 1 - j)
        cols[j] = (idx // power) % r
    return cols


def exhaustive_decide(k: int, r: int, n: int) -> SearchOutcome:
    """Unpruned oracle: enumerate all r^C(n,k) colorings and test each one.

    Refuses instances with more than 10^8 colorings.  Kept deliberately
    independent of the backtracking engine so the two can cross-check.
    """
    if k < 2 or r < 1 or n < k:
        raise ValueError(f"need k >= 2, r >= 1, n >= k; got k={k}, r={r}, n={n}")
    m = comb(n, k)
    total = r**m
    if total > EXHAUSTIVE_GUARD:
        raise InstanceTooLargeError(
            f"r^C(n,k) = {total} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}"
        )
    start = time.perf_counter()
    edges = list(itertools.combinations(range(n), k))
    triples = [tuple(sorted(t)) for t in _pattern_index_tuples(edges, n, 3)]

    witness_colors = None
    examined = 0
    if r == 1:
        examined = 1
        if not triples:
            witness_colors = [1] * m
    else:
        base = 0
        while base < total:
            count = int(min(_CHUNK, total - base))
            cols = _color_columns(base, count, m, r)
            bad = np.zeros(count, dtype=bool)
            for a, b, c in triples:
                bad |= (cols[a] == cols[b]) & (cols[b] == cols[c])
            good = ~bad
            if good.any():
                pos = int(np.argmax(good))
                witness_colors = [int(v) + 1 for v in cols[:, pos]]
                examined = base + pos + 1
                break
            base += count
        else:
            examined = total

    witness = None
    if witness_colors is not None:
        witness = Coloring(k, n, r, {e: c for e, c in zip(edges, witness_colors)})
        if find_mono_loose_path(witness, 3) is not None:
            raise RuntimeError("exhaustive enumeration produced an invalid witness")
        verdict = VERDICT_FAILS
    else:
        verdict = VERDICT_HOLDS
    stats = SearchStats(examined, 0, time.perf_counter() - start)
    return SearchOutcome(verdict, witness, stats)


def _turan_seed(k: int, n: int, pattern: str, edges: list[tuple[int, ...]]) -> list[int]:
    """Indexes of a known pattern-free hypergraph to prime the search bound."""
    index = {e: i for i, e in enumerate(edges)}
    if pattern == PATTERN_LOOSE_PATH_3:
        seed = [i for i, e in enumerate(edges) if 0 in e]
    elif k >= 3:
        seed = sorted(index[e] for e in pair_cover(n, k).edges)
    else:
        seed = [index[(v, v + 1)] for v in range(0, n - 1, 2)]
    return seed


def turan_max_edges(k: int, n: int, pattern: str, budget: int = 0) -> TuranResult:
    """Largest number of edges of an n-vertex k-graph avoiding the pattern.

    Branch and bound over edge inclusion in lexicographic order, bounded by
    edges-remaining and primed with a known pattern-free construction.  The
    status is `exact` once the tree is exhausted; a spent budget downgrades
    it to `lower-bound-only` with the best witness found.
    """
    length = _pattern_length(pattern)
    if k < 2 or n < k:
        raise ValueError(f"need k >= 2 and n >= k, got k={k}, n={n}")
    if budget < 0:
        raise ValueError(f"budget must be nonnegative, got {budget}")
    start = time.perf_counter()
    edges = list(itertools.combinations(range(n), k))
    m = len(edges)
    groups = _groups_by_last(edges, n, length)

    seed = _turan_seed(k, n, pattern, edges)
    best_count = len(seed)
    best_sel = list(seed)
    selected = [False] * m
    nodes = prunes = 0
    aborted = False

    def rec(i: int, count: int):
        nonlocal best_count, best_sel, nodes, prunes, aborted
        if aborted:
            return
        nodes += 1
        if budget and nodes > budget:
            aborted = True
            return
        if count + (m - i) <= best_count:
            prunes += 1
            return
        if i == m:
            best_count = count
            best_sel = [j for j in range(m) if selected[j]]
            return
        closes_pattern = any(
            all(selected[j] for j in others) for others in groups[i]
        )
        if not closes_pattern:
            selected[i] = True
            rec(i + 1, count + 1)
            selected[i] = False
        rec(i + 1, count)

    rec(0, 0)
    extremal = Hypergraph(k, n, [edges[i] for i in best_sel])
    if find_loose_path(extremal, length) is not None:
        raise RuntimeError("search produced an extremal witness containing the pattern")
    status = STATUS_LOWER_BOUND if aborted else STATUS_EXACT
    stats = SearchStats(nodes, prunes, time.perf_counter() - start)
    return TuranResult(status, best_count, extremal, stats)


@dataclass(frozen=True)
class CnfInstance:
    """Propositional encoding of "some r-coloring avoids monochromatic paths".

    Variables x_(e,c) say edge e has color c.  Clauses: at least one color
    per edge, plus one all-negative clause per (path copy, color).  At most
    one color per edge is intentionally omitted: any satisfying assignment
    projects to a coloring by keeping each edge's smallest true color, and
    the projection cannot violate a negative clause.
    """

    k: int
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    clauses: tuple[tuple[int, ...], ...]
    path_count: int

    @property
    def num_vars(self) -> int:
        return len(self.edges) * self.r

    def variable(self, edge: tuple[int, ...], color: int) -> int:
        i = self.edges.index(tuple(sorted(edge)))
        if not 1 <= color <= self.r:
            raise ValueError(f"color {color} outside 1..{self.r}")
        return i * self.r + color

    def variable_info(self, var: int) -> tuple[tuple[int, ...], int]:
        """(edge, color) encoded by a DIMACS variable index."""
        if not 1 <= var <= self.num_vars:
            raise ValueError(f"variable {var} outside 1..{self.num_vars}")
        i, c = divmod(var - 1, self.r)
        return self.edges[i], c + 1

    def to_dimacs(self) -> str:
        lines = [f"c loose-3-path ramsey coloring instance k={self.k} n={self.n} r={self.r}"]
        for i, e in enumerate(self.edges):
            for c in range(1, self.r + 1):
                lines.append(f"c var {i * self.r + c} = edge {' '.join(map(str, e))} color {c}")
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for clause in self.clauses:
            lines.append(" ".join(map(str, clause)) + " 0")
        return "\n".join(lines) + "\n"


def export_cnf(k: int, r: int, n: int) -> CnfInstance:
    """Build the CNF whose satisfiability means n is below the Ramsey number."""
    if k < 2 or r < 1 or n < k:
        raise ValueError(f"need k >= 2, r >= 1, n >= k; got k={k}, r={r}, n={n}")
    edges = tuple(itertools.combinations(range(n), k))
    triples = [tuple(sorted(t)) for t in _pattern_index_tuples(list(edges), n, 3)]
    clauses: list[tuple[int, ...]] = []
    for i in range(len(edges)):
        clauses.append(tuple(i * r + c for c in range(1, r + 1)))
    for a, b, t in triples:
        for c in range(1, r + 1):
            clauses.append((-(a * r + c), -(b * r + c), -(t * r + c)))
    return CnfInstance(k, n, r, edges, tuple(clauses), len(triples))


def cnf_satisfiable(instance: CnfInstance) -> bool:
    """Decide satisfiability by enumerating colorings and evaluating clauses.

    Only one-hot assignments (exactly the r^m edge colorings) need checking:
    the at-least-one clauses make every satisfying assignment project onto a
    coloring whose induced one-hot assignment still satisfies every clause.
    Refuses instances with more than 10^8 colorings.
    """
    m = len(instance.edges)
    r = instance.r
    total = r**m
    if total > EXHAUSTIVE_GUARD:
        raise InstanceTooLargeError(
            f"r^m = {total} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}"
        )
    # All-negative clauses reject colorings fastest, so evaluate them first.
    ordered = sorted(instance.clauses, key=lambda cl: any(lit > 0 for lit in cl))
    info = {}
    edge_index = {e: i for i, e in enumerate(instance.edges)}
    for var in range(1, instance.num_vars + 1):
        edge, color = instance.variable_info(var)
        info[var] = (edge_index[edge], color)
    base = 0
    while base < total:
        count = int(min(_CHUNK, total - base))
        cols = _color_columns(base, count, m, r)
        alive = np.ones(count, dtype=bool)
        for clause in ordered:
            sat = np.zeros(count, dtype=bool)
            for lit in clause:
                e, c = info[abs(lit)]
                if lit > 0:
                    sat |= cols[e] == c - 1
                else:
                    sat |= cols[e] != c - 1
            alive &= sat
            if not alive.any():
                break
        if alive.any():
            return True
        base += count
    return False
