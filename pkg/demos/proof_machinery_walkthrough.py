#!/usr/bin/env python3
"""Exercise each constructive ingredient of the stability argument on small
inputs, ending with the exact inequality catalog at k = 250.
"""

from fractions import Fraction

from ramseylab import (
    BipartiteGraph,
    Hypergraph,
    derandomized_split,
    greedy_tripartition,
    link_support_lower_bound,
    peel_min_degree,
    prune_bipartite,
    stability_deficiency,
    star_deficiency_bound,
    verify_constant_inequalities,
)

print("=" * 70)
print("  DEGREE PEEL: threshold |E|/|V| fixed from the input")
print("=" * 70)
h = Hypergraph(2, 4, [(0, 1), (0, 2), (1, 2), (2, 3)])
peeled = peel_min_degree(h)
print(f"  triangle + pendant edge (threshold {Fraction(len(h), h.n)}):")
print(f"    kept {peeled.edges}; surviving degrees "
      f"{[peeled.degree(v) for v in peeled.support()]}")

print()
print("=" * 70)
print("  BIPARTITE PRUNE: floors |B|/(2|Vi|)")
print("=" * 70)
b = BipartiteGraph(["a", "b"], ["c", "d", "e", "f"],
                   [("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("b", "c")])
pruned = prune_bipartite(b)
print(f"  kept classes {pruned.left} / {pruned.right}, edges {sorted(pruned.edges)}")

print()
print("=" * 70)
print("  GREEDY TRIPARTITION: gap never exceeds the largest weight")
print("=" * 70)
weights = {v: Fraction(w) for v, w in enumerate([9, 7, 6, 5, 5, 3, 2, 1])}
tri = greedy_tripartition(weights)
print(f"  weights {sorted((int(w) for w in weights.values()), reverse=True)}")
print(f"  sums {tuple(str(s) for s in tri.sums)}, gap {tri.gap} <= max {max(weights.values())}")

print()
print("=" * 70)
print("  DERANDOMIZED SPLIT: conditional expectations, vertex by vertex")
print("=" * 70)
items = {(1, 2): 0, (3, 4): 0, (1, 5): 6, (2, 4): 6, (5, 7): 3}
split = derandomized_split(items, 8, 3)
print(f"  {len(items)} sets, expectation {split.expectation} ~ {float(split.expectation):.3f}")
print(f"  U1={split.u1} U2={split.u2} -> proper sets: {split.proper_count}")

print()
print("=" * 70)
print("  STABILITY PREDICATE AND ROOT ENCLOSURES")
print("=" * 70)
two_stars = Hypergraph(3, 9, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (7, 8, 1)])
report = stability_deficiency(two_stars)
print(f"  dominant vertex {report.vertex}, deficiency {report.deficiency}, "
      f"within (24/25)^k bound: {report.holds}")
iv = star_deficiency_bound(Fraction(9, 10) ** 4, 4, 30, Fraction(1, 10**9))
print(f"  deficiency coefficient bound, k=4, b=0.9^4, n=30:")
print(f"    [{float(iv.lo):.9f}, {float(iv.hi):.9f}] (width <= 1e-9)")
iv = link_support_lower_bound(1, 5, 101, Fraction(1, 10**6))
print(f"  dense sub-link support, k=5, b=1, n=101: in [{float(iv.lo):.6f}, {float(iv.hi):.6f}]")

print()
print("=" * 70)
print("  EXACT INEQUALITY CATALOG at k = 250, A = 250")
print("=" * 70)
report = verify_constant_inequalities(250, A=250, r_list=[1, 2, 10])
for rec in report.records:
    extras = " ".join(f"{key}={val}" for key, val in rec.params.items())
    flag = " [asymptotic]" if rec.asymptotic else ""
    print(f"  {'HOLDS ' if rec.holds else 'fails '} {rec.name} ({extras}){flag}")
