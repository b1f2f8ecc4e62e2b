#!/usr/bin/env python3
"""Walk through the lower-bound colorings and the closed-form bounds.

For r colors and uniformity k, the complete k-graph on r+3k-4 vertices is
colored by r-1 stars plus one small clique; every class avoids the loose
3-path, so the Ramsey number must exceed r+3k-4.
"""

from math import comb

from ramseylab import find_mono_loose_path, ramsey_bounds, star_clique_coloring

print("=" * 70)
print("  STAR + CLIQUE COLORINGS: every color class is loose-3-path-free")
print("=" * 70)

for k in (3, 4, 5):
    for r in (2, 4, 6):
        coloring = star_clique_coloring(k, r)
        sizes = coloring.class_sizes()
        mono = find_mono_loose_path(coloring, 3)
        status = "path-free" if mono is None else f"MONO PATH IN COLOR {mono[0]}"
        print(
            f"  k={k} r={r}: n={coloring.n}, classes "
            f"{sorted(sizes.values(), reverse=True)} (sum {sum(sizes.values())}"
            f" = C({coloring.n},{k}) = {comb(coloring.n, k)}) -> {status}"
        )

print()
print("=" * 70)
print("  CLOSED-FORM BOUNDS (upper bounds hold only for large r; see caveats)")
print("=" * 70)
print(f"  {'k':>4} {'r':>5} {'lower':>7} {'k*r':>7} {'250*r':>8}")
for k, r in [(3, 2), (3, 5), (3, 100), (5, 10), (250, 1), (250, 300)]:
    b = ramsey_bounds(k, r)
    print(f"  {k:>4} {r:>5} {b.lower:>7} {b.upper_kr:>7} {b.upper_250r:>8}")

b = ramsey_bounds(250, 1)
print()
print("  caveats at (k=250, r=1):")
for caveat in b.caveats:
    print(f"    - {caveat}")
