"""
Alcoves and linkage blocks in type A2
=====================================

Classify a few points of the plane by the facet of the p-dilated alcove
geometry that contains them, then group small dominant weights into blocks.
"""

from fractions import Fraction

from alcove_tilt import AffineWeylGroup, build_root_datum
from alcove_tilt.tilting import blocks

rd = build_root_datum("A2")
g = AffineWeylGroup(rd)
p = 5

# Coordinates are pairings with the simple roots, so (a, b) is dominant
# exactly when a, b >= 0.
for point in [(0, 0), (3, 0), (Fraction(1, 2), 1), (-1, -1), (4, 4)]:
    f = g.classify_facet(point, p)
    kind = "alcove" if f.is_alcove else ("wall" if f.is_wall else "smaller facet")
    print(point, "->", kind, "on", sorted(f.R0), "n =", f.n)

# Sending a weight back to the closed fundamental alcove names its block.
for mu in [(0, 0), (3, 3), (6, 0), (4, 1)]:
    lam, w = g.weight_to_block(mu, p)
    print(mu, "is", list(g.word(w)), ". ", lam)

# All dominant weights with <mu, 2 rho> <= 12, grouped by block.
for b in blocks(g, p, 12):
    print("block of", b.lam, ":", [list(m) for m in b.members])
