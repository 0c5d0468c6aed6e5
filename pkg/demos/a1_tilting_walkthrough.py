"""
Tilting characters for SL2 at p = 3
===================================

A walk through the smallest interesting case: the adjoint A1 datum, where
coweights are integers and the dot action of the affine Weyl group is a pair of
reflections of the line.
"""

from alcove_tilt import AffineWeylGroup, PKLTable, build_root_datum
from alcove_tilt.characters import costandard_character
from alcove_tilt.tilting import blocks, hom_dimension_tilting, multiplicity_row, tilting_character

rd = build_root_datum("A1-adjoint")
g = AffineWeylGroup(rd)
p = 3

# The closed fundamental alcove holds the integral points 0 <= lam + 1 <= p.
print("closed alcove:", g.alcove_weights(p))

# Every dominant weight is w . lam for one lam in the alcove and one w that is
# minimal in its W-coset; the weights sharing lam form a linkage block.
for b in blocks(g, p, 12):
    print("block of", b.lam, "->", [mu[0] for mu in b.members])

# With no p-canonical data at hand, the ordinary Kazhdan-Lusztig basis stands in
# for the p-canonical one.  Each tilting module has a Weyl filtration whose
# multiplicities are antispherical polynomials evaluated at v = 1.
table = PKLTable.fallback(g, p)
for mu in range(0, 10):
    row = multiplicity_row((mu,), table)
    print(f"T({mu}):", {nu[0]: m for nu, m in row.entries.items()},
          "word", list(g.word(row.w)))

# The character of T(4) is ch N(4) + ch N(0): dimension 5 + 1.
ch = tilting_character((4,), p, table)
print("ch T(4) =", ch.to_json(), "dimension", ch.dimension())
assert ch == costandard_character(rd, (4,)) + costandard_character(rd, (0,))

# Hom spaces between tiltings count common Weyl constituents.
print("dim Hom(T(4), T(4)) =", hom_dimension_tilting((4,), (4,), p, table))
print("dim Hom(T(4), T(6)) =", hom_dimension_tilting((4,), (6,), p, table))
