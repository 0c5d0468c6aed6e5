"""
Kazhdan-Lusztig and antispherical polynomials
=============================================

The Hecke algebra of an affine Weyl group, its self-dual basis, and the
alternating sums that feed the tilting character formula.
"""

from alcove_tilt import AffineWeylGroup, build_root_datum
from alcove_tilt.hecke import antispherical_poly, hecke_algebra, kl_element, kl_poly

# In finite A3 the first non-monomial polynomial appears.
g = AffineWeylGroup(build_root_datum("A3"))
y, w = g.from_word([1]), g.from_word([1, 0, 2, 1])
print("A3: h_{s2, s2 s1 s3 s2} =", kl_poly(g, y, w))

# Affine A1 is an infinite dihedral group: every h_{y,w} is a power of v.
a1 = AffineWeylGroup(build_root_datum("A1-adjoint"))
H = hecke_algebra(a1)
c = kl_element(a1, a1.from_word([1, 0, 1]))
print("C_{s0 s s0} =", c)
print("bar-invariant:", c.bar() == c)

# Antispherical polynomials live on elements that are minimal in their W-coset.
mins = [x for k in range(5) for x in a1.min_coset_elements_of_length(k)]
for x in mins:
    print(list(a1.word(x)), [str(antispherical_poly(a1, z, x)) for z in mins])

# The standard basis multiplies through the quadratic relation.
hs = H.H([0])
print("H_s * H_s =", hs * hs)
