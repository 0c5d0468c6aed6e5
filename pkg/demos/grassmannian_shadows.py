"""
Numerical shadows of the affine Grassmannian
============================================

Orbit dimensions, Mirkovic-Vilonen dimensions, connected components and the
coweight xi, all computed from pairings and integer linear algebra.
"""

from alcove_tilt import build_root_datum
from alcove_tilt.characters import costandard_character
from alcove_tilt.errors import NoXi
from alcove_tilt.satake_combinatorics import (
    component_moduli, component_of, mv_dimension, orbit_dimension, xi,
)

for name in ["A1-adjoint", "A1-sc", "A2", "B2", "G2", "A3"]:
    rd = build_root_datum(name)
    try:
        shift = xi(rd)
    except NoXi:
        shift = None
    print(f"{name}: components Z/{component_moduli(rd) or '1'}, xi = {shift}")

# For mu = (1, 1) in A2 the MV dimension is defined exactly on the weights of N(mu).
rd = build_root_datum("A2")
mu = (1, 1)
print("orbit dimension of", mu, "=", orbit_dimension(rd, mu))
for lam, mult in costandard_character(rd, mu).items():
    print("  weight", lam, "multiplicity", mult, "MV dimension", mv_dimension(rd, lam, mu),
          "component", component_of(rd, lam))
print("outside the support:", mv_dimension(rd, (3, 0), mu))
