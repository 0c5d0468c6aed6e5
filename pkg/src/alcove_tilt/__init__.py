"""Exact combinatorics of tilting characters for reductive groups.

Root data and Weyl characters, the affine Weyl group with its p-dilated dot
action, Kazhdan-Lusztig and antispherical polynomials, p-canonical tables,
tilting multiplicities and a few numerical invariants of the affine
Grassmannian.
"""

from .affine_weyl import AffineWeylElement, AffineWeylGroup, Facet
from .characters import (
    Character, costandard_character, kostant_partition, standard_character, weyl_dimension,
)
from .errors import *  # noqa: F401,F403
from .hecke import HeckeAlgebra, HeckeElement, KLTable, antispherical_poly, kl_element, kl_poly, kl_table
from .laurent import LaurentPolynomial
from .pcanonical import PKLTable, ingest_pkl, p_antispherical, pkl, write_pkl
from .root_datum import PRESETS, RootDatum, WeylGroup, build_root_datum
from .satake_combinatorics import (
    component_of, mv_dimension, orbit_dimension, weight_functor_degree, xi, xi_shift,
)
from .tilting import (
    Block, MultiplicityRow, blocks, hom_dimension_tilting, lusztig_simple_character,
    multiplicity_row, tilting_character, tilting_multiplicity,
)

__version__ = "0.1.0"
