"""Numerical shadows of affine Grassmannian geometry.

Everything here is a pairing or a lattice computation: orbit dimensions
``<mu, 2rho>``, Mirkovic-Vilonen intersection dimensions ``<rho, mu + lam>``,
the component group ``X^vee / ZR^vee`` and the shift by a coweight ``xi`` that
pairs to 1 with every simple root.

>>> from alcove_tilt.root_datum import build_root_datum
>>> rd = build_root_datum("A1-adjoint")
>>> orbit_dimension(rd, (2,)), mv_dimension(rd, (0,), (2,)), component_of(rd, (3,))
(2, 1, (1,))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import identity, matvec, smith_normal_form, transpose
from .errors import NoXi, NotDominant
from .root_datum import RootDatum, pair, vadd

__all__ = [
    "GrIndexData", "gr_index_data", "orbit_dimension", "mv_dimension", "component_of",
    "component_moduli", "weight_functor_degree", "xi", "xi_shift", "is_strictly_dominant",
]

# Search box for xi when the pairing has a radical (non-semisimple data).
XI_SEARCH_RADIUS = 4


@dataclass(frozen=True)
class GrIndexData:
    """Indexing data for connected components and the xi-shift.

    ``moduli[i]`` is the order of the i-th cyclic factor of ``X^vee / ZR^vee``
    (0 for a free factor); ``xi`` is ``None`` when no such coweight exists.
    """
    datum: RootDatum
    moduli: tuple[int, ...]
    xi: tuple[int, ...] | None

    def reduce(self, label) -> tuple[int, ...]:
        return tuple(x % m if m else x for x, m in zip(label, self.moduli))


def _check_dominant(rd, mu):
    mu = tuple(mu)
    if not rd.is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant")
    return mu


def _as_int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


def orbit_dimension(rd: RootDatum, mu) -> int:
    """``dim Gr^mu = <mu, 2rho>``."""
    mu = _check_dominant(rd, mu)
    return _as_int(pair(mu, rd.two_rho))


def mv_dimension(rd: RootDatum, lam, mu) -> int | None:
    """``<rho, mu + lam>`` if ``dom(lam) <= mu``, else ``None`` (empty intersection)."""
    mu = _check_dominant(rd, mu)
    lam = tuple(lam)
    if not rd.dominance_leq(rd.dom(lam), mu):
        return None
    return _as_int(pair(vadd(mu, lam), rd.rho))


def _snf(rd: RootDatum):
    cache = rd.__dict__.get("_component_snf")
    if cache is None:
        # columns are the simple coroots
        if rd.rank:
            d, u, _ = smith_normal_form(transpose([list(c) for c in rd.simple_coroots]))
        else:
            d, u = [[]] * rd.dim, identity(rd.dim)
        diag = [d[i][i] if i < rd.rank else 0 for i in range(rd.dim)]
        keep = [i for i, x in enumerate(diag) if x != 1]
        cache = (u, tuple(keep), tuple(diag[i] for i in keep))
        rd.__dict__["_component_snf"] = cache
    return cache


def component_moduli(rd: RootDatum) -> tuple[int, ...]:
    """Orders of the cyclic factors of ``X^vee / ZR^vee`` (0 means Z)."""
    return _snf(rd)[2]


def component_of(rd: RootDatum, lam) -> tuple[int, ...]:
    """Smith-normal-form coordinates of the class of ``lam`` in ``X^vee / ZR^vee``.

    Torsion coordinates are reduced into ``[0, d)``; trivial factors are dropped.
    """
    u, keep, moduli = _snf(rd)
    y = matvec(u, tuple(lam))
    return tuple(y[i] % m if m else y[i] for i, m in zip(keep, moduli))


def weight_functor_degree(rd: RootDatum, lam) -> int:
    """The only cohomological degree ``<lam, 2rho>`` where the weight functor can be nonzero."""
    return _as_int(pair(tuple(lam), rd.two_rho))


def _xi(rd: RootDatum):
    if "_xi" in rd.__dict__:
        return rd.__dict__["_xi"]
    if not rd.rank:
        rd.__dict__["_xi"] = (0,) * rd.dim
        return rd.__dict__["_xi"]
    a = [list(r) for r in rd.simple_roots]        # rank x dim
    target = (1,) * rd.rank
    d, u, v = smith_normal_form(a)                 # u a v = d
    rhs = matvec(u, target)
    r = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i])
    z = []
    ok = all(rhs[i] == 0 for i in range(r, rd.rank))
    for i in range(r):
        if rhs[i] % d[i][i]:
            ok = False
            break
        z.append(rhs[i] // d[i][i])
    result = None
    if ok:
        free = rd.dim - r
        base = z + [0] * free
        if free == 0:
            result = matvec(v, base)
        else:
            # solutions differ by the radical; take the lexicographically least
            # nonnegative one inside a bounded box, else the least overall
            cands = []
            span = range(-XI_SEARCH_RADIUS, XI_SEARCH_RADIUS + 1)
            for t in itertools.product(span, repeat=free):
                cands.append(matvec(v, z + list(t)))
            nonneg = [c for c in cands if all(x >= 0 for x in c)]
            result = min(nonneg) if nonneg else min(cands, key=lambda c: (sum(abs(x) for x in c), c))
    rd.__dict__["_xi"] = result
    return result


def xi(rd: RootDatum) -> tuple[int, ...]:
    """A coweight with ``<xi, alpha_i> = 1`` for every simple root; raises ``NoXi``."""
    x = _xi(rd)
    if x is None:
        raise NoXi(f"no coweight pairs to 1 with every simple root of {rd!r}")
    return x


def xi_shift(rd: RootDatum, lam) -> tuple[int, ...]:
    return vadd(tuple(lam), xi(rd))


def is_strictly_dominant(rd: RootDatum, lam) -> bool:
    return rd.is_strictly_dominant(tuple(lam))


def gr_index_data(rd: RootDatum) -> GrIndexData:
    return GrIndexData(rd, component_moduli(rd), _xi(rd))
