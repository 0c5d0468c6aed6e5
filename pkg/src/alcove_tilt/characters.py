"""The character ring Z[X^vee] and Weyl characters.

Characters are finitely supported integer functions on coweights.  Weyl
(costandard) characters are computed with Kostant's alternating sum

    mult_lam(mu) = sum_{w in W} (-1)^{l(w)} P(w . lam - mu)

where ``P`` counts decompositions into positive coroots and ``.`` is the
unscaled dot action ``w(x + rho_vee) - rho_vee``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NotDominant
from .root_datum import RootDatum, pair, vadd, vsub

__all__ = [
    "Character", "char_add", "char_mul", "kostant_partition",
    "costandard_character", "standard_character", "weyl_dimension",
]


class Character:
    """An element of Z[X^vee]: ``{coweight: multiplicity}`` without zeros.

    >>> e = Character.monomial
    >>> (e((1,)) + e((-1,))) ** 2
    Character({(-2,): 1, (0,): 2, (2,): 1})
    """

    __slots__ = ("_m",)

    def __init__(self, mults: Mapping | Iterable = ()):
        items = mults.items() if isinstance(mults, Mapping) else mults
        m: dict[tuple[int, ...], int] = {}
        for mu, a in items:
            mu = tuple(mu)
            m[mu] = m.get(mu, 0) + a
        self._m = {mu: a for mu, a in m.items() if a}

    @classmethod
    def monomial(cls, mu, mult: int = 1) -> Character:
        return cls({tuple(mu): mult})

    def __getitem__(self, mu) -> int:
        return self._m.get(tuple(mu), 0)

    def __iter__(self):
        return iter(self._m)

    def __len__(self):
        return len(self._m)

    def items(self):
        return self._m.items()

    def support(self) -> frozenset:
        return frozenset(self._m)

    def dimension(self) -> int:
        """Total multiplicity mass (the value at the identity)."""
        return sum(self._m.values())

    def __add__(self, other: Character) -> Character:
        m = dict(self._m)
        for mu, a in other._m.items():
            m[mu] = m.get(mu, 0) + a
        return Character(m)

    def __sub__(self, other: Character) -> Character:
        return self + other.scale(-1)

    def scale(self, c: int) -> Character:
        return Character({mu: c * a for mu, a in self._m.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        m: dict[tuple[int, ...], int] = {}
        for mu, a in self._m.items():
            for nu, b in other._m.items():
                k = vadd(mu, nu)
                m[k] = m.get(k, 0) + a * b
        return Character(m)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Character:
        out = Character({(0,) * len(next(iter(self._m), ())): 1}) if self._m else Character()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def is_W_invariant(self, rd: RootDatum) -> bool:
        W = rd.weyl
        return all(self[W.act(w, mu)] == a for mu, a in self._m.items() for w in W.simple)

    def to_json(self) -> list:
        """Sorted list of ``[coweight, multiplicity]`` pairs."""
        return [[list(mu), self._m[mu]] for mu in sorted(self._m)]

    @classmethod
    def from_json(cls, data) -> Character:
        return cls((tuple(mu), a) for mu, a in data)

    def __repr__(self):
        return f"Character({dict(sorted(self._m.items()))})"


def char_add(a: Character, b: Character) -> Character:
    return a + b


def char_mul(a: Character, b: Character) -> Character:
    return a * b


@lru_cache(maxsize=None)
def _kostant_counter(rd: RootDatum):
    coeffs = rd.positive_coroot_coeffs

    @lru_cache(maxsize=None)
    def count(target: tuple[int, ...], k: int) -> int:
        if k < 0:
            return int(not any(target))
        beta = coeffs[k]
        total = 0
        t = target
        while all(x >= 0 for x in t):
            total += count(t, k - 1)
            t = tuple(x - b for x, b in zip(t, beta))
        return total

    return count


def kostant_partition(rd: RootDatum, nu) -> int:
    """Number of ways to write ``nu`` as a nonnegative integer combination of
    positive coroots."""
    c = rd.simple_coroot_coords(tuple(nu))
    if c is None or any(x.denominator != 1 or x < 0 for x in c):
        return 0
    return _kostant_counter(rd)(tuple(int(x) for x in c), len(rd.positive_coroots) - 1)


def _check_dominant(rd, lam):
    lam = tuple(lam)
    if not rd.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    return lam


@lru_cache(maxsize=4096)
def _costandard(rd: RootDatum, lam: tuple[int, ...]) -> Character:
    W = rd.weyl
    shifted = [(W.sign(w), W.dot(w, lam)) for w in W]
    # candidates: lam minus nonnegative simple-coroot combinations with dom(mu) <= lam
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for av in rd.simple_coroots:
                nu = vsub(mu, av)
                if nu not in seen and rd.dominance_leq(rd.dom(nu), lam):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    mults = {}
    for mu in seen:
        m = sum(sgn * kostant_partition(rd, vsub(x, mu)) for sgn, x in shifted)
        if m:
            mults[mu] = m
    return Character(mults)


def costandard_character(rd: RootDatum, lam) -> Character:
    """Character of the costandard module ``N(lam)`` (Weyl's character formula)."""
    return _costandard(rd, _check_dominant(rd, lam))


def standard_character(rd: RootDatum, lam) -> Character:
    """Character of ``M(lam) = N(-w0 lam)^*``: negate the weights of ``N(-w0 lam)``."""
    lam = _check_dominant(rd, lam)
    W = rd.weyl
    dual_hw = tuple(-x for x in W.act(W.longest, lam))
    ch = costandard_character(rd, dual_hw)
    return Character({tuple(-x for x in mu): a for mu, a in ch.items()})


def weyl_dimension(rd: RootDatum, lam) -> int:
    """``prod_{alpha > 0} <lam + rho_vee, alpha> / <rho_vee, alpha>``."""
    lam = _check_dominant(rd, lam)
    x = vadd(lam, rd.rho_vee)
    num = den = Fraction(1)
    for g in rd.positive_roots:
        num *= pair(x, g)
        den *= pair(rd.rho_vee, g)
    d = num / den
    if d.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {d}")
    return int(d)
