"""Linkage blocks, tilting multiplicities and tilting characters.

For ``lam`` in the closed fundamental alcove and ``w, y`` in the parametrizing
set ``W_aff^(lam)``,

    (T(w . lam) : N(y . lam)) = pn_{y,w}(1),

so the character of ``T(w . lam)`` is the sum of Weyl characters weighted by
antispherical p-KL polynomials evaluated at ``v = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .affine_weyl import AffineWeylElement, AffineWeylGroup
from .characters import Character, costandard_character
from .errors import NotMinimalInCoset, PTooSmall
from .hecke import kl_table
from .pcanonical import PKLTable
from .root_datum import pair, vadd

__all__ = [
    "Block", "MultiplicityRow", "LusztigCharacter", "blocks", "multiplicity_row",
    "tilting_multiplicity", "tilting_character", "hom_dimension_tilting",
    "lusztig_simple_character", "lower_parametrizing",
]


@dataclass(frozen=True)
class Block:
    """Dominant weights linked to ``lam`` under the p-dilated dot action."""
    lam: tuple[int, ...]
    p: int
    members: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "p": self.p, "members": [list(m) for m in self.members]}


@dataclass(frozen=True)
class MultiplicityRow:
    """``(T(target) : N(nu))`` for the nonzero constituents ``nu``.

    ``entries`` is ordered by the parametrizing element of ``nu`` (length, then
    canonical word), highest constituent last.
    """
    target: tuple[int, ...]
    lam: tuple[int, ...]
    w: AffineWeylElement
    entries: dict = field(compare=False)

    def __getitem__(self, nu) -> int:
        return self.entries.get(tuple(nu), 0)

    def to_json(self, group: AffineWeylGroup) -> dict:
        return {"mu": list(self.target), "lambda": list(self.lam), "w": list(group.word(self.w)),
                "row": [[list(nu), m] for nu, m in self.entries.items()]}


@dataclass(frozen=True)
class LusztigCharacter:
    """Output of Lusztig's conjectural formula; ``in_regime`` records whether the
    weight satisfies the bound under which the formula is known to hold for large p."""
    character: Character
    in_regime: bool
    terms: dict = field(compare=False)
    conjectural: bool = True


def _check_table(table: PKLTable, p: int):
    if table.p != p:
        raise ValueError(f"table is for p={table.p}, not p={p}")


def blocks(group: AffineWeylGroup, p: int, bound: int) -> list[Block]:
    """Partition the dominant ``mu`` with ``<mu, 2rho> <= bound`` into linkage classes."""
    by_lam: dict[tuple[int, ...], list] = {}
    for mu in group.rd.dominant_weights(bound):
        lam, _ = group.weight_to_block(mu, p)
        by_lam.setdefault(lam, []).append(mu)
    out = [Block(lam, p, tuple(ms)) for lam, ms in by_lam.items()]
    key = group.rd.two_rho
    return sorted(out, key=lambda b: (pair(b.members[0], key), b.members[0]))


def lower_parametrizing(group: AffineWeylGroup, lam, w: AffineWeylElement, p: int) -> list:
    """Elements ``y <= w`` of ``W_aff^(lam)``, sorted by length then canonical word."""
    stab = group.stabilizer_generators(lam, p)
    ys = [y for y in group.lower_interval(w)
          if group.is_min_in_left_W_coset(y) and all(group.is_right_descent(y, i) for i in stab)]
    return sorted(ys, key=group.sort_key)


def multiplicity_row(mu, table: PKLTable) -> MultiplicityRow:
    group, p = table.group, table.p
    lam, w = group.weight_to_block(mu, p)
    entries = {}
    for y in lower_parametrizing(group, lam, w, p):
        m = table.antispherical(y, w)(1)
        if m:
            entries[group.dot(y, lam, p)] = m
    return MultiplicityRow(tuple(mu), lam, w, entries)


def tilting_multiplicity(mu, nu, p: int, table: PKLTable) -> int:
    """``(T(mu) : N(nu))``; zero across blocks."""
    _check_table(table, p)
    group = table.group
    lam, w = group.weight_to_block(mu, p)
    lam2, y = group.weight_to_block(nu, p)
    if lam != lam2 or not group.bruhat_leq(y, w):
        return 0
    return table.antispherical(y, w)(1)


def tilting_character(mu, p: int, table: PKLTable) -> Character:
    _check_table(table, p)
    row = multiplicity_row(mu, table)
    rd = table.group.rd
    total = Character()
    for nu, m in row.entries.items():
        total = total + costandard_character(rd, nu).scale(m)
    return total


def hom_dimension_tilting(mu, mu2, p: int, table: PKLTable) -> int:
    """``dim Hom(T(mu), T(mu2)) = sum_z pn_{z,y}(1) pn_{z,w}(1)`` over the block."""
    _check_table(table, p)
    group = table.group
    lam, w = group.weight_to_block(mu, p)
    lam2, y = group.weight_to_block(mu2, p)
    if lam != lam2:
        return 0
    common = group.lower_interval(w) & group.lower_interval(y)
    stab = group.stabilizer_generators(lam, p)
    total = 0
    for z in common:
        if group.is_min_in_left_W_coset(z) and all(group.is_right_descent(z, i) for i in stab):
            total += table.antispherical(z, y)(1) * table.antispherical(z, w)(1)
    return total


def lusztig_simple_character(group: AffineWeylGroup, w: AffineWeylElement, p: int) -> LusztigCharacter:
    """``sum_y (-1)^{l(w)+l(y)} h_{w0 y, w0 w}(1) ch N(y . 0)`` over ``y`` in ``W_aff^(0)``.

    Always uses ordinary KL polynomials.
    """
    rd = group.rd
    h = rd.coxeter_number()
    if p < h:
        raise PTooSmall(f"p={p} is smaller than the Coxeter number {h}")
    if not group.is_min_in_left_W_coset(w):
        raise NotMinimalInCoset(f"w={list(group.word(w))} is not minimal in its W-coset")
    zero = (0,) * rd.dim
    w0 = group.from_finite(group.W.longest)
    table = kl_table(group)
    top = group.mul(w0, w)
    lw = group.length(w)
    total = Character()
    terms = {}
    for y in sorted(group.lower_interval(w), key=group.sort_key):
        if not group.is_min_in_left_W_coset(y):
            continue
        c = table.poly(group.mul(w0, y), top)(1)
        if not c:
            continue
        c *= -1 if (lw + group.length(y)) % 2 else 1
        nu = group.dot(y, zero, p)
        terms[nu] = c
        total = total + costandard_character(rd, nu).scale(c)
    x = vadd(group.dot(w, zero, p), rd.rho_vee)
    bound = p * (p - h + 2)
    in_regime = all(pair(x, g) <= bound for g in rd.positive_roots)
    return LusztigCharacter(total, in_regime, terms)
