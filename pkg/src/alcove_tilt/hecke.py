"""The Hecke algebra of an affine Weyl group and its Kazhdan-Lusztig basis.

Conventions: ``(H_s + v)(H_s - v^-1) = 0``, the bar involution sends ``v`` to
``v^-1`` and ``H_w`` to ``H_{w^-1}^-1``, and the Kazhdan-Lusztig element
``C_w = H_w + sum_{y < w} h_{y,w} H_y`` is bar-invariant with
``h_{y,w} in v Z[v]``.  In particular ``C_s = H_s + v``.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping

from .affine_weyl import AffineWeylElement, AffineWeylGroup
from .errors import NotMinimalInCoset
from .laurent import ONE, V, ZERO, LaurentPolynomial

__all__ = [
    "HeckeAlgebra", "HeckeElement", "KLTable",
    "hecke_algebra", "kl_table", "kl_element", "kl_poly", "antispherical_poly",
]

V_INV = V ** -1
# H_s^2 = 1 + (v^-1 - v) H_s
QUAD = V_INV - V


class HeckeElement:
    """A finite combination ``sum_w c_w H_w`` with Laurent polynomial coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeAlgebra, terms: Mapping[AffineWeylElement, LaurentPolynomial] = ()):
        self.algebra = algebra
        self.terms = {w: c for w, c in dict(terms).items() if c}

    def __getitem__(self, w: AffineWeylElement) -> LaurentPolynomial:
        return self.terms.get(w, ZERO)

    def __iter__(self):
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def _combine(self, other, sign):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, ZERO) + (c if sign > 0 else -c)
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return HeckeElement(self.algebra, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return HeckeElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> HeckeElement:
        return HeckeElement(self.algebra, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.mul(self, other)
        if isinstance(other, (int, LaurentPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def bar(self) -> HeckeElement:
        return self.algebra.bar(self)

    def sorted_items(self):
        key = self.algebra.group.sort_key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def __repr__(self):
        g = self.algebra.group
        parts = [f"({c})*H{list(g.word(w))}" for w, c in self.sorted_items()]
        return " + ".join(parts) if parts else "0"


class HeckeAlgebra:
    def __init__(self, group: AffineWeylGroup):
        self.group = group

    def H(self, w: AffineWeylElement | Iterable[int]) -> HeckeElement:
        if not isinstance(w, AffineWeylElement):
            w = self.group.from_word(w)
        return HeckeElement(self, {w: ONE})

    def one(self) -> HeckeElement:
        return self.H(self.group.identity)

    def element(self, terms) -> HeckeElement:
        return HeckeElement(self, terms)

    def right_mul_gen(self, a: HeckeElement, s: int) -> HeckeElement:
        """``a * H_s``."""
        g = self.group
        out: dict[AffineWeylElement, LaurentPolynomial] = {}
        for x, c in a.terms.items():
            xs = g.rmul_gen(x, s)
            out[xs] = out.get(xs, ZERO) + c
            if g.length(xs) < g.length(x):
                out[x] = out.get(x, ZERO) + c * QUAD
        return HeckeElement(self, out)

    def left_mul_gen(self, s: int, a: HeckeElement) -> HeckeElement:
        """``H_s * a``."""
        g = self.group
        out: dict[AffineWeylElement, LaurentPolynomial] = {}
        for x, c in a.terms.items():
            sx = g.lmul_gen(s, x)
            out[sx] = out.get(sx, ZERO) + c
            if g.length(sx) < g.length(x):
                out[x] = out.get(x, ZERO) + c * QUAD
        return HeckeElement(self, out)

    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        g = self.group
        total = HeckeElement(self)
        for y, c in b.terms.items():
            part = a
            for s in g.word(y):
                part = self.right_mul_gen(part, s)
            total = total + part.scale(c)
        return total

    def bar_H(self, w: AffineWeylElement) -> HeckeElement:
        """``bar(H_w) = bar(H_{s_1}) ... bar(H_{s_k})`` with ``bar(H_s) = H_s + v - v^-1``."""
        out = self.one()
        for s in self.group.word(w):
            out = self.right_mul_gen(out, s) + out.scale(-QUAD)
        return out

    def bar(self, a: HeckeElement) -> HeckeElement:
        total = HeckeElement(self)
        for w, c in a.terms.items():
            total = total + self.bar_H(w).scale(c.bar())
        return total


class KLTable:
    """Memoized Kazhdan-Lusztig elements ``C_w``.

    Each stored ``C_w`` is complete.  ``frontier`` is the largest ``L`` such
    that every element of length at most ``L`` has been computed; it only
    grows.  Writes are serialized by a lock; completed entries are never
    modified.
    """

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        self.algebra = hecke_algebra(group)
        self._C: dict[AffineWeylElement, dict[AffineWeylElement, LaurentPolynomial]] = {
            group.identity: {group.identity: ONE}}
        self._lock = threading.RLock()
        self._rows: dict = {}
        self.frontier = 0

    def __contains__(self, w):
        return w in self._C

    def entries(self):
        return self._C.items()

    def antispherical_row(self, w: AffineWeylElement) -> dict:
        """``y -> n_{y,w}`` for the minimal coset representatives ``y``, cached per ``w``."""
        row = self._rows.get(w)
        if row is None:
            row = self._rows[w] = antispherical_row(self.group, self.terms(w))
        return row

    def terms(self, w: AffineWeylElement) -> dict[AffineWeylElement, LaurentPolynomial]:
        c = self._C.get(w)
        if c is None:
            with self._lock:
                c = self._compute(w)
        return c

    def _compute(self, w):
        g = self.group
        # iterative over the prefix chain of the canonical word
        word = g.word(w)
        chain = [g.from_word(word[:k]) for k in range(len(word) + 1)]
        for k in range(1, len(chain)):
            x = chain[k]
            if x in self._C:
                continue
            u, s = chain[k - 1], word[k - 1]
            cu = HeckeElement(self.algebra, self._C[u])
            prod = self.algebra.right_mul_gen(cu, s) + cu.scale(V)
            for z, h in list(cu.terms.items()):
                if z == u:
                    continue
                mu = h[1]
                if mu and g.is_right_descent(z, s):
                    prod = prod - HeckeElement(self.algebra, self.terms(z)).scale(mu)
            self._C[x] = prod.terms
        return self._C[w]

    def element(self, w: AffineWeylElement) -> HeckeElement:
        return HeckeElement(self.algebra, self.terms(w))

    def poly(self, y: AffineWeylElement, w: AffineWeylElement) -> LaurentPolynomial:
        return self.terms(w).get(y, ZERO)

    def mu(self, y, w) -> int:
        return self.poly(y, w)[1]

    def extend_to(self, length: int) -> None:
        """Compute every ``C_w`` with ``l(w) <= length``."""
        with self._lock:
            for k in range(self.frontier + 1, length + 1):
                for w in self.group.elements_of_length(k):
                    self.terms(w)
                self.frontier = k

    def insert(self, w, terms) -> None:
        """Install a precomputed ``C_w`` (used by the disk cache)."""
        with self._lock:
            self._C.setdefault(w, dict(terms))


def hecke_algebra(group: AffineWeylGroup) -> HeckeAlgebra:
    alg = getattr(group, "_hecke", None)
    if alg is None:
        alg = group._hecke = HeckeAlgebra(group)
    return alg


def kl_table(group: AffineWeylGroup) -> KLTable:
    """The shared KL table of ``group`` (created on first use)."""
    with group._lock:
        t = getattr(group, "_kl", None)
        if t is None:
            t = group._kl = KLTable(group)
    return t


def kl_element(group: AffineWeylGroup, w: AffineWeylElement) -> HeckeElement:
    return kl_table(group).element(w)


def kl_poly(group: AffineWeylGroup, y: AffineWeylElement, w: AffineWeylElement) -> LaurentPolynomial:
    return kl_table(group).poly(y, w)


def check_min_in_coset(group: AffineWeylGroup, **named) -> None:
    for name, z in named.items():
        if not group.is_min_in_left_W_coset(z):
            raise NotMinimalInCoset(f"{name}={list(group.word(z))} is not minimal in its W-coset")


def antispherical_row(group: AffineWeylGroup, terms) -> dict:
    """``y -> sum_{x in W} (-1)^{l(x)} h_{x y, w}`` from the coefficients ``h_{z, w}``.

    Each ``z`` in the support is walked down to the minimal element ``y`` of
    ``W z``; the number of steps is ``l(x)``.  Zero entries are dropped.
    """
    out: dict = {}
    finite = group.finite_generators
    for z, h in terms.items():
        y, sign = z, 1
        while True:
            for i in finite:
                if group.is_left_descent(i, y):
                    y = group.lmul_gen(i, y)
                    sign = -sign
                    break
            else:
                break
        out[y] = out.get(y, ZERO) + (h if sign > 0 else -h)
    return {y: h for y, h in out.items() if h}


def antispherical_poly(group: AffineWeylGroup, y, w) -> LaurentPolynomial:
    """The ordinary antispherical polynomial ``n_{y,w}``."""
    check_min_in_coset(group, y=y, w=w)
    return kl_table(group).antispherical_row(w).get(y, ZERO)
