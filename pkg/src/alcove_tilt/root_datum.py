"""Based root data, the finite Weyl group and dominance order.

Weights live in ``X = Z^d`` and coweights in ``X^vee = Z^d``; the pairing is the
coordinatewise dot product.  Coweights are plain tuples of ints (or of
``Fraction`` for points of ``X^vee (x) Q``).

>>> rd = build_root_datum("A2")
>>> len(rd.positive_roots), rd.weyl.order, rd.weyl.length(rd.weyl.longest)
(3, 6, 3)
>>> rd.dom((-1, 0))
(0, 1)
"""

from __future__ import annotations

import json
import math
import threading
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _linalg
from .errors import BadPairing, NotFiniteType, RootDatumError

__all__ = [
    "RootDatum", "WeylGroup", "build_root_datum", "cartan_matrix", "PRESETS",
    "pair", "vadd", "vsub", "vscale",
]

# closure bound for the root system; E8 has 240 roots
MAX_ROOTS = 2000


def pair(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def _integral(v):
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"{v} is not integral")
        out.append(int(x))
    return tuple(out)


def cartan_matrix(letter: str, n: int) -> list[list[int]]:
    """Cartan matrix ``A[i][j] = <alpha_i^vee, alpha_j>`` in Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    letter = letter.upper()
    if letter == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif letter in ("B", "C"):
        if n < 2:
            raise ValueError(f"{letter}{n} is not a valid type")
        for i in range(n - 2):
            link(i, i + 1)
        # in B_n the last simple root is short
        if letter == "B":
            link(n - 2, n - 1, -1, -2)
        else:
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        if n < 3:
            raise ValueError(f"D{n} is not a valid type")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise ValueError(f"E{n} is not a valid type")
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        if n != 4:
            raise ValueError("F4 is the only type F")
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        if n != 2:
            raise ValueError("G2 is the only type G")
        link(0, 1, -1, -3)
    else:
        raise ValueError(f"unknown Cartan type {letter}{n}")
    return a


def _adjoint_preset(letter, n):
    # X = root lattice, simple roots = standard basis, coroots = rows of A
    a = cartan_matrix(letter, n)
    roots = [[int(i == j) for j in range(n)] for i in range(n)]
    return roots, [list(row) for row in a]


PRESETS: dict[str, tuple[list[list[int]], list[list[int]]]] = {
    "A1-adjoint": ([[1]], [[2]]),
    "A1-sc": ([[2]], [[1]]),
    "A2": _adjoint_preset("A", 2),
    "A3": _adjoint_preset("A", 3),
    "B2": _adjoint_preset("B", 2),
    "G2": _adjoint_preset("G", 2),
    # larger types; their Weyl groups are only ever explored lazily
    "B3": _adjoint_preset("B", 3),
    "C3": _adjoint_preset("C", 3),
    "D4": _adjoint_preset("D", 4),
    "F4": _adjoint_preset("F", 4),
    "E6": _adjoint_preset("E", 6),
    "E7": _adjoint_preset("E", 7),
    "E8": _adjoint_preset("E", 8),
}

_BAD_PRIMES = {
    "A": frozenset(),
    "B": frozenset({2}), "C": frozenset({2}), "D": frozenset({2}),
    "E6": frozenset({2, 3}), "E7": frozenset({2, 3}), "F": frozenset({2, 3}),
    "G": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
}


_WEYL_GROUPS: dict[str, "WeylGroup"] = {}
_WEYL_LOCK = threading.Lock()


class _LazyTable:
    """Per-element data computed on first access and then kept."""

    def __init__(self, compute):
        self._compute = compute
        self._values: dict[int, object] = {}

    def __getitem__(self, w: int):
        try:
            return self._values[w]
        except KeyError:
            v = self._values[w] = self._compute(w)
            return v


class WeylGroup:
    """The finite Weyl group, generated lazily.

    Elements are integer handles into ``self.mats`` (the matrix acting on
    coweights); handle 0 is the identity.  A new handle is assigned the first
    time a product produces a new matrix, so large groups such as ``E8`` are
    only ever touched where a computation needs them.  ``words[w]`` is the
    lexicographically least reduced word, ``neg_roots[w]`` the set of positive
    roots made negative by ``w``.  Iterating over the group enumerates it in
    full, which is only sensible for small ranks.
    """

    def __init__(self, rd: RootDatum):
        self.rd = rd
        d = rd.dim
        self._lock = threading.RLock()
        self.simple_mats = []
        for a, av in zip(rd.simple_roots, rd.simple_coroots):
            self.simple_mats.append(tuple(
                tuple(int(i == j) - av[i] * a[j] for j in range(d)) for i in range(d)))
        ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        self.mats: list = []
        self.index: dict = {}
        self._intern(ident)
        self.simple = [self._intern(m) for m in self.simple_mats]
        self._mul: dict[tuple[int, int], int] = {}
        self.neg_roots = _LazyTable(self._neg_roots)
        self.inv = _LazyTable(self._inverse)
        self.words = _LazyTable(self._word)
        self.rho_shift = _LazyTable(
            lambda w: _integral(vsub(self.act(w, rd.rho_vee), rd.rho_vee)))
        self._all: list[int] | None = None

    def _intern(self, m) -> int:
        with self._lock:
            r = self.index.get(m)
            if r is None:
                r = self.index[m] = len(self.mats)
                self.mats.append(m)
            return r

    def _inverse(self, w: int) -> int:
        m = _linalg.inverse(self.mats[w])
        return self._intern(tuple(tuple(int(x) for x in row) for row in m))

    def _neg_roots(self, w: int) -> frozenset:
        winv_x = self.act(self.inv[w], self.rd.two_rho_vee)
        return frozenset(k for k, g in enumerate(self.rd.positive_roots) if pair(winv_x, g) < 0)

    def _word(self, w: int) -> tuple[int, ...]:
        # the least left descent starts the lexicographically least reduced word
        out = []
        while w:
            i = min(self.left_descents(w))
            out.append(i)
            w = self.mul(self.simple[i], w)
        return tuple(out)

    def left_descents(self, w: int) -> list[int]:
        neg = self.neg_roots[self.inv[w]]
        return [i for i, k in enumerate(self.rd.simple_root_positions) if k in neg]

    @cached_property
    def longest(self) -> int:
        w = 0
        while True:
            desc = set(self.left_descents(w))
            up = [i for i in range(self.rd.rank) if i not in desc]
            if not up:
                return w
            w = self.mul(self.simple[up[0]], w)

    @cached_property
    def order(self) -> int:
        # |W| = n! * (product of highest-root marks) * det(Cartan), per component
        total = 1
        rd = self.rd
        for comp, top in zip(rd.components, rd.highest_roots):
            n = len(comp)
            marks = rd.positive_root_coeffs[top]
            sub = [[rd.cartan[i][j] for j in comp] for i in comp]
            d, _, _ = _linalg.smith_normal_form(sub)
            det = 1
            for i in range(n):
                det *= d[i][i]
            total *= math.factorial(n) * math.prod(marks[i] for i in comp) * abs(det)
        return total

    def length(self, w: int) -> int:
        return len(self.neg_roots[w])

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            m = tuple(map(tuple, _linalg.matmul(self.mats[a], self.mats[b])))
            r = self._mul[key] = self._intern(m)
        return r

    def from_word(self, word: Iterable[int]) -> int:
        w = 0
        for i in word:
            w = self.mul(w, self.simple[i])
        return w

    def act(self, w: int, v):
        return _linalg.matvec(self.mats[w], v)

    def dot(self, w: int, v):
        """``w(v + rho_vee) - rho_vee`` (unscaled dot action)."""
        return vadd(self.act(w, v), self.rho_shift[w])

    def sign(self, w: int) -> int:
        return -1 if self.length(w) % 2 else 1

    def elements(self) -> list[int]:
        """All elements, ordered by length then canonical word."""
        if self._all is None:
            seen = {0}
            level = [0]
            while level:
                nxt = set()
                for u in level:
                    for s in self.simple:
                        x = self.mul(u, s)
                        if x not in seen:
                            seen.add(x)
                            nxt.add(x)
                level = list(nxt)
            self._all = sorted(seen, key=lambda w: (self.length(w), self.words[w]))
        return self._all

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements())


class RootDatum:
    """A based root datum with its derived constants.

    Attributes include ``positive_roots`` / ``positive_coroots`` (aligned: the
    k-th coroot is the coroot of the k-th root), their coefficient vectors in
    the simple bases, ``rho``, ``rho_vee``, the irreducible ``components`` of
    the Dynkin diagram with their ``types``, ``highest_roots`` and
    ``coxeter_numbers``.
    """

    def __init__(self, simple_roots, simple_coroots, dim: int | None = None, name: str | None = None):
        simple_roots = [tuple(int(x) for x in r) for r in simple_roots]
        simple_coroots = [tuple(int(x) for x in r) for r in simple_coroots]
        if len(simple_roots) != len(simple_coroots):
            raise RootDatumError("simple roots and coroots must have equal length")
        if dim is None:
            dim = len(simple_roots[0]) if simple_roots else 0
        if any(len(v) != dim for v in simple_roots + simple_coroots):
            raise RootDatumError(f"all vectors must have dimension {dim}")
        if len(simple_roots) > dim:
            raise RootDatumError("more simple roots than the lattice rank")
        self.name = name
        self.dim = dim
        self.rank = len(simple_roots)
        self.simple_roots = tuple(simple_roots)
        self.simple_coroots = tuple(simple_coroots)
        r = self.rank
        self.cartan = tuple(tuple(pair(simple_coroots[i], simple_roots[j]) for j in range(r))
                            for i in range(r))
        self._check_cartan()
        self._close_roots()
        self._find_components()
        self._ct_inv = _linalg.inverse(_linalg.transpose(self.cartan)) if r else []

    # -- construction ------------------------------------------------------

    def _check_cartan(self):
        a = self.cartan
        for i in range(self.rank):
            if a[i][i] != 2:
                raise BadPairing(f"<alpha_{i}^vee, alpha_{i}> = {a[i][i]}, expected 2")
            for j in range(self.rank):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    raise BadPairing(f"invalid off-diagonal Cartan entries at ({i}, {j})")

    def _close_roots(self):
        a, r = self.cartan, self.rank
        start = [(tuple(int(i == j) for j in range(r)),) * 2 for i in range(r)]
        seen = {c: cv for c, cv in start}
        frontier = list(start)
        while frontier:
            nxt = []
            for c, cv in frontier:
                for j in range(r):
                    k = sum(a[j][m] * c[m] for m in range(r))
                    kv = sum(cv[m] * a[m][j] for m in range(r))
                    c2 = tuple(x - k * (m == j) for m, x in enumerate(c))
                    cv2 = tuple(x - kv * (m == j) for m, x in enumerate(cv))
                    if c2 not in seen:
                        seen[c2] = cv2
                        nxt.append((c2, cv2))
                        if len(seen) > MAX_ROOTS:
                            raise NotFiniteType("reflection closure exceeded the root bound")
            frontier = nxt
        pos = sorted((c for c in seen if all(x >= 0 for x in c)), key=lambda c: (sum(c), c))
        if 2 * len(pos) != len(seen):
            raise NotFiniteType("roots are not split into positive and negative ones")
        self.positive_root_coeffs = tuple(pos)
        self.positive_coroot_coeffs = tuple(seen[c] for c in pos)
        self.positive_roots = tuple(self._combine(self.simple_roots, c) for c in pos)
        self.positive_coroots = tuple(self._combine(self.simple_coroots, seen[c]) for c in pos)
        half = Fraction(1, 2)
        self.two_rho = tuple(sum(g[i] for g in self.positive_roots) for i in range(self.dim))
        self.two_rho_vee = tuple(sum(g[i] for g in self.positive_coroots) for i in range(self.dim))
        # halves stay Fractions only where they are not integers
        self.rho = tuple(x // 2 if x % 2 == 0 else half * x for x in self.two_rho)
        self.rho_vee = tuple(x // 2 if x % 2 == 0 else half * x for x in self.two_rho_vee)

    def _combine(self, basis, coeffs):
        return tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(self.dim))

    def _find_components(self):
        r = self.rank
        comp_of = [-1] * r
        comps = []
        for i in range(r):
            if comp_of[i] >= 0:
                continue
            stack, comp = [i], []
            comp_of[i] = len(comps)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in range(r):
                    if comp_of[y] < 0 and self.cartan[x][y] != 0:
                        comp_of[y] = len(comps)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        self.components = tuple(comps)
        self.highest_roots = []
        self.types = []
        self.coxeter_numbers = []
        for comp in comps:
            ks = [k for k, c in enumerate(self.positive_root_coeffs) if any(c[i] for i in comp)]
            top = max(ks, key=lambda k: sum(self.positive_root_coeffs[k]))
            self.highest_roots.append(top)
            self.coxeter_numbers.append(1 + sum(self.positive_root_coeffs[top]))
            self.types.append(self._classify(comp, len(ks)))
        self.highest_roots = tuple(self.highest_roots)
        self.types = tuple(self.types)
        self.coxeter_numbers = tuple(self.coxeter_numbers)

    def _classify(self, comp, npos):
        n = len(comp)
        laced = all(self.cartan[i][j] in (0, -1, 2) for i in comp for j in comp)
        if laced:
            if npos == n * (n + 1) // 2:
                return ("A", n)
            if n >= 4 and npos == n * (n - 1):
                return ("D", n)
            if n in (6, 7, 8) and npos == {6: 36, 7: 63, 8: 120}[n]:
                return ("E", n)
        else:
            if n == 2 and npos == 6:
                return ("G", 2)
            if n == 4 and npos == 24:
                return ("F", 4)
            if npos == n * n:
                # B_n has a unique short simple root, C_n a unique long one
                if n == 2:
                    return ("B", 2)
                lengths = self._relative_lengths(comp)
                short = sum(1 for i in comp if lengths[i] == 1)
                return ("B", n) if short == 1 else ("C", n)
        raise NotFiniteType(f"unrecognized component with rank {n} and {npos} positive roots")

    def _relative_lengths(self, comp):
        # |alpha_i|^2 up to scale: a_ij / a_ji = |alpha_j|^2 / |alpha_i|^2
        lengths = {comp[0]: Fraction(1)}
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j not in lengths and self.cartan[i][j]:
                    lengths[j] = lengths[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                    stack.append(j)
        m = min(lengths.values())
        return {i: x / m for i, x in lengths.items()}

    @cached_property
    def simple_root_positions(self) -> tuple[int, ...]:
        """Index of each simple root within ``positive_roots``."""
        pos = {c: k for k, c in enumerate(self.positive_root_coeffs)}
        return tuple(pos[tuple(int(i == j) for j in range(self.rank))] for i in range(self.rank))

    @cached_property
    def weyl(self) -> WeylGroup:
        """The Weyl group, shared by every equal datum in this process.

        Element handles are assigned lazily, so sharing one instance keeps
        elements of groups built from equal data comparable.
        """
        with _WEYL_LOCK:
            w = _WEYL_GROUPS.get(self.key())
            if w is None:
                w = _WEYL_GROUPS[self.key()] = WeylGroup(self)
        return w

    # -- queries -----------------------------------------------------------

    @property
    def is_semisimple(self) -> bool:
        return self.rank == self.dim

    def pairings(self, lam) -> tuple:
        """``(<lam, alpha_i>)_i`` over simple roots."""
        return tuple(pair(lam, a) for a in self.simple_roots)

    def is_dominant(self, lam) -> bool:
        return all(x >= 0 for x in self.pairings(lam))

    def is_strictly_dominant(self, lam) -> bool:
        return all(x > 0 for x in self.pairings(lam))

    def simple_coroot_coords(self, nu):
        """Coefficients of ``nu`` in the simple coroots, or ``None`` if ``nu`` is
        outside their rational span."""
        p = self.pairings(nu)
        c = tuple(sum(row[j] * p[j] for j in range(self.rank)) for row in self._ct_inv)
        if self._combine(self.simple_coroots, c) != tuple(nu):
            return None
        return c

    def dominance_leq(self, lam, mu) -> bool:
        """``lam <= mu``, i.e. ``mu - lam`` is a nonnegative integer combination of
        simple coroots."""
        c = self.simple_coroot_coords(vsub(mu, lam))
        return c is not None and all(x.denominator == 1 and x >= 0 for x in c)

    def in_coroot_lattice(self, nu) -> bool:
        c = self.simple_coroot_coords(nu)
        return c is not None and all(x.denominator == 1 for x in c)

    def reflect(self, i: int, lam):
        """Simple reflection ``s_i`` acting on a coweight."""
        k = pair(lam, self.simple_roots[i])
        return tuple(x - k * y for x, y in zip(lam, self.simple_coroots[i]))

    def dom(self, lam):
        """The unique dominant W-conjugate of ``lam``."""
        lam = tuple(lam)
        while True:
            for i, a in enumerate(self.simple_roots):
                if pair(lam, a) < 0:
                    lam = self.reflect(i, lam)
                    break
            else:
                return lam

    def bad_primes(self) -> frozenset[int]:
        out = set()
        for letter, n in self.types:
            key = letter if letter != "E" else f"E{n}"
            out |= _BAD_PRIMES[key]
        return frozenset(out)

    def is_good_prime(self, p: int) -> bool:
        return p not in self.bad_primes()

    def coxeter_number(self) -> int:
        """Coxeter number (maximum over irreducible components)."""
        return max(self.coxeter_numbers, default=1)

    def dominant_weights(self, bound):
        """Dominant coweights ``mu`` with ``<mu, 2 rho> <= bound``, sorted by
        ``(<mu, 2 rho>, mu)``.  Requires a semisimple datum."""
        if not self.is_semisimple:
            raise RootDatumError("dominant weights with bounded <mu, 2rho> are infinite "
                                 "unless the datum is semisimple")
        # <mu, 2rho> = sum_i a_i c_i with a_i = <mu, alpha_i>, 2 rho = sum c_i alpha_i
        c = [sum(g[i] for g in self.positive_root_coeffs) for i in range(self.rank)]
        inv_roots = _linalg.inverse(self.simple_roots)  # rows: simple roots
        out = []

        def rec(i, acc, budget):
            if i == self.rank:
                mu = tuple(sum(Fraction(acc[j]) * inv_roots[k][j] for j in range(self.rank))
                           for k in range(self.dim))
                if all(x.denominator == 1 for x in mu):
                    out.append(tuple(int(x) for x in mu))
                return
            for a in range(budget // c[i] + 1):
                rec(i + 1, acc + [a], budget - a * c[i])

        rec(0, [], int(bound))
        return sorted(out, key=lambda mu: (pair(mu, self.two_rho), mu))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        if self.name in PRESETS:
            return {"preset": self.name}
        return {"rank": self.dim, "simple_roots": [list(r) for r in self.simple_roots],
                "simple_coroots": [list(r) for r in self.simple_coroots]}

    def key(self) -> str:
        """Stable identifier of the datum (used for cache file names)."""
        return json.dumps({"simple_roots": [list(r) for r in self.simple_roots],
                           "simple_coroots": [list(r) for r in self.simple_coroots],
                           "rank": self.dim}, sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        label = self.name or "x".join(f"{t}{n}" for t, n in self.types) or "torus"
        return f"RootDatum({label}, dim={self.dim})"


def build_root_datum(source) -> RootDatum:
    """Build a root datum from a preset name, a JSON string, or a dict.

    Dicts look like ``{"preset": "A2"}`` or
    ``{"rank": d, "simple_roots": [[...]], "simple_coroots": [[...]]}``.
    """
    if isinstance(source, RootDatum):
        return source
    if isinstance(source, str):
        if source in PRESETS:
            source = {"preset": source}
        else:
            try:
                source = json.loads(source)
            except json.JSONDecodeError:
                raise RootDatumError(f"unknown preset {source!r}; known: {', '.join(PRESETS)}") from None
    if not isinstance(source, dict):
        raise RootDatumError(f"cannot build a root datum from {source!r}")
    if "preset" in source:
        name = source["preset"]
        if name not in PRESETS:
            raise RootDatumError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
        roots, coroots = PRESETS[name]
        return RootDatum(roots, coroots, name=name)
    try:
        return RootDatum(source["simple_roots"], source["simple_coroots"], dim=source.get("rank"))
    except KeyError as exc:
        raise RootDatumError(f"root datum JSON is missing {exc}") from None
