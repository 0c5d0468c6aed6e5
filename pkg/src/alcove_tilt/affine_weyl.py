"""The affine Weyl group ``W_aff = W x| ZR^vee`` and its alcove geometry.

An element is a pair ``(w, t)`` standing for ``w . t_t`` (finite part first,
then translation by ``t`` in the coroot lattice).  It acts on ``X^vee (x) Q`` by

* the dot action  ``w t_t . v = w(v + p t + rho_vee) - rho_vee``;
* the box action  ``w t_t [] v = w(v + p t)``.

Generators are numbered with the simple reflections first (in the datum's
order), followed by one affine reflection per irreducible component.  The
affine reflection of a component with highest root ``theta`` is
``s_theta t_{-theta^vee}``; under the dot action it fixes the wall
``<v + rho_vee, theta> = p`` of the fundamental alcove.

>>> from alcove_tilt.root_datum import build_root_datum
>>> G = AffineWeylGroup(build_root_datum("A1-adjoint"))
>>> s, s0 = G.generators
>>> G.dot(s0, (0,), 3), G.length(G.mul(s, s0)), G.word(G.mul(s0, s))
((4,), 2, (1, 0))
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import _linalg
from .errors import (
    BadGeneratorIndex, EmptyFacet, InfiniteParabolic, NotDominant, NotInClosure,
    NotParametrizing, RootDatumError,
)
from .root_datum import RootDatum, pair, vadd, vscale, vsub

__all__ = ["AffineWeylElement", "AffineWeylGroup", "Facet"]


@dataclass(frozen=True)
class AffineWeylElement:
    """``finite . t_translation`` with ``finite`` an index into the finite Weyl group."""
    finite: int
    translation: tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    """A facet of the p-dilated, rho_vee-shifted alcove arrangement.

    ``n[k]`` is the integer attached to the k-th positive root;
    ``sample`` is a rational point of the facet certifying that it is nonempty.
    """
    R0: frozenset
    R1: frozenset
    n: tuple[int, ...]
    p: int
    sample: tuple = field(compare=False)

    @property
    def is_alcove(self) -> bool:
        return not self.R0

    @property
    def is_wall(self) -> bool:
        return len(self.R0) == 1

    def to_json(self, rd: RootDatum | None = None) -> dict:
        out = {
            "p": self.p,
            "R0": sorted(self.R0),
            "R1": sorted(self.R1),
            "n": list(self.n),
            "kind": "alcove" if self.is_alcove else "wall" if self.is_wall else "facet",
            "sample": [str(x) for x in self.sample],
        }
        if rd is not None:
            out["positive_roots"] = [list(g) for g in rd.positive_roots]
        return out


def _frac_vec(v):
    return tuple(Fraction(x) for x in v)


class AffineWeylGroup:
    """The affine Weyl group of a root datum as a Coxeter group.

    Lengths, canonical words, Bruhat comparisons and lower intervals are
    memoized; the caches are guarded by a lock so one group may be shared
    between threads.
    """

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.W = W = rd.weyl
        zero = (0,) * rd.dim
        self.identity = AffineWeylElement(0, zero)
        gens = [AffineWeylElement(W.simple[i], zero) for i in range(rd.rank)]
        for k in rd.highest_roots:
            theta, theta_v = rd.positive_roots[k], rd.positive_coroots[k]
            d = rd.dim
            m = tuple(tuple(int(i == j) - theta_v[i] * theta[j] for j in range(d)) for i in range(d))
            gens.append(AffineWeylElement(W._intern(m), tuple(-x for x in theta_v)))
        self.generators = tuple(gens)
        self.n_finite = rd.rank
        self.finite_generators = tuple(range(rd.rank))
        self._gen_of_component = {c: rd.rank + c for c in range(len(rd.components))}
        self._lock = threading.RLock()
        self._length: dict[AffineWeylElement, int] = {}
        self._word: dict[AffineWeylElement, tuple[int, ...]] = {self.identity: ()}
        self._bruhat: dict[tuple, bool] = {}
        self._interval: dict[AffineWeylElement, frozenset] = {}
        self._levels: list[list[AffineWeylElement]] = [[self.identity]]
        self._min_levels: list[list[AffineWeylElement]] = [[self.identity]]
        self._rmul: dict[tuple[AffineWeylElement, int], AffineWeylElement] = {}

    def __repr__(self):
        return f"AffineWeylGroup({self.rd!r})"

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def component_generators(self, c: int) -> tuple[int, ...]:
        return tuple(self.rd.components[c]) + (self._gen_of_component[c],)

    # -- group structure ---------------------------------------------------

    def mul(self, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
        W = self.W
        t = vadd(W.act(W.inv[b.finite], a.translation), b.translation)
        return AffineWeylElement(W.mul(a.finite, b.finite), t)

    def inverse(self, a: AffineWeylElement) -> AffineWeylElement:
        W = self.W
        return AffineWeylElement(W.inv[a.finite], tuple(-x for x in W.act(a.finite, a.translation)))

    def gen(self, i: int) -> AffineWeylElement:
        if not 0 <= i < len(self.generators):
            raise BadGeneratorIndex(f"generator index {i} out of range 0..{len(self.generators) - 1}")
        return self.generators[i]

    def rmul_gen(self, a: AffineWeylElement, i: int) -> AffineWeylElement:
        key = (a, i)
        r = self._rmul.get(key)
        if r is None:
            r = self._rmul[key] = self.mul(a, self.gen(i))
        return r

    def lmul_gen(self, i: int, a: AffineWeylElement) -> AffineWeylElement:
        return self.mul(self.gen(i), a)

    def from_word(self, word: Iterable[int]) -> AffineWeylElement:
        a = self.identity
        for i in word:
            a = self.rmul_gen(a, i)
        return a

    def from_finite(self, w: int) -> AffineWeylElement:
        return AffineWeylElement(w, (0,) * self.rd.dim)

    def translation(self, t: Sequence[int]) -> AffineWeylElement:
        t = tuple(t)
        if not self.rd.in_coroot_lattice(t):
            raise ValueError(f"{t} is not in the coroot lattice")
        return AffineWeylElement(0, t)

    def length(self, a: AffineWeylElement) -> int:
        """Number of affine root hyperplanes separating the base alcove from its image."""
        r = self._length.get(a)
        if r is None:
            neg = self.W.neg_roots[a.finite]
            t = a.translation
            r = 0
            for k, g in enumerate(self.rd.positive_roots):
                m = pair(t, g)
                r += abs(m + 1) if k in neg else abs(m)
            self._length[a] = r
        return r

    def is_right_descent(self, a: AffineWeylElement, i: int) -> bool:
        return self.length(self.rmul_gen(a, i)) < self.length(a)

    def is_left_descent(self, i: int, a: AffineWeylElement) -> bool:
        return self.length(self.lmul_gen(i, a)) < self.length(a)

    def right_descents(self, a) -> tuple[int, ...]:
        return tuple(i for i in range(self.num_generators) if self.is_right_descent(a, i))

    def left_descents(self, a) -> tuple[int, ...]:
        return tuple(i for i in range(self.num_generators) if self.is_left_descent(i, a))

    def word(self, a: AffineWeylElement) -> tuple[int, ...]:
        """The lexicographically least reduced word of ``a``."""
        w = self._word.get(a)
        if w is not None:
            return w
        path = []
        b = a
        while b not in self._word:
            i = next(i for i in range(self.num_generators) if self.is_left_descent(i, b))
            path.append((b, i))
            b = self.lmul_gen(i, b)
        w = self._word[b]
        with self._lock:
            for b, i in reversed(path):
                w = (i,) + w
                self._word[b] = w
        return w

    def sort_key(self, a: AffineWeylElement):
        return (self.length(a), self.word(a))

    # -- actions -----------------------------------------------------------

    def dot(self, a: AffineWeylElement, v, p: int):
        """``a ._p v``; integral input stays integral."""
        W = self.W
        x = vadd(v, vscale(p, a.translation))
        return vadd(W.act(a.finite, x), W.rho_shift[a.finite])

    def box(self, a: AffineWeylElement, v, p: int):
        """``a []_p v``, the unshifted linear version of the dot action."""
        return self.W.act(a.finite, vadd(v, vscale(p, a.translation)))

    def coxeter_matrix(self, p: int | None = None) -> list[list[float]]:
        """Orders of products of generator pairs (``math.inf`` if infinite).

        With ``p`` given the orders are read off the dot action on an affine
        frame of ``X^vee (x) Q`` instead of the group law.
        """
        n = self.num_generators
        d = self.rd.dim
        frame = [tuple(Fraction(1, 7 + i) for i in range(d))]
        frame += [vadd(frame[0], tuple(int(i == j) for i in range(d))) for j in range(d)]

        def trivial(x):
            if p is None:
                return x == self.identity
            return all(self.dot(x, pt, p) == pt for pt in frame)

        m = [[1] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                st = self.mul(self.generators[i], self.generators[j])
                x, order = st, 1
                while not trivial(x) and order <= 12:
                    x = self.mul(x, st)
                    order += 1
                m[i][j] = m[j][i] = order if order <= 12 else math.inf
        return m

    # -- Bruhat order and intervals ----------------------------------------

    def bruhat_leq(self, y: AffineWeylElement, w: AffineWeylElement) -> bool:
        ly, lw = self.length(y), self.length(w)
        if ly > lw:
            return False
        if ly == lw:
            return y == w
        if ly == 0:
            return True
        key = (y, w)
        r = self._bruhat.get(key)
        if r is None:
            s = self.word(w)[-1]
            ws = self.rmul_gen(w, s)
            ys = self.rmul_gen(y, s)
            # lifting property: y <= w  iff  min(y, ys) <= ws
            r = self.bruhat_leq(ys if self.length(ys) < ly else y, ws)
            self._bruhat[key] = r
        return r

    def lower_interval(self, w: AffineWeylElement) -> frozenset:
        """All ``y <= w`` in Bruhat order."""
        r = self._interval.get(w)
        if r is None:
            if w == self.identity:
                r = frozenset([w])
            else:
                s = self.word(w)[-1]
                below = self.lower_interval(self.rmul_gen(w, s))
                r = below | frozenset(self.rmul_gen(x, s) for x in below)
            self._interval[w] = r
        return r

    def elements_of_length(self, k: int) -> list[AffineWeylElement]:
        """Elements of length ``k`` sorted by canonical word."""
        with self._lock:
            self._grow(self._levels, k, lambda a: True)
        return self._levels[k]

    def elements_up_to(self, k: int) -> list[AffineWeylElement]:
        out = []
        for j in range(k + 1):
            out.extend(self.elements_of_length(j))
        return out

    def min_coset_elements_of_length(self, k: int) -> list[AffineWeylElement]:
        """Elements of length ``k`` that are minimal in their coset ``W w``."""
        with self._lock:
            self._grow(self._min_levels, k, self.is_min_in_left_W_coset)
        return self._min_levels[k]

    def _grow(self, levels, k, keep):
        # prefix-closed families: level j+1 = {u s : u in level j, l(us) = j+1, keep(us)}
        while len(levels) <= k:
            j = len(levels) - 1
            nxt = set()
            for u in levels[j]:
                for i in range(self.num_generators):
                    us = self.rmul_gen(u, i)
                    if self.length(us) == j + 1 and keep(us):
                        nxt.add(us)
            levels.append(sorted(nxt, key=self.word))

    # -- cosets ------------------------------------------------------------

    def is_min_in_left_W_coset(self, w: AffineWeylElement) -> bool:
        """``w`` is the minimal element of ``W w``."""
        return not any(self.is_left_descent(i, w) for i in self.finite_generators)

    def is_finite_parabolic(self, I: Iterable[int]) -> bool:
        I = set(I)
        return not any(set(self.component_generators(c)) <= I for c in range(len(self.rd.components)))

    def max_in_right_parabolic_coset(self, w: AffineWeylElement, I: Iterable[int]) -> AffineWeylElement:
        """The maximal element of ``w <I>``."""
        I = sorted(set(I))
        for i in I:
            self.gen(i)
        if not self.is_finite_parabolic(I):
            raise InfiniteParabolic(f"<{I}> is infinite")
        while True:
            for i in I:
                ws = self.rmul_gen(w, i)
                if self.length(ws) > self.length(w):
                    w = ws
                    break
            else:
                return w

    def min_in_right_parabolic_coset(self, w: AffineWeylElement, I: Iterable[int]) -> AffineWeylElement:
        I = sorted(set(I))
        while True:
            for i in I:
                if self.is_right_descent(w, i):
                    w = self.rmul_gen(w, i)
                    break
            else:
                return w

    # -- alcove geometry ---------------------------------------------------

    def _walls(self, v):
        """Pairings ``<v + rho_vee, alpha_i>`` and ``<v + rho_vee, theta_c>``."""
        x = vadd(v, self.rd.rho_vee)
        simple = [pair(x, a) for a in self.rd.simple_roots]
        top = [pair(x, self.rd.positive_roots[k]) for k in self.rd.highest_roots]
        return simple, top

    def in_closure(self, v, p: int) -> bool:
        """``v`` lies in the closed fundamental alcove."""
        simple, top = self._walls(v)
        return all(x >= 0 for x in simple) and all(x <= p for x in top)

    def in_alcove(self, v, p: int) -> bool:
        simple, top = self._walls(v)
        return all(x > 0 for x in simple) and all(x < p for x in top)

    def to_closure(self, v, p: int):
        """Return ``(lam, w)`` with ``lam`` in the closed fundamental alcove and
        ``w . lam = v`` (dot action at ``p``)."""
        word = []
        n_fin = self.n_finite
        while True:
            simple, top = self._walls(v)
            i = next((i for i, x in enumerate(simple) if x < 0), None)
            if i is None:
                c = next((c for c, x in enumerate(top) if x > p), None)
                if c is None:
                    break
                i = n_fin + c
            v = self.dot(self.generators[i], v, p)
            word.append(i)
        return v, self.from_word(word)

    def classify_facet(self, v, p: int) -> Facet:
        """The facet containing ``v``."""
        _check_p(p)
        x = vadd(v, self.rd.rho_vee)
        R0, R1, n = set(), set(), []
        for k, g in enumerate(self.rd.positive_roots):
            q = Fraction(pair(x, g)) / p
            if q.denominator == 1:
                R0.add(k)
                n.append(int(q))
            else:
                R1.add(k)
                n.append(math.ceil(q))
        return Facet(frozenset(R0), frozenset(R1), tuple(n), p, _frac_vec(v))

    def facet_contains(self, facet: Facet, v) -> bool:
        x = vadd(v, self.rd.rho_vee)
        p = facet.p
        for k, g in enumerate(self.rd.positive_roots):
            val = pair(x, g)
            if k in facet.R0:
                if val != facet.n[k] * p:
                    return False
            elif not (facet.n[k] - 1) * p < val < facet.n[k] * p:
                return False
        return True

    def facet_from_parameters(self, R0: Iterable[int], n: Sequence[int], p: int) -> Facet:
        """Build the facet with the given data, certifying nonemptiness.

        The closure of the candidate set is a polytope; the barycenter of its
        vertices lies in the relative interior, which is the candidate set
        itself whenever the latter is nonempty.  Raises ``EmptyFacet`` otherwise.
        """
        _check_p(p)
        rd = self.rd
        R0 = frozenset(R0)
        npos = len(rd.positive_roots)
        if len(n) != npos or not R0 <= set(range(npos)):
            raise ValueError("facet data must index the positive roots")
        R1 = frozenset(range(npos)) - R0
        coeffs = rd.positive_root_coeffs
        # constraints on y = (<x, alpha_i>)_i with x = v + rho_vee
        eqs = [(coeffs[k], n[k] * p) for k in sorted(R0)]
        bounds = [(coeffs[k], (n[k] - 1) * p, n[k] * p) for k in sorted(R1)]
        planes = eqs + [(c, lo) for c, lo, _ in bounds] + [(c, hi) for c, _, hi in bounds]
        r = rd.rank

        def feasible(y, strict):
            for c, val in eqs:
                if pair(c, y) != val:
                    return False
            for c, lo, hi in bounds:
                z = pair(c, y)
                if strict and not lo < z < hi:
                    return False
                if not strict and not lo <= z <= hi:
                    return False
            return True

        vertices = set()
        for combo in combinations(planes, r):
            a = [list(c) for c, _ in combo]
            if _linalg.rank(a) < r:
                continue
            inv = _linalg.inverse(a)
            y = _linalg.matvec(inv, [val for _, val in combo])
            if feasible(y, strict=False):
                vertices.add(tuple(y))
        if not vertices:
            raise EmptyFacet("the defining inequalities have no solution")
        bary = tuple(sum(col) / len(vertices) for col in zip(*vertices))
        if not feasible(bary, strict=True):
            raise EmptyFacet("the strict inequalities cut out an empty set")
        c = _linalg.matvec(rd._ct_inv, bary)
        xvec = tuple(sum(ci * av[j] for ci, av in zip(c, rd.simple_coroots)) for j in range(rd.dim))
        sample = vsub(xvec, rd.rho_vee)
        return Facet(R0, R1, tuple(n), p, _frac_vec(sample))

    def stabilizer_generators(self, v, p: int) -> frozenset:
        """Generators fixing ``v`` (which must lie in the closed fundamental alcove)."""
        _check_p(p)
        if not self.in_closure(v, p):
            raise NotInClosure(f"{tuple(v)} is not in the closed fundamental alcove at p={p}")
        simple, top = self._walls(v)
        out = {i for i, x in enumerate(simple) if x == 0}
        out |= {self.n_finite + c for c, x in enumerate(top) if x == p}
        return frozenset(out)

    def alcove_weights(self, p: int) -> list[tuple[int, ...]]:
        """Integral points of the closed fundamental alcove, sorted by ``(<lam, 2rho>, lam)``."""
        rd = self.rd
        if not rd.is_semisimple:
            raise RootDatumError("the closed alcove contains infinitely many integral points "
                                 "unless the datum is semisimple")
        inv_roots = [[int(x) if x.denominator == 1 else x for x in row]
                     for row in _linalg.inverse(rd.simple_roots)]
        # marks[c][i]: coefficient of alpha_i in the highest root of component c
        marks = [rd.positive_root_coeffs[k] for k in rd.highest_roots]
        out = []

        def rec(i, acc, used):
            if i == rd.rank:
                # the bounds below are exactly the closed-alcove inequalities
                lam = _linalg.matvec(inv_roots, acc)
                if all(Fraction(x).denominator == 1 for x in lam):
                    out.append(tuple(int(x) for x in lam))
                return
            # a = <lam + rho_vee, alpha_i> >= 0, and sum_i m_i a <= p per component
            for a in range(0, p + 1):
                nxt = [u + m[i] * a for u, m in zip(used, marks)]
                if any(u > p for u in nxt):
                    break
                rec(i + 1, acc + [a - 1], nxt)

        rec(0, [], [0] * len(marks))
        return sorted(out, key=lambda lam: (pair(lam, rd.two_rho), lam))

    # -- block parametrization ---------------------------------------------

    def in_block_parametrizing_set(self, w: AffineWeylElement, lam, p: int) -> bool:
        """``w`` is minimal in ``W w`` and maximal in ``w <S_aff,lam>``."""
        stab = self.stabilizer_generators(lam, p)
        if not self.is_min_in_left_W_coset(w):
            return False
        return all(self.is_right_descent(w, i) for i in stab)

    def weight_of(self, w: AffineWeylElement, lam, p: int):
        if not self.in_block_parametrizing_set(w, lam, p):
            raise NotParametrizing(f"{self.word(w)} does not parametrize a dominant weight of block {lam}")
        return self.dot(w, lam, p)

    def weight_to_block(self, mu, p: int):
        """Return ``(lam, w)`` with ``lam`` in the closed alcove, ``w`` parametrizing,
        and ``w . lam = mu``."""
        _check_p(p)
        mu = tuple(mu)
        if not self.rd.is_dominant(mu):
            raise NotDominant(f"{mu} is not dominant")
        lam, w0 = self.to_closure(mu, p)
        lam = tuple(int(x) for x in lam)
        w = self.max_in_right_parabolic_coset(w0, self.stabilizer_generators(lam, p))
        if not self.is_min_in_left_W_coset(w):
            raise AssertionError(f"walk for {mu} produced a non-minimal element")
        return lam, w

    def parametrizing_elements(self, lam, p: int, max_length: int) -> list[AffineWeylElement]:
        """Elements of ``W_aff^(lam)`` of length at most ``max_length``, sorted by
        length then canonical word."""
        stab = self.stabilizer_generators(lam, p)
        out = []
        for k in range(max_length + 1):
            out.extend(w for w in self.min_coset_elements_of_length(k)
                       if all(self.is_right_descent(w, i) for i in stab))
        return out

    # -- serialization -----------------------------------------------------

    def to_json(self, a: AffineWeylElement) -> list[int]:
        return list(self.word(a))

    def from_json(self, word: Sequence[int]) -> AffineWeylElement:
        return self.from_word(int(i) for i in word)


def _check_p(p):
    if int(p) != p or p < 2:
        raise ValueError(f"p must be an integer >= 2, got {p}")
