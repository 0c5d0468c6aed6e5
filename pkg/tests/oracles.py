"""Independent reference implementations used only by the tests.

None of these share code paths with the library beyond the raw group law
(``mul``/``gen``), the Hecke product by a generator and ``bar_H``.
"""

from __future__ import annotations

import itertools
from collections import Counter

from alcove_tilt.laurent import ZERO, LaurentPolynomial


def bfs_lengths(group, max_length):
    """Minimal word length of every element reachable by at most ``max_length`` generators."""
    dist = {group.identity: 0}
    frontier = [group.identity]
    for k in range(1, max_length + 1):
        nxt = []
        for a in frontier:
            for s in group.generators:
                b = group.mul(a, s)
                if b not in dist:
                    dist[b] = k
                    nxt.append(b)
        frontier = nxt
    return dist


def all_reduced_words(group, a, lengths):
    """Every reduced word of ``a`` (``lengths`` must cover ``a``)."""
    n = lengths[a]
    if n == 0:
        return [()]
    out = []
    for i, s in enumerate(group.generators):
        b = group.mul(a, group.inverse(s))
        if lengths.get(b) == n - 1:
            out.extend(w + (i,) for w in all_reduced_words(group, b, lengths))
    return out


def subword_interval(group, word):
    """Products of all subwords of a reduced word: the Bruhat lower interval."""
    out = set()
    for mask in itertools.product((False, True), repeat=len(word)):
        out.add(group.from_word([i for i, m in zip(word, mask) if m]))
    return out


def kl_by_bar_invariance(algebra, w, interval, lengths):
    """Solve for ``C_w`` from bar-invariance and ``h_{y,w} in vZ[v]`` alone.

    Writing ``bar(H_x) = sum_y r_{y,x} H_y``, bar-invariance reads
    ``h_y - bar(h_y) = sum_{x > y} bar(h_x) r_{y,x}``; the right side is known
    when ``y`` is processed in decreasing length, and ``h_y`` is its part of
    positive degree.
    """
    r = {x: algebra.bar_H(x) for x in interval}
    h = {w: LaurentPolynomial(1)}
    order = sorted(interval, key=lambda x: -lengths[x])
    for y in order:
        if y == w:
            continue
        q = ZERO
        for x, hx in h.items():
            if hx:
                q = q + hx.bar() * r[x][y]
        if q[0] != 0 or q.bar() != -q:
            raise AssertionError("inconsistent bar-invariance system")
        h[y] = q.positive_part()
    return {y: c for y, c in h.items() if c}


def kostant_table(rd, box):
    """Counts of decompositions into positive coroots for every target whose
    simple-coroot coordinates lie in ``[0, box]^rank`` (box enumeration)."""
    coeffs = rd.positive_coroot_coeffs
    ranges = [range(box // max(c) + 1) for c in coeffs]
    tally = Counter()
    for ks in itertools.product(*ranges):
        v = tuple(sum(k * c[j] for k, c in zip(ks, coeffs)) for j in range(rd.rank))
        if all(x <= box for x in v):
            tally[v] += 1
    return tally


def linked(rd, p, mu, nu):
    """``nu`` lies in ``W_aff ._p mu``: some ``w`` sends ``mu + rho_vee`` to
    ``nu + rho_vee`` modulo ``p ZR^vee``."""
    W = rd.weyl
    for w in W:
        d = tuple(a - b for a, b in zip(W.dot(w, mu), nu))
        c = rd.simple_coroot_coords(d)
        if c is not None and all(x.denominator == 1 and int(x) % p == 0 for x in c):
            return True
    return False


def box_weights(rd, radius):
    return itertools.product(range(-radius, radius + 1), repeat=rd.dim)
