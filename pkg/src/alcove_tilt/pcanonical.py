"""Providers of p-Kazhdan-Lusztig polynomials.

Two sources exist:

* ``ordinary-fallback``: ``ph_{y,w} = h_{y,w}``, valid only for ``p`` above an
  unknown bound depending on ``w``; results carry that caveat.
* ``ingested``: rows read from a ``pkl/1`` JSON-lines file and validated here
  (unitriangularity, bar-invariance, nonnegativity in the KL basis).  Queries
  for elements the file does not cover raise ``OutsideFrontier``.

File layout (one JSON document per line)::

    {"format": "pkl/1", "datum": {...}, "p": 3, "action_convention": "dot",
     "frontier": [[...], ...]}
    {"w": [1, 0], "terms": [{"y": [], "coeffs": {"2": 1}}, ...]}
"""

from __future__ import annotations

import io
import json
import os
from typing import Iterable, Mapping

from .affine_weyl import AffineWeylElement, AffineWeylGroup
from .errors import (
    NegativeKLCoefficient, NotSelfDual, NotUnitriangular, OutsideFrontier, ParseError,
    RootDatumError,
)
from .hecke import HeckeElement, antispherical_row, check_min_in_coset, hecke_algebra, kl_table
from .laurent import ONE, ZERO, LaurentPolynomial
from .root_datum import build_root_datum

__all__ = [
    "PKLTable", "pkl", "p_antispherical", "ingest_pkl", "write_pkl", "kl_expansion",
    "validate_row", "FORMAT",
]

FORMAT = "pkl/1"
FALLBACK = "ordinary-fallback"
INGESTED = "ingested"
FALLBACK_CAVEAT = "assuming p >= N(w)"


class PKLTable:
    """A frozen source of ``ph_{y,w}``."""

    def __init__(self, group: AffineWeylGroup, p: int, source: str = FALLBACK,
                 entries: Mapping[AffineWeylElement, Mapping] | None = None,
                 action_convention: str = "dot"):
        if int(p) != p or p < 2:
            raise ValueError(f"p must be an integer >= 2, got {p}")
        if source not in (FALLBACK, INGESTED):
            raise ValueError(f"unknown source {source!r}")
        if action_convention not in ("dot", "box"):
            raise ValueError(f"unknown action convention {action_convention!r}")
        self.group = group
        self.p = int(p)
        self.source = source
        self.action_convention = action_convention
        self._entries = None
        self._rows: dict = {}
        if source == INGESTED:
            self._entries = {w: dict(t) for w, t in (entries or {}).items()}

    @classmethod
    def fallback(cls, group: AffineWeylGroup, p: int) -> PKLTable:
        return cls(group, p, FALLBACK)

    @property
    def frontier(self) -> frozenset | None:
        """Covered elements, or ``None`` when every element is covered."""
        return None if self._entries is None else frozenset(self._entries)

    @property
    def caveat(self) -> str | None:
        return FALLBACK_CAVEAT if self.source == FALLBACK else None

    def covers(self, w: AffineWeylElement) -> bool:
        return self._entries is None or w in self._entries

    def terms(self, w: AffineWeylElement) -> Mapping[AffineWeylElement, LaurentPolynomial]:
        if self._entries is None:
            return kl_table(self.group).terms(w)
        try:
            return self._entries[w]
        except KeyError:
            raise OutsideFrontier(
                f"w={list(self.group.word(w))} is not covered by the ingested table") from None

    def poly(self, y: AffineWeylElement, w: AffineWeylElement) -> LaurentPolynomial:
        return self.terms(w).get(y, ZERO)

    def element(self, w: AffineWeylElement) -> HeckeElement:
        """The p-canonical basis element of ``w`` in the standard basis."""
        return HeckeElement(hecke_algebra(self.group), self.terms(w))

    def antispherical(self, y, w) -> LaurentPolynomial:
        """``pn_{y,w}``; rows are computed once per ``w`` and kept."""
        check_min_in_coset(self.group, y=y, w=w)
        row = self._rows.get(w)
        if row is None:
            row = self._rows[w] = antispherical_row(self.group, self.terms(w))
        return row.get(y, ZERO)


def pkl(y: AffineWeylElement, w: AffineWeylElement, table: PKLTable) -> LaurentPolynomial:
    return table.poly(y, w)


def p_antispherical(y: AffineWeylElement, w: AffineWeylElement, table: PKLTable) -> LaurentPolynomial:
    """``pn_{y,w} = sum_{x in W} (-1)^{l(x)} ph_{xy,w}``."""
    return table.antispherical(y, w)


def kl_expansion(element: HeckeElement) -> dict[AffineWeylElement, LaurentPolynomial]:
    """Coefficients of ``element`` in the Kazhdan-Lusztig basis.

    Peels off the top term repeatedly; each ``C_y`` is ``H_y`` plus lower terms.
    """
    g = element.algebra.group
    table = kl_table(g)
    rest = element
    out = {}
    while rest:
        y = max(rest.terms, key=g.sort_key)
        c = rest[y]
        out[y] = c
        rest = rest - table.element(y).scale(c)
    return out


def validate_row(group: AffineWeylGroup, w: AffineWeylElement,
                 terms: Mapping[AffineWeylElement, LaurentPolynomial], line=None) -> None:
    """Raise the first violated invariant for the row of ``w``."""
    word = group.word(w)
    if terms.get(w, ZERO) != ONE:
        raise NotUnitriangular("diagonal coefficient is not 1", line, word)
    for y, c in terms.items():
        if c and not group.bruhat_leq(y, w):
            raise NotUnitriangular(f"nonzero coefficient at y={list(group.word(y))} not below w",
                                   line, word)
    elem = HeckeElement(hecke_algebra(group), terms)
    if elem.bar() != elem:
        raise NotSelfDual("element is not bar-invariant", line, word)
    for y, c in kl_expansion(elem).items():
        if not c.is_nonnegative():
            raise NegativeKLCoefficient(
                f"KL-basis coefficient {c} at y={list(group.word(y))}", line, word)


def _parse_word(group, raw, line):
    if not isinstance(raw, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in raw):
        raise ParseError(f"malformed word {raw!r}", line)
    if any(not 0 <= i < group.num_generators for i in raw):
        raise ParseError(f"generator index out of range in {raw}", line)
    w = group.from_word(raw)
    if group.length(w) != len(raw):
        raise ParseError(f"word {raw} is not reduced", line)
    return w


def _read_lines(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return fh.read().splitlines()
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return source.read().splitlines()
    return list(source)


def ingest_pkl(source, group: AffineWeylGroup | None = None) -> PKLTable:
    """Read and validate a ``pkl/1`` file (path, open file or iterable of lines).

    Validation is all-or-nothing: the first violation raises, naming its line.
    """
    lines = [(n, s) for n, s in enumerate(_read_lines(source), start=1) if s.strip()]
    if not lines:
        raise ParseError("empty file")
    docs = []
    for n, s in lines:
        try:
            docs.append((n, json.loads(s)))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", n) from None
    (hn, header), rows = docs[0], docs[1:]
    if not isinstance(header, dict) or header.get("format") != FORMAT:
        raise ParseError(f"first record must be a {FORMAT} header", hn)
    for key in ("datum", "p", "action_convention", "frontier"):
        if key not in header:
            raise ParseError(f"header is missing {key!r}", hn)
    try:
        rd = build_root_datum(header["datum"])
    except RootDatumError as exc:
        raise ParseError(f"bad datum: {exc}", hn) from None
    if group is None:
        group = AffineWeylGroup(rd)
    elif group.rd.key() != rd.key():
        raise ParseError("file datum does not match the requested group", hn)
    p = header["p"]
    if not isinstance(p, int) or p < 2:
        raise ParseError(f"p must be an integer >= 2, got {p!r}", hn)
    convention = header["action_convention"]
    if convention not in ("dot", "box"):
        raise ParseError(f"unknown action convention {convention!r}", hn)
    if not isinstance(header["frontier"], list):
        raise ParseError("frontier must be a list of words", hn)
    frontier = [_parse_word(group, raw, hn) for raw in header["frontier"]]

    entries: dict[AffineWeylElement, dict] = {}
    for n, row in rows:
        if not isinstance(row, dict) or "w" not in row or not isinstance(row.get("terms"), list):
            raise ParseError("row must have 'w' and a list of 'terms'", n)
        w = _parse_word(group, row["w"], n)
        if w in entries:
            raise ParseError("duplicate row", n, group.word(w))
        terms: dict[AffineWeylElement, LaurentPolynomial] = {}
        for t in row["terms"]:
            if not isinstance(t, dict) or "y" not in t or not isinstance(t.get("coeffs"), dict):
                raise ParseError("term must have 'y' and a 'coeffs' map", n, group.word(w))
            y = _parse_word(group, t["y"], n)
            try:
                c = LaurentPolynomial.from_json(t["coeffs"])
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bad coefficients: {exc}", n, group.word(w)) from None
            if y in terms:
                raise ParseError(f"duplicate term y={t['y']}", n, group.word(w))
            if c:
                terms[y] = c
        validate_row(group, w, terms, n)
        entries[w] = terms
    missing = set(frontier) - set(entries)
    if missing:
        first = min(missing, key=group.sort_key)
        raise ParseError("frontier element has no row", hn, group.word(first))
    extra = set(entries) - set(frontier)
    if extra:
        first = min(extra, key=group.sort_key)
        raise ParseError("row outside the declared frontier", None, group.word(first))
    return PKLTable(group, p, INGESTED, entries, convention)


def write_pkl(table: PKLTable, ws: Iterable[AffineWeylElement], out) -> None:
    """Write the rows of ``ws`` as a ``pkl/1`` file to a path or text stream."""
    g = table.group
    ws = sorted(set(ws), key=g.sort_key)
    header = {"format": FORMAT, "datum": g.rd.to_json(), "p": table.p,
              "action_convention": table.action_convention,
              "frontier": [list(g.word(w)) for w in ws]}
    lines = [json.dumps(header, sort_keys=True, separators=(",", ":"))]
    for w in ws:
        terms = sorted(table.terms(w).items(), key=lambda kv: g.sort_key(kv[0]))
        row = {"w": list(g.word(w)),
               "terms": [{"y": list(g.word(y)), "coeffs": c.to_json()} for y, c in terms if c]}
        lines.append(json.dumps(row, separators=(",", ":")))
    text = "\n".join(lines) + "\n"
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
