"""Command-line front end: ``alcove-tilt <subcommand> ...``.

Every subcommand writes records either as JSON lines (keys sorted, compact
separators) or as TSV with a header line.  Output never depends on timing,
worker count or hash seeds.  Exit status is 0 on success, 1 on a usage or
domain error and 2 when a p-KL table is invalid or too small for the query.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable

from . import cache
from .affine_weyl import AffineWeylGroup
from .characters import costandard_character
from .errors import AlcoveTiltError, OutsideFrontier, ParseError, PKLValidationError
from .hecke import kl_table
from .pcanonical import PKLTable, ingest_pkl, write_pkl
from .root_datum import PRESETS, build_root_datum
from . import satake_combinatorics as satake
from .tilting import blocks, lusztig_simple_character, multiplicity_row, tilting_character

__all__ = ["run", "main", "build_parser"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- argument helpers --------------------------------------------------------

def _load_datum(text: str):
    if text not in PRESETS and os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    return build_root_datum(text)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.strip().strip("[]").split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _weight(rd, text: str) -> tuple[int, ...]:
    mu = _ints(text)
    if len(mu) != rd.dim:
        raise UsageError(f"weight {text!r} must have {rd.dim} coordinates")
    return mu


def _positive(name, value):
    if value is not None and value < 1:
        raise UsageError(f"--{name} must be positive")


def _table(group, p, pkl_path):
    if pkl_path is None:
        return PKLTable.fallback(group, p)
    table = ingest_pkl(pkl_path, group)
    if table.p != p:
        raise ParseError(f"file is for p={table.p} but --p is {p}", 1)
    return table


# -- output --------------------------------------------------------------------

def _cell(x) -> str:
    return x if isinstance(x, str) else json.dumps(x, sort_keys=True, separators=(",", ":"))


def _render(records: Iterable[dict], fmt: str) -> str:
    lines = []
    header = None
    for rec in records:
        if fmt == "json":
            lines.append(json.dumps(rec, sort_keys=True, separators=(",", ":")))
        else:
            keys = list(rec)
            if keys != header:
                header = keys
                lines.append("\t".join(keys))
            lines.append("\t".join(_cell(rec[k]) for k in keys))
    return "".join(line + "\n" for line in lines)


def _emit(args, records):
    text = _render(records, args.format)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parallel(fn, tasks: list, jobs: int, *shared) -> list:
    """Run ``fn(*shared, chunk)`` over round-robin chunks; concatenated results."""
    if jobs <= 1 or len(tasks) <= 1:
        return fn(*shared, tasks)
    chunks = [tasks[i::jobs] for i in range(jobs) if tasks[i::jobs]]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(fn, *[[s] * len(chunks) for s in shared], chunks))
    return [r for part in parts for r in part]


# -- subcommands ---------------------------------------------------------------

def cmd_root_info(args):
    rd = _load_datum(args.datum)
    gi = satake.gr_index_data(rd)
    return [{
        "datum": rd.to_json(),
        "dim": rd.dim,
        "rank": rd.rank,
        "types": [f"{t}{n}" for t, n in rd.types],
        "cartan": [list(r) for r in rd.cartan],
        "positive_roots": [list(g) for g in rd.positive_roots],
        "positive_coroots": [list(g) for g in rd.positive_coroots],
        "two_rho": [int(x) for x in rd.two_rho],
        "two_rho_vee": [int(x) for x in rd.two_rho_vee],
        "coxeter_numbers": list(rd.coxeter_numbers),
        "bad_primes": sorted(rd.bad_primes()),
        "weyl_group_order": len(rd.weyl),
        "component_group": list(gi.moduli),
        "xi": list(gi.xi) if gi.xi is not None else None,
    }]


def cmd_weyl_char(args):
    rd = _load_datum(args.datum)
    lam = _weight(rd, args.lam)
    ch = costandard_character(rd, lam)
    if args.format == "tsv":
        return [{"weight": list(mu), "multiplicity": m} for mu, m in ch.to_json()]
    return [{"lambda": list(lam), "character": ch.to_json(), "dimension": ch.dimension()}]


def cmd_alcove(args):
    rd = _load_datum(args.datum)
    g = AffineWeylGroup(rd)
    v = _rationals(args.classify)
    if len(v) != rd.dim:
        raise UsageError(f"point must have {rd.dim} coordinates")
    rec = g.classify_facet(v, args.p).to_json(rd)
    if all(x.denominator == 1 for x in v):
        lam, w = g.to_closure(tuple(int(x) for x in v), args.p)
        rec["closure"] = {"lambda": list(lam), "w": g.to_json(w)}
    return [rec]


def _kl_targets(g, max_length, affine):
    if affine:
        ws = g.elements_up_to(max_length)
    else:
        W = g.W
        ws = [g.from_finite(w) for w in W if W.length(w) <= max_length]
    return sorted(ws, key=g.sort_key)


def _kl_worker(datum_json, words):
    g = AffineWeylGroup(build_root_datum(datum_json))
    if cache.cache_dir() is not None and words:
        cache.load_kl(g, max(len(w) for w in words))
    table = kl_table(g)
    out = []
    for word in words:
        w = g.from_word(word)
        for y, c in sorted(table.terms(w).items(), key=lambda kv: g.sort_key(kv[0])):
            out.append({"w": list(word), "y": g.to_json(y), "coeffs": c.to_json()})
    return out


def cmd_kl(args):
    rd = _load_datum(args.datum)
    _positive("max-length", args.max_length)
    g = AffineWeylGroup(rd)
    ws = _kl_targets(g, args.max_length, args.affine)
    if args.emit_pkl is not None:
        table = PKLTable.fallback(g, args.emit_pkl)
        if args.out is None:
            write_pkl(table, ws, sys.stdout)
        else:
            write_pkl(table, ws, args.out)
        return None
    if cache.cache_dir() is not None:
        cache.ensure_kl(g, args.max_length if args.affine else max((g.length(w) for w in ws), default=0))
    records = _parallel(_kl_worker, [list(g.word(w)) for w in ws], args.jobs, json.dumps(rd.to_json()))
    key = {tuple(g.word(w)): g.sort_key(w) for w in ws}
    ykey = lambda r: (key[tuple(r["w"])], len(r["y"]), r["y"])  # noqa: E731
    return sorted(records, key=ykey)


def cmd_pkl_validate(args):
    table = ingest_pkl(args.file)
    g = table.group
    return [{"ok": True, "datum": g.rd.to_json(), "p": table.p,
             "action_convention": table.action_convention, "rows": len(table.frontier)}]


def cmd_blocks(args):
    rd = _load_datum(args.datum)
    _positive("max-pairing", args.max_pairing)
    g = AffineWeylGroup(rd)
    out = []
    for b in blocks(g, args.p, args.max_pairing):
        rec = b.to_json()
        rec["w"] = [g.to_json(g.weight_to_block(mu, args.p)[1]) for mu in b.members]
        out.append(rec)
    return out


def _row_record(g, row, table):
    rec = row.to_json(g)
    rec["p"] = table.p
    rec["source"] = table.source
    if table.caveat:
        rec["caveat"] = table.caveat
    return rec


def cmd_tilting_char(args):
    rd = _load_datum(args.datum)
    g = AffineWeylGroup(rd)
    mu = _weight(rd, args.mu)
    table = _table(g, args.p, args.pkl)
    row = multiplicity_row(mu, table)
    ch = tilting_character(mu, args.p, table)
    return [_row_record(g, row, table),
            {"mu": list(mu), "character": ch.to_json(), "dimension": ch.dimension()}]


def _tilting_worker(datum_json, p, pkl_path, mus):
    g = AffineWeylGroup(build_root_datum(datum_json))
    table = _table(g, p, pkl_path)
    return [_row_record(g, multiplicity_row(tuple(mu), table), table) for mu in mus]


def cmd_tilting_table(args):
    rd = _load_datum(args.datum)
    _positive("max-pairing", args.max_pairing)
    g = AffineWeylGroup(rd)
    _table(g, args.p, args.pkl)  # validate the file once, before fanning out
    mus = sorted(rd.dominant_weights(args.max_pairing))
    records = _parallel(_tilting_worker, [list(mu) for mu in mus], args.jobs,
                        json.dumps(rd.to_json()), args.p, args.pkl)
    return sorted(records, key=lambda r: r["mu"])


def cmd_dims(args):
    rd = _load_datum(args.datum)
    mu = _weight(rd, args.mu)
    rec = {"mu": list(mu), "orbit_dimension": satake.orbit_dimension(rd, mu),
           "component": list(satake.component_of(rd, mu)),
           "component_group": list(satake.component_moduli(rd)),
           "weight_functor_degree": satake.weight_functor_degree(rd, mu)}
    if args.lam is not None:
        lam = _weight(rd, args.lam)
        rec["lambda"] = list(lam)
        rec["mv_dimension"] = satake.mv_dimension(rd, lam, mu)
        rec["lambda_component"] = list(satake.component_of(rd, lam))
    return [rec]


def cmd_lusztig_char(args):
    rd = _load_datum(args.datum)
    g = AffineWeylGroup(rd)
    if (args.w is None) == (args.mu is None):
        raise UsageError("give exactly one of --w and --mu")
    if args.mu is not None:
        lam, w = g.weight_to_block(_weight(rd, args.mu), args.p)
        if any(lam):
            raise UsageError(f"{args.mu} is not in the block of 0 (its block is {list(lam)})")
    else:
        w = g.from_word(_ints(args.w))
    res = lusztig_simple_character(g, w, args.p)
    zero = (0,) * rd.dim
    return [{"w": g.to_json(w), "weight": list(g.dot(w, zero, args.p)),
             "terms": [[list(nu), c] for nu, c in res.terms.items()],
             "character": res.character.to_json(), "dimension": res.character.dimension(),
             "in_regime": res.in_regime, "conjectural": res.conjectural}]


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alcove-tilt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, p=False, datum=True):
        sp = sub.add_parser(name, help=help_text)
        if datum:
            sp.add_argument("--datum", default="A1-adjoint",
                            help="preset name, JSON text or JSON file (default A1-adjoint)")
        if p:
            sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.set_defaults(func=fn)
        return sp

    add("root-info", cmd_root_info, "constants of a root datum")
    sp = add("weyl-char", cmd_weyl_char, "Weyl character of N(lambda)")
    sp.add_argument("--lambda", dest="lam", required=True, help="dominant coweight, e.g. 1,1")
    sp = add("alcove", cmd_alcove, "facet containing a point", p=True)
    sp.add_argument("--classify", required=True, help="point, e.g. 2 or 1/2,0")
    sp = add("kl", cmd_kl, "Kazhdan-Lusztig polynomials")
    sp.add_argument("--affine", action="store_true", help="use the affine group (default: finite W)")
    sp.add_argument("--max-length", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--emit-pkl", type=int, metavar="P",
                    help="write the ordinary table as a pkl/1 file for prime P instead")
    sp = add("pkl-validate", cmd_pkl_validate, "validate a pkl/1 file", datum=False)
    sp.add_argument("file")
    sp = add("blocks", cmd_blocks, "linkage blocks of dominant weights", p=True)
    sp.add_argument("--max-pairing", type=int, required=True, help="bound on <mu, 2rho>")
    sp = add("tilting-char", cmd_tilting_char, "tilting multiplicities and character", p=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--pkl", help="pkl/1 file (default: ordinary KL fallback)")
    sp = add("tilting-table", cmd_tilting_table, "multiplicity rows for all small weights", p=True)
    sp.add_argument("--max-pairing", type=int, required=True, help="bound on <mu, 2rho>")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--pkl", help="pkl/1 file (default: ordinary KL fallback)")
    sp = add("dims", cmd_dims, "orbit and MV dimensions, component labels")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--lambda", dest="lam")
    sp = add("lusztig-char", cmd_lusztig_char, "Lusztig's character formula", p=True)
    sp.add_argument("--w", help="canonical word of w, e.g. 1,0 (empty for the identity)")
    sp.add_argument("--mu", help="weight w.0 instead of w")
    return parser


_VECTOR_OPTIONS = ("--mu", "--lambda", "--classify", "--w")
_NEGATIVE = re.compile(r"-\d[\d/,\-]*")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--mu -1,2`` into ``--mu=-1,2`` so argparse does not read it as a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VECTOR_OPTIONS and i + 1 < len(argv) and _NEGATIVE.fullmatch(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def run(argv: list[str] | None = None) -> int:
    """Execute one subcommand; returns the exit status."""
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        if getattr(args, "p", None) is not None and args.p < 2:
            raise UsageError("--p must be at least 2")
        records = args.func(args)
        if records is not None:
            _emit(args, records)
        return 0
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (OutsideFrontier, PKLValidationError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (AlcoveTiltError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
