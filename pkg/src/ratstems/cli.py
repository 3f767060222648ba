"""Command-line front end.

Ten subcommands expose the library: ``stems`` (one degree or a box
scan, every method cross-checked), ``sphere`` (homology table of a
virtual representation sphere), ``point-presentation``, ``burnside``
(basis, marks and idempotents of one level), ``bgs1`` / ``bgsigma2`` /
``bgu`` (classifying-space tables and diagrams), ``torus-check``
(maximal-torus comparisons for U(m) and SU(2)), ``consistency`` (the
two B_G Sigma_2 candidates) and ``selftest``.

Output is line-oriented text with `` | `` separated fields, or JSON
lines under ``--format records``; ``--out PATH`` tees the output to a
file.
Exit codes: 0 on success (including comparisons whose documented
verdict is FAILS), 1 when mathematics breaks (method disagreement,
ambiguous tuple decoding, a non-sign-isotypic Weyl module, selftest
failure), 2 on usage or syntax errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Any, Callable, Iterator, Mapping, Sequence

from . import __version__
from .burnside import BurnsideElement, from_marks, idempotents
from .classifying import (bgs1_presentation, bsigma2_consistency, collapse,
                          collapse_expand, fixed_point_data, gm_assemble,
                          torus_check_su2, torus_check_u)
from .mackey import MackeyClass, NonSignIsotypicError
from .rolattice import DegreeSyntaxError, VirtualRep, parse_degree
from .stems import (STEM_METHODS, SectorElement, TupleAmbiguityError,
                    lattice_mismatches, point_presentation, sphere_homology)


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation: subcommand name, output format and sink,
    plus the subcommand's own parameters.  Fully deterministic (there
    is no seed anywhere in the library)."""

    command: str
    format: str
    out: str | None
    params: Mapping[str, Any]

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        skip = {"command", "format", "out", "handler"}
        params = {k: v for k, v in vars(ns).items() if k not in skip}
        return cls(command=ns.command,
                   format=getattr(ns, "format", "text"),
                   out=getattr(ns, "out", None),
                   params=params)

    def __getattr__(self, name: str) -> Any:
        # convenience so handlers can say cfg.n, cfg.maxdeg, ...
        if name.startswith("_") or name == "params":
            raise AttributeError(name)
        try:
            return self.params[name]
        except KeyError:
            raise AttributeError(name) from None


def box_degrees(n: int, bound: int) -> Iterator[VirtualRep]:
    """All degrees with coordinates in [-bound, bound]: d, then s, then
    the rotation coefficients (for n = 0 only d exists)."""
    for coords in product(range(-bound, bound + 1), repeat=n + 1):
        if n == 0:
            yield VirtualRep(0, coords[0], 0, ())
        else:
            yield VirtualRep(n, coords[0], coords[1], tuple(coords[2:]))


def compare_methods(n: int, bound: int,
                    methods: Mapping[str, Callable[[VirtualRep], MackeyClass]] | None = None,
                    ) -> tuple[int, list[tuple[VirtualRep, dict[str, MackeyClass]]]]:
    """Evaluate every stem method over the coordinate box and collect
    the degrees where they disagree.  ``methods`` may replace the
    default method table, which is how the negative-control tests make
    sure a genuine disagreement cannot slip through."""
    table = dict(STEM_METHODS if methods is None else methods)
    if not table:
        raise ValueError("need at least one method")
    checked = 0
    disagreements = []
    for v in box_degrees(n, bound):
        results = {name: fn(v) for name, fn in table.items()}
        checked += 1
        if len(set(results.values())) > 1:
            disagreements.append((v, results))
    return checked, disagreements


def sector_to_burnside(elem: SectorElement) -> BurnsideElement:
    """The degree-0 bridge: a sector element of trivial degree is a
    Burnside element, each sector line mapping to the transferred
    top idempotent of its own level."""
    if elem.degree != VirtualRep.zero(elem.n):
        raise ValueError("only degree-0 elements live in the Burnside algebra")
    out = BurnsideElement.zero(elem.n, elem.level)
    for i, q in elem.coeffs:
        e = idempotents(elem.n, i)[i]
        for _ in range(elem.level - i):
            e = e.tr()
        out = out + e.scale(q)
    return out


# ---------------------------------------------------------------------------
# Selftest battery.

def _check_three_way(n_max: int, box: int) -> str | None:
    for n in range(1, n_max + 1):
        checked, bad = compare_methods(n, box)
        if bad:
            v, results = bad[0]
            got = ", ".join(f"{k}={results[k]}" for k in sorted(results))
            return f"n={n}: {len(bad)}/{checked} degrees disagree, first {v}: {got}"
    return None


def _check_burnside(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        for i in range(n + 1):
            basis = [BurnsideElement.one(n, i)] + [
                BurnsideElement.x(n, i, j) for j in range(i)]
            sample = basis[0]
            for pos, b in enumerate(basis):
                sample = sample + b.scale(Fraction(pos + 1, 2))
            if from_marks(n, i, sample.marks()) != sample:
                return f"marks round trip fails at n={n} level {i}"
            es = idempotents(n, i)
            for h, e in enumerate(es):
                for k, f in enumerate(es):
                    want = e if h == k else BurnsideElement.zero(n, i)
                    if e * f != want:
                        return f"idempotents not orthogonal at n={n} level {i}"
            if i < n:
                for a in basis:
                    if a.tr().res(i) != a.scale(2):
                        return f"res after tr is not doubling at n={n} level {i}"
                    for b in [BurnsideElement.one(n, i + 1)] + [
                            BurnsideElement.x(n, i + 1, j) for j in range(i + 1)]:
                        if (a * b.res(i)).tr() != a.tr() * b:
                            return f"Frobenius fails at n={n} level {i}"
    return None


def _check_sector_bridge(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        for h in range(n + 1):
            elems = [SectorElement.unit(n, h)]
            for i in range(h + 1):
                e = SectorElement.y_class(n, i)
                for _ in range(h - i):
                    e = e.tr()
                elems.append(e)
            for a in elems:
                for b in elems:
                    lhs = sector_to_burnside(a * b)
                    rhs = sector_to_burnside(a) * sector_to_burnside(b)
                    if lhs != rhs:
                        return f"degree-0 products disagree at n={n} level {h}"
            if h < n:
                for a in elems:
                    if sector_to_burnside(a.tr()) != sector_to_burnside(a).tr():
                        return f"transfer bridge fails at n={n} level {h}"
            if h > 0:
                for a in elems:
                    if sector_to_burnside(a.res(h - 1)) != sector_to_burnside(a).res(h - 1):
                        return f"restriction bridge fails at n={n} level {h}"
    return None


def _check_lattices(n_max: int, box: int) -> str | None:
    for n in range(1, n_max + 1):
        bad = lattice_mismatches(n, box)
        if bad:
            return f"n={n}: {bad[0]}"
    return None


def _check_circle(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        pres = bgs1_presentation(n, 8)
        assembled = gm_assemble(fixed_point_data("bs1", n, 8))
        if pres.table != assembled:
            return f"presentation table differs from assembly at n={n}"
        for m, elem in pres.completion:
            if m >= 1 and not elem.res(m - 1).is_zero():
                return f"completion element of conductor {m} does not restrict to 0"
    return None


def _check_torus(n_max: int) -> str | None:
    if not torus_check_u(min(n_max, 2), 2, 12).holds():
        return "U(2) torus comparison fails"
    if not torus_check_su2(1).holds():
        return "SU(2) comparison should hold at n=1"
    if n_max >= 2 and torus_check_su2(2).holds():
        return "SU(2) comparison unexpectedly holds at n=2"
    for n in range(1, n_max + 1):
        if not torus_check_su2(n, action="permutation").holds():
            return f"orbit-corrected SU(2) comparison fails at n={n}"
    return None


def _check_collapse(s_max: int) -> str | None:
    from .classifying import _poly_eval

    for s in range(1, s_max + 1):
        pres = collapse(s)
        f = tuple(Fraction(c) for c in range(s + 1))
        expansion = collapse_expand(f, s)
        for x in range(s + 1):
            direct = _poly_eval(f, Fraction(x))
            recon = expansion[0]
            for i in range(1, s + 1):
                recon += expansion[i] * _poly_eval(pres.idempotent(i), Fraction(x))
            if direct != recon:
                return f"collapse expansion breaks at s={s}, eigenvalue {x}"
    return None


def _check_negative_control() -> str | None:
    broken = dict(STEM_METHODS)
    broken["sector"] = lambda v: MackeyClass.zero(v.n)
    _, bad = compare_methods(1, 1, broken)
    if not bad:
        return "a corrupted method went undetected"
    return None


def run_selftest(deep: bool = False) -> tuple[list[str], list[dict], int]:
    n_max, box = (3, 3) if deep else (2, 2)
    checks: list[tuple[str, Callable[[], str | None]]] = [
        ("three_way_agreement", lambda: _check_three_way(n_max, box)),
        ("burnside_axioms", lambda: _check_burnside(n_max + 1)),
        ("sector_burnside_bridge", lambda: _check_sector_bridge(n_max)),
        ("fixed_point_lattices", lambda: _check_lattices(n_max, box)),
        ("circle_presentation", lambda: _check_circle(n_max)),
        ("torus_comparisons", lambda: _check_torus(n_max)),
        ("collapse_roundtrip", lambda: _check_collapse(8 if deep else 5)),
        ("negative_control", _check_negative_control),
    ]
    rows, records, status = [], [], 0
    for name, fn in checks:
        detail = fn()
        ok = detail is None
        rows.append(f"check={name} | status={'ok' if ok else 'FAIL'}"
                    + ("" if ok else f" | detail={detail}"))
        records.append({"check": name, "ok": ok, "detail": detail})
        if not ok:
            status = 1
    rows.append(f"checks={len(checks)} | failed={sum(1 for r in records if not r['ok'])}")
    records.append({"checks": len(checks),
                    "failed": sum(1 for r in records if not r.get("ok", True))})
    return rows, records, status


# ---------------------------------------------------------------------------
# Subcommand handlers.  Each returns (rows, records, exit status).

def _class_record(cls: MackeyClass) -> dict:
    rec = cls.to_record()
    rec["text"] = str(cls)
    return rec


def cmd_stems(args) -> tuple[list[str], list[dict], int]:
    names = [args.method] if args.method else sorted(STEM_METHODS)
    table = {name: STEM_METHODS[name] for name in names}
    rows, records = [], []
    if args.degree is not None:
        v = parse_degree(args.degree, args.n)
        results = {name: fn(v) for name, fn in table.items()}
        agree = len(set(results.values())) == 1
        cols = " | ".join(f"{name}={results[name]}" for name in names)
        rows.append(f"n={args.n} | degree={v} | {cols} | agree={'yes' if agree else 'no'}")
        records.append({"command": "stems", "n": args.n, "degree": str(v),
                        "results": {name: _class_record(results[name]) for name in names},
                        "agree": agree})
        return rows, records, 0 if agree else 1
    checked, bad = compare_methods(args.n, args.scan, table)
    for v, results in bad:
        cols = " | ".join(f"{name}={results[name]}" for name in names)
        rows.append(f"degree={v} | {cols} | agree=no")
        records.append({"command": "stems", "n": args.n, "degree": str(v),
                        "results": {name: _class_record(results[name]) for name in names},
                        "agree": False})
    rows.append(f"n={args.n} | scanned={checked} | disagreements={len(bad)}")
    records.append({"command": "stems", "n": args.n, "scanned": checked,
                    "disagreements": len(bad)})
    return rows, records, 1 if bad else 0


def cmd_sphere(args) -> tuple[list[str], list[dict], int]:
    v = parse_degree(args.rep, args.n)
    table = sphere_homology(v)
    rows, records = [], []
    for d in table.degrees():
        cls = table.get(d)
        dims = [cls.level_dim(h) for h in range(args.n + 1)]
        rows.append(f"degree={d} | class={cls} | level_dims=" + ",".join(map(str, dims)))
        records.append({"command": "sphere", "n": args.n, "sphere": str(v),
                        "degree": d, "class": _class_record(cls), "level_dims": dims})
    return rows, records, 0


def cmd_point_presentation(args) -> tuple[list[str], list[dict], int]:
    pres = point_presentation(args.n)
    rows, records = [], []
    for g in pres.generators:
        rows.append(f"family={g.family} | sector={g.sector} | degree={g.degree} | "
                    f"name={g.name} | partner={g.partner} | spans={g.spans()}")
        records.append({"command": "point-presentation", "kind": "generator",
                        "family": g.family, "sector": g.sector,
                        "lam_index": g.lam_index, "degree": str(g.degree),
                        "name": g.name, "partner": g.partner, "spans": g.spans()})
    for rel in pres.relations:
        rows.append(f"relation={rel}")
        records.append({"command": "point-presentation", "kind": "relation",
                        "relation": rel})
    rows.append(f"normalization={pres.normalization}")
    rows.append(f"generators={pres.generator_count()}")
    records.append({"command": "point-presentation", "kind": "summary",
                    "normalization": pres.normalization,
                    "generators": pres.generator_count()})
    return rows, records, 0


def cmd_burnside(args) -> tuple[list[str], list[dict], int]:
    level = args.n if args.level is None else args.level
    basis = [("1", BurnsideElement.one(args.n, level))]
    basis += [(f"x[{level},{j}]", BurnsideElement.x(args.n, level, j))
              for j in range(level)]
    rows, records = [], []
    for name, elem in basis:
        marks = ",".join(str(q) for q in elem.marks())
        rows.append(f"element={name} | marks={marks}")
        records.append({"command": "burnside", "n": args.n, "level": level,
                        "element": name, "marks": [str(q) for q in elem.marks()]})
    for h, e in enumerate(idempotents(args.n, level)):
        rows.append(f"idempotent=e{h} | expansion={e}")
        records.append({"command": "burnside", "n": args.n, "level": level,
                        "idempotent": h, "expansion": str(e),
                        "element_record": e.to_record()})
    return rows, records, 0


def cmd_bgs1(args) -> tuple[list[str], list[dict], int]:
    pres = bgs1_presentation(args.n, args.maxdeg)
    assembled = gm_assemble(fixed_point_data("bs1", args.n, args.maxdeg))
    matches = pres.table == assembled
    rows, records = [], []
    for name, deg in pres.degrees:
        rows.append(f"generator={name} | degree={deg}")
        records.append({"command": "bgs1", "kind": "generator",
                        "name": name, "degree": deg})
    for rel in pres.relations:
        rows.append(f"relation={rel}")
        records.append({"command": "bgs1", "kind": "relation", "relation": rel})
    for m, elem in pres.completion:
        rows.append(f"completion | conductor={m} | element={elem}")
        records.append({"command": "bgs1", "kind": "completion", "conductor": m,
                        "element": str(elem), "element_record": elem.to_record()})
    for d in pres.table.degrees():
        rows.append(f"degree={d} | class={pres.table.get(d)}")
        records.append({"command": "bgs1", "kind": "table", "degree": d,
                        "class": _class_record(pres.table.get(d))})
    rows.append(f"top_series={pres.top_series()}")
    rows.append(f"matches_assembly={'yes' if matches else 'no'}")
    records.append({"command": "bgs1", "kind": "summary", "n": args.n,
                    "maxdeg": args.maxdeg, "top_series": str(pres.top_series()),
                    "matches_assembly": matches})
    return rows, records, 0 if matches else 1


def cmd_bgsigma2(args) -> tuple[list[str], list[dict], int]:
    diagram = fixed_point_data("bsigma2", args.n, args.maxdeg)
    table = gm_assemble(diagram)
    rows, records = [], []
    for h in range(args.n + 1):
        rows.append(f"level={h} | components={diagram.level(h).count()}")
        records.append({"command": "bgsigma2", "kind": "level", "level": h,
                        "components": diagram.level(h).count()})
    for d in table.degrees():
        cls = table.get(d)
        dims = [cls.level_dim(h) for h in range(args.n + 1)]
        rows.append(f"degree={d} | class={cls} | level_dims=" + ",".join(map(str, dims)))
        records.append({"command": "bgsigma2", "kind": "table", "degree": d,
                        "class": _class_record(cls), "level_dims": dims})
    return rows, records, 0


def cmd_bgu(args) -> tuple[list[str], list[dict], int]:
    diagram = fixed_point_data("bu", args.n, args.maxdeg, m=args.m)
    rows, records = [], []
    for h in range(args.n + 1):
        level = diagram.level(h)
        rows.append(f"level={h} | components={level.count()} | "
                    f"series={level.total_series()}")
        records.append({"command": "bgu", "kind": "level", "n": args.n, "m": args.m,
                        "level": h, "components": level.count(),
                        "series": str(level.total_series())})
    return rows, records, 0


def cmd_torus_check(args) -> tuple[list[str], list[dict], int]:
    rows, records = [], []
    if args.lie == "um":
        result = torus_check_u(args.n, args.m, args.maxdeg)
        for h, lhs, rhs in result.levels:
            match = "yes" if lhs == rhs else "no"
            rows.append(f"level={h} | lhs={lhs} | rhs={rhs} | match={match}")
            records.append({"command": "torus-check", "lie": "um", "n": args.n,
                            "m": args.m, "level": h, "lhs": str(lhs),
                            "rhs": str(rhs), "match": lhs == rhs})
        rows.append(f"verdict={result.verdict()}")
        records.append({"command": "torus-check", "lie": "um", "n": args.n,
                        "m": args.m, "verdict": result.verdict()})
        return rows, records, 0 if result.holds() else 1
    result = torus_check_su2(args.n, action=args.su2_torus_action)
    rows.append(f"action={result.action} | lhs={result.lhs}"
                f" | rhs={result.rhs} | verdict={result.verdict()}")
    records.append({"command": "torus-check", "lie": "su2", "n": args.n,
                    "action": result.action, "lhs": result.lhs,
                    "rhs": result.rhs, "verdict": result.verdict()})
    return rows, records, 0


def cmd_consistency(args) -> tuple[list[str], list[dict], int]:
    comp = bsigma2_consistency(args.n, args.maxdeg)
    rows, records = [], []
    for degree, level, da, dq in comp.differences:
        rows.append(f"degree={degree} | level={level} | assembled={da} | quotient={dq}")
        records.append({"command": "consistency", "target": args.target,
                        "n": args.n, "degree": degree,
                        "level": level, "assembled": da, "quotient": dq})
    agree = "yes" if comp.agree() else "no"
    rows.append(f"differences={len(comp.differences)} | agree={agree}")
    records.append({"command": "consistency", "target": args.target, "n": args.n,
                    "differences": len(comp.differences), "agree": comp.agree()})
    return rows, records, 0


def cmd_selftest(args) -> tuple[list[str], list[dict], int]:
    return run_selftest(deep=args.deep)


# ---------------------------------------------------------------------------
# Parser plumbing.

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratstems",
        description="Exact rational equivariant stable stems for cyclic 2-groups.")
    parser.add_argument("--version", action="version", version=f"ratstems {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "records"], default="text",
                        help="text rows (default) or one JSON record per row")
    common.add_argument("--out", metavar="PATH",
                        help="also write the output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stems", parents=[common],
                       help="compute one stem, or scan a coordinate box, "
                            "cross-checking all methods")
    p.add_argument("--n", type=int, required=True, help="group exponent")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--degree", help='virtual degree, e.g. "1 - 1*sigma"')
    mode.add_argument("--scan", type=int, metavar="BOUND",
                      help="scan all degrees with coordinates in [-BOUND, BOUND]")
    p.add_argument("--method", choices=sorted(STEM_METHODS),
                   help="use a single method (default: run and compare all)")
    p.set_defaults(handler=cmd_stems)

    p = sub.add_parser("sphere", parents=[common],
                       help="homology table of a virtual representation sphere")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True,
                   help='virtual representation, e.g. "2*sigma - l0"')
    p.set_defaults(handler=cmd_sphere)

    p = sub.add_parser("point-presentation", parents=[common],
                       help="generators and relations of the point ring")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_point_presentation)

    p = sub.add_parser("burnside", parents=[common],
                       help="basis, marks and idempotents of one Burnside level")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, help="subgroup level (default: top)")
    p.set_defaults(handler=cmd_burnside)

    p = sub.add_parser("bgs1", parents=[common],
                       help="circle classifying space: presentation and table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=20, help="top cohomological degree")
    p.set_defaults(handler=cmd_bgs1)

    p = sub.add_parser("bgsigma2", parents=[common],
                       help="Sigma_2 classifying space: assembled table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=6)
    p.set_defaults(handler=cmd_bgsigma2)

    p = sub.add_parser("bgu", parents=[common],
                       help="U(m) classifying space: fixed-point diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1, help="unitary group size")
    p.add_argument("--maxdeg", type=int, default=20)
    p.set_defaults(handler=cmd_bgu)

    p = sub.add_parser("torus-check", parents=[common],
                       help="maximal-torus comparison for U(m) or SU(2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lie", choices=["um", "su2"], required=True)
    p.add_argument("--m", type=int, default=2, help="unitary group size (lie=um)")
    p.add_argument("--maxdeg", type=int, default=20)
    p.add_argument("--su2-torus-action", choices=["trivial", "permutation"],
                   default="trivial", dest="su2_torus_action",
                   help="treatment of the Weyl involution on torus components")
    p.set_defaults(handler=cmd_torus_check)

    p = sub.add_parser("consistency", parents=[common],
                       help="compare two candidate answers for one space")
    p.add_argument("target", choices=["bsigma2"],
                   help="which comparison to run")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=6)
    p.set_defaults(handler=cmd_consistency)

    p = sub.add_parser("selftest", parents=[common],
                       help="run the built-in consistency battery")
    p.add_argument("--deep", action="store_true",
                   help="larger groups and boxes (slower)")
    p.set_defaults(handler=cmd_selftest)
    return parser


def _emit(cfg: RunConfig, rows: list[str], records: list[dict]) -> None:
    if cfg.format == "records":
        text = "\n".join(json.dumps(rec, sort_keys=True) for rec in records)
    else:
        text = "\n".join(rows)
    print(text)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n", encoding="utf-8")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    cfg = RunConfig.from_namespace(args)
    try:
        rows, records, status = args.handler(cfg)
    except (TupleAmbiguityError, NonSignIsotypicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DegreeSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, rows, records)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
