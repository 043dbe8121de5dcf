"""Command-line front end: ``abelcover <subcommand> ...``.

Exit status is 0 on success, 1 on invalid input and 2 when the
complete-intersection search ran out of its node budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from .ci_geometry import CIError, CompleteIntersection
from .classifier import NotATower, Tower, Verdict, classify
from .covers import CoverAnalysis, CoverError, CoverSpec, CyclicProduct, ExplicitSplit, SimpleCyclic, analyze
from .enumeration import (
    CYCLIC,
    ZNZ2,
    EnumFilter,
    UnsupportedCombination,
    enumerate_configs,
)
from .families import (
    BadParity,
    FamilyError,
    OutOfBoundBox,
    family_codim3_limit1,
    family_half_limit,
    family_rational_limit,
    family_recipe,
)
from .obstruction import DEFAULT_BUDGET, CIObstruction, obstruction_report

BEHAVIOR_FLAGS = {
    "emb-a": "EmbeddingA",
    "emb-b": "EmbeddingB",
    "bir": "Birational",
    "preserved": "DegreePreserved",
    "halving": "HalvesDegree",
    "halving-smooth": "HalvesDegreeSmoothImage",
}

CSV_FIELDS = ("m", "n", "k", "l", "N", "s", "multidegree", "Lm", "Km", "pg", "summary", "ci_status", "obstruction")
MD_FIELDS = ("m", "n", "k", "l", "N", "s", "d", "K^m", "p_g", "L^m", "K^m factored", "summary", "ci_status", "obstruction")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputRow:
    m: int
    n: int
    n_total: int
    k: Optional[int]
    l: Optional[int]
    N: int
    s: int
    multidegree: list
    Lm: int
    Km: int
    Km_factored: str
    pg: int
    behaviors: list
    summary: str
    ci_status: str
    obstruction: Optional[dict]
    flags: dict


def cover_params(spec: CoverSpec) -> tuple[int, Optional[int], Optional[int]]:
    """``(n, k, l)`` as printed in table rows."""
    if isinstance(spec, SimpleCyclic):
        return spec.n, spec.k, None
    if isinstance(spec, CyclicProduct):
        (n, k), *rest = spec.factors
        l = rest[0][1] if len(rest) == 1 and rest[0][0] == 2 else None
        return n, k, l
    return spec.degree, None, None


def obstruction_dict(ob: Optional[CIObstruction]) -> Optional[dict]:
    if ob is None:
        return None
    return {
        "status": ob.status,
        "reason": ob.reason,
        "S": ob.S,
        "P": ob.P,
        "r": ob.r,
        "witnesses": [list(w) for w in ob.witnesses],
        "text": str(ob),
    }


def make_row(
    ci: CompleteIntersection,
    spec: CoverSpec,
    analysis: CoverAnalysis,
    verdict: Verdict,
    obstruction: Optional[CIObstruction],
) -> OutputRow:
    n, k, l = cover_params(spec)
    assumptions = ["Y smooth", "branch divisor smooth"]
    if isinstance(spec, ExplicitSplit):
        assumptions.append("ramification twist supplied by caller")
    if not analysis.complete_series:
        assumptions.append("smallest twist is 1: bound boxes do not apply")
    return OutputRow(
        m=analysis.m,
        n=n,
        n_total=spec.degree,
        k=k,
        l=l,
        N=ci.N,
        s=analysis.s,
        multidegree=list(ci.degrees),
        Lm=analysis.Lm,
        Km=analysis.Km,
        Km_factored=analysis.Km_factored,
        pg=analysis.pg,
        behaviors=[
            {"behavior": c.behavior, "witness": c.witness, "indices": list(c.indices), "smooth_image": c.smooth_image}
            for c in verdict.behaviors
        ],
        summary=verdict.summary,
        ci_status=str(verdict.ci_status),
        obstruction=obstruction_dict(obstruction),
        flags={
            "surface_mode": ci.surface_mode,
            "complete_series": analysis.complete_series,
            "assumptions": assumptions,
        },
    )


def row_for(ci, spec, tower=None, with_obstruction=True, **kw) -> OutputRow:
    ob = obstruction_report(ci, spec, **kw) if with_obstruction else None
    return make_row(ci, spec, analyze(ci, spec), classify(ci, spec, tower), ob)


# -- rendering -------------------------------------------------------------


def _blank(v) -> str:
    return "" if v is None else str(v)


def _flat(row: OutputRow) -> dict:
    return {
        "m": row.m,
        "n": row.n,
        "k": _blank(row.k),
        "l": _blank(row.l),
        "N": row.N,
        "s": row.s,
        "multidegree": "(" + ",".join(map(str, row.multidegree)) + ")",
        "Lm": row.Lm,
        "Km": row.Km,
        "pg": row.pg,
        "summary": row.summary,
        "ci_status": row.ci_status,
        "obstruction": "" if row.obstruction is None else row.obstruction["text"],
    }


def render_json(query: dict, rows: list[OutputRow]) -> str:
    return json.dumps({"query": query, "rows": [asdict(r) for r in rows]}, indent=2) + "\n"


def render_csv(rows: list[OutputRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_flat(row))
    return buf.getvalue()


def render_md(rows: list[OutputRow]) -> str:
    lines = ["| " + " | ".join(MD_FIELDS) + " |", "|" + "---|" * len(MD_FIELDS)]
    for row in rows:
        f = _flat(row)
        cells = [
            f["m"], f["n"], f["k"], f["l"], f["N"], f["s"], f["multidegree"],
            row.Km, row.pg, row.Lm, row.Km_factored, row.summary, row.ci_status, f["obstruction"],
        ]
        lines.append("| " + " | ".join(map(str, cells)) + " |")
    return "\n".join(lines) + "\n"


def render(fmt: str, query: dict, rows: list[OutputRow]) -> str:
    if fmt == "json":
        return render_json(query, rows)
    if fmt == "csv":
        return render_csv(rows)
    return render_md(rows)


# -- argument parsing ------------------------------------------------------


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise UsageError(f"expected a range a..b, got {text!r}") from None
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    return lo_i, hi_i


def parse_cover(text: str) -> CoverSpec:
    kind, _, body = text.partition(":")
    if kind == "cyclic":
        vals = parse_int_list(body)
        if len(vals) != 2:
            raise UsageError(f"cyclic cover needs n,k, got {body!r}")
        return SimpleCyclic(*vals)
    if kind == "product":
        factors = []
        for part in body.split(";"):
            if not part.strip():
                continue
            vals = parse_int_list(part)
            if len(vals) != 2:
                raise UsageError(f"product factor needs n,k, got {part!r}")
            factors.append(vals)
        return CyclicProduct(tuple(factors))
    if kind == "split":
        twists, sep, ram = body.rpartition(":")
        if not sep:
            raise UsageError("split cover needs twists and ramification twist: split:t1,t2,...:ram")
        try:
            ram_i = int(ram)
        except ValueError:
            raise UsageError(f"bad ramification twist {ram!r}") from None
        return ExplicitSplit(parse_int_list(twists), ram_i)
    raise UsageError(f"unknown cover kind {kind!r}: use cyclic:, product: or split:")


def parse_tower(text: str) -> Tower:
    outer, sep, l = text.rpartition(":")
    if not sep:
        raise UsageError("tower needs outer twists and inner twist: k'1,k'2,...:l")
    try:
        return Tower(parse_int_list(outer), int(l))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(parser):
    parser.add_argument("--format", choices=("md", "csv", "json"), default=argparse.SUPPRESS)
    parser.add_argument("--out", default=argparse.SUPPRESS, help="output file (default standard output)")


def _ci_flags(parser):
    parser.add_argument("--ambient", type=int, required=True, help="N, the ambient projective dimension")
    parser.add_argument("--degrees", required=True, help="multidegree d1,d2,...")
    parser.add_argument("--cover", required=True, help="cyclic:n,k | product:n1,k1;n2,k2 | split:t1,t2:ram")
    parser.add_argument("--tower", help="halving tower outer twists and inner twist, k'1,...:l")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abelcover", description="Deformations of covers of complete intersections.")
    _common(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (
        ("classify", "deformation behaviour of one configuration"),
        ("invariants", "numerical invariants of one configuration"),
    ):
        p = sub.add_parser(name, help=helptext)
        _ci_flags(p)
        _common(p)

    p = sub.add_parser("ci-check", help="can the deformed embedding be a complete intersection")
    _ci_flags(p)
    p.add_argument("--min-part", type=int, default=2)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    _common(p)

    p = sub.add_parser("enumerate", help="sweep a family")
    p.add_argument("--family", choices=(CYCLIC, ZNZ2), required=True)
    p.add_argument("--behavior", action="append", choices=sorted(BEHAVIOR_FLAGS), help="repeatable; default all")
    p.add_argument("--m-range", required=True)
    p.add_argument("--s-range", required=True, help="a..b; write --s-range=-3..-1 for negative values")
    p.add_argument("--n-range", default=None, help="cyclic order range (default 2..5 for cyclic, 2 for znz2)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--N-range", dest="N_range", default=None)
    p.add_argument("--no-bounds", action="store_true", help="do not prune with the bound boxes")
    p.add_argument("--no-obstruction", action="store_true")
    _common(p)

    fam = sub.add_parser("family", help="named infinite families")
    fsub = fam.add_subparsers(dest="family_kind", required=True, parser_class=_Parser)
    p = fsub.add_parser("codim3")
    p.add_argument("--k", type=int, required=True)
    _common(p)
    p = fsub.add_parser("rational")
    for flag in ("--a", "--b", "--k", "--l"):
        p.add_argument(flag, type=int, required=True)
    _common(p)
    p = fsub.add_parser("half")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _common(p)
    p = fsub.add_parser("recipe")
    p.add_argument("--criterion", choices=sorted(BEHAVIOR_FLAGS), required=True)
    p.add_argument("--family", choices=(CYCLIC, ZNZ2), required=True)
    for flag in ("--m", "--n", "--s", "--N"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--l", type=int, default=2)
    _common(p)
    return parser


# -- commands --------------------------------------------------------------


def _single(args) -> tuple[CompleteIntersection, CoverSpec, Optional[Tower]]:
    ci = CompleteIntersection(args.ambient, parse_int_list(args.degrees))
    spec = parse_cover(args.cover)
    tower = parse_tower(args.tower) if args.tower else None
    return ci, spec, tower


def cmd_single(args) -> list[OutputRow]:
    ci, spec, tower = _single(args)
    if args.command == "ci-check":
        if args.min_part < 1:
            raise UsageError("--min-part must be >= 1")
        if args.budget < 1:
            raise UsageError("--budget must be >= 1")
        return [row_for(ci, spec, tower, min_part=args.min_part, budget=args.budget)]
    return [row_for(ci, spec, tower)]


def cmd_enumerate(args) -> list[OutputRow]:
    behaviors = None
    if args.behavior:
        behaviors = frozenset(BEHAVIOR_FLAGS[b] for b in args.behavior)
    if args.n is not None:
        n_range = (args.n, args.n)
    elif args.n_range:
        n_range = parse_range(args.n_range)
    else:
        n_range = (2, 5) if args.family == CYCLIC else (2, 2)
    k = args.k if args.k is not None else 2
    l_range = None
    if args.family == ZNZ2:
        l = args.l if args.l is not None else 2
        l_range = (l, l)
    elif args.l is not None:
        raise UsageError("--l only applies to --family znz2")
    filt = EnumFilter(
        family=args.family,
        m_range=parse_range(args.m_range),
        s_range=parse_range(args.s_range),
        n_range=n_range,
        k_range=(k, k),
        l_range=l_range,
        N_range=parse_range(args.N_range) if args.N_range else None,
        behaviors=behaviors,
    )
    return [
        make_row(row.ci, row.spec, row.analysis, row.verdict, row.obstruction)
        for row in enumerate_configs(filt, use_bounds=not args.no_bounds, with_obstruction=not args.no_obstruction)
    ]


def cmd_family(args) -> list[OutputRow]:
    kind = args.family_kind
    if kind == "codim3":
        confs = [family_codim3_limit1(args.k)]
    elif kind == "rational":
        confs = [family_rational_limit(args.a, args.b, args.k, args.l)]
    elif kind == "half":
        confs = [family_half_limit(args.n, args.m)]
    else:
        confs = list(
            family_recipe(BEHAVIOR_FLAGS[args.criterion], args.family, args.m, args.n, args.s, args.N, args.k, args.l)
        )
    return [row_for(c.ci, c.spec) for c in confs]


COMMANDS = {
    "classify": cmd_single,
    "invariants": cmd_single,
    "ci-check": cmd_single,
    "enumerate": cmd_enumerate,
    "family": cmd_family,
}

INPUT_ERRORS = (
    UsageError,
    CIError,
    CoverError,
    NotATower,
    UnsupportedCombination,
    BadParity,
    FamilyError,
    OutOfBoundBox,
    ValueError,
)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        rows = COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    query = {k: v for k, v in vars(args).items() if k not in ("format", "out")}
    text = render(getattr(args, "format", "md"), query, rows)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if any(r.obstruction and r.obstruction["status"] == "BudgetExceeded" for r in rows):
        print("error: complete-intersection search exceeded its node budget", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
