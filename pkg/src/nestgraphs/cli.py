"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 user error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import __version__
from .autgroup import orbits, search
from .bicirculant import NestParams, ParameterError, build, canonical_bicirculant, canonical_params, parse_params
from .classify import (
    FAMILIES,
    enumerate_edge_transitive,
    gen_family_iii,
    girth3_oracle,
    log_stderr,
    table1_rows,
    table2_params,
    universality_predicate,
    write_census_csv,
)
from .graph import INFINITY
from .symmetry import alternets, classify, cycle_census, induced_orientation

EXIT_OK, EXIT_MISMATCH, EXIT_USER, EXIT_IO = 0, 1, 2, 3


class UserError(Exception):
    pass


@dataclass
class AnalysisReport:
    params: str
    canonical: str
    order: int
    girth: object
    bipartite: bool
    lam: int
    aut_order: int
    stab_order: int
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int
    klass: str
    alternet_count: Optional[int] = None
    certificate: str = ""
    generators: list = field(default_factory=list)
    census: dict = field(default_factory=dict)
    oracle: Optional[str] = None

    def to_json(self) -> str:
        d = asdict(self)
        if d["girth"] == INFINITY:
            d["girth"] = "inf"
        return json.dumps(d, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        d = json.loads(text)
        if d["girth"] == "inf":
            d["girth"] = INFINITY
        d["census"] = {int(k): v for k, v in d.get("census", {}).items()}
        return cls(**d)

    def lines(self) -> list:
        out = [
            f"params        {self.params}",
            f"canonical     {self.canonical}",
            f"order         {self.order}",
            f"girth         {self.girth}",
            f"bipartite     {'yes' if self.bipartite else 'no'}",
            f"lambda        {self.lam}",
            f"aut_order     {self.aut_order}",
            f"stab_order    {self.stab_order}",
            f"orbits        vertices {self.vertex_orbits}, edges {self.edge_orbits}, arcs {self.arc_orbits}",
            f"class         {self.klass}",
        ]
        if self.oracle is not None:
            out.append(f"girth-3 oracle {self.oracle}")
        if self.alternet_count is not None:
            out.append(f"alternets     {self.alternet_count}")
        for length, c in sorted(self.census.items()):
            out.append(f"{length}-cycles      N0={c['N0']} N2={c['N2']} N4={c['N4']} per-edge={c['per_edge']} "
                       f"double-counting {'ok' if c['identities'] else 'FAILS'}")
        out.append(f"certificate   {self.certificate[:32]}...")
        return out


def _parse(text: str, valence: Optional[int]):
    try:
        return parse_params(text, valence)
    except ParameterError as exc:
        raise UserError(str(exc)) from None


def _census_summary(g, n: int, length: int) -> dict:
    c = cycle_census(g, length)
    summary = {"N0": c.N0, "N2": c.N2, "N4": c.N4, "per_edge": c.per_edge if c.uniform else dict(c.per_edge)}
    if c.uniform:
        ok = (6 * n * c.per_edge == length * (c.N0 + c.N2 + c.N4)) and (4 * n * c.per_edge == 2 * c.N2 + 4 * c.N4)
    else:
        ok = False
    summary["identities"] = ok
    summary["codes"] = c.four_spoke_codes if length == 4 else c.generic_five_cycle_types
    return summary


def analyze(p, with_census: bool = True) -> AnalysisReport:
    g = build(p)
    res = search(g)
    grp = res.group
    rep = classify(g, grp)
    canon = canonical_params(p) if isinstance(p, NestParams) else canonical_bicirculant(p)
    report = AnalysisReport(
        params=str(p),
        canonical=str(canon),
        order=g.vertex_count,
        girth=rep.girth,
        bipartite=rep.bipartite,
        lam=rep.lam,
        aut_order=rep.aut_order,
        stab_order=rep.stab_order,
        vertex_orbits=rep.vertex_orbit_count,
        edge_orbits=rep.edge_orbit_count,
        arc_orbits=rep.arc_orbit_count,
        klass=rep.klass,
        certificate=res.certificate.hex(),
        generators=[gen.cycle_notation(g.vertex_name) for gen in grp.generators],
    )
    if isinstance(p, NestParams) and rep.girth == 3:
        report.oracle = str(girth3_oracle(p))
    if rep.klass == "HAT":
        report.alternet_count = alternets(induced_orientation(g, grp)[0]).count
    if with_census and isinstance(p, NestParams) and rep.edge_transitive:
        report.census = {length: _census_summary(g, p.n, length) for length in (4, 5)}
    return report


# commands --------------------------------------------------------------------

def cmd_analyze(args) -> int:
    p = _parse(args.params, args.valence)
    report = analyze(p, with_census=not args.no_census)
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(report.lines()))
        if args.generators:
            for line in report.generators:
                print(f"  {line}")
    return EXIT_OK


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_enumerate(args) -> int:
    if args.max_order % 2:
        raise UserError(f"--max-order must be even, got {args.max_order}")
    if not 3 <= args.valence <= 10:
        raise UserError(f"--valence must lie in 3..10, got {args.valence}")
    if args.out:
        # fail early on unwritable paths
        _write(args.out, "")
    rows = enumerate_edge_transitive(
        args.max_order, args.valence, jobs=args.jobs, max_length=args.max_length,
        progress=None if args.quiet else log_stderr,
    )
    text = write_census_csv(rows, args.valence)
    if args.out:
        _write(args.out, text)
        report = {
            "max_order": args.max_order,
            "valence": args.valence,
            "rows": len(rows),
            "csv": args.out,
            "bipartite_orders": sorted({r.order for r in rows if r.bipartite}),
            "classes": {k: sum(1 for r in rows if r.klass == k) for k in ("AT", "HAT", "ETNotVT")},
        }
        _write(args.out + ".report.json", json.dumps(report, indent=2, sort_keys=True) + "\n")
        log_stderr(f"{len(rows)} rows written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_families(args) -> int:
    gen = FAMILIES.get(args.family)
    if gen is None:
        raise UserError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    header = ["n", "a", "b", "c", "k", "verdict", "predicted_class", "predicted_stab"]
    if args.check:
        header += ["class", "stab"]
    print(",".join(header))
    for p in gen(args.max_order):
        v = girth3_oracle(p)
        fields = [str(x) for x in p.astuple()] + [
            str(v).replace(",", ";"), v.predicted_class or "", "" if v.predicted_stab is None else str(v.predicted_stab)
        ]
        if args.check:
            g = build(p)
            rep = classify(g, search(g).group)
            fields += [rep.klass, str(rep.stab_order)]
        print(",".join(fields))
    return EXIT_OK


def cmd_alternets(args) -> int:
    p = _parse(args.params, args.valence)
    g = build(p)
    grp = search(g).group
    rep = classify(g, grp)
    if rep.klass != "HAT":
        raise UserError(f"graph is not half-arc-transitive (class {rep.klass})")
    first, second = induced_orientation(g, grp)
    part = alternets(first)
    print(f"params      {p}")
    print(f"alternets   {part.count}")
    print(f"sizes       {' '.join(str(len(c)) for c in part.classes)}")
    print(f"universal   {'yes' if part.universal else 'no'}")
    print(f"paired      {'same partition' if alternets(second).classes == part.classes else 'DIFFERENT partition'}")
    if isinstance(p, NestParams):
        v = girth3_oracle(p)
        if v.kind == "FamilyIII":
            print(f"predicted   {universality_predicate(v)} (m = {v.m})")
    if args.orientation_out:
        _write(args.orientation_out, "\n".join(first.lines(g)) + "\n")
    return EXIT_OK


def _verify_table1(max_order: int, quiet: bool) -> int:
    expected = [r for r in table1_rows() if r.order <= max_order]
    got = enumerate_edge_transitive(max_order, 6, progress=None if quiet else log_stderr)
    exp_lines = set(",".join(r.csv_fields()) for r in expected)
    got_lines = set(",".join(r.csv_fields()) for r in got)
    for line in sorted(exp_lines - got_lines):
        print(f"- {line}")
    for line in sorted(got_lines - exp_lines):
        print(f"+ {line}")
    ok = exp_lines == got_lines and len(got) == len(expected)
    print(f"table 1 up to order {max_order}: {'pass' if ok else 'FAIL'}, {len(exp_lines & got_lines)}/{len(expected)}")
    return EXIT_OK if ok else EXIT_MISMATCH


def _verify_table2() -> int:
    expected = table2_params()
    got = gen_family_iii(2000)
    for p in expected:
        if p not in got:
            print(f"- {p}")
    for p in got:
        if p not in expected:
            print(f"+ {p}")
    ok = got == expected
    print(f"table 2: {'pass' if ok else 'FAIL'}, {len(set(got) & set(expected))}/{len(expected)}")
    return EXIT_OK if ok else EXIT_MISMATCH


def _verify_search(max_order: int, quiet: bool) -> int:
    status = EXIT_OK
    for d in (7, 8, 9, 10):
        rows = enumerate_edge_transitive(max_order, d, progress=None if quiet else log_stderr)
        print(f"valence {d} up to order {max_order}: {len(rows)} edge-transitive graphs")
        for r in rows:
            print(f"+ {','.join(r.csv_fields())}")
        if rows:
            status = EXIT_MISMATCH
    print(f"search: {'pass' if status == EXIT_OK else 'FAIL'}")
    return status


def cmd_verify(args) -> int:
    if args.table == "1":
        return _verify_table1(args.max_order or 220, args.quiet)
    if args.table == "2":
        return _verify_table2()
    return _verify_search(args.max_order or (100 if args.full else 60), args.quiet)


# entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nestgraphs", description="Edge-transitive Nest graphs and bicirculants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="symmetry report for one parameter tuple")
    a.add_argument("params", help="'n;a,b,c;k' (or 'n;s1,...;k' with --valence)")
    a.add_argument("--valence", type=int)
    a.add_argument("--json", action="store_true", help="emit the structured report")
    a.add_argument("--generators", action="store_true", help="print automorphism generators")
    a.add_argument("--no-census", action="store_true", help="skip the 4/5-cycle census")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="isomorph-free edge-transitive census")
    e.add_argument("--max-order", type=int, required=True)
    e.add_argument("--valence", type=int, default=6)
    e.add_argument("--out", help="CSV path; a .report.json is written alongside")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--max-length", type=int, help="longest closed-walk length in the pre-filter")
    e.add_argument("--quiet", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("families", help="list members of an infinite family")
    f.add_argument("--family", required=True, help="at1, at2, g3-ii or g3-iii")
    f.add_argument("--max-order", type=int, required=True)
    f.add_argument("--check", action="store_true", help="also compute class and stabilizer")
    f.set_defaults(func=cmd_families)

    t = sub.add_parser("alternets", help="alternets of a half-arc-transitive graph")
    t.add_argument("params")
    t.add_argument("--valence", type=int)
    t.add_argument("--orientation-out", help="write the first orientation as 'u0>u1' lines")
    t.set_defaults(func=cmd_alternets)

    v = sub.add_parser("verify", help="recompute a reference table and diff it")
    v.add_argument("--table", required=True, choices=["1", "2", "search"])
    v.add_argument("--full", action="store_true", help="search up to order 100 (long run)")
    v.add_argument("--max-order", type=int, help="override the order bound")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USER if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
