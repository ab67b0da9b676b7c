"""Command line front end: compute | simulate | bounds | verify | gen.

Exit codes: 0 ok, 1 a proven bound was violated, 2 bad input, 3 timeout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Optional

from . import bounds
from .corpus import (
    CorpusError,
    Graph6Error,
    generate,
    parse_family,
    parse_graph6,
    stream_corpus,
    stream_lines,
    write_graph6,
)
from .forcing import closure
from .graph import INFINITE, Graph, bits, degree_profile, girth, to_mask
from .solver import ZfTimeout, zero_forcing_number

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3
SCHEMA = 1


class InputError(Exception):
    pass


def _fmt_set(mask: int) -> str:
    return "{" + ", ".join(map(str, bits(mask))) + "}"


def _girth_out(g) -> Any:
    return "inf" if g == INFINITE else g


# -- graph sources ----------------------------------------------------------

def add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--g6", metavar="STRING", help="graph6 string")
    src.add_argument("--file", metavar="PATH", help="first graph of a graph6 file ('-' for stdin)")
    src.add_argument("--gen", metavar="NAME[:PARAMS]", help="named family, e.g. cycle:6, complete_bipartite:3,3")


def load_graph(args) -> Graph:
    try:
        if args.g6 is not None:
            return parse_graph6(args.g6)
        if args.gen is not None:
            name, params = parse_family(args.gen)
            return generate(name, *params)
        if args.file is not None and args.file != "-":
            entries = stream_corpus(args.file)
        else:
            entries = stream_lines(sys.stdin)
        for entry in entries:
            if isinstance(entry, CorpusError):
                raise InputError(f"line {entry.index}: {entry.error}")
            return entry.graph
        raise InputError("no graph in input")
    except (Graph6Error, ValueError, OSError) as exc:
        raise InputError(str(exc)) from exc


# -- compute -----------------------------------------------------------------

def cmd_compute(args) -> int:
    G = load_graph(args)
    try:
        res = zero_forcing_number(G, args.time_limit, k_max=args.kmax)
    except ZfTimeout as exc:
        if args.json:
            print(json.dumps({"n": G.n, "m": G.m, "z": "timeout", "interval": [exc.lower, exc.upper]}))
        else:
            print(f"timeout: {exc.lower} <= Z <= {exc.upper}")
        return EXIT_TIMEOUT
    if args.json:
        print(json.dumps({
            "n": G.n,
            "m": G.m,
            "z": res.z,
            "witness": res.witness_list,
            "elapsed_ms": round(res.elapsed * 1000, 3),
            "subsets_tested": res.subsets_tested,
        }))
    else:
        print(f"Z = {res.z}")
        if args.witness:
            print(f"witness = {_fmt_set(res.witness)}")
    return EXIT_OK


# -- simulate ----------------------------------------------------------------

def cmd_simulate(args) -> int:
    G = load_graph(args)
    try:
        S = [int(v) for v in args.set.split(",") if v.strip()] if args.set else []
    except ValueError:
        raise InputError(f"bad vertex list {args.set!r}") from None
    for v in S:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} not in 0..{G.n - 1}")
    trace = closure(G, to_mask(S))
    print(f"graph: n={G.n} m={G.m}")
    print(f"S_0 = {_fmt_set(trace.layers[0])}  active: {_fmt_set(trace.active[0])}")
    for t in range(1, len(trace.layers)):
        forces = ", ".join(f"{v}->{w}" for v, w, r in trace.forces if r == t)
        print(f"round {t}: forces {forces}  S_{t} = {_fmt_set(trace.layers[t])}  active: {_fmt_set(trace.active[t])}")
    print(f"zero forcing set: {'yes' if trace.final == G.full else 'no'}")
    return EXIT_OK


# -- bounds ------------------------------------------------------------------

def _report_json(r: bounds.BoundReport) -> dict:
    return {
        "key": r.key,
        "kind": r.kind,
        "proven": r.proven,
        "applicable": r.applicable,
        "value": r.value,
        "raw_value": r.raw_value,
        "reason": r.reason,
        "citation": r.citation,
    }


def cmd_bounds(args) -> int:
    G = load_graph(args)
    reports = bounds.evaluate_all(G, args.kmax)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "n": G.n, "m": G.m, "bounds": [_report_json(r) for r in reports]}))
        return EXIT_OK
    print(f"n={G.n} m={G.m} girth={_girth_out(girth(G))}")
    for r in reports:
        tag = " [conjecture]" if not r.proven else ""
        if r.applicable:
            shown = f"{r.value}" + (f" (raw {r.raw_value})" if r.raw_value != r.value else "")
            status = f"{r.key}={shown}"
        else:
            status = f"{r.key} inapplicable"
        print(f"{status:<28} {r.kind:<5}  {r.reason}{tag}  -- {r.citation}")
    return EXIT_OK


# -- verify ------------------------------------------------------------------

@dataclass
class SummaryStats:
    graphs_total: int = 0
    graphs_solved: int = 0
    graphs_skipped: int = 0
    graphs_timed_out: int = 0
    parse_errors: int = 0
    proven_bound_violations: int = 0
    conjecture1_checked: int = 0
    conjecture1_violations: int = 0
    conjecture1_sharp_count: int = 0
    conjecture2_checked: int = 0
    conjecture2_violations: int = 0

    @property
    def sharp_fraction(self) -> Fraction:
        if not self.conjecture1_checked:
            return Fraction(0)
        return Fraction(self.conjecture1_sharp_count, self.conjecture1_checked)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["sharp_fraction"] = round(float(self.sharp_fraction), 4)
        return d


def verify_graph(task: tuple[int, str, Graph, int, Optional[float], int]) -> dict:
    index, line, G, max_n, time_limit, k_max = task
    rec: dict[str, Any] = {"index": index, "graph6": line, "n": G.n, "m": G.m}
    if G.n == 0:
        rec.update(delta=None, Delta=None, girth="inf", z="skipped", witness=None, bounds=[],
                   conj_sharp=False, violations=[], conjecture_violations=[])
        return rec
    prof = degree_profile(G)
    rec.update(delta=prof.min_degree, Delta=prof.max_degree, girth=_girth_out(girth(G)))
    z = None
    if G.n > max_n:
        rec["z"] = "skipped"
        rec["witness"] = None
    else:
        try:
            res = zero_forcing_number(G, time_limit, k_max=k_max)
            z = res.z
            rec["z"] = z
            rec["witness"] = res.witness_list
        except ZfTimeout as exc:
            rec["z"] = "timeout"
            rec["witness"] = None
            rec["interval"] = [exc.lower, exc.upper]
    rows = []
    violations, conj_violations = [], []
    conj_sharp = False
    for r in bounds.evaluate_all(G, k_max):
        sat = r.satisfied_by(z) if z is not None else None
        rows.append({"key": r.key, "proven": r.proven, "applicable": r.applicable,
                     "value": r.value, "satisfied": sat})
        if sat is False:
            (violations if r.proven else conj_violations).append(r.key)
        if r.key == "conj_girth" and r.applicable and z is not None:
            conj_sharp = r.value == z
    rec.update(bounds=rows, conj_sharp=conj_sharp, violations=violations,
               conjecture_violations=conj_violations)
    return rec


def _summarize(records: list[dict], parse_errors: int) -> SummaryStats:
    st = SummaryStats(graphs_total=len(records), parse_errors=parse_errors)
    for rec in records:
        if rec["z"] == "skipped":
            st.graphs_skipped += 1
            continue
        if rec["z"] == "timeout":
            st.graphs_timed_out += 1
            continue
        st.graphs_solved += 1
        st.proven_bound_violations += len(rec["violations"])
        for b in rec["bounds"]:
            if b["key"] == "conj_girth" and b["applicable"]:
                st.conjecture1_checked += 1
                st.conjecture1_violations += not b["satisfied"]
            if b["key"] == "conj_triangle_free" and b["applicable"]:
                st.conjecture2_checked += 1
                st.conjecture2_violations += not b["satisfied"]
        st.conjecture1_sharp_count += rec["conj_sharp"]
    return st


def records_to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "n", "m", "delta", "Delta", "girth", "z", "witness",
                *bounds.BOUND_KEYS, "conj_sharp", "violations"])
    for rec in records:
        values = {b["key"]: b["value"] for b in rec["bounds"] if b["applicable"]}
        witness = " ".join(map(str, rec["witness"])) if rec["witness"] is not None else ""
        w.writerow([rec["index"], rec["n"], rec["m"], rec["delta"], rec["Delta"], rec["girth"],
                    rec["z"], witness, *(values.get(k, "") for k in bounds.BOUND_KEYS),
                    int(rec["conj_sharp"]), ";".join(rec["violations"])])
    return buf.getvalue()


def run_verify(entries, max_n=14, time_limit=None, k_max=2, jobs=1):
    """Verify a stream of corpus entries; returns (records, errors, stats)
    with records in input order."""
    tasks, errors = [], []
    for entry in entries:
        if isinstance(entry, CorpusError):
            errors.append({"index": entry.index, "line": entry.line, "error": entry.error})
        else:
            tasks.append((entry.index, entry.line, entry.graph, max_n, time_limit, k_max))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(verify_graph, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        records = [verify_graph(t) for t in tasks]
    return records, errors, _summarize(records, len(errors))


def cmd_verify(args) -> int:
    try:
        entries = stream_lines(sys.stdin) if args.corpus == "-" else stream_corpus(args.corpus)
    except OSError as exc:
        print(f"error: cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_INPUT
    records, errors, stats = run_verify(entries, args.max_n, args.time_limit, args.kmax, args.jobs)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(records_to_csv(records))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"schema": SCHEMA, "summary": stats.as_dict(), "records": records, "errors": errors},
                      fh, indent=1)
            fh.write("\n")
    for e in errors:
        print(f"parse error at entry {e['index']}: {e['error']}", file=sys.stderr)
    for rec in records:
        if rec["violations"]:
            print(f"PROVEN BOUND VIOLATED: entry {rec['index']} ({rec['graph6']}) z={rec['z']}: "
                  f"{', '.join(rec['violations'])}")
        if rec["conjecture_violations"]:
            print(f"CONJECTURE COUNTEREXAMPLE: entry {rec['index']} ({rec['graph6']}) z={rec['z']}: "
                  f"{', '.join(rec['conjecture_violations'])}")
    for k, v in stats.as_dict().items():
        print(f"{k}: {v}")
    if stats.proven_bound_violations:
        return EXIT_VIOLATION
    if args.strict and stats.graphs_timed_out:
        return EXIT_TIMEOUT
    return EXIT_OK


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    try:
        name, params = parse_family(args.family)
        if args.count > 1 and not params:
            raise ValueError(f"{name} has no parameter to step for --count")
        for i in range(args.count):
            stepped = params[:-1] + (params[-1] + i,) if params else ()
            print(write_graph6(generate(name, *stepped)))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zeroforce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="exact zero forcing number")
    add_source(c)
    c.add_argument("--witness", action="store_true")
    c.add_argument("--json", action="store_true")
    c.add_argument("--time-limit", type=float, metavar="SECONDS")
    c.add_argument("--kmax", type=int, default=2, help="largest deletion set tried for seeding")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("simulate", help="print the forcing rounds from a colored set")
    add_source(s)
    s.add_argument("--set", default="", help="comma-separated initially colored vertices")
    s.set_defaults(func=cmd_simulate)

    b = sub.add_parser("bounds", help="evaluate every bound")
    add_source(b)
    b.add_argument("--kmax", type=int, default=2)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="check bounds and conjectures over a graph6 corpus")
    v.add_argument("corpus", help="graph6 file, one graph per line ('-' for stdin)")
    v.add_argument("--max-n", type=int, default=14)
    v.add_argument("--time-limit", type=float, metavar="SECONDS", help="per graph")
    v.add_argument("--csv", metavar="PATH")
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--kmax", type=int, default=2)
    v.add_argument("--strict", action="store_true", help="exit 3 if any graph timed out")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a named graph as graph6")
    g.add_argument("family", metavar="NAME[:PARAMS]")
    g.add_argument("--count", type=int, default=1, help="step the last parameter this many times")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
