"""Command line front end.

Subcommands: show, genset, verify, betti, scan, counts.
Exit codes: 0 success / PASS, 1 mathematical FAIL, 2 budget refusal,
3 usage error.  A scan that finds counterexamples still exits 0: they are
results, not errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import gensets, verify
from .gensets import (
    algorithm_g,
    column_elimination,
    count_table,
    count_table_text,
    family_set,
    first_reduction,
    principal_reduction,
    tanisaki,
)
from .partition import (
    Partition,
    antidiagonal_filling,
    conjectured_cells,
    regular_filling,
    weyman_diagram,
)
from .verify import (
    DEFAULT_COLUMN_CAP,
    DEFAULT_MEMORY_CAP,
    SCHEMA_VERSION,
    BudgetError,
    betti_counts,
    check_conjecture,
    ideal_equal,
    scan,
)

ENV_PREFIX = "DPIDEALS_"

BUILDERS = {
    "tanisaki": tanisaki,
    "first": first_reduction,
    "principal": principal_reduction,
    "columns": column_elimination,
    "family": family_set,
    "algorithm": lambda lam: algorithm_g(lam).G,
}


def _env(name, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _add_common(p, with_partition=True):
    if with_partition:
        p.add_argument(
            "-p", "--partition", required=True,
            help='partition text, e.g. "4,4,2,1" or "5,4^2,3"',
        )
    p.add_argument(
        "--format", choices=["text", "json", "csv"],
        default=_env("FORMAT", "text"),
    )
    p.add_argument("--out", default=None, help="write the report to a file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--exact", dest="engine", action="store_const", const="exact",
        help="authoritative rational arithmetic",
    )
    mode.add_argument(
        "--modular", dest="engine", action="store_const", const="modular",
        help="two-prime modular arithmetic (default)",
    )
    p.set_defaults(engine=_env("ENGINE", "modular"))
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument(
        "--column-cap", type=int,
        default=int(_env("COLUMN_CAP", DEFAULT_COLUMN_CAP)),
    )
    p.add_argument(
        "--memory-cap", type=int,
        default=int(_env("MEMORY_CAP", DEFAULT_MEMORY_CAP)),
    )
    p.add_argument("--jobs", type=int, default=int(_env("JOBS", 1)))
    p.add_argument("--seed", type=int, default=int(_env("SEED", 0)))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dpideals",
        description="Generating sets for De Concini-Procesi ideals: "
        "builders, reductions and graded verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="render a filling or the Weyman diagram")
    _add_common(p)
    p.add_argument(
        "--what", choices=["regular", "antidiagonal", "weyman"], default="regular"
    )

    p = sub.add_parser("genset", help="build and list a generating set")
    _add_common(p)
    p.add_argument("--builder", choices=sorted(BUILDERS), default="tanisaki")
    p.add_argument(
        "--polys", action="store_true", help="list every polynomial, not just counts"
    )

    p = sub.add_parser("verify", help="ideal equality of two builders")
    _add_common(p)
    p.add_argument("builder_a", choices=sorted(BUILDERS))
    p.add_argument("builder_b", choices=sorted(BUILDERS))

    p = sub.add_parser("betti", help="minimal generator counts per degree")
    _add_common(p)
    p.add_argument("--builder", choices=sorted(BUILDERS), default="tanisaki")

    p = sub.add_parser("scan", help="diagonal-conjecture scan over all partitions of n")
    _add_common(p, with_partition=False)
    p.add_argument("-n", type=int, required=True, dest="n")

    p = sub.add_parser("counts", help="per-column count table, no polynomials")
    _add_common(p)
    return ap


def _emit(args, text_form: str, json_obj, csv_rows=None) -> None:
    if args.format == "json":
        out = json.dumps(json_obj, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "degree", "builder", "count", "kind"])
        for row in csv_rows or []:
            writer.writerow(row)
        out = buf.getvalue()
    else:
        out = text_form + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _partition(args) -> Partition:
    return Partition.parse(args.partition)


def _quote(lam: Partition) -> str:
    return str(lam)


def cmd_show(args) -> int:
    lam = _partition(args)
    if args.what == "regular":
        f = regular_filling(lam)
        _emit(args, f.ascii(), {"schema_version": SCHEMA_VERSION, **f.to_json()})
    elif args.what == "antidiagonal":
        f = antidiagonal_filling(lam)
        _emit(args, f.ascii(), {"schema_version": SCHEMA_VERSION, **f.to_json()})
    else:
        wd = weyman_diagram(lam)
        marked = conjectured_cells(lam)
        obj = {"schema_version": SCHEMA_VERSION, **wd.to_json()}
        obj["conjectured_cells"] = sorted([list(c) for c in marked])
        _emit(args, wd.ascii(marked), obj)
    return 0


def cmd_genset(args) -> int:
    lam = _partition(args)
    if args.builder == "algorithm":
        state = algorithm_g(lam)
        rows = [
            (_quote(lam), d, "algorithm", c, "generators")
            for d, c in sorted(state.G.counts_by_degree().items())
        ]
        obj = {"schema_version": SCHEMA_VERSION, **state.to_json()}
        _emit(args, state.text(), obj, rows)
        return 0
    builder = BUILDERS[args.builder]
    gs = builder(lam)
    if gs is None:
        _emit(
            args,
            f"partition {lam}: not a recognized family",
            {"schema_version": SCHEMA_VERSION, "partition": list(lam.parts),
             "builder": "family", "recognized": False},
        )
        return 0
    rows = [
        (_quote(lam), d, gs.builder, c, "generators")
        for d, c in sorted(gs.counts_by_degree().items())
    ]
    obj = {"schema_version": SCHEMA_VERSION, **gs.to_json()}
    _emit(args, gs.text(with_polys=args.polys), obj, rows)
    return 0


def cmd_verify(args) -> int:
    lam = _partition(args)
    sets = []
    for name in (args.builder_a, args.builder_b):
        gs = BUILDERS[name](lam)
        if gs is None:
            sys.stderr.write(f"{name}: partition {lam} is not a recognized family\n")
            return 3
        sets.append(gs)
    rep = ideal_equal(
        sets[0], sets[1], engine=args.engine,
        column_cap=args.column_cap, memory_cap=args.memory_cap, seed=args.seed,
    )
    verdict = "PASS" if rep.equal else "FAIL"
    text = (
        f"partition {lam}: {args.builder_a} vs {args.builder_b}: {verdict} "
        f"({rep.checked} memberships checked, engine {rep.engine})"
    )
    if not rep.equal:
        text += f"\nfirst failing membership: {rep.failures[0]}"
    obj = {
        "schema_version": SCHEMA_VERSION,
        "partition": list(lam.parts),
        "pair": [args.builder_a, args.builder_b],
        **rep.to_json(),
    }
    _emit(args, text, obj)
    return 0 if rep.equal else 1


def cmd_betti(args) -> int:
    lam = _partition(args)
    gs = BUILDERS[args.builder](lam)
    if gs is None:
        sys.stderr.write(f"partition {lam} is not a recognized family\n")
        return 3
    rep = betti_counts(
        gs, max_degree=args.max_degree, engine=args.engine,
        column_cap=args.column_cap, memory_cap=args.memory_cap, seed=args.seed,
    )
    rows = [
        (_quote(lam), d, gs.builder, b, "minimal")
        for d, b in sorted(rep.betas.items())
    ]
    _emit(args, rep.text(), rep.to_json(), rows)
    return 0


def cmd_scan(args) -> int:
    def progress(v):
        sys.stderr.write(
            f"scanned {v.partition}: "
            + ("COUNTEREXAMPLE\n" if v.counterexample else "ok\n")
        )
        sys.stderr.flush()

    verdicts = scan(
        args.n, engine=args.engine, column_cap=args.column_cap,
        memory_cap=args.memory_cap, seed=args.seed, progress=progress,
    )
    flagged = [v.partition for v in verdicts if v.counterexample]
    text = "\n".join(v.text() for v in verdicts)
    text += "\nflagged: " + (", ".join(str(p) for p in flagged) or "(none)")
    obj = {
        "schema_version": SCHEMA_VERSION,
        "n": args.n,
        "verdicts": [v.to_json() for v in verdicts],
        "flagged": [list(p.parts) for p in flagged],
    }
    rows = []
    for v in verdicts:
        for d in sorted(v.conjectured):
            rows.append((_quote(v.partition), d, "scan", v.conjectured[d], "conjectured"))
            rows.append((_quote(v.partition), d, "scan", v.actual.get(d, ""), "actual"))
    _emit(args, text, obj, rows)
    return 0


def cmd_counts(args) -> int:
    lam = _partition(args)
    rep = count_table(lam)
    rows = []
    for col, c in sorted(rep["principal"].items()):
        rows.append((_quote(lam), col, "principal", c, "column"))
    for col, c in sorted(rep["eliminated"].items()):
        rows.append((_quote(lam), col, "columns", c, "column"))
    _emit(args, count_table_text(rep), {"schema_version": SCHEMA_VERSION, **rep}, rows)
    return 0


COMMANDS = {
    "show": cmd_show,
    "genset": cmd_genset,
    "verify": cmd_verify,
    "betti": cmd_betti,
    "scan": cmd_scan,
    "counts": cmd_counts,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 3 if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.command](args)
    except BudgetError as exc:
        sys.stderr.write(f"budget refusal: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
