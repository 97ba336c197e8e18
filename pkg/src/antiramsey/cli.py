"""``antiramsey`` command line: formulas, constructions, detection, verification, solving.

Machine mode prints one JSON document per run.  Exit codes: 0 success,
1 property or certificate refuted, 2 invalid input or no formula,
3 budget or resource limit exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import constructions as cons
from .core import HostGraph
from .errors import (ArcError, CertificateRefuted, InvalidInput, NotCovered, NotFound,
                     ResourceLimit)
from .formulas import ar_value, berge_ar_bounds, ex_value
from .io import format_coloring, read_coloring, write_coloring
from .motif import (MotifKind, MotifSpec, Witness, find_copy, find_rainbow, find_rainbow_naive,
                    verify_witness)
from .solver import (AR_EDGE_CAP, TURAN_EDGE_CAP, Budget, SolveStatus, ar_exact,
                     rainbow_probability, turan_exact)

EXIT_OK, EXIT_REFUTED, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

MOTIFS = [k.value for k in MotifKind]
FAMILIES = [k.value for k in cons.FamilyKind] + ["berge-blocks", "linear-path-lower", "gadget"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _add_common(p):
    p.add_argument("--human", action="store_true", help="aligned table instead of JSON")
    p.add_argument("--out", help="write the main artifact to this file")
    p.add_argument("--threads", type=int, default=1)


def _add_host(p, required=True):
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--s", type=int, required=required)


def _add_motif(p, required=True):
    p.add_argument("--motif", choices=MOTIFS, required=required)
    p.add_argument("--k", type=int, required=required, help="number of edges")


def _add_budget(p, cap):
    p.add_argument("--node-limit", type=int, default=Budget().node_limit)
    p.add_argument("--time-limit", type=float, default=Budget().time_limit)
    p.add_argument("--edge-cap", type=int, default=cap)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="antiramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formulas", help="closed-form Turán / anti-Ramsey values")
    _add_common(p)
    _add_host(p)
    _add_motif(p)
    p.add_argument("--quantity", choices=["ar", "ex", "berge-bounds"], default="ar")
    p.add_argument("--ex-berge", type=int, help="known ex(n,s,B_k) for Berge cycle bounds")

    p = sub.add_parser("construct", help="extremal families and lower-bound colorings")
    _add_common(p)
    _add_host(p)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--count", type=int, default=0)
    p.add_argument("--block-size", type=int, default=0)
    p.add_argument("--k", type=int, help="motif length for berge-blocks / linear-path-lower")
    p.add_argument("--branch", choices=["cliques", "sparse"])
    p.add_argument("--segments", help="JSON list for gadget: ints are link vertices, lists are sets")
    p.add_argument("--color", choices=["none", "rainbow-plus-one"], default="none")

    p = sub.add_parser("detect", help="search a coloring for a rainbow copy")
    _add_common(p)
    _add_motif(p)
    p.add_argument("--coloring", required=True)
    p.add_argument("--naive", action="store_true", help="use the exhaustive reference oracle")

    p = sub.add_parser("verify", help="check a certificate")
    _add_common(p)
    _add_motif(p, required=False)
    p.add_argument("--coloring")
    p.add_argument("--expect", choices=["rainbow-free", "rainbow"], default="rainbow-free")
    p.add_argument("--edge-set", help="JSON edge list (or solve-turan output) that must be copy-free")
    p.add_argument("--witness", help="Witness JSON to check")
    _add_host(p, required=False)

    for name, cap in (("solve-ar", AR_EDGE_CAP), ("solve-turan", TURAN_EDGE_CAP)):
        p = sub.add_parser(name, help=f"exact {name[6:]} number on a tiny host")
        _add_common(p)
        _add_host(p)
        _add_motif(p)
        _add_budget(p, cap)

    p = sub.add_parser("simulate", help="rainbow probability of random surjective colorings")
    _add_common(p)
    _add_host(p)
    _add_motif(p)
    p.add_argument("--c", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", help="also write rows c,trials,hits,probability")
    return parser


def _spec(args) -> MotifSpec:
    return MotifSpec(MotifKind.parse(args.motif), args.k)


def _write(path, text):
    Path(path).write_text(text)


# ---------------------------------------------------------------------------
# subcommands: each returns (exit_code, result_dict)


def cmd_formulas(args):
    m = _spec(args)
    if args.quantity == "ar":
        return EXIT_OK, ar_value(m, args.n, args.s).to_dict()
    if args.quantity == "ex":
        return EXIT_OK, ex_value(m, args.n, args.s).to_dict()
    lo, hi = berge_ar_bounds(m.kind, args.n, args.s, m.k, args.ex_berge)
    return EXIT_OK, {"lower": lo.to_dict(), "upper": hi.to_dict()}


def _family_spec(args):
    kind = cons.FamilyKind.parse(args.family)
    return cons.FamilySpec(kind, t=args.t, count=args.count, block_size=args.block_size)


def cmd_construct(args):
    host = HostGraph(args.n, args.s)
    if args.family == "gadget":
        if args.segments is None:
            raise InvalidInput("gadget needs --segments")
        try:
            segs = json.loads(args.segments)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"--segments is not JSON: {exc}") from None
        path = cons.assemble_linear_path(host, segs)
        doc = path.realized.to_dict()
        if args.out:
            _write(args.out, json.dumps(doc) + "\n")
        return EXIT_OK, {"witness": doc, "out": args.out}
    coloring = None
    if args.family in ("berge-blocks", "linear-path-lower"):
        if args.k is None:
            raise InvalidInput(f"{args.family} needs --k")
        if args.family == "berge-blocks":
            coloring = cons.berge_block_coloring(host, args.k, args.branch)
        else:
            coloring = cons.linear_path_lower_coloring(host, args.k)
    else:
        fam = cons.build_family(host, _family_spec(args))
        if args.color == "none":
            doc = [list(e) for e in fam]
            if args.out:
                _write(args.out, json.dumps(doc) + "\n")
            return EXIT_OK, {"edges": len(fam), "family": None if args.out else doc,
                             "out": args.out}
        coloring = cons.rainbow_plus_one(host, fam)
    if args.out:
        write_coloring(coloring, args.out)
    return EXIT_OK, {"colors": coloring.num_colors, "out": args.out,
                     "coloring": None if args.out else format_coloring(coloring)}


def cmd_detect(args):
    coloring = read_coloring(args.coloring)
    m = _spec(args)
    if args.naive:
        w = find_rainbow_naive(coloring, m)
    else:
        w = find_rainbow(coloring, m, threads=args.threads)
    if w is not None and args.out:
        _write(args.out, w.to_json() + "\n")
    return EXIT_OK, {"found": w is not None, "witness": w.to_dict() if w else None}


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not JSON ({exc})") from None


def cmd_verify(args):
    if args.witness:
        w = Witness.from_dict(_load_json(args.witness))
        coloring = read_coloring(args.coloring) if args.coloring else None
        host = coloring.host if coloring else (HostGraph(args.n, args.s) if args.n else None)
        ok = verify_witness(w, w.spec, coloring=coloring, host=host)
        return (EXIT_OK if ok else EXIT_REFUTED), {"valid": ok, "witness": w.to_dict()}
    if args.motif is None or args.k is None:
        raise InvalidInput("--motif and --k are required unless --witness is given")
    m = _spec(args)
    if args.edge_set:
        doc = _load_json(args.edge_set)
        if isinstance(doc, dict):
            result = doc.get("result", doc)
            doc = result.get("witness")
            n, s = result.get("n", args.n), result.get("s", args.s)
        else:
            n, s = args.n, args.s
        if n is None or s is None or not isinstance(doc, list):
            raise InvalidInput("edge set needs --n/--s and a JSON list of edges")
        host = HostGraph(n, s)
        w = find_copy(host, doc, m, threads=args.threads)
        return (EXIT_OK if w is None else EXIT_REFUTED), {
            "copy_free": w is None, "edges": len(doc), "witness": w.to_dict() if w else None}
    if not args.coloring:
        raise InvalidInput("verify needs --coloring, --edge-set or --witness")
    coloring = read_coloring(args.coloring)
    w = find_rainbow(coloring, m, threads=args.threads)
    holds = (w is None) == (args.expect == "rainbow-free")
    return (EXIT_OK if holds else EXIT_REFUTED), {
        "expect": args.expect, "holds": holds, "colors": coloring.num_colors,
        "witness": w.to_dict() if w else None}


def _solve(args, fn):
    host = HostGraph(args.n, args.s)
    budget = Budget(args.node_limit, args.time_limit)
    res = fn(host, _spec(args), budget, threads=args.threads, edge_cap=args.edge_cap)
    doc = res.to_dict()
    if args.out and res.witness is not None:
        if fn is ar_exact:
            write_coloring(res.witness, args.out)
        else:
            _write(args.out, json.dumps(doc["witness"]) + "\n")
    code = EXIT_BUDGET if res.status is SolveStatus.BudgetExceeded else EXIT_OK
    return code, doc


def cmd_solve_ar(args):
    return _solve(args, ar_exact)


def cmd_solve_turan(args):
    return _solve(args, turan_exact)


def cmd_simulate(args):
    host = HostGraph(args.n, args.s)
    m = _spec(args)
    rows = [rainbow_probability(host, m, c, args.trials, args.seed, threads=args.threads).to_dict()
            for c in args.c]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            wr = csv.DictWriter(fh, fieldnames=["c", "trials", "hits", "probability", "seed"])
            wr.writeheader()
            wr.writerows(rows)
    return EXIT_OK, {"estimates": rows}


COMMANDS = {
    "formulas": cmd_formulas,
    "construct": cmd_construct,
    "detect": cmd_detect,
    "verify": cmd_verify,
    "solve-ar": cmd_solve_ar,
    "solve-turan": cmd_solve_turan,
    "simulate": cmd_simulate,
}


def run(argv) -> tuple:
    """Parse and execute; returns (exit code, JSON-serialisable document)."""
    argv = list(argv)
    doc = {"command": argv[0] if argv else None, "config": None}
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "threads", 1) < 1:
            raise InvalidInput("--threads must be >= 1")
        doc["config"] = {k: v for k, v in vars(args).items() if k != "command"}
        code, result = COMMANDS[args.command](args)
        doc["result"] = result
    except CertificateRefuted as exc:
        code = EXIT_REFUTED
        doc["error"] = {"type": "CertificateRefuted", "message": str(exc),
                        "witness": exc.witness.to_dict() if exc.witness else None}
    except (InvalidInput, NotCovered, NotFound) as exc:
        code = EXIT_INVALID
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
    except ResourceLimit as exc:
        code = EXIT_BUDGET
        doc["error"] = {"type": "ResourceLimit", "message": str(exc)}
    except ArcError as exc:
        code = EXIT_INVALID
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
    except OSError as exc:
        code = EXIT_INVALID
        doc["error"] = {"type": "OSError", "message": str(exc)}
    doc["exit_code"] = code
    return code, doc


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, str) and "\n" in value:
        rows.append((prefix, f"<{value.count(chr(10))} lines>"))
    else:
        rows.append((prefix, json.dumps(value) if isinstance(value, list) else str(value)))


def render_human(doc) -> str:
    rows = []
    _flatten("", doc, rows)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, doc = run(argv)
    human = "--human" in argv
    print(render_human(doc) if human else json.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
