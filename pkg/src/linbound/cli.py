"""Command-line interface.

Usage:
    linbound bounds --k 14 --e 2
    linbound table --e 2 --kmax 1500 --only-gaps
    linbound construct --k 4
    linbound cosets --k 4 --n 7 --e 1
    linbound cosets --check h.txt --e 2
    linbound search --k 2 --e 2

Output is a JSON envelope unless ``--csv`` is given. Exit codes: 0 success,
2 usage, 3 infeasible or domain error, 4 cap exceeded, 5 search budget spent.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds as B
from .construct import ConstructionSpec, build_check_matrix
from .cosets import enumerate_cosets
from .errors import BudgetExceededError, CapExceededError, DomainError
from .gf2 import MAX_LENGTH, BinaryMatrix, LinearCode, rank
from .search import DEFAULT_BUDGET, SearchQuery, SearchStatus, nl_search

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4
EXIT_BUDGET = 5

KINDS = {
    "ham": B.BoundKind.HAM,
    "coset": B.BoundKind.COSET_C,
    "scan": B.BoundKind.N1_SCAN,
    "formula": B.BoundKind.N1_FORMULA,
}


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _bound(kind: B.BoundKind, k: int, e: int) -> B.BoundResult:
    q = B.BoundQuery(k, e)
    if kind is B.BoundKind.HAM:
        return B.hamming_bound(q)
    if kind is B.BoundKind.COSET_C:
        return B.coset_bound(q)
    if e != 1:
        raise DomainError(f"{kind.value} is defined for e = 1 only")
    if kind is B.BoundKind.N1_SCAN:
        return B.n_single_scan(k)
    return B.nl_single_formula_result(k)


def bound_to_dict(res: B.BoundResult) -> dict:
    return {
        "kind": res.kind.value,
        "k": res.query.k,
        "e": res.query.e,
        "n": res.n,
        "relation": "<=" if res.kind is B.BoundKind.HAM else ">=",
        "witness_at_n": [str(v) for v in res.witness_at_n],
        "witness_below": [str(v) for v in res.witness_below],
    }


def _emit(out, command, params, result, rows, header, as_csv):
    if as_csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        env = {"command": command, "parameters": params, "format": "json", "result": result}
        out.write(json.dumps(env, indent=2) + "\n")


def cmd_bounds(args, out):
    names = args.kind or (["ham", "coset", "scan", "formula"] if args.e == 1 else ["ham", "coset"])
    results = [_bound(KINDS[name], args.k, args.e) for name in names]
    dicts = [bound_to_dict(r) for r in results]
    header = ["kind", "k", "e", "n", "lhs_at_n", "rhs_at_n", "lhs_below", "rhs_below"]
    rows = [[d["kind"], d["k"], d["e"], d["n"], *d["witness_at_n"], *d["witness_below"]] for d in dicts]
    _emit(out, "bounds", {"k": args.k, "e": args.e, "kinds": names}, dicts, rows, header, args.csv)


def table_rows(e: int, kmin: int, kmax: int, only_gaps: bool) -> list[dict]:
    rows = []
    for k in range(kmin, kmax + 1):
        q = B.BoundQuery(k, e)
        ham = B.hamming_bound(q).n
        coset = B.coset_bound(q).n
        if only_gaps and coset <= ham:
            continue
        row = {"k": k, "ham": ham, "coset": coset}
        if e == 1:
            n = B.n_single_scan(k).n
            row["n_scan"] = n
            row["formula"] = B.nl_single_formula(k)
            row["step"] = B.n_single_scan(k + 1).n - n
        rows.append(row)
    return rows


def _self_check(e: int, rows: list[dict]) -> None:
    for row in rows:
        for kind, key in ((B.BoundKind.HAM, "ham"), (B.BoundKind.COSET_C, "coset")):
            n = row[key]
            ok = B._compare(kind, *B.inequality(kind, n, row["k"], e))
            below = B._compare(kind, *B.inequality(kind, n - 1, row["k"], e))
            if not ok or below:
                raise AssertionError(f"self-check failed for {key} at k={row['k']}, n={n}")


def cmd_table(args, out):
    if args.kmin > args.kmax:
        raise DomainError(f"kmin={args.kmin} > kmax={args.kmax}")
    rows = table_rows(args.e, args.kmin, args.kmax, args.only_gaps)
    params = {"e": args.e, "kmin": args.kmin, "kmax": args.kmax, "only_gaps": args.only_gaps}
    if args.self_check:
        _self_check(args.e, rows)
        params["self_check"] = True
    header = list(rows[0]) if rows else ["k", "ham", "coset"] + (["n_scan", "formula", "step"] if args.e == 1 else [])
    _emit(out, "table", params, rows, [list(r.values()) for r in rows], header, args.csv)


def _code_dict(code: LinearCode) -> dict:
    d = code.min_distance
    return {
        "n": code.n,
        "k": code.k,
        "d": d,
        "rank": rank(code.check),
        "check_matrix": [str(w) for w in code.check.row_data],
    }


def cmd_construct(args, out):
    spec = ConstructionSpec(args.k, args.n)
    code = build_check_matrix(spec)
    if args.matrix:
        out.write(code.check.to_text() + "\n")
        return
    res = _code_dict(code)
    row = [res["n"], res["k"], res["d"], res["rank"], ";".join(res["check_matrix"])]
    _emit(out, "construct", {"k": args.k, "n": spec.n}, res, [row], ["n", "k", "d", "rank", "check_matrix"], args.csv)


def cmd_cosets(args, out):
    if args.check is not None:
        with (sys.stdin if args.check == "-" else open(args.check)) as fh:
            code = LinearCode.from_check(BinaryMatrix.from_text(fh.read()))
        params = {"check": [str(w) for w in code.check.row_data], "e": args.e}
    else:
        if args.k is None:
            raise DomainError("give --k (and optionally --n) or --check")
        spec = ConstructionSpec(args.k, args.n)
        code = build_check_matrix(spec)
        params = {"k": args.k, "n": spec.n, "e": args.e}
    report = enumerate_cosets(code, args.e)
    res = report.to_dict()
    rows = [[r["syndrome"], r["representative"], r["coset_weight"], r["count_e_plus_1"]] for r in res["records"]]
    _emit(out, "cosets", params, res, rows, ["syndrome", "representative", "coset_weight", "count_e_plus_1"], args.csv)


def cmd_search(args, out):
    n_max = args.n_max if args.n_max is not None else MAX_LENGTH
    q = SearchQuery(args.k, args.e, n_max, args.budget, not args.no_symmetry)
    outcome = nl_search(q)
    if args.matrix and outcome.certificate is not None:
        out.write(outcome.certificate.to_text() + "\n")
    else:
        res = outcome.to_dict()
        row = [res["status"], res["k"], res["e"], res["n"], res["nodes_explored"],
               ";".join(map(str, res["refuted"])), ";".join(res["certificate"] or [])]
        header = ["status", "k", "e", "n", "nodes_explored", "refuted", "certificate"]
        _emit(out, "search", {"k": q.k, "e": q.e, "n_max": q.n_max, "budget": q.budget,
                              "symmetry": q.symmetry}, res, [row], header, args.csv)
    if outcome.status is SearchStatus.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linbound", description="Length bounds and constructions for binary linear codes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--csv", action="store_true", help="emit CSV with a header row instead of JSON")
        sp.set_defaults(func=func)
        return sp

    sp = add("bounds", cmd_bounds, "minimal lengths for one (k, e)")
    sp.add_argument("--k", type=positive_int, required=True)
    sp.add_argument("--e", type=positive_int, required=True)
    sp.add_argument("--kind", action="append", choices=sorted(KINDS), help="repeatable; default all applicable")

    sp = add("table", cmd_table, "Hamming and coset bounds over a range of k")
    sp.add_argument("--e", type=positive_int, required=True)
    sp.add_argument("--kmax", type=positive_int, required=True)
    sp.add_argument("--kmin", type=positive_int, default=1)
    sp.add_argument("--only-gaps", action="store_true", help="keep rows where the coset bound exceeds the Hamming bound")
    sp.add_argument("--self-check", action="store_true", help="re-evaluate both inequalities at n and n-1 for every row")

    sp = add("construct", cmd_construct, "build an optimal single-error-correcting code")
    sp.add_argument("--k", type=positive_int, required=True)
    sp.add_argument("--n", type=positive_int)
    sp.add_argument("--matrix", action="store_true", help="print only the check matrix as 0/1 text")

    sp = add("cosets", cmd_cosets, "coset partition report of a small code")
    sp.add_argument("--k", type=positive_int)
    sp.add_argument("--n", type=positive_int)
    sp.add_argument("--check", metavar="PATH", help="check matrix text file ('-' for stdin) instead of --k/--n")
    sp.add_argument("--e", type=int, required=True)

    sp = add("search", cmd_search, "exhaustive search for the shortest linear code")
    sp.add_argument("--k", type=positive_int, required=True)
    sp.add_argument("--e", type=positive_int, required=True)
    sp.add_argument("--n-max", type=positive_int)
    sp.add_argument("--budget", type=positive_int, default=DEFAULT_BUDGET)
    sp.add_argument("--no-symmetry", action="store_true", help="disable increasing-column pruning")
    sp.add_argument("--matrix", action="store_true", help="print only the certificate check matrix")
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf) or 0
    except CapExceededError as exc:
        print(f"linbound: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BudgetExceededError as exc:
        print(f"linbound: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, OSError) as exc:
        print(f"linbound: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
