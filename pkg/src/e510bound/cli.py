"""Command line interface: ``e510bound <command> ...``.

Exit status 0 on success, 1 on a verification mismatch, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import bound, checks
from .sl5rep import (Decomposition, RepresentationError, exterior_power_decompose, fundamental,
                     tensor_decompose)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_weight(text: str):
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed weight {text!r}; expected a,b,c,d")
    if len(parts) != 4:
        raise UsageError(f"malformed weight {text!r}; expected four integers a,b,c,d")
    if min(parts) < 0:
        raise UsageError(f"weight {text!r} is not dominant")
    return tuple(parts)


def fmt_weight(w) -> str:
    return "[" + ",".join(str(a) for a in w) + "]"


def _decomp_md(d: Decomposition) -> str:
    lines = ["| weight | mult | dim |", "|---|---|---|"]
    from .sl5rep import weyl_dim
    for w, m in sorted(d.items()):
        lines.append(f"| {fmt_weight(w)} | {m} | {weyl_dim(w)} |")
    return "\n".join(lines)


def _tensor_decomp(d: Decomposition, mu) -> Decomposition:
    acc = {}
    for lam, m in d.items():
        for nu, m2 in tensor_decompose(lam, mu).items():
            acc[nu] = acc.get(nu, 0) + m * m2
    return Decomposition(acc)


# commands ------------------------------------------------------------------

def cmd_decompose(args) -> int:
    if args.tensor:
        lam, mu = (parse_weight(t) for t in args.tensor)
        d = tensor_decompose(lam, mu)
    elif args.ext:
        if args.k is None:
            raise UsageError("--ext needs --k")
        d = exterior_power_decompose(parse_weight(args.ext), args.k)
    else:
        raise UsageError("give --tensor A B or --ext W --k K")
    if args.tensor_with:
        d = _tensor_decomp(d, parse_weight(args.tensor_with))
    print(_decomp_md(d) if args.md else d.to_json())
    return EXIT_OK


COLUMNS = (9, 8, 7, 6)


def cmd_table(args) -> int:
    cells = {(j, i): bound.table_cell(j, i) for j in range(6, 11) for i in range(5)}
    status = EXIT_OK
    if args.json:
        out = []
        for (j, i), d in sorted(cells.items()):
            out.append({"j": j, "i": i, "decomposition": d.to_json_obj(),
                        "dim": d.dim(), "expected_dim": bound.cell_dimension_expected(j, i)})
        print(json.dumps(out, indent=1))
    elif args.md or not args.check:
        head = "| | " + " | ".join(f"Λ^{j}(s*)⊗V(ω_i)" for j in COLUMNS) + " |"
        print(head)
        print("|---" * (len(COLUMNS) + 1) + "|")
        for i in range(5):
            row = [", ".join(fmt_weight(w) for w in cells[(j, i)].support()) for j in COLUMNS]
            print(f"| i={i} | " + " | ".join(row) + " |")
    if args.check:
        res = bound.check_table()
        good = sum(1 for r in res.values() if r["match"])
        bad = [(k, r) for k, r in sorted(res.items()) if not r["match"]]
        audits = all(cells[k].dim() == bound.cell_dimension_expected(*k) for k in cells)
        print(f"{good}/{len(res)} cells match")
        print(f"dimension audits: {'pass' if audits else 'FAIL'}")
        for (j, i), r in bad:
            print(f"mismatch at j={j}, i={i}: missing {r['missing']}, extra {r['extra']}")
        if bad or not audits:
            status = EXIT_MISMATCH
    return status


def cmd_candidates(args) -> int:
    if args.degree < 0:
        raise UsageError("degree must be nonnegative")
    rep = bound.candidates(args.degree, extra_xi_passes=args.extra_xi_passes)
    if args.json:
        print(json.dumps(rep.to_json_obj(), indent=1))
        return EXIT_OK
    if rep.status != "OK":
        print(f"degree {rep.degree}: {rep.status}")
        return EXIT_OK
    if args.md:
        print(f"| weight | top (n|m) | ω_i | ξ-pass (n|m) | ω_i |")
        print("|---|---|---|---|---|")
        for w in rep.candidates:
            a, b = rep.witnesses[w]["pass1"], rep.witnesses[w]["xi_pass"]
            ai, bi = ("-" if t["i"] is None else t["i"] for t in (a, b))
            print(f"| {fmt_weight(w)} | ({a['n']}|{a['m']}) | {ai} | ({b['n']}|{b['m']}) | {bi} |")
    else:
        print(f"degree {rep.degree}: {len(rep.candidates)} candidate weight(s)")
        for w in rep.candidates:
            print("  " + fmt_weight(w))
    if rep.published_list is not None:
        print("published list: " + (" ".join(fmt_weight(w) for w in rep.published_list) or "(empty)"))
    if rep.discrepancy:
        print("DISCREPANCY: surplus " + " ".join(fmt_weight(w) for w in rep.discrepancy["surplus"])
              + "; missing " + (" ".join(fmt_weight(w) for w in rep.discrepancy["missing"]) or "none"))
    return EXIT_OK


def cmd_bound_report(args) -> int:
    rep = bound.degree_bound_report()
    if args.json:
        print(json.dumps(rep, indent=1))
        return EXIT_OK
    print(f"global bound: {rep['global_bound']}")
    for e in rep["exceptional"]:
        print(f"  {fmt_weight(e['weight'])}: {e['bound']}")
    print(f"all other weights: {rep['default_bound']}")
    return EXIT_OK


def cmd_sing(args) -> int:
    from .singular import find_singular
    from .verma import BudgetExceeded, VermaError, VermaModule

    lam = parse_weight(args.hw)
    wf = None
    if args.weight:
        parts = [int(p) for p in args.weight.split(",")]
        if len(parts) != 4:
            raise UsageError(f"malformed weight {args.weight!r}")
        wf = tuple(parts)
    try:
        M = VermaModule(lam, budget=args.budget)
        rep = find_singular(lam, args.degree, weight_filter=wf, module=M)
    except BudgetExceeded as exc:
        print(f"error: {exc}; restrict with --weight or raise --budget", file=sys.stderr)
        return EXIT_USAGE
    except VermaError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(rep.to_json())
        return EXIT_OK
    print(f"highest weight {fmt_weight(lam)}, degree {args.degree}: kernel dimension {rep.dimension}")
    print("| weight | dim |")
    print("|---|---|")
    for w, d in sorted(rep.per_weight.items()):
        if d:
            print(f"| {fmt_weight(w)} | {d} |")
    if args.show:
        from .verma import format_vector
        for w, v in zip(rep.weights, rep.basis):
            print(f"{fmt_weight(w)}: {format_vector(v)}")
    return EXIT_OK


def _report(results, as_json: bool, timings: bool) -> int:
    ok = all(r.passed for r in results)
    if as_json:
        objs = []
        for r in results:
            o = r.to_json_obj()
            if not timings:
                o.pop("seconds", None)
            objs.append(o)
        print(json.dumps({"passed": ok, "checks": objs}, indent=1))
    else:
        for r in results:
            t = f" ({r.seconds:.2f}s)" if timings else ""
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} [{r.cases} cases]{t}")
            if not r.passed:
                print(f"     counterexample: {r.counterexample}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    names = ["e510", "verma", "pseudo"] if args.suite == "all" else [args.suite]
    results = []
    for n in names:
        if n == "e510":
            results += checks.e510_suite(include_jacobi=not args.skip_jacobi)
        else:
            results += checks.SUITES[n](args.seed)
    return _report(results, args.json, args.timings)


def cmd_pseudo_check(args) -> int:
    if args.max_support < 0 or args.samples < 1:
        raise UsageError("--max-support must be >= 0 and --samples >= 1")
    results = checks.pseudo_suite(args.max_support, args.samples, args.seed)
    return _report(results, not args.text, args.timings)


# parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="e510bound", description="Exact E(5,10) Verma module and degree-bound computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    d = sub.add_parser("decompose", help="tensor products and exterior powers of sl_5 modules")
    d.add_argument("--tensor", nargs=2, metavar="W")
    d.add_argument("--ext", metavar="W")
    d.add_argument("--k", type=int)
    d.add_argument("--tensor-with", metavar="W")
    d.add_argument("--md", action="store_true")
    d.set_defaults(func=cmd_decompose)

    t = sub.add_parser("table", help="regenerate Lambda^j(s*) (x) V(omega_i) for j = 6..10")
    t.add_argument("--check", action="store_true", help="compare supports with the embedded transcription")
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--md", action="store_true")
    fmt.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("candidates", help="weights surviving the two-pass elimination in degree p")
    c.add_argument("--degree", type=int, required=True)
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--md", action="store_true")
    c.add_argument("--extra-xi-passes", type=int, default=0, help="experimental; the xi argument only covers one pass")
    c.set_defaults(func=cmd_candidates)

    b = sub.add_parser("bound-report", help="degree bound per highest weight")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound_report)

    s = sub.add_parser("sing", help="singular vectors of a given degree")
    s.add_argument("--hw", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--weight")
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--json", action="store_true")
    s.add_argument("--show", action="store_true", help="print the kernel basis")
    s.set_defaults(func=cmd_sing)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=["e510", "verma", "pseudo", "all"], default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--skip-jacobi", action="store_true", help="skip the exhaustive super-Jacobi check")
    v.add_argument("--json", action="store_true")
    v.add_argument("--timings", action="store_true")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("pseudo-check", help="pseudoalgebra property suites (JSON report)")
    q.add_argument("--max-support", type=int, default=2)
    q.add_argument("--samples", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--text", action="store_true")
    q.add_argument("--timings", action="store_true")
    q.set_defaults(func=cmd_pseudo_check)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RepresentationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
