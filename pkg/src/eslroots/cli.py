"""Command-line front end.

    eslroots check --mod 3 "0,-1;1,0"
    eslroots roots --ring Z --n 2 "3,2;4,3"
    eslroots audit --mod 5 --n 3 --audit-out report.jsonl
    eslroots group-info --mod 11 "1,1;1,2"

Exit codes: 0 ok, 1 no roots, 2 parse or domain error, 3 audit found
discrepancies, 4 enumeration budget refused.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .eslgroup import Scope, coset_profile, membership
from .ffield import PrimeField
from .mat2 import ZZ, Mat2, char_poly, classify, eigenvalues
from .oracle import BudgetExceeded, audit_criteria, write_report
from .roots import Branch, ExistenceVerdict, nth_roots, square_root_exists

SCHEMA_VERSION = 1
_MATRIX_ARG = re.compile(r"^-\d[\d\s,;/-]*$")

EXIT_OK, EXIT_NO_ROOTS, EXIT_USAGE, EXIT_DISCREPANCY, EXIT_BUDGET = range(5)


class UsageError(Exception):
    pass


def _domain(args):
    if args.ring is not None:
        return ZZ
    if args.mod is None:
        raise UsageError("give a domain with --mod P or --ring Z")
    try:
        return PrimeField(args.mod)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _matrix(args, domain) -> Mat2:
    try:
        return Mat2.parse(args.matrix, domain)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _verdict(A: Mat2, n: int) -> ExistenceVerdict:
    if n == 2:
        return square_root_exists(A)
    return ExistenceVerdict.from_roots(nth_roots(A, n), Branch.POWER)


def _power_name(n: int) -> str:
    return {2: "square roots", 3: "cube roots"}.get(n, f"{n}th roots")


def _request(args) -> dict:
    return {
        "command": args.command,
        "matrix": args.matrix.strip() if getattr(args, "matrix", None) else None,
        "domain": "Z" if args.ring else f"F_{args.mod}",
        "n": args.n,
        "scope": args.scope,
    }


def _emit(args, record: dict, lines: list[str]):
    if args.format == "json":
        record = {"schema": SCHEMA_VERSION, "request": _request(args), **record}
        print(json.dumps(record, indent=2, default=str))
    else:
        print("\n".join(lines))


def cmd_check(args) -> int:
    dom = _domain(args)
    A = _matrix(args, dom)
    v = _verdict(A, args.n)
    flags = {s.name: v.exists_in(s) for s in Scope}
    lines = [f"A = {A.format()} over {'Z' if dom is ZZ else f'F_{dom.p}'}, n = {args.n}"]
    lines += [f"  root in {name}: {'yes' if ok else 'no'}" for name, ok in flags.items()]
    lines.append(f"  criterion: {v.branch.description}")
    lines += [f"  note: {n}" for n in v.notes]
    _emit(args, {"exists": flags, "branch": v.branch.name, "criterion": v.branch.description}, lines)
    return EXIT_OK if v.exists_in(Scope(args.scope)) else EXIT_NO_ROOTS


def cmd_roots(args) -> int:
    dom = _domain(args)
    A = _matrix(args, dom)
    scope = Scope(args.scope)
    roots = nth_roots(A, args.n, scope)
    # re-verify everything that is about to be printed
    if not roots.verify():
        raise AssertionError("root set failed verification")
    lines = [f"{_power_name(args.n)} of {A.format()} in {scope.name}:"]
    explicit = []
    for B in roots.explicit:
        m = membership(B)
        explicit.append({"matrix": B.format(), "det": str(B.det), "membership": m.value})
        lines.append(f"  {B.format():<20} det {B.det}  [{m.value}]")
    families = []
    for f in roots.families:
        entry = {"trace": str(f.trace), "det": str(f.det)}
        if isinstance(dom, PrimeField):
            entry["size"] = len(f.members())
        families.append(entry)
        size = f", {entry['size']} matrices" if "size" in entry else ""
        lines.append(f"  family: tr B = {f.trace}, det B = {f.det}{size}")
    scaled = []
    for s in roots.scaled:
        scaled.append({"numerator": s.numerator.format(), "denominator": s.denominator, "radicand": s.radicand})
        lines.append(f"  real root: {s}")
    if not roots:
        lines.append("  none")
    _emit(args, {"explicit": explicit, "families": families, "scaled": scaled}, lines)
    return EXIT_OK if roots else EXIT_NO_ROOTS


def cmd_audit(args) -> int:
    dom = _domain(args)
    if dom is ZZ:
        raise UsageError("audits run over F_p; use --mod P")
    scope = Scope(args.scope) if args.scope else None
    found = audit_criteria(dom.p, args.n, scope)
    if args.audit_out:
        write_report(found, args.audit_out)
    lines = [f"audit F_{dom.p}, n = {args.n}: {len(found)} discrepancies"]
    lines += [f"  {d.check} {d.matrix} [{d.branch}]" for d in found[:20]]
    _emit(args, {"discrepancies": len(found), "report": args.audit_out}, lines)
    return EXIT_DISCREPANCY if found else EXIT_OK


def cmd_group_info(args) -> int:
    dom = _domain(args)
    A = _matrix(args, dom)
    cp = char_poly(A)
    record = {
        "membership": membership(A).value,
        "char_poly": {"trace": str(cp.tr), "det": str(cp.det)},
    }
    lines = [f"A = {A.format()}", f"  membership: {record['membership']}", f"  char poly: x^2 - ({cp.tr})x + ({cp.det})"]
    if isinstance(dom, PrimeField):
        kind = classify(A)
        ev = eigenvalues(A)
        record["class"] = kind.value
        record["eigenvalues"] = [str(ev.lam1), str(ev.lam2)]
        lines += [f"  class: {kind.value}", f"  eigenvalues: {ev.lam1}, {ev.lam2}"]
    if A.det == 1:
        prof = coset_profile(A, nth_roots(A, 2))
        record["coset_profile"] = prof.bucket
        lines.append(f"  square roots by coset: {prof.bucket}" + (" (cosets coincide)" if prof.collapsed else ""))
    _emit(args, record, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    dom = common.add_mutually_exclusive_group()
    dom.add_argument("--mod", type=int, metavar="P", help="work over F_P")
    dom.add_argument("--ring", choices=["Z"], help="work over the integers")
    common.add_argument("--n", type=int, default=2, help="root degree (default 2)")
    common.add_argument("--scope", choices=[s.value for s in Scope], help="default m2; audits pick the largest feasible scope")
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="eslroots", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, helptext in [
        ("check", cmd_check, "decide whether roots exist"),
        ("roots", cmd_roots, "list all roots"),
        ("group-info", cmd_group_info, "membership, class, eigenvalues, coset profile"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("matrix", help='matrix as "a,b;c,d"')
        p.set_defaults(func=fn)
    p = sub.add_parser("audit", parents=[common], help="compare the solvers with brute force")
    p.add_argument("--audit-out", metavar="PATH", help="write discrepancy records (JSON lines)")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    # "-1,1;0,-1" would otherwise be taken for an option; parse() ignores spaces
    argv = [" " + a if _MATRIX_ARG.match(a) else a for a in argv]
    args = parser.parse_args(argv)
    if args.n < 2:
        parser.error("--n must be at least 2")
    if args.scope is None and args.command != "audit":
        args.scope = "m2"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"eslroots: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"eslroots: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
