"""Command-line front end.

Exit codes: 0 accept/feasible/success, 1 reject/infeasible/mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .codes import (
    BudgetExceeded,
    LinearCode,
    minimum_distance,
    read_code,
    verify_first_order_rm,
    weight_distribution,
    write_code,
)
from .rm import (
    SubcodeSpec,
    check_nesting,
    minimum_distance_by_cosets,
    orthogonal,
    rm1,
    rm2,
    simplex,
    subcode,
    symplectic_group,
    weight_distribution_by_cosets,
)
from .table1 import format_table1, reproduce_table1

KINDS = {
    "rm1": rm1,
    "rm2": rm2,
    "simplex": simplex,
    "orthogonal": orthogonal,
    "subcode-even": "even",
    "subcode-odd1": "odd-first",
    "subcode-odd2": "odd-second",
}


class UsageError(Exception):
    pass


def _log2_length(n: int) -> int:
    m = n.bit_length() - 1
    if n != 1 << m:
        raise UsageError(f"length {n} is not a power of two")
    return m


def _min_distance(code: LinearCode, args) -> int:
    if code.k <= args.budget_bits:
        return minimum_distance(code, budget_bits=args.budget_bits, threads=args.threads)
    m = _log2_length(code.n)
    return minimum_distance_by_cosets(code, m)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    builder = KINDS[args.kind]
    if isinstance(builder, str):
        if args.d is None:
            raise UsageError(f"{args.kind} needs --d")
        code = subcode(SubcodeSpec(args.m, args.d, builder))
    else:
        if args.d is not None:
            raise UsageError(f"{args.kind} takes no --d")
        code = builder(args.m)
    d = _min_distance(code, args)
    if args.out:
        write_code(code, args.out)
    _emit(args, {"n": code.n, "k": code.k, "d_min": d, "out": args.out}, f"{code.n} {code.k} {d}\n")
    return 0


def cmd_weights(args) -> int:
    code = read_code(args.code_file)
    if code.k == 0:
        raise UsageError("zero-dimensional code has no weight distribution to report")
    if args.method == "enumerate":
        wd = weight_distribution(code, budget_bits=args.budget_bits, threads=args.threads)
    else:
        m = args.m if args.m is not None else _log2_length(code.n)
        wd = weight_distribution_by_cosets(code, m)
    _emit(args, [{"weight": w, "count": c} for w, c in wd], wd.to_csv())
    return 0


def cmd_table1(args) -> int:
    rows = reproduce_table1(threads=args.threads, budget_bits=args.budget_bits)
    _emit(args, [r.to_dict() for r in rows], format_table1(rows))
    return 0 if all(r.ok for r in rows) else 1


def cmd_verify_rm1(args) -> int:
    cert = verify_first_order_rm(read_code(args.code_file), budget_bits=args.budget_bits)
    if cert.accepted:
        text = f"accept: equivalent to RM(1,{cert.m})\npermutation: {' '.join(map(str, cert.column_permutation))}\n"
        text += "basis change:\n" + "".join(f"  {r}\n" for r in cert.basis_change.to_strings())
    else:
        text = f"reject: {cert.reason.value}" + (f" ({cert.detail})" if cert.detail else "") + "\n"
    _emit(args, cert.to_dict(), text)
    return 0 if cert.accepted else 1


def cmd_symplectic_group(args) -> int:
    group = symplectic_group(args.m)
    ranks = group.ranks()
    if args.json:
        payload = {
            "m": group.m,
            "size": len(group),
            "xor_closed": group.is_closed(),
            "elements": [{"rank": r, "rows": b.to_strings()} for b, r in zip(group.elements, ranks)],
        }
        print(json.dumps(payload, indent=2))
    else:
        lines = [f"{len(group)} symplectic {group.m}x{group.m} matrices, xor-closed: {group.is_closed()}"]
        for idx, (b, r) in enumerate(zip(group.elements, ranks)):
            lines.append(f"#{idx} rank {r}")
            lines += [f"  {s}" for s in b.to_strings()]
        print("\n".join(lines))
    full = all(r == args.m for r in ranks[1:]) and ranks[0] == 0
    return 0 if full else 1


def cmd_bounds(args) -> int:
    n, k, d = args.n, args.k, args.d
    if min(n, d) < 1 or k < 0:
        raise UsageError("need n >= 1, d >= 1, k >= 0")
    reports = [
        bounds.plotkin_bound(n, k, d),
        bounds.hamming_bound(n, k, d),
        bounds.grey_rankin_bound(n, k, d),
    ]
    text = "".join(r.describe() + "\n" for r in reports)
    text += "(Grey-Rankin applies to self-complementary codes only)\n"
    _emit(args, [r.to_dict() for r in reports], text)
    general = [r for r in reports[:2] if r.applicable]
    return 0 if all(r.feasible for r in general) else 1


def cmd_nesting(args) -> int:
    ok = check_nesting(args.m, args.family)
    _emit(args, {"m": args.m, "family": args.family, "nested": ok}, f"nested: {ok}\n")
    return 0 if ok else 1


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    p.add_argument("--threads", type=int, default=default(1), metavar="N", help="worker threads for enumeration")
    p.add_argument("--budget-bits", type=int, default=default(30), metavar="K", help="enumeration cap 2^K")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmcodes", description="Reed-Muller codes and their sub-code families", parents=[_global_flags(False)]
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    p = sub.add_parser("gen", parents=common, help="construct a code")
    p.add_argument("kind", choices=sorted(KINDS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--out", help="write the generator to this code file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("weights", parents=common, help="weight distribution as CSV")
    p.add_argument("code_file")
    p.add_argument("--method", choices=["enumerate", "coset-rank"], default="enumerate")
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("table1", parents=common, help="minimum distances of ten R(2,m) sub-codes")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify-rm1", parents=common, help="test equivalence to RM(1,m)")
    p.add_argument("code_file")
    p.set_defaults(func=cmd_verify_rm1)

    p = sub.add_parser("symplectic-group", parents=common, help="full-rank symplectic group")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_symplectic_group)

    p = sub.add_parser("bounds", parents=common, help="Plotkin / Hamming / Grey-Rankin report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("nesting", parents=common, help="check the sub-code chains for m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=["even", "odd-first", "odd-second"])
    p.set_defaults(func=cmd_nesting)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1 or args.budget_bits < 0:
        parser.error("--threads must be >= 1 and --budget-bits >= 0")
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"rmcodes {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
