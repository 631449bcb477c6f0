"""Command-line front end.

Exit codes: 0 success, 1 assertion/verification mismatch, 2 usage error,
3 computation cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import examples, tables
from .chains import LB, NIE, TribracketContext
from .cochains import CochainTensor, cochain_from_tensor, cocycle_basis
from .coloring import (ColoringCapExceeded, enumerate_region_colorings,
                       invariant)
from .diagram import ParseError
from .homology import CapExceeded, homology
from .tensors import (HORIZONTAL, OperationTensor,
                      check_horizontal_exchange, check_quasigroup,
                      check_vertical_exchange, enumerate_horizontal,
                      horizontal_to_vertical, vertical_to_horizontal)

USAGE_EXIT = 2
CAP_EXIT = 3


def _read_tensor(path):
    with open(path, "r", encoding="utf-8") as fh:
        return OperationTensor.from_json(fh.read())


def _emit(args, text_value, json_value):
    if args.format == "json":
        print(json.dumps(json_value, sort_keys=True))
    else:
        print(text_value)


def _side(arg):
    return LB if arg.lower() in ("lb",) else NIE


def cmd_enumerate(args):
    if args.size > args.cap:
        print("cap exceeded: size %d over enumeration cap %d"
              % (args.size, args.cap), file=sys.stderr)
        return CAP_EXIT
    found = enumerate_horizontal(args.size, cap=args.cap)
    if args.format == "json":
        print(json.dumps([json.loads(t.to_json()) for t in found]))
    else:
        print("%d horizontal tribrackets on %d elements" % (len(found), args.size))
        for t in found:
            print(" ".join(str(v) for v in t.flat()))
    return 0


def cmd_check(args):
    tensor = _read_tensor(args.tensor)
    reports = {"quasigroup": check_quasigroup(tensor)}
    if tensor.kind == HORIZONTAL:
        reports["exchange"] = check_horizontal_exchange(tensor)
    else:
        reports["exchange"] = check_vertical_exchange(tensor)
    ok = all(r.passed for r in reports.values())
    payload = {name: {"passed": r.passed,
                      "violations": [[vid, list(w)] for vid, w in r.violations]}
               for name, r in reports.items()}
    _emit(args, "\n".join("%s: %s" % (name, "ok" if r.passed else
                                      "FAILED %r" % (r.violations[:5],))
                          for name, r in reports.items()), payload)
    return 0 if ok else 1


def cmd_convert(args):
    tensor = _read_tensor(args.tensor)
    out = (horizontal_to_vertical(tensor) if tensor.kind == HORIZONTAL
           else vertical_to_horizontal(tensor))
    print(out.to_json())
    return 0


def cmd_homology(args):
    ctx = _context(args)
    res = homology(ctx, _side(args.side), args.degree, args.mod, cap=args.cap)
    _emit(args, str(res), {"free_rank": res.free_rank,
                           "torsion": list(res.torsion)})
    return 0


def cmd_cocycles(args):
    ctx = _context(args)
    basis = cocycle_basis(ctx, _side(args.side), args.degree, args.mod,
                          cap=args.cap)
    if args.format == "json":
        print(json.dumps([json.loads(b.to_json()) for b in basis]))
    else:
        print("kernel dimension %d" % len(basis))
        for b in basis:
            print(b.to_json())
    return 0


def _context(args):
    if getattr(args, "example", None):
        return TribracketContext(examples.get_pack(args.example).tribracket)
    if getattr(args, "tribracket", None):
        return TribracketContext(_read_tensor(args.tribracket))
    raise SystemExit2("need --tribracket FILE or --example NAME")


class SystemExit2(SystemExit):
    def __init__(self, msg):
        print("error: %s" % msg, file=sys.stderr)
        super().__init__(USAGE_EXIT)


def cmd_color(args):
    ctx = _context(args)
    d = tables.load_diagram(args.diagram)
    colorings = enumerate_region_colorings(d, ctx, cap=args.cap)
    if args.format == "json":
        print(json.dumps({"count": len(colorings),
                          "colorings": [list(c) for c in colorings]}))
    else:
        print("%d region colorings" % len(colorings))
        if args.verbose:
            for c in colorings:
                print(" ".join(map(str, c)))
    return 0


def _cochain(args, ctx):
    if args.example:
        # pack tensors are degree-2 LB cochains; the nie side pulls them
        # through psi in cmd_invariant
        pack = examples.get_pack(args.example)
        return cochain_from_tensor(ctx, LB, pack.cocycle_entries, pack.modulus)
    if not args.cocycle:
        raise SystemExit2("need --cocycle FILE or --example NAME")
    with open(args.cocycle, "r", encoding="utf-8") as fh:
        text = fh.read()
    obj = json.loads(text)
    if "tensor" in obj and "side" not in obj:
        side = _side(args.side)
        return cochain_from_tensor(ctx, side, obj["tensor"],
                                   args.mod or obj.get("modulus", 0))
    return CochainTensor.from_json(text)


def cmd_invariant(args):
    if args.example:
        pack = examples.get_pack(args.example)
        ctx = TribracketContext(pack.tribracket)
    else:
        ctx = _context(args)
    side = _side(args.side)
    theta = _cochain(args, ctx)
    if theta.side != side and side == NIE:
        from .bridge import pull_cochain
        theta = pull_cochain(ctx, theta, "psi")
    d = tables.load_diagram(args.diagram)
    value = invariant(d, theta, ctx, side=side,
                      require_cocycle=not args.allow_non_cocycle,
                      cap=args.cap)
    counts = {str(k): v for k, v in sorted(value.counts.items())}
    if args.format == "json":
        print(json.dumps({"polynomial": str(value), "counts": counts}))
    else:
        print(value)
    return 0


def cmd_verify_bridge(args):
    from .verify import bridge_ok, verify_bridge
    if args.size > 3:
        raise SystemExit2("verify-bridge supports --size up to 3")
    results = []
    tensors = enumerate_horizontal(args.size)
    for t in tensors:
        ctx = TribracketContext(t, checked=False)
        results.append(verify_bridge(ctx, args.max_degree))
    ok = all(bridge_ok(r) for r in results)
    summary = {
        "tribrackets": len(tensors),
        "inverse_residuals": sum(r["inverse_residuals"] for r in results),
        "chain_map_residuals": sum(r["chain_map_residuals"] for r in results),
        "degeneracy_residuals": sum(r["degeneracy_residuals"] for r in results),
        "homology_mismatches": [m for r in results for m in r["homology_mismatches"]],
    }
    _emit(args, "\n".join("%s: %s" % (k, v) for k, v in summary.items()),
          summary)
    return 0 if ok else 1


def cmd_tables(args):
    golden = tables.golden_tables()
    failures = 0
    reported_defects = 0
    for name in sorted(golden):
        entry = golden[name]
        d = tables.load_table(name)
        for pack_name, want in sorted(entry["computed"].items()):
            pack = examples.get_pack(pack_name)
            ctx = TribracketContext(pack.tribracket)
            theta = cochain_from_tensor(ctx, LB, pack.cocycle_entries, pack.modulus)
            got = str(invariant(d, theta, ctx, side=LB, cap=args.cap))
            status = "ok" if got == want else "MISMATCH"
            if got != want:
                failures += 1
            line = "%-12s %s: %-18s %s" % (name, pack_name, got, status)
            published = entry["printed"].get(pack_name)
            if published is not None and published != want:
                reported_defects += 1
                line += "  [source table %s: documented discrepancy]" % published
            print(line)
    print("recomputed rows match golden: %s; documented discrepancies: %d"
          % ("yes" if failures == 0 else "NO", reported_defects))
    return 0 if failures == 0 else 1


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS)
    shared.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="reserved; engines are currently sequential")
    shared.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help="generator/coloring cap override")
    p = argparse.ArgumentParser(
        prog="triblink",
        description="Tribracket and local biquandle computations: axiom "
                    "checks, enumeration, homology, cocycles, colorings, "
                    "and link invariants.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; engines are currently sequential")
    p.add_argument("--cap", type=int, default=None,
                   help="generator/coloring cap override")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[shared], **kw)

    sp = add_parser("enumerate", help="enumerate horizontal tribrackets")
    sp.add_argument("--size", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate, cap_default=4)

    sp = add_parser("check", help="check tribracket axioms of a tensor")
    sp.add_argument("--tensor", required=True)
    sp.set_defaults(func=cmd_check)

    sp = add_parser("convert", help="horizontal <-> vertical tensor")
    sp.add_argument("--tensor", required=True)
    sp.set_defaults(func=cmd_convert)

    for name, fn in (("homology", cmd_homology), ("cocycles", cmd_cocycles)):
        sp = add_parser(name)
        sp.add_argument("--tribracket")
        sp.add_argument("--example")
        sp.add_argument("--side", default="lb", choices=("lb", "nie"))
        sp.add_argument("--degree", type=int, required=True)
        sp.add_argument("--mod", type=int, default=0 if name == "homology" else None,
                        required=(name == "cocycles"))
        sp.set_defaults(func=fn)

    sp = add_parser("color", help="enumerate region colorings")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--tribracket")
    sp.add_argument("--example")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_color)

    sp = add_parser("invariant", help="cocycle invariant of a diagram")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--tribracket")
    sp.add_argument("--cocycle")
    sp.add_argument("--example")
    sp.add_argument("--mod", type=int)
    sp.add_argument("--side", default="lb", choices=("lb", "nie"))
    sp.add_argument("--allow-non-cocycle", action="store_true",
                    help="evaluate a non-cocycle weight function (the result "
                         "is then not a link invariant)")
    sp.set_defaults(func=cmd_invariant)

    sp = add_parser("verify-bridge", help="verify the chain-map bridge")
    sp.add_argument("--size", type=int, default=3)
    sp.add_argument("--max-degree", type=int, default=3)
    sp.set_defaults(func=cmd_verify_bridge)

    sp = add_parser("tables", help="recompute the bundled golden tables")
    sp.set_defaults(func=cmd_tables)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse uses exit code 2 for usage errors already
        raise
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return USAGE_EXIT
    if args.cap is None:
        args.cap = getattr(args, "cap_default", None) or 10 ** 8
    try:
        return args.func(args)
    except (CapExceeded, ColoringCapExceeded) as e:
        print("cap exceeded: %s" % e, file=sys.stderr)
        return CAP_EXIT
    except (ParseError, KeyError, ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
