"""Command-line front end: ``zdgraph <subcommand> ...``.

Exit codes: 0 success, 1 a checked property is false (or a claim has a
counterexample), 2 usage or build errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import OrderBoundExceeded, SpecSyntaxError, UnknownClaim, ZdgError
from .graphs import FLAVORS, build_graph
from .parse import parse_ring_spec
from .properties import is_complemented, is_uniquely_complemented
from .rings import build_ring, classify_factor

PROPERTIES = ("complemented", "uniquely-complemented", "girth", "ends", "nil")

FIGURES = (
    ("z18.dot", "Z(18)"),
    ("z3_x_z2x.dot", "Z(3) x Z(2)[x]/(x^2)"),
    ("z2_z2_z4.dot", "Z(2) x Z(2) x Z(4)"),
    ("z2xy_truncated.dot", "Z(2)[x,y]/(x^3,x*y,y^2)"),
)


def _yn(b: bool) -> str:
    return "true" if b else "false"


def _load(text: str):
    return build_ring(parse_ring_spec(text))


def cmd_ring_info(args, out) -> int:
    ring = _load(args.spec)
    nil = ring.nilradical
    print(f"ring: {ring.descriptor}", file=out)
    print(f"order: {ring.order}", file=out)
    print(f"|Z(R)|: {len(ring.zero_divisor_set)}", file=out)
    print(f"|Nil(R)|: {len(nil)}", file=out)
    print(f"reduced: {_yn(ring.is_reduced())}", file=out)
    print(f"local: {_yn(ring.is_local())}", file=out)
    print(f"field: {_yn(ring.is_field())}", file=out)
    parts = [f"{classify_factor(f)}({f.order})" for f in ring.decompose_local()]
    print(f"decomposition: {' x '.join(parts)}", file=out)
    return 0


def cmd_graph(args, out) -> int:
    g = build_graph(_load(args.spec), args.flavor)
    text = g.to_dot() if args.format == "dot" else g.to_json()
    _emit(text, args.output, out)
    return 0


def cmd_check(args, out) -> int:
    ring = _load(args.spec)
    g = build_graph(ring, args.flavor)
    label = ring.label
    prop = args.property
    if prop == "complemented":
        v = is_complemented(g)
        if v.complemented:
            print("true", file=out)
            return 0
        print(f"false; witness: {label(v.failure_witness)}", file=out)
        return 1
    if prop == "uniquely-complemented":
        v = is_uniquely_complemented(g)
        if v.complemented and v.uniquely_complemented:
            print("true", file=out)
            return 0
        if not v.complemented:
            print(f"false; not complemented, witness: {label(v.failure_witness)}", file=out)
        else:
            a, b, c = (label(x) for x in v.uniqueness_witness)
            print(f"false; witness: {a} orthogonal to {b} and {c}, N({b}) != N({c})", file=out)
        return 1
    if prop == "girth":
        cycle = g.shortest_cycle()
        if cycle is None:
            print("girth: inf", file=out)
        else:
            print(f"girth: {len(cycle)}; cycle: {', '.join(label(x) for x in cycle)}", file=out)
        return 0
    if prop == "ends":
        ends = g.ends()
        print(f"ends: {', '.join(label(x) for x in ends) if ends else 'none'}", file=out)
        return 0
    # nil
    profiles = ring.power_profiles
    items = [f"{label(x)} (index {profiles[x].nil_index})" for x in sorted(ring.nilradical) if x]
    print(f"|Nil(R)|: {len(ring.nilradical)}", file=out)
    print(f"Nil(R)*: {', '.join(items) if items else 'none'}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    from .harness.catalog import CatalogBounds, generate_catalog
    from .harness.claims import CLAIMS, get_claim
    from .harness.report import render_report
    from .harness.verify import verify_all

    if "all" in args.claims:
        ids = list(CLAIMS)
    else:
        ids = args.claims
        for cid in ids:
            get_claim(cid)
    bounds = CatalogBounds(max_order=args.max_order, max_n=args.max_n)
    catalog = generate_catalog(bounds)
    results = verify_all(catalog, ids)
    _emit(render_report(results, args.format, catalog), args.output, out)
    if args.output:
        for r in results:
            print(f"{r.claim}: {r.status} ({r.rings_checked} checked, {r.skipped} skipped)", file=out)
    return 1 if any(r.status == "counterexample" for r in results) else 0


def cmd_figures(args, out) -> int:
    target = Path(args.output)
    target.mkdir(parents=True, exist_ok=True)
    for name, spec in FIGURES:
        path = target / name
        path.write_text(build_graph(_load(spec), "extended").to_dot())
        print(path, file=out)
    return 0


def _emit(text: str, path: Optional[str], out) -> None:
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zdgraph", description="Zero-divisor graphs of finite commutative rings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ring-info", help="order, zero-divisors, nilradical, local decomposition")
    s.add_argument("spec")
    s.set_defaults(func=cmd_ring_info)

    s = sub.add_parser("graph", help="export a zero-divisor graph")
    s.add_argument("spec")
    s.add_argument("--flavor", choices=FLAVORS, default="extended")
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("check", help="decide a graph property")
    s.add_argument("spec")
    s.add_argument("property", choices=PROPERTIES)
    s.add_argument("--flavor", choices=FLAVORS, default="extended")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("verify", help="run registered claims over a generated catalog")
    s.add_argument("claims", nargs="+", metavar="claim", help="claim id(s) or 'all'")
    s.add_argument("--max-order", type=int, default=256)
    s.add_argument("--max-n", type=int, default=None, help="upper bound for the Z(n) family")
    s.add_argument("--format", choices=("json", "md"), default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("figures", help="write DOT files for the standard example graphs")
    s.add_argument("-o", "--output", default="figures")
    s.set_defaults(func=cmd_figures)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except SpecSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.text:
            print(f"  {e.text}\n  {' ' * e.offset}^", file=sys.stderr)
        return 2
    except OrderBoundExceeded as e:
        print(f"error: ring {e.spec_text!r} has order {e.order} > bound {e.bound} "
              "(raise ZDG_MAX_ORDER to allow it)", file=sys.stderr)
        return 2
    except UnknownClaim as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return 2
    except (ZdgError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
