"""Command-line front end.

Exit codes: 0 when the checked property holds (smooth, unimodular, equal,
...), 1 when it does not, 2 on bad input or a violated hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import report as rep
from .detvar import detvar_generators, dual_cone_conjecture_check, scan_minors, verify_minor_relations
from .exactla import ShapeError
from .logjac import check_characteristic, compare_characteristics
from .nash import HypothesisError, nash_charts, nash_iterate
from .semigroup import NoPositiveGrading, bounded_saturation_check

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _vecs(vs) -> str:
    return "{" + ", ".join(_vec(v) for v in vs) + "}"


def _characteristic(text: str) -> int:
    try:
        return check_characteristic(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _primes(text: str) -> list[int]:
    try:
        primes = [int(x) for x in text.replace(" ", "").split(",") if x]
        for p in primes:
            if p == 0:
                raise ValueError("0 is not a prime")
            check_characteristic(p)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return primes


def _bound(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid bound {text!r}") from exc
    if q <= 0:
        raise argparse.ArgumentTypeError("bound must be positive")
    return q


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricnash", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--format", choices=["text", "structured"], default="text")
        if out:
            p.add_argument("--out", type=Path, help="write the structured document here")

    p = sub.add_parser("detgen", help="write the generator file of M^2_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--out", type=Path)

    for name, helptext in [("nash", "charts of the Nash blowup"),
                           ("iterate", "iterate Nash blowups")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", type=Path)
        p.add_argument("--char", type=_characteristic, default=0)
        if name == "iterate":
            p.add_argument("--depth", type=int, default=1)
        common(p)

    p = sub.add_parser("scan-minors", help="all maximal minors of L_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    common(p)

    p = sub.add_parser("charfree", help="compare exponent sets across characteristics")
    p.add_argument("input", type=Path)
    p.add_argument("--primes", type=_primes, default=[2, 3, 5, 7])
    common(p)

    p = sub.add_parser("dualcone", help="check the dual-cone ray formula for M^2_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    common(p)

    p = sub.add_parser("saturation-check", help="bounded search for saturation gaps")
    p.add_argument("input", type=Path)
    p.add_argument("--bound", type=_bound, default=None)
    common(p)
    return parser


# -- text renderers ---------------------------------------------------------

def _text_nash(r) -> str:
    lines = [f"semigroup in Z^{r.source.dim}: {_vecs(r.source.generators)}",
             f"characteristic {r.characteristic}",
             f"Gamma_p ({r.gamma.subset_count} subsets, {len(r.gamma.exponents)} distinct): "
             f"{_vecs(r.gamma.exponents)}",
             f"Newton vertices: {len(r.newton_vertices)}"]
    for c in r.charts:
        flag = "smooth" if c.smooth else "SINGULAR"
        if c.isomorphic_to_source:
            flag += ", isomorphic to source"
        lines.append(f"  vertex {_vec(c.vertex)}: {len(c.minimal_generators)} minimal generators "
                     f"{_vecs(c.minimal_generators)} [{flag}]")
    lines.append("Nash blowup is " + ("non-singular" if r.global_smooth else "singular"))
    return "\n".join(lines)


def _text_tree(node, indent="") -> str:
    lines = [f"{indent}depth {node.depth}: {_vecs(node.report.source.generators)}"]
    for o in node.outcomes:
        lines.append(f"{indent}  chart at {_vec(o.chart.vertex)}: {o.status}")
        if o.subtree is not None:
            lines.append(_text_tree(o.subtree, indent + "    "))
    return "\n".join(lines)


def _emit(args, command: str, params: dict, payload: dict, text: str, seconds: float) -> None:
    doc = rep.document(command, params, payload, seconds)
    out = getattr(args, "out", None)
    if out is not None:
        out.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    if args.format == "structured":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text)


# -- commands ---------------------------------------------------------------

def cmd_detgen(args) -> int:
    spec = detvar_generators(args.m, args.n)
    doc = rep.semigroup_document(spec.semigroup())
    body = json.dumps(doc, indent=None) + "\n"
    if args.out is None:
        sys.stdout.write(body)
        print(f"L_{args.m},{args.n} =\n{spec.matrix}", file=sys.stderr)
    else:
        args.out.write_text(body)
        print(f"L_{args.m},{args.n} =\n{spec.matrix}")
        print(f"wrote {len(spec.generators)} generators in Z^{spec.dim} to {args.out}")
    return EXIT_OK


def cmd_nash(args) -> int:
    S = rep.load_semigroup(args.input)
    t = time.perf_counter()
    r = nash_charts(S, args.char)
    _emit(args, "nash", {"input": str(args.input), "char": args.char},
          rep.nash_payload(r), _text_nash(r), time.perf_counter() - t)
    return EXIT_OK if r.global_smooth else EXIT_FAIL


def cmd_iterate(args) -> int:
    if args.depth < 1:
        raise UsageError("--depth must be a positive integer")
    S = rep.load_semigroup(args.input)
    t = time.perf_counter()
    node = nash_iterate(S, args.char, args.depth)
    _emit(args, "iterate", {"input": str(args.input), "char": args.char, "depth": args.depth},
          rep.iterate_payload(node), _text_tree(node), time.perf_counter() - t)
    return EXIT_OK if node.resolved else EXIT_FAIL


def cmd_scan_minors(args) -> int:
    spec = detvar_generators(args.m, args.n)
    t = time.perf_counter()
    scan = scan_minors(spec)
    rel = verify_minor_relations(spec)
    payload = rep.minors_payload(args.m, args.n, scan)
    payload["relations"] = rep.relations_payload(rel)
    text = (f"L_{args.m},{args.n}: {scan.subsets} maximal minors, values "
            + ", ".join(f"{k}: {v}" for k, v in sorted(scan.values.items()))
            + f"\nunimodular: {scan.unimodular}"
            + f"\nbinomial relations verified: {rel.verified}/{rel.expected}")
    _emit(args, "scan-minors", {"m": args.m, "n": args.n}, payload, text, time.perf_counter() - t)
    return EXIT_OK if scan.unimodular and rel.ok else EXIT_FAIL


def cmd_charfree(args) -> int:
    S = rep.load_semigroup(args.input)
    t = time.perf_counter()
    cmp = compare_characteristics(S, args.primes)
    lines = [f"Gamma_0: {len(cmp.gamma0.exponents)} exponents"]
    for p in args.primes:
        lines.append(f"  p={p}: {len(cmp.by_prime[p].exponents)} exponents, "
                     f"{'equal' if cmp.equal[p] else 'DIFFERENT'}")
    lines.append(f"characteristic-free: {cmp.characteristic_free}")
    _emit(args, "charfree", {"input": str(args.input), "primes": args.primes},
          rep.charfree_payload(cmp), "\n".join(lines), time.perf_counter() - t)
    return EXIT_OK if cmp.characteristic_free else EXIT_FAIL


def cmd_dualcone(args) -> int:
    spec = detvar_generators(args.m, args.n)
    t = time.perf_counter()
    v = dual_cone_conjecture_check(spec)
    text = (f"dual cone rays (computed):    {_vecs(v.computed)}\n"
            f"dual cone rays (conjectured): {_vecs(v.conjectured)}\n"
            f"match: {v.match}")
    _emit(args, "dualcone", {"m": args.m, "n": args.n}, rep.dualcone_payload(v), text,
          time.perf_counter() - t)
    return EXIT_OK if v.match else EXIT_FAIL


def cmd_saturation(args) -> int:
    S = rep.load_semigroup(args.input)
    t = time.perf_counter()
    s = bounded_saturation_check(S, args.bound)
    text = (f"grading {_vec(s.grading)}, degree bound {s.degree_bound}: "
            f"{s.points_checked} lattice points checked\n"
            f"violations: {_vecs(s.violations) if s.violations else 'none'}")
    params = {"input": str(args.input),
              "bound": None if args.bound is None else rep.encode_rational(args.bound)}
    _emit(args, "saturation-check", params, rep.saturation_payload(s), text, time.perf_counter() - t)
    return EXIT_OK if s.consistent else EXIT_FAIL


COMMANDS = {
    "detgen": cmd_detgen,
    "nash": cmd_nash,
    "iterate": cmd_iterate,
    "scan-minors": cmd_scan_minors,
    "charfree": cmd_charfree,
    "dualcone": cmd_dualcone,
    "saturation-check": cmd_saturation,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, rep.InputError, HypothesisError, NoPositiveGrading, ShapeError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
