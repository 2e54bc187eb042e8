"""Command-line interface: quantize | star | matrix | gcoeff | verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import ExprSyntaxError, MoyalError
from .fock import matrix_to_json, wg_matrix
from .lang import format_value, parse_phase_poly, scalar_text
from .opalg import l_map, quantize_wg
from .phase import g_star
from .series import PRESETS, g_from_alpha, g_from_f, resolve_ordering
from .verify import SUITES, VerifyParams, run_verify


def cmd_quantize(poly: str, ordering: str, rep: str = "op") -> str:
    a = parse_phase_poly(poly)
    ordn = resolve_ordering(ordering, order=max(1, a.mixed_order()))
    image = quantize_wg(a, ordn)
    if rep == "aa":
        return format_value(l_map(image))
    if rep != "op":
        raise ValueError(f"unknown representation {rep!r}")
    return format_value(image)


def cmd_star(a: str, b: str, ordering: str) -> str:
    pa, pb = parse_phase_poly(a), parse_phase_poly(b)
    ordn = resolve_ordering(ordering, order=max(1, pa.degree() + pb.degree()))
    return format_value(g_star(pa, pb, ordn))


def cmd_matrix(poly: str, ordering: str, dim: int, hbar: Optional[float] = None) -> str:
    if dim < 1:
        raise ValueError("dim must be >= 1")
    a = parse_phase_poly(poly)
    ordn = resolve_ordering(ordering, order=max(1, a.mixed_order()))
    return matrix_to_json(wg_matrix(a, ordn, dim), hbar)


def gcoeff_rows(ordering: str, m: int, n: int) -> list[tuple[int, object, object]]:
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    ordn = resolve_ordering(ordering, order=max(1, min(m, n)))
    return [
        (s, g_from_f(ordn.f, m, n, s), g_from_alpha(ordn.alpha, m, n, s))
        for s in range(min(m, n) + 1)
    ]


def cmd_gcoeff(ordering: str, m: int, n: int) -> str:
    rows = gcoeff_rows(ordering, m, n)
    parts = [f"s={s}: {scalar_text(via_f)}" for s, via_f, _ in rows]
    agree = all(via_f == via_alpha for _, via_f, via_alpha in rows)
    parts.append(f"agree={'true' if agree else 'false'}")
    return "; ".join(parts)


def _split_list(value: str, universe: Sequence[str]) -> list[str]:
    if value == "all":
        return list(universe)
    return [v.strip() for v in value.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moyal", description="Exact generalized Moyal algebra, quantization and Fock matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ordering(p, default="weyl"):
        p.add_argument(
            "--ordering",
            default=default,
            help=f"preset ({', '.join(PRESETS)}) or path to a custom f-coefficient file",
        )

    q = sub.add_parser("quantize", help="apply the quantization map W_g")
    q.add_argument("poly")
    add_ordering(q)
    q.add_argument("--rep", choices=("op", "aa"), default="op")
    q.add_argument("--json", action="store_true")

    s = sub.add_parser("star", help="generalized star product A *_g B")
    s.add_argument("a")
    s.add_argument("b")
    add_ordering(s)
    s.add_argument("--json", action="store_true")

    m = sub.add_parser("matrix", help="truncated Fock-space matrix of W_g(A), as JSON")
    m.add_argument("poly")
    add_ordering(m)
    m.add_argument("--dim", type=int, default=4)
    m.add_argument("--hbar", type=float, default=None, help="evaluate entries numerically")

    g = sub.add_parser("gcoeff", help="g(m, n, s) computed from f and from alpha")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    add_ordering(g)
    g.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run the property suites, one JSON line per report")
    v.add_argument("--suites", default="all", help=f"comma list from: {', '.join(SUITES)}")
    add_ordering(v, default="all")
    v.add_argument("--max-degree", type=int, default=4)
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--dim", type=int, default=12)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")
    v.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON lines")
    return parser


def _verify(args) -> int:
    suites = _split_list(args.suites, SUITES)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    orderings = _split_list(args.ordering, PRESETS)
    for source in orderings:
        resolve_ordering(source, order=1)
    params = VerifyParams(args.max_degree, args.trials, args.dim, args.seed)
    params.validate()
    ok = True
    for report in run_verify(suites, orderings, params, jobs=args.jobs):
        print(report.to_json(timing=args.timing), flush=True)
        ok &= report.passed
    return 0 if ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "quantize":
            out = cmd_quantize(args.poly, args.ordering, args.rep)
            print(json.dumps({"result": out}) if args.json else out)
        elif args.command == "star":
            out = cmd_star(args.a, args.b, args.ordering)
            print(json.dumps({"result": out}) if args.json else out)
        elif args.command == "matrix":
            print(cmd_matrix(args.poly, args.ordering, args.dim, args.hbar))
        elif args.command == "gcoeff":
            if args.json:
                rows = gcoeff_rows(args.ordering, args.m, args.n)
                print(
                    json.dumps(
                        {
                            "g": [{"s": s, "value": scalar_text(f)} for s, f, _ in rows],
                            "agree": all(f == a for _, f, a in rows),
                        }
                    )
                )
            else:
                print(cmd_gcoeff(args.ordering, args.m, args.n))
        else:
            return _verify(args)
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MoyalError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
