"""Command-line interface.

Variety file grammar (line oriented, '#' starts a comment):

    field p=<int> e=<int> [modulus=<c0,c1,...,1>]
    vars m=<int>
    poly <expression>

Exit codes: 0 success, 1 validation failure, 2 parse error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import families
from .code import build_code, min_distance
from .cohomology import profile
from .errors import CapExceededError, CICodesError, NonSplitError
from .gf import field_new
from .geometry import validate_ci, variety_points
from .poly import parse as parse_poly, poly_text
from .theorems import (
    CISetup,
    is_cb_scheme,
    verify_cb_all,
    verify_main_theorem,
    verify_symmetry,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_CAP = 3


class VarietyFile:
    def __init__(self, field, m, polys):
        self.field = field
        self.m = m
        self.polys = polys


def _parse_kv(parts):
    out = {}
    for part in parts:
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        out[key] = value
    return out


def load_variety_file(path: str) -> VarietyFile:
    field = None
    m = None
    poly_lines = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            if head == "field":
                kv = _parse_kv(rest.split())
                modulus = None
                if "modulus" in kv:
                    modulus = [int(c) for c in kv["modulus"].split(",")]
                field = field_new(int(kv["p"]), int(kv["e"]), modulus)
            elif head == "vars":
                kv = _parse_kv(rest.split())
                m = int(kv["m"])
            elif head == "poly":
                poly_lines.append(rest)
            else:
                raise ValueError(f"unknown directive {head!r}")
    if field is None or m is None:
        raise ValueError("variety file needs 'field' and 'vars' headers")
    polys = [parse_poly(text, m, field) for text in poly_lines]
    return VarietyFile(field, m, polys)


def _setup_from(vf: VarietyFile) -> CISetup:
    gamma = variety_points(vf.polys, vf.m, vf.field)
    val = validate_ci(vf.polys, gamma)
    if not val.split:
        raise NonSplitError(val.line())
    if not val.smooth:
        raise NonSplitError(val.line())
    s = sum(val.degrees) - vf.m - 1
    return CISetup(gamma, val.degrees, s)


def cmd_points(args) -> int:
    vf = load_variety_file(args.file)
    gamma = variety_points(vf.polys, vf.m, vf.field)
    for pt in gamma:
        print(" ".join(str(c) for c in pt))
    if len(vf.polys) == vf.m:
        val = validate_ci(vf.polys, gamma)
        print(val.line())
        if args.require_ci and not (val.split and val.smooth):
            return EXIT_VALIDATION
    elif args.require_ci:
        print(f"error: expected {vf.m} polynomials, got {len(vf.polys)}",
              file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_analyze(args) -> int:
    vf = load_variety_file(args.file)
    setup = _setup_from(vf)
    a = args.degree
    if not args.no_range_check and not 1 <= a <= setup.s:
        print(f"error: degree {a} outside [1, {setup.s}] "
              f"(use --no-range-check to override)", file=sys.stderr)
        return EXIT_VALIDATION
    if 1 <= a <= setup.s:
        report = verify_main_theorem(setup, a, cap=args.cap, threads=args.threads)
        print(report.line())
        code = build_code(setup.gamma, a) if args.emit_matrix else None
    else:
        code = build_code(setup.gamma, a)
        dist = min_distance(code, cap=args.cap, threads=args.threads)
        singleton = code.n - code.k + 1
        print(f"n={code.n} k={code.k} d={dist.d} bound={setup.s - a + 2} "
              f"singleton={singleton} mds={str(dist.d == singleton).lower()} "
              f"mds_sufficient=false")
    if args.emit_matrix:
        for row in code.gen:
            print(" ".join(str(x) for x in row))
    return EXIT_OK


def _parse_degree_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return [int(text)]


def cmd_cb(args) -> int:
    vf = load_variety_file(args.file)
    setup = _setup_from(vf)
    print(f"seed={args.seed}")
    bad = False
    for a in _parse_degree_range(args.degrees):
        report = verify_cb_all(setup, a, budget=args.budget, seed=args.seed)
        for line in report.lines():
            print(line)
        if report.violations:
            bad = True
    return EXIT_VALIDATION if bad else EXIT_OK


def cmd_hilbert(args) -> int:
    vf = load_variety_file(args.file)
    setup = _setup_from(vf)
    prof = profile(setup.gamma, len(setup.gamma))
    for line in prof.lines():
        print(line)
    print(f"symmetry={'pass' if verify_symmetry(setup) else 'fail'}")
    print(f"cb_scheme={str(is_cb_scheme(setup.gamma)).lower()}")
    return EXIT_OK


def cmd_family(args) -> int:
    if args.kind in ("rs", "extended_rs"):
        polys, spec = families.extended_rs(args.q, args.m)
    elif args.kind in ("rm", "reed_muller"):
        polys, spec = families.reed_muller_ci(args.q, args.m)
    elif args.kind == "hermitian":
        polys, spec = families.hermitian_ci(args.q)
    else:
        print(f"error: unknown family kind {args.kind!r}", file=sys.stderr)
        return EXIT_PARSE
    field = spec.field
    lines = [f"field p={field.p} e={field.e} "
             f"modulus={','.join(str(c) for c in field.modulus)}",
             f"vars m={spec.m}"]
    lines += [f"poly {poly_text(p)}" for p in polys]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"kind={spec.kind} q={spec.q_base} m={spec.m} "
          f"degrees={','.join(str(d) for d in spec.degrees)} s={spec.s} "
          f"field={field.p}^{field.e}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cicodes",
        description="Evaluation codes on complete intersections: points, "
                    "parameters, Cayley-Bacharach checks, Hilbert tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="enumerate the point set and validate the CI")
    p.add_argument("file")
    p.add_argument("--require-ci", action="store_true")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("analyze", help="code parameters and distance bound at one degree")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--cap", type=int, default=1 << 22)
    p.add_argument("--emit-matrix", action="store_true")
    p.add_argument("--no-range-check", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cb", help="verify the Cayley-Bacharach identity over subset splits")
    p.add_argument("file")
    p.add_argument("--degrees", required=True, help="single degree or a1..a2")
    p.add_argument("--budget", type=int, default=10 ** 5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cb)

    p = sub.add_parser("hilbert", help="cohomology table, symmetry and CB-scheme flags")
    p.add_argument("file")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("family", help="emit a variety file for a named family")
    p.add_argument("kind", help="rs | rm | hermitian")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NonSplitError as exc:
        print(f"error: not a split smooth complete intersection ({exc})",
              file=sys.stderr)
        return EXIT_VALIDATION
    except (CICodesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
