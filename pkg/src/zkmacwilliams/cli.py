"""Command-line entry point.

Exit status: 0 on success, 1 when an identity check finds a mismatch, 2 on
bad input (malformed JSON, cap violations, domain errors).

Examples::

    zkmw mw-check hamming --in code.json
    zkmw mw-check hamming --random 200 --k 4 --n 3 --seed 7
    zkmw sole-table --kmin 3 --kmax 10 --beta 1.0 --format csv
    zkmw nu-series --in '{"k": 3, "n": 1, "generators": []}' --trunc 6
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from .codes import DEFAULT_CAP, CodeZk, dual_code, load_code, random_code
from .conjecture import counterexample_table, table_csv, theorem4_sides
from .cyclotomic import FunctionTable, fourier_transform_table
from .enumerators import (
    check_identity_hamming,
    check_identity_mtuple,
    effective_length_we,
    hamming_we,
)
from .errors import ZkError
from .lattice import (
    DEFAULT_TRUNC,
    LatticeAk,
    brute_force_nu,
    dual_nu_eval,
    nu_eval_closed,
    nu_series,
)
from .ring import CodeR, RingR, check_identity_complete, complete_we, load_ring_code, random_ring_code

DEFAULT_TOL = 1e-9


class InputError(Exception):
    pass


def _read_json(source: str):
    text = source if source.lstrip()[:1] in "{[" else Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _need_in(args) -> str:
    if not args.input:
        raise InputError("--in is required")
    return args.input


def _codes_for_mtuple(args) -> list[CodeZk]:
    data = _read_json(_need_in(args))
    if isinstance(data, dict) and "codes" in data:
        data = data["codes"]
    if isinstance(data, list):
        return [CodeZk.from_dict(d) for d in data]
    return [CodeZk.from_dict(data)] * (args.m or 1)


def _emit_code(code: CodeZk, words, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"k": code.k, "n": code.n, "codewords": [list(w) for w in words]})
    return "\n".join(" ".join(map(str, w)) for w in words)


def _emit_poly(P, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(P.to_json())
    return P.to_text()


def cmd_code_dual(args) -> int:
    code = load_code(_need_in(args))
    dual = dual_code(code, args.max_enum)
    print(_emit_code(dual, dual.codewords(args.max_enum), args.format))
    return 0


def cmd_wenum(args) -> int:
    if args.kind == "hamming":
        P = hamming_we(load_code(_need_in(args)), args.max_enum)
    elif args.kind == "mtuple":
        P = effective_length_we(_codes_for_mtuple(args), args.max_enum)
    else:
        P = complete_we(load_ring_code(_need_in(args), not args.additive), args.max_enum)
    print(_emit_poly(P, args.format))
    return 0


def _random_instances(args):
    rng = random.Random(args.seed)
    if args.k is None or args.n is None:
        raise InputError("--random needs --k and --n")
    for _ in range(args.random):
        if args.kind == "hamming":
            yield random_code(args.k, args.n, rng)
        elif args.kind == "mtuple":
            yield [random_code(args.k, args.n, rng) for _ in range(args.m or 2)]
        else:
            if not args.modulus:
                raise InputError("--random complete needs --modulus")
            ring = RingR(args.k, tuple(int(c) for c in args.modulus.split(",")))
            yield random_ring_code(ring, args.n, rng, linear=not args.additive)


def _check(kind, inst, cap):
    if kind == "hamming":
        return check_identity_hamming(inst, cap)
    if kind == "mtuple":
        return check_identity_mtuple(inst, cap)
    return check_identity_complete(inst, cap)


def cmd_mw_check(args) -> int:
    if args.random:
        failures = 0
        for i, inst in enumerate(_random_instances(args)):
            rep = _check(args.kind, inst, args.max_enum)
            if not rep.equal:
                failures += 1
                print(f"instance {i}: {rep.summary()}")
        print(f"{'EQUAL' if not failures else 'UNEQUAL'} {args.random - failures}/{args.random}")
        return 1 if failures else 0
    if args.kind == "hamming":
        inst = load_code(_need_in(args))
    elif args.kind == "mtuple":
        inst = _codes_for_mtuple(args)
    else:
        inst = load_ring_code(_need_in(args), not args.additive)
    rep = _check(args.kind, inst, args.max_enum)
    if args.format == "json":
        print(json.dumps({"equal": rep.equal, "direct": rep.direct.to_json(),
                          "transform": rep.transformed.to_json()}))
    else:
        print(rep.summary())
    return 0 if rep.equal else 1


def _lattice(args) -> LatticeAk:
    return LatticeAk.from_code(load_code(_need_in(args)))


def cmd_nu_series(args) -> int:
    lat = _lattice(args)
    series = brute_force_nu(lat, args.trunc, args.max_enum) if args.brute else nu_series(lat, args.trunc, args.max_enum)
    print(json.dumps(series.to_list(), separators=(",", ":")))
    return 0


def cmd_nu_eval(args) -> int:
    lat = _lattice(args)
    value = dual_nu_eval(lat, args.z, args.max_enum) if args.dual else nu_eval_closed(lat, args.z, args.max_enum)
    print(f"{value:.10g}")
    return 0


def cmd_theorem4(args) -> int:
    if args.random:
        rng = random.Random(args.seed)
        codes = [random_code(3, args.n or 3, rng) for _ in range(args.random)]
    else:
        codes = [load_code(_need_in(args))]
    worst = 0.0
    for code in codes:
        rep = theorem4_sides(code, args.alpha, args.max_enum)
        worst = max(worst, rep.relative_diff)
        if len(codes) == 1:
            print(f"lhs={rep.lhs:.10g} rhs={rep.rhs:.10g} relative_diff={rep.relative_diff:.3e}")
    ok = worst <= args.tol
    print(f"{'EQUAL' if ok else 'UNEQUAL'} max_relative_diff={worst:.3e} tol={args.tol:g}")
    return 0 if ok else 1


def cmd_sole_table(args) -> int:
    if args.alpha is not None:
        rows = counterexample_table(args.kmin, args.kmax, alpha=args.alpha)
    else:
        rows = counterexample_table(args.kmin, args.kmax, args.beta)
    if args.format == "csv":
        sys.stdout.write(table_csv(rows))
    elif args.format == "json":
        print(json.dumps([{"k": k, "lhs": r.lhs, "rhs": r.rhs} for k, r in rows]))
    else:
        print(f"{'k':>3} {'lhs':>10} {'rhs':>10}")
        for k, r in rows:
            print(f"{k:>3} {r.lhs:>10.4f} {r.rhs:>10.4f}")
    return 0


def cmd_ft_oracle(args) -> int:
    """FT of the code indicator equals |C| times the dual indicator."""
    code = load_code(_need_in(args))
    size = code.size(args.max_enum)
    ft = fourier_transform_table(FunctionTable.indicator(code, args.max_enum), args.max_enum)
    dual = FunctionTable.indicator(dual_code(code, args.max_enum), args.max_enum)
    bad = [x for x in ft.points() if ft[x] != size * dual[x]]
    if args.format == "json":
        print(json.dumps({"equal": not bad, "size": size, "transform": ft.to_json()}))
    elif bad:
        print(f"UNEQUAL at {len(bad)} points, first {bad[0]}")
    else:
        print(f"EQUAL FT(chi_C) = {size} * chi_dual on {len(ft.values)} points")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="JSON file path or inline JSON")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--max-enum", type=int, default=DEFAULT_CAP)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = argparse.ArgumentParser(prog="zkmw", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("code-dual", parents=[common], help="dual code by exhaustive scan")
    s.set_defaults(func=cmd_code_dual)

    for name, func, helptext in [
        ("wenum", cmd_wenum, "weight enumerator of a code"),
        ("mw-check", cmd_mw_check, "compare enumerator of the dual with the MacWilliams transform"),
    ]:
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("kind", choices=["hamming", "mtuple", "complete"])
        s.add_argument("--m", type=int, help="replicate a single code m times (mtuple)")
        s.add_argument("--additive", action="store_true", help="ring codes: additive span only")
        if name == "mw-check":
            s.add_argument("--random", type=int, default=0, help="check this many random instances")
            s.add_argument("--k", type=int)
            s.add_argument("--n", type=int)
            s.add_argument("--modulus", help="ring modulus coefficients, e.g. 1,1,1")
        s.set_defaults(func=func)

    s = sub.add_parser("nu-series", parents=[common], help="exact nu-series of A_k(C)")
    s.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    s.add_argument("--brute", action="store_true", help="use point enumeration instead")
    s.set_defaults(func=cmd_nu_series)

    s = sub.add_parser("nu-eval", parents=[common], help="closed-form nu-function value")
    s.add_argument("--z", type=float, required=True)
    s.add_argument("--dual", action="store_true", help="evaluate the dual lattice")
    s.set_defaults(func=cmd_nu_eval)

    s = sub.add_parser("theorem4-check", parents=[common], help="ternary nu-function identity")
    s.add_argument("--alpha", type=float, default=1.0)
    s.add_argument("--random", type=int, default=0)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_theorem4)

    s = sub.add_parser("sole-table", parents=[common], help="both conjecture sides for A_k({0})")
    s.add_argument("--kmin", type=int, default=3)
    s.add_argument("--kmax", type=int, default=10)
    s.add_argument("--beta", type=float, default=1.0)
    s.add_argument("--alpha", type=float, help="fix alpha instead of beta")
    s.set_defaults(func=cmd_sole_table)

    s = sub.add_parser("ft-oracle", parents=[common], help="Fourier transform of a code indicator")
    s.set_defaults(func=cmd_ft_oracle)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ZkError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
