"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 size cap or internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .borel import (
    bounded_borel_closure,
    bounded_stable_closure,
    borel_closure,
    principal_power,
    stable_closure,
)
from .errors import CapExceeded, SatmonError
from .ideal import MonomialIdeal, parse_ideal, power, to_json_obj
from .monomial import parse_bound, parse_monomial
from .saturation import METHODS, colon_max, saturate
from .veronese import VeroneseSpec, quasilinear, sat_veronese, sat_veronese_power, veronese_ideal
from .verify import SUITES, VerifyConfig, emit_table, run_fixtures, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def read_ideal(arg: str, n: int | None) -> MonomialIdeal:
    """An ideal from a JSON file, inline JSON, or the comma-separated text syntax."""
    if os.path.isfile(arg):
        with open(arg) as fh:
            arg = fh.read()
    return parse_ideal(arg, n)


def _emit(args, obj, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(obj))
    else:
        print(text)


def cmd_sat(args) -> int:
    I = read_ideal(args.ideal, args.n)
    rep = saturate(I, args.method)
    _emit(args, rep.to_json_obj(), f"sat = {rep.sat}\nsaturation = {rep.saturation}")
    return EXIT_OK


def cmd_colon(args) -> int:
    I = read_ideal(args.ideal, args.n)
    C = colon_max(I, args.method)
    _emit(args, to_json_obj(C), str(C))
    return EXIT_OK


def cmd_layers(args) -> int:
    I = read_ideal(args.ideal, args.n)
    rep = saturate(I, args.method)
    lines = [f"sat = {rep.sat}"] + [f"J_{i} = {J}" for i, J in enumerate(rep.layers)]
    _emit(args, {"sat": rep.sat, "layers": [to_json_obj(J) for J in rep.layers]}, "\n".join(lines))
    return EXIT_OK


def _monomials(texts, n):
    ms = [parse_monomial(t, n) for t in texts]
    if n is None:
        n = max(m.n for m in ms)
        ms = [parse_monomial(t, n) for t in texts]
    return ms, n


def cmd_borel(args) -> int:
    n = args.n
    if args.bound is not None:
        c = parse_bound(args.bound)
        n = n or len(c)
    ms, n = _monomials(args.monomials, n)
    if args.bound is not None:
        close = bounded_stable_closure if args.stable else bounded_borel_closure
        I = close(ms, c, n)
    else:
        I = (stable_closure if args.stable else borel_closure)(ms, n)
    _emit(args, to_json_obj(I), str(I))
    return EXIT_OK


def cmd_power(args) -> int:
    if args.principal:
        if args.bound is None:
            raise SatmonError("--principal needs --bound")
        c = parse_bound(args.bound)
        u = parse_monomial(args.principal, len(c))
        if args.table:
            target = bounded_borel_closure([u], c, u.n)
        else:
            P = principal_power(u, c, args.k)
    else:
        if args.ideal is None:
            raise SatmonError("power needs an ideal or --principal")
        target = read_ideal(args.ideal, args.n)
        if not args.table:
            P = power(target, args.k)
    if args.table:
        sys.stdout.write(emit_table(target, args.k, args.format))
        return EXIT_OK
    _emit(args, to_json_obj(P), str(P))
    return EXIT_OK


def cmd_veronese(args) -> int:
    spec = VeroneseSpec(parse_bound(args.a), args.d)
    action = args.action
    if action == "ideal":
        I = veronese_ideal(spec)
        _emit(args, to_json_obj(I), str(I))
    elif action == "sat":
        if args.k == 1:
            value = sat_veronese(spec)
        else:
            value = sat_veronese_power(spec, args.k)
        _emit(args, {"k": args.k, "sat": value}, str(value))
    elif action == "quasilinear":
        q = quasilinear(spec)
        obj = {"period": q.period, "pieces": [[str(p), str(r)] for p, r in q.pieces]}
        _emit(args, obj, str(q))
    else:
        sys.stdout.write(emit_table(spec, args.k_max, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        suite=args.suite, trials=args.trials, seed=args.seed,
        n_max=args.n_max, deg_max=args.deg_max, bound_max=args.bound_max, k_max=args.k_max,
    )
    rep = run_suite(cfg)
    _emit(args, rep.to_json_obj(), rep.summary())
    if cfg.suite == "stable-conjecture":
        return EXIT_OK
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_fixtures(args) -> int:
    rep = run_fixtures()
    _emit(args, rep.to_json_obj(), rep.summary())
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="satmon", description="Saturation numbers of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("ideal", help="JSON file, inline JSON, or text like 'x1*x2, x2^3'")
        sp.add_argument("--n", type=int, help="ambient dimension (default: largest variable index)")
        sp.add_argument("--method", choices=METHODS, default="auto")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    ideal_cmd("sat", cmd_sat, "saturation number and saturation")
    ideal_cmd("colon", cmd_colon, "the colon ideal I : m")
    ideal_cmd("layers", cmd_layers, "socle layers J_0, J_1, ...")

    sp = sub.add_parser("borel", help="Borel closure of monomials")
    sp.add_argument("monomials", nargs="+")
    sp.add_argument("--bound", help="bound vector, e.g. 2,2,2")
    sp.add_argument("--stable", action="store_true", help="close under stable moves only")
    sp.add_argument("--n", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_borel)

    sp = sub.add_parser("power", help="powers of an ideal or of a principal bounded Borel ideal")
    sp.add_argument("ideal", nargs="?")
    sp.add_argument("--principal", help="seed monomial u of B^c(u)")
    sp.add_argument("--bound")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--table", action="store_true", help="tabulate sat(I^j) for j = 1..k")
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_power)

    sp = sub.add_parser("veronese", help="Veronese-type ideals I_{a,n,d}")
    sp.add_argument("action", nargs="?", default="sat", choices=("sat", "table", "quasilinear", "ideal"))
    sp.add_argument("--a", required=True, help="bound vector, e.g. 2,2,1 (n is its length)")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("-k", type=int, default=1, help="power for 'sat'")
    sp.add_argument("--k-max", type=int, default=6)
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_veronese)

    sp = sub.add_parser("verify", help="randomized oracle suites")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--deg-max", type=int, default=5)
    sp.add_argument("--bound-max", type=int, default=4)
    sp.add_argument("--k-max", type=int, default=3)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fixtures", help="replay the reference example instances")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"satmon: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SatmonError, ValueError, IndexError) as exc:
        print(f"satmon: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"satmon: internal check failed: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
