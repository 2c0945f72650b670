"""Command-line front end.

    x0plane compute 5
    x0plane verify 4 --prec 100
    x0plane certificate 5
    x0plane --json divisors 12

Exit codes: 0 success, 1 verification failed, 2 computation failed,
3 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time

from . import __version__
from .cuspdiv import birational_certificate, cusp_classes, degree_f
from .invariants import curve_invariants
from .minpoly import DEFAULT_GUARD, KernelEmpty, KernelTooLarge, height_bound, log_height, plane_model, residual
from .ntarith import dedekind_psi, factor
from .records import PolynomialRecord, RecordError, load_record, resolve_cache_dir, save_record

log = logging.getLogger("x0plane")

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_FAILED = 2
EXIT_USAGE = 3

VERIFY_PREC = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _level(text):
    try:
        N = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if N < 2:
        raise argparse.ArgumentTypeError("level must be at least 2")
    return N


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


def _obtain(args, N, guard=DEFAULT_GUARD, use_cache=True):
    """Load P_N from the cache, or compute it and store it once verified.  Returns (record, from_cache)."""
    cache = resolve_cache_dir(args.cache_dir)
    if use_cache:
        try:
            rec = load_record(cache, N)
        except RecordError as exc:
            log.warning("cache record for N=%d is corrupt (%s); recomputing", N, exc)
            rec = None
        if rec is not None:
            return rec, True
    P = plane_model(N, guard=guard)
    if not residual(N, P, VERIFY_PREC).is_zero():
        raise RuntimeError(f"computed P_{N} failed verification")
    rec = PolynomialRecord.from_polynomial(P, dedekind_psi(N), degree_f(N), VERIFY_PREC)
    if use_cache:
        save_record(cache, rec)
    return rec, False


def cmd_compute(args):
    t0 = time.perf_counter()
    rec, cached = _obtain(args, args.N, args.guard, not args.no_cache)
    P = rec.polynomial()
    elapsed = time.perf_counter() - t0
    summary = (
        f"N={rec.N} bidegree={rec.bidegree[0]},{rec.bidegree[1]} psi={rec.psi} "
        f"log_height={log_height(P):.2f} elapsed={elapsed:.2f}s{' (cached)' if cached else ''}"
    )
    payload = json.loads(rec.to_json())
    _emit(args, payload, f"{P}\n{summary}")
    return EXIT_OK


def cmd_verify(args):
    rec, _ = _obtain(args, args.N)
    res = residual(args.N, rec.polynomial(), args.prec)
    ok = res.is_zero()
    payload = {"N": args.N, "extra_prec": args.prec, "checked_to": res.validity, "verified": ok}
    if ok:
        text = f"P_{args.N}(j, f) = O(q^{res.validity + 1}): verified"
    else:
        e = res.valuation
        payload["first_residual"] = {"exponent": e, "coefficient": str(res.coefficient(e))}
        text = f"P_{args.N}(j, f) != 0: first residual coefficient at q^{e} is {res.coefficient(e)}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_UNVERIFIED


def cmd_divisors(args):
    rows = []
    lines = [f"cusps of Gamma_0({args.N})", "d  multiplicity  ord(Delta)  ord(Delta(N.))  ord(f)"]
    for c in cusp_classes(args.N):
        rows.append(
            {
                "d": c.d,
                "multiplicity": c.multiplicity,
                "ord_delta": str(c.ord_delta),
                "ord_deltaN": str(c.ord_deltaN),
                "ord_f": str(c.ord_f),
            }
        )
        lines.append(f"{c.d:<3}{c.multiplicity:<14}{str(c.ord_delta):<12}{str(c.ord_deltaN):<16}{c.ord_f}")
    lines.append(f"deg div_inf(f) = {degree_f(args.N)}")
    _emit(args, {"N": args.N, "cusps": rows, "degree_f": degree_f(args.N)}, "\n".join(lines))
    return EXIT_OK


def cmd_invariants(args):
    inv = curve_invariants(args.N)
    payload = dict(vars(inv))
    text = " ".join(f"{k}={v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_certificate(args):
    rep = birational_certificate(args.N)
    _emit(args, dict(vars(rep)), str(rep))
    return EXIT_OK


def cmd_height(args):
    rec, _ = _obtain(args, args.N)
    h = log_height(rec.polynomial())
    payload = {"N": args.N, "log_height": h, "log10_height": h / math.log(10)}
    text = f"log height {h:.4f} (base 10: {h / math.log(10):.4f})"
    if len(factor(args.N)) == 1 and factor(args.N)[0][1] == 1:
        bound = height_bound(args.N)
        payload["prime_level_bound"] = bound
        text += f"; 6l ln l + 18l = {bound:.4f}"
    _emit(args, payload, text)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="x0plane", description="Plane models of X_0(N) from (Delta : E4^3 : Delta(N z)).")
    parser.add_argument("--cache-dir", help="record directory (default: $X0PLANE_CACHE_DIR or ~/.cache/x0plane)")
    parser.add_argument("--json", action="store_true", help="print structured output")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute P_N and cache it once verified")
    p.add_argument("N", type=_level)
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="extra matrix rows")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check P_N(j, Delta(N z)/Delta) = 0 to higher precision")
    p.add_argument("N", type=_level)
    p.add_argument("--prec", type=int, default=VERIFY_PREC, help="extra q-exponents beyond the solve")
    p.set_defaults(func=cmd_verify)

    for name, func, text in (
        ("divisors", cmd_divisors, "cusp classes and Delta orders"),
        ("invariants", cmd_invariants, "genus, elliptic points, dim M_12"),
        ("certificate", cmd_certificate, "pole degrees of f1, f2 and the birationality verdict"),
        ("height", cmd_height, "logarithmic height of P_N"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("N", type=_level)
        p.set_defaults(func=func)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    if getattr(args, "prec", 0) < 0 or getattr(args, "guard", 0) < 0:
        print("x0plane: precision and guard must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (KernelTooLarge, KernelEmpty, RuntimeError) as exc:
        print(f"x0plane: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
