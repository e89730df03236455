"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 domain
error, 4 root-finding failure, 5 I/O error.
"""
import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .config import ARGMIN_TIE, TOLERANCES
from .errors import DomainError, InvalidParams, NoValidRoot
from .gamma2n import FAMILIES, lift_chain, lifted_lengths, make_params, systole_report
from .maximizer import genus_table, optimal_surface
from .verify import info_lines, run_battery

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_DOMAIN, EXIT_ROOT, EXIT_IO = range(6)

SCAN_HEADER = ["n", "c", "t", "len_CD", "len_DE", "len_CE", "len_CE_prime", "len_C", "systole", "argmin"]
TABLE_HEADER = ["genus", "n", "K", "systole", "c_star", "t_star"]


def fmt(x):
    """Fixed 6 decimals; lowercase scientific only beyond 1e+-9."""
    x = float(x)
    if x != 0 and (abs(x) >= 1e9 or abs(x) < 1e-9):
        return f"{x:.6e}"
    return f"{x:.6f}"


def _add_order(parser, required=True):
    g = parser.add_mutually_exclusive_group(required=required)
    g.add_argument("--n", type=int, help="symmetry order n >= 3")
    g.add_argument("--genus", type=int, help="genus g = n - 1 >= 2")


def _order(args):
    return args.n if args.n is not None else args.genus + 1


def cmd_eval(args, out):
    rep = systole_report(make_params(_order(args), args.c, args.t))
    if args.format == "json":
        json.dump(rep.to_dict(), out, indent=2)
        out.write("\n")
        return EXIT_OK
    p = rep.params
    out.write(f"n={p.n} genus={p.genus} c={fmt(p.c)} t={fmt(p.t)} s={fmt(p.s)}\n")
    out.write(f"{'family':<10}{'length':>12}{'lift':>8}{'lifted':>12}\n")
    for f in FAMILIES:
        out.write(
            f"{f.value:<10}{fmt(rep.candidates[f]):>12}{rep.lifts[f].product:>8}{fmt(rep.lifted[f]):>12}\n"
        )
    out.write(f"systole={fmt(rep.systole)} argmin={'+'.join(f.value for f in rep.argmin)}\n")
    return EXIT_OK


def cmd_maximize(args, out):
    opt = optimal_surface(_order(args), args.method)
    if args.format == "json":
        json.dump(opt.to_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(
            f"n={opt.n} genus={opt.genus} method={opt.method.value}\n"
            f"K={fmt(opt.K)} c={fmt(opt.c_star)} t={fmt(opt.t_star)} systole={fmt(opt.systole)}\n"
        )
    return EXIT_OK


def cmd_table(args, out):
    if not 2 <= args.g_min <= args.g_max <= 1000:
        raise InvalidParams(f"need 2 <= g_min <= g_max <= 1000, got {args.g_min} {args.g_max}")
    rows = [
        [str(o.genus), str(o.n), fmt(o.K), fmt(o.systole), fmt(o.c_star), fmt(o.t_star)]
        for o in genus_table(args.g_min, args.g_max)
    ]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        w.writerows(rows)
    else:
        out.write("| " + " | ".join(TABLE_HEADER) + " |\n")
        out.write("|" + "---|" * len(TABLE_HEADER) + "\n")
        for r in rows:
            out.write("| " + " | ".join(r) + " |\n")
    return EXIT_OK


def _threads():
    raw = os.environ.get("SYSTOLE_THREADS")
    if raw is None:
        return 1
    try:
        k = int(raw)
    except ValueError:
        raise InvalidParams(f"SYSTOLE_THREADS must be an integer, got {raw!r}")
    if k < 1:
        raise InvalidParams("SYSTOLE_THREADS must be >= 1")
    return k


def scan_rows(n, cs, ts, fraction):
    """Rows for one sweep, c-major then t. Absolute-mode points with t > c are skipped."""

    factors = np.array([lift_chain(f, n).product for f in FAMILIES], dtype=float)

    def row_block(c):
        t = ts * c if fraction else ts[ts <= c]
        if t.size == 0:
            return []
        lifted, systole = lifted_lengths(n, np.full_like(t, c), t)
        cand = lifted / factors[:, None]
        out = []
        for j in range(t.size):
            tags = "+".join(f.value for k, f in enumerate(FAMILIES) if lifted[k, j] - systole[j] <= ARGMIN_TIE)
            out.append([str(n), fmt(c), fmt(t[j]), *(fmt(v) for v in cand[:, j]), fmt(systole[j]), tags])
        return out

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        blocks = list(pool.map(row_block, cs))
    return [r for b in blocks for r in b]


def cmd_scan(args, out):
    n = _order(args)
    if n < 3:
        raise InvalidParams(f"n must be >= 3, got {n}")
    if not (0 < args.c_min < args.c_max) or args.c_steps < 2:
        raise InvalidParams("need 0 < c-min < c-max and c-steps >= 2")
    if not (0 <= args.t_min < args.t_max) or args.t_steps < 2:
        raise InvalidParams("need 0 <= t-min < t-max and t-steps >= 2")
    fraction = args.t_mode == "fraction"
    if fraction and args.t_max > 1:
        raise InvalidParams("fraction mode needs t-max <= 1")
    cs = np.linspace(args.c_min, args.c_max, args.c_steps)
    ts = np.linspace(args.t_min, args.t_max, args.t_steps)
    rows = scan_rows(n, cs, ts, fraction)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    w.writerows(rows)
    if args.out == "-":
        out.write(buf.getvalue())
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args, out):
    if args.n_max < 3:
        raise InvalidParams("--n-max must be >= 3")
    out.write("tolerances: " + ", ".join(f"{k}={v:g}" for k, v in TOLERANCES.items()) + "\n")
    checks = run_battery(args.n_max)
    for ch in checks:
        out.write(ch.line() + "\n")
    for line in info_lines():
        out.write(line + "\n")
    failed = [c for c in checks if not c.passed]
    out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return EXIT_VERIFY if failed else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


def build_parser():
    ap = _Parser(prog="gamma-systole", description="Systoles of Gamma(2,n) surfaces.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="systole of one surface")
    _add_order(p)
    p.add_argument("--c", type=float, required=True, help="half cuff length")
    p.add_argument("--t", type=float, required=True, help="twist, 0 <= t <= c")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("maximize", help="maximal systole for fixed n")
    _add_order(p)
    p.add_argument("--method", choices=["closed", "numeric", "brute"], default="closed")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("table", help="maximal systole by genus")
    p.add_argument("g_min", type=int)
    p.add_argument("g_max", type=int)
    p.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="CSV sweep over (c, t)")
    _add_order(p)
    p.add_argument("--c-min", type=float, required=True)
    p.add_argument("--c-max", type=float, required=True)
    p.add_argument("--c-steps", type=int, default=10)
    p.add_argument("--t-mode", choices=["absolute", "fraction"], default="fraction")
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--t-steps", type=int, default=10)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the invariant battery")
    p.add_argument("--n-max", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidParams as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ARGS
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except NoValidRoot as e:
        print(f"root-finding failure: {e}", file=sys.stderr)
        return EXIT_ROOT
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
