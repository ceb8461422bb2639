"""Command-line surface: exact sums, sweeps, and verification suites.

Exit codes: 0 success, 1 mathematical failure (an invariant was
violated), 2 usage error, 3 resource budget exceeded. Every command is
deterministic given its configuration; reruns produce byte-identical
output. Rationals travel as integer pairs j/m, never floats.
"""
import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import arith, equidist, kernels, modular, spectral, sums
from .errors import DomainError, ResourceBudgetError

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _fmt(x) -> str:
    """Stable scalar formatting: exact ints/rationals, 17 sig digits for floats."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _parse_fraction(text: str) -> Fraction:
    if "/" not in text:
        raise argparse.ArgumentTypeError("rationals must be given as j/m")
    j, m = text.split("/", 1)
    try:
        return Fraction(int(j), int(m))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}")


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex number {text!r}: {exc}")


def _parse_checkpoints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def load_config(path: str) -> dict:
    """Flat `key = value` file; '#' starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key = value")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


class _Output:
    def __init__(self, path):
        self.path = path

    def __enter__(self):
        self.fh = open(self.path, "w", encoding="utf-8", newline="") if self.path else sys.stdout
        return self.fh

    def __exit__(self, *exc):
        if self.path:
            self.fh.close()
        return False


def cmd_sum(args) -> int:
    d, c = args.d, args.c
    if args.which == "dedekind":
        print(_fmt(sums.dedekind_sum(d, c)))
        return EXIT_OK
    if args.which == "S":
        value = sums.hardy_S(d, c)
        print(f"S({d},{c}) = {value}")
    else:
        value = sums.hardy_S4(d, c)
        print(f"S4({d},{c}) = {value}")
    parity = "odd" if value % 2 else "even"
    print(f"parity: value {parity}, c {'even' if c % 2 == 0 else 'odd'}")
    return EXIT_OK


def cmd_weyl(args) -> int:
    r = Fraction(args.j, args.m)
    series = equidist.weyl_sum(
        args.N, args.n, r, checkpoints=args.checkpoints, threads=args.threads
    )
    with _Output(args.out) as fh:
        fh.write("N,re,im,abs,phi_theta,ratio\n")
        counts = arith.phi_theta_series(args.N).cumsum()
        for cp, w in zip(series.checkpoints, series.partials):
            phi = int(counts[cp])
            row = [cp, w.real, w.imag, abs(w), phi, abs(w) / phi]
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    return EXIT_OK


def cmd_dist(args) -> int:
    table = equidist.distribution_table(
        args.N, args.m, variant=args.variant, bins=args.bins, threads=args.threads
    )
    with _Output(args.out) as fh:
        if args.format == "json":
            fh.write(json.dumps(table.to_json(), sort_keys=True) + "\n")
        elif table.bins is None:
            fh.write("residue,count\n")
            for residue, count in enumerate(table.counts):
                fh.write(f"{residue},{count}\n")
        else:
            fh.write("bin,residue,count\n")
            for b, row in enumerate(table.bins):
                for residue, count in enumerate(row):
                    fh.write(f"{b},{residue},{count}\n")
    return EXIT_OK


def _report_line(fh, suite, case, status, residual=None, budget=None, seed=None):
    fh.write(
        json.dumps(
            {
                "suite": suite,
                "case": case,
                "status": status,
                "residual": residual,
                "budget": budget,
                "seed": seed,
            },
            sort_keys=True,
        )
        + "\n"
    )


def _verify_parity(args, fh) -> int:
    budget = {"cmax": args.cmax}
    bad = []
    for c in range(2, args.cmax + 1):
        for parity, variant in (("theta", "S"), ("four", "S4")):
            ds, vals = sums.hardy_row(c, parity)
            want_odd = c % 2 == 0
            mask = (vals % 2 == 1) != want_odd
            if mask.any():
                bad.extend((variant, int(d), c) for d in ds[mask][:5])
    status = "fail" if bad else "pass"
    _report_line(fh, "parity", f"exhaustive c<={args.cmax}", status, residual=float(len(bad)), budget=budget)
    for item in bad[:10]:
        _report_line(fh, "parity", f"counterexample {item}", "fail", budget=budget)
    return EXIT_MATH_FAIL if bad else EXIT_OK


def _verify_cross(args, fh) -> int:
    budget = {"cmax": args.cmax}
    bad = 0
    for c in range(2, args.cmax + 1):
        ds, s4vals = sums.hardy_row(c, "four")
        table = sums.hardy_S_table(c)
        svals = table[(c - ds) % (2 * c)]
        bad += int(np.count_nonzero(svals != s4vals))
    status = "fail" if bad else "pass"
    _report_line(fh, "cross", f"S(c-d,c)=S4(d,c) c<={args.cmax}", status, residual=float(bad), budget=budget)
    return EXIT_MATH_FAIL if bad else EXIT_OK


def _verify_theta(args, fh) -> int:
    budget = {"count": args.count, "cmax": args.cmax, "tol": args.tol}
    rng = np.random.default_rng(args.seed)
    z = complex(args.zre, args.zim)
    worst = 0.0
    try:
        for _ in range(args.count):
            law = "theta" if rng.integers(0, 2) == 0 else "theta4"
            g = modular.random_group_element(rng, args.cmax, law=law)
            worst = max(worst, modular.verify_theta_transform(g, z))
    except ResourceBudgetError as exc:
        _report_line(fh, "theta", "series budget", "resource", budget=budget, seed=args.seed)
        raise exc
    status = "pass" if worst < args.tol else "fail"
    _report_line(fh, "theta", f"{args.count} random g at z={z}", status, residual=worst, budget=budget, seed=args.seed)
    return EXIT_OK if status == "pass" else EXIT_MATH_FAIL


def _verify_cocycle(args, fh) -> int:
    budget = {"count": args.count, "cmax": args.cmax, "tol": args.tol}
    rng = np.random.default_rng(args.seed)
    z = complex(args.zre, args.zim)
    rs = args.r or [Fraction(1, 8), Fraction(1, 3), Fraction(1, 2), Fraction(5, 6)]
    worst = 0.0
    for _ in range(args.count):
        g = modular.random_group_element(rng, args.cmax, law="theta")
        h = modular.random_group_element(rng, args.cmax, law="theta")
        for r in rs:
            worst = max(worst, modular.cocycle_check(g, h, z, r))
    status = "pass" if worst < args.tol else "fail"
    _report_line(fh, "cocycle", f"{args.count} pairs, r in {[str(r) for r in rs]}", status, residual=worst, budget=budget, seed=args.seed)
    return EXIT_OK if status == "pass" else EXIT_MATH_FAIL


def _verify_ramanujan(args, fh) -> int:
    budget = {"cmax": args.cmax, "nmax": args.nmax}
    bad = 0
    bound_bad = 0
    for c in range(1, args.cmax + 1):
        for n in range(-args.nmax, args.nmax + 1):
            if n == 0:
                continue
            direct = equidist.ramanujan_direct(c, n)
            if direct != equidist.ramanujan_von_sterneck(c, n):
                bad += 1
            if abs(direct) > abs(n):
                bound_bad += 1
    status = "fail" if bad or bound_bad else "pass"
    _report_line(fh, "ramanujan", f"von Sterneck c<={args.cmax}, |n|<={args.nmax}", status, residual=float(bad + bound_bad), budget=budget)
    return EXIT_MATH_FAIL if bad or bound_bad else EXIT_OK


def _verify_eisenstein(args, fh) -> int:
    budget = {"cmax": args.cmax, "nmax": args.nmax, "dspan": args.dspan}
    params = spectral.EisensteinParams(
        r=args.r, s=args.s, z=complex(args.zre, args.zim), c_max=args.cmax,
        d_span=args.dspan, n_max=args.nmax,
    )
    direct = spectral.eisenstein_direct(params)
    fourier = spectral.eisenstein_fourier(params, threads=args.threads)
    gap = abs(direct.value - fourier) / abs(direct.value)
    status = "pass" if gap <= args.tol else "fail"
    _report_line(fh, "eisenstein", f"direct vs fourier r={args.r} s={args.s}", status, residual=gap, budget=budget)
    return EXIT_OK if status == "pass" else EXIT_MATH_FAIL


def cmd_verify(args) -> int:
    runners = {
        "parity": _verify_parity,
        "cross": _verify_cross,
        "theta": _verify_theta,
        "cocycle": _verify_cocycle,
        "ramanujan": _verify_ramanujan,
        "eisenstein": _verify_eisenstein,
    }
    with _Output(args.out) as fh:
        try:
            return runners[args.suite](args, fh)
        except ResourceBudgetError:
            return EXIT_BUDGET


def cmd_bench(args) -> int:
    import time

    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}")
    results = {}
    baseline = None
    for name in backends:
        fn = kernels.get_backend(name)
        best = math.inf
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = []
            for c in range(2, args.cmax + 1):
                ds = arith.class_residues(c, "theta")
                out.append(fn(c, ds))
            best = min(best, time.perf_counter() - t0)
        results[name] = (best, out)
        if baseline is None:
            baseline = out
        else:
            same = all(
                np.array_equal(x[0], y[0]) and np.array_equal(x[1], y[1])
                for x, y in zip(baseline, out)
            )
            if not same:
                print("backend outputs differ!", file=sys.stderr)
                return EXIT_MATH_FAIL
    pairs = sum(len(ds) for ds, _ in baseline)
    print(f"rows c in [2, {args.cmax}], {pairs} pairs, best of {args.repeat}:")
    for name, (best, _) in results.items():
        print(f"  {name:>7}: {best:8.3f} s  ({pairs / best:,.0f} pairs/s)")
    if len(results) == 2:
        py, cy = results["python"][0], results["cython"][0]
        print(f"  speedup: {py / cy:.1f}x")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hardysums", description=__doc__)
    parser.add_argument("--config", help="flat key = value file; flags override it")
    parser.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", help="print one exact sum")
    p_sum.add_argument("which", choices=["dedekind", "S", "S4"])
    p_sum.add_argument("d", type=int)
    p_sum.add_argument("c", type=int)
    p_sum.set_defaults(func=cmd_sum)

    p_weyl = sub.add_parser("weyl", help="checkpointed Weyl sums as CSV")
    p_weyl.add_argument("--N", type=int, required=True)
    p_weyl.add_argument("--n", type=int, required=True)
    p_weyl.add_argument("--j", type=int, required=True)
    p_weyl.add_argument("--m", type=int, required=True)
    p_weyl.add_argument("--checkpoints", type=_parse_checkpoints, default=None)
    p_weyl.add_argument("--out")
    p_weyl.add_argument("--threads", type=int, default=None)
    p_weyl.set_defaults(func=cmd_weyl)

    p_dist = sub.add_parser("dist", help="residue-class histogram of Hardy sums")
    p_dist.add_argument("--N", type=int, required=True)
    p_dist.add_argument("--m", type=int, required=True)
    p_dist.add_argument("--variant", choices=["S", "S4"], default="S")
    p_dist.add_argument("--bins", type=int, default=0)
    p_dist.add_argument("--format", choices=["csv", "json"], default="csv")
    p_dist.add_argument("--out")
    p_dist.add_argument("--threads", type=int, default=None)
    p_dist.set_defaults(func=cmd_dist)

    p_verify = sub.add_parser("verify", help="run one verification suite")
    p_verify.add_argument(
        "suite", choices=["parity", "cross", "theta", "cocycle", "ramanujan", "eisenstein"]
    )
    p_verify.add_argument("--cmax", type=int, default=None)
    p_verify.add_argument("--count", type=int, default=None)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--dspan", type=int, default=50)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--r", type=_parse_fraction, action="append", default=None)
    p_verify.add_argument("--s", type=_parse_complex, default=complex(2, 0.5))
    p_verify.add_argument("--zre", type=float, default=None)
    p_verify.add_argument("--zim", type=float, default=None)
    p_verify.add_argument("--out")
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="compare kernel backends")
    p_bench.add_argument("--cmax", type=int, default=600)
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.set_defaults(func=cmd_bench)

    return parser


_VERIFY_DEFAULTS = {
    "parity": {"cmax": 2000, "zre": 0.0, "zim": 1.0},
    "cross": {"cmax": 2000, "zre": 0.0, "zim": 1.0},
    "theta": {"count": 200, "cmax": 40, "tol": 1e-8, "zre": 0.0, "zim": 1.0},
    "cocycle": {"count": 500, "cmax": 40, "tol": 1e-8, "zre": 0.0, "zim": 1.0},
    "ramanujan": {"cmax": 500, "nmax": 20, "zre": 0.0, "zim": 1.0},
    "eisenstein": {"cmax": 2000, "nmax": 8, "tol": 1e-3, "zre": 0.2, "zim": 1.0},
}


def _apply_defaults(args) -> None:
    if getattr(args, "command", None) == "verify":
        for key, value in _VERIFY_DEFAULTS[args.suite].items():
            if getattr(args, key, None) is None:
                setattr(args, key, value)
        if args.suite == "eisenstein":
            if args.r is None:
                args.r = Fraction(1, 8)
            elif isinstance(args.r, list):
                args.r = args.r[0]
            if isinstance(args.r, str):
                args.r = _parse_fraction(args.r)
            if isinstance(args.s, str):
                args.s = _parse_complex(args.s)


_CONFIG_INT_KEYS = {"threads", "cmax", "count", "nmax", "dspan", "seed", "bins", "repeat"}
_CONFIG_FLOAT_KEYS = {"tol", "zre", "zim"}


def _apply_config(args, argv) -> None:
    """Fill attributes the command line left unset from the config file.

    Precedence: explicit flags, then config values, then built-in
    defaults (applied later for suite-specific knobs).
    """
    file_values = load_config(args.config)
    given = {tok.split("=", 1)[0].lstrip("-").replace("-", "_") for tok in argv if tok.startswith("--")}
    for key, raw in file_values.items():
        if not hasattr(args, key) or key in given:
            continue
        if getattr(args, key) is not None and key not in ("zre", "zim", "seed", "dspan", "format"):
            continue
        if key in _CONFIG_INT_KEYS:
            value = int(raw)
        elif key in _CONFIG_FLOAT_KEYS:
            value = float(raw)
        else:
            value = raw
        setattr(args, key, value)


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.config:
        try:
            _apply_config(args, argv)
        except (OSError, DomainError, ValueError) as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    _apply_defaults(args)
    if hasattr(args, "threads") and args.threads is None:
        args.threads = equidist.default_threads()
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
