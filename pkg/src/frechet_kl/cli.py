"""Command-line front end: ``frechet-kl <eval|kl|verify|derivation>``.

Exit codes: 0 success, 1 disagreements found by ``verify``, 2 usage or
parameter errors, 3 numerical failure (quadrature did not converge).
"""

import argparse
import contextlib
import csv
import io
import json
import math
import sys

import numpy as np

from .divergence import (
    boxed_formula_as_printed,
    derivation_closed_forms,
    kl_closed_form,
    kl_monte_carlo,
    kl_quadrature,
)
from .frechet import Frechet, GeneralizedFrechet
from .quadrature import QuadratureError, verify_derivation_integrals

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

DEFAULT_GRID = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)
METHODS = ("closed-form", "quadrature", "monte-carlo", "boxed-as-printed")
AGREEMENT_THRESHOLD = 1e-6
CLI_TOL = 1e-8

_COLUMNS = {
    "closed-form": ("kl_closed",),
    "quadrature": ("kl_quad", "kl_quad_err"),
    "monte-carlo": ("kl_mc", "kl_mc_se"),
    "boxed-as-printed": ("kl_boxed",),
}


class UsageError(Exception):
    pass


def fmt_human(v):
    """15 significant digits, compact exponent (``3.67879441171442e-1``)."""
    if v is None:
        return ""
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if v == 0.0:
        return "0"
    mant, exp = f"{v:.14e}".split("e")
    return f"{mant}e{int(exp)}"


def fmt_machine(v):
    # repr is the shortest string that round-trips, at most 17 digits
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return repr(v)


def agrees(closed, quad, threshold=AGREEMENT_THRESHOLD):
    """Closed form and quadrature agree to ``threshold``, relative once |closed| > 1."""
    if closed is None or quad is None:
        return False
    if math.isinf(closed) or math.isinf(quad):
        return closed == quad
    return abs(closed - quad) <= threshold * max(1.0, abs(closed))


# -- eval --------------------------------------------------------------------

def cmd_eval(args, out):
    subject = args.subject
    if subject in ("pdf", "cdf", "quantile"):
        d = GeneralizedFrechet(args.alpha, args.s, args.m)
        if subject == "quantile":
            if args.u is None:
                raise UsageError("quantile needs --u")
            if not 0.0 < args.u < 1.0:
                raise UsageError(f"--u must lie in (0, 1), got {args.u}")
            value = d.quantile(args.u)
        else:
            if args.x is None:
                raise UsageError(f"{subject} needs --x")
            value = getattr(d, subject)(args.x)
    else:
        if args.s != 1.0 or args.m != 0.0:
            raise UsageError(f"{subject} is only available for the one-parameter law")
        d = Frechet(args.alpha)
        if subject == "moment":
            if args.k is None:
                raise UsageError("moment needs --k")
            value = d.raw_moment(args.k)
        elif subject == "skewness":
            value = d.skewness()
        else:
            value = d.excess_kurtosis()
    print(fmt_human(value), file=out)
    return EXIT_OK


# -- kl ----------------------------------------------------------------------

def cmd_kl(args, out, err):
    p, q = Frechet(args.alpha1), Frechet(args.alpha2)
    if args.method == "closed-form":
        res = kl_closed_form(p, q)
    elif args.method == "quadrature":
        _check_tol(args.tol)
        try:
            res = kl_quadrature(p, q, args.tol)
        except QuadratureError as exc:
            print(f"frechet-kl: {exc}", file=err)
            if exc.result is not None:
                print(f"best estimate: {fmt_human(exc.result.value)} "
                      f"(error {fmt_human(exc.result.abs_error_estimate)})", file=err)
            return EXIT_NUMERIC
    else:
        if args.n < 2:
            raise UsageError(f"--n must be >= 2, got {args.n}")
        res = kl_monte_carlo(p, q, args.n, np.random.default_rng(args.seed))
    print(f"value: {fmt_human(res.value)}", file=out)
    print(f"method: {res.method}", file=out)
    print(f"error_estimate: {fmt_human(res.error_estimate)}", file=out)
    if res.detail is not None:
        label = "samples" if res.method == "monte-carlo" else "evaluations"
        print(f"{label}: {res.detail}", file=out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def sweep(alpha1_grid, alpha2_grid, methods, tol=CLI_TOL, mc_samples=100_000, seed=0):
    """One record (a dict) per ``(alpha1, alpha2)`` pair, in grid order."""
    pairs = [(a1, a2) for a1 in alpha1_grid for a2 in alpha2_grid]
    streams = np.random.SeedSequence(seed).spawn(len(pairs))
    rows = []
    for (a1, a2), stream in zip(pairs, streams):
        p, q = Frechet(a1), Frechet(a2)
        row = {"alpha1": float(a1), "alpha2": float(a2)}
        if "closed-form" in methods:
            row["kl_closed"] = kl_closed_form(p, q).value
        if "quadrature" in methods:
            try:
                res = kl_quadrature(p, q, tol)
                row["kl_quad"], row["kl_quad_err"] = res.value, res.error_estimate
            except QuadratureError:
                row["kl_quad"], row["kl_quad_err"] = None, None
        if "monte-carlo" in methods:
            res = kl_monte_carlo(p, q, mc_samples, np.random.default_rng(stream))
            row["kl_mc"], row["kl_mc_se"] = res.value, res.error_estimate
        if "boxed-as-printed" in methods:
            row["kl_boxed"] = boxed_formula_as_printed(p, q)
        if "closed-form" in methods and "quadrature" in methods:
            row["agree"] = agrees(row["kl_closed"], row["kl_quad"])
        else:
            row["agree"] = None
        rows.append(row)
    return rows


def columns_for(methods):
    cols = ["alpha1", "alpha2"]
    for m in METHODS:
        if m in methods:
            cols.extend(_COLUMNS[m])
    return cols + ["agree"]


def write_csv(rows, methods, stream):
    writer = csv.writer(stream, lineterminator="\n")
    cols = columns_for(methods)
    writer.writerow(cols)
    for row in rows:
        writer.writerow([fmt_machine(row.get(c)) for c in cols])


def _json_row(row, cols):
    out = {}
    for c in cols:
        v = row.get(c)
        if isinstance(v, float) and not math.isfinite(v):
            out[c] = None
            out[f"{c}_defined"] = False
        else:
            out[c] = v
    return out


def write_json(rows, methods, spec, stream):
    cols = columns_for(methods)
    doc = {
        "spec": spec,
        "rows": [_json_row(r, cols) for r in rows],
        "summary": {"pairs": len(rows), "disagreements": count_disagreements(rows)},
    }
    json.dump(doc, stream, indent=2, allow_nan=False)
    stream.write("\n")


def count_disagreements(rows):
    return sum(1 for r in rows if r.get("agree") is False)


def cmd_verify(args, out, err):
    methods = _parse_methods(args.methods)
    a1 = _parse_grid(args.alpha1_grid, "--alpha1-grid")
    a2 = _parse_grid(args.alpha2_grid, "--alpha2-grid")
    _check_tol(args.tol)
    if "monte-carlo" in methods and args.mc_samples < 2:
        raise UsageError("--mc-samples must be >= 2")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    rows = sweep(a1, a2, methods, args.tol, args.mc_samples, args.seed)
    spec = {
        "alpha1_grid": list(a1),
        "alpha2_grid": list(a2),
        "methods": [m for m in METHODS if m in methods],
        "tol": args.tol,
        "mc_samples": args.mc_samples,
        "seed": args.seed,
    }
    buf = io.StringIO()
    if args.format == "json":
        write_json(rows, methods, spec, buf)
    else:
        write_csv(rows, methods, buf)
    if args.out == "-":
        out.write(buf.getvalue())
        summary_stream = err
    else:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
        summary_stream = out
    m = count_disagreements(rows)
    print(f"{len(rows)} pairs, {m} disagreements", file=summary_stream)
    return EXIT_DISAGREE if m else EXIT_OK


# -- derivation --------------------------------------------------------------

def cmd_derivation(args, out, err):
    p, q = Frechet(args.alpha1), Frechet(args.alpha2)
    _check_tol(args.tol)
    try:
        quad = verify_derivation_integrals(p, q, args.tol)
    except QuadratureError as exc:
        print(f"frechet-kl: {exc}", file=err)
        return EXIT_NUMERIC
    closed = derivation_closed_forms(p, q)
    rows = [("integral", "closed_form", "quadrature", "abs_diff")]
    for name, c, r in zip(("first", "second", "third", "fourth"), closed, quad):
        rows.append((name, fmt_human(c), fmt_human(r.value), fmt_human(abs(c - r.value))))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip(), file=out)
    return EXIT_OK


# -- parsing -----------------------------------------------------------------

def _parse_grid(text, flag):
    if text is None:
        return DEFAULT_GRID
    try:
        vals = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc
    if not vals or not all(v > 0 and math.isfinite(v) for v in vals):
        raise UsageError(f"{flag} needs a non-empty list of positive values")
    return vals


def _parse_methods(text):
    methods = {m.strip() for m in text.split(",") if m.strip()}
    unknown = methods - set(METHODS)
    if unknown or not methods:
        raise UsageError(f"--methods must be a subset of {','.join(METHODS)}")
    return methods


def _check_tol(tol):
    if not tol > 0:
        raise UsageError(f"--tol must be > 0, got {tol}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frechet-kl",
        description="Frechet distributions and the KL divergence between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a distribution quantity")
    ev.add_argument("subject", choices=("pdf", "cdf", "quantile", "moment", "skewness", "kurtosis"))
    ev.add_argument("--alpha", type=float, required=True)
    ev.add_argument("--s", type=float, default=1.0, help="scale (pdf/cdf/quantile)")
    ev.add_argument("--m", type=float, default=0.0, help="location (pdf/cdf/quantile)")
    ev.add_argument("--x", type=float)
    ev.add_argument("--u", type=float)
    ev.add_argument("--k", type=int)

    kl = sub.add_parser("kl", help="KL divergence D(alpha1 || alpha2)")
    kl.add_argument("--alpha1", type=float, required=True)
    kl.add_argument("--alpha2", type=float, required=True)
    kl.add_argument("--method", choices=("closed-form", "quadrature", "monte-carlo"),
                    default="closed-form")
    kl.add_argument("--tol", type=float, default=CLI_TOL)
    kl.add_argument("--n", type=int, default=100_000, help="Monte Carlo sample size")
    kl.add_argument("--seed", type=int, default=0)

    ve = sub.add_parser("verify", help="sweep a grid of shape pairs")
    ve.add_argument("--alpha1-grid", help="comma-separated shapes (default 0.25,...,8)")
    ve.add_argument("--alpha2-grid", help="comma-separated shapes (default 0.25,...,8)")
    ve.add_argument("--methods", default="closed-form,quadrature",
                    help=f"comma-separated subset of {','.join(METHODS)}")
    ve.add_argument("--tol", type=float, default=CLI_TOL)
    ve.add_argument("--mc-samples", type=int, default=100_000)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--out", default="-", help="output file ('-' for stdout)")
    ve.add_argument("--format", choices=("csv", "json"), default="csv")

    de = sub.add_parser("derivation", help="the four elementary integrals behind the closed form")
    de.add_argument("--alpha1", type=float, required=True)
    de.add_argument("--alpha2", type=float, required=True)
    de.add_argument("--tol", type=float, default=1e-10)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "eval":
            return cmd_eval(args, out)
        if args.command == "kl":
            return cmd_kl(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        return cmd_derivation(args, out, err)
    except (UsageError, ValueError) as exc:
        print(f"frechet-kl: error: {exc}", file=err)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
