"""Command-line front end.

Exit status: 0 success, 1 usage or input error, 2 a check failed,
3 an estimate did not converge (reported only when nothing failed).
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import constants as K
from .errors import InfeasibleError, InputError
from .norms import NormedSpace, c0_truncation, catalog, lp_space, polygon_space, validate_norm_axioms
from .report import FAIL, dumps, write_sweep_rows
from .theorems import DEFAULT_LAMBDAS, classify_space, run_check_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_NONCONVERGED = 0, 1, 2, 3

_LP = re.compile(r"^lp:(?P<p>[^:]+):dim=(?P<n>\d+)$")
_C0 = re.compile(r"^c0trunc:dim=(?P<n>\d+)$")


def parse_space_descriptor(text: str) -> NormedSpace:
    """Build a space from ``lp:<p>:dim=<n>``, ``c0trunc:dim=<n>`` or ``polygon:<path>``.

    The result is spot-checked against the norm axioms before it is returned.
    """
    text = text.strip()
    builtin = catalog()
    if text in builtin:
        return builtin[text]
    if m := _LP.match(text):
        p_txt = m["p"].lower()
        try:
            p = math.inf if p_txt == "inf" else float(p_txt)
        except ValueError:
            raise InputError(f"bad exponent {m['p']!r} in {text!r}") from None
        space = lp_space(p, int(m["n"]))
    elif m := _C0.match(text):
        space = c0_truncation(int(m["n"]))
    elif text.startswith("polygon:"):
        path = text[len("polygon:"):]
        try:
            lines = Path(path).read_text().splitlines()
        except OSError as exc:
            raise InputError(f"cannot read polygon file {path!r}: {exc.strerror}") from None
        try:
            verts = [[float(c) for c in ln.split(",")] for ln in lines if ln.strip()]
        except ValueError:
            raise InputError(f"polygon file {path!r} must hold one 'x,y' vertex per line") from None
        space = polygon_space(verts, source=path)
    else:
        raise InputError(f"unrecognized space descriptor {text!r}")
    bad = [it for it in validate_norm_axioms(space, 1000, 0) if it.status == FAIL]
    if bad:
        raise InputError(f"{text}: norm axiom check failed ({bad[0].name})")
    return space


def parse_lambda_range(text: str) -> np.ndarray:
    """``start:end:step`` (end included when step divides the span) or a comma list."""
    if ":" not in text:
        return np.array([float(v) for v in text.split(",") if v.strip()])
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError(f"lambda range must be start:end:step, got {text!r}")
    start, end, step = (float(v) for v in parts)
    if step <= 0 or end < start:
        raise InputError(f"empty or backwards lambda range {text!r}")
    n = int(math.floor((end - start) / step + 1e-9))
    vals = [round(start + k * step, 12) for k in range(n + 1)]
    if abs((end - start) - round((end - start) / step) * step) <= 1e-12:
        vals[-1] = end
    vals = [v for v in vals if v <= end]
    return np.array(vals)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geomlab", description="Geometric constants of finite-dimensional normed spaces.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, need_space=True):
        if need_space:
            p.add_argument("--space", required=True, help="lp:<p>:dim=<n> | c0trunc:dim=<n> | polygon:<path>")
        g = p.add_argument_group("estimator")
        g.add_argument("--grid-resolution", type=int)
        g.add_argument("--refine-rounds", type=int)
        g.add_argument("--starts", type=int)
        g.add_argument("--local-iters", type=int)
        g.add_argument("--seed", type=int)
        g.add_argument("--tol", type=float)
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("constant", help="estimate one constant")
    common(p)
    p.add_argument("--which", required=True, choices=["ly", "cnj", "cnjp", "e", "delta"])
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--eps", type=float)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("sweep", help="estimate L'_Y along a lambda grid")
    common(p)
    p.add_argument("--which", default="ly", choices=["ly"])
    p.add_argument("--lambdas", required=True, help="start:end:step or a comma list")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    for verb, text in (("check", "run the theorem checks"), ("classify", "classify the space")):
        p = sub.add_parser(verb, help=text)
        common(p)
        p.add_argument("--lambdas", help="start:end:step or a comma list (default 0:1:0.05)")
        p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("spaces", help="list the built-in catalog")
    p.add_argument("--out")
    return parser


def _config(args) -> K.EstimatorConfig:
    overrides = {}
    for name in ("grid_resolution", "refine_rounds", "starts", "local_iters", "seed", "tol"):
        v = getattr(args, name, None)
        if v is not None:
            overrides[name] = v
    if "seed" not in overrides and os.environ.get("GEOMLAB_SEED"):
        try:
            overrides["seed"] = int(os.environ["GEOMLAB_SEED"])
        except ValueError:
            raise InputError("GEOMLAB_SEED must be an integer") from None
    return K.EstimatorConfig(**overrides)


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _constant(args, space, cfg):
    which = args.which
    if which == "ly":
        if args.lam is None:
            raise InputError("--which ly requires --lambda")
        est = K.estimate_lprime_y(space, args.lam, cfg)
    elif which == "delta":
        if args.eps is None:
            raise InputError("--which delta requires --eps")
        est = K.estimate_delta(space, args.eps, cfg)
    elif which == "cnj":
        est = K.estimate_cnj(space, cfg)
    else:
        cnjp, gao = K.estimate_cnj_prime_and_E(space, cfg)
        est = cnjp if which == "cnjp" else gao
    payload = {"space": space.name, "which": which, **_estimate_dict(est)}
    _emit(dumps(payload) + "\n", args.out)
    return EXIT_OK if est.converged else EXIT_NONCONVERGED


def _estimate_dict(est):
    return {"parameter": est.parameter, "value": est.value, "witness_x": est.witness_x,
            "witness_y": est.witness_y, "evaluations": est.evaluations,
            "converged": est.converged, "gap": est.gap, "config": est.config}


def _sweep(args, space, cfg):
    lams = parse_lambda_range(args.lambdas)
    sweep = K.sweep_lprime_y(space, lams, cfg)
    if args.format == "csv":
        if args.out:
            with open(args.out, "w", newline="") as fh:
                write_sweep_rows(fh, sweep.lambdas, sweep.estimates)
        else:
            write_sweep_rows(sys.stdout, sweep.lambdas, sweep.estimates)
    else:
        payload = {"space": space.name, "lambdas": sweep.lambdas,
                   "values": [_estimate_dict(e) for e in sweep.estimates]}
        _emit(dumps(payload) + "\n", args.out)
    return EXIT_OK if all(e.converged for e in sweep.estimates) else EXIT_NONCONVERGED


def _check(args, space, cfg):
    lams = parse_lambda_range(args.lambdas) if args.lambdas else DEFAULT_LAMBDAS
    report = run_check_suite(space, lams, cfg)
    _emit(dumps(report) + "\n", args.out)
    print(report.summary(), file=sys.stderr)
    if not report.passed:
        return EXIT_FAILED
    return EXIT_OK if report.converged else EXIT_NONCONVERGED


def _classify(args, space, cfg):
    lams = parse_lambda_range(args.lambdas) if args.lambdas else DEFAULT_LAMBDAS
    c = classify_space(space, cfg, lams)
    _emit(dumps(c) + "\n", args.out)
    # the two inner-product criteria must agree
    by_sweep = c.margins["ly_half_minus_one"] <= 1e-3
    by_frechet = c.margins["frechet_max_residual"] <= 1e-6
    if by_sweep != by_frechet:
        print("inner-product criteria disagree", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def run_command(args) -> int:
    if args.verb == "spaces":
        text = "\n".join(catalog()) + "\npolygon:<path>  (one 'x,y' vertex per line)\n"
        _emit(text, args.out)
        return EXIT_OK
    space = parse_space_descriptor(args.space)
    cfg = _config(args)
    return {"constant": _constant, "sweep": _sweep, "check": _check, "classify": _classify}[args.verb](args, space, cfg)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run_command(args)
    except InputError as exc:
        print(f"geomlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"geomlab: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGED


if __name__ == "__main__":
    sys.exit(main())
