"""Command-line surface: verification suites, region plots, deformation
dumps, and boundary probes.

Exit codes: 0 when every requested check passes, 1 when any check fails or
a probe is inconclusive, 2 on usage errors. All file outputs are written
atomically (temp file then rename) and are byte-identical for a fixed seed
and configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import regions, suites, zoo
from .functions import (
    AnalyticFunction,
    alexander,
    integral_deform_I,
    integral_deform_J,
    power_deform,
)
from .predicates import (
    SampleGrid,
    boundedness_probe,
    goodman_check,
    standard_grid,
)
from .sampling import sampled_exponent_region
from .series import DEFAULT_ORDER, series_to_json
from .svg import SAMPLED_COLOR, polyline_elements, region_elements, render_region_svg, svg_document

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ALL_FORMATS = ("svg", "csv", "json")
CSV_HEADER = "predicate,function_label,param,verdict,margin,witness_re,witness_im"


def parse_complex_literal(text: str) -> complex:
    """Parse "a+bi" / "a-bi" (optionally parenthesized) into a complex."""
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    t = t.replace(" ", "").replace("i", "j")
    try:
        value = complex(t)
    except ValueError as exc:
        raise ValueError(f"not a complex literal: {text!r}") from exc
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError("complex literal must be finite")
    return value


@dataclass(frozen=True)
class RunConfig:
    """Per-invocation settings shared by all subcommands."""
    out_dir: str = "."
    seed: int = 0
    order: int = DEFAULT_ORDER
    rmax: float = 0.99
    angles: int = 512
    formats: Tuple[str, ...] = ALL_FORMATS

    def __post_init__(self):
        if not 0.0 < self.rmax < 1.0:
            raise ValueError("--rmax must lie in (0, 1)")
        if self.order < 1 or self.angles < 8:
            raise ValueError("--order must be >= 1 and --angles >= 8")
        bad = set(self.formats) - set(ALL_FORMATS)
        if bad:
            raise ValueError(f"unknown formats: {sorted(bad)}")


def config_from_args(args: argparse.Namespace) -> RunConfig:
    out = os.environ.get("UNIDEFORM_OUT") or args.out
    formats = tuple(args.format) if args.format else ALL_FORMATS
    return RunConfig(out_dir=out, seed=args.seed, order=args.order,
                     rmax=args.rmax, angles=args.angles, formats=formats)


def atomic_write(path: str, text: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _slug(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", label).strip("_")


def rows_to_csv(rows: Sequence[suites.CheckRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.predicate},{r.function_label},{r.param},{r.verdict},"
            f"{r.margin!r},{r.witness.real!r},{r.witness.imag!r}")
    return "\n".join(lines) + "\n"


def rows_summary(rows: Sequence[suites.CheckRow]) -> str:
    lines = []
    for r in rows:
        tag = "PASS" if r.passed else "FAIL"
        param = f" [{r.param}]" if r.param else ""
        lines.append(f"{tag} {r.predicate}: {r.function_label}{param} "
                     f"margin={r.margin:.3e}")
    n_fail = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - n_fail}/{len(rows)} checks passed")
    return "\n".join(lines) + "\n"


# -- class spec parsing --------------------------------------------------------

CLASS_TOKENS = ("S", "S*", "K", "C", "Sp", "SS")


def parse_class_spec(token: str, alpha: Optional[float],
                     lam: Optional[float]) -> regions.ClassSpec:
    """Map a CLI class token plus --alpha/--lambda to a ClassSpec."""
    if token == "S":
        return regions.ClassSpec(regions.ClassId.S)
    if token == "K":
        return regions.ClassSpec(regions.ClassId.CONVEX)
    if token == "C":
        return regions.ClassSpec(regions.ClassId.CLOSE_TO_CONVEX)
    if token == "S*":
        if alpha is None:
            return regions.ClassSpec(regions.ClassId.STARLIKE)
        return regions.ClassSpec(regions.ClassId.STARLIKE_ORDER, alpha=alpha)
    if token == "SS":
        if alpha is None:
            raise ValueError("class SS requires --alpha")
        return regions.ClassSpec(regions.ClassId.STRONGLY_STARLIKE,
                                 alpha=alpha)
    if token == "Sp":
        if lam is None and alpha is None:
            return regions.ClassSpec(regions.ClassId.SPIRALLIKE_ALL)
        if alpha is None:
            return regions.ClassSpec(regions.ClassId.SPIRALLIKE, lam=lam)
        if lam is None:
            raise ValueError("class Sp with --alpha also requires --lambda")
        return regions.ClassSpec(regions.ClassId.STRONGLY_SPIRALLIKE,
                                 lam=lam, alpha=alpha)
    raise ValueError(f"unknown class token {token!r}; "
                     f"choose from {', '.join(CLASS_TOKENS)}")


# -- subcommands ---------------------------------------------------------------

def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.suite == "all":
        rows = suites.run_all(seed=cfg.seed)
        rows += _exercise_commands(cfg)
    else:
        rows = suites.run_suite(args.suite, seed=cfg.seed)
    if "csv" in cfg.formats:
        atomic_write(os.path.join(cfg.out_dir, f"verify_{args.suite}.csv"),
                     rows_to_csv(rows))
    summary = rows_summary(rows)
    atomic_write(os.path.join(cfg.out_dir, f"verify_{args.suite}.txt"), summary)
    sys.stdout.write(summary)
    return EXIT_PASS if suites.all_passed(rows) else EXIT_FAIL


def _exercise_commands(cfg: RunConfig) -> List[suites.CheckRow]:
    """Run each non-verify subcommand once so `verify all` covers the CLI."""
    small = RunConfig(out_dir=cfg.out_dir, seed=cfg.seed, order=64,
                      rmax=0.99, angles=256, formats=cfg.formats)
    checks = [
        ("cmd_region-class", lambda: _region_for_class(
            parse_class_spec("S*", None, None), small) == EXIT_PASS),
        ("cmd_region-fn", lambda: _region_for_function(
            zoo.koebe(64), small, resolution=120) == EXIT_PASS),
        ("cmd_deform", lambda: _deform(
            zoo.koebe(64), "K", 0.5 + 0j, small) == EXIT_PASS),
        ("cmd_probe-boundedness", lambda: _probe_boundedness(
            zoo.strongly_starlike(0.5, 64), small) == EXIT_PASS),
        ("cmd_probe-argument", lambda: _probe_argument(
            zoo.koebe(64), small) == EXIT_PASS),
    ]
    rows = []
    for name, thunk in checks:
        try:
            ok = bool(thunk())
        except Exception:  # noqa: BLE001 - a crash is a failing check
            ok = False
        rows.append(suites.CheckRow("cli", name, "", "pass" if ok else "fail",
                                    0.0 if ok else -1.0))
    return rows


def _classification_csv(classify, box: float = 3.0, n: int = 61) -> str:
    xs = np.linspace(-box, box, n)
    lines = ["re,im,classification"]
    for y in xs:
        for x in xs:
            lines.append(f"{x!r},{y!r},{classify(complex(x, y))}")
    return "\n".join(lines) + "\n"


def _region_for_class(spec: regions.ClassSpec, cfg: RunConfig) -> int:
    closed = regions.closed_form_exponent_region(spec)
    recon = regions.complement_of_T_image(regions.closed_form_variability(spec))
    # the enum name avoids filename collisions between the S and S* tokens
    name = _slug(spec.id.name.lower() + "_" + spec.describe().split(" ", 1)[-1]
                 if spec.alpha is not None or spec.lam is not None
                 else spec.id.name.lower())
    if "svg" in cfg.formats:
        elements = region_elements(closed) + region_elements(recon,
                                                             SAMPLED_COLOR)
        atomic_write(os.path.join(cfg.out_dir, f"region_{name}.svg"),
                     svg_document(elements))
    if "csv" in cfg.formats:
        atomic_write(
            os.path.join(cfg.out_dir, f"region_{name}.csv"),
            _classification_csv(lambda c: regions.region_contains(closed, c)))
    agreement = suites.region_error(recon, closed)
    sys.stdout.write(f"region {spec.describe()}: closed form vs computed "
                     f"complement agree to {agreement:.3e}\n")
    return EXIT_PASS if agreement <= 1e-9 else EXIT_FAIL


def _region_for_function(f: AnalyticFunction, cfg: RunConfig,
                         resolution: int = 600) -> int:
    radii = tuple(sorted({min(0.9, cfg.rmax / 2), cfg.rmax}))
    grid = SampleGrid(radii=radii, angles_per_radius=cfg.angles,
                      uses_exact_eval=f.p_exact is not None)
    sampled = sampled_exponent_region(f, grid, resolution=resolution)
    name = _slug(f.label)
    if "svg" in cfg.formats:
        atomic_write(os.path.join(cfg.out_dir, f"region_{name}.svg"),
                     render_region_svg(None, sampled.boundary))
    if "csv" in cfg.formats:
        step = max(1, resolution // 61)
        lines = ["re,im,classification"]
        for i in range(0, resolution, step):
            for j in range(0, resolution, step):
                cls = "inside" if sampled.complement[i, j] else "outside"
                lines.append(f"{sampled.xs[j]!r},{sampled.ys[i]!r},{cls}")
        atomic_write(os.path.join(cfg.out_dir, f"region_{name}.csv"),
                     "\n".join(lines) + "\n")
    sys.stdout.write(
        f"region {f.label}: sampled exponent region, "
        f"{len(sampled.boundary)} boundary component(s), r <= {radii[-1]:g}\n")
    return EXIT_PASS if sampled.complement.any() else EXIT_FAIL


def cmd_region(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.cls is None and args.fn is None:
        raise ValueError("region requires --class and/or --fn")
    status = EXIT_PASS
    if args.cls is not None:
        spec = parse_class_spec(args.cls, args.alpha, args.lam)
        status = max(status, _region_for_class(spec, cfg))
    if args.fn is not None:
        f = zoo.parse_function_spec(args.fn, cfg.order)
        status = max(status, _region_for_function(f, cfg))
    return status


DEFORM_OPS = ("K", "I", "J", "J1")


def _deform(f: AnalyticFunction, op: str, c: Optional[complex],
            cfg: RunConfig) -> int:
    if op == "J1":
        g = alexander(f)
    else:
        if c is None:
            raise ValueError(f"--c is required for op {op}")
        g = {"K": power_deform, "I": integral_deform_I,
             "J": integral_deform_J}[op](f, c)
    payload = dict(series_to_json(g.h_series))
    payload["label"] = g.label
    if "json" in cfg.formats:
        atomic_write(
            os.path.join(cfg.out_dir, f"deform_{_slug(g.label)}.json"),
            json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n")
    head = g.h_series.coeffs[:10]
    sys.stdout.write(f"{g.label}: h coefficients "
                     + " ".join(f"{v.real:+.6g}{v.imag:+.6g}i" for v in head)
                     + "\n")
    return EXIT_PASS


def cmd_deform(args: argparse.Namespace, cfg: RunConfig) -> int:
    f = zoo.parse_function_spec(args.fn, cfg.order)
    c = parse_complex_literal(args.c) if args.c is not None else None
    return _deform(f, args.op, c, cfg)


def _probe_boundedness(f: AnalyticFunction, cfg: RunConfig) -> int:
    if f.log_ratio is None:
        raise ValueError("boundedness probe needs a function with an exact "
                         "evaluator")
    prof = boundedness_probe(f, angles=cfg.angles)
    if "csv" in cfg.formats:
        lines = ["r,M"] + [f"{r!r},{m!r}"
                           for r, m in zip(prof.radii, prof.values)]
        atomic_write(
            os.path.join(cfg.out_dir, f"probe_boundedness_{_slug(f.label)}.csv"),
            "\n".join(lines) + "\n")
    sys.stdout.write(f"boundedness {f.label}: {prof.verdict} "
                     f"(M({prof.radii[-1]:g}) = {prof.values[-1]:.6g})\n")
    return EXIT_PASS if prof.verdict != "indeterminate" else EXIT_FAIL


def _probe_argument(f: AnalyticFunction, cfg: RunConfig) -> int:
    grid = standard_grid(exact=f.log_ratio is not None, angles=cfg.angles)
    rep = goodman_check(f, grid)
    if "csv" in cfg.formats:
        radii = [r for r in grid.radii
                 if f.log_ratio is not None or r <= 0.95]
        theta = np.linspace(0.0, 2.0 * math.pi, cfg.angles, endpoint=False)
        lines = ["r,max_abs_arg,bound"]
        for r in radii:
            z = r * np.exp(1j * theta)
            if f.log_ratio is not None:
                args_ = np.abs(np.asarray(f.log_ratio(z)).imag)
            else:
                from .series import evaluate
                args_ = np.abs(np.angle(evaluate(f.h_series, z)))
            lines.append(f"{r!r},{float(args_.max())!r},"
                         f"{2.0 * math.asin(r)!r}")
        atomic_write(
            os.path.join(cfg.out_dir, f"probe_argument_{_slug(f.label)}.csv"),
            "\n".join(lines) + "\n")
    sys.stdout.write(f"argument {f.label}: {rep.verdict} "
                     f"(worst slack {rep.margin:.3e})\n")
    return EXIT_PASS if rep.verdict == "pass" else EXIT_FAIL


def cmd_probe(args: argparse.Namespace, cfg: RunConfig) -> int:
    f = zoo.parse_function_spec(args.fn, cfg.order)
    if args.kind == "boundedness":
        return _probe_boundedness(f, cfg)
    return _probe_argument(f, cfg)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unideform",
        description="Power deformations of normalized analytic functions: "
                    "verification suites, exponent regions, probes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=".", help="output directory "
                       "(env UNIDEFORM_OUT overrides)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--order", type=int, default=DEFAULT_ORDER,
                       help="series truncation order")
        p.add_argument("--rmax", type=float, default=0.99,
                       help="largest sampling radius")
        p.add_argument("--angles", type=int, default=512,
                       help="angular samples per radius")
        p.add_argument("--format", action="append", choices=ALL_FORMATS,
                       help="output formats (repeatable; default all)")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[name for name, _ in suites.SUITES]
                   + ["all"])
    common(p)

    p = sub.add_parser("region", help="draw exponent regions")
    p.add_argument("--class", dest="cls", choices=CLASS_TOKENS,
                   help="class token")
    p.add_argument("--fn", help="function spec, e.g. koebe or "
                   "strongly-spirallike:0.3,0.6")
    p.add_argument("--alpha", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    common(p)

    p = sub.add_parser("deform", help="apply a deformation operator")
    p.add_argument("--fn", required=True)
    p.add_argument("--op", required=True, choices=DEFORM_OPS)
    p.add_argument("--c", help='complex exponent, e.g. "0.5" or "1+0.5i"')
    common(p)

    p = sub.add_parser("probe", help="boundary profiles")
    p.add_argument("--fn", required=True)
    p.add_argument("--kind", required=True,
                   choices=("boundedness", "argument"))
    common(p)
    return parser


COMMANDS = {
    "verify": cmd_verify,
    "region": cmd_region,
    "deform": cmd_deform,
    "probe": cmd_probe,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](args, cfg)
    except (ValueError, regions.RegionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
