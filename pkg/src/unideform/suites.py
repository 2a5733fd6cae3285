"""Verification suites behind the `verify` command.

Each suite returns a list of :class:`CheckRow` records, one per check, with
a pass/fail verdict and a numeric margin (positive means slack). The same
suites back the acceptance tests, so the CLI and the test suite cannot
drift apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from . import regions, sampling, zoo
from .functions import (
    AnalyticFunction,
    alexander,
    integral_deform_I,
    integral_deform_J,
    log_coordinate_phi,
    log_coordinate_psi,
    log_derivative_ratio,
    power_deform,
)
from .predicates import (
    SampleGrid,
    boundedness_probe,
    goodman_check,
    is_convex,
    is_locally_univalent,
    is_spirallike,
    is_strongly_spirallike,
    is_univalent_numeric,
    standard_grid,
)
from .series import (
    PowerSeries,
    evaluate,
    evaluate_checked,
    series_exp,
    series_from_json,
    series_log,
    series_mul,
    series_pow,
    series_to_json,
    tail_bound,
    unwrap_arg_along_ray,
    unwrap_arg_rays,
)

OPERATOR_TOL = 1e-10
REGION_TOL = 1e-12
WITNESS_TOL = 1e-6


@dataclass(frozen=True)
class CheckRow:
    """One verification check: named, with a verdict and a slack margin."""
    predicate: str
    function_label: str
    param: str
    verdict: str
    margin: float
    witness: complex = 0j

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def all_passed(rows: Sequence[CheckRow]) -> bool:
    return all(r.passed for r in rows)


def _row(predicate: str, label: str, param: str, err: float, tol: float,
         witness: complex = 0j) -> CheckRow:
    return CheckRow(predicate=predicate, function_label=label, param=param,
                    verdict="pass" if err <= tol else "fail",
                    margin=tol - err, witness=witness)


# -- operator identities -----------------------------------------------------

def _coeff_error(a: PowerSeries, b: PowerSeries,
                 *involved: PowerSeries) -> float:
    """Sup coefficient difference, normalized by the computation's scale.

    Coefficients of deformed functions grow like powers of the index, so
    intermediate series reach 1e9 and beyond at exponent modulus 2 while
    the compared results may stay O(1). The difference is therefore scaled
    by the largest coefficient appearing anywhere in the computation,
    which is the precision actually representable in doubles.
    """
    n = min(a.order, b.order)
    diff = float(np.abs(a.coeffs[: n + 1] - b.coeffs[: n + 1]).max())
    scale = 1.0
    for s in (a, b, *involved):
        scale = max(scale, float(np.abs(s.coeffs).max()))
    return diff / scale


_POINTWISE_CIRCLE = 0.5 * np.exp(
    1j * np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False))


def _pointwise_error(a: PowerSeries, b: PowerSeries) -> float:
    """Relative sup difference of the two series on the circle |z| = 1/2.

    Used for the integral-operator identities, whose coefficient-domain
    comparison is dominated by roundoff in the huge high-order terms;
    evaluation inside the disk damps exactly those terms.
    """
    va = evaluate(a, _POINTWISE_CIRCLE)
    vb = evaluate(b, _POINTWISE_CIRCLE)
    return float(np.abs(va - vb).max()) / max(1.0, float(np.abs(vb).max()))


def operator_zoo(order: int) -> Tuple[AnalyticFunction, ...]:
    return (
        zoo.identity_fn(order),
        zoo.koebe(order),
        zoo.half_plane(order),
        zoo.starlike_order(0.25, order),
        zoo.spirallike_koebe(0.5, order),
        zoo.strongly_starlike(0.5, order),
        zoo.strongly_spirallike(0.3, 0.6, order),
    )


def random_exponent_pairs(n: int, seed: int, radius: float = 2.0) -> np.ndarray:
    """n rows (c, c') drawn uniformly from the disk |c| <= radius."""
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.uniform(size=(n, 2)))
    phi = rng.uniform(0.0, 2.0 * math.pi, size=(n, 2))
    return r * np.exp(1j * phi)


def operators_suite(seed: int = 0, order: int = 64, n_pairs: int = 100,
                    tol: float = OPERATOR_TOL) -> List[CheckRow]:
    """Deformation-operator identities over the zoo and random exponents.

    Checks, as truncated series at the given order:
      * the derivative-ratio transport p_c = 1 - c + c p,
      * the power and integral semigroups K_c K_c' = K_{c c'},
        I_c I_c' = I_{c c'},
      * the factorizations J_c = I_c(J_1) = J_1(K_c),
      * linearity of the two logarithmic coordinates.
    """
    pairs = random_exponent_pairs(n_pairs, seed)
    rows: List[CheckRow] = []
    for f in operator_zoo(order):
        p_f, _ = log_derivative_ratio(f)
        errs = {k: 0.0 for k in
                ("eq-ratio-transport", "K-semigroup", "I-semigroup",
                 "J-factorization", "log-coordinate-linearity")}
        for c, cp in pairs:
            fc = power_deform(f, c)
            p_fc, _ = log_derivative_ratio(fc)
            expected = PowerSeries(
                np.concatenate([[1.0 + 0j], c * p_f.coeffs[1:]]))
            errs["eq-ratio-transport"] = max(
                errs["eq-ratio-transport"],
                _coeff_error(p_fc, expected, fc.h_series))

            errs["K-semigroup"] = max(
                errs["K-semigroup"],
                _coeff_error(power_deform(fc, cp).h_series,
                             power_deform(f, c * cp).h_series))
            ic = integral_deform_I(f, c)
            errs["I-semigroup"] = max(
                errs["I-semigroup"],
                _pointwise_error(
                    integral_deform_I(ic, cp).h_series,
                    integral_deform_I(f, c * cp).h_series))

            jc = integral_deform_J(f, c).h_series
            errs["J-factorization"] = max(
                errs["J-factorization"],
                _pointwise_error(integral_deform_I(alexander(f), c).h_series,
                                 jc),
                _pointwise_error(alexander(fc).h_series, jc))

            errs["log-coordinate-linearity"] = max(
                errs["log-coordinate-linearity"],
                _coeff_error(log_coordinate_psi(fc), log_coordinate_psi(f) * c,
                             fc.h_series),
                _pointwise_error(log_coordinate_phi(ic),
                                 log_coordinate_phi(f) * c))
        for name, err in errs.items():
            rows.append(_row(name, f.label, f"pairs={n_pairs}", err, tol))
    return rows


# -- region algebra vs closed forms -------------------------------------------

def region_error(computed: regions.ExponentRegion,
                  expected: regions.ExponentRegion) -> float:
    """Max mismatch of matched components, inf on a shape mismatch."""
    if (len(computed.disks) != len(expected.disks)
            or len(computed.segments) != len(expected.segments)
            or len(computed.points) != len(expected.points)):
        return math.inf
    err = 0.0
    key = lambda d: (round(d.center.real, 9), round(d.center.imag, 9))
    for dc, de in zip(sorted(computed.disks, key=key),
                      sorted(expected.disks, key=key)):
        err = max(err, abs(dc.center - de.center), abs(dc.radius - de.radius))
    for sc, se in zip(computed.segments, expected.segments):
        err = max(err, abs(sc.start - se.start), abs(sc.end - se.end))
    for pc, pe in zip(sorted(computed.points, key=abs),
                      sorted(expected.points, key=abs)):
        err = max(err, abs(pc - pe))
    return err


def region_class_grid() -> List[regions.ClassSpec]:
    """All class specs exercised by the region suite."""
    alphas = np.round(np.arange(0.1, 0.95, 0.1), 10)
    lams = np.round(np.arange(-1.2, 1.25, 0.1), 10)
    specs = [
        regions.ClassSpec(regions.ClassId.S),
        regions.ClassSpec(regions.ClassId.STARLIKE),
        regions.ClassSpec(regions.ClassId.CONVEX),
        regions.ClassSpec(regions.ClassId.CLOSE_TO_CONVEX),
        regions.ClassSpec(regions.ClassId.SPIRALLIKE_ALL),
    ]
    specs += [regions.ClassSpec(regions.ClassId.STARLIKE_ORDER, alpha=a)
              for a in alphas]
    specs += [regions.ClassSpec(regions.ClassId.STRONGLY_STARLIKE, alpha=a)
              for a in alphas]
    specs += [regions.ClassSpec(regions.ClassId.SPIRALLIKE, lam=l)
              for l in lams]
    specs += [regions.ClassSpec(regions.ClassId.STRONGLY_SPIRALLIKE,
                                lam=l, alpha=a)
              for a in alphas for l in lams if abs(l) < math.pi * a / 2]
    return specs


def regions_suite(tol: float = REGION_TOL) -> List[CheckRow]:
    """Computed complement-of-T-image vs the closed-form exponent regions."""
    rows: List[CheckRow] = []
    worst = {}
    for spec in region_class_grid():
        computed = regions.complement_of_T_image(
            regions.closed_form_variability(spec))
        expected = regions.closed_form_exponent_region(spec)
        err = region_error(computed, expected)
        name = spec.id.value
        if name not in worst or err > worst[name][0]:
            worst[name] = (err, spec.describe())
    for name, (err, param) in worst.items():
        rows.append(_row("region-vs-closed-form", name, param, err, tol))

    # scaling consistency: region(S*(alpha)) = region(S*) / (1 - alpha)
    base = regions.closed_form_exponent_region(
        regions.ClassSpec(regions.ClassId.STARLIKE))
    err = 0.0
    for a in (0.25, 0.5, 0.75):
        scaled = regions.scale_region(base, 1.0 / (1.0 - a))
        expected = regions.closed_form_exponent_region(
            regions.ClassSpec(regions.ClassId.STARLIKE_ORDER, alpha=a))
        err = max(err, region_error(scaled, expected))
    rows.append(_row("region-scaling", "S*(alpha)", "alpha=0.25,0.5,0.75",
                     err, tol))

    # nesting: the segment region sits inside every half-plane-class disk
    seg = regions.closed_form_exponent_region(
        regions.ClassSpec(regions.ClassId.SPIRALLIKE_ALL))
    ok = all(regions.region_subset(seg, regions.closed_form_exponent_region(s))
             for s in (regions.ClassSpec(regions.ClassId.STARLIKE),
                       regions.ClassSpec(regions.ClassId.CONVEX)))
    rows.append(CheckRow("region-nesting", "Sp", "segment in disks",
                         "pass" if ok else "fail", 0.0 if ok else -1.0))
    return rows


# -- inward/outward sampling of the exponent regions ---------------------------

# grid radii for the inward spirallike test stay at 0.95: the admissible
# rotation angle is pinned exactly at arg of the deformed derivative ratio
# limit, and the margin degrades like (1 + r)/(1 - r) times the squared
# angular grid spacing
BOUNDARY_GRID = SampleGrid(
    radii=(0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95),
    angles_per_radius=512, uses_exact_eval=True)
LAMBDA_GRID = np.linspace(-1.55, 1.55, 64)


def exponent_region_cases() -> List[Tuple[regions.ClassSpec, AnalyticFunction]]:
    """Disk-bounded classes paired with their extremal functions."""
    order = 128
    return [
        (regions.ClassSpec(regions.ClassId.STARLIKE), zoo.koebe(order)),
        (regions.ClassSpec(regions.ClassId.STARLIKE_ORDER, alpha=0.25),
         zoo.starlike_order(0.25, order)),
        (regions.ClassSpec(regions.ClassId.STARLIKE_ORDER, alpha=0.5),
         zoo.starlike_order(0.5, order)),
        (regions.ClassSpec(regions.ClassId.CONVEX), zoo.half_plane(order)),
        (regions.ClassSpec(regions.ClassId.SPIRALLIKE, lam=0.5),
         zoo.spirallike_koebe(0.5, order)),
        (regions.ClassSpec(regions.ClassId.STRONGLY_STARLIKE, alpha=0.5),
         zoo.strongly_starlike(0.5, order)),
        (regions.ClassSpec(regions.ClassId.STRONGLY_SPIRALLIKE,
                           lam=0.3, alpha=0.6),
         zoo.strongly_spirallike(0.3, 0.6, order)),
    ]


def inward_outward_suite(n_points: int = 32,
                         inward_factor: float = 0.96,
                         outward_factor: float = 1.04) -> List[CheckRow]:
    """Exponents just inside the region keep the deformation spirallike;
    exponents just outside destroy local univalence with an explicit
    critical-point witness."""
    rows: List[CheckRow] = []
    for spec, f in exponent_region_cases():
        region = regions.closed_form_exponent_region(spec)
        boundary, centers = regions.region_boundary_points(region, n_points)
        z = BOUNDARY_GRID.points().ravel()
        p_vals = np.asarray(f.p_exact(z), dtype=complex)

        worst_in = math.inf
        witness_in = 0j
        for c, ctr in zip(boundary, centers):
            c_in = ctr + inward_factor * (c - ctr)
            # derivative-ratio transport: margin of K_c[f] at angle lam is
            # min Re(e^{-i lam} (1 - c + c p)) over the grid
            pc = (1.0 - c_in) + c_in * p_vals
            margins = (np.exp(-1j * LAMBDA_GRID)[:, None] * pc[None, :]).real
            best = int(np.argmax(margins.min(axis=1)))
            rep = is_spirallike(power_deform(f, c_in),
                                float(LAMBDA_GRID[best]), BOUNDARY_GRID)
            m = rep.margin if rep.verdict == "pass" else -math.inf
            if m < worst_in:
                worst_in, witness_in = m, c_in
        rows.append(CheckRow(
            "inward-spirallike", f.label, spec.describe(),
            "pass" if worst_in > 0 else "fail", worst_in, witness_in))

        worst_out = 0.0
        witness_out = 0j
        ok = True
        for c, ctr in zip(boundary, centers):
            c_out = ctr + outward_factor * (c - ctr)
            rep = is_locally_univalent(power_deform(f, c_out), BOUNDARY_GRID)
            good = (rep.verdict == "fail" and rep.witness is not None
                    and abs(rep.witness[1]) < WITNESS_TOL)
            if not good:
                ok = False
                witness_out = c_out
                break
            worst_out = max(worst_out, abs(rep.witness[1]))
        rows.append(CheckRow(
            "outward-nonunivalent", f.label, spec.describe(),
            "pass" if ok else "fail",
            (WITNESS_TOL - worst_out) if ok else -1.0, witness_out))
    return rows


# -- boundedness probes ---------------------------------------------------------

def boundedness_suite() -> List[CheckRow]:
    """Bounded log-ratio for strongly spirallike extremals; growing control."""
    rows: List[CheckRow] = []
    cases = [((0.0, 0.5), "bounded-plateau"),
             ((0.3, 0.6), "bounded-plateau"),
             ((-0.5, 0.8), "bounded-plateau")]
    for (lam, alpha), expected in cases:
        f = zoo.strongly_spirallike(lam, alpha, 64) if lam else \
            zoo.strongly_starlike(alpha, 64)
        prof = boundedness_probe(f)
        rows.append(CheckRow(
            "boundedness-profile", f.label, f"expect={expected}",
            "pass" if prof.verdict == expected else "fail",
            0.0, complex(prof.values[-1])))

    prof = boundedness_probe(zoo.koebe(64))
    m_last = prof.values[-1]
    ok = prof.verdict == "growing" and 13.0 <= m_last <= 14.5
    rows.append(CheckRow(
        "boundedness-profile", "koebe", "expect=growing,M in [13,14.5]",
        "pass" if ok else "fail", min(m_last - 13.0, 14.5 - m_last),
        complex(m_last)))

    # negative direction of the exponent half: K_c with Re c < 0 cannot
    # stay injective on a large subdisk
    for c in (-0.1, -0.1 + 0.5j):
        g = power_deform(zoo.koebe(256), c)
        rep = is_univalent_numeric(g, 0.99)
        rows.append(CheckRow(
            "univalence-breakdown", g.label, "r=0.99",
            "pass" if rep.verdict == "fail" else "fail",
            -rep.margin if rep.verdict == "fail" else -1.0,
            rep.witness[0] if rep.witness else 0j))
    return rows


# -- argument bound ----------------------------------------------------------

def goodman_suite() -> List[CheckRow]:
    """|Arg f/z| <= 2 arcsin|z| on the starlike test set."""
    grid = standard_grid(exact=True)
    rows = []
    for f in (zoo.identity_fn(64), zoo.koebe(128),
              zoo.starlike_order(0.25, 128), zoo.starlike_order(0.5, 128)):
        rep = goodman_check(f, grid)
        rows.append(CheckRow(
            "argument-bound", f.label, "slack=1e-9",
            "pass" if rep.verdict == "pass" else "fail", rep.margin,
            rep.witness[0] if rep.witness else 0j))
    return rows


# -- whole-surface smoke coverage -----------------------------------------------

def _surface_ops() -> List[Tuple[str, Callable[[], bool]]]:
    """Every public operation exercised once at small size.

    The returned names are asserted against the package API in the test
    suite, so `verify all` demonstrably touches the whole surface.
    """
    f = zoo.koebe(32)
    g = zoo.strongly_spirallike(0.2, 0.5, 32)
    grid = SampleGrid(radii=(0.3, 0.6, 0.9), angles_per_radius=64,
                      uses_exact_eval=True)
    spec = regions.ClassSpec(regions.ClassId.STRONGLY_STARLIKE, alpha=0.5)
    region = regions.closed_form_exponent_region(spec)
    s = PowerSeries(np.array([1.0, 0.25, 0.125], dtype=complex))

    def _finite(x) -> bool:
        return bool(np.all(np.isfinite(np.atleast_1d(np.asarray(x)))))

    ray = np.exp(0.3j * np.linspace(0.0, 1.0, 32))
    ops: List[Tuple[str, Callable[[], bool]]] = [
        ("series_mul", lambda: _finite(series_mul(s, s).coeffs)),
        ("series_log", lambda: _finite(series_log(s).coeffs)),
        ("series_exp", lambda: abs(series_exp(series_log(s)).coeffs
                                   - s.coeffs).max() < 1e-12),
        ("series_pow", lambda: _finite(series_pow(s, 0.5 + 0.1j).coeffs)),
        ("evaluate", lambda: _finite(evaluate(s, 0.5 + 0j))),
        ("evaluate_checked", lambda: _finite(evaluate_checked(
            PowerSeries(0.5 ** np.arange(65, dtype=complex)), 0.25 + 0j))),
        ("tail_bound", lambda: tail_bound(f.h_series, 0.5) >= 0.0),
        ("unwrap_arg_along_ray",
         lambda: _finite(unwrap_arg_along_ray(ray))),
        ("unwrap_arg_rays",
         lambda: _finite(unwrap_arg_rays(np.tile(ray[:, None], (1, 4))))),
        ("series_to_json/from_json",
         lambda: series_from_json(series_to_json(s)).coeffs[1] == s.coeffs[1]),
        ("power_deform",
         lambda: _finite(power_deform(f, 0.5).h_series.coeffs)),
        ("alexander", lambda: _finite(alexander(f).h_series.coeffs)),
        ("integral_deform_I",
         lambda: _finite(integral_deform_I(f, 0.3).h_series.coeffs)),
        ("integral_deform_J",
         lambda: _finite(integral_deform_J(f, 0.3).h_series.coeffs)),
        ("log_coordinate_psi", lambda: _finite(log_coordinate_psi(f).coeffs)),
        ("log_coordinate_phi", lambda: _finite(log_coordinate_phi(f).coeffs)),
        ("log_derivative_ratio",
         lambda: _finite(log_derivative_ratio(f)[0].coeffs)),
        ("zoo.make_named",
         lambda: zoo.make_named(zoo.ZooSpec("koebe"), 16).label == "koebe"),
        ("zoo.parse_function_spec",
         lambda: zoo.parse_function_spec("starlike-order:0.5", 16)
         .label == "starlike-order:0.5"),
        ("regions.mobius_T",
         lambda: abs(regions.mobius_T(regions.mobius_T_inv(0.5 + 0j))
                     - 0.5) < 1e-14),
        ("regions.closed_form_variability",
         lambda: regions.closed_form_variability(spec) is not None),
        ("regions.closed_form_exponent_region",
         lambda: len(region.disks) == 2),
        ("regions.complement_of_T_image",
         lambda: len(regions.complement_of_T_image(
             regions.closed_form_variability(spec)).disks) == 2),
        ("regions.signed_distance",
         lambda: regions.signed_distance(region, 0.5 + 0j) < 0),
        ("regions.region_contains",
         lambda: regions.region_contains(region, 10.0 + 0j) == "outside"),
        ("regions.scale_region",
         lambda: regions.scale_region(region, 2.0).disks[0].radius
         == 2.0 * region.disks[0].radius),
        ("regions.region_subset",
         lambda: regions.region_subset(region, regions.scale_region(
             region, 1.0))),
        ("regions.region_boundary_points",
         lambda: regions.region_boundary_points(region, 8)[0].size == 8),
        ("sampling.winding_number",
         lambda: sampling.winding_number(
             np.exp(2j * math.pi * np.linspace(0, 1, 64, endpoint=False)),
             0j) == 1),
        ("sampling.winding_numbers",
         lambda: int(sampling.winding_numbers(
             np.exp(2j * math.pi * np.linspace(0, 1, 64, endpoint=False)),
             np.array([0j, 3.0 + 0j]))[0]) == 1),
        ("sampling.sampled_exponent_region",
         lambda: sampling.sampled_exponent_region(
             f, grid, resolution=64).complement.any()),
        ("is_locally_univalent",
         lambda: is_locally_univalent(f, grid).verdict == "pass"),
        ("is_spirallike",
         lambda: is_spirallike(f, 0.0, grid).verdict == "pass"),
        ("is_strongly_spirallike",
         lambda: is_strongly_spirallike(g, 0.2, 0.5, grid).verdict == "pass"),
        ("is_convex",
         lambda: is_convex(zoo.half_plane(32), grid).verdict == "pass"),
        ("is_univalent_numeric",
         lambda: is_univalent_numeric(f, 0.9, n=512).verdict == "pass"),
        ("goodman_check",
         lambda: goodman_check(f, grid).verdict == "pass"),
        ("boundedness_probe",
         lambda: boundedness_probe(zoo.identity_fn(16)).verdict
         == "bounded-plateau"),
    ]
    return ops


SURFACE_OP_NAMES = tuple(name for name, _ in _surface_ops())


def surface_suite() -> List[CheckRow]:
    """One smoke check per public operation."""
    rows = []
    for name, thunk in _surface_ops():
        try:
            ok = bool(thunk())
        except Exception:  # noqa: BLE001 - a crash is a failing check
            ok = False
        rows.append(CheckRow("surface", name, "", "pass" if ok else "fail",
                             0.0 if ok else -1.0))
    return rows


SUITES: Tuple[Tuple[str, Callable[..., List[CheckRow]]], ...] = (
    ("operators", operators_suite),
    ("regions", lambda seed=0: regions_suite()),
    ("boundary", lambda seed=0: inward_outward_suite()),
    ("boundedness", lambda seed=0: boundedness_suite()),
    ("goodman", lambda seed=0: goodman_suite()),
    ("surface", lambda seed=0: surface_suite()),
)


def run_suite(name: str, seed: int = 0) -> List[CheckRow]:
    for sname, fn in SUITES:
        if sname == name:
            return fn(seed=seed)
    raise ValueError(f"unknown suite {name!r}")


def run_all(seed: int = 0) -> List[CheckRow]:
    rows: List[CheckRow] = []
    for name, fn in SUITES:
        rows.extend(fn(seed=seed))
    return rows
