"""Experiment runners behind the ``bergman`` subcommands.

Each runner takes an :class:`ExperimentConfig`, writes its tables under the
output directory and returns an exit status: 0 on success, 1 when an
acceptance check or golden comparison fails.
"""
import itertools
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..analysis.functionals import comparability_report, evaluate_functionals, partial_integrals, theorem1_quantities
from ..analysis.inequalities import embedding_check, energy_check, local_estimate_check
from ..analysis.pseudo_balls import pseudo_ball_volume_exact, tau_mass, volume_ratios
from ..analysis.sharpness import sharpness_profile
from ..core.automorphism import Involution, UnitaryMap
from ..core.errors import ParameterError
from ..core.params import METHODS, IntegralEstimate, QuadratureSpec, WeightParams
from ..functions.derivatives import chain_violations, invariant_gradient_definitional, invariant_gradient_norm
from ..functions.polynomial import Polynomial
from ..kernels.operators import (
    H_kernel,
    H_kernel_exact,
    forelli_rudin_exact,
    forelli_rudin_ratio,
    forelli_rudin_supremum,
    operator_bound_probe,
    reproducing_residual,
    straddling_grid,
)
from ..quadrature.divergence import halving_cutoffs
from ..quadrature.measures import WeightedMeasure, ball_monomial_norm
from ..quadrature.rules import integrate_ball, polar_decompose_check
from ..quadrature.sampling import sphere_points, stream_generator
from ..quadrature.slices import slice_reduction_check
from .config import ExperimentConfig
from .golden import GoldenStore, check_golden
from .output import data_digest, write_csv, write_manifest, write_series

logger = logging.getLogger(__name__)

STATUS_OK = 0
STATUS_FAILED = 1

ENVELOPE_BOUNDS = (1e-3, 1e3)
RESIDUAL_LIMIT = 1e-3
PROXY_FACTOR = 1.5
SUPREMUM_RTOL = 1e-2
CHAIN_SAMPLES = 10_000
IDENTITY_RTOL = 1e-5
INVARIANCE_RTOL = 1e-5
SPREAD_LIMIT = 10.0
SIGMAS = 4.0
IMAGE_RTOL = 1e-3
IMAGE_RTOL_SAMPLED = 2e-2

LEMMA_STREAM = 2_000_003
FORELLI_RADII = (0.0, 0.5, 0.7, 0.8, 0.9, 0.95, 0.97, 0.99)
PSEUDO_CENTERS = (0.0, 0.3, 0.6, 0.9)
H_POINTS = (0.0, 0.1, 0.3, 0.6, 0.9, 0.99, 0.5j, 0.6 + 0.6j, -0.9)

Row = Dict[str, object]


def _finish(config: ExperimentConfig, name: str, paths: Sequence[Path], envelopes, deterministic: bool,
            status: int) -> int:
    store = GoldenStore(config.golden_dir)
    golden_status = check_golden(store, name, config.golden_mode, data_digest(paths), envelopes, deterministic)
    return max(status, golden_status)


def _deterministic(config: ExperimentConfig) -> bool:
    return config.spec.method == "product-rule"


def _param_key(params: WeightParams) -> str:
    return f"n={params.n} p={params.p!r} q={params.q!r} alpha={params.alpha!r}"


def _param_columns(params: WeightParams) -> Row:
    return {"n": params.n, "p": params.p, "q": params.q, "alpha": params.alpha}


def _ball_points(rng: np.random.Generator, count: int, n: int, radius: float) -> np.ndarray:
    """Points uniform in the Euclidean ball of the given radius."""
    r = radius * rng.random(count) ** (1.0 / (2 * n))
    return r[:, None] * sphere_points(rng, count, n, antithetic=False)


def polynomial_family(n: int, degree: int = 4) -> List[Tuple[str, Polynomial]]:
    """Every monomial of total degree <= ``degree`` in n variables."""
    out = []
    for index in itertools.product(range(degree + 1), repeat=n):
        if sum(index) <= degree:
            out.append(("z^" + "".join(str(m) for m in index), Polynomial.monomial(index)))
    return out


# compare / theorem1

COMPARE_FIELDS = ["label", "descriptor", "n", "p", "q", "alpha", "in_range",
                  "I1", "I1_stderr", "I2", "I2_stderr", "I3", "I3_stderr", "I4", "I4_stderr",
                  "ratio2", "ratio3", "ratio4", "diverged"]
PARTIAL_FIELDS = ["label", "n", "p", "q", "alpha", "k", "value", "stderr", "ratio"]


def run_compare(config: ExperimentConfig) -> int:
    rows, partial_rows, envelopes = [], [], {}
    status = STATUS_OK
    for params in config.params:
        family = config.family_for(params.n)
        if not family:
            logger.warning("no test functions of %d variables; skipping %s", params.n, _param_key(params))
            continue
        labels, functions = zip(*family)
        report = comparability_report(functions, params, config.spec, labels)
        for row, f in zip(report.rows, functions):
            ratios = row.ratios() or (float("nan"),) * 3
            out = {"label": row.label, "descriptor": f.describe(), "in_range": params.in_range,
                   "ratio2": ratios[0], "ratio3": ratios[1], "ratio4": ratios[2],
                   "diverged": any(e.diverged for e in row.estimates), **_param_columns(params)}
            for k, estimate in enumerate(row.estimates, start=1):
                out[f"I{k}"] = estimate.value
                out[f"I{k}_stderr"] = estimate.stderr
            rows.append(out)
            i1 = row.estimates[0].value
            for k, estimate in enumerate(partial_integrals(f, params, config.spec), start=1):
                partial_rows.append({"label": row.label, "k": k, "value": estimate.value, "stderr": estimate.stderr,
                                     "ratio": (row.f0_power + estimate.value) / i1 if i1 > 0 else float("nan"),
                                     **_param_columns(params)})
        envelope = report.envelope()
        if envelope is None:
            continue
        envelopes[_param_key(params)] = envelope
        lo, hi = ENVELOPE_BOUNDS
        if params.in_range and not (lo <= envelope[0] and envelope[1] <= hi):
            logger.error("comparability envelope [%g, %g] for %s leaves [%g, %g]", envelope[0], envelope[1],
                         _param_key(params), lo, hi)
            status = STATUS_FAILED
    echo = config.echo()
    paths = [write_csv(config.output_dir / "compare.csv", echo, COMPARE_FIELDS, rows),
             write_csv(config.output_dir / "compare_partials.csv", echo, PARTIAL_FIELDS, partial_rows)]
    return _finish(config, "compare", paths, envelopes, _deterministic(config), status)


THEOREM1_FIELDS = ["label", "n", "p", "alpha", "I1", "radial", "gradient", "invariant", "reduction_identical"]


def run_theorem1(config: ExperimentConfig) -> int:
    """Functionals with q = p, cross-checked against the general evaluation on the same nodes."""
    rows, envelopes = [], {}
    status = STATUS_OK
    for params in dict.fromkeys(params.with_q(params.p) for params in config.params):
        values = []
        for label, f in config.family_for(params.n):
            general = evaluate_functionals(f, params, config.spec)
            reduced = theorem1_quantities(f, params, config.spec)
            identical = all(a.value == b.value for a, b in zip(general[1:], reduced))
            if not identical:
                logger.error("q=p reduction differs from the general functionals for %s", label)
                status = STATUS_FAILED
            rows.append({"label": label, "I1": general[0].value, "radial": reduced[0].value,
                         "gradient": reduced[1].value, "invariant": reduced[2].value,
                         "reduction_identical": identical, **_param_columns(params)})
            if general[0].value > 0:
                f0 = abs(f(np.zeros(f.n))) ** params.p
                values += [(f0 + e.value) / general[0].value for e in reduced]
        if values:
            envelopes[_param_key(params)] = (min(values), max(values))
    rows.sort(key=lambda r: (r["n"], r["p"], r["alpha"], r["label"]))
    path = write_csv(config.output_dir / "theorem1.csv", config.echo(), THEOREM1_FIELDS, rows)
    return _finish(config, "theorem1", [path], envelopes, _deterministic(config), status)


# kernel checks

CHECK_FIELDS = ["section", "check", "label", "value", "limit", "ok"]


def _reproducing_rows(config: ExperimentConfig, section) -> List[Row]:
    spec = config.spec.replace(angle_points=max(config.spec.angle_points, 24))
    rows = []
    points = {1: [(0.5,), (0.3 + 0.4j,)], 2: [(0.5, 0.0), (0.3, 0.2j)]}
    for n, alpha in itertools.product((1, 2), (0.0, 1.0)):
        for (label, f), z in itertools.product(polynomial_family(n), points[n]):
            residual = reproducing_residual(f, z, alpha, spec)
            rows.append({"section": section, "check": "reproducing-residual",
                         "label": f"{label} alpha={alpha:g} z={z}", "value": residual, "limit": RESIDUAL_LIMIT,
                         "ok": residual < RESIDUAL_LIMIT})
    return rows


def _forelli_rudin_rows(config: ExperimentConfig, section) -> List[Row]:
    rows = []
    for alpha, t in itertools.product((0.0, 1.0), (0.5, 1.0, 2.0)):
        ratios = {r: forelli_rudin_ratio((r,), alpha, t, config.spec) for r in FORELLI_RADII}
        inner = max(v for r, v in ratios.items() if r <= 0.9)
        outer = max(ratios.values())
        supremum = forelli_rudin_supremum(1, alpha, t)
        ok = outer <= PROXY_FACTOR * inner or outer <= supremum * (1.0 + SUPREMUM_RTOL)
        label = f"alpha={alpha:g} t={t:g}"
        rows.append({"section": section, "check": "forelli-rudin-growth", "label": label,
                     "value": outer / inner, "limit": PROXY_FACTOR, "ok": ok})
        rows.append({"section": section, "check": "forelli-rudin-supremum", "label": label,
                     "value": outer, "limit": supremum, "ok": outer <= supremum * (1.0 + SUPREMUM_RTOL)})
    return rows


def _h_kernel_rows(section, spec: QuadratureSpec, beta: int = 1, p: float = 2.0, q: float = 1.0) -> List[Row]:
    rows = []
    for x in H_POINTS:
        # <z, w> = x with |z| = |w| = sqrt|x|
        s = np.sqrt(abs(x))
        z = np.array([complex(x) / s if s else 0.0])
        w = np.array([s], dtype=complex)
        value, bound = H_kernel(z, w, beta, p, q, spec)
        exact = H_kernel_exact(complex(x), 1, beta, p, q)
        error = abs(value - exact)
        rows.append({"section": section, "check": "H-closed-form", "label": f"x={x}", "value": error,
                     "limit": 1e-6 * (1.0 + abs(exact)), "ok": error <= 1e-6 * (1.0 + abs(exact))})
        rows.append({"section": section, "check": "H-bound-ratio", "label": f"x={x}", "value": bound,
                     "limit": float("nan"), "ok": bool(np.isfinite(bound))})
    return rows


def _envelope(rows: List[Row], check: str) -> Optional[Tuple[float, float]]:
    values = [float(r["value"]) for r in rows if r["check"] == check and np.isfinite(float(r["value"]))]
    return (min(values), max(values)) if values else None


def _check_envelopes(rows: List[Row], checks: Sequence[str]) -> Dict[str, Tuple[float, float]]:
    out = {}
    for check in checks:
        envelope = _envelope(rows, check)
        if envelope is not None:
            out[check] = envelope
    return out


def _failures(rows: List[Row]) -> int:
    failed = [r for r in rows if not r["ok"]]
    for row in failed:
        logger.error("check %s failed for %s: %s (limit %s)", row["check"], row["label"], row["value"], row["limit"])
    return STATUS_FAILED if failed else STATUS_OK


def run_kernel_check(config: ExperimentConfig) -> int:
    rows = _reproducing_rows(config, "reproducing") + _forelli_rudin_rows(config, "forelli-rudin")
    kernel = config.section("kernel")
    rows += _h_kernel_rows("H", config.spec, kernel.get_int("beta", 1), kernel.get_float("p", 2.0),
                           kernel.get_float("q", 1.0))
    path = write_csv(config.output_dir / "kernel_check.csv", config.echo(), CHECK_FIELDS, rows)
    envelopes = _check_envelopes(rows, ("forelli-rudin-growth", "H-bound-ratio"))
    return _finish(config, "kernel_check", [path], envelopes, True, _failures(rows))


# operator probe

PROBE_FIELDS = ["a", "b", "p", "alpha", "predicted", "observed", "max_ratio", "slope", "image_error"]


def _probe_grid(config: ExperimentConfig) -> Tuple[List[Tuple[float, float, float]], float, int, int]:
    probe = config.section("probe")
    alpha = probe.get_float("alpha", 0.0)
    if {"a", "b", "p"} <= set(probe.values):
        grid = list(itertools.product(probe.get_floats("a"), probe.get_floats("b"), probe.get_floats("p")))
    else:
        grid = straddling_grid(alpha)
    return grid, alpha, probe.get_int("n", 1), probe.get_int("witnesses", 6)


def _probe_rows(config: ExperimentConfig) -> List[Row]:
    grid, alpha, n, witnesses = _probe_grid(config)
    rows = []
    for a, b, p in grid:
        result = operator_bound_probe(a, b, p, alpha, n, witnesses, config.spec)
        rows.append({"a": a, "b": b, "p": p, "alpha": alpha, "predicted": result.predicted,
                     "observed": result.observed, "max_ratio": result.max_ratio, "slope": result.slope,
                     "image_error": result.image_error})
    return rows


def run_operator_probe(config: ExperimentConfig) -> int:
    rows = _probe_rows(config)
    mismatches = [r for r in rows if r["predicted"] != r["observed"]]
    limit = IMAGE_RTOL if _deterministic(config) else IMAGE_RTOL_SAMPLED
    inexact = [r for r in rows if r["image_error"] > limit]
    for row in inexact:
        logger.error("closed-form witness image at a=%g b=%g p=%g is off by %.3g against quadrature", row["a"],
                     row["b"], row["p"], row["image_error"])
    for row in mismatches:
        logger.error("probe verdict %s at a=%g b=%g p=%g differs from the predicted %s", row["observed"], row["a"],
                     row["b"], row["p"], row["predicted"])
    logger.info("%d/%d probe verdicts match the boundedness criterion", len(rows) - len(mismatches), len(rows))
    path = write_csv(config.output_dir / "operator_probe.csv", config.echo(), PROBE_FIELDS, rows)
    return _finish(config, "operator_probe", [path], {}, True, STATUS_FAILED if mismatches or inexact else STATUS_OK)


# sharpness

SHARPNESS_FIELDS = ["n", "p", "q", "alpha", "classification", "expected", "increment_slope", "log_slope",
                    "truncated_final"]


def run_sharpness(config: ExperimentConfig) -> int:
    section = config.section("sharpness")
    p = section.get_float("p", 1.0)
    alpha = section.get_float("alpha", 0.0)
    n = section.get_int("n", 1)
    radius = section.get_float("radius", 0.5)
    cutoffs = halving_cutoffs(section.get_int("first", 3), section.get_int("last", 16))
    rows, manifest = [], []
    status = STATUS_OK
    for q in section.get_floats("q", [p + 1.5, p + 2.0, p + 2.5]):
        profile = sharpness_profile(p, alpha, n, q, cutoffs, radius)
        rows.append({"n": n, "p": p, "q": q, "alpha": alpha, "classification": profile.classification,
                     "expected": profile.expected, "increment_slope": profile.fit.increment_slope,
                     "log_slope": profile.fit.log_slope, "truncated_final": profile.rows[-1][1]})
        name = f"sharpness_n{n}_p{p:g}_q{q:g}"
        series = write_series(config.output_dir / "series", name, profile.rows, ("eps", "truncated"),
                              config.echo())
        manifest.append({"file": series.name, "n": str(n), "p": repr(p), "q": repr(q), "alpha": repr(alpha),
                         "classification": profile.classification})
        if profile.classification != profile.expected:
            logger.error("q=%g classified %s, expected %s", q, profile.classification, profile.expected)
            status = STATUS_FAILED
    path = write_csv(config.output_dir / "sharpness.csv", config.echo(), SHARPNESS_FIELDS, rows)
    write_manifest(config.output_dir / "series", manifest)
    return _finish(config, "sharpness", [path], {}, True, status)


# lemma checks

def _embedding_rows(config: ExperimentConfig, section) -> List[Row]:
    rows = []
    for n in (1, 2):
        for (label, f), p in itertools.product(config.family_for(n), (0.5, 1.0)):
            ratio = embedding_check(f, p, 0.0, config.spec)
            rows.append({"section": section, "check": "embedding-ratio", "label": f"{label} n={n} p={p:g}",
                         "value": ratio, "limit": float("nan"), "ok": bool(np.isfinite(ratio) and ratio > 0)})
    return rows


def _probe_section_rows(config: ExperimentConfig, section) -> List[Row]:
    return [{"section": section, "check": "operator-verdict", "label": f"a={r['a']:g} b={r['b']:g} p={r['p']:g}",
             "value": r["max_ratio"], "limit": float("nan"), "ok": r["predicted"] == r["observed"]}
            for r in _probe_rows(config)]


def _gradient_chain_rows(config: ExperimentConfig, section) -> List[Row]:
    rng = stream_generator(config.spec.seed, LEMMA_STREAM)
    rows = []
    for n in (1, 2):
        family = config.family_for(n)
        if not family:
            continue
        per_function = CHAIN_SAMPLES // (2 * len(family))
        for label, f in family:
            points = _ball_points(rng, per_function, n, 0.99)
            broken = chain_violations(f, points, slack=1e-9)
            rows.append({"section": section, "check": "chain-violations", "label": f"{label} n={n}",
                         "value": broken, "limit": 0, "ok": broken == 0})
            sample = points[:20]
            identity = invariant_gradient_norm(f, sample)
            definitional = invariant_gradient_definitional(f, sample)
            gap = np.abs(identity - definitional) / np.maximum(np.maximum(identity, definitional), 1e-12)
            worst = float(np.max(np.where(np.maximum(identity, definitional) > 1e-12, gap, 0.0)))
            rows.append({"section": section, "check": "identity-vs-definition", "label": f"{label} n={n}",
                         "value": worst, "limit": IDENTITY_RTOL, "ok": worst < IDENTITY_RTOL})
            worst = 0.0
            for _ in range(2):
                for automorphism in (Involution(_ball_points(rng, 1, n, 0.5)[0]), UnitaryMap.random(n, rng)):
                    z = _ball_points(rng, 25, n, 0.9)
                    moved = invariant_gradient_definitional(f.compose(automorphism), z)
                    direct = invariant_gradient_norm(f, automorphism(z))
                    scale = np.maximum(direct, 1e-12)
                    worst = max(worst, float(np.max(np.abs(moved - direct) / scale * (direct > 1e-12))))
            rows.append({"section": section, "check": "moebius-invariance", "label": f"{label} n={n}",
                         "value": worst, "limit": INVARIANCE_RTOL, "ok": worst < INVARIANCE_RTOL})
    return rows


def _pseudo_ball_rows(config: ExperimentConfig, section) -> List[Row]:
    rows = []
    for n in (1, 2):
        centers = [np.array([r] + [0.0] * (n - 1), dtype=complex) for r in PSEUDO_CENTERS]
        ratios, spread = volume_ratios(centers, 0.5, config.spec)
        rows.append({"section": section, "check": "volume-ratio-spread", "label": f"n={n} rho=0.5",
                     "value": spread, "limit": SPREAD_LIMIT, "ok": spread < SPREAD_LIMIT})
        for center, ratio in zip(centers, ratios):
            rows.append({"section": section, "check": "volume-ratio", "label": f"n={n} |z|={abs(center[0]):g}",
                         "value": ratio, "limit": float("nan"), "ok": bool(np.isfinite(ratio) and ratio > 0)})
        exact_mass = (0.25 ** 2 / (1.0 - 0.25 ** 2)) ** n
        for center in centers:
            mass = tau_mass(center, 0.25, config.spec)
            rows.append({"section": section, "check": "tau-mass", "label": f"n={n} |z|={abs(center[0]):g}",
                         "value": mass.value, "limit": exact_mass,
                         "ok": mass.agrees_with(exact_mass, sigmas=SIGMAS, rtol=1e-9)})
            exact_volume = pseudo_ball_volume_exact(center, 0.25)
            rows.append({"section": section, "check": "volume-closed-form", "label": f"n={n} |z|={abs(center[0]):g}",
                         "value": exact_volume, "limit": float("nan"), "ok": exact_volume > 0})
    return rows


def _energy_rows(config: ExperimentConfig, section) -> List[Row]:
    rows = []
    for n in (1, 2):
        for (label, f), p in itertools.product(config.family_for(n), (1.0, 2.0)):
            forward, backward = energy_check(f, p, config.spec)
            rows.append({"section": section, "check": "energy-ratio", "label": f"{label} n={n} p={p:g}",
                         "value": forward, "limit": float("nan"),
                         "ok": bool(np.isfinite(forward) and np.isfinite(backward) and forward > 0)})
    return rows


def _local_rows(config: ExperimentConfig, section) -> List[Row]:
    rows = []
    p = 2.0
    for n in (1, 2):
        for (label, f), q in itertools.product(config.family_for(n), (1.0, 2.0, 3.0, 4.0)):
            estimate = local_estimate_check(f, WeightParams(p, q, 0.0, n), config.spec)
            if estimate.critical_q is not None:
                ok = estimate.diverged == (q >= estimate.critical_q) and (estimate.diverged or bool(np.isfinite(estimate.ratio)))
            else:
                ok = bool(np.isfinite(estimate.ratio)) and not estimate.diverged
            rows.append({"section": section, "check": "local-ratio" if not estimate.diverged else "local-divergence",
                         "label": f"{label} n={n} q={q:g}", "value": estimate.ratio, "limit": float("nan"), "ok": ok})
    return rows


LEMMA_SECTIONS: Dict[int, Callable[[ExperimentConfig, int], List[Row]]] = {
    3: _embedding_rows,
    4: _probe_section_rows,
    5: _gradient_chain_rows,
    6: _reproducing_rows,
    7: _forelli_rudin_rows,
    8: _pseudo_ball_rows,
    9: _energy_rows,
    10: _local_rows,
}


def run_lemma_checks(config: ExperimentConfig, lemmas: Optional[Sequence[int]] = None) -> int:
    lemmas = sorted(lemmas or config.section("lemmas").get_ints("sections", sorted(LEMMA_SECTIONS)))
    unknown = [k for k in lemmas if k not in LEMMA_SECTIONS]
    if unknown:
        raise ParameterError(f"No lemma check numbered {unknown[0]}; available: {sorted(LEMMA_SECTIONS)}")
    rows = []
    for number in lemmas:
        section_rows = LEMMA_SECTIONS[number](config, number)
        logger.info("lemma section %d: %d checks", number, len(section_rows))
        rows += section_rows
    suffix = "all" if lemmas == sorted(LEMMA_SECTIONS) else "_".join(str(k) for k in lemmas)
    path = write_csv(config.output_dir / f"lemma_checks_{suffix}.csv", config.echo(), CHECK_FIELDS, rows)
    envelopes = {}
    for number in lemmas:
        section_rows = [r for r in rows if r["section"] == number]
        for check, envelope in _check_envelopes(section_rows, sorted({r["check"] for r in section_rows})).items():
            envelopes[f"{number}:{check}"] = envelope
    return _finish(config, f"lemma_checks_{suffix}", [path], envelopes, False, _failures(rows))


# quadrature bench

BENCH_FIELDS = ["integrand", "method", "n", "alpha", "value", "stderr", "exact", "error", "samples", "ok"]
INTEGRANDS = ("constant", "monomial", "kernel", "slice")


def _bench_integrand(name: str, n: int, alpha: float):
    """(integrand, exact value) for the named benchmark."""
    if name == "constant":
        return (lambda z: np.ones(z.shape[0])), 1.0
    if name == "monomial":
        m = (2, 1) + (0,) * (n - 2) if n >= 2 else (3,)
        index = np.array(m)

        def monomial(z):
            return np.prod(np.abs(z) ** (2 * index), axis=-1)

        return monomial, ball_monomial_norm(m, n, alpha)
    if name == "kernel":
        a = np.zeros(n, dtype=complex)
        a[0] = 0.5
        t = 1.0
        kappa = n + 1 + alpha + t

        def kernel(z):
            return np.abs(1.0 - z @ np.conj(a)) ** -kappa * (1.0 - 0.25) ** t

        return kernel, forelli_rudin_exact(0.5, n, alpha, t)
    raise ParameterError(f"Unknown benchmark integrand {name!r}; expected one of {INTEGRANDS}")


def run_quadrature_bench(config: ExperimentConfig, integrand: str = "monomial",
                         methods: Sequence[str] = METHODS) -> int:
    bench = config.section("bench")
    n = bench.get_int("n", 2)
    alpha = bench.get_float("alpha", 0.0)
    rows = []
    if integrand == "slice":
        for c in bench.get_floats("c", [1.0, -1.0, -2.0]):
            sphere, disk = slice_reduction_check(c, max(n, 2), config.spec)
            ok = sphere.diverged == disk.diverged and (disk.diverged or sphere.agrees_with(disk, SIGMAS, rtol=1e-3))
            rows.append({"integrand": f"slice c={c:g}", "method": "sphere-vs-disk", "n": max(n, 2), "alpha": 0.0,
                         "value": sphere.value, "stderr": sphere.stderr, "exact": disk.value,
                         "error": abs(sphere.value - disk.value), "samples": sphere.samples_used, "ok": ok})
    else:
        g, exact = _bench_integrand(integrand, n, alpha)
        measure = WeightedMeasure(n, alpha)
        estimates: List[Tuple[str, IntegralEstimate]] = [
            (method, integrate_ball(g, measure, config.spec.replace(method=method))) for method in methods]
        direct, polar = polar_decompose_check(g, measure, config.spec)
        estimates += [("polar-direct", direct), ("polar-radial", polar)]
        for method, estimate in estimates:
            if method == "product-rule":
                ok = integrand == "kernel" or abs(estimate.value - exact) <= 1e-6 * abs(exact)
            else:
                ok = estimate.agrees_with(exact, SIGMAS, rtol=1e-3 if integrand == "kernel" else 0.0)
            rows.append({"integrand": integrand, "method": method, "n": n, "alpha": alpha, "value": estimate.value,
                         "stderr": estimate.stderr, "exact": exact, "error": abs(estimate.value - exact),
                         "samples": estimate.samples_used, "ok": ok})
    for row in rows:
        if not row["ok"]:
            logger.error("%s by %s: %.6g against %.6g", row["integrand"], row["method"], row["value"], row["exact"])
    path = write_csv(config.output_dir / f"bench_{integrand}.csv", config.echo(), BENCH_FIELDS, rows)
    status = STATUS_FAILED if any(not r["ok"] for r in rows) else STATUS_OK
    return _finish(config, f"bench_{integrand}", [path], {}, True, status)
