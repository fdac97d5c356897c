"""Experiments connecting oracle verdicts to measured numbers.

Scaling exponents are estimated by least squares in log-linear coordinates
along the witness families, compared against the predicted rational
exponents, and bounded-ratio checks validate Embeds verdicts.  Asymptotic
statements are checked on finite windows (peaks n in [3,7], translations
lambda in [4,64], dilations t in [2^-4, 1]) with stated tolerances; only
exponents and boundedness are asserted, never sharp constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import norms
from .lpengine import (
    Field,
    Grid,
    RadialProfile,
    make_dyadic,
    radial_weighted_lp,
    weighted_lp,
)
from .oracle import NO, EMBEDS, Verdict, decide
from .params import SpaceSpec, indices, is_inf, spec_to_dict, validate
from .witnesses import (
    WitnessFamily,
    dilation_family,
    gaussian_base,
    gaussian_spectral_base,
    log_singularity,
    riesz_log,
    spectral_peaks,
    translation_family,
)


class DegenerateData(ValueError):
    """Not enough well-ordered data for a least-squares exponent."""


class ConditionError(ValueError):
    """The experiment's parameter precondition fails."""


class NotApplicable(ValueError):
    """The requested demonstration does not apply to this verdict."""


# ---------------------------------------------------------------------------
# Exponent fitting
# ---------------------------------------------------------------------------


@dataclass
class ExponentFit:
    xs: List[float]
    ys: List[float]
    slope: float
    intercept: float
    max_residual: float

    def to_dict(self):
        return {
            "xs": self.xs,
            "ys": self.ys,
            "slope": self.slope,
            "intercept": self.intercept,
            "max_residual": self.max_residual,
        }


def fit_exponent(xs: Sequence[float], ys: Sequence[float]) -> ExponentFit:
    """Least squares of ys against log(xs).

    Callers pass ys already in log scale, so the slope is the power-law
    exponent; it is base-free as long as both logs share a base.
    """
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    if len(xs) < 4 or len(xs) != len(ys):
        raise DegenerateData(f"need at least 4 matched points, got {len(xs)}")
    if any(x <= 0 for x in xs):
        raise DegenerateData("family parameters must be positive")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise DegenerateData("family parameters must be strictly increasing")
    lx = np.log(xs)
    ya = np.asarray(ys)
    slope, intercept = np.polyfit(lx, ya, 1)
    resid = ya - (slope * lx + intercept)
    return ExponentFit(xs, ys, float(slope), float(intercept),
                       float(np.max(np.abs(resid))))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class ExperimentReport:
    experiment_id: str
    kind: str
    passed: bool
    predicted_exponent: Optional[float] = None
    predicted_formula: str = ""
    tolerance: Optional[float] = None
    residual_cap: Optional[float] = None
    fit: Optional[ExponentFit] = None
    src: Optional[dict] = None
    tgt: Optional[dict] = None
    rows: List[dict] = field(default_factory=list)
    details: Dict = field(default_factory=dict)
    manifest: Optional[dict] = None
    seed: Optional[int] = None
    warnings: List[str] = field(default_factory=list)

    def to_dict(self):
        out = {
            "experiment_id": self.experiment_id,
            "kind": self.kind,
            "passed": self.passed,
            "predicted_exponent": self.predicted_exponent,
            "predicted_formula": self.predicted_formula,
            "tolerance": self.tolerance,
            "residual_cap": self.residual_cap,
            "fit": self.fit.to_dict() if self.fit is not None else None,
            "src": self.src,
            "tgt": self.tgt,
            "rows": self.rows,
            "details": self.details,
            "manifest": self.manifest,
            "seed": self.seed,
            "warnings": self.warnings,
        }
        return out


def _slope_report(experiment_id, kind, params, values_src, values_tgt,
                  predicted, formula, tolerance, residual_cap,
                  manifest=None, src=None, tgt=None, seed=None,
                  grow_margin=None) -> ExperimentReport:
    """Assemble a ratio-slope report with the standard pass rule."""
    rows = []
    ratios = []
    for par, a, b in zip(params, values_src, values_tgt):
        row = {"parameter": float(par), "src_norm": float(a)}
        if b is None:
            row.update({"tgt_norm": "", "ratio": ""})
            ratios.append(a)
        else:
            row.update({"tgt_norm": float(b), "ratio": float(b) / float(a)})
            ratios.append(float(b) / float(a))
        rows.append(row)
    fit = fit_exponent([float(p) for p in params], [math.log(r) for r in ratios])
    passed = (
        abs(fit.slope - predicted) <= tolerance
        and fit.max_residual <= residual_cap
    )
    if grow_margin is not None:
        if predicted >= 0:
            passed = passed and fit.slope >= min(grow_margin, predicted / 2.0)
        else:
            passed = passed and fit.slope <= -min(grow_margin, -predicted / 2.0)
    return ExperimentReport(
        experiment_id=experiment_id,
        kind=kind,
        passed=passed,
        predicted_exponent=float(predicted),
        predicted_formula=formula,
        tolerance=tolerance,
        residual_cap=residual_cap,
        fit=fit,
        rows=rows,
        manifest=manifest,
        src=src,
        tgt=tgt,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Grids and cached dyadic systems
# ---------------------------------------------------------------------------

DEFAULT_GRID_1D = (1, 16.0, 2 ** 14)
DEFAULT_GRID_2D = (2, 8.0, 2 ** 9)
WIDE_GRID_1D = (1, 128.0, 2 ** 14)
WIDE_GRID_2D = (2, 64.0, 2 ** 9)
# Dilation experiments probe the t -> 0 regime, where members must stay
# inside the lowest dyadic block (band <= 1.5) while widening by the whole
# t-window, so they live on a very wide, coarse lattice.
DIM_GRID_1D = (1, 1024.0, 2 ** 13)
DIM_GRID_2D = (2, 256.0, 2 ** 9)

_sys_cache = {}


def _dyadic_for(grid: Grid):
    key = (grid.d, grid.L, grid.N)
    if key not in _sys_cache:
        _sys_cache[key] = make_dyadic(grid)
    return _sys_cache[key]


def default_grid(d: int, wide: bool = False) -> Grid:
    if d == 1:
        return Grid(*(WIDE_GRID_1D if wide else DEFAULT_GRID_1D))
    if d == 2:
        return Grid(*(WIDE_GRID_2D if wide else DEFAULT_GRID_2D))
    raise NotApplicable(f"sampled grids support d in {{1, 2}}, got d={d}")


def dilation_setup(d: int):
    """Wide-grid base and t-window for the t -> 0 dilation regime.

    The base transform is a narrow Gaussian with 1e-16 band 1.29, so every
    member of the window sits inside the plateau of the zeroth dyadic block
    and the measured ratio carries the pure dimension-index exponent.
    """
    if d == 1:
        grid = Grid(*DIM_GRID_1D)
        ts = [2.0 ** -k for k in range(4, -1, -1)]
    elif d == 2:
        grid = Grid(*DIM_GRID_2D)
        ts = [0.25, 0.4, 0.63, 1.0]
    else:
        raise NotApplicable(f"sampled grids support d in {{1, 2}}, got d={d}")
    return gaussian_spectral_base(grid, sigma_xi=0.15), ts


def _member_norm(member: Field, spec: SpaceSpec) -> float:
    return norms.space_norm(member, spec, sys=_dyadic_for(member.grid)).value


def _f(x) -> float:
    return float(x)


# ---------------------------------------------------------------------------
# Scaling checks
# ---------------------------------------------------------------------------


def check_peak_scaling(p, gamma, j, n_range=range(3, 8), grid: Optional[Grid] = None,
                       tolerance=0.02, residual_cap=0.05) -> ExperimentReport:
    """Fit of log ||phi_n * phi_{n+j}||_{L^p(w)} against n.

    Predicted slope (per doubling): d - (d+gamma)/p, with (d+gamma)/p = 0 at
    p = inf.
    """
    d = grid.d if grid is not None else 1
    grid = grid or default_grid(d)
    fam = spectral_peaks(grid, list(n_range), j)
    values = [weighted_lp(m, p, _f(gamma)) for m in fam.members()]
    dim = 0.0 if _f(p) == math.inf else (d + _f(gamma)) / _f(p)
    predicted = d - dim
    params = [2.0 ** n for n in fam.member_params]
    rows_src = values
    rep = _slope_report(
        f"peak_scaling[p={p},gamma={gamma},j={j},d={d}]",
        "peak_scaling",
        params,
        rows_src,
        [None] * len(values),
        predicted,
        "d - (d+gamma)/p",
        tolerance,
        residual_cap,
        manifest=fam.manifest(),
    )
    return rep


def check_translation_scaling(p, gamma, lambda_values=(4, 8, 16, 32, 64),
                              base: Optional[Field] = None,
                              grid: Optional[Grid] = None,
                              tolerance=0.05, residual_cap=0.1) -> ExperimentReport:
    """Fit of log ||f(. - lambda e1)||_{L^p(w)} against log lambda; slope gamma/p."""
    d = (base.grid.d if base is not None else grid.d if grid is not None else 1)
    if base is None:
        grid = grid or default_grid(d, wide=True)
        base = gaussian_base(grid, sigma=1.0)
    fam = translation_family(base, list(lambda_values))
    values = [weighted_lp(m, p, _f(gamma)) for m in fam.members()]
    predicted = 0.0 if _f(p) == math.inf else _f(gamma) / _f(p)
    return _slope_report(
        f"translation_scaling[p={p},gamma={gamma},d={d}]",
        "translation_scaling",
        [float(l) for l in fam.member_params],
        values,
        [None] * len(values),
        predicted,
        "gamma/p",
        tolerance,
        residual_cap,
        manifest=fam.manifest(),
    )


def check_nikolskij(base: Field, p0, gamma0, p1, gamma1, alpha=0,
                    t_values=(1, 2, 4, 8, 16), bound_factor=10.0,
                    tolerance=0.1, force=False) -> ExperimentReport:
    """Band-limited boundedness: R(t) = ||D^a f_t||_{p1,w1} / ||f_t||_{p0,w0}.

    Along dilations the normalized ratio R(t) / t^{|a|+delta}, with
    delta = (d+gamma0)/p0 - (d+gamma1)/p1, must stay within a fixed factor,
    and the fitted exponent of R must not exceed |a| + delta.
    """
    d = base.grid.d
    if isinstance(alpha, int):
        alpha = (alpha,) * 1 if d == 1 else (alpha, 0)
    order = sum(alpha)
    dim0 = (d + _f(gamma0)) / _f(p0)
    dim1 = (d + _f(gamma1)) / _f(p1)
    w0, w1 = _f(gamma0) / _f(p0), _f(gamma1) / _f(p1)
    delta = dim0 - dim1
    cond_ok = w1 <= w0 + 1e-12 and dim1 < dim0 - 1e-12
    if not cond_ok and not force:
        raise ConditionError(
            f"need gamma1/p1 <= gamma0/p0 and (d+gamma1)/p1 < (d+gamma0)/p0; "
            f"got weight indices {w1} vs {w0} and dim indices {dim1} vs {dim0}"
        )
    from .lpengine import derivative

    fam = dilation_family(base, [float(t) for t in t_values])
    ratios = []
    rows = []
    for t, member in zip(fam.member_params, fam.members()):
        num = weighted_lp(derivative(member, alpha), p1, _f(gamma1))
        den = weighted_lp(member, p0, _f(gamma0))
        r = num / den
        ratios.append(r)
        rows.append(
            {"parameter": t, "src_norm": den, "tgt_norm": num, "ratio": r}
        )
    normalized = [r / t ** (order + delta) for r, t in zip(ratios, fam.member_params)]
    spread = max(normalized) / min(normalized)
    fit = fit_exponent(list(fam.member_params), [math.log(r) for r in ratios])
    passed = spread <= bound_factor and fit.slope <= order + delta + tolerance
    return ExperimentReport(
        experiment_id=(
            f"nikolskij[p0={p0},g0={gamma0},p1={p1},g1={gamma1},alpha={alpha}]"
        ),
        kind="nikolskij",
        passed=passed,
        predicted_exponent=order + delta,
        predicted_formula="|alpha| + (d+gamma0)/p0 - (d+gamma1)/p1",
        tolerance=tolerance,
        residual_cap=None,
        fit=fit,
        rows=rows,
        details={
            "normalized_spread": spread,
            "bound_factor": bound_factor,
            "seed": getattr(base, "seed", None),
            "condition_forced": bool(not cond_ok),
        },
        manifest=fam.manifest(),
        seed=getattr(base, "seed", None),
    )


def check_gagliardo(fields: Sequence[Field], s0, s1, theta, p, q, gamma,
                    cap=10.0) -> ExperimentReport:
    """Interpolation inequality on a batch: ||f||_{F^s} <= C ||f||^{1-th} ||f||^th.

    s = (1-theta) s0 + theta s1, one weight, one p.  The batch maximum of
    the ratio is reported and compared against the cap.
    """
    s0, s1, theta = _f(s0), _f(s1), _f(theta)
    s = (1.0 - theta) * s0 + theta * s1
    rows = []
    worst = 0.0
    for i, f in enumerate(fields):
        sys = _dyadic_for(f.grid)
        num = norms.triebel_norm(f, s, p, q, gamma, sys=sys).value
        a = norms.triebel_norm(f, s0, p, q, gamma, sys=sys).value
        b = norms.triebel_norm(f, s1, p, q, gamma, sys=sys).value
        den = a ** (1.0 - theta) * b ** theta
        ratio = num / den if den > 0 else math.inf
        worst = max(worst, ratio)
        rows.append(
            {"parameter": i, "src_norm": den, "tgt_norm": num, "ratio": ratio}
        )
    return ExperimentReport(
        experiment_id=f"gagliardo[s0={s0},s1={s1},theta={theta},p={p},q={q},gamma={gamma}]",
        kind="gagliardo",
        passed=worst <= cap,
        predicted_formula="batch max of interpolation ratio <= cap",
        details={"batch_max_ratio": worst, "cap": cap, "s": s},
        rows=rows,
    )


# ---------------------------------------------------------------------------
# Lacunary ladder (sharp-line q-comparison)
# ---------------------------------------------------------------------------


def peak_constants(p, gamma, grid: Optional[Grid] = None, n_check=(5, 6),
                   rel_tol=1e-3) -> Dict[int, float]:
    """Measured n-free constants C_l with ||phi_n * phi_{n+l}||_{L^p(w)} =
    C_l 2^{n(d - (d+gamma)/p)}, validated on two block indices.

    The measured constants extend the per-block ladder beyond the Nyquist
    range, which the exact scaling identity makes sound.
    """
    grid = grid or default_grid(1)
    d = grid.d
    dim = 0.0 if _f(p) == math.inf else (d + _f(gamma)) / _f(p)
    out = {}
    for l in (-1, 0, 1):
        consts = []
        for n in n_check:
            fam = spectral_peaks(grid, [n], l)
            val = weighted_lp(fam.member(0), p, _f(gamma))
            consts.append(val / 2.0 ** (n * (d - dim)))
        lo, hi = min(consts), max(consts)
        if hi - lo > rel_tol * hi:
            raise ConditionError(
                f"peak constant for l={l} drifts across blocks: {consts}"
            )
        out[l] = consts[-1]
    return out


def lacunary_norm_from_constants(coeffs, s, p, q, gamma, d=1,
                                 constants: Optional[Dict[int, float]] = None,
                                 grid: Optional[Grid] = None) -> float:
    """Besov norm of the lacunary block sum from measured peak constants.

    Per block 3j+l the Besov summand collapses to a_j * C_{-l} * 2^{l(s+d-dim)}
    (independent of j), so the aggregation is an exact little-lq computation
    over all block indices.
    """
    if constants is None:
        constants = peak_constants(p, gamma, grid=grid)
    dim = 0.0 if _f(p) == math.inf else (d + _f(gamma)) / _f(p)
    level = [constants[-l] * 2.0 ** (l * (_f(s) + d - dim)) for l in (-1, 0, 1)]
    qf = _f(q)
    if qf == math.inf:
        return max(abs(a) for a in coeffs) * max(level)
    inner = sum(c ** qf for c in level)
    outer = sum(abs(a) ** qf for a in coeffs)
    return (outer * inner) ** (1.0 / qf)


def check_lacunary_qnecessity(p0, gamma0, q0, p1, gamma1, q1, s0, s1,
                              n_values=(4, 6, 8, 12, 16, 24, 32),
                              tolerance=0.1, grid: Optional[Grid] = None,
                              d=1) -> ExperimentReport:
    """Sharp-line ratio growth ||f_N||_{B1} / ||f_N||_{B0} ~ N^{1/q1 - 1/q0}.

    Uses the measured-constant ladder: grids cannot hold 3N dyadic blocks
    for N beyond 3, but the per-block collapse is an exact scaling identity,
    validated on-grid by peak_constants and the lacunary_sum tests.
    """
    grid = grid or default_grid(d)
    c0 = peak_constants(p0, gamma0, grid=grid)
    c1 = peak_constants(p1, gamma1, grid=grid)
    rows = []
    ratios = []
    for N in n_values:
        coeffs = [1.0] * int(N)
        a = lacunary_norm_from_constants(coeffs, s0, p0, q0, gamma0, d=d, constants=c0)
        b = lacunary_norm_from_constants(coeffs, s1, p1, q1, gamma1, d=d, constants=c1)
        ratios.append(b / a)
        rows.append({"parameter": int(N), "src_norm": a, "tgt_norm": b,
                     "ratio": b / a})
    inv = lambda q: 0.0 if _f(q) == math.inf else 1.0 / _f(q)
    predicted = inv(q1) - inv(q0)
    fit = fit_exponent([float(n) for n in n_values],
                       [math.log(r) for r in ratios])
    passed = abs(fit.slope - predicted) <= tolerance
    return ExperimentReport(
        experiment_id=f"lacunary_q[q0={q0},q1={q1}]",
        kind="lacunary_q",
        passed=passed,
        predicted_exponent=predicted,
        predicted_formula="1/q1 - 1/q0",
        tolerance=tolerance,
        fit=fit,
        rows=rows,
        details={"ladder_constants_src": c0, "ladder_constants_tgt": c1},
    )


# ---------------------------------------------------------------------------
# Failure demonstrations and bounded-ratio checks
# ---------------------------------------------------------------------------


def _pair_floats(src: SpaceSpec, tgt: SpaceSpec):
    i0, i1 = indices(src), indices(tgt)
    return {
        "sh0": float(i0.shifted_smoothness),
        "sh1": float(i1.shifted_smoothness),
        "w0": float(i0.weight_index),
        "w1": float(i1.weight_index),
        "dim0": float(i0.dim_index),
        "dim1": float(i1.dim_index),
    }


def _ratio_family_report(experiment_id, kind, fam: WitnessFamily, src, tgt,
                         predicted, formula, tolerance, residual_cap,
                         grow_margin) -> ExperimentReport:
    src_vals = [_member_norm(m, src) for m in fam.members()]
    tgt_vals = [_member_norm(m, tgt) for m in fam.members()]
    # Peaks are indexed by the block number n; the family parameter on the
    # log axis is the frequency scale 2^n.
    if fam.kind == "SpectralPeak":
        params = [2.0 ** float(n) for n in fam.member_params]
    else:
        params = [float(p) for p in fam.member_params]
    if params[0] > params[-1]:  # dilations toward 0 come in decreasing order
        params, src_vals, tgt_vals = params[::-1], src_vals[::-1], tgt_vals[::-1]
    return _slope_report(
        experiment_id, kind, params, src_vals, tgt_vals, predicted, formula,
        tolerance, residual_cap,
        manifest=fam.manifest(),
        src=spec_to_dict(src),
        tgt=spec_to_dict(tgt),
        grow_margin=grow_margin,
    )


def _profile_report(experiment_id, kind, src, tgt, src_res, tgt_res,
                    want_tgt_diverged=True, details=None) -> ExperimentReport:
    rows = []
    hist_a, hist_b = src_res.history, tgt_res.history
    for m in range(min(len(hist_a), len(hist_b))):
        ra = hist_a[m]
        rb = hist_b[m]
        rows.append({
            "parameter": m + 1,  # eps = R0 * 2^-m
            "src_norm": ra,
            "tgt_norm": rb,
            "ratio": rb / ra if ra > 0 else math.inf,
        })
    passed = (not src_res.diverged) and (tgt_res.diverged == want_tgt_diverged)
    det = {
        "src_value": src_res.value,
        "src_diverged": src_res.diverged,
        "tgt_diverged": tgt_res.diverged,
        "src_warning": src_res.warning,
        "tgt_warning": tgt_res.warning,
    }
    if details:
        det.update(details)
    return ExperimentReport(
        experiment_id=experiment_id,
        kind=kind,
        passed=passed,
        predicted_formula="source quadrature finite, target classified Diverged",
        src=spec_to_dict(src) if isinstance(src, SpaceSpec) else None,
        tgt=spec_to_dict(tgt) if isinstance(tgt, SpaceSpec) else None,
        rows=rows,
        details=det,
    )


def demonstrate_failure(src: SpaceSpec, tgt: SpaceSpec,
                        verdict: Optional[Verdict] = None,
                        grid: Optional[Grid] = None) -> ExperimentReport:
    """Run the witness family matching the first violated condition.

    Smoothness violations use spectral peaks, weight-index violations use
    translations, dim-index violations use dilations toward t = 0, the
    sharp-line q-comparison uses the lacunary ladder (Besov pairs), and the
    two p1 < p0 sharp cases use the singular radial profiles.  Passing
    means the target/source norm ratio grows at the predicted exponent, or
    the profile dichotomy (source finite, target Diverged) is observed.
    """
    src, tgt = validate(src), validate(tgt)
    if verdict is None:
        verdict = decide(src, tgt)
    if verdict.outcome != NO:
        raise NotApplicable(
            f"verdict is {verdict.outcome}; failure demonstrations need DoesNotEmbed"
        )
    d = src.d
    i0, i1 = indices(src), indices(tgt)
    ix = _pair_floats(src, tgt)
    eid = f"demonstrate_failure[{src} -> {tgt}]"

    if i0.shifted_smoothness < i1.shifted_smoothness:
        grid = grid or default_grid(d)
        n_lo, n_hi = (3, 8) if d == 1 else (2, 6)
        fam = spectral_peaks(grid, list(range(n_lo, n_hi)), 0)
        predicted = ix["sh1"] - ix["sh0"]
        return _ratio_family_report(
            eid, "failure_peaks", fam, src, tgt, predicted,
            "(s1 - (d+g1)/p1) - (s0 - (d+g0)/p0)", 0.05, 0.1, 0.02,
        )

    if i1.weight_index > i0.weight_index:
        grid = grid or default_grid(d, wide=True)
        lam_hi = 64 if d == 1 else 32
        lams = [l for l in (4, 8, 16, 32, 64) if l <= lam_hi]
        fam = translation_family(gaussian_base(grid, sigma=1.0), lams)
        predicted = ix["w1"] - ix["w0"]
        return _ratio_family_report(
            eid, "failure_translation", fam, src, tgt, predicted,
            "g1/p1 - g0/p0", 0.05, 0.1, 0.02,
        )

    if i1.dim_index > i0.dim_index:
        base, ts = dilation_setup(d)
        fam = dilation_family(base, ts)
        predicted = ix["dim0"] - ix["dim1"]  # negative: ratio grows as t drops
        return _ratio_family_report(
            eid, "failure_dilation", fam, src, tgt, predicted,
            "(d+g0)/p0 - (d+g1)/p1 (in t; ratio grows as t->0)", 0.08, 0.1, 0.02,
        )

    sharp = i0.shifted_smoothness == i1.shifted_smoothness
    p1_lt_p0 = (not is_inf(tgt.p)) and (is_inf(src.p) or tgt.p < src.p)

    if i1.dim_index == i0.dim_index and p1_lt_p0:
        prof = log_singularity(src.p, src.gamma, tgt.p, d)
        src_res = radial_weighted_lp(prof, float(src.p), float(src.gamma))
        tgt_res = radial_weighted_lp(prof, float(tgt.p), float(tgt.gamma))
        return _profile_report(
            eid, "failure_log_singularity", src, tgt, src_res, tgt_res,
            details={"profile": "r^-(d+g0)/p0 log(1/r)^-1/p1 on (0, 1/2]"},
        )

    if sharp and src.family == "B" and tgt.family == "B" and src.q > tgt.q:
        return check_lacunary_qnecessity(
            src.p, src.gamma, src.q, tgt.p, tgt.gamma, tgt.q, src.s, tgt.s,
            grid=grid, d=d,
        )

    if sharp and p1_lt_p0:
        # Sharp H/W/F case: the Riesz-log profile pair carries the
        # contradiction (source norm finite, smoothed-image lower envelope
        # not in the target space).
        gap = float(src.s) - float(tgt.s)
        g = riesz_log(ix["dim0"], 1.0 / float(tgt.p), d)
        envelope = RadialProfile(
            d=d, kind="power_log", a=ix["dim0"] - gap, b=1.0 / float(tgt.p),
            R0=0.5, inner_cutoff=0.0, label="riesz_log_envelope",
        )
        src_res = radial_weighted_lp(g, float(src.p), float(src.gamma))
        tgt_res = radial_weighted_lp(envelope, float(tgt.p), float(tgt.gamma))
        return _profile_report(
            eid, "failure_riesz_log", src, tgt, src_res, tgt_res,
            details={
                "profile": "g = r^-a log(1/r)^-b, a=(g0+d)/p0, b=1/p1",
                "envelope_power": ix["dim0"] - gap,
            },
        )

    raise NotApplicable(
        "no desk-scale witness wired for this regime "
        f"(families {src.family}->{tgt.family}, trace {verdict.rule_ids()})"
    )


def check_embedding_bounded(src: SpaceSpec, tgt: SpaceSpec,
                            verdict: Optional[Verdict] = None,
                            grid: Optional[Grid] = None,
                            margin=0.05) -> List[ExperimentReport]:
    """Bounded-ratio checks along the witness families for an Embeds pair.

    The target/source norm ratio must not grow: fitted slope <= margin along
    peaks and translations, and >= -margin in t along dilations toward 0
    (growth as t -> 0 would contradict the embedding).
    """
    src, tgt = validate(src), validate(tgt)
    if verdict is None:
        verdict = decide(src, tgt)
    if verdict.outcome != EMBEDS:
        raise NotApplicable(
            f"verdict is {verdict.outcome}; bounded-ratio checks need Embeds"
        )
    d = src.d
    out = []
    eid = f"bounded[{src} -> {tgt}]"

    def finish(rep: ExperimentReport, upper_ok: bool) -> ExperimentReport:
        rep.passed = upper_ok
        rep.details["pass_rule"] = f"ratio slope within margin {margin}"
        return rep

    base_grid = grid or default_grid(d)
    n_lo, n_hi = (3, 8) if d == 1 else (2, 6)
    fam = spectral_peaks(base_grid, list(range(n_lo, n_hi)), 0)
    rep = _ratio_family_report(
        eid, "bounded_peaks", fam, src, tgt, 0.0,
        "no growth along spectral peaks", math.inf, math.inf, None,
    )
    out.append(finish(rep, rep.fit.slope <= margin))

    base, ts = dilation_setup(d)
    fam = dilation_family(base, ts)
    rep = _ratio_family_report(
        eid, "bounded_dilation", fam, src, tgt, 0.0,
        "no growth along dilations toward 0", math.inf, math.inf, None,
    )
    out.append(finish(rep, rep.fit.slope >= -max(margin, 0.08)))

    wide = default_grid(d, wide=True)
    lam_hi = 64 if d == 1 else 32
    lams = [l for l in (4, 8, 16, 32, 64) if l <= lam_hi]
    fam = translation_family(gaussian_base(wide, sigma=1.0), lams)
    rep = _ratio_family_report(
        eid, "bounded_translation", fam, src, tgt, 0.0,
        "no growth along translations", math.inf, math.inf, None,
    )
    out.append(finish(rep, rep.fit.slope <= margin))
    return out
