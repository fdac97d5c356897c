"""Weighted Besov, Triebel-Lizorkin, Bessel-potential and Sobolev norms.

All four norms are assembled from the spectral core: dyadic blocks S_k f,
the 2^{ks} smoothness ladder, weighted L^p cell quadrature, and either an
outer little-lp aggregation over k (Besov) or a pointwise one (F-scale).
Norms accept the exact parameter objects of the oracle side but work in
floats; q = inf aggregations use the exact max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from .lpengine import (
    DyadicSystem,
    Field,
    GridMismatch,
    _active_blocks,
    auto_oversample,
    bessel_apply,
    boundary_decay,
    derivative,
    lp_blocks,
    make_dyadic,
    upsample_values,
    weighted_cell_sum,
    weighted_lp,
)
from .params import RangeError

BOUNDARY_TOL = 1e-12


@dataclass
class NormResult:
    """A computed norm value with an optional per-block audit trail.

    per_block lists (k, 2^{ks} * ||S_k f||_{L^p(w)}) for Besov-type norms;
    the F-scale aggregates pointwise first, so no per-block list exists.
    """

    value: float
    per_block: Optional[List[Tuple[int, float]]] = None
    warnings: List[str] = field(default_factory=list)

    def __float__(self):
        return self.value

    def to_dict(self):
        out = {"value": self.value, "warnings": list(self.warnings)}
        if self.per_block is not None:
            out["per_block"] = [[k, v] for k, v in self.per_block]
        return out


def _as_float(x) -> float:
    return float(x)


def _check_boundary(f: Field, warnings: List[str]):
    rim = boundary_decay(f)
    if rim > BOUNDARY_TOL:
        warnings.append(
            f"field magnitude {rim:.2e} of its peak near the torus boundary "
            f"(requirement {BOUNDARY_TOL:g}); periodization error possible"
        )


def _ell_q(values: List[float], q: float) -> float:
    if not values:
        return 0.0
    if q == math.inf:
        return max(values)
    return float(np.sum(np.asarray(values) ** q) ** (1.0 / q))


def _system_for(f: Field, sys: Optional[DyadicSystem]) -> DyadicSystem:
    if sys is None:
        return make_dyadic(f.grid)
    if sys.grid != f.grid:
        raise GridMismatch("field and dyadic system live on different grids")
    return sys


def besov_norm(f: Field, s, p, q, gamma, sys: Optional[DyadicSystem] = None) -> NormResult:
    """(sum_k (2^{ks} ||S_k f||_{L^p(w)})^q)^{1/q}, sup over k at q = inf."""
    s, p, q, gamma = _as_float(s), _as_float(p), _as_float(q), _as_float(gamma)
    sys = _system_for(f, sys)
    warnings: List[str] = []
    _check_boundary(f, warnings)
    kmax = _active_blocks(f, sys)
    blocks = lp_blocks(f, sys)
    per_block = []
    for k in range(kmax + 1):
        nk = weighted_lp(blocks[k], p, gamma)
        per_block.append((k, 2.0 ** (k * s) * nk))
    value = _ell_q([v for _, v in per_block], q)
    return NormResult(value, per_block=per_block, warnings=warnings)


def triebel_norm(f: Field, s, p, q, gamma, sys: Optional[DyadicSystem] = None) -> NormResult:
    """|| (sum_k |2^{ks} S_k f(.)|^q)^{1/q} ||_{L^p(w)}, sup-in-k at q = inf."""
    s, p, q, gamma = _as_float(s), _as_float(p), _as_float(q), _as_float(gamma)
    if p == math.inf:
        raise RangeError("the F-scale needs p < inf")
    sys = _system_for(f, sys)
    warnings: List[str] = []
    _check_boundary(f, warnings)
    kmax = _active_blocks(f, sys)
    blocks = lp_blocks(f, sys)
    # Pointwise-first aggregation: blocks are band-limited, so upsample them
    # exactly before taking magnitudes, then do the weighted cell sum on the
    # refined lattice.
    band = min(x for x in (sys.block_band(kmax), f.band_limit) if x is not None)
    factor = auto_oversample(f.grid, band)
    stack = np.stack(
        [
            np.abs(upsample_values(blocks[k], factor)) * 2.0 ** (k * s)
            for k in range(kmax + 1)
        ]
    )
    if q == math.inf:
        agg = np.max(stack, axis=0)
    else:
        agg = np.sum(stack ** q, axis=0) ** (1.0 / q)
    return NormResult(
        weighted_cell_sum(f.grid, agg, p, gamma, factor), warnings=warnings
    )


def bessel_norm(f: Field, s, p, gamma) -> NormResult:
    """||J_s f||_{L^p(w)} with the multiplier (1+|xi|^2)^{s/2}."""
    s, p, gamma = _as_float(s), _as_float(p), _as_float(gamma)
    if p == math.inf:
        raise RangeError("the H-scale needs p < inf")
    warnings: List[str] = []
    _check_boundary(f, warnings)
    return NormResult(weighted_lp(bessel_apply(f, s), p, gamma), warnings=warnings)


def _multiindices(d: int, max_order: int):
    if d == 1:
        return [(a,) for a in range(max_order + 1)]
    return [
        (a, b)
        for a, b in product(range(max_order + 1), repeat=2)
        if a + b <= max_order
    ]


def sobolev_norm(f: Field, m, p, gamma) -> NormResult:
    """sum over |alpha| <= m of ||D^alpha f||_{L^p(w)}."""
    p, gamma = _as_float(p), _as_float(gamma)
    m = int(m)
    if m < 0:
        raise RangeError(f"Sobolev order must be a nonnegative integer, got {m}")
    if p == math.inf:
        raise RangeError("the W-scale needs p < inf")
    warnings: List[str] = []
    _check_boundary(f, warnings)
    total = 0.0
    for alpha in _multiindices(f.grid.d, m):
        total += weighted_lp(derivative(f, alpha), p, gamma)
    return NormResult(total, warnings=warnings)


def space_norm(f: Field, spec, sys: Optional[DyadicSystem] = None) -> NormResult:
    """Norm of f in the space described by a validated SpaceSpec.

    Holder targets use the weight-free B^{s}_{inf,inf} realization of
    BUC^{s} (exact for non-integer s, an equivalent upper ladder otherwise).
    """
    fam = spec.family
    if fam == "B":
        return besov_norm(f, spec.s, spec.p, spec.q, spec.gamma, sys=sys)
    if fam == "F":
        return triebel_norm(f, spec.s, spec.p, spec.q, spec.gamma, sys=sys)
    if fam == "H":
        return bessel_norm(f, spec.s, spec.p, spec.gamma)
    if fam == "W":
        return sobolev_norm(f, int(spec.s), spec.p, spec.gamma)
    if fam == "Holder":
        return besov_norm(f, spec.s, math.inf, math.inf, 0.0, sys=sys)
    raise RangeError(f"no norm for family {fam!r}")
