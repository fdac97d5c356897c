"""Discrete spectral core: periodic grids, dyadic frequency blocks,
Fourier multipliers, and weighted quadrature with singular power weights.

Functions live on a periodic lattice over [-L, L)^d (d = 1 or 2) and are
manipulated through their discrete Fourier coefficients.  The dyadic system
is generated by a fixed smooth bump built from exp(-1/t) quotients, so every
run reproduces the same frequency decomposition bit for bit.

Quadrature conventions:
  * weighted L^p sums use the exact cell integral of |x|^gamma per lattice
    cell (closed form in 1-D, tensor Gauss-Legendre in 2-D with the origin
    cell done in polar coordinates), never a point sample of the weight at
    the origin;
  * band-limited integrands are upsampled by zero-padding before summation
    so that cell sums resolve the carrier oscillation.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from .params import RangeError


class GridMismatch(ValueError):
    """Two objects that must share a grid do not."""


# ---------------------------------------------------------------------------
# Grid and Field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Grid:
    """Periodic sampling lattice on [-L, L)^d with N samples per axis."""

    d: int
    L: float
    N: int

    def __post_init__(self):
        if self.d not in (1, 2):
            raise RangeError(f"grid dimension must be 1 or 2, got {self.d}")
        if self.L <= 0:
            raise RangeError(f"grid half-width must be positive, got {self.L}")
        if self.N < 4 or (self.N & (self.N - 1)) != 0:
            raise RangeError(f"N must be a power of two >= 4, got {self.N}")

    @property
    def h(self) -> float:
        return 2.0 * self.L / self.N

    @property
    def xi_max(self) -> float:
        """Largest representable frequency magnitude per axis."""
        return math.pi * self.N / (2.0 * self.L)

    def axis_points(self) -> np.ndarray:
        return -self.L + self.h * np.arange(self.N)

    def axis_freqs(self) -> np.ndarray:
        """Frequencies pi*k/L for k = -N/2 .. N/2-1 in FFT layout."""
        return 2.0 * math.pi * np.fft.fftfreq(self.N, d=self.h)

    def points(self):
        """Physical coordinates; (N,) for d=1, meshgrid pair for d=2."""
        x = self.axis_points()
        if self.d == 1:
            return x
        return np.meshgrid(x, x, indexing="ij")

    def freqs(self):
        xi = self.axis_freqs()
        if self.d == 1:
            return xi
        return np.meshgrid(xi, xi, indexing="ij")

    def freq_magnitude(self) -> np.ndarray:
        if self.d == 1:
            return np.abs(self.axis_freqs())
        k1, k2 = self.freqs()
        return np.sqrt(k1 * k1 + k2 * k2)


class Field:
    """A complex sampled function with cached spectrum and band metadata.

    ``band_limit`` records a radius R with the discrete spectrum supported in
    |xi| <= R; it is enforced (coefficients beyond R zeroed) for fields built
    in frequency space and trusted as metadata for sampled fields.  Optional
    generators keep witness families reproducible and translatable exactly:
    ``spectral_gen`` evaluates the continuum Fourier transform, and
    ``physical_gen`` evaluates the function itself.
    """

    def __init__(self, grid: Grid, values: np.ndarray, band_limit=None,
                 spectral_gen=None, physical_gen=None):
        expected = (grid.N,) * grid.d
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != expected:
            raise GridMismatch(f"values shape {values.shape} != {expected}")
        values = values.copy()
        values.setflags(write=False)
        self.grid = grid
        self.values = values
        self.band_limit = band_limit
        self.spectral_gen = spectral_gen
        self.physical_gen = physical_gen
        self._spectrum = None

    @property
    def spectrum(self) -> np.ndarray:
        """Raw FFT coefficients of the samples (numpy fft layout)."""
        if self._spectrum is None:
            spec = np.fft.fftn(self.values)
            spec.setflags(write=False)
            self._spectrum = spec
        return self._spectrum

    def with_values(self, values, band_limit=None) -> "Field":
        return Field(self.grid, values, band_limit=band_limit)

    def spectrum_consistent(self, tol=1e-9) -> bool:
        back = np.fft.ifftn(self.spectrum)
        scale = max(1.0, float(np.max(np.abs(self.values))))
        return bool(np.max(np.abs(back - self.values)) <= tol * scale)

    def max_coeff_outside(self, radius) -> float:
        """Largest |coefficient| at lattice frequencies with |xi| > radius."""
        mask = self.grid.freq_magnitude() > radius
        if not mask.any():
            return 0.0
        return float(np.max(np.abs(self.spectrum[mask])))


def field_from_samples(grid: Grid, fn: Callable, band_limit=None) -> Field:
    """Sample an analytic function on the lattice."""
    pts = grid.points()
    vals = fn(pts) if grid.d == 1 else fn(pts[0], pts[1])
    return Field(grid, np.asarray(vals, dtype=np.complex128),
                 band_limit=band_limit, physical_gen=fn)


def field_from_spectral(grid: Grid, spectral_fn: Callable, band_limit=None) -> Field:
    """Build the periodization of the function with continuum transform ``spectral_fn``.

    By Poisson summation, sampling the transform on the frequency lattice
    with Riemann weight (pi/L)^d / (2 pi)^{d/2} reproduces the periodized
    inverse transform exactly when the transform is supported in the
    representable ball.
    """
    if grid.d == 1:
        xi = grid.axis_freqs()
        coeff = np.asarray(spectral_fn(xi), dtype=np.complex128)
    else:
        k1, k2 = grid.freqs()
        coeff = np.asarray(spectral_fn(k1, k2), dtype=np.complex128)
    if band_limit is not None:
        coeff = np.where(grid.freq_magnitude() <= band_limit, coeff, 0.0)
    weight = (math.pi / grid.L) ** grid.d / (2.0 * math.pi) ** (grid.d / 2.0)
    # Trig-interpolant coefficients carry the (-1)^k phase of the -L origin.
    phase = _origin_phase(grid)
    values = np.fft.ifftn(coeff * weight * phase) * grid.N ** grid.d
    out = Field(grid, values, band_limit=band_limit, spectral_gen=spectral_fn)
    out._spectrum = (coeff * weight * phase * grid.N ** grid.d).astype(np.complex128)
    out._spectrum.setflags(write=False)
    return out


def _origin_phase(grid: Grid) -> np.ndarray:
    k = np.fft.fftfreq(grid.N, d=1.0 / grid.N)
    ph = np.exp(-1j * math.pi * k)
    if grid.d == 1:
        return ph
    return np.outer(ph, ph)


# ---------------------------------------------------------------------------
# Dyadic system
# ---------------------------------------------------------------------------


def smooth_step(t: np.ndarray) -> np.ndarray:
    """chi(t) = exp(-1/t) for t > 0, else 0 (vectorized, overflow-safe)."""
    t = np.asarray(t, dtype=np.float64)
    out = np.zeros_like(t)
    pos = t > 0
    with np.errstate(over="ignore"):
        out[pos] = np.exp(-1.0 / t[pos])
    return out


def bump_hat(xi_abs: np.ndarray) -> np.ndarray:
    """The fixed dyadic generator: 1 on |xi|<=1, 0 on |xi|>=3/2, smooth between."""
    xi_abs = np.asarray(xi_abs, dtype=np.float64)
    a = smooth_step(1.5 - xi_abs)
    b = smooth_step(xi_abs - 1.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(a + b > 0, a / np.where(a + b > 0, a + b, 1.0), 0.0)
    return out


@dataclass
class DyadicSystem:
    """Dyadic partition of unity on the frequency lattice.

    hat_phi[0] is the generator; hat_phi[k] = hat_phi0(2^-k xi) -
    hat_phi0(2^-k+1 xi) for k >= 1, supported in the annulus
    2^{k-1} <= |xi| <= (3/2) 2^k.
    """

    grid: Grid
    K: int
    hat_phi: List[np.ndarray]

    def block_band(self, k: int) -> float:
        return 1.5 * 2.0 ** k

    def block_lower_edge(self, k: int) -> float:
        return 0.0 if k == 0 else 2.0 ** (k - 1)


def make_dyadic(grid: Grid) -> DyadicSystem:
    xi_abs = grid.freq_magnitude()
    radius = grid.xi_max * math.sqrt(grid.d)
    K = int(math.ceil(math.log2(radius))) + 1
    hats = [bump_hat(xi_abs)]
    for k in range(1, K + 1):
        hats.append(bump_hat(xi_abs / 2.0 ** k) - bump_hat(xi_abs / 2.0 ** (k - 1)))
    return DyadicSystem(grid, K, hats)


def lp_blocks(f: Field, sys: DyadicSystem) -> List[Field]:
    """Littlewood-Paley blocks S_0 f .. S_K f by spectral multiplication."""
    if f.grid != sys.grid:
        raise GridMismatch("field and dyadic system live on different grids")
    spec = f.spectrum
    out = []
    for k in range(sys.K + 1):
        block = np.fft.ifftn(spec * sys.hat_phi[k])
        band = sys.block_band(k)
        if f.band_limit is not None:
            band = min(band, f.band_limit)
        out.append(Field(f.grid, block, band_limit=band))
    return out


def _active_blocks(f: Field, sys: DyadicSystem) -> int:
    """Index of the last block that can be nonzero for this field."""
    if f.band_limit is None:
        return sys.K
    k = 0
    while k < sys.K and sys.block_lower_edge(k + 1) <= f.band_limit:
        k += 1
    return k


# ---------------------------------------------------------------------------
# Fourier multipliers
# ---------------------------------------------------------------------------


def apply_multiplier(f: Field, symbol: Callable, band_limit=None) -> Field:
    """F^-1 [ symbol(xi) F f ]; symbol takes the frequency arrays."""
    if f.grid.d == 1:
        m = symbol(f.grid.axis_freqs())
    else:
        k1, k2 = f.grid.freqs()
        m = symbol(k1, k2)
    values = np.fft.ifftn(f.spectrum * m)
    return Field(f.grid, values,
                 band_limit=band_limit if band_limit is not None else f.band_limit)


def bessel_apply(f: Field, s: float) -> Field:
    """Bessel potential: multiplier (1 + |xi|^2)^{s/2}."""
    if f.grid.d == 1:
        sym = lambda xi: (1.0 + xi * xi) ** (s / 2.0)
    else:
        sym = lambda k1, k2: (1.0 + k1 * k1 + k2 * k2) ** (s / 2.0)
    return apply_multiplier(f, sym)


def derivative(f: Field, alpha) -> Field:
    """Spectral derivative D^alpha via the (i xi)^alpha multiplier."""
    if isinstance(alpha, int):
        alpha = (alpha,)
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != f.grid.d or any(a < 0 for a in alpha):
        raise RangeError(f"multiindex {alpha} does not fit dimension {f.grid.d}")
    if f.grid.d == 1:
        sym = lambda xi: (1j * xi) ** alpha[0]
    else:
        sym = lambda k1, k2: (1j * k1) ** alpha[0] * (1j * k2) ** alpha[1]
    return apply_multiplier(f, sym)


# ---------------------------------------------------------------------------
# Weighted quadrature
# ---------------------------------------------------------------------------

_weight_cache = {}
_weight_lock = threading.Lock()

_GL_NODES_2D = 8
_THETA_NODES = 64


def _cell_weights_1d(L: float, n: int, gamma: float) -> np.ndarray:
    """Exact integrals of |x|^gamma over the n cells centered on the lattice."""
    h = 2.0 * L / n
    x = -L + h * np.arange(n)
    a, b = x - h / 2.0, x + h / 2.0

    def anti(t):
        # Antiderivative of |x|^gamma, continuous through 0 (gamma > -1).
        return np.sign(t) * np.abs(t) ** (gamma + 1.0) / (gamma + 1.0)

    return anti(b) - anti(a)


def _cell_weights_2d(L: float, n: int, gamma: float) -> np.ndarray:
    """Cell integrals of |x|^gamma in 2-D.

    Tensor Gauss-Legendre on every cell; the cell containing the origin is
    replaced by four quadrant squares integrated in polar coordinates with a
    closed-form radial part.
    """
    h = 2.0 * L / n
    x = -L + h * np.arange(n)
    nodes, wts = np.polynomial.legendre.leggauss(_GL_NODES_2D)
    nodes = nodes * (h / 2.0)
    wts = wts * (h / 2.0)

    out = np.zeros((n, n))
    X = x[:, None, None, None]
    Y = x[None, :, None, None]
    U = nodes[None, None, :, None]
    V = nodes[None, None, None, :]
    R2 = (X + U) ** 2 + (Y + V) ** 2
    with np.errstate(divide="ignore"):
        vals = R2 ** (gamma / 2.0)
    out = np.einsum("ijuv,u,v->ij", vals, wts, wts)

    # Origin cell: 4 * integral of r^gamma over [0, h/2]^2 in polar form.
    i0 = n // 2
    half = h / 2.0
    theta, tw = np.polynomial.legendre.leggauss(_THETA_NODES)
    theta = (theta + 1.0) * (math.pi / 8.0)  # [0, pi/4]
    tw = tw * (math.pi / 8.0)
    sec_int = float(np.sum(tw / np.cos(theta) ** (gamma + 2.0)))
    out[i0, i0] = 4.0 * 2.0 * half ** (gamma + 2.0) / (gamma + 2.0) * sec_int
    return out


def _get_weights(d: int, L: float, n: int, gamma: float) -> np.ndarray:
    key = (d, float(L), int(n), float(gamma))
    with _weight_lock:
        w = _weight_cache.get(key)
    if w is not None:
        return w
    w = _cell_weights_1d(L, n, gamma) if d == 1 else _cell_weights_2d(L, n, gamma)
    w.setflags(write=False)
    with _weight_lock:
        _weight_cache[key] = w
    return w


_OVERSAMPLE_CAP = {1: 32, 2: 4}


def auto_oversample(grid: Grid, band_limit) -> int:
    """Power-of-two padding so cell sums resolve the |f|^p carrier."""
    if band_limit is None or band_limit <= 0:
        return 1
    # Aim for >= 16 quadrature samples per wavelength of |f|^p (carrier 2*band).
    need = 16.0 * (2.0 * band_limit) * grid.h / (2.0 * math.pi)
    factor = 1
    while factor < need and factor < _OVERSAMPLE_CAP[grid.d]:
        factor *= 2
    return factor


def upsample_values(f: Field, factor: int) -> np.ndarray:
    """Exact samples of the trig interpolant on a factor-times finer lattice."""
    if factor == 1:
        return f.values
    n = f.grid.N
    m = n * factor
    spec = f.spectrum
    if f.grid.d == 1:
        pad = np.zeros(m, dtype=np.complex128)
        pad[: n // 2] = spec[: n // 2]
        pad[m - n // 2 :] = spec[n // 2 :]
        return np.fft.ifft(pad) * factor
    pad = np.zeros((m, m), dtype=np.complex128)
    half = n // 2
    pad[:half, :half] = spec[:half, :half]
    pad[:half, m - half :] = spec[:half, half:]
    pad[m - half :, :half] = spec[half:, :half]
    pad[m - half :, m - half :] = spec[half:, half:]
    return np.fft.ifftn(pad) * factor ** 2


def weighted_cell_sum(grid: Grid, abs_values: np.ndarray, p: float, gamma: float,
                      factor: int = 1) -> float:
    """(sum |values|^p W_c)^{1/p} over a factor-refined lattice of the grid."""
    w = _get_weights(grid.d, grid.L, grid.N * factor, float(gamma))
    total = float(np.sum(np.abs(abs_values) ** p * w))
    return total ** (1.0 / p)


def weighted_lp(f: Field, p, gamma: float, oversample: Optional[int] = None) -> float:
    """Weighted Lebesgue norm of a sampled function.

    p = inf returns the max of |f| over the lattice (the weighted sup-norm
    is weight-free).  For finite p the norm is the cell sum
    (sum |f(x_c)|^p W_c)^{1/p} with W_c the exact cell integral of |x|^gamma,
    evaluated on an upsampled lattice when the band limit asks for it.
    """
    if gamma <= -f.grid.d:
        raise RangeError(f"gamma must exceed -d, got gamma={gamma}, d={f.grid.d}")
    p = float(p)
    if p == math.inf:
        return float(np.max(np.abs(f.values)))
    if p < 1:
        raise RangeError(f"p must lie in [1, inf], got {p}")
    factor = auto_oversample(f.grid, f.band_limit) if oversample is None else int(oversample)
    vals = upsample_values(f, factor)
    return weighted_cell_sum(f.grid, np.abs(vals), p, gamma, factor)


def boundary_decay(f: Field, fraction: float = 0.02) -> float:
    """max |f| on the outer fraction of the torus, relative to max |f|."""
    n = f.grid.N
    edge = max(1, int(n * fraction))
    mag = np.abs(f.values)
    peak = float(np.max(mag))
    if peak == 0.0:
        return 0.0
    if f.grid.d == 1:
        rim = max(float(np.max(mag[:edge])), float(np.max(mag[-edge:])))
    else:
        rim = max(
            float(np.max(mag[:edge, :])),
            float(np.max(mag[-edge:, :])),
            float(np.max(mag[:, :edge])),
            float(np.max(mag[:, -edge:])),
        )
    return rim / peak


# ---------------------------------------------------------------------------
# Radial profiles and singular quadrature
# ---------------------------------------------------------------------------


@dataclass
class RadialProfile:
    """A radial function r -> f(r) on (inner_cutoff, R0].

    Power-log profiles f(r) = r^-a * log(1/r)^-b have closed-form tags so
    the quadrature can reason about the r -> 0 tail; tabulated profiles
    carry sample arrays instead.
    """

    d: int
    kind: str  # "power_log" | "tabulated"
    a: float = 0.0
    b: float = 0.0
    R0: float = 0.5
    inner_cutoff: float = 0.0
    r_samples: Optional[np.ndarray] = None
    f_samples: Optional[np.ndarray] = None
    label: str = ""

    def __post_init__(self):
        if self.d < 1:
            raise RangeError(f"dimension must be >= 1, got {self.d}")
        if not 0.0 <= self.inner_cutoff < self.R0:
            raise RangeError("need 0 <= inner_cutoff < R0")
        if self.kind == "power_log" and self.b != 0.0 and self.R0 >= 1.0:
            raise RangeError("log-power profiles need R0 < 1 (log(1/r) > 0)")

    def __call__(self, r):
        r = np.asarray(r, dtype=np.float64)
        if self.kind == "power_log":
            out = r ** (-self.a)
            if self.b != 0.0:
                out = out * np.log(1.0 / r) ** (-self.b)
            return out
        return np.interp(np.log(r), np.log(self.r_samples), self.f_samples)


@dataclass
class RadialNorm:
    """Outcome of a singular radial quadrature.

    ``history`` holds the cumulative raw radial integrals (without the
    sphere-surface factor) at eps_m = R0 * 2^-m, innermost last; the
    divergence protocol classifies this sequence.
    """

    value: float  # math.inf when diverged
    diverged: bool
    history: List[float]
    warning: Optional[str] = None

    def __float__(self):
        return self.value


DIVERGENCE_DELTA = 0.1
CAUCHY_TOL = 1e-3
_PANEL_NODES = 24


def _panel_integral(fn, lo: float, hi: float) -> float:
    """Gauss-Legendre in u = log r over [lo, hi]."""
    nodes, wts = np.polynomial.legendre.leggauss(_PANEL_NODES)
    ulo, uhi = math.log(lo), math.log(hi)
    u = (nodes + 1.0) * (uhi - ulo) / 2.0 + ulo
    w = wts * (uhi - ulo) / 2.0
    r = np.exp(u)
    return float(np.sum(fn(r) * r * w))


def classify_refinements(history: List[float]):
    """Apply the divergence protocol to a cumulative-integral sequence.

    Diverged: the total increase over the last three eps-halvings exceeds
    DIVERGENCE_DELTA, each step increases, and the sequence shows no Cauchy
    behavior at CAUCHY_TOL.  Converged: the last two increments are below
    CAUCHY_TOL (relative to max(1, value)).  Anything else is returned as
    converged with a slow-convergence warning.
    """
    if len(history) < 4:
        return "converged", None
    i0, i1, i2, i3 = history[-4], history[-3], history[-2], history[-1]
    scale = max(1.0, abs(i3))
    cauchy = abs(i3 - i2) <= CAUCHY_TOL * scale and abs(i2 - i1) <= CAUCHY_TOL * scale
    growing = (i3 > i2) and (i2 > i1) and (i1 > i0)
    if not cauchy and growing and (i3 - i0) > DIVERGENCE_DELTA:
        return "diverged", None
    if cauchy:
        return "converged", None
    return "converged", "slow convergence: increments above Cauchy tolerance"


def radial_weighted_lp(prof: RadialProfile, p: float, gamma: float) -> RadialNorm:
    """sigma_{d-1} * integral of |prof(r)|^p r^{d-1+gamma} dr over (eps, R0].

    With inner_cutoff > 0 this is an ordinary integral.  With cutoff 0 the
    integral is refined along eps = R0 * 2^-m and classified by the
    divergence protocol; a Diverged result carries value = inf.
    """
    p = float(p)
    if not 1.0 <= p < math.inf:
        raise RangeError(f"radial quadrature needs p in [1, inf), got {p}")
    if gamma <= -prof.d:
        raise RangeError(f"gamma must exceed -d, got gamma={gamma}, d={prof.d}")
    sigma = 2.0 * math.pi ** (prof.d / 2.0) / math.gamma(prof.d / 2.0)

    def integrand(r):
        return np.abs(prof(r)) ** p * r ** (prof.d - 1.0 + gamma)

    if prof.inner_cutoff > 0.0:
        total, hi = 0.0, prof.R0
        while hi / 2.0 > prof.inner_cutoff:
            total += _panel_integral(integrand, hi / 2.0, hi)
            hi /= 2.0
        total += _panel_integral(integrand, prof.inner_cutoff, hi)
        return RadialNorm((sigma * total) ** (1.0 / p), False, [total])

    # eps -> 0: cumulative integrals at eps_m = R0 * 2^-m, m = 1..M, where M
    # is chosen so the innermost eps is about 2^-20.  The protocol runs on
    # the raw radial integrals so the delta threshold is geometry-free.
    M = max(8, int(math.ceil(20.0 + math.log2(prof.R0))))
    history, total, hi = [], 0.0, prof.R0
    for _ in range(M):
        total += _panel_integral(integrand, hi / 2.0, hi)
        hi /= 2.0
        history.append(total)
    status, warning = classify_refinements(history)
    if status == "diverged":
        return RadialNorm(math.inf, True, history)
    return RadialNorm((sigma * history[-1]) ** (1.0 / p), False, history, warning)


# ---------------------------------------------------------------------------
# Field and profile serialization
# ---------------------------------------------------------------------------

_FIELD_MAGIC = "powemb-field-v1"


def save_field(f: Field, path, extra_header: Optional[dict] = None):
    header = {
        "magic": _FIELD_MAGIC,
        "d": f.grid.d,
        "L": f.grid.L,
        "N": f.grid.N,
        "band_limit": f.band_limit,
        "dtype": "complex128",
        "byteorder": "little",
    }
    if extra_header:
        header.update(extra_header)
    with open(path, "wb") as fh:
        fh.write(json.dumps(header, sort_keys=True).encode("utf-8"))
        fh.write(b"\n")
        fh.write(np.ascontiguousarray(f.values).astype("<c16").tobytes())


def load_field(path) -> Field:
    with open(path, "rb") as fh:
        header = json.loads(fh.readline().decode("utf-8"))
        if header.get("magic") != _FIELD_MAGIC:
            raise ValueError(f"{path} is not a powemb field file")
        grid = Grid(header["d"], header["L"], header["N"])
        raw = fh.read()
    values = np.frombuffer(raw, dtype="<c16").reshape((grid.N,) * grid.d)
    return Field(grid, values.astype(np.complex128), band_limit=header["band_limit"])


def save_profile_csv(prof: RadialProfile, path, n_points: int = 512):
    lo = prof.inner_cutoff if prof.inner_cutoff > 0 else prof.R0 * 2.0 ** -20
    r = np.exp(np.linspace(math.log(lo), math.log(prof.R0), n_points))
    vals = prof(r)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("r,value\n")
        for ri, vi in zip(r, vals):
            fh.write(f"{float(ri)!r},{float(vi)!r}\n")


def load_profile_csv(path, d: int = 1) -> RadialProfile:
    rs, vs = [], []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline()
        if not header.strip().lower().startswith("r,"):
            raise ValueError(f"{path}: expected an 'r,value' header row")
        for line in fh:
            if not line.strip():
                continue
            r_str, v_str = line.split(",")[:2]
            rs.append(float(r_str))
            vs.append(float(v_str))
    r = np.asarray(rs)
    return RadialProfile(
        d=d, kind="tabulated", R0=float(r.max()), inner_cutoff=float(r.min()),
        r_samples=r, f_samples=np.asarray(vs),
    )
