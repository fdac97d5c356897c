"""Parameter algebra for weighted smoothness spaces.

Every space handled by this package is described by a handful of exact
parameters: a family tag, a smoothness s, an integrability exponent p, an
optional microscopic index q, a weight exponent gamma (the weight is
w(x) = |x|^gamma) and the ambient dimension d.  The embedding rules dispatch
on equalities and strict inequalities between rational combinations of these
numbers, so everything here is kept in exact arithmetic: parameters are
``fractions.Fraction`` values, and the endpoint value infinity is an explicit
sentinel, never a large float.

Conventions:
  * p lives in (1, inf], q in [1, inf]; 1/inf = 0.
  * gamma > -d (locally integrable weights only).
  * fractional Sobolev spaces canonicalize to Besov spaces with q = p,
    and plain Lebesgue spaces to Bessel-potential spaces with s = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union


class RangeError(ValueError):
    """A parameter is outside its admissible range."""


class _Infinity:
    """Singleton for the extended value +infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("powemb-inf")

    # Ordering against finite rationals: inf is larger than everything finite.
    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __float__(self):
        return float("inf")


INF = _Infinity()

Extended = Union[Fraction, _Infinity]

FAMILIES = ("B", "F", "H", "W", "Lp", "Holder")


def is_inf(x) -> bool:
    return isinstance(x, _Infinity)


def as_rational(value, *, what="value") -> Fraction:
    """Parse a number into an exact Fraction.

    Accepts Fraction, int, strings like "3/4" or "0.75", and floats whose
    decimal repr is exact (floats go through their shortest decimal form, so
    0.1 means 1/10, not the binary expansion).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RangeError(f"{what}: expected a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise RangeError(f"{what}: {value!r} is not a finite number")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise RangeError(f"{what}: cannot parse {value!r} as a rational") from exc
    raise RangeError(f"{what}: cannot parse {value!r} as a rational")


def as_extended(value, *, what="value") -> Extended:
    """Parse a number or the string/float infinity into an Extended value."""
    if is_inf(value):
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    if isinstance(value, float) and value == float("inf"):
        return INF
    return as_rational(value, what=what)


_ZERO = Fraction(0)
_ONE = Fraction(1)


def reciprocal(x: Extended) -> Fraction:
    """1/x with the convention 1/inf = 0."""
    if is_inf(x):
        return _ZERO
    if x == 0:
        raise RangeError("reciprocal of zero")
    return _ONE / x


def divide(a: Fraction, p: Extended) -> Fraction:
    """a/p with the convention a/inf = 0."""
    if is_inf(p):
        return _ZERO
    return a / p


@dataclass(frozen=True)
class SpaceSpec:
    """One weighted smoothness space.

    family: "B" (Besov), "F" (Triebel-Lizorkin), "H" (Bessel potential),
    "W" (Sobolev), "Lp" (Lebesgue, canonicalizes to H with s=0) or
    "Holder" (unweighted BUC^s target; only s and d are set).
    """

    family: str
    d: int
    s: Fraction = Fraction(0)
    p: Optional[Extended] = None
    q: Optional[Extended] = None
    gamma: Optional[Fraction] = None

    def __str__(self):
        if self.family == "Holder":
            return f"BUC^{self.s}(d={self.d})"
        q = f",{self.q}" if self.q is not None else ""
        return f"{self.family}^{self.s}_{{{self.p}{q}}}(gamma={self.gamma},d={self.d})"


@dataclass(frozen=True)
class DerivedIndices:
    """The three rational indices every embedding condition compares.

    shifted_smoothness = s - (d+gamma)/p   (the dilation-scaling exponent)
    weight_index       = gamma/p
    dim_index          = (d+gamma)/p
    """

    shifted_smoothness: Fraction
    weight_index: Fraction
    dim_index: Fraction


def validate(spec: SpaceSpec) -> SpaceSpec:
    """Check ranges and return the canonicalized spec.

    Canonicalization: fractional Sobolev -> Besov with q = p; Lebesgue -> H
    with s = 0.  Raises RangeError on any definitional violation.
    Idempotent; already-validated instances pass through untouched.
    """
    if getattr(spec, "_validated", False):
        return spec
    out = _validate_impl(spec)
    object.__setattr__(out, "_validated", True)
    return out


def _validate_impl(spec: SpaceSpec) -> SpaceSpec:
    fam = spec.family
    if fam not in FAMILIES:
        raise RangeError(f"unknown family {fam!r}")
    if not isinstance(spec.d, int) or spec.d < 1:
        raise RangeError(f"dimension must be a positive integer, got {spec.d!r}")

    if fam == "Holder":
        if spec.s <= 0:
            raise RangeError(f"Holder target needs s > 0, got s={spec.s}")
        if spec.p is not None or spec.q is not None or spec.gamma is not None:
            raise RangeError("Holder target carries no p, q or gamma")
        return spec

    if spec.p is None:
        raise RangeError(f"{fam}-space needs p")
    if spec.gamma is None:
        raise RangeError(f"{fam}-space needs gamma")
    if not is_inf(spec.p) and spec.p <= 1:
        raise RangeError(f"p must lie in (1, inf], got p={spec.p}")
    if spec.gamma <= -spec.d:
        raise RangeError(
            f"gamma must exceed -d for a locally integrable weight; "
            f"gamma={spec.gamma}, d={spec.d}"
        )

    if fam in ("F", "H", "Lp") or fam == "W":
        if is_inf(spec.p):
            raise RangeError(f"{fam}-space needs p < inf")

    if fam in ("B", "F"):
        if spec.q is None:
            raise RangeError(f"{fam}-space needs the microscopic index q")
        if not is_inf(spec.q) and spec.q < 1:
            raise RangeError(f"q must lie in [1, inf], got q={spec.q}")
        return spec

    if spec.q is not None:
        raise RangeError(f"{fam}-space carries no microscopic index q")

    if fam == "Lp":
        return replace(spec, family="H", s=Fraction(0))

    if fam == "H":
        return spec

    # Sobolev: integer s >= 0 stays W, fractional positive s becomes B_{p,p}.
    if spec.s < 0:
        raise RangeError(f"Sobolev space needs s >= 0, got s={spec.s}")
    if spec.s.denominator == 1:
        return spec
    return replace(spec, family="B", q=spec.p)


def indices(spec: SpaceSpec) -> DerivedIndices:
    """Derived indices of a validated spec (exact arithmetic, 1/inf = 0)."""
    if spec.family == "Holder":
        # Unweighted sup-norm scale: p = inf, gamma irrelevant.
        return DerivedIndices(spec.s, Fraction(0), Fraction(0))
    dim_index = divide(Fraction(spec.d) + spec.gamma, spec.p)
    weight_index = divide(spec.gamma, spec.p)
    return DerivedIndices(spec.s - dim_index, weight_index, dim_index)


def in_ap_range(p: Extended, gamma: Fraction, d: int) -> bool:
    """Whether |x|^gamma is a Muckenhoupt A_p weight: -d < gamma < d(p-1).

    Defined for p in (1, inf) only; callers must gate the p = inf endpoint.
    """
    if is_inf(p):
        raise RangeError("A_p membership is undefined at p = inf")
    if p <= 1:
        raise RangeError(f"A_p membership needs p > 1, got p={p}")
    return -d < gamma < d * (p - 1)


def ap_gate(p: Extended, gamma: Optional[Fraction], d: int) -> bool:
    """Non-raising A_p test used by the oracle: False at p = inf."""
    if gamma is None or is_inf(p):
        return False
    return in_ap_range(p, gamma, d)


# ---------------------------------------------------------------------------
# JSON descriptors
# ---------------------------------------------------------------------------

_FAMILY_ALIASES = {f.lower(): f for f in FAMILIES}


def _num_to_json(x):
    if is_inf(x):
        return "inf"
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def spec_to_dict(spec: SpaceSpec) -> dict:
    out = {"family": spec.family, "s": _num_to_json(spec.s), "dim": spec.d}
    if spec.p is not None:
        out["p"] = _num_to_json(spec.p)
    if spec.q is not None:
        out["q"] = _num_to_json(spec.q)
    if spec.gamma is not None:
        out["gamma"] = _num_to_json(spec.gamma)
    return out


def spec_from_dict(data: dict) -> SpaceSpec:
    """Build a (validated) SpaceSpec from its JSON descriptor dict."""
    if not isinstance(data, dict):
        raise RangeError(f"space descriptor must be an object, got {data!r}")
    try:
        raw_fam = data["family"]
    except KeyError:
        raise RangeError("space descriptor needs a 'family' entry") from None
    fam = _FAMILY_ALIASES.get(str(raw_fam).lower())
    if fam is None:
        raise RangeError(f"unknown family {raw_fam!r}")
    d = data.get("dim", data.get("d"))
    if not isinstance(d, int):
        raise RangeError(f"dimension must be an integer, got {d!r}")
    s = as_rational(data.get("s", 0), what="s")
    p = as_extended(data["p"], what="p") if "p" in data else None
    q = as_extended(data["q"], what="q") if "q" in data else None
    gamma = as_rational(data["gamma"], what="gamma") if "gamma" in data else None
    if fam == "Lp" and "s" in data and s != 0:
        raise RangeError("Lp descriptor cannot carry a nonzero s")
    return validate(SpaceSpec(family=fam, d=d, s=s, p=p, q=q, gamma=gamma))


def spec_from_json(text: str) -> SpaceSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RangeError(f"malformed JSON descriptor: {exc}") from exc
    return spec_from_dict(data)


def spec_to_json(spec: SpaceSpec) -> str:
    return json.dumps(spec_to_dict(spec), sort_keys=True)
