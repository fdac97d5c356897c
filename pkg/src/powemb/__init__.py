"""powemb: embedding oracle and numerical verification for smoothness
spaces with power weights |x|^gamma on R^d.

Two halves:

* an exact decision layer (``params``, ``oracle``) answering whether one
  weighted Besov / Triebel-Lizorkin / Bessel-potential / Sobolev space
  embeds into another, with an auditable rule trace in exact rational
  arithmetic;
* a numerical layer (``lpengine``, ``norms``, ``witnesses``, ``verify``)
  that computes the weighted norms of sampled functions, builds the
  extremal witness families behind the necessity arguments, and measures
  the scaling exponents those arguments predict.
"""

from .params import (
    INF,
    DerivedIndices,
    RangeError,
    SpaceSpec,
    in_ap_range,
    indices,
    spec_from_dict,
    spec_from_json,
    spec_to_dict,
    spec_to_json,
    validate,
)
from .oracle import (
    EMBEDS,
    NO,
    UNKNOWN,
    FamilyError,
    RuleCitation,
    Verdict,
    decide,
    decide_besov,
    decide_bessel,
    decide_cross,
    decide_sobolev,
    decide_triebel,
    embedding_matrix,
    holder_embedding,
    lp_target,
)
from .lpengine import (
    DyadicSystem,
    Field,
    Grid,
    RadialProfile,
    bessel_apply,
    derivative,
    field_from_samples,
    field_from_spectral,
    load_field,
    lp_blocks,
    make_dyadic,
    radial_weighted_lp,
    save_field,
    weighted_lp,
)
from .norms import NormResult, besov_norm, bessel_norm, sobolev_norm, triebel_norm
from .witnesses import (
    WitnessFamily,
    dilation_family,
    lacunary_sum,
    log_singularity,
    riesz_log,
    spectral_peaks,
    translation_family,
)
from .verify import (
    ExperimentReport,
    ExponentFit,
    check_gagliardo,
    check_nikolskij,
    check_peak_scaling,
    check_translation_scaling,
    demonstrate_failure,
    fit_exponent,
)

__version__ = "0.1.0"
