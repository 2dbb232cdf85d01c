"""Exact verification and enumeration for nonnegative floor-function commutators
with negative dilations."""

from .classifier import (
    CaseI,
    CaseII,
    CaseIIIStar,
    Frame,
    Frames,
    Kind,
    beta_from_params,
    case_i_witness,
    case_ii_witness,
    case_iii_star_witness,
    decide,
    from_frame,
    in_s,
    kind_of,
    semigroup_representable,
    to_frames,
)
from .commutator import (
    DilationPair,
    Procedure,
    QuadrantError,
    Verdict,
    breakpoints,
    commutator_at,
    commutator_min,
    dilated_floor,
    fundamental_period,
    verify_nonneg,
)
from .exactnum import parse_rational

__version__ = "0.1.0"
