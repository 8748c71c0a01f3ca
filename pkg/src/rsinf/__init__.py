"""Insertion on eventually arithmetic sequences and what it classifies."""

from ._kernel import BACKEND
from .classifier import (
    Finite,
    Omega,
    OmegaStar,
    ProperIdeal,
    Valid,
    WeightSpec,
    ZeroAnnihilator,
    Zeta,
    ZeroIdeal,
    classify,
    finite,
    omega,
    omega_star,
    parse_spec,
    segment,
    star_spec,
    validate,
    weight_spec,
    zeta,
)
from .cls import ClsParams, LevelError, cls_level, cls_params, gamma, member, q_union_level
from .core import FieldElem, Tableau, TableauFamily, elem, parse_elem
from .rs_finite import (
    InsertionStep,
    InterchangePath,
    admissible,
    apply_interchange,
    connected,
    j,
    joseph_equal,
    rho_shift,
    rs,
    rs_trace,
    seq_of,
)
from .rs_infinite import (
    Axis,
    EventuallyConstantSeq,
    InfiniteRSResult,
    StablyDecreasingSeq,
    block_ideal,
    eventually_constant,
    ins,
    partition_from_row,
    plus_rho,
    rs_infinite,
    stably_decreasing,
    star_seq,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Axis",
    "ClsParams",
    "EventuallyConstantSeq",
    "FieldElem",
    "Finite",
    "InfiniteRSResult",
    "InsertionStep",
    "InterchangePath",
    "LevelError",
    "Omega",
    "OmegaStar",
    "ProperIdeal",
    "StablyDecreasingSeq",
    "Tableau",
    "TableauFamily",
    "Valid",
    "WeightSpec",
    "ZeroAnnihilator",
    "ZeroIdeal",
    "Zeta",
    "admissible",
    "apply_interchange",
    "block_ideal",
    "classify",
    "cls_level",
    "cls_params",
    "connected",
    "elem",
    "eventually_constant",
    "finite",
    "gamma",
    "ins",
    "j",
    "joseph_equal",
    "member",
    "omega",
    "omega_star",
    "parse_elem",
    "parse_spec",
    "partition_from_row",
    "plus_rho",
    "q_union_level",
    "rho_shift",
    "rs",
    "rs_infinite",
    "rs_trace",
    "seq_of",
    "segment",
    "stably_decreasing",
    "star_seq",
    "star_spec",
    "validate",
    "weight_spec",
    "zeta",
]
