"""Exact rational divisor-class calculus on moduli of stable pointed curves."""

from .core import (
    BaseMismatch,
    BoundaryIndex,
    DivisorClass,
    InvalidBoundary,
    ModuliBase,
    NotGenus2,
    ParamOutOfRange,
    PicError,
    TestCurve,
    UnknownCurve,
    builtin_test_curve,
    canonical_index,
    equals,
    from_json,
    normalize_genus2,
    pair,
    to_csv,
    to_json,
    to_latex,
)
from .maps import (
    GluingMap,
    InvalidMap,
    forget_point,
    glue_closed_tail,
    glue_tail,
    identify_points,
    pullback,
)
from .enumerative import (
    ArityMismatch,
    IntPolynomial,
    OutOfRange,
    ProfileTooLong,
    ZeroPolynomial,
    count_distinct_nonzero_roots,
    de_jonquieres,
    picard_degree,
    plucker,
    residue_polynomial,
)
from .catalog import (
    BadWeights,
    GenusTooSmall,
    ParityUnavailable,
    UnsupportedPole,
    UnsupportedWeights,
    anti_ramification,
    bn_coefficient_check,
    brill_noether,
    coupled_partition,
    d1_holo,
    d1_mero,
    d_infinity,
    diaz,
    logan_class,
    pinch_partition,
    residual,
    theta_characteristic_locus,
    theta_pullback_class,
    weierstrass,
)

__all__ = [n for n in dir() if not n.startswith("_")]
