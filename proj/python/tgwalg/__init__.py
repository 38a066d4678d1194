"""Twisted generalized Weyl algebras over Clifford/Weyl superalgebras."""

from ._core import (
    BaseRingElement,
    Error,
    GammaMatrix,
    Inhomogeneous,
    InvalidGamma,
    InvalidInput,
    Nilpotent,
    ResourceLimit,
    Signature,
    SuperElement,
    UndefinedDegree,
    calibrate,
    check_lie,
    consistency,
    datum,
    eval_word,
    injectivity,
    is_in_support,
    oracle_membership,
    support,
    tau_apply,
    validate,
)

__all__ = [
    "BaseRingElement",
    "Error",
    "GammaMatrix",
    "Inhomogeneous",
    "InvalidGamma",
    "InvalidInput",
    "Nilpotent",
    "ResourceLimit",
    "Signature",
    "SuperElement",
    "UndefinedDegree",
    "calibrate",
    "check_lie",
    "consistency",
    "datum",
    "eval_word",
    "injectivity",
    "is_in_support",
    "oracle_membership",
    "support",
    "tau_apply",
    "validate",
]
