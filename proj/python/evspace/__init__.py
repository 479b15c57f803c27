"""Exact admissibility tests for observed conditional probabilities."""

from ._core import (
    IncoherentInputs,
    InputError,
    NotRepresentable,
    ResourceLimit,
    ZeroMeasureError,
    bayes_invert,
    broker_mix,
    check_classical,
    check_complex_qs,
    check_real_qs,
    classify,
    decompose,
    estimate_triple,
    ltp_compose,
    membership,
    realize,
    run_cli,
    smooth_triple,
    statistical_invariant,
    survey,
)

__all__ = [
    "IncoherentInputs",
    "InputError",
    "NotRepresentable",
    "ResourceLimit",
    "ZeroMeasureError",
    "bayes_invert",
    "broker_mix",
    "check_classical",
    "check_complex_qs",
    "check_real_qs",
    "classify",
    "decompose",
    "estimate_triple",
    "ltp_compose",
    "membership",
    "realize",
    "run_cli",
    "smooth_triple",
    "statistical_invariant",
    "survey",
]
