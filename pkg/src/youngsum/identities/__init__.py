"""Summation identities for box-entry probabilities and their evaluation."""
from .boxprob import box_probability_cumulative, box_probability_term, upper_hook_set
from .evaluate import (
    IDENTITIES,
    GenericBox,
    HookRowsForm,
    KingmanTBox,
    PlancherelYoungBox,
    SpecialCase,
    StrictRowsForm,
    ThetaPlancherelHook,
    ZMeasureHook,
    evaluate_identity,
    level_masses,
)
from .hypergeom import hook_series_closed_form, hook_series_partial_sum, hyp3f2_partial_sum
from .integral import integral_check, recurrence_ratio
from .report import ConvergenceReport, LevelRow, parse_structured

__all__ = [
    "IDENTITIES",
    "ConvergenceReport",
    "GenericBox",
    "HookRowsForm",
    "KingmanTBox",
    "LevelRow",
    "PlancherelYoungBox",
    "SpecialCase",
    "StrictRowsForm",
    "ThetaPlancherelHook",
    "ZMeasureHook",
    "box_probability_cumulative",
    "box_probability_term",
    "evaluate_identity",
    "hook_series_closed_form",
    "hook_series_partial_sum",
    "hyp3f2_partial_sum",
    "integral_check",
    "level_masses",
    "parse_structured",
    "recurrence_ratio",
    "upper_hook_set",
]
