"""Exact box-entry probabilities for random infinite Young tableaux."""
from .arith import Gaussian, parse_scalar
from .graph import Jack, Kingman, Young, dim_kappa, kappa
from .measures import KingmanT, PlancherelJack, ZMeasure, phi, transition
from .partitions import Box, Partition, parse_partition

__version__ = "0.1.0"

__all__ = [
    "Box",
    "Gaussian",
    "Jack",
    "Kingman",
    "KingmanT",
    "Partition",
    "PlancherelJack",
    "Young",
    "ZMeasure",
    "dim_kappa",
    "kappa",
    "parse_partition",
    "parse_scalar",
    "phi",
    "transition",
]
