"""p-centered colorings: orientation, augmentation, greedy coloring, checks."""

from .arcs import (ArcGraph, augment_step, augmentation_candidates, degeneracy_order,
                   orient_degeneracy, orient_sandpile)
from .check import class_quotient, is_centered, is_p_centered, uncentered_color_set
from .coloring import Coloring, format_coloring, parse_coloring, read_coloring, write_coloring
from .greedy import PRIORITIZATIONS, greedy_color
from .pcentered import (AUGMENTATIONS, ORIENTATIONS, SPLIT_HEURISTICS, ColorConfig, ColorStats,
                        compute_p_centered_coloring, high_degree_threshold, merge_color_classes,
                        split_color_class)

__all__ = [
    "ArcGraph", "augment_step", "augmentation_candidates", "degeneracy_order",
    "orient_degeneracy", "orient_sandpile", "class_quotient", "is_centered", "is_p_centered",
    "uncentered_color_set", "Coloring", "format_coloring", "parse_coloring",
    "read_coloring", "write_coloring", "PRIORITIZATIONS", "greedy_color",
    "AUGMENTATIONS", "ORIENTATIONS", "SPLIT_HEURISTICS", "ColorConfig", "ColorStats",
    "compute_p_centered_coloring", "high_degree_threshold", "merge_color_classes",
    "split_color_class",
]
