"""Configuration, pipeline orchestration and experiment drivers."""

from .config import (COMBINE_METHODS, CONFIG_KEYS, ENGINES, PipelineConfig, load_config,
                     parse_config)
from .csvio import SCHEMA_VERSION, read_csv, rows_to_csv, strip_timing, timing_column, write_csv
from .experiments import (config_grid, desk_instances, pad_coloring, pairwise_ratios,
                          predicted_growth, run_config_sweep, run_split_experiment,
                          run_treedepth_experiment)
from .metrics import diff_sum_ratio
from .pipeline import CountDetail, RunMetrics, color_for_motif, count_with_coloring, run_pipeline

__all__ = [
    "COMBINE_METHODS", "CONFIG_KEYS", "ENGINES", "PipelineConfig", "load_config", "parse_config",
    "SCHEMA_VERSION", "read_csv", "rows_to_csv", "strip_timing", "timing_column", "write_csv",
    "config_grid", "desk_instances", "pad_coloring", "pairwise_ratios", "predicted_growth",
    "run_config_sweep", "run_split_experiment", "run_treedepth_experiment", "diff_sum_ratio",
    "CountDetail", "RunMetrics", "color_for_motif", "count_with_coloring", "run_pipeline",
]
