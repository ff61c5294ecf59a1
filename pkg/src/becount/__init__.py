"""Induced subgraph-isomorphism counting on sparse graphs.

The pipeline colors the host with a p-centered coloring, decomposes the
subgraph induced by every small color set into a treedepth decomposition,
counts motif embeddings in each by dynamic programming, and combines the
per-set counts.  A backtracking counter serves as oracle and baseline.
"""

__version__ = "0.1.0"

from .baseline import baseline_count, exhaustive_count, iter_embeddings
from .color import (ArcGraph, ColorConfig, Coloring, compute_p_centered_coloring, is_centered,
                    is_p_centered, merge_color_classes, split_color_class)
from .combine import (combine_hybrid, combine_inclusion_exclusion, exact_color_count,
                      exact_color_counts, hybrid_required, mobius)
from .decompose import (ColorSetCursor, TreedepthDecomposition, enumerate_color_sets,
                        induced_components, treedepth_decomposition)
from .errors import (BecountError, ColoringError, CountOverflowError, DecompositionError,
                     GraphError, ParseError)
from .generators import (GeneratorParams, gen_chung_lu, gen_chung_lu_households, gen_erdos_renyi,
                         gen_sbm, gen_tree_paths, generate)
from .graph import (Graph, MotifSpec, build_motif, load_edge_list, parse_edge_list, path_graph,
                    star_graph, write_edge_list)
from .harness import PipelineConfig, RunMetrics, diff_sum_ratio, run_pipeline
from .patterns import DpStats, PatternTable, count_in_decomposition, forget, join, pattern_labeling_count

__all__ = [name for name in dir() if not name.startswith("_")]
