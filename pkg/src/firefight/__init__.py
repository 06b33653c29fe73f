"""Solvers, kernelization, and gadget factories for the firefighting game."""

from .bench import BenchRecord, bench_dir, run_algo
from .engine import (
    SimOutcome,
    fast_validity_check,
    sav,
    simulate,
    strategy_from_text,
    strategy_to_text,
)
from .exact import SolveResult, decide_saving_k, solve_exact
from .generators import PLANTED_TAGS, gen_planted, gen_random
from .graph import (
    CLASS_TAGS,
    Graph,
    Instance,
    bfs_distances,
    components,
    connected_component_of,
    induced_subgraph,
    longest_induced_path_from,
    parse_instance,
    recognize,
    serialize_instance,
)
from .kernel import KernelOutput, check_kernel_equivalence, kernelize
from .modulators import (
    Modulator,
    find_clique_modulator,
    find_forbidden_subgraph,
    find_modulator,
    verify_modulator,
)
from .reductions import (
    ReductionOutput,
    reduce_clique_to_diameter2,
    reduce_clique_to_split,
    reduce_cliqueVC_to_stars,
)
from .stars import (
    ModulatorGuess,
    Star,
    StarDecomposition,
    StarEquivClass,
    build_equiv_classes,
    candidate_set,
    decompose_stars,
    solve_stars,
    vulnerable_stars,
)
from .threshold import (
    TypePartition,
    TypeSymbol,
    build_type_partition,
    instantiate_and_simulate,
    solve_threshold,
)

__all__ = [name for name in dir() if not name.startswith("_")]
