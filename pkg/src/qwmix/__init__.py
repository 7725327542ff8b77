"""qwmix: uniform and eps-uniform mixing of continuous-time quantum walks
on small graphs — graph families, exact spectral checks, flatness scans,
strongly-regular classification, bipartite obstructions, and the
prime-cycle approximate-mixing search.
"""

__version__ = "0.1.0"

from .errors import (
    InfeasibleParamsError,
    InvalidArgumentError,
    NoMixingError,
    NumericFailureError,
    SizeLimitError,
    StructureViolationError,
)
from .graphs import (
    Graph,
    SrgParams,
    bipartition,
    cartesian_product,
    complement,
    complete,
    cycle,
    from_adjacency,
    hamming,
    is_regular,
    paley,
    parse_graph_spec,
    srg_params,
)
from .spectral import (
    IntPolynomial,
    SpectralDecomposition,
    char_poly_exact,
    cosine_minimal_poly,
    eigendecompose,
    integral_spectrum,
    rational_cosine,
)
from .walk import (
    MixingReport,
    TransitionMatrix,
    butson_order,
    complement_time_check,
    flatness,
    is_complex_hadamard,
    is_uniform_mixing_at,
    mixing_scan,
    parse_time,
    parse_time_grid,
    transition,
)
from .srg import (
    HadamardCoefficients,
    ParameterFamily,
    SrgVerdict,
    characterizing_residual,
    classify_family,
    family_i_ii_times,
    rshcd_check,
    srg_eigenvalues,
    srg_mixing_verdict,
)
from .bipartite import (
    Obstruction,
    block_structure_residual,
    dephase_to_real_hadamard,
    divisible_by_four,
    rule_out_mixing,
    sum_of_two_squares,
)
from .cycles_eps import (
    DualFourier,
    EpsSearchResult,
    dual_fourier,
    eps_search,
    exponent_targets,
    fourier_type,
    last_coordinate_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
