"""Graded characters of K-nilpotent cones for real forms split modulo center.

The main entry points: `build_root_datum` for the ambient combinatorics,
`nilcone_series`/`nilcone_character` for the graded functions on the full
nilpotent cone, `theta_cone_character` for the K-side via the signed exterior
class, `graded_branching_sum` for the standard-module bookkeeping, and the
`oracle` module for independent brute-force verification.
"""

from .charring import (
    GradedCharacter,
    IrrepSeries,
    TorusCharacter,
    decompose_into_irreducibles,
    graded_mul,
    irreducible_character,
    restrict_character,
)
from .config import ConfigError, LoadedConfig, config_from_dict, load_config_file
from .catalog import catalog_names, load_catalog_config
from .kostant import (
    freudenthal_multiplicity,
    kostant_partition,
    kostant_partition_q,
    lusztig_mq,
    weyl_multiplicity,
)
from .ktheta import (
    CheckResult,
    Dims,
    RealFormConfig,
    SplitHypothesisError,
    dimension_check,
    koszul_check,
    theta_cone_character,
    theta_cone_ktypes,
    wedge_class,
)
from .langlands import (
    ContinuedParameter,
    FormalStandardSum,
    PositiveSystem,
    TorusDatum,
    WeightMultiset,
    graded_branching_sum,
    k_norm_squared,
    k_weight_multiset,
    tensor_standard,
    wedge_weight_multiset,
    zuckerman_expansion,
)
from .nilcone import nilcone_character, nilcone_series
from .oracle import (
    AffineConeModel,
    ConeVariable,
    compare_with_formula,
    graded_character_by_degree,
    hilbert_by_degree,
)
from .qpoly import QPolynomial
from .rootdata import (
    InvolutionData,
    RootDatum,
    WeylElement,
    build_root_datum,
    classify_roots,
    dominant_weights_up_to_height,
    reductive_root_datum,
    torus_datum,
)

__version__ = "0.1.0"
