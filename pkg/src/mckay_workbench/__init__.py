"""Numerical side of the McKay correspondence for A_{N-1} resolutions.

Stability vectors from polarizations, stable one-dimensional sheaf classes
and their chains, Betti and restricted Kac generating series, all computed
with exact rational arithmetic.
"""

from .toric import (
    DivisorClass,
    Polarization,
    ResolutionGeometry,
    build_resolution,
    intersection,
    interval_divisor,
    interval_pairing,
    tilting_divisor,
)
from .quiver import (
    Quiver,
    QuiverRep,
    euler_pairing,
    is_preprojective,
    moment_map_defect,
    ringel_pairing,
    structure_sheaf_rep,
    thin_semistability,
    verify_subrep_certificate,
    zeta_degree,
    zeta_slope,
)
from .dictionary import (
    INF,
    SheafClass,
    chern_to_dimvec,
    dimvec_to_chern,
    omega_to_zeta,
    simple_object_dictionary,
    slope_omega,
    zeta_degree_of_sheaf,
)
from .classification import (
    StableClass,
    chain_partition,
    enumerate_stable_classes,
    ext_table,
    positive_roots,
    twisting_line_bundle,
    yangian_factorization,
)
from .series import (
    TruncatedSeries,
    adams,
    betti_series,
    plethystic_exp,
    product_formula_oracle,
    q_over_q_minus_one,
    restricted_kac_generating,
)

__version__ = "0.1.0"
