"""Improper affine fronts from Weierstrass data.

Construction, period verification, end classification, total curvature,
the genus-1 period-closing solver, and mesh export.
"""

from .elliptic import (
    EllipticCombination,
    EllipticFunction,
    Lattice,
    elliptic_eval,
    lattice_invariants,
    wp_eval,
    zeta_eval,
)
from .ends import (
    EndReport,
    OssermanLedger,
    asymptotic_deviation,
    asymptotic_model,
    classify_end,
    end_orders,
    osserman_report,
)
from .catalog import CatalogEntry, catalog_build, catalog_list
from .genus1 import (
    Genus1PeriodPair,
    build_genus1_8pi,
    build_genus1_10pi,
    choose_c,
    continue_genus1,
    period_pair,
    solve_alpha0,
)
from .grids import GridSpec, default_grid
from .io import data_from_json, data_to_json, load_data, dump_data
from .meshing import SurfaceMesh, export, export_csv, export_obj, sample_mesh
from .periods import (
    CircleCycle,
    PeriodReport,
    SegmentCycle,
    check_period_condition,
    contour_integral,
    torus_closed_form_periods,
)
from .rational import (
    INF,
    PoleZeroProfile,
    Polynomial,
    RationalFunction,
    antiderivative,
    degree,
    differentiate,
    poles_zeros,
    residue,
)
from .surface import (
    DomainSpec,
    MetricSample,
    PsiValue,
    WeierstrassData,
    equiaffine_transform,
    evaluate_psi,
    gauss_map,
    metrics_at,
    singular_locus,
    total_curvature,
    validate,
)

__version__ = "0.1.0"
