"""Centralizers and component groups of finitely generated subgroups of PGL_n.

Exact arithmetic over cyclotomic fields Q(zeta_m); see the README for a tour.
"""

from .compgroup import ComponentGroupReport, classify_label, component_group
from .cyclofield import CycNum, cyc_inv, cyc_make, cyc_mul, format_cyc, parse_cyc
from .exactla import (
    LinearSpace,
    Matrix,
    SquareMatrix,
    diag,
    identity,
    mat_det,
    mat_inv,
    mat_kernel,
    mat_mul,
    mat_rank,
)
from .families import FamilySpec, build_family, stabilize
from .problem import ProblemFile, format_problem, parse_problem
from .report import emit_report, run_paper_suite
from .twistcent import (
    GeneratorSet,
    Stratum,
    build_twisted_system,
    centralizer,
    find_invertible,
    solve_stratum,
)

__version__ = "0.1.0"
