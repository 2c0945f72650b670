"""Plane models of the modular curves X_0(N).

The image of ``z -> (Delta(z) : E4(z)^3 : Delta(N z))`` is a plane curve
birational to X_0(N); its equation ``P_N(j, Delta(N z)/Delta(z)) = 0`` is
computed here exactly from q-expansions, along with the cusp and degree data
certifying birationality.
"""

__version__ = "0.1.0"

from .bivariate import BivariatePoly
from .cuspdiv import CuspClass, DegreeReport, birational_certificate, cusp_classes, degree_f, div_inf_f
from .forms import delta, e4, f_function, j_invariant
from .invariants import CurveInvariants, curve_invariants, degree_formula_check
from .minpoly import (
    KernelEmpty,
    KernelTooLarge,
    bidegree_bounds,
    build_kernel_problem,
    log_height,
    minimality_check,
    plane_model,
    solve_kernel,
    verify,
)
from .ntarith import dedekind_psi, divisors, euler_phi, factor, sigma3
from .qseries import NonUnitLeading, PrecisionExceeded, QSeries
