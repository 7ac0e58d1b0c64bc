"""crsphere: exact (pseudo-)sphericity certification for real-analytic
hypersurfaces, via truncated power series arithmetic over Gaussian
rationals and explicit zero-curvature obstructions."""

__version__ = "0.1.0"

from .rational import GaussianRational, gr
from .series import TruncatedSeries, solve_implicit
from .hypersurface import (RealGraph, ComplexGraph, SurfacePoint, LeviData,
                           complexify, recenter, levi_matrix,
                           is_levi_nondegenerate, signature_at,
                           levi_locus_sample, LatticeSpec, LeviDegenerateError)
from .pde import PdeSystem, associate_system
from .curvature import (ObstructionReport, Verdict, MinorSpec, aj4, d_apply,
                        sphericity_obstruction_c2, numerator_c2,
                        hachtroudi_flatness, theta_obstruction_cn,
                        pseudospherical_verdict, propagate_check)

__all__ = [
    "GaussianRational", "gr", "TruncatedSeries", "solve_implicit",
    "RealGraph", "ComplexGraph", "SurfacePoint", "LeviData",
    "complexify", "recenter", "levi_matrix", "is_levi_nondegenerate",
    "signature_at", "levi_locus_sample", "LatticeSpec", "LeviDegenerateError",
    "PdeSystem", "associate_system",
    "ObstructionReport", "Verdict", "MinorSpec", "aj4", "d_apply",
    "sphericity_obstruction_c2", "numerator_c2", "hachtroudi_flatness",
    "theta_obstruction_cn", "pseudospherical_verdict", "propagate_check",
]
