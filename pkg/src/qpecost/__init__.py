"""T-gate cost and synthesis-time estimation for quantum phase estimation
algorithms on molecular Hamiltonians."""
from .config import CostModelConfig, RunConfig, SurfaceCodeConfig
from .errors import (ErrorAllocation, ErrorBudget, OptimizerConfig,
                     applicable_errors, optimize_allocation,
                     phase_estimation_time)
from .methods import METHODS, CostBreakdown, get_method, method_names
from .molecule import (MolecularParams, PlaneWaveDerived, SchemaError,
                       ci_gamma, derive_plane_wave_count, load_params,
                       nu_inverse_square_sum, norm_bounds, save_params)
from .surface import synthesis_time

__version__ = "0.1.0"
__all__ = [
    "CostBreakdown", "CostModelConfig", "ErrorAllocation", "ErrorBudget",
    "METHODS", "MolecularParams", "OptimizerConfig", "PlaneWaveDerived",
    "RunConfig", "SchemaError", "SurfaceCodeConfig", "applicable_errors",
    "ci_gamma", "derive_plane_wave_count", "get_method", "load_params",
    "method_names", "norm_bounds", "nu_inverse_square_sum",
    "optimize_allocation", "phase_estimation_time", "save_params",
    "synthesis_time",
]
