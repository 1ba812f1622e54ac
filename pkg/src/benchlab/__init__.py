"""Test functions, black boxes, grids and synthetic lifetime maps."""

from .blackbox import (
    CASE1_KERNEL,
    AnalyticBlackBox,
    BlackBox,
    NotTabulatedError,
    TabulatedBlackBox,
    gen_gp_sample_case1,
    observe_value,
)
from .functions import (
    ANALYTIC_FUNCTIONS,
    FunctionDimensionError,
    eval_himmelblau,
    eval_rosenbrock,
    eval_sinusoidal,
    eval_sphere,
    eval_styblinski_tang,
    get_function,
)
from .grids import DegenerateBoundsError, make_grid, uniform_box
from .standin import (
    LIFETIME_HEADER,
    LIFETIME_MAX,
    LIFETIME_MIN,
    LIFETIME_SHAPE,
    generate_lifetime_standin,
    lifetime_axes,
    lifetime_lattice,
    write_lifetime_csv,
)

__all__ = [
    "ANALYTIC_FUNCTIONS",
    "AnalyticBlackBox",
    "BlackBox",
    "CASE1_KERNEL",
    "DegenerateBoundsError",
    "FunctionDimensionError",
    "LIFETIME_HEADER",
    "LIFETIME_MAX",
    "LIFETIME_MIN",
    "LIFETIME_SHAPE",
    "NotTabulatedError",
    "TabulatedBlackBox",
    "eval_himmelblau",
    "eval_rosenbrock",
    "eval_sinusoidal",
    "eval_sphere",
    "eval_styblinski_tang",
    "gen_gp_sample_case1",
    "generate_lifetime_standin",
    "get_function",
    "lifetime_axes",
    "lifetime_lattice",
    "make_grid",
    "observe_value",
    "uniform_box",
    "write_lifetime_csv",
]
