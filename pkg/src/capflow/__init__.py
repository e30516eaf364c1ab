"""capflow: pressure-drop/flow-rate relations for Newtonian flow through
converging-diverging axisymmetric capillaries."""

from .errors import (
    CapflowError,
    DegenerateShapeError,
    DomainError,
    InvalidInputError,
    InvalidMomentumModelError,
    NegativeFlowError,
    QuadratureError,
    UnsupportedKindError,
)
from .flow_models import (
    DEFAULT_ALPHA,
    FlowSolution,
    FluidProperties,
    ModelTag,
    MomentumModel,
    flow_rate_from_pressure,
    kappa,
    pressure_drop_lub,
    pressure_drop_ns,
    resistance_coefficient,
    solve,
)
from .geometry import (
    CONVERGING_DIVERGING_KINDS,
    CapillaryGeometry,
    ShapeParameters,
    TubeKind,
    area_at,
    radius_at,
    shape_parameters,
)
from .oracle import (
    ConvergenceRecord,
    QuadratureConfig,
    convergence_series,
    pressure_drop_discretized,
    pressure_drop_quadrature,
)
from .validation import (
    ValidationReport,
    check_lubrication_identity,
    check_oracle_agreement,
    check_straight_limit,
    sinusoidal_reduces_to_poiseuille,
)

__version__ = "0.1.0"
