"""Exact algebra of asynchronous pseudo-systems over finite universes."""

from .delay import DelayParams, delay_membership, delay_snapshot, pure_delay_states
from .errors import (
    DimensionMismatch,
    MissingLimit,
    NoInducedSystem,
    ParseError,
    PseudoSysError,
    SignalError,
    UniverseError,
    UnsupportedSignal,
)
from .properties import (
    BoundaryReport,
    StateFunctionReport,
    StateLevel,
    TimeLevel,
    boundary_report,
    implied_cells,
    state_function,
)
from .pseudo_system import (
    PseudoSystem,
    apply,
    build,
    complement,
    constant_system,
    dual,
    from_pairs,
    induced_system,
    intersect,
    inverse,
    is_subsystem,
    is_system,
    null,
    parallel,
    product,
    same_map,
    serial,
    support,
    total,
    union,
)
from .signal import (
    BVec,
    Const,
    Periodic,
    Side,
    Signal,
    complement_signal,
    concat,
    constant,
    limit_value,
    make_signal,
    membership_class,
    project,
    shift,
    step,
    value_at,
)
from .step import StepFunction, embed, pointwise_leq, window_extrema, window_inf, window_sup
from .transfer import LawResult, check_transfer_laws

__version__ = "0.1.0"
