"""Entanglement measures for pure states built from wedge products of coefficient-matrix rows."""

__version__ = "0.1.0"

from .errors import (
    ArgumentError,
    DegenerateStateError,
    DimensionError,
    StateFormatError,
    WedgentError,
)
from .measures import (
    MeasureConfig,
    MeasureReport,
    Normalization,
    bipartite_measure,
    measure_auto,
    mode_contribution,
    multipartite_measure,
    multiqubit_measure,
    normalization_constant,
    two_qubit_concurrence,
)
from .oracle import PuritySummary, oracle_measure, purities, wootters_pure_concurrence
from .stateio import dump_state, dumps_state, load_state, loads_state
from .states import (
    LocalUnitary,
    PureState,
    apply_local_unitary,
    make_state,
    named_state,
    normalize,
    random_state,
)
from .unfolding import Unfolding, gram_matrix, row, unfold
from .wedge import MinorTable, lagrange_check, wedge, wedge_norm_sq
