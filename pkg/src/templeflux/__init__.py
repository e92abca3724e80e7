"""Finite-volume and exact-solution tools for a 2x2 system of conservation
laws with a spatially discontinuous flux coefficient."""

from .model import (
    CoefficientProfile,
    LinearVelocity,
    ModelLaws,
    PowerPressure,
    ValidationReport,
    coefficient_at,
    coefficient_tv,
    pressure_eval,
    validate_laws,
    velocity_eval,
)
from .state import (
    ConservedState,
    InvariantState,
    eigenvalues,
    eigenvectors,
    flux_argmax,
    flux_f,
    flux_max,
    flux_vector,
    genuine_nonlinearity_alpha,
    lambda_w,
    lambda_w_inverse,
    region_tag,
    shock_speed,
    to_conserved,
    to_invariants,
)
from .riemann import (
    InterfaceData,
    Wave,
    WaveFan,
    hat_state,
    check_state,
    interface_data,
    parse_wave_list,
    sample,
    solve_single,
    solve_two_sided,
    traces_at_zero,
    wave_list_lines,
)
from .entropy import (
    GeneralEntropySpec,
    admissible_discontinuity,
    conent0_residual,
    dissipation,
    pair_general_eval,
    pair_k_eval,
)
from .fvm import (
    Field,
    Grid,
    InitialDatum,
    RunResult,
    Scenario,
    StepRejected,
    init_field,
    invariant_arrays,
    l1_error,
    lf_step,
    max_wave_speed,
    run,
)

__version__ = "0.1.0"
