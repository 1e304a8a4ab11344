"""Generator and maximal quantum Fisher information for spin-algebra dynamics.

The package computes the Hermitian operator generated by a parameter-
dependent field coupled linearly to spin operators, the maximal quantum
Fisher information it allows, and the optimal input states; independent
numerical oracles (commutator series, finite differences, time-ordered
products) validate every closed form.
"""

__version__ = "0.1.0"

from .spin import (
    SpinRep,
    build_spin_rep,
    commutator,
    dot_with_J,
    frobenius,
    hermitian_expm,
)
from .generator import (
    DegenerateFieldError,
    FieldCurve,
    GeneratorResult,
    QfiBreakdown,
    VelocitySplit,
    analytic_generator,
    generator_vector,
    generator_vector_from_split,
    mqfi_closed_form,
    mqfi_small_time,
    split_velocity,
)
from .numerics import (
    OptimalStateResult,
    compose_generators,
    fd_step,
    generator_fd,
    generator_series,
    generator_series_scaled,
    optimal_state,
    qfi_fd,
    qfi_of_state,
    series_tail_bound,
    trotter_propagator,
)
from .cases import (
    DrivenSystem,
    RotatingFrame,
    SphericalField,
    StaticFieldSystem,
    driven_static_curve,
    driven_static_mqfi,
    driving_frequency_mqfi,
    driving_generator,
    driving_generator_vector,
    rotating_frame,
    spherical_curve,
    spherical_field_mqfi,
    static_curve,
    static_field_mqfi,
)

__all__ = [
    "__version__",
    "SpinRep", "build_spin_rep", "commutator", "dot_with_J", "frobenius", "hermitian_expm",
    "DegenerateFieldError", "FieldCurve", "GeneratorResult", "QfiBreakdown", "VelocitySplit",
    "analytic_generator", "generator_vector", "generator_vector_from_split",
    "mqfi_closed_form", "mqfi_small_time", "split_velocity",
    "OptimalStateResult", "compose_generators", "fd_step", "generator_fd",
    "generator_series", "generator_series_scaled", "optimal_state", "qfi_fd",
    "qfi_of_state", "series_tail_bound", "trotter_propagator",
    "DrivenSystem", "RotatingFrame", "SphericalField", "StaticFieldSystem",
    "driven_static_curve", "driven_static_mqfi", "driving_frequency_mqfi",
    "driving_generator", "driving_generator_vector", "rotating_frame",
    "spherical_curve", "spherical_field_mqfi", "static_curve", "static_field_mqfi",
]
