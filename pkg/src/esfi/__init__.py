"""Free-space electrostatic field ionization of ground-state hydrogenic
atoms: closed-form rate constants, JWKB barrier integrals, unit-system
conversions and inverse field calibration."""

from . import errors
from .barrier import (
    BarrierSolution,
    MotiveModel,
    MotiveVariant,
    attempt_frequency_rate,
    barrier_strength,
    motive,
    motive_peak,
    rate_jwkb,
    suppression_field,
    turning_points,
)
from .hydrogenic import (
    HydrogenicAtom,
    cartesian_axis_to_parabolic,
    make_atom,
    parabolic_to_cartesian,
)
from .invert import InversionResult, invert_rate
from .rates import (
    RateResult,
    barrier_integral_log_part,
    barrier_integral_main_part,
    barrier_term,
    barrier_term_from_parts,
    effective_escape_probability,
    geometric_prefactor,
    guard_field,
    rate_gaussian_check,
    rate_ll,
    rate_z_form,
    suppression_field_naive,
)
from .units import (
    REGISTRY,
    ConstantsRegistry,
    Converted,
    Dimension,
    Quantity,
    UnitSystem,
    build_registry,
    convert,
    gaussian_charge_to_isq,
    gaussian_field_to_isq,
    to_canonical,
)

__version__ = "0.1.0"

__all__ = [
    "BarrierSolution",
    "ConstantsRegistry",
    "Converted",
    "Dimension",
    "HydrogenicAtom",
    "InversionResult",
    "MotiveModel",
    "MotiveVariant",
    "Quantity",
    "REGISTRY",
    "RateResult",
    "UnitSystem",
    "attempt_frequency_rate",
    "barrier_integral_log_part",
    "barrier_integral_main_part",
    "barrier_strength",
    "barrier_term",
    "barrier_term_from_parts",
    "build_registry",
    "cartesian_axis_to_parabolic",
    "convert",
    "effective_escape_probability",
    "errors",
    "gaussian_charge_to_isq",
    "gaussian_field_to_isq",
    "geometric_prefactor",
    "guard_field",
    "invert_rate",
    "make_atom",
    "motive",
    "motive_peak",
    "parabolic_to_cartesian",
    "rate_gaussian_check",
    "rate_jwkb",
    "rate_ll",
    "rate_z_form",
    "suppression_field",
    "suppression_field_naive",
    "to_canonical",
    "turning_points",
]
