"""Numeric JWKB machinery: motive-energy models, turning points, barrier
strength and JWKB-form rate constants.

Three barrier shapes are supported for a hydrogenic atom in a uniform
field F (canonical units: energies eV, lengths nm, fields V/nm):

* transformed parabolic, in the parabolic coordinate eta along which the
  separated Schroedinger equation takes one-dimensional form:
      M(eta) = I/4 - e F eta/8 - B/(4 eta) - 1/(4 sigma^2 eta^2)
* the same barrier converted to the symmetry axis via eta = 2 z:
      M(z) = I - e F z - B/(2 z) - 1/(4 sigma^2 z^2)
* the naive one-dimensional energy count along the axis:
      M(z) = I - e F z - B/z

The transformed forms differ from the naive one in the halved Coulomb
term and the short-range correction; the two transformed parametrizations
give identical barrier-strength integrals.

The barrier-strength integrand M^(1/2) has square-root zeros at both
turning points; the quadrature maps the interval through a sine
substitution, which makes the integrand analytic at the endpoints, before
handing it to adaptive Gauss-Kronrod integration.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import asdict, dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import (
    BarrierSuppressed,
    BracketingFailure,
    NonPositiveCoordinate,
    NonPositiveField,
    QuadratureNonConvergence,
    ShallowBarrierWarning,
)
from .hydrogenic import HydrogenicAtom, cartesian_axis_to_parabolic
from .rates import (
    REGIME_DEEP,
    REGIME_EXTRAPOLATED,
    REGIME_SHALLOW,
    guard_field,
    suppression_field_naive,
)
from .units import REGISTRY

_ROOT_RTOL = 4.0 * float(np.finfo(float).eps)
# coordinates span 1e-4..1e3 nm; keep the absolute tolerance far below the
# relative one so root residuals stay at the rounding floor
_ROOT_XTOL = 1e-18


class MotiveVariant(enum.Enum):
    TRANSFORMED_PARABOLIC = "jwkb-parabolic"
    TRANSFORMED_CARTESIAN = "jwkb-cartesian"
    NAIVE_1D = "jwkb-naive"


@dataclass(frozen=True)
class MotiveModel:
    """A barrier shape for one atom at one field value."""

    variant: MotiveVariant
    atom: HydrogenicAtom
    F: float  # V/nm

    def __post_init__(self):
        if not math.isfinite(self.F) or self.F <= 0:
            raise NonPositiveField(f"field must be positive, got {self.F}")


def motive(model: MotiveModel, coord):
    """Motive energy [eV] at the given coordinate [nm] (scalar or array).

    The coordinate is eta for the transformed-parabolic variant and z for
    the Cartesian ones.  Note the transformed-parabolic values carry the
    separated equation's I/4 energy scale; the barrier-strength integral
    uses them as-is.
    """
    if np.any(np.asarray(coord) <= 0):
        raise NonPositiveCoordinate(f"coordinate must be positive, got {coord}")
    a, c = model.atom, coord
    e = REGISTRY.e.value
    sigma2 = REGISTRY.sigma.value ** 2
    if model.variant is MotiveVariant.TRANSFORMED_PARABOLIC:
        return a.I / 4.0 - e * model.F * c / 8.0 - a.B / (4.0 * c) - 1.0 / (4.0 * sigma2 * c * c)
    if model.variant is MotiveVariant.TRANSFORMED_CARTESIAN:
        return a.I - e * model.F * c - a.B / (2.0 * c) - 1.0 / (4.0 * sigma2 * c * c)
    return a.I - e * model.F * c - a.B / c


def _motive_derivative(model: MotiveModel, coord):
    # strictly decreasing in coord for every variant: single interior peak
    a, c = model.atom, coord
    e = REGISTRY.e.value
    sigma2 = REGISTRY.sigma.value ** 2
    if model.variant is MotiveVariant.TRANSFORMED_PARABOLIC:
        return -e * model.F / 8.0 + a.B / (4.0 * c * c) + 1.0 / (2.0 * sigma2 * c**3)
    if model.variant is MotiveVariant.TRANSFORMED_CARTESIAN:
        return -e * model.F + a.B / (2.0 * c * c) + 1.0 / (2.0 * sigma2 * c**3)
    return -e * model.F + a.B / (c * c)


def _scan_interval(model: MotiveModel) -> tuple[float, float]:
    lo = model.atom.a_Z / 100.0
    hi = 10.0 * 2.0 * model.atom.I / (REGISTRY.e.value * model.F)
    return lo, hi


def motive_peak(model: MotiveModel) -> tuple[float, float]:
    """Location and value of the single barrier maximum."""
    lo, hi = _scan_interval(model)
    peak = brentq(lambda c: _motive_derivative(model, c), lo, hi, xtol=_ROOT_XTOL, rtol=_ROOT_RTOL)
    return peak, motive(model, peak)


def suppression_field(atom: HydrogenicAtom, variant: MotiveVariant) -> float:
    """Field at which the barrier of the given shape vanishes [V/nm].

    Closed form I^2/(4 e B) for the naive barrier; solved numerically
    (peak value crossing zero) for the transformed shapes, which survive
    to somewhat higher fields.
    """
    if variant is MotiveVariant.NAIVE_1D:
        return suppression_field_naive(atom)

    def peak_value(F: float) -> float:
        return motive_peak(MotiveModel(variant, atom, F))[1]

    f_lo = suppression_field_naive(atom)
    while peak_value(f_lo) <= 0.0:
        f_lo /= 4.0
    f_hi = 4.0 * f_lo
    while peak_value(f_hi) > 0.0:
        f_hi *= 4.0
    return brentq(peak_value, f_lo, f_hi, rtol=1e-12)


def turning_points(model: MotiveModel) -> tuple[float, float]:
    """Both zeros of the motive energy, to ~machine relative precision.

    The barrier peak (unique: the motive derivative is monotone) decides
    suppression first; a peak within rounding error of zero counts as
    merged turning points.  A log-spaced scan over (a_Z/100, 20 I/(e F))
    then brackets the sign changes and Brent's method polishes them, with
    the peak providing fallback brackets if the grid straddles a narrow
    barrier without resolving it.
    """
    peak, peak_value = motive_peak(model)
    if peak_value <= 1e3 * float(np.finfo(float).eps) * model.atom.I:
        f_bs = suppression_field(model.atom, model.variant)
        raise BarrierSuppressed(
            f"barrier vanished at F={model.F:.6g} V/nm "
            f"(suppression field {f_bs:.6g} V/nm for {model.variant.value})",
            suppression_field=f_bs,
        )

    lo, hi = _scan_interval(model)
    grid = np.geomspace(lo, hi, 256)
    values = motive(model, grid)
    f = lambda c: motive(model, c)

    try:
        sign_changes = np.nonzero(np.diff(values > 0.0))[0]
        if len(sign_changes) >= 2:
            i, j = sign_changes[0], sign_changes[-1]
            c_in = brentq(f, grid[i], grid[i + 1], xtol=_ROOT_XTOL, rtol=_ROOT_RTOL)
            c_out = brentq(f, grid[j], grid[j + 1], xtol=_ROOT_XTOL, rtol=_ROOT_RTOL)
        else:
            c_in = brentq(f, lo, peak, xtol=_ROOT_XTOL, rtol=_ROOT_RTOL)
            c_out = brentq(f, peak, hi, xtol=_ROOT_XTOL, rtol=_ROOT_RTOL)
    except ValueError as exc:
        raise BracketingFailure(
            f"could not bracket motive zeros around peak {peak:.6g} nm: {exc}"
        ) from exc
    return c_in, c_out


def _strength_between(model: MotiveModel, c_in: float, c_out: float) -> float:
    mid = 0.5 * (c_in + c_out)
    half = 0.5 * (c_out - c_in)

    def integrand(t: float) -> float:
        m = motive(model, mid + half * math.sin(t))
        # rounding can push m a hair below zero right at the endpoints
        return math.sqrt(m) * math.cos(t) if m > 0.0 else 0.0

    out = quad(integrand, -0.5 * math.pi, 0.5 * math.pi,
               epsabs=1e-12, epsrel=2e-13, limit=200, full_output=True)
    value, abserr = out[0], out[1]
    scale = 2.0 * REGISTRY.sigma.value * half
    G = scale * value
    # 1e-10 absolute, relaxed proportionally once G is so large that the
    # bound would sit below float64 roundoff (a QUADPACK roundoff notice
    # with an acceptable error estimate is not a failure)
    if scale * abserr > max(1e-10, 1e-12 * abs(G)):
        raise QuadratureNonConvergence(
            f"barrier-strength quadrature error {scale * abserr:.3e} "
            f"exceeds tolerance (G={G:.6g})"
        )
    return G


def barrier_strength(model: MotiveModel) -> float:
    """Barrier strength G = 2 sigma * integral of M^(1/2) between the
    turning points (dimensionless).  Parametrization-invariant: the eta
    and z forms agree."""
    c_in, c_out = turning_points(model)
    return _strength_between(model, c_in, c_out)


@dataclass(frozen=True)
class BarrierSolution:
    """Turning points, barrier strength and the assembled JWKB rate."""

    method: str
    coord_in: float   # nm, inner motive zero (eta or z per variant)
    coord_out: float  # nm, outer motive zero
    G: float          # barrier strength
    P_jwkb: float     # JWKB-form pre-factor (1 in simple mode / naive)
    P_eff: float      # effective tunnelling pre-factor 2 pi P_jwkb
    D_eff: float      # escape probability P_eff exp(-G); may underflow
    K_e: float        # nu_Z * D_eff [s^-1]; may underflow
    log_K_e: float    # ln(nu_Z P_eff) - G, immune to underflow
    regime: str

    def as_dict(self) -> dict:
        return asdict(self)


def rate_jwkb(model: MotiveModel, *, simple_prefactor: bool = False) -> BarrierSolution:
    """JWKB-form rate constant for the given barrier model.

    For the transformed shapes the matching coordinate is taken at the
    inner motive zero, giving the pre-factor

        P_jwkb = (2I/B) eta_in exp[-(2I/B) eta_in],  P_eff = 2 pi P_jwkb,

    (eta_in = 2 z_in for the Cartesian parametrization) and

        K_e = nu_Z * P_eff * exp(-G).

    With ``simple_prefactor=True``, or for the naive barrier (a
    comparison baseline only), the plain attempt-frequency estimate
    K_e = nu_Z * exp(-G) is used instead (tunnelling pre-factor 1).
    """
    atom = model.atom
    c_in, c_out = turning_points(model)
    G = _strength_between(model, c_in, c_out)

    if simple_prefactor or model.variant is MotiveVariant.NAIVE_1D:
        P_jwkb = 1.0
        P_eff = 1.0
    else:
        if model.variant is MotiveVariant.TRANSFORMED_PARABOLIC:
            eta_in = c_in
        else:
            eta_in = cartesian_axis_to_parabolic(c_in)
        x = 2.0 * atom.I / atom.B * eta_in
        P_jwkb = x * math.exp(-x)
        P_eff = 2.0 * math.pi * P_jwkb

    D_eff = P_eff * math.exp(-G)
    if D_eff > 1.0:
        warnings.warn(
            f"escape probability {D_eff:.4g} exceeds 1; barrier too shallow "
            "for the quasi-classical treatment",
            ShallowBarrierWarning,
            stacklevel=2,
        )
        regime = REGIME_SHALLOW
    elif model.F < guard_field(atom):
        regime = REGIME_DEEP
    else:
        regime = REGIME_EXTRAPOLATED

    return BarrierSolution(
        method=model.variant.value + ("-simple" if simple_prefactor else ""),
        coord_in=c_in,
        coord_out=c_out,
        G=G,
        P_jwkb=P_jwkb,
        P_eff=P_eff,
        D_eff=D_eff,
        K_e=atom.nu_Z * D_eff,
        log_K_e=math.log(atom.nu_Z * P_eff) - G,
        regime=regime,
    )


def attempt_frequency_rate(atom: HydrogenicAtom, D: float) -> float:
    """Attempt-frequency rate estimate K_e = nu_Z * D for an externally
    supplied escape probability D.

    D > 1 is formally possible near barrier suppression and only draws a
    warning.
    """
    if D > 1.0:
        warnings.warn(
            f"escape probability {D:.4g} exceeds 1",
            ShallowBarrierWarning,
            stacklevel=2,
        )
    return atom.nu_Z * D
