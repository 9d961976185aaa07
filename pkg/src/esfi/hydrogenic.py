"""Hydrogenic atom (one electron, nuclear charge Z e) in zero field.

The charge number Z need not be an integer; fractional Z is a common
device for modelling effective one-electron systems.  The reduced-mass
correction is neglected throughout (the electron carries its free-space
mass), so the derived properties follow the textbook ground-state
relations exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import NegativeCoordinate, NonPositiveIonizationEnergy, NonPositiveZ
from .units import REGISTRY


@dataclass(frozen=True)
class HydrogenicAtom:
    """Derived zero-field properties of the ground state.

    When the ionization energy is overridden (near-surface work shifts the
    effective ionization energy), the Coulomb constant B, and with it the
    orbit radius, stay tied to Z; only I and the orbital frequency follow
    the override.  The default-I identities I*a_Z = B/2 and I = B^2 s^2/4
    then no longer hold, by construction.
    """

    Z: float        # charge number (dimensionless)
    I: float        # ionization energy [eV]
    B: float        # Coulomb constant Z e^2/(4 pi eps0) [eV nm]
    a_Z: float      # classical orbit radius [nm]
    nu_Z: float     # classical orbital frequency I/(pi hbar) [s^-1]
    omega_Z: float  # 2 pi nu_Z [rad/s]
    default_ionization: bool = True


def make_atom(Z: float, I_override: Optional[float] = None) -> HydrogenicAtom:
    """Build a hydrogenic atom from its charge number.

    Parameters
    ----------
    Z : positive real charge number.
    I_override : optional ionization energy in eV replacing the default
        Z^2 * I_H (the Coulomb constant stays Z-based).
    """
    if not (Z > 0) or not math.isfinite(Z):
        raise NonPositiveZ(f"charge number Z must be positive, got {Z}")
    if I_override is not None and (not math.isfinite(I_override) or I_override <= 0):
        raise NonPositiveIonizationEnergy(
            f"ionization energy must be positive, got {I_override}"
        )
    r = REGISTRY
    B = Z * r.B_H.value
    I = Z * Z * r.I_H.value if I_override is None else float(I_override)
    a_Z = 2.0 / (r.sigma.value**2 * B)   # equals a_0/Z
    nu_Z = I / (math.pi * r.hbar.value)
    return HydrogenicAtom(
        Z=float(Z),
        I=I,
        B=B,
        a_Z=a_Z,
        nu_Z=nu_Z,
        omega_Z=2.0 * math.pi * nu_Z,
        default_ionization=I_override is None,
    )


def parabolic_to_cartesian(eta: float, xi: float, phi: float) -> tuple[float, float, float]:
    """Map parabolic coordinates to Cartesian ones.

    The convention has the electron leaving the atom in the positive z
    and positive eta directions:

        x = (eta xi)^1/2 cos(phi),  y = (eta xi)^1/2 sin(phi),
        z = (eta - xi)/2.
    """
    if eta < 0 or xi < 0:
        raise NegativeCoordinate(
            f"parabolic coordinates must be non-negative, got eta={eta}, xi={xi}"
        )
    rho = math.sqrt(eta * xi)
    return (rho * math.cos(phi), rho * math.sin(phi), 0.5 * (eta - xi))


def cartesian_axis_to_parabolic(z: float) -> float:
    """On the symmetry axis (xi = 0) the parabolic coordinate is eta = 2 z."""
    if z < 0:
        raise NegativeCoordinate(f"on-axis z must be non-negative, got {z}")
    return 2.0 * z
