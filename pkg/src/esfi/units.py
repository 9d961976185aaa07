"""Dimensions, quantities, physical constants and unit-system conversions.

Everything in this package is stored internally in the "field emission
customary" system based on the eV, the volt, the nanometre and the second.
SI, atomic units (e = m_e = hbar = 4*pi*eps0 = 1) and the Gaussian
charge/field convention are views obtained by conversion; the atomic-unit
scale factors are derived from the same CODATA fundamentals, never typed
in separately.

Dimension exponents are kept as exact rationals because half-integer
powers occur (e.g. the Schroedinger-equation constant sigma carries
energy^-1/2).

Fundamental constants are the 2010 CODATA values, frozen as literals so
that the seven-significant-figure reference values reproduce bit-exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import UnsupportedGaussianDimension

# 2010 CODATA fundamentals (SI).  Kept as strings so they can be parsed
# once into float64 and once into extended precision without double
# rounding.
CODATA_2010 = {
    "e_C": "1.602176565e-19",        # elementary charge [C]
    "m_e_kg": "9.10938291e-31",      # electron mass [kg]
    "hbar_Js": "1.054571726e-34",    # reduced Planck constant [J s]
    "eps0_F_m": "8.854187817e-12",   # electric constant [F m^-1]
    "eV_J": "1.602176565e-19",       # electronvolt [J]
}


class UnitSystem(enum.Enum):
    SI = "si"
    EVNM = "evnm"
    AU = "au"
    GAUSSIAN = "gaussian"


_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Dimension:
    """Physical dimension as rational exponents over (energy, voltage,
    length, time)."""

    energy: Fraction = _ZERO
    voltage: Fraction = _ZERO
    length: Fraction = _ZERO
    time: Fraction = _ZERO

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension(
            self.energy + other.energy,
            self.voltage + other.voltage,
            self.length + other.length,
            self.time + other.time,
        )

    def __truediv__(self, other: "Dimension") -> "Dimension":
        return self * other**-1

    def __pow__(self, exponent: Union[int, Fraction]) -> "Dimension":
        p = Fraction(exponent)
        return Dimension(
            self.energy * p, self.voltage * p, self.length * p, self.time * p
        )

    @property
    def is_dimensionless(self) -> bool:
        return self == DIMENSIONLESS

    def exponents(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.energy, self.voltage, self.length, self.time)

    def label(self, system: UnitSystem = UnitSystem.EVNM) -> str:
        """Human-readable unit string, e.g. 'eV^-3/2 V nm^-1'."""
        if system is UnitSystem.AU:
            return "" if self.is_dimensionless else "a.u."
        names = {
            UnitSystem.EVNM: ("eV", "V", "nm", "s"),
            UnitSystem.SI: ("J", "V", "m", "s"),
        }[system]
        parts = []
        for name, exp in zip(names, self.exponents()):
            if exp == 0:
                continue
            if exp == 1:
                parts.append(name)
            else:
                parts.append(f"{name}^{exp}")
        return " ".join(parts)


DIMENSIONLESS = Dimension()
ENERGY = Dimension(energy=Fraction(1))
VOLTAGE = Dimension(voltage=Fraction(1))
LENGTH = Dimension(length=Fraction(1))
TIME = Dimension(time=Fraction(1))
FREQUENCY = TIME**-1
FIELD = VOLTAGE / LENGTH
CHARGE = ENERGY / VOLTAGE
MASS = ENERGY * TIME**2 / LENGTH**2
ACTION = ENERGY * TIME
PERMITTIVITY = ENERGY * VOLTAGE**-2 * LENGTH**-1

# Gaussian-system quantities supported for conversion: the elementary
# charge e_s = e/(4 pi eps0)^1/2 and the electric field
# F_s = (4 pi eps0)^1/2 F.  Their dimensions in the canonical system:
GAUSSIAN_CHARGE = (ENERGY * LENGTH) ** _HALF
GAUSSIAN_FIELD = ENERGY**_HALF * LENGTH ** Fraction(-3, 2)


@dataclass(frozen=True)
class Quantity:
    """A finite numeric value with a physical dimension.

    The value is always stored in the canonical eV/V/nm/s representation.
    """

    value: float
    dim: Dimension = DIMENSIONLESS

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"quantity value must be finite, got {self.value}")

    def _coerce(self, other) -> "Quantity":
        if isinstance(other, Quantity):
            return other
        return Quantity(float(other), DIMENSIONLESS)

    def __mul__(self, other) -> "Quantity":
        o = self._coerce(other)
        return Quantity(self.value * o.value, self.dim * o.dim)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Quantity":
        o = self._coerce(other)
        return Quantity(self.value / o.value, self.dim / o.dim)

    def __rtruediv__(self, other) -> "Quantity":
        return self._coerce(other) / self

    def __add__(self, other) -> "Quantity":
        o = self._coerce(other)
        if o.dim != self.dim:
            raise ValueError(f"cannot add dimensions {self.dim} and {o.dim}")
        return Quantity(self.value + o.value, self.dim)

    def __sub__(self, other) -> "Quantity":
        o = self._coerce(other)
        if o.dim != self.dim:
            raise ValueError(f"cannot subtract dimensions {self.dim} and {o.dim}")
        return Quantity(self.value - o.value, self.dim)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.dim)

    def __pow__(self, exponent: Union[int, Fraction]) -> "Quantity":
        p = Fraction(exponent)
        return Quantity(self.value ** float(p), self.dim**p)

    def sqrt(self) -> "Quantity":
        return self**_HALF


@dataclass(frozen=True)
class Converted:
    """A quantity expressed in a target unit system."""

    value: float
    units: str
    system: UnitSystem


@dataclass(frozen=True)
class ConstantsRegistry:
    """Fundamental constants plus every derived constant used by the rate
    formulas, all as canonical (eV/V/nm/s) quantities.

    Immutable after construction; derived values are computed from the
    fundamentals, and the atomic-unit scale factors below are likewise
    derived (hartree = 2 I_H, length = a_0, time = hbar / hartree,
    voltage = hartree / e).
    """

    # fundamentals
    eV: Quantity
    e: Quantity
    m_e: Quantity
    hbar: Quantity
    eps0: Quantity
    four_pi_eps0: Quantity
    # hydrogen / universal derived constants
    B_H: Quantity           # Coulomb-law constant e^2/(4 pi eps0)
    a_0: Quantity           # Bohr radius
    nu_0: Quantity          # classical orbital frequency, H ground state
    omega_0: Quantity       # 2 pi nu_0
    I_H: Quantity           # H-atom ionization energy (free-space mass)
    sigma: Quantity         # (2 m_e)^1/2 / hbar
    b: Quantity             # second Fowler-Nordheim constant (4/3) sigma / e
    C_FI: Quantity          # field ionization constant 2^(9/2) m_e^1/2 / e hbar^2
    pi_hbar_C_FI: Quantity  # attempt-frequency-form constant
    # atomic-unit scale factors (canonical value of one atomic unit)
    hartree: float          # eV
    au_length: float        # nm
    au_time: float          # s
    au_voltage: float       # V
    au_field: float         # V/nm (derived, not a tabulated value)

    _TABLE_ORDER = (
        "eV", "e", "m_e", "hbar", "eps0", "four_pi_eps0",
        "B_H", "a_0", "nu_0", "omega_0", "I_H",
        "sigma", "b", "C_FI", "pi_hbar_C_FI",
    )

    # constants that are not used expressed in SI units in practice
    SI_NOT_USED = frozenset({"I_H", "sigma", "b", "C_FI", "pi_hbar_C_FI"})
    # fundamentals and closely related quantities carry 8 significant
    # figures; derived constants 7
    EIGHT_FIGURES = frozenset({"eV", "e", "m_e", "hbar", "eps0", "four_pi_eps0"})

    def constants(self) -> dict[str, Quantity]:
        return {name: getattr(self, name) for name in self._TABLE_ORDER}

    def sig_figs(self, name: str) -> int:
        return 8 if name in self.EIGHT_FIGURES else 7


def build_registry() -> ConstantsRegistry:
    """Derive every registry constant from the CODATA-2010 fundamentals."""
    eV_J = float(CODATA_2010["eV_J"])
    # canonical values: charge is exactly 1 eV/V by construction
    e = Quantity(1.0, CHARGE)
    m_e = Quantity(float(CODATA_2010["m_e_kg"]) / eV_J * 1e-18, MASS)
    hbar = Quantity(float(CODATA_2010["hbar_Js"]) / eV_J, ACTION)
    eps0 = Quantity(float(CODATA_2010["eps0_F_m"]) / eV_J * 1e-9, PERMITTIVITY)

    four_pi_eps0 = 4.0 * math.pi * eps0
    B_H = e * e / four_pi_eps0
    a_0 = four_pi_eps0 * hbar * hbar / (e * e * m_e)
    I_H = (e**4) * m_e / (32.0 * math.pi**2 * eps0 * eps0 * hbar * hbar)
    nu_0 = I_H / (math.pi * hbar)
    omega_0 = 2.0 * math.pi * nu_0
    sigma = (2.0 * m_e).sqrt() / hbar
    b = (4.0 / 3.0) * sigma / e
    C_FI = 2.0**4.5 * m_e.sqrt() / (e * hbar * hbar)
    pi_hbar_C_FI = math.pi * hbar * C_FI

    hartree = 2.0 * I_H.value
    au_voltage = hartree / e.value
    return ConstantsRegistry(
        eV=Quantity(1.0, ENERGY),
        e=e,
        m_e=m_e,
        hbar=hbar,
        eps0=eps0,
        four_pi_eps0=four_pi_eps0,
        B_H=B_H,
        a_0=a_0,
        nu_0=nu_0,
        omega_0=omega_0,
        I_H=I_H,
        sigma=sigma,
        b=b,
        C_FI=C_FI,
        pi_hbar_C_FI=pi_hbar_C_FI,
        hartree=hartree,
        au_length=a_0.value,
        au_time=hbar.value / hartree,
        au_voltage=au_voltage,
        au_field=au_voltage / a_0.value,
    )


REGISTRY = build_registry()


def _scale_factor(dim: Dimension, system: UnitSystem) -> float:
    """Canonical value of one target-system unit of the given dimension."""
    if system is UnitSystem.EVNM:
        return 1.0
    if system is UnitSystem.SI:
        # one joule in eV, one volt in V, one metre in nm, one second in s
        base = (1.0 / float(CODATA_2010["eV_J"]), 1.0, 1e9, 1.0)
    elif system is UnitSystem.AU:
        r = REGISTRY
        base = (r.hartree, r.au_voltage, r.au_length, r.au_time)
    else:
        raise ValueError(f"no scale factor for system {system}")
    factor = 1.0
    for unit, exp in zip(base, dim.exponents()):
        factor *= unit ** float(exp)
    return factor


def convert(q: Quantity, target: UnitSystem) -> Converted:
    """Express a canonical quantity in the target unit system.

    Gaussian conversion is supported only for the elementary-charge and
    electric-field dimensions, the two Gaussian-convention quantities the
    rate formulas ever meet.
    """
    if target is UnitSystem.GAUSSIAN:
        root = math.sqrt(REGISTRY.four_pi_eps0.value)
        if q.dim == CHARGE:
            return Converted(q.value / root, GAUSSIAN_CHARGE.label(), target)
        if q.dim == FIELD:
            return Converted(q.value * root, GAUSSIAN_FIELD.label(), target)
        raise UnsupportedGaussianDimension(
            "gaussian conversion is defined only for charge and field "
            f"dimensions, not {q.dim}"
        )
    return Converted(q.value / _scale_factor(q.dim, target), q.dim.label(target), target)


def to_canonical(value: float, dim: Dimension, system: UnitSystem) -> Quantity:
    """Inverse of :func:`convert`: build a canonical quantity from a value
    expressed in the given system."""
    if system is UnitSystem.GAUSSIAN:
        if dim == CHARGE:
            return gaussian_charge_to_isq(value)
        if dim == FIELD:
            return gaussian_field_to_isq(value)
        raise UnsupportedGaussianDimension(
            "gaussian values are accepted only for charge and field "
            f"dimensions, not {dim}"
        )
    return Quantity(value * _scale_factor(dim, system), dim)


def gaussian_field_to_isq(field_gaussian: float) -> Quantity:
    """ISQ electric field from its Gaussian counterpart: F = F_s / (4 pi eps0)^1/2."""
    if not math.isfinite(field_gaussian):
        raise ValueError("gaussian field must be finite")
    return Quantity(field_gaussian / math.sqrt(REGISTRY.four_pi_eps0.value), FIELD)


def gaussian_charge_to_isq(charge_gaussian: float) -> Quantity:
    """ISQ charge from its Gaussian counterpart: e = e_s * (4 pi eps0)^1/2."""
    if not math.isfinite(charge_gaussian):
        raise ValueError("gaussian charge must be finite")
    return Quantity(charge_gaussian * math.sqrt(REGISTRY.four_pi_eps0.value), CHARGE)


_PI_LD = np.longdouble("3.14159265358979323846264338327950288")


class ExtendedConstants:
    """The same fundamentals and derived constants in numpy extended
    precision (80-bit on x86-64).

    Rate-constant exponents reach ~10^4 in the deep-tunnelling regime, so
    a relative error of one float64 ulp in the exponent coefficient is
    already ~10^-12 of the rate itself.  The closed-form rate module
    therefore evaluates its coefficients in extended precision.
    """

    def __init__(self, system: UnitSystem = UnitSystem.EVNM):
        ld = np.longdouble
        if system is UnitSystem.AU:
            self.e = ld(1)
            self.m_e = ld(1)
            self.hbar = ld(1)
            self.four_pi_eps0 = ld(1)
        elif system is UnitSystem.EVNM:
            eV_J = ld(CODATA_2010["eV_J"])
            self.e = ld(1)
            self.m_e = ld(CODATA_2010["m_e_kg"]) / eV_J * ld("1e-18")
            self.hbar = ld(CODATA_2010["hbar_Js"]) / eV_J
            self.four_pi_eps0 = 4 * _PI_LD * ld(CODATA_2010["eps0_F_m"]) / eV_J * ld("1e-9")
        elif system is UnitSystem.SI:
            self.e = ld(CODATA_2010["e_C"])
            self.m_e = ld(CODATA_2010["m_e_kg"])
            self.hbar = ld(CODATA_2010["hbar_Js"])
            self.four_pi_eps0 = 4 * _PI_LD * ld(CODATA_2010["eps0_F_m"])
        else:
            raise ValueError(f"no extended constants for system {system}")
        self.pi = _PI_LD
        self.B_H = self.e**2 / self.four_pi_eps0
        self.I_H = self.e**4 * self.m_e / (2 * self.four_pi_eps0**2 * self.hbar**2)
        self.sigma = np.sqrt(2 * self.m_e) / self.hbar
        self.b = 4 * self.sigma / (3 * self.e)
        self.C_FI = np.sqrt(ld(512)) * np.sqrt(self.m_e) / (self.e * self.hbar**2)
        self.pi_hbar_C_FI = self.pi * self.hbar * self.C_FI


EXTENDED = {
    UnitSystem.EVNM: ExtendedConstants(UnitSystem.EVNM),
    UnitSystem.AU: ExtendedConstants(UnitSystem.AU),
    UnitSystem.SI: ExtendedConstants(UnitSystem.SI),
}
