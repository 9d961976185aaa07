"""Closed-form field-ionization rate constants and their decompositions.

The central result is the low-field rate constant for the ground state of
a hydrogenic atom in a uniform electrostatic field F,

    K_e = C_FI * I^(5/2) / F * exp(-b * I^(3/2) / F),

the ISQ form of the Landau & Lifshitz hydrogen result (Quantum Mechanics,
2nd ed., 1965), with C_FI the field ionization constant and b the second
Fowler-Nordheim constant.  The module also exposes the attempt-frequency
decomposition K_e = nu_Z * D_eff = omega_Z * T.

All exponents are evaluated in extended precision: they reach ~1e4 deep
in the tunnelling regime, where a single float64 rounding of the
coefficient already shifts the rate at the 1e-12 level.

Unless stated otherwise, fields are in V/nm and rates in s^-1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import Eta0OutsideWindow, NonPositiveField, ShallowTunnellingRegime
from .hydrogenic import HydrogenicAtom, make_atom
from .units import EXTENDED, FIELD, REGISTRY, UnitSystem, to_canonical

REGIME_DEEP = "deep"
REGIME_EXTRAPOLATED = "extrapolated"
REGIME_SHALLOW = "shallow"


@dataclass(frozen=True)
class RateResult:
    """A rate constant together with its algebraic decomposition.

    Satisfies K_e = pre_exponential * exp(-exponent) and
    K_e = nu_Z * D_eff.  K_e may underflow to zero for extreme exponents;
    use ``log_K_e`` when working across many orders of magnitude.
    """

    K_e: float               # rate constant [1/time in `unit_system`]
    pre_exponential: float   # [1/time in `unit_system`]
    exponent: float          # b I^(3/2)/F (dimensionless)
    D_eff: float             # effective escape probability
    T: Optional[float]       # barrier term, D_eff = 2 pi T
    log_K_e: float           # ln pre_exponential - exponent, no underflow
    method: str
    unit_system: str
    regime: str

    def as_dict(self) -> dict:
        return asdict(self)


def suppression_field_naive(atom: HydrogenicAtom) -> float:
    """Field at which the naive one-dimensional barrier I - eFz - B/z
    loses its two real zeros: F_bs = I^2/(4 e B).  [V/nm]"""
    return atom.I**2 / (4.0 * REGISTRY.e.value * atom.B)


def guard_field(atom: HydrogenicAtom) -> float:
    """Deep-tunnelling guard, half the naive barrier-suppression field.

    The closed forms hold in the low-field limit; gating at half the
    suppression field is a conservative, exactly computable cutoff.
    """
    return 0.5 * suppression_field_naive(atom)


def _check_field(atom: HydrogenicAtom, F: float, allow_shallow: bool) -> str:
    """Validate the field and classify the regime ('deep'/'extrapolated')."""
    if not math.isfinite(F) or F <= 0:
        raise NonPositiveField(f"field must be positive, got {F}")
    guard = guard_field(atom)
    if F < guard:
        return REGIME_DEEP
    if allow_shallow:
        return REGIME_EXTRAPOLATED
    raise ShallowTunnellingRegime(
        f"field {F:.6g} V/nm is at or above the deep-tunnelling guard "
        f"{guard:.6g} V/nm (barrier suppression at {2 * guard:.6g} V/nm)"
    )


def rate_ll(atom: HydrogenicAtom, F: float, *, allow_shallow: bool = False) -> RateResult:
    """Low-field rate constant K_e = C_FI I^(5/2)/F exp(-b I^(3/2)/F).

    Parameters
    ----------
    atom : hydrogenic atom (its ionization energy I drives the rate).
    F : field magnitude [V/nm], below the deep-tunnelling guard.
    allow_shallow : evaluate anyway above the guard; the result is
        labelled 'extrapolated'.
    """
    regime = _check_field(atom, F, allow_shallow)
    x = EXTENDED[UnitSystem.EVNM]
    ld = np.longdouble
    I, B, Fl = ld(atom.I), ld(atom.B), ld(F)

    exponent = x.b * I**ld(1.5) / Fl
    decay = np.exp(-exponent)
    pre = x.C_FI * I**ld(2.5) / Fl
    D_eff = x.pi_hbar_C_FI * I**ld(1.5) / Fl * decay
    T = (2 * I / B) * (8 * I / (x.e * Fl)) * decay
    return RateResult(
        K_e=float(pre * decay),
        pre_exponential=float(pre),
        exponent=float(exponent),
        D_eff=float(D_eff),
        T=float(T),
        log_K_e=float(np.log(pre) - exponent),
        method="ll",
        unit_system=UnitSystem.EVNM.value,
        regime=regime,
    )


def rate_z_form(
    Z: float,
    F: float,
    *,
    unit_system: UnitSystem = UnitSystem.EVNM,
    allow_shallow: bool = False,
) -> RateResult:
    """Charge-number form K_e = C_FI Z^5 I_H^(5/2) F^-1 exp(-b Z^3 I_H^(3/2)/F).

    Algebraically identical to :func:`rate_ll` with I = Z^2 I_H, but
    evaluated directly from the constants of the requested unit system
    (EVNM, AU or SI), with F given and K_e returned in that system.  In
    atomic units with Z = 1 this reduces to the textbook hydrogen result
    (4/F) exp(-2/(3F)).
    """
    atom = make_atom(Z)
    F_canonical = to_canonical(float(F), FIELD, unit_system).value
    regime = _check_field(atom, F_canonical, allow_shallow)

    x = EXTENDED[unit_system]
    ld = np.longdouble
    Zl, Fl = ld(Z), ld(F)
    I = Zl**2 * x.I_H
    B = Zl * x.B_H

    exponent = x.b * Zl**3 * x.I_H ** ld(1.5) / Fl
    decay = np.exp(-exponent)
    pre = x.C_FI * Zl**5 * x.I_H ** ld(2.5) / Fl
    D_eff = x.pi_hbar_C_FI * Zl**3 * x.I_H ** ld(1.5) / Fl * decay
    T = (2 * I / B) * (8 * I / (x.e * Fl)) * decay
    return RateResult(
        K_e=float(pre * decay),
        pre_exponential=float(pre),
        exponent=float(exponent),
        D_eff=float(D_eff),
        T=float(T),
        log_K_e=float(np.log(pre) - exponent),
        method="ll-z",
        unit_system=unit_system.value,
        regime=regime,
    )


def rate_gaussian_check(F: float, *, allow_shallow: bool = False) -> RateResult:
    """Hydrogen (Z = 1) rate evaluated directly from the fundamentals,

        K_e = {4 m_e^3 e^9 / (4 pi eps0)^5 hbar^7 F}
              * exp[-(2/3) m_e^2 e^5 / (4 pi eps0)^3 hbar^4 F],

    the ISQ transcription of the Gaussian-system Landau & Lifshitz
    formula.  Serves as an independent consistency route: its ratio to
    :func:`rate_ll` for hydrogen is 1 up to rounding.
    """
    atom = make_atom(1.0)
    regime = _check_field(atom, F, allow_shallow)
    x = EXTENDED[UnitSystem.EVNM]
    ld = np.longdouble
    Fl = ld(F)

    pre_coeff = 4 * x.m_e**3 * x.e**9 / (x.four_pi_eps0**5 * x.hbar**7)
    exp_coeff = (2 * x.m_e**2 * x.e**5) / (3 * x.four_pi_eps0**3 * x.hbar**4)
    exponent = exp_coeff / Fl
    decay = np.exp(-exponent)
    pre = pre_coeff / Fl
    I, B = ld(atom.I), ld(atom.B)
    return RateResult(
        K_e=float(pre * decay),
        pre_exponential=float(pre),
        exponent=float(exponent),
        D_eff=float(x.pi_hbar_C_FI * I ** ld(1.5) / Fl * decay),
        T=float((2 * I / B) * (8 * I / (x.e * Fl)) * decay),
        log_K_e=float(np.log(pre) - exponent),
        method="gaussian-check",
        unit_system=UnitSystem.EVNM.value,
        regime=regime,
    )


def effective_escape_probability(
    atom: HydrogenicAtom, F: float, *, allow_shallow: bool = False
) -> float:
    """D_eff = pi hbar C_FI * (I^(3/2)/F) * exp(-b I^(3/2)/F).

    This is K_e expressed per orbital attempt, K_e = nu_Z * D_eff.  It
    folds in three-dimensional geometry and is not a bare one-dimensional
    tunnelling probability.
    """
    return rate_ll(atom, F, allow_shallow=allow_shallow).D_eff


def barrier_term(atom: HydrogenicAtom, F: float, *, allow_shallow: bool = False) -> float:
    """Dimensionless barrier term T = (2I/B)(8I/eF) exp(-b I^(3/2)/F),
    satisfying K_e = omega_Z * T."""
    return rate_ll(atom, F, allow_shallow=allow_shallow).T


def geometric_prefactor() -> float:
    """Geometrical factor P_g relating D_eff = P_g * T; exactly 2 pi."""
    return 2.0 * math.pi


def _check_eta0_window(atom: HydrogenicAtom, F: float, eta0: float) -> None:
    # soft heuristic window: well clear of the orbit radius, well inside
    # the outer turning point 2I/(eF)
    outer = 2.0 * atom.I / (REGISTRY.e.value * F)
    if not (5.0 * atom.a_Z <= eta0 <= 0.2 * outer):
        warnings.warn(
            f"matching coordinate eta0={eta0:.6g} nm outside the soft window "
            f"[{5.0 * atom.a_Z:.6g}, {0.2 * outer:.6g}] nm",
            Eta0OutsideWindow,
            stacklevel=3,
        )


def barrier_integral_main_part(atom: HydrogenicAtom, F: float, eta0: float) -> float:
    """Leading (triangular-barrier) part of the analytic barrier integral
    from the matching coordinate eta0 to the outer turning point:

        b * I^(3/2)/F - sigma * I^(1/2) * eta0.
    """
    if not math.isfinite(F) or F <= 0:
        raise NonPositiveField(f"field must be positive, got {F}")
    _check_eta0_window(atom, F, eta0)
    r = REGISTRY
    return r.b.value * atom.I**1.5 / F - r.sigma.value * math.sqrt(atom.I) * eta0


def barrier_integral_log_part(atom: HydrogenicAtom, F: float, eta0: float) -> float:
    """Coulomb-tail (logarithmic) part of the analytic barrier integral,
    -ln{(8I/eF)/eta0}; the source of the F^-1 pre-exponential."""
    if not math.isfinite(F) or F <= 0:
        raise NonPositiveField(f"field must be positive, got {F}")
    _check_eta0_window(atom, F, eta0)
    return -math.log(8.0 * atom.I / (REGISTRY.e.value * F * eta0))


def barrier_term_from_parts(atom: HydrogenicAtom, F: float, eta0: float) -> float:
    """Assemble T from the split barrier integral and its matching-point
    prefactor,

        T = (2I/B) eta0 exp[-(2I/B) eta0] * exp[-(main + log)]

    every eta0 term cancels algebraically (sigma I^(1/2) = 2I/B for the
    default ionization energy), reproducing :func:`barrier_term`.
    """
    g = barrier_integral_main_part(atom, F, eta0) + barrier_integral_log_part(
        atom, F, eta0
    )
    two_i_over_b = 2.0 * atom.I / atom.B
    return two_i_over_b * eta0 * math.exp(-two_i_over_b * eta0) * math.exp(-g)
