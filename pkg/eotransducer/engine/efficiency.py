"""
closed-form steady-state conversion physics of the triply-resonant converter.

the pump sits near mode a, the microwave drive near mode c, and the converted
photons leave through mode b. All rates are rad/s.
"""

import logging
import math
from collections import namedtuple
from enum import Enum

from scipy.optimize import bisect

from eotransducer.errors import DomainError
from eotransducer.params import CONSTANTS, PumpDrive, MicrowaveDrive
from eotransducer.units import TWO_PI, ensure_positive, ratio_to_db

# the prefactor usually quoted with the critical-coupling formula; see
# efficiency_critical_coupling for the value the substitution actually gives
NOMINAL_CRITICAL_PREFACTOR = 8.0

LOW_COOPERATIVITY_LIMIT = 0.1

# resolution of the conversion bandwidth, Hz
BANDWIDTH_RESOLUTION = 1e3


class DetuningSet(namedtuple("DetuningSet", ["delta_a", "delta_b", "delta_c"])):
    """
    delta_a = w_a - w_p, delta_b = w_b - w_p - w_mu, delta_c = w_c - w_mu
    """

    __slots__ = ()

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0, 0.0)


ConversionResult = namedtuple(
    "ConversionResult",
    ["efficiency", "cooperativity", "big_g_squared", "n_pump_photons"],
)


class MicrowaveCoupling(Enum):
    """
    how the microwave resonator couples to its feedline
    """

    SINGLE_SIDED = 1
    DOUBLE_SIDED = 2


def detunings(params, pump, mw):
    return DetuningSet(
        params.omega_a - pump.omega_p,
        params.omega_b - pump.omega_p - mw.omega_mu,
        params.omega_c - mw.omega_mu,
    )


def lorentzian(kappa_e, kappa, delta):
    """
    kappa_e / (delta^2 + (kappa/2)^2): the intracavity enhancement of a
    single-side coupled mode
    """
    return kappa_e / (delta * delta + 0.25 * kappa * kappa)


def damping(delta, kappa):
    """
    D_m = -i delta_m - kappa_m/2
    """
    return complex(-0.5 * kappa, -delta)


def pump_flux(pump, params):
    """
    pump photons/s in the feed waveguide, referenced to w_a as in the
    closed-form efficiencies
    """
    return pump.power / (CONSTANTS.planck_reduced * params.omega_a)


def intracavity_pump_photons(pump, params, detuning=None):
    delta_a = params.omega_a - pump.omega_p if detuning is None else detuning.delta_a
    return lorentzian(params.kappa_a_e, params.kappa_a, delta_a) * pump_flux(pump, params)


def cooperativity(g0, n_a, kappa_b, kappa_c):
    ensure_positive(kappa_b, "kappa_b")
    ensure_positive(kappa_c, "kappa_c")
    return 4.0 * g0 * g0 * n_a / (kappa_b * kappa_c)


def efficiency_full(params, pump, mw, detuning=None):
    """
    on-chip efficiency including the back-conversion denominator:

        eta = G^2 / |1 + G^2/(D_b D_c)|^2 * kappa_b_e kappa_c_e / (|D_b|^2 |D_c|^2)

    with G^2 = g0^2 n_a
    """
    detuning = detuning or detunings(params, pump, mw)
    n_a = intracavity_pump_photons(pump, params, detuning)
    big_g_squared = params.g0 ** 2 * n_a

    d_b = damping(detuning.delta_b, params.kappa_b)
    d_c = damping(detuning.delta_c, params.kappa_c)
    backaction = abs(1 + big_g_squared / (d_b * d_c)) ** 2
    eta = (
        big_g_squared
        / backaction
        * params.kappa_b_e
        * params.kappa_c_e
        / (abs(d_b) ** 2 * abs(d_c) ** 2)
    )
    return ConversionResult(
        eta,
        cooperativity(params.g0, n_a, params.kappa_b, params.kappa_c),
        big_g_squared,
        n_a,
    )


def efficiency_low_c(params, pump, mw, detuning=None):
    """
    the low-cooperativity product of three Lorentzians, linear in pump power
    """
    detuning = detuning or detunings(params, pump, mw)
    return (
        params.g0 ** 2
        * lorentzian(params.kappa_a_e, params.kappa_a, detuning.delta_a)
        * lorentzian(params.kappa_b_e, params.kappa_b, detuning.delta_b)
        * lorentzian(params.kappa_c_e, params.kappa_c, detuning.delta_c)
        * pump_flux(pump, params)
    )


def efficiency_zero_detuning(cooperativity_value, params):
    """
    4C/(1+C)^2 times the extraction ceiling
    """
    c = cooperativity_value
    return 4 * c / (1 + c) ** 2 * params.extraction_ceiling


def efficiency_critical_coupling(
    g0,
    kappa_a_i,
    kappa_b_i,
    kappa_c_i,
    pump,
    omega_a=None,
    microwave_coupling=MicrowaveCoupling.DOUBLE_SIDED,
):
    """
    low-cooperativity efficiency with every detuning zero and every mode
    critically coupled.

    optical critical coupling is kappa_e = kappa_i, so each optical
    Lorentzian peak is 1/kappa_i. For the double-sided microwave mode critical
    coupling means kappa_c_e = kappa_c_i/2 (kappa_c = 2 kappa_c_i), which
    makes the microwave peak 1/(2 kappa_c_i); single-sided gives 1/kappa_c_i.
    The prefactor is therefore 1/2 (double-sided) or 1 (single-sided), and
    not NOMINAL_CRITICAL_PREFACTOR.
    """
    ensure_positive(kappa_a_i, "kappa_a_i")
    ensure_positive(kappa_b_i, "kappa_b_i")
    ensure_positive(kappa_c_i, "kappa_c_i")
    prefactor = 0.5 if microwave_coupling == MicrowaveCoupling.DOUBLE_SIDED else 1.0
    omega_a = pump.omega_p if omega_a is None else omega_a
    flux = pump.power / (CONSTANTS.planck_reduced * omega_a)
    return prefactor * g0 ** 2 / (kappa_a_i * kappa_b_i * kappa_c_i) * flux


def critically_coupled(params):
    """
    the same device with every extrinsic rate at its critical value
    """
    return params.replace(
        kappa_a_e=params.kappa_a_i,
        kappa_b_e=params.kappa_b_i,
        kappa_c_e=params.kappa_c_i / 2,
    )


def conversion_bandwidth(params, pump):
    """
    3-dB conversion bandwidth in Hz: full width at half maximum of eta versus
    the microwave detuning, with pump and optical detunings held at zero.
    """
    ensure_positive(pump.power, "pump_power")

    def eta(delta_c):
        return efficiency_low_c(params, pump, None, DetuningSet(0.0, 0.0, delta_c))

    peak = eta(0.0)
    if peak == 0:
        raise DomainError("conversion bandwidth is undefined when g0 = 0", field="g0")

    def above_half(delta_c):
        return eta(delta_c) / peak - 0.5

    upper = params.kappa_c
    while above_half(upper) > 0:
        upper *= 2
    half_width = bisect(above_half, 0.0, upper, xtol=TWO_PI * BANDWIDTH_RESOLUTION / 4)
    return 2 * half_width / TWO_PI


def cooperativity_from_efficiency(eta, params):
    """
    invert eta = 4C/(1+C)^2 * ceiling on the low-cooperativity branch (C <= 1)
    """
    ensure_positive(eta, "efficiency")
    x = eta / params.extraction_ceiling
    if x > 1:
        raise DomainError(
            f"efficiency {eta} is above the extraction ceiling {params.extraction_ceiling}",
            field="efficiency",
        )
    return x / (1 + math.sqrt(1 - x)) ** 2


def pair_generation_rate(c, kappa_b_e, kappa_c_e, kappa_b):
    """
    entangled pair rate (1/s) with the pump on mode b, R = 4C kappa_b_e kappa_c_e / kappa_b
    """
    if c >= LOW_COOPERATIVITY_LIMIT:
        logging.warning(
            f"cooperativity {c:.3g} is outside the low-cooperativity regime; "
            "the pair rate formula is not valid there"
        )
    return 4.0 * c * kappa_b_e * kappa_c_e / kappa_b


def resonant_pump_advantage(omega_mu, kappa_opt):
    """
    gain in intracavity pump photons from resonating the pump instead of
    detuning it by w_mu from a single optical mode
    """
    ensure_positive(omega_mu, "omega_mu")
    ensure_positive(kappa_opt, "kappa_opt")
    return 4.0 * omega_mu ** 2 / kappa_opt ** 2


def single_resonance_penalty(params, mw):
    """
    dB lost when the pump sits w_mu below mode a instead of on it: the ratio of
    intracavity pump photons n_a(0)/n_a(w_mu) = 1 + 4 w_mu^2/kappa_a^2
    """
    on = lorentzian(params.kappa_a_e, params.kappa_a, 0.0)
    off = lorentzian(params.kappa_a_e, params.kappa_a, mw.omega_mu)
    return ratio_to_db(on / off)


def operating_point(params, pump_power=1e-6, mw_power=0.0):
    """
    pump on mode a and microwave drive on mode c, the resonant operating point
    """
    return (
        PumpDrive(params.omega_a, pump_power),
        MicrowaveDrive(params.omega_c, mw_power),
    )
