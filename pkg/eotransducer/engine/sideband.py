"""
anti-Stokes / Stokes sideband efficiencies versus pump frequency.

both supermodes enhance the pump and both can extract a sideband, so each
factor is a density of states summed over a and b:

    E(w) = sum_m kappa_m_e / ((w_m - w)^2 + (kappa_m/2)^2)
    eta_+-(w_p) = g0^2 E(w_p) E(w_p +- w_mu) L_c(delta_c) P/(hbar w_p)
"""

import math
from collections import namedtuple
from enum import Enum

from eotransducer.params import CONSTANTS, PumpDrive, MicrowaveDrive
from eotransducer.hybridization import interaction_coefficients
from eotransducer.engine.efficiency import lorentzian
from eotransducer.units import ratio_to_db

SidebandRow = namedtuple("SidebandRow", ["omega_p", "eta_anti_stokes", "eta_stokes"])

# reference pump power for ratios; the sideband ratio does not depend on it
_REFERENCE_POWER = 1e-6


class PathwayWeighting(Enum):
    """
    EQUAL: every pump-mode/sideband-mode pathway counts once
    MIXING: intra-mode pathways weighted by the self modulation coefficients
            and inter-mode ones by the cross coefficient, relative to cross
    """

    EQUAL = 0
    MIXING = 1


def _pathway_weights(weighting, theta):
    if weighting == PathwayWeighting.EQUAL:
        return {("a", "a"): 1.0, ("a", "b"): 1.0, ("b", "a"): 1.0, ("b", "b"): 1.0}
    coefficients = interaction_coefficients(theta)
    return {
        ("a", "a"): (coefficients.self_a / coefficients.cross) ** 2,
        ("a", "b"): 1.0,
        ("b", "a"): 1.0,
        ("b", "b"): (coefficients.self_b / coefficients.cross) ** 2,
    }


def _mode_lorentzians(params, omega):
    return {
        "a": lorentzian(params.kappa_a_e, params.kappa_a, params.omega_a - omega),
        "b": lorentzian(params.kappa_b_e, params.kappa_b, params.omega_b - omega),
    }


def sideband_efficiencies(
    params, pump, mw, weighting=PathwayWeighting.EQUAL, theta=math.pi / 4
):
    """
    (eta_anti_stokes, eta_stokes) at one pump point
    """
    weights = _pathway_weights(weighting, theta)
    pump_dos = _mode_lorentzians(params, pump.omega_p)
    microwave = lorentzian(params.kappa_c_e, params.kappa_c, params.omega_c - mw.omega_mu)
    prefactor = (
        params.g0 ** 2
        * microwave
        * pump.power
        / (CONSTANTS.planck_reduced * pump.omega_p)
    )

    result = []
    for sign in (1, -1):
        sideband_dos = _mode_lorentzians(params, pump.omega_p + sign * mw.omega_mu)
        total = sum(
            weights[(m, n)] * pump_dos[m] * sideband_dos[n]
            for m in ("a", "b")
            for n in ("a", "b")
        )
        result += [prefactor * total]
    return tuple(result)


def sideband_spectrum(
    params, pump, omegas, mw, weighting=PathwayWeighting.EQUAL, theta=math.pi / 4
):
    """
    one SidebandRow per pump angular frequency in omegas; the pump power is
    taken from pump
    """
    rows = []
    for omega_p in omegas:
        drive = pump.replace(omega_p=omega_p)
        plus, minus = sideband_efficiencies(params, drive, mw, weighting, theta)
        rows += [SidebandRow(float(omega_p), plus, minus)]
    return rows


def selectivity(params, mw=None, weighting=PathwayWeighting.EQUAL, theta=math.pi / 4):
    """
    anti-Stokes over Stokes efficiency in dB with the pump on mode a and the
    microwave drive on resonance unless mw says otherwise
    """
    pump = PumpDrive(params.omega_a, _REFERENCE_POWER)
    mw = mw or MicrowaveDrive(params.omega_c, 0.0)
    plus, minus = sideband_efficiencies(params, pump, mw, weighting, theta)
    return ratio_to_db(plus / minus)
