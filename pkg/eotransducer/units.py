"""
unit plumbing shared by every module. Rates are carried internally as angular
frequency (rad/s); everything a user reads or writes is ordinary frequency (Hz),
wavelength (m), W, dBm or dB.
"""

import math

import numpy as np

from eotransducer.errors import DomainError
from eotransducer.params import CONSTANTS

TWO_PI = 2 * np.pi


def ensure_positive(value, name):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite", field=name)
    if value <= 0.0:
        raise DomainError(f"{name} must be positive, got {value}", field=name)


def ensure_non_negative(value, name):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite", field=name)
    if value < 0.0:
        raise DomainError(f"{name} must be non-negative, got {value}", field=name)


def frequency_to_wavelength(frequency):
    ensure_positive(frequency, "frequency")
    return CONSTANTS.speed_of_light / frequency


def wavelength_to_frequency(wavelength):
    ensure_positive(wavelength, "wavelength")
    return CONSTANTS.speed_of_light / wavelength


def detuning_to_wavelength_span(center_frequency, delta_frequency):
    """
    first-order wavelength span of a frequency detuning, dl = l^2 df / c.
    The span carries the sign of delta_frequency.
    """
    wavelength = frequency_to_wavelength(center_frequency)
    return wavelength ** 2 * delta_frequency / CONSTANTS.speed_of_light


def wavelength_span_to_detuning(center_frequency, wavelength_span):
    wavelength = frequency_to_wavelength(center_frequency)
    return CONSTANTS.speed_of_light * wavelength_span / wavelength ** 2


def dbm_to_watt(dbm):
    if not math.isfinite(dbm):
        raise DomainError("dBm value must be finite", field="dbm")
    return 10 ** ((dbm - 30.0) / 10.0)


def watt_to_dbm(power):
    ensure_positive(power, "power")
    return 10.0 * math.log10(power) + 30.0


def db_to_ratio(db):
    if not math.isfinite(db):
        raise DomainError("dB value must be finite", field="db")
    return 10 ** (db / 10.0)


def ratio_to_db(ratio):
    ensure_positive(ratio, "ratio")
    return 10.0 * math.log10(ratio)


def apply_loss_db(power, loss_db):
    """
    attenuate a power by a (positive) loss in dB
    """
    return power * db_to_ratio(-loss_db)


def photon_flux(power, frequency):
    """
    photons per second carried by a power (W) at an ordinary frequency (Hz)
    """
    ensure_non_negative(power, "power")
    ensure_positive(frequency, "frequency")
    return power / (CONSTANTS.planck * frequency)
